use crate::beilinson::{cohomology, example11_model, example12_model, ext_table, koszul_slice_check, sigma, sigma_square_check, SheafDescriptor};
use crate::error::{Error, Result};
use crate::gradedring::{
    gorenstein_parameter, hilbert_polynomial_ring, koszul_cohomology, read_presentation, read_series, veronese, Finiteness,
    HilbertSeries,
};
use crate::kronecker::BilinearForm;
use crate::mfnode::{default_top, mf_iso_check, mf_stabilize, mf_stable_hom, node_suite, read_mf, MatrixFactorization};
use crate::orbitcat::{approximation_triangle, cluster_tilting_scan, functor_orbit_hom, rigidity_check, serre_symmetry_check, OrbitObject};
use crate::records::{status, Check, Record};
use crate::suite::{determinism, example_criteria, render, run_many, SuiteConfig};

use super::objects::{parse_chain, parse_object, read_file};
use super::{Command, FunctorArg, Report, RunConfig, SeriesArgs};

pub fn run(cmd: &Command, cfg: &RunConfig) -> Result<Report> {
    match cmd {
        Command::OrbitHom { x, y, degree, functor } => orbit_hom(cfg, x, y, *degree, *functor),
        Command::RigidCheck { x, degrees } => rigid_check(cfg, x, degrees),
        Command::CyCheck { x, y, cy } => cy_check(cfg, x, y, *cy),
        Command::CtScan { max_index, candidate, degrees, functor } => ct_scan(cfg, *max_index, candidate, degrees, *functor),
        Command::Triangle { x } => triangle(cfg, x),
        Command::Hilbert(a) => hilbert(cfg, a),
        Command::Veronese(a) => veronese_cmd(a),
        Command::Gorenstein(a) => gorenstein(a),
        Command::Koszul { module, seq } => koszul(cfg, module, seq),
        Command::CohTable { space, sheaves } => coh_table(*space, sheaves),
        Command::KoszulSlice => koszul_slice(cfg),
        Command::Sigma { x } => sigma_cmd(cfg, x),
        Command::Example11 { max_index, pairs } => {
            let r = example11_model(*max_index, cfg.field, *pairs)?;
            Ok(checks_report(&r.checks))
        }
        Command::Example12 { samples } => {
            let r = example12_model(cfg.field, *samples, cfg.seed)?;
            Ok(checks_report(&r.checks))
        }
        Command::MfValidate { files } => mf_validate(files),
        Command::MfHom { x, y } => mf_hom(cfg, x, y),
        Command::MfIso { x, y } => mf_iso(x, y),
        Command::MfStabilize { module, steps } => stabilize(module, *steps),
        Command::NodeSuite => Ok(checks_report(&node_suite(cfg.field)?)),
        Command::Accept { example, criterion } => accept(cfg, example.as_deref(), criterion),
    }
}

fn checks_report(checks: &[Check]) -> Report {
    Report::new(checks.iter().map(|c| c.record("check")).collect(), checks.iter().all(|c| c.passed))
}

fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn object(cfg: &RunConfig, pi: &BilinearForm, text: &str) -> Result<OrbitObject> {
    Ok(OrbitObject::new(parse_object(text, pi.n(), cfg.field)?))
}

fn orbit_hom(cfg: &RunConfig, x: &str, y: &str, degree: i64, functor: FunctorArg) -> Result<Report> {
    let pi = cfg.form()?;
    let (xo, yo) = (object(cfg, &pi, x)?, object(cfg, &pi, y)?);
    let g = functor.functor();
    let r = functor_orbit_hom(g, &xo, &yo, degree, &pi, cfg.window)?;
    let parts: Vec<String> = r.contributions.iter().map(|(i, d)| format!("{i}:{d}")).collect();
    let rec = Record::new("hom")
        .field("x", x)
        .field("y", y)
        .field("functor", g)
        .field("degree", degree)
        .field("dim", r.total)
        .field("window", format!("{}..{}", r.window.0, r.window.1))
        .field("contributions", parts.join(" "));
    Ok(Report::new(vec![rec], true))
}

fn rigid_check(cfg: &RunConfig, x: &str, degrees: &[i64]) -> Result<Report> {
    let pi = cfg.form()?;
    let r = rigidity_check(&object(cfg, &pi, x)?, degrees, &pi)?;
    let mut records: Vec<Record> = r.dims.iter().map(|(j, d)| Record::new("ext").field("degree", j).field("dim", d)).collect();
    records.push(Record::new("rigid").field("x", x).field("rigid", yes_no(r.rigid)));
    Ok(Report::new(records, r.rigid))
}

fn cy_check(cfg: &RunConfig, x: &str, y: &str, cy: i64) -> Result<Report> {
    let pi = cfg.form()?;
    let r = serre_symmetry_check(&object(cfg, &pi, x)?, &object(cfg, &pi, y)?, cy, &pi)?;
    let rec = Record::new("cy")
        .field("x", x)
        .field("y", y)
        .field("cy", cy)
        .field("hom-xy", r.lhs)
        .field(&format!("hom-yx[{cy}]"), r.rhs)
        .field("status", status(r.holds));
    Ok(Report::new(vec![rec], r.holds))
}

fn ct_scan(cfg: &RunConfig, max_index: usize, candidate: &[String], degrees: &[i64], functor: FunctorArg) -> Result<Report> {
    let n = match cfg.n {
        Some(n) => n,
        None => cfg.form()?.n(),
    };
    let cand = candidate.iter().map(|c| parse_chain(c)).collect::<Result<Vec<_>>>()?;
    let r = cluster_tilting_scan(n, max_index, functor.functor(), &cand, degrees)?;
    let names: Vec<String> = cand.iter().map(|c| c.to_string()).collect();
    let mut records = vec![Record::new("scan")
        .field("n", n)
        .field("max-index", max_index)
        .field("functor", r.functor)
        .field("candidate", names.join("+"))
        .field("degrees", format!("{degrees:?}"))
        .field("rigid", yes_no(r.rigid))
        .field("checked", r.checked)
        .field("violations", r.violations.len())
        .field("status", status(r.passed()))];
    records.extend(r.violations.iter().map(|v| Record::new("violation").field("object", v.object).field("reason", &v.reason)));
    Ok(Report::new(records, r.passed()))
}

fn triangle(cfg: &RunConfig, x: &str) -> Result<Report> {
    let pi = cfg.form()?;
    let r = approximation_triangle(&object(cfg, &pi, x)?, &pi)?;
    let mut records = vec![Record::new("triangle")
        .field("x", x)
        .field("a", r.a)
        .field("b", r.b)
        .field("c", r.c)
        .field("shifted-t", r.shifted_t)
        .field("shape", format!("T^{} -> T^{} + T[-1]^{} -> {x}[1]", r.a, r.b, r.c))];
    records.extend(r.pieces.iter().map(|p| Record::new("piece").field("module", p.module.dim()).field("kernel", p.kernel.dim())));
    Ok(Report::new(records, true))
}

/// The series named by `--vars` or `--series`, its label and its dimension.
fn series(a: &SeriesArgs) -> Result<(HilbertSeries, String, usize)> {
    let (h, label) = match (a.vars, &a.series) {
        (Some(v), None) => (hilbert_polynomial_ring(v)?, format!("k[{v} vars]")),
        (None, Some(path)) => (read_series(&read_file(path)?, path)?, path.clone()),
        _ => return Err(Error::InvalidArgument("give exactly one of --vars and --series".into())),
    };
    let dim = a.dim.unwrap_or(h.denominator().len());
    match a.veronese {
        Some(m) => Ok((veronese(&h, m)?, format!("{label}^({m})"), dim)),
        None => Ok((h, label, dim)),
    }
}

fn hilbert(cfg: &RunConfig, a: &SeriesArgs) -> Result<Report> {
    let (h, label, dim) = series(a)?;
    let top = cfg.degree_bound.unwrap_or(10);
    let mut records = vec![Record::new("series").field("ring", &label).field("dim", dim).field("series", &h)];
    for (d, c) in h.coefficients(top as usize + 1)?.iter().enumerate() {
        records.push(Record::new("coefficient").field("degree", d).field("dim", c));
    }
    Ok(Report::new(records, true))
}

fn veronese_cmd(a: &SeriesArgs) -> Result<Report> {
    if a.veronese.is_none() {
        return Err(Error::InvalidArgument("--veronese is required".into()));
    }
    let (h, label, _) = series(a)?;
    let num: Vec<String> = h.numerator().iter().map(|c| c.to_string()).collect();
    let rec = Record::new("veronese").field("ring", &label).field("numerator", num.join(" ")).field("series", &h);
    Ok(Report::new(vec![rec], true))
}

fn gorenstein(a: &SeriesArgs) -> Result<Report> {
    let (h, label, dim) = series(a)?;
    let rec = Record::new("gorenstein").field("ring", &label).field("dim", dim).field("series", &h);
    Ok(match gorenstein_parameter(&h, dim) {
        Ok(p) => Report::new(vec![rec.field("a", p)], true),
        Err(Error::NotGorenstein(why)) => Report::new(vec![rec.field("a", "none").field("reason", why)], false),
        Err(e) => return Err(e),
    })
}

fn koszul(cfg: &RunConfig, module: &str, seq: &str) -> Result<Report> {
    let m = read_presentation(&read_file(module)?, module)?;
    let polys = seq.split(';').map(|p| m.poly(p)).collect::<Result<Vec<_>>>()?;
    let r = koszul_cohomology(&polys, &m.presentation, cfg.degree_bound.unwrap_or(10))?;
    let fin = match &r.finiteness {
        Finiteness::Finite { witness } => format!("finite witness={witness}"),
        Finiteness::Infinite { point } => {
            let p: Vec<String> = point.iter().map(|x| x.to_string()).collect();
            format!("infinite point=({})", p.join(","))
        }
        Finiteness::Undecided => "undecided".into(),
    };
    let mut records = vec![Record::new("koszul")
        .field("module", module)
        .field("seq", seq)
        .field("degrees", format!("{}..{}", r.first, r.last))
        .field("finite-length", fin)];
    for i in 0..=r.length {
        for t in r.first..=r.last {
            let d = r.h(i, t);
            if d > 0 {
                records.push(Record::new("h").field("i", i).field("degree", t).field("dim", d));
            }
        }
    }
    Ok(Report::new(records, true))
}

fn coh_table(space: usize, sheaves: &[String]) -> Result<Report> {
    let parsed = sheaves.iter().map(|s| SheafDescriptor::parse(s, space)).collect::<Result<Vec<_>>>()?;
    let mut records = Vec::new();
    match parsed.as_slice() {
        [e] => {
            let t = cohomology(e)?;
            records.extend(t.h.iter().enumerate().map(|(i, d)| Record::new("h").field("sheaf", e).field("i", i).field("dim", d)));
            records.push(Record::new("euler").field("sheaf", e).field("chi", t.euler_characteristic()));
        }
        [e, f] => {
            let t = ext_table(e, f)?;
            records.extend(
                t.h.iter().enumerate().map(|(i, d)| Record::new("ext").field("from", e).field("to", f).field("i", i).field("dim", d)),
            );
        }
        _ => return Err(Error::InvalidArgument("give one or two sheaves".into())),
    }
    Ok(Report::new(records, true))
}

fn koszul_slice(cfg: &RunConfig) -> Result<Report> {
    let r = koszul_slice_check(cfg.field)?;
    let rec = Record::new("slice")
        .field("injective", yes_no(r.injective))
        .field("cokernel", r.cokernel.dim())
        .field("expected", r.expected.dim())
        .field("iso", r.iso);
    Ok(Report::new(vec![rec], r.injective && r.iso.is_iso()))
}

fn sigma_cmd(cfg: &RunConfig, x: &str) -> Result<Report> {
    let pi = cfg.form()?;
    let xo = object(cfg, &pi, x)?;
    let image = sigma(&xo, &pi)?;
    let sq = sigma_square_check(&xo, &pi)?;
    let rec = Record::new("sigma").field("x", x).field("image", &image).field("sigma-square", sq);
    Ok(Report::new(vec![rec], sq.is_iso()))
}

fn mf_file(path: &str) -> Result<MatrixFactorization> {
    read_mf(&read_file(path)?, path)
}

fn mf_validate(files: &[String]) -> Result<Report> {
    let mut records = Vec::new();
    let mut ok = true;
    for path in files {
        let m = mf_file(path)?;
        let v = m.validate();
        ok &= v.is_ok();
        let rec = Record::new("mf").field("file", path).field("rank", m.rank()).field("status", status(v.is_ok()));
        records.push(match v {
            Ok(()) => rec.field("detail", "phi psi = psi phi = UV"),
            Err(e) => rec.field("detail", e),
        });
    }
    Ok(Report::new(records, ok))
}

fn mf_hom(cfg: &RunConfig, x: &str, y: &str) -> Result<Report> {
    let (mx, my) = (mf_file(x)?, mf_file(y)?);
    let bound = match cfg.degree_bound.or_else(|| default_top(&mx, &my)) {
        Some(b) => b,
        None => return Ok(Report::new(vec![Record::new("stable-hom").field("x", x).field("y", y).field("total", 0)], true)),
    };
    let r = mf_stable_hom(&mx, &my, bound)?;
    let mut records: Vec<Record> = r.degrees.iter().map(|(t, d)| Record::new("degree").field("t", t).field("dim", d)).collect();
    records.push(
        Record::new("stable-hom")
            .field("x", x)
            .field("y", y)
            .field("bound", bound)
            .field("total", r.total)
            .field("certified", yes_no(r.certified)),
    );
    Ok(Report::new(records, true))
}

fn mf_iso(x: &str, y: &str) -> Result<Report> {
    let o = mf_iso_check(&mf_file(x)?, &mf_file(y)?)?;
    Ok(Report::new(vec![Record::new("stable-iso").field("x", x).field("y", y).field("outcome", o)], o.is_iso()))
}

fn stabilize(module: &str, steps: usize) -> Result<Report> {
    let m = read_presentation(&read_file(module)?, module)?;
    let s = mf_stabilize(&m.presentation, steps)?;
    let mut records: Vec<Record> =
        s.betti.iter().enumerate().map(|(k, g)| Record::new("free").field("k", k).field("generators", format!("{g:?}"))).collect();
    records.push(Record::new("stabilization").field("module", module).field("step", s.step).field("rank", s.mf.rank()).field("mf", &s.mf));
    Ok(Report::new(records, true))
}

fn accept(cfg: &RunConfig, example: Option<&str>, criterion: &[usize]) -> Result<Report> {
    let ids: Vec<usize> = match (example, criterion) {
        (Some(e), _) => example_criteria(e).ok_or_else(|| Error::InvalidArgument(format!("unknown example `{e}` (1.1, 1.2, A.6)")))?,
        (None, []) => (1..=13).collect(),
        (None, c) => {
            if let Some(bad) = c.iter().find(|&&i| !(1..=13).contains(&i)) {
                return Err(Error::InvalidArgument(format!("no criterion {bad}")));
            }
            c.to_vec()
        }
    };
    let sc = SuiteConfig { field: cfg.field, seed: cfg.seed };
    let mut criteria = run_many(&ids, &sc);
    if ids.contains(&13) {
        let basis: Vec<usize> = if ids.iter().all(|&i| i == 13) { (1..=12).collect() } else { ids.clone() };
        let first = if basis == ids { render(&criteria) } else { render(&run_many(&basis, &sc)) };
        criteria.push(determinism(&first, &render(&run_many(&basis, &sc))));
    }
    let passed = criteria.iter().filter(|c| c.passed()).count();
    let mut records: Vec<Record> = criteria.iter().flat_map(|c| c.records()).collect();
    records.push(Record::new("summary").field("criteria", criteria.len()).field("passed", passed).field("failed", criteria.len() - passed));
    Ok(Report::new(records, passed == criteria.len()))
}
