use rayon::prelude::*;

use crate::error::Result;
use crate::exactlin::FieldSpec;
use crate::gradedring::{koszul_cohomology, Finiteness, GradedModulePresentation};
use crate::kronecker::IsoOutcome;
use crate::poly::{monomials, Poly};
use crate::records::Check;

use super::{homotopy_witness, mf_iso_check, mf_stabilize, mf_stable_hom, MatrixFactorization, StableHomSpace, NAMES};

#[derive(Clone, Debug)]
pub struct RankOneScan {
    pub candidates: usize,
    pub valid: usize,
    pub contractible: usize,
    /// One representative per stable isomorphism class.
    pub classes: Vec<MatrixFactorization>,
    pub undecided: usize,
}

/// All rank-one factorizations `(c U^a V^b, c' U^a' V^b')` of `UV` with entry
/// degrees at most `max_degree`, sorted into stable isomorphism classes.
pub fn rank_one_scan(field: FieldSpec, max_degree: u32) -> Result<RankOneScan> {
    let units: Vec<_> = match field {
        FieldSpec::Prime(p) => (1..p as i64).map(|c| field.from_i64(c)).collect(),
        FieldSpec::Rationals => [1, -1, 2, -2].iter().map(|&c| field.from_i64(c)).collect(),
    };
    let entries: Vec<Poly> = (0..=max_degree)
        .flat_map(|d| monomials(&[1, 1], d))
        .flat_map(|m| units.iter().map(move |c| Poly::monomial(field, m.clone(), c.clone())))
        .collect();
    let pairs: Vec<(usize, usize)> =
        (0..entries.len()).flat_map(|i| (0..entries.len()).map(move |j| (i, j))).collect();
    let valid: Vec<MatrixFactorization> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let x = MatrixFactorization::rank_one(field, &entries[i], &entries[j]).ok()?;
            x.is_valid().then_some(x)
        })
        .collect();
    let mut contractible = 0;
    let mut classes: Vec<MatrixFactorization> = Vec::new();
    let mut undecided = 0;
    for x in &valid {
        if StableHomSpace::new(x, x)?.dim() == 0 {
            contractible += 1;
            continue;
        }
        let mut placed = false;
        for c in &classes {
            match mf_iso_check(x, c)? {
                IsoOutcome::Isomorphic => {
                    placed = true;
                    break;
                }
                IsoOutcome::Undecided => undecided += 1,
                IsoOutcome::NotIsomorphic => {}
            }
        }
        if !placed {
            classes.push(x.clone());
        }
    }
    Ok(RankOneScan { candidates: pairs.len(), valid: valid.len(), contractible, classes, undecided })
}

fn iso_check(name: &str, x: &MatrixFactorization, y: &MatrixFactorization, want: IsoOutcome) -> Result<Check> {
    let got = mf_iso_check(x, y)?;
    Ok(Check::new(name, got == want, got.to_string()))
}

/// The checklist for the node `UV`: validity, `Σ`, stable Homs, the
/// stabilization of `k`, the rank-one classification over `F_5` and the Koszul
/// complex of `U - V` on `S`.
pub fn node_suite(field: FieldSpec) -> Result<Vec<Check>> {
    let p = MatrixFactorization::p(field);
    let q = MatrixFactorization::q(field);
    let mut checks = vec![
        Check::new("valid(U,V)", q.is_valid(), q.to_string()),
        Check::new("valid(V,U)", p.is_valid(), p.to_string()),
    ];
    let bad = MatrixFactorization::parse_rank_one(field, "U", "U")?;
    checks.push(Check::new("invalid(U,U)", !bad.is_valid(), bad.validate().err().map_or(String::new(), |e| e.to_string())));
    let sp = p.shift();
    checks.push(Check::new("shift(p)=q", sp.phi() == q.phi() && sp.psi() == q.psi(), sp.to_string()));
    checks.push(iso_check("shift(p)~q", &sp, &q, IsoOutcome::Isomorphic)?);
    checks.push(iso_check("shift^2(p)~p", &sp.shift(), &p, IsoOutcome::Isomorphic)?);
    checks.push(iso_check("p!~q", &p, &q, IsoOutcome::NotIsomorphic)?);

    let end = mf_stable_hom(&p, &p, 4)?;
    checks.push(Check::new("End(p)=k", end.total == 1 && end.certified, format!("{:?}", end.degrees)));
    let u = vec![vec![Poly::var(field, 2, 0)]];
    let w = homotopy_witness(&p, &p, &u, 1)?;
    let detail = match &w {
        Some((rho, sigma)) => format!("rho={} sigma={}", rho[0][0].display(&NAMES), sigma[0][0].display(&NAMES)),
        None => "no homotopy".into(),
    };
    checks.push(Check::new("U*id(p)~0", w.is_some(), detail));
    let hpq = mf_stable_hom(&p, &q, 4)?;
    let deg0 = hpq.degrees.iter().find(|d| d.0 == 0).map_or(0, |d| d.1);
    checks.push(Check::new("Hom(p,q)_0=0", deg0 == 0, format!("{:?}", hpq.degrees)));

    let k = GradedModulePresentation::quotient(field, vec![1, 1], &[Poly::var(field, 2, 0), Poly::var(field, 2, 1)])?;
    let st = mf_stabilize(&k, 8)?;
    checks.push(iso_check("stab(k)~p+shift(p)", &st.mf, &p.direct_sum(&sp), IsoOutcome::Isomorphic)?);

    let scan = rank_one_scan(FieldSpec::Prime(5), 3)?;
    let detail = format!(
        "{} valid, {} contractible, classes [{}]",
        scan.valid,
        scan.contractible,
        scan.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("; ")
    );
    checks.push(Check::new("rank-one classes=2", scan.classes.len() == 2 && scan.undecided == 0, detail));

    let s = GradedModulePresentation::quotient(field, vec![1, 1], &[super::node(field)])?;
    let uv = Poly::parse("U - V", &NAMES, field)?;
    let kz = koszul_cohomology(&[uv], &s, 6)?;
    let ok = matches!(kz.finiteness, Finiteness::Finite { .. });
    checks.push(Check::new("K(U-V;S) finite", ok, format!("{:?} H0={} H1={}", kz.finiteness, kz.total(0), kz.total(1))));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_over_f5() {
        let s = rank_one_scan(FieldSpec::Prime(5), 3).unwrap();
        assert_eq!(s.valid, 16);
        assert_eq!(s.contractible, 8);
        assert_eq!(s.classes.len(), 2);
    }
}
