//! The representation side of the tilting correspondences: `P^2` against
//! `Q_3` and `P^3` against `Q_6` with `W = ∧²V`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derivedh::{apply_a_power, apply_f, formal_iso_check, FormalObject};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix};
use crate::kronecker::{cokernel_rep, hom_basis, iso_check, tau, BilinearForm, IsoOutcome, KroneckerRep, RepMorphism};
use crate::poly::monomials;
use crate::orbitcat::{functor_orbit_hom, scan_family, ChainModel, OrbitFunctor, OrbitObject};

use super::coh::{hom_dim, SheafDescriptor, SheafKind};
use crate::records::Check;

/// Lexicographic basis `e12, e13, e14, e23, e24, e34` of `∧²V`, 0-based.
pub fn wedge_basis() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            v.push((i, j));
        }
    }
    v
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 { 1 } else { -1 }
}

/// `(e_i ∧ e_j) ∧ (e_k ∧ e_l) = pairing · e1 ∧ e2 ∧ e3 ∧ e4`.
pub fn wedge_pairing(a: (usize, usize), b: (usize, usize)) -> i64 {
    let p = [a.0, a.1, b.0, b.1];
    let mut seen = [false; 4];
    for &x in &p {
        if x >= 4 || seen[x] {
            return 0;
        }
        seen[x] = true;
    }
    permutation_sign(&p)
}

/// The pairing `∧²V × ∧²V -> ∧⁴V ≅ k` on the basis of [`wedge_basis`].
pub fn wedge_form(field: FieldSpec) -> BilinearForm {
    let basis = wedge_basis();
    let m = Matrix::from_fn(field, 6, 6, |r, c| field.from_i64(wedge_pairing(basis[r], basis[c])));
    BilinearForm::new(m).expect("the wedge pairing is perfect")
}

#[derive(Clone, Debug)]
pub struct SliceReport {
    pub morphism: RepMorphism,
    pub injective: bool,
    pub cokernel: KroneckerRep,
    pub expected: KroneckerRep,
    pub iso: IsoOutcome,
}

/// `P_3 = a^{-2} P_1` for the form `pi`.
pub fn third_preprojective(pi: &BilinearForm) -> Result<KroneckerRep> {
    let p1 = FormalObject::single(KroneckerRep::projective(1, pi.n(), pi.field())?, 0);
    let x = apply_a_power(&p1, -2, pi)?;
    match x.shifts().as_slice() {
        [0] => Ok(x.component(0)),
        _ => Err(Error::ContractViolation(format!("a^-2 P1 = {x} is not a module"))),
    }
}

/// The map `∧⁴V ⊗ P_1 -> ∧²V ⊗ P_2` given by the wedge pairing, its cokernel,
/// and a comparison of the cokernel with `P_3`.
pub fn koszul_slice_check(field: FieldSpec) -> Result<SliceReport> {
    let pi = wedge_form(field);
    let n = 6;
    let source = KroneckerRep::projective(1, n, field)?;
    let target = KroneckerRep::projective(2, n, field)?.power(n);
    // copy a of P_2 receives the vector (π^{-1})_{a, .} of Hom(P_1, P_2) = W
    let inv = pi.inverse();
    let f1 = Matrix::from_fn(field, n * n, 1, |r, _| inv.get(r / n, r % n).clone());
    let morphism = RepMorphism { f1, f2: Matrix::zeros(field, n, 0) };
    if !morphism.is_morphism(&source, &target) {
        return Err(Error::ContractViolation("slice map is not a morphism".into()));
    }
    let injective = morphism.f1.rank() == source.d1() && morphism.f2.rank() == source.d2();
    let (cokernel, _) = cokernel_rep(&target, &morphism);
    let expected = third_preprojective(&pi)?;
    let iso = iso_check(&cokernel, &expected)?;
    if !injective || !iso.is_iso() {
        return Err(Error::ContractViolation(format!(
            "Koszul slice: injective={injective}, cokernel {} vs P3 {}: {iso}",
            cokernel.dim(),
            expected.dim()
        )));
    }
    Ok(SliceReport { morphism, injective, cokernel, expected, iso })
}

/// `σ(x) = a^{-1}(x)[1]`.
pub fn sigma(x: &OrbitObject, pi: &BilinearForm) -> Result<OrbitObject> {
    Ok(OrbitObject::new(apply_a_power(&x.representative, -1, pi)?.shifted(1)))
}

/// `τ` applied summand by summand.
pub fn tau_formal(x: &FormalObject) -> FormalObject {
    x.summands().iter().fold(FormalObject::zero(x.n(), x.field()), |acc, s| {
        acc.direct_sum(&tau(&s.rep).shifted(s.shift))
    })
}

/// `τ^{-1} = D τ D`, with `D` the duality that swaps the two vertices; `D`
/// is contravariant, so it negates shifts.
pub fn tau_inverse_formal(x: &FormalObject) -> FormalObject {
    let mut out = FormalObject::zero(x.n(), x.field());
    for s in x.summands() {
        for t in tau(&s.rep.dual()).summands() {
            out.push(t.rep.dual(), s.shift - t.shift);
        }
    }
    out
}

/// Projectives, injectives and small random modules, in various shifts.
pub fn sample_objects(pi: &BilinearForm, count: usize, seed: u64) -> Result<Vec<OrbitObject>> {
    let (n, field) = (pi.n(), pi.field());
    let mut out = vec![
        FormalObject::single(KroneckerRep::projective(1, n, field)?, 0),
        FormalObject::single(KroneckerRep::projective(2, n, field)?, 1),
        FormalObject::single(KroneckerRep::injective(1, n, field)?, 1),
        FormalObject::single(KroneckerRep::injective(2, n, field)?, -1),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        let (d1, d2) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let rep = KroneckerRep::random(n, field, d1, d2, 2, &mut rng);
        if !rep.is_zero() {
            out.push(FormalObject::single(rep, rng.gen_range(-2..=2)));
        }
    }
    out.truncate(count);
    Ok(out.into_iter().map(OrbitObject::new).collect())
}

fn outcome_check(name: &str, o: IsoOutcome) -> Check {
    Check::new(name, o.is_iso(), o.to_string())
}

/// `σ² ≅ τ^{-1}[2]`, tested after applying `σ^{-1}` to both sides, i.e. as
/// `a^{-1} x ≅ a τ^{-1} x`, which keeps both sides small.
pub fn sigma_square_check(x: &OrbitObject, pi: &BilinearForm) -> Result<IsoOutcome> {
    let lhs = apply_a_power(&x.representative, -1, pi)?;
    let rhs = apply_a_power(&tau_inverse_formal(&x.representative), 1, pi)?;
    formal_iso_check(&lhs, &rhs)
}

/// `σ(F x) ≅ F(σ x)`.
pub fn sigma_commutes_check(x: &OrbitObject, pi: &BilinearForm) -> Result<IsoOutcome> {
    let a = sigma(&OrbitObject::new(apply_f(&x.representative, pi)?), pi)?;
    let b = apply_f(&sigma(x, pi)?.representative, pi)?;
    formal_iso_check(&a.representative, &b)
}

#[derive(Clone, Debug)]
pub struct ExampleReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn rep_hom(x: &KroneckerRep, y: &KroneckerRep) -> Result<usize> {
    Ok(hom_basis(x, y)?.len())
}

/// `P^3` against `Q_6`: Hom dimensions of the exceptional pair, the Koszul
/// slice, and `σ` on `samples` objects.
pub fn example12_model(field: FieldSpec, samples: usize, seed: u64) -> Result<ExampleReport> {
    let pi = wedge_form(field);
    let n = 6;
    let mut checks = Vec::new();
    let p1 = KroneckerRep::projective(1, n, field)?;
    let p2 = KroneckerRep::projective(2, n, field)?;
    let e1 = SheafDescriptor::new(3, SheafKind::OmegaDual, 1)?;
    let e2 = SheafDescriptor::line(3, 3)?;
    for (name, a, b, x, y) in [("hom(P1,P2)", e1, e2, &p1, &p2), ("hom(P2,P1)", e2, e1, &p2, &p1)] {
        let (c, r) = (hom_dim(&a, &b)?, rep_hom(x, y)?);
        checks.push(Check::new(name, c == r as u128, format!("Hom({a},{b})={c} reps={r}")));
    }
    checks.push(Check::new("wedge-form", pi.symmetry() == crate::kronecker::Symmetry::Symmetric, pi.symmetry().to_string()));
    let slice = koszul_slice_check(field)?;
    checks.push(Check::new("koszul-slice", slice.iso.is_iso(), format!("cokernel {} {}", slice.cokernel.dim(), slice.iso)));

    let o = |r: &KroneckerRep, s| OrbitObject::new(FormalObject::single(r.clone(), s));
    let s1 = sigma(&o(&p1, 0), &pi)?;
    checks.push(outcome_check("sigma(P1)=P2[1]", formal_iso_check(&s1.representative, &o(&p2, 1).representative)?));
    let s2 = sigma(&o(&p2, 0), &pi)?;
    checks.push(outcome_check(
        "sigma(P2)=P3[1]",
        formal_iso_check(&s2.representative, &o(&slice.cokernel, 1).representative)?,
    ));
    let objs = sample_objects(&pi, samples, seed)?;
    let (mut sq, mut comm) = (Vec::new(), Vec::new());
    for (i, x) in objs.iter().enumerate() {
        if !sigma_square_check(x, &pi)?.is_iso() {
            sq.push(i);
        }
        if !sigma_commutes_check(x, &pi)?.is_iso() {
            comm.push(i);
        }
    }
    checks.push(Check::new("sigma^2=tau^-1[2]", sq.is_empty(), format!("{} objects, failures {sq:?}", objs.len())));
    checks.push(Check::new("sigma-F-commute", comm.is_empty(), format!("{} objects, failures {comm:?}", objs.len())));
    Ok(ExampleReport { name: "example12".into(), checks })
}

/// `P^2` against `Q_3` in the orbit category of `τ[-1] = a^2[-1]`.
pub fn example11_model(max_index: usize, field: FieldSpec, pairs: usize) -> Result<ExampleReport> {
    let n = 3;
    let pi = BilinearForm::identity(n, field);
    let g = OrbitFunctor::TAU_SHIFT;
    let mut checks = Vec::new();
    let p1 = KroneckerRep::projective(1, n, field)?;
    let p2 = KroneckerRep::projective(2, n, field)?;
    let (o1, o2) = (SheafDescriptor::line(2, 1)?, SheafDescriptor::line(2, 2)?);
    for (name, a, b, x, y) in [("hom(P1,P2)", o1, o2, &p1, &p2), ("hom(P2,P1)", o2, o1, &p2, &p1)] {
        let (c, r) = (hom_dim(&a, &b)?, rep_hom(x, y)?);
        checks.push(Check::new(name, c == r as u128, format!("Hom({a},{b})={c} reps={r}")));
    }
    // Hom(O{i}, O{j}) is the space of degree j - i forms in three variables
    let mut table = Vec::new();
    let mut agree = true;
    for i in 0..=max_index as i64 {
        for j in i..=max_index as i64 {
            let h = hom_dim(&SheafDescriptor::line(2, i)?, &SheafDescriptor::line(2, j)?)?;
            agree &= h == monomials(&[1, 1, 1], (j - i) as u32).len() as u128;
            table.push(format!("{i}->{j}:{h}"));
        }
    }
    checks.push(Check::new("exceptional-homs", agree, table.join(" ")));

    let t = OrbitObject::module(p1.direct_sum(&p2));
    let ext = functor_orbit_hom(g, &t, &t, 1, &pi, 0)?.total;
    checks.push(Check::new("ext1(T,T)=0", ext == 0, format!("dim={ext}")));

    let model = ChainModel::new(n)?;
    let objs = scan_family(max_index)
        .into_iter()
        .map(|c| model.realize(c, field, &pi).map(OrbitObject::new))
        .collect::<Result<Vec<_>>>()?;
    let mut checked = 0;
    let mut bad = Vec::new();
    'outer: for a in 0..objs.len() {
        for b in a..objs.len() {
            if checked == pairs {
                break 'outer;
            }
            let xy = functor_orbit_hom(g, &objs[a], &objs[b], 1, &pi, 0)?.total;
            let yx = functor_orbit_hom(g, &objs[b], &objs[a], 1, &pi, 0)?.total;
            if xy != yx {
                bad.push(format!("({a},{b}):{xy}/{yx}"));
            }
            checked += 1;
        }
    }
    checks.push(Check::new("2-CY", bad.is_empty(), format!("{checked} pairs, failures [{}]", bad.join(" "))));
    Ok(ExampleReport { name: "example11".into(), checks })
}
