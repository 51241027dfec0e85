//! The orbit category `D = D^b(mod kQ_n) / F` for `F = a[-1]`.
//!
//! Graded Homs are sums over the `F`-orbit,
//! `Hom_D(x, y[j]) = ⊕_i Hom(x, F^i y[j])`, and the sum is finite because `F`
//! lowers every shift by at least one (and `F^{-1}` raises it).

mod chain;
mod triangle;

pub use chain::{cluster_tilting_scan, scan_family, ChainModel, ChainObject, OrbitFunctor, ScanReport, ScanViolation};
pub use triangle::{approximation_triangle, pairing_pi_from_triangle, proportionality, resolution_of, TrianglePiece, TriangleReport};

use std::collections::HashMap;
use std::fmt;

use crate::derivedh::{apply_f, apply_f_inverse, apply_f_power, formal_iso_check, shifted_hom, FormalObject};
use crate::error::{Error, Result};
use crate::kronecker::{split_source_simples, BilinearForm, IsoOutcome, KroneckerRep};

/// An object of `D`, stored through a representative in `D^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitObject {
    pub representative: FormalObject,
}

impl OrbitObject {
    pub fn new(representative: FormalObject) -> Self {
        OrbitObject { representative }
    }

    pub fn module(rep: KroneckerRep) -> Self {
        Self::new(FormalObject::single(rep, 0))
    }

    pub fn shifted(&self, k: i64) -> Self {
        Self::new(self.representative.shifted(k))
    }

    pub fn direct_sum(&self, other: &OrbitObject) -> Self {
        Self::new(self.representative.direct_sum(&other.representative))
    }

    /// Representative whose summands are modules in shift 0, except for
    /// copies of `I_2` in shift -1.
    pub fn normalized(&self, pi: &BilinearForm) -> Result<OrbitObject> {
        let x = &self.representative;
        let mut out = FormalObject::zero(x.n(), x.field());
        let mut work: Vec<(KroneckerRep, i64)> = x.summands().iter().map(|s| (s.rep.clone(), s.shift)).collect();
        while let Some((rep, s)) = work.pop() {
            match s {
                0 => out.push(rep, 0),
                -1 => {
                    let (rest, t) = split_source_simples(&rep);
                    out.push(KroneckerRep::injective(2, x.n(), x.field())?.power(t), -1);
                    if !rest.is_zero() {
                        extend(&mut work, &apply_f_inverse(&FormalObject::single(rest, -1), pi)?);
                    }
                }
                s if s > 0 => extend(&mut work, &apply_f(&FormalObject::single(rep, s), pi)?),
                s => extend(&mut work, &apply_f_inverse(&FormalObject::single(rep, s), pi)?),
            }
        }
        Ok(OrbitObject::new(out))
    }
}

fn extend(work: &mut Vec<(KroneckerRep, i64)>, x: &FormalObject) {
    work.extend(x.summands().iter().map(|s| (s.rep.clone(), s.shift)));
}

impl fmt::Display for OrbitObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.representative.fmt(f)
    }
}

/// Isomorphism in `D`, tested on normalized representatives.
pub fn orbit_iso_check(x: &OrbitObject, y: &OrbitObject, pi: &BilinearForm) -> Result<IsoOutcome> {
    formal_iso_check(&x.normalized(pi)?.representative, &y.normalized(pi)?.representative)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHomReport {
    pub degree: i64,
    pub total: usize,
    /// `(i, dim Hom(x, F^i y[j]))` for every nonzero term.
    pub contributions: Vec<(i64, usize)>,
    /// Inclusive range of `i` outside which every term vanishes.
    pub window: (i64, i64),
}

/// Shifts of `F^m y[s]` lie in this range, since `F` lowers every shift by one
/// or two and `F^{-1}` raises it by one or two.
fn target_shifts(y: &FormalObject, m: i64, s: i64) -> Option<(i64, i64)> {
    let (lo, hi) = (y.min_shift()?, y.max_shift()?);
    Some(if m >= 0 { (lo - 2 * m + s, hi - m + s) } else { (lo - m + s, hi - 2 * m + s) })
}

/// `G^i = F^{p i}[(p - q) i]` for `G = a^p[-q]`.
fn functor_step(g: OrbitFunctor, i: i64) -> (i64, i64) {
    (g.a_power * i, (g.a_power - g.shift) * i)
}

fn check_functor(g: OrbitFunctor) -> Result<()> {
    if g.a_power < 0 || g.shift < 1 {
        return Err(Error::InvalidArgument(format!("orbit Homs for {g} are not finite sums")));
    }
    Ok(())
}

/// Range of `i` for which `G^i y[j]` can have a shift within reach of `x`,
/// i.e. in `[min x, max x + 1]`.
pub fn functor_window(g: OrbitFunctor, x: &FormalObject, y: &FormalObject, j: i64) -> Result<Option<(i64, i64)>> {
    check_functor(g)?;
    let (Some(xmin), Some(xmax), Some(ymin), Some(ymax)) = (x.min_shift(), x.max_shift(), y.min_shift(), y.max_shift())
    else {
        return Ok(None);
    };
    // the top target shift is ymax + j - q i, the bottom one at least ymin + j - (p + q) i
    let reach = (ymax + j - xmin).abs().max((xmax + 1 - ymin - j).abs()) / g.shift + 2;
    let hits: Vec<i64> = (-reach..=reach)
        .filter(|&i| {
            let (m, s) = functor_step(g, i);
            let (lo, hi) = target_shifts(y, m, s + j).expect("nonzero");
            lo <= xmax + 1 && hi >= xmin
        })
        .collect();
    Ok(Some(match (hits.first(), hits.last()) {
        (Some(&a), Some(&b)) => (a, b),
        _ => (0, -1),
    }))
}

/// [`functor_window`] for `F = a[-1]`.
pub fn orbit_window(x: &FormalObject, y: &FormalObject, j: i64) -> Option<(i64, i64)> {
    functor_window(OrbitFunctor::A_SHIFT, x, y, j).expect("a[-1] is admissible")
}

/// Caches `F^k` of a fixed object.
struct Powers<'a> {
    pi: &'a BilinearForm,
    cache: HashMap<i64, FormalObject>,
}

impl<'a> Powers<'a> {
    fn new(base: &FormalObject, pi: &'a BilinearForm) -> Self {
        let mut cache = HashMap::new();
        cache.insert(0, base.clone());
        Powers { pi, cache }
    }

    fn get(&mut self, k: i64) -> Result<FormalObject> {
        if let Some(x) = self.cache.get(&k) {
            return Ok(x.clone());
        }
        let step = k.signum();
        let prev = self.get(k - step)?;
        let next = if step > 0 { apply_f(&prev, self.pi)? } else { apply_f_inverse(&prev, self.pi)? };
        self.cache.insert(k, next.clone());
        Ok(next)
    }
}

/// Total dimension of `F^k x` as predicted by the action of `a` on dimension
/// vectors, `(d1, d2) -> (d2, n d2 - d1)`; signs record parity of shifts.
fn predicted_size(x: &FormalObject, k: i64) -> u128 {
    let n = x.n() as i128;
    x.summands()
        .iter()
        .map(|s| {
            let (mut d1, mut d2) = (s.rep.d1() as i128, s.rep.d2() as i128);
            for _ in 0..k.unsigned_abs() {
                (d1, d2) = if k > 0 {
                    (d2, n.saturating_mul(d2).saturating_sub(d1))
                } else {
                    (n.saturating_mul(d1).saturating_sub(d2), d1)
                };
            }
            d1.unsigned_abs().saturating_add(d2.unsigned_abs())
        })
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// `Hom(x, F^m y[s])`, computed as `Hom(F^{-q} x, F^{m-q} y[s])` for the `q`
/// that keeps the larger side smallest.
fn orbit_term(xs: &mut Powers, ys: &mut Powers, m: i64, s: i64) -> Result<usize> {
    let (x0, y0) = (xs.get(0)?, ys.get(0)?);
    let reach = m.abs() + 12;
    let cost = |q: i64| {
        let (a, b) = (predicted_size(&x0, -q), predicted_size(&y0, m - q));
        (a.max(b), a.min(b), (2 * q - m).abs())
    };
    let q = (-reach..=reach).min_by_key(|&q| cost(q)).unwrap_or(0);
    let xq = xs.get(-q)?;
    let yq = ys.get(m - q)?;
    Ok(shifted_hom(&xq, &yq, s)?.dim)
}

/// `Hom_D(x, y[j])` together with its per-orbit contributions.
pub fn orbit_hom(x: &OrbitObject, y: &OrbitObject, j: i64, pi: &BilinearForm) -> Result<GradedHomReport> {
    orbit_hom_with_margin(x, y, j, pi, 0)
}

/// Like [`orbit_hom`] but also evaluates `margin` extra terms on each side of
/// the certified window; any nonzero term there is reported as well.
pub fn orbit_hom_with_margin(
    x: &OrbitObject,
    y: &OrbitObject,
    j: i64,
    pi: &BilinearForm,
    margin: i64,
) -> Result<GradedHomReport> {
    functor_orbit_hom(OrbitFunctor::A_SHIFT, x, y, j, pi, margin)
}

/// `⊕_i Hom(x, G^i y[j])` in the orbit category of `G = a^p[-q]`, `p >= 0`,
/// `q >= 1`.
pub fn functor_orbit_hom(
    g: OrbitFunctor,
    x: &OrbitObject,
    y: &OrbitObject,
    j: i64,
    pi: &BilinearForm,
    margin: i64,
) -> Result<GradedHomReport> {
    let (xr, yr) = (&x.representative, &y.representative);
    let Some(window) = functor_window(g, xr, yr, j)? else {
        return Ok(GradedHomReport { degree: j, total: 0, contributions: Vec::new(), window: (0, -1) });
    };
    let mut xs = Powers::new(xr, pi);
    let mut ys = Powers::new(yr, pi);
    let mut contributions = Vec::new();
    for i in window.0 - margin..=window.1 + margin {
        let (m, s) = functor_step(g, i);
        let d = orbit_term(&mut xs, &mut ys, m, s + j)?;
        if d > 0 {
            contributions.push((i, d));
        }
    }
    let total = contributions.iter().map(|c| c.1).sum();
    Ok(GradedHomReport { degree: j, total, contributions, window })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub rigid: bool,
    pub dims: Vec<(i64, usize)>,
}

/// `Hom_D(x, x[j]) = 0` for every `j` in `degrees`.
pub fn rigidity_check(x: &OrbitObject, degrees: &[i64], pi: &BilinearForm) -> Result<RigidityReport> {
    let dims = degrees
        .iter()
        .map(|&j| Ok((j, orbit_hom(x, x, j, pi)?.total)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RigidityReport { rigid: dims.iter().all(|d| d.1 == 0), dims })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreReport {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

/// Compares `dim Hom_D(x, y)` with `dim Hom_D(y, x[cy_dim])`.
pub fn serre_symmetry_check(x: &OrbitObject, y: &OrbitObject, cy_dim: i64, pi: &BilinearForm) -> Result<SerreReport> {
    let lhs = orbit_hom(x, y, 0, pi)?.total;
    let rhs = orbit_hom(y, x, cy_dim, pi)?.total;
    Ok(SerreReport { lhs, rhs, holds: lhs == rhs })
}

/// `F^k` on orbit representatives (the orbit object is unchanged).
pub fn orbit_translate(x: &OrbitObject, k: i64, pi: &BilinearForm) -> Result<OrbitObject> {
    Ok(OrbitObject::new(apply_f_power(&x.representative, k, pi)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn p1(n: usize) -> OrbitObject {
        OrbitObject::module(KroneckerRep::projective(1, n, Q).unwrap())
    }

    #[test]
    fn ext_of_p1() {
        for n in [2, 3, 6] {
            let pi = BilinearForm::identity(n, Q);
            let x = p1(n);
            assert_eq!(orbit_hom(&x, &x, -1, &pi).unwrap().total, n);
            assert_eq!(orbit_hom(&x, &x, 0, &pi).unwrap().total, 1);
            assert_eq!(orbit_hom(&x, &x, 1, &pi).unwrap().total, 0);
            assert_eq!(orbit_hom(&x, &x, 2, &pi).unwrap().total, 0);
            let p2 = OrbitObject::module(KroneckerRep::projective(2, n, Q).unwrap());
            let r = orbit_hom(&x, &p2, 0, &pi).unwrap();
            assert_eq!((r.total, r.contributions.clone()), (n, vec![(0, n)]));
        }
    }

    #[test]
    fn rigidity_examples() {
        let n = 3;
        let pi = BilinearForm::identity(n, Q);
        assert!(rigidity_check(&p1(n), &[1, 2], &pi).unwrap().rigid);
        let i2m = OrbitObject::new(FormalObject::single(KroneckerRep::injective(2, n, Q).unwrap(), -1));
        assert!(!rigidity_check(&p1(n).direct_sum(&i2m), &[1, 2], &pi).unwrap().rigid);
        let p2 = OrbitObject::module(KroneckerRep::projective(2, n, Q).unwrap());
        assert!(rigidity_check(&p2, &[1, 2], &pi).unwrap().rigid);
    }

    #[test]
    fn normalization_lands_in_fundamental_domain() {
        let n = 3;
        let pi = BilinearForm::identity(n, Q);
        let x = p1(n).shifted(1);
        let y = x.normalized(&pi).unwrap();
        assert_eq!(y.representative.dims_by_shift(), vec![(-1, crate::kronecker::DimVector::new(0, 1))]);
        let z = p1(n).shifted(-1).normalized(&pi).unwrap();
        assert_eq!(z.representative.dims_by_shift(), vec![(0, crate::kronecker::DimVector::new(n, 1))]);
        assert!(orbit_iso_check(&p1(n).shifted(3), &p1(n).shifted(3), &pi).unwrap().is_iso());
    }
}
