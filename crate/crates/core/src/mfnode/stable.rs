//! Morphisms of factorizations modulo homotopy.
//!
//! A degree-`t` morphism `x -> y` is a pair `(α, β)` with `α phi_x = phi_y β`
//! and `β psi_x = psi_y α`; `β` is determined by `α`. It is null-homotopic
//! when `α = phi_y ρ + σ psi_x`.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactlin::{Matrix, Scalar};
use crate::kronecker::{random_coeffs, IsoOptions, IsoOutcome};

use super::linsys::{Block, System};
use super::{mat_mul, MatrixFactorization, PolyMatrix};

struct DegreeSpace {
    alpha: Block,
    /// Morphisms, as columns of α-coordinates.
    z: Matrix,
    /// All null-homotopic α, from the unknowns of `rho` and `sigma`.
    homotopies: Matrix,
    rho: Block,
    sigma: Block,
    /// Independent homotopies followed by representatives of the quotient.
    frame: Matrix,
    quotient: usize,
}

fn degree_space(x: &MatrixFactorization, y: &MatrixFactorization, t: i64) -> DegreeSpace {
    let field = x.field();
    let d = x.f_degree();
    let (rx, ry) = (x.rank(), y.rank());
    let alpha = Block::new(ry, rx, 0, |k, i| x.deg0()[i] + t - y.deg0()[k]);
    let beta = Block::new(ry, rx, alpha.len(), |l, j| x.deg1()[j] + t - y.deg1()[l]);
    let mut sys = System::new(field, alpha.len() + beta.len());
    sys.right(0, &alpha, x.phi(), 1);
    sys.left(0, y.phi(), &beta, -1);
    sys.right(1, &beta, x.psi(), 1);
    sys.left(1, y.psi(), &alpha, -1);
    let kernel = sys.matrix().kernel_basis();
    let z = kernel.select_rows(&(0..alpha.len()).collect::<Vec<_>>());

    let rho = Block::new(ry, rx, 0, |l, i| x.deg0()[i] + t - y.deg1()[l]);
    let sigma = Block::new(ry, rx, rho.len(), |k, j| x.deg1()[j] + t - d - y.deg0()[k]);
    let mut hs = System::new(field, rho.len() + sigma.len());
    hs.left(0, y.phi(), &rho, 1);
    hs.right(0, &sigma, x.psi(), 1);
    let homotopies = hs.matrix_on(&alpha);

    let b = homotopies.select_columns(&homotopies.pivot_columns());
    let nb = b.cols();
    let both = b.hstack(&z);
    let reps: Vec<usize> = both.pivot_columns().into_iter().filter(|&c| c >= nb).map(|c| c - nb).collect();
    let frame = b.hstack(&z.select_columns(&reps));
    DegreeSpace { alpha, z, homotopies, rho, sigma, frame, quotient: reps.len() }
}

impl DegreeSpace {
    /// Coordinates of the class of `v` in the quotient.
    fn class(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = self.frame.field();
        let rhs = Matrix::from_fn(f, v.len(), 1, |r, _| v[r].clone());
        let c = self.frame.solve(&rhs)?;
        let nb = self.frame.cols() - self.quotient;
        Some((nb..self.frame.cols()).map(|r| c.get(r, 0).clone()).collect())
    }

    fn representative(&self, k: usize) -> Vec<Scalar> {
        let c = self.frame.cols() - self.quotient + k;
        (0..self.frame.rows()).map(|r| self.frame.get(r, c).clone()).collect()
    }
}

fn lowest_degree(x: &MatrixFactorization, y: &MatrixFactorization) -> Option<i64> {
    Some(y.deg0().iter().min()? - x.deg0().iter().max()?)
}

/// Beyond this degree every α entry has degree above `max entry degree + 2`.
pub fn default_top(x: &MatrixFactorization, y: &MatrixFactorization) -> Option<i64> {
    let m = x.max_entry_degree().max(y.max_entry_degree());
    Some(y.deg0().iter().max()? - x.deg0().iter().min()? + m + 3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableHomReport {
    /// `(t, dim)` for each internal degree evaluated.
    pub degrees: Vec<(i64, usize)>,
    pub total: usize,
    pub certified: bool,
}

/// Stable Homs `x -> y` of internal degrees up to `degree_bound`. Certified
/// when the two top degrees vanish and the range covers more than the largest
/// entry degree plus two.
pub fn mf_stable_hom(x: &MatrixFactorization, y: &MatrixFactorization, degree_bound: i64) -> Result<StableHomReport> {
    x.validate()?;
    y.validate()?;
    let Some(lo) = lowest_degree(x, y) else {
        return Ok(StableHomReport { degrees: Vec::new(), total: 0, certified: true });
    };
    let degrees: Vec<(i64, usize)> = (lo..=degree_bound).map(|t| (t, degree_space(x, y, t).quotient)).collect();
    let total = degrees.iter().map(|d| d.1).sum();
    let m = x.max_entry_degree().max(y.max_entry_degree());
    let tail_zero = degrees.len() >= 2 && degrees[degrees.len() - 2..].iter().all(|d| d.1 == 0);
    let certified = tail_zero && degree_bound - lo >= m + 2;
    Ok(StableHomReport { degrees, total, certified })
}

/// A basis of the degree-`t` morphisms `x -> y`, given by their `α` parts.
pub fn morphisms(x: &MatrixFactorization, y: &MatrixFactorization, t: i64) -> Result<Vec<PolyMatrix>> {
    x.validate()?;
    y.validate()?;
    let s = degree_space(x, y, t);
    Ok((0..s.z.cols())
        .map(|c| {
            let v: Vec<Scalar> = (0..s.z.rows()).map(|r| s.z.get(r, c).clone()).collect();
            s.alpha.to_matrix(&v, x.field())
        })
        .collect())
}

/// `(ρ, σ)` with `α = phi_y ρ + σ psi_x`, if `α` is null-homotopic.
pub fn homotopy_witness(
    x: &MatrixFactorization,
    y: &MatrixFactorization,
    alpha: &PolyMatrix,
    t: i64,
) -> Result<Option<(PolyMatrix, PolyMatrix)>> {
    x.validate()?;
    y.validate()?;
    let field = x.field();
    let s = degree_space(x, y, t);
    let Some(v) = s.alpha.to_vec(alpha, field) else {
        return Ok(None);
    };
    let rhs = Matrix::from_fn(field, v.len(), 1, |r, _| v[r].clone());
    Ok(s.homotopies.solve(&rhs).map(|c| {
        let c: Vec<Scalar> = (0..c.rows()).map(|r| c.get(r, 0).clone()).collect();
        (s.rho.to_matrix(&c, field), s.sigma.to_matrix(&c, field))
    }))
}

/// Stable morphisms `x -> y` of all internal degrees, i.e. after forgetting
/// the grading.
pub struct StableHomSpace {
    x: MatrixFactorization,
    y: MatrixFactorization,
    degrees: BTreeMap<i64, DegreeSpace>,
}

impl StableHomSpace {
    pub fn new(x: &MatrixFactorization, y: &MatrixFactorization) -> Result<Self> {
        x.validate()?;
        y.validate()?;
        let mut degrees = BTreeMap::new();
        if let (Some(lo), Some(hi)) = (lowest_degree(x, y), default_top(x, y)) {
            for t in lo..=hi {
                degrees.insert(t, degree_space(x, y, t));
            }
        }
        Ok(StableHomSpace { x: x.clone(), y: y.clone(), degrees })
    }

    pub fn dim(&self) -> usize {
        self.degrees.values().map(|s| s.quotient).sum()
    }

    /// Representatives of a basis, degree by degree.
    pub fn basis(&self) -> Vec<PolyMatrix> {
        let f = self.x.field();
        self.degrees
            .values()
            .flat_map(|s| (0..s.quotient).map(move |k| s.alpha.to_matrix(&s.representative(k), f)))
            .collect()
    }

    /// Coordinates of the class of a (possibly inhomogeneous) morphism;
    /// components above the computed range are stably zero.
    pub fn coords(&self, alpha: &PolyMatrix) -> Option<Vec<Scalar>> {
        let f = self.x.field();
        let mut parts: BTreeMap<i64, PolyMatrix> = BTreeMap::new();
        let zero = || -> PolyMatrix {
            vec![vec![crate::poly::Poly::zero(f, 2); self.x.rank()]; self.y.rank()]
        };
        for (k, row) in alpha.iter().enumerate() {
            for (i, p) in row.iter().enumerate() {
                for (e, c) in p.terms() {
                    let t = (e[0] + e[1]) as i64 - self.x.deg0()[i] + self.y.deg0()[k];
                    let m = parts.entry(t).or_insert_with(zero);
                    m[k][i] = m[k][i].add(&crate::poly::Poly::monomial(f, e.clone(), c.clone()));
                }
            }
        }
        let mut out = Vec::new();
        for (t, s) in &self.degrees {
            match parts.remove(t) {
                Some(m) => out.extend(s.class(&s.alpha.to_vec(&m, f)?)?),
                None => out.extend((0..s.quotient).map(|_| f.zero())),
            }
        }
        let top = self.degrees.keys().next_back().copied();
        if parts.keys().any(|&t| top.is_none_or(|h| t <= h)) {
            return None;
        }
        Some(out)
    }

    /// Whether `e ∈ End(x)` (this space must be `x -> x`) is a unit, tested
    /// by left multiplication on the stable endomorphisms.
    fn is_unit(&self, e: &PolyMatrix) -> Option<bool> {
        let f = self.x.field();
        let basis = self.basis();
        let n = basis.len();
        let mut m = Matrix::zeros(f, n, n);
        for (c, b) in basis.iter().enumerate() {
            let v = self.coords(&mat_mul(e, b, f, self.x.rank()))?;
            for (r, s) in v.into_iter().enumerate() {
                m.set(r, c, s);
            }
        }
        Some(m.rank() == n)
    }

    fn combination(&self, coeffs: &[Scalar]) -> PolyMatrix {
        let f = self.x.field();
        let zero: PolyMatrix = vec![vec![crate::poly::Poly::zero(f, 2); self.x.rank()]; self.y.rank()];
        self.basis().iter().zip(coeffs).fold(zero, |acc, (b, c)| {
            acc.iter()
                .zip(b)
                .map(|(ra, rb)| ra.iter().zip(rb).map(|(p, q)| p.add(&q.scale(c))).collect())
                .collect()
        })
    }
}

pub fn mf_iso_check(x: &MatrixFactorization, y: &MatrixFactorization) -> Result<IsoOutcome> {
    mf_iso_check_with(x, y, IsoOptions::default())
}

/// Stable isomorphism after forgetting the grading: random `f: x -> y`,
/// `g: y -> x` with `gf` and `fg` units of the stable endomorphism rings.
pub fn mf_iso_check_with(x: &MatrixFactorization, y: &MatrixFactorization, opts: IsoOptions) -> Result<IsoOutcome> {
    let ex = StableHomSpace::new(x, x)?;
    let ey = StableHomSpace::new(y, y)?;
    if ex.dim() == 0 && ey.dim() == 0 {
        return Ok(IsoOutcome::Isomorphic);
    }
    if ex.dim() != ey.dim() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let hxy = StableHomSpace::new(x, y)?;
    let hyx = StableHomSpace::new(y, x)?;
    if hxy.dim() == 0 || hyx.dim() == 0 {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let field = x.field();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.trials {
        let f = hxy.combination(&random_coeffs(field, hxy.dim(), &mut rng));
        let g = hyx.combination(&random_coeffs(field, hyx.dim(), &mut rng));
        let gf = mat_mul(&g, &f, field, y.rank());
        let fg = mat_mul(&f, &g, field, x.rank());
        if ex.is_unit(&gf) == Some(true) && ey.is_unit(&fg) == Some(true) {
            return Ok(IsoOutcome::Isomorphic);
        }
    }
    Ok(IsoOutcome::Undecided)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;
    use crate::poly::Poly;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn endomorphisms_of_p() {
        let p = MatrixFactorization::p(Q);
        let r = mf_stable_hom(&p, &p, 4).unwrap();
        assert_eq!(r.total, 1);
        assert_eq!(r.degrees[0], (0, 1));
        assert!(r.certified);
        assert!(!mf_stable_hom(&p, &p, 1).unwrap().certified);
        // U id is a morphism of degree 1, null-homotopic via σ = 1
        let u = vec![vec![Poly::var(Q, 2, 0)]];
        assert_eq!(morphisms(&p, &p, 1).unwrap().len(), 2);
        let (rho, sigma) = homotopy_witness(&p, &p, &u, 1).unwrap().unwrap();
        assert!(rho[0][0].is_zero());
        assert_eq!(sigma[0][0], Poly::one(Q, 2));
        assert!(homotopy_witness(&p, &p, &vec![vec![Poly::one(Q, 2)]], 0).unwrap().is_none());
    }

    #[test]
    fn ungraded_classes() {
        let (p, q) = (MatrixFactorization::p(Q), MatrixFactorization::q(Q));
        assert_eq!(mf_iso_check(&p, &q).unwrap(), IsoOutcome::NotIsomorphic);
        assert_eq!(mf_iso_check(&p, &q.shift()).unwrap(), IsoOutcome::Isomorphic);
        assert_eq!(mf_iso_check(&p, &p.twisted(3)).unwrap(), IsoOutcome::Isomorphic);
        let t = MatrixFactorization::trivial(Q);
        assert_eq!(StableHomSpace::new(&t, &t).unwrap().dim(), 0);
        assert_eq!(mf_iso_check(&t, &MatrixFactorization::zero(Q)).unwrap(), IsoOutcome::Isomorphic);
        assert_eq!(mf_iso_check(&t, &p).unwrap(), IsoOutcome::NotIsomorphic);
    }
}
