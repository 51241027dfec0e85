//! Hom and Ext¹ between Kronecker representations.
//!
//! For `M = (U, V, c)` and `N = (U', V', c')` the standard four-term sequence
//!
//! ```text
//! 0 -> Hom(M,N) -> Hom(U,U') ⊕ Hom(V,V') --δ--> Hom(V⊗W, U') -> Ext¹(M,N) -> 0
//! ```
//!
//! with `δ(f1, f2) = f1 ∘ c - c' ∘ (f2 ⊗ id_W)` computes both spaces.
//! [`hom_basis`] avoids materialising `δ`: a morphism is determined by `f2`
//! on the image of `c` and by a free choice of `f1` on a complement of it.

use crate::error::Result;
use crate::exactlin::Matrix;

use super::rep::{DimVector, KroneckerRep};

/// A pair `(f1: U -> U', f2: V -> V')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism {
    pub f1: Matrix,
    pub f2: Matrix,
}

impl RepMorphism {
    pub fn zero(source: &KroneckerRep, target: &KroneckerRep) -> Self {
        let f = source.field();
        RepMorphism { f1: Matrix::zeros(f, target.d1(), source.d1()), f2: Matrix::zeros(f, target.d2(), source.d2()) }
    }

    pub fn identity(rep: &KroneckerRep) -> Self {
        let f = rep.field();
        RepMorphism { f1: Matrix::identity(f, rep.d1()), f2: Matrix::identity(f, rep.d2()) }
    }

    /// `f1 c_j = c'_j f2` for every arrow.
    pub fn is_morphism(&self, source: &KroneckerRep, target: &KroneckerRep) -> bool {
        source.maps().iter().zip(target.maps()).all(|(c, cp)| self.f1.mul(c) == cp.mul(&self.f2))
    }

    pub fn is_iso(&self) -> bool {
        self.f1.is_invertible() && self.f2.is_invertible()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism { f1: self.f1.mul(&other.f1), f2: self.f2.mul(&other.f2) }
    }

    pub fn add(&self, other: &RepMorphism) -> RepMorphism {
        RepMorphism { f1: self.f1.add(&other.f1), f2: self.f2.add(&other.f2) }
    }

    pub fn scale(&self, s: &crate::exactlin::Scalar) -> RepMorphism {
        RepMorphism { f1: self.f1.scale(s), f2: self.f2.scale(s) }
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero()
    }
}

/// `⟨d, e⟩ = d1 e1 + d2 e2 - n d2 e1`.
pub fn euler_form(d: DimVector, e: DimVector, n: usize) -> i64 {
    let (d1, d2, e1, e2) = (d.d1 as i64, d.d2 as i64, e.d1 as i64, e.d2 as i64);
    d1 * e1 + d2 * e2 - n as i64 * d2 * e1
}

/// Basis of `Hom(m, n)`.
pub fn hom_basis(m: &KroneckerRep, nrep: &KroneckerRep) -> Result<Vec<RepMorphism>> {
    m.check_compatible(nrep)?;
    // unknowns of the f2 system: (e1 k) x (e2 d2) with k >= n d2 - d1
    let size = |d1: usize, d2: usize, e1: usize, e2: usize| {
        let k = (m.n() * d2).saturating_sub(d1).max(1);
        (e1 * k).max(e2 * d2) * e2 * d2
    };
    let (d1, d2, e1, e2) = (m.d1(), m.d2(), nrep.d1(), nrep.d2());
    if size(e2, e1, d2, d1) < size(d1, d2, e1, e2) {
        let dual = hom_basis_direct(&nrep.dual(), &m.dual());
        return Ok(dual.into_iter().map(|g| RepMorphism { f1: g.f2.transpose(), f2: g.f1.transpose() }).collect());
    }
    Ok(hom_basis_direct(m, nrep))
}

fn hom_basis_direct(m: &KroneckerRep, nrep: &KroneckerRep) -> Vec<RepMorphism> {
    let f = m.field();
    let arrows = m.n();
    let (d1, d2, e1, e2) = (m.d1(), m.d2(), nrep.d1(), nrep.d2());
    let cm = m.flat();
    let cn = nrep.flat();
    let ker = cm.kernel_basis();
    let k = ker.cols();

    // f2 must satisfy c'(f2 ⊗ id) K = 0 on the kernel K of c.
    let mut lin = Matrix::zeros(f, e1 * k, e2 * d2);
    for a in 0..e2 {
        for b in 0..d2 {
            let col = a * d2 + b;
            for j in 0..arrows {
                for r in 0..e1 {
                    let x = cn.get(r, a * arrows + j);
                    if x.is_zero() {
                        continue;
                    }
                    for t in 0..k {
                        let y = ker.get(b * arrows + j, t);
                        if y.is_zero() {
                            continue;
                        }
                        let v = lin.get(r * k + t, col) + &(x * y);
                        lin.set(r * k + t, col, v);
                    }
                }
            }
        }
    }
    let f2_basis = lin.kernel_basis();

    // f1 Q = [c'(f2⊗id) restricted to pivot columns | Z] with Q = [image | complement]
    let pivots = cm.pivot_columns();
    let r = pivots.len();
    let (projection, section) = cm.cokernel_with_section();
    let q = cm.select_columns(&pivots).hstack(&section);
    let q_inv = q.inverse().expect("image plus complement is a basis");
    let top: Vec<usize> = (0..r).collect();
    let q_top = q_inv.select_rows(&top);
    debug_assert_eq!(projection.rows(), d1 - r);

    let id_w = Matrix::identity(f, arrows);
    let mut out = Vec::with_capacity(f2_basis.cols() + e1 * (d1 - r));
    for s in 0..f2_basis.cols() {
        let f2 = Matrix::from_fn(f, e2, d2, |a, b| f2_basis.get(a * d2 + b, s).clone());
        let g = cn.mul(&f2.tensor(&id_w));
        let f1 = g.select_columns(&pivots).mul(&q_top);
        out.push(RepMorphism { f1, f2 });
    }
    for row in 0..e1 {
        for c in 0..d1 - r {
            let z = Matrix::from_fn(f, e1, d1 - r, |i, j| if i == row && j == c { f.one() } else { f.zero() });
            out.push(RepMorphism { f1: z.mul(&projection), f2: Matrix::zeros(f, e2, d2) });
        }
    }
    out
}

/// Dimensions of `Hom(m, n)` and `Ext¹(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomExt {
    pub hom: Vec<RepMorphism>,
    pub ext_dim: usize,
}

impl HomExt {
    pub fn hom_dim(&self) -> usize {
        self.hom.len()
    }
}

/// Hom basis and Ext¹ dimension. Ext¹ is read off the Euler form, which
/// equals `dim Hom - dim Ext¹` on any pair; [`ext1_space`] materialises it.
pub fn hom_ext(m: &KroneckerRep, nrep: &KroneckerRep) -> Result<HomExt> {
    let hom = hom_basis(m, nrep)?;
    let chi = euler_form(m.dim(), nrep.dim(), m.n());
    let ext = hom.len() as i64 - chi;
    debug_assert!(ext >= 0);
    Ok(HomExt { hom, ext_dim: ext as usize })
}

/// The map `δ` as a matrix: columns are `f1` entries (row-major, `e1 x d1`)
/// followed by `f2` entries (`e2 x d2`); rows are the entries of a
/// `e1 x (d2·n)` matrix, row-major.
pub fn delta_matrix(m: &KroneckerRep, nrep: &KroneckerRep) -> Result<Matrix> {
    m.check_compatible(nrep)?;
    let f = m.field();
    let arrows = m.n();
    let (d1, d2, e1, e2) = (m.d1(), m.d2(), nrep.d1(), nrep.d2());
    let width = d2 * arrows;
    let cm = m.flat();
    let cn = nrep.flat();
    let mut delta = Matrix::zeros(f, e1 * width, e1 * d1 + e2 * d2);
    for a in 0..e1 {
        for b in 0..d1 {
            let col = a * d1 + b;
            for x in 0..width {
                delta.set(a * width + x, col, cm.get(b, x).clone());
            }
        }
    }
    for a in 0..e2 {
        for b in 0..d2 {
            let col = e1 * d1 + a * d2 + b;
            for j in 0..arrows {
                for r in 0..e1 {
                    delta.set(r * width + b * arrows + j, col, -cn.get(r, a * arrows + j));
                }
            }
        }
    }
    Ok(delta)
}

/// `Ext¹(m, n)` as the cokernel of `δ`: `projection` sends a class
/// representative `h: V⊗W -> U'` (flattened row-major) to coordinates,
/// `section` lifts coordinates back.
#[derive(Clone, Debug)]
pub struct Ext1Space {
    pub projection: Matrix,
    pub section: Matrix,
    pub rows: usize,
    pub cols: usize,
}

impl Ext1Space {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// Coordinates of the class of `h` (an `e1 x (d2·n)` matrix).
    pub fn class_of(&self, h: &Matrix) -> Matrix {
        let f = h.field();
        let v = Matrix::from_fn(f, h.rows() * h.cols(), 1, |i, _| h.get(i / h.cols(), i % h.cols()).clone());
        self.projection.mul(&v)
    }

    /// Representative `h` of the class with the given coordinates.
    pub fn representative(&self, coords: &Matrix) -> Matrix {
        let v = self.section.mul(coords);
        Matrix::from_fn(v.field(), self.rows, self.cols, |r, c| v.get(r * self.cols + c, 0).clone())
    }
}

pub fn ext1_space(m: &KroneckerRep, nrep: &KroneckerRep) -> Result<Ext1Space> {
    let delta = delta_matrix(m, nrep)?;
    let (projection, section) = delta.cokernel_with_section();
    Ok(Ext1Space { projection, section, rows: nrep.d1(), cols: m.d2() * m.n() })
}

/// The extension `0 -> a -> E -> b -> 0` with class representative `h`:
/// `E = (U_a ⊕ U_b, V_a ⊕ V_b, [[c_a, h], [0, c_b]])`.
pub fn extension_rep(a: &KroneckerRep, b: &KroneckerRep, h: &Matrix) -> Result<KroneckerRep> {
    a.check_compatible(b)?;
    let f = a.field();
    let n = a.n();
    let (ad1, ad2, bd1, bd2) = (a.d1(), a.d2(), b.d1(), b.d2());
    let maps = (0..n)
        .map(|j| {
            Matrix::from_fn(f, ad1 + bd1, ad2 + bd2, |r, c| match (r < ad1, c < ad2) {
                (true, true) => a.maps()[j].get(r, c).clone(),
                (true, false) => h.get(r, (c - ad2) * n + j).clone(),
                (false, false) => b.maps()[j].get(r - ad1, c - ad2).clone(),
                (false, true) => f.zero(),
            })
        })
        .collect();
    KroneckerRep::new(n, f, ad1 + bd1, ad2 + bd2, maps)
}

/// Kernel of a morphism, with its inclusion.
pub fn kernel_rep(source: &KroneckerRep, g: &RepMorphism) -> (KroneckerRep, RepMorphism) {
    let k1 = g.f1.kernel_basis();
    let k2 = g.f2.kernel_basis();
    let maps = source
        .maps()
        .iter()
        .map(|c| k1.solve(&c.mul(&k2)).expect("kernel is a subrepresentation"))
        .collect();
    let rep = KroneckerRep::new(source.n(), source.field(), k1.cols(), k2.cols(), maps).expect("consistent shapes");
    (rep, RepMorphism { f1: k1, f2: k2 })
}

/// Cokernel of a morphism, with its projection.
pub fn cokernel_rep(target: &KroneckerRep, g: &RepMorphism) -> (KroneckerRep, RepMorphism) {
    let (p1, _) = g.f1.cokernel_with_section();
    let (p2, s2) = g.f2.cokernel_with_section();
    let maps = target.maps().iter().map(|c| p1.mul(c).mul(&s2)).collect();
    let rep = KroneckerRep::new(target.n(), target.field(), p1.rows(), p2.rows(), maps).expect("consistent shapes");
    (rep, RepMorphism { f1: p1, f2: p2 })
}

/// Generic element `Σ coeffs[i] * basis[i]`.
pub fn combine(basis: &[RepMorphism], coeffs: &[crate::exactlin::Scalar], zero: &RepMorphism) -> RepMorphism {
    basis.iter().zip(coeffs).fold(zero.clone(), |acc, (b, s)| acc.add(&b.scale(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FieldSpec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn brute_dims(m: &KroneckerRep, n: &KroneckerRep) -> (usize, usize) {
        let d = delta_matrix(m, n).unwrap();
        let r = d.rank();
        (d.cols() - r, d.rows() - r)
    }

    #[test]
    fn named_hom_ext_values() {
        for n in [2, 3] {
            let p1 = KroneckerRep::projective(1, n, Q).unwrap();
            let p2 = KroneckerRep::projective(2, n, Q).unwrap();
            let i2 = KroneckerRep::injective(2, n, Q).unwrap();
            let he = hom_ext(&p1, &p2).unwrap();
            assert_eq!((he.hom_dim(), he.ext_dim), (n, 0));
            let he = hom_ext(&i2, &p1).unwrap();
            assert_eq!((he.hom_dim(), he.ext_dim), (0, n));
            assert_eq!(brute_dims(&i2, &p1), (0, n));
            let he = hom_ext(&p1, &p1).unwrap();
            assert_eq!((he.hom_dim(), he.ext_dim), (1, 0));
        }
    }

    #[test]
    fn euler_form_values() {
        assert_eq!(euler_form(DimVector::new(1, 0), DimVector::new(1, 0), 3), 1);
        assert_eq!(euler_form(DimVector::new(0, 1), DimVector::new(1, 0), 3), -3);
        assert_eq!(euler_form(DimVector::new(4, 1), DimVector::new(1, 0), 4), 0);
    }

    #[test]
    fn mismatched_quivers_rejected() {
        let a = KroneckerRep::projective(1, 2, Q).unwrap();
        let b = KroneckerRep::projective(1, 3, Q).unwrap();
        assert!(matches!(hom_ext(&a, &b), Err(crate::Error::DimensionMismatch(_))));
    }

    #[test]
    fn hom_basis_matches_brute_force_delta() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..60 {
            let n = [2, 3][trial % 2];
            let (a, b, c, d) = (trial % 3, (trial / 3) % 3, (trial + 1) % 4, trial % 2 + 1);
            // low entry range makes non-generic maps common
            let m = KroneckerRep::random(n, Q, a, b, 1, &mut rng);
            let nn = KroneckerRep::random(n, Q, c, d, 1, &mut rng);
            let basis = hom_basis(&m, &nn).unwrap();
            for g in &basis {
                assert!(g.is_morphism(&m, &nn));
            }
            let (h, e) = brute_dims(&m, &nn);
            assert_eq!(basis.len(), h, "hom dim for {m:?} -> {nn:?}");
            assert_eq!(hom_ext(&m, &nn).unwrap().ext_dim, e);
        }
    }

    #[test]
    fn kernel_and_cokernel_of_resolution() {
        // P1^n -> P2 -> I2: the projection P2 -> I2 has kernel P1^n
        let n = 3;
        let p2 = KroneckerRep::projective(2, n, Q).unwrap();
        let i2 = KroneckerRep::injective(2, n, Q).unwrap();
        let g = RepMorphism { f1: Matrix::zeros(Q, 0, n), f2: Matrix::identity(Q, 1) };
        assert!(g.is_morphism(&p2, &i2));
        let (k, inc) = kernel_rep(&p2, &g);
        assert_eq!(k.dim(), DimVector::new(n, 0));
        assert!(inc.is_morphism(&k, &p2));
        let (ck, _) = cokernel_rep(&p2, &inc);
        assert_eq!(ck.dim(), DimVector::new(0, 1));
    }
}
