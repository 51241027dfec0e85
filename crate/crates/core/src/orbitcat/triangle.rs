//! Approximation triangles `T^a -> T^b ⊕ T[-1]^c -> N[1] ->` for `T = P_1`,
//! and the form on `Ext^{-1}(T, T)` read back from the triangle for `N = T[1]`.

use crate::derivedh::{apply_f, apply_f_inverse, FormalObject};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::kronecker::{
    ext1_space, kernel_rep, split_sink_simples, BilinearForm, DimVector, KroneckerRep, RepMorphism,
};

use super::{orbit_hom, OrbitObject};

/// The standard projective resolution `P_1 ⊗ (V⊗W) -> P_1 ⊗ U ⊕ P_2 ⊗ V -> M`:
/// returns the middle term, the surjection onto `M`, the kernel and its
/// inclusion.
pub fn resolution_of(m: &KroneckerRep) -> (KroneckerRep, RepMorphism, KroneckerRep, RepMorphism) {
    let (n, f) = (m.n(), m.field());
    let p1 = KroneckerRep::projective(1, n, f).expect("vertex 1");
    let p2 = KroneckerRep::projective(2, n, f).expect("vertex 2");
    let middle = p1.power(m.d1()).direct_sum(&p2.power(m.d2()));
    let surj = RepMorphism { f1: Matrix::identity(f, m.d1()).hstack(&m.flat()), f2: Matrix::identity(f, m.d2()) };
    debug_assert!(surj.is_morphism(&middle, m));
    let (kernel, inclusion) = kernel_rep(&middle, &surj);
    (middle, surj, kernel, inclusion)
}

/// One module summand `M ≅ N[1]` in the orbit category and its resolution.
#[derive(Clone, Debug)]
pub struct TrianglePiece {
    pub module: KroneckerRep,
    pub kernel: KroneckerRep,
    pub inclusion: RepMorphism,
}

#[derive(Clone, Debug)]
pub struct TriangleReport {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub pieces: Vec<TrianglePiece>,
    /// Summands of `N[1]` isomorphic to `T[1]`; each contributes `T -> 0 -> T[1]`.
    pub shifted_t: usize,
}

/// Builds the triangle for `N` by moving each summand of `N[1]` along the
/// orbit to a module (or to `T[1]`), resolving it, and checking the result
/// against `Ext^1_D(T, N)` and `Ext^2_D(T, N)`.
pub fn approximation_triangle(nobj: &OrbitObject, pi: &BilinearForm) -> Result<TriangleReport> {
    let y = nobj.representative.shifted(1);
    let (n, field) = (y.n(), y.field());
    let mut work: Vec<(KroneckerRep, i64)> = y.summands().iter().map(|s| (s.rep.clone(), s.shift)).collect();
    let mut pieces = Vec::new();
    let mut shifted_t = 0;
    while let Some((rep, s)) = work.pop() {
        let next = match s {
            0 => {
                pieces.push(rep);
                continue;
            }
            1 => {
                let (rest, t) = split_sink_simples(&rep);
                shifted_t += t;
                if rest.is_zero() {
                    continue;
                }
                apply_f(&FormalObject::single(rest, 1), pi)?
            }
            s if s > 1 => apply_f(&FormalObject::single(rep, s), pi)?,
            s => apply_f_inverse(&FormalObject::single(rep, s), pi)?,
        };
        work.extend(next.summands().iter().map(|t| (t.rep.clone(), t.shift)));
    }

    let p1 = KroneckerRep::projective(1, n, field)?;
    let (mut a, mut b, mut c) = (shifted_t, 0, 0);
    let mut out = Vec::with_capacity(pieces.len());
    for m in pieces {
        let (_, _, kernel, inclusion) = resolution_of(&m);
        // a representation with nothing at vertex 2 is a sum of copies of P_1
        if kernel.dim() != DimVector::new(n * m.d2(), 0) {
            return Err(Error::ContractViolation(format!(
                "kernel of the approximation of {} is {}, not a sum of copies of T",
                m.dim(),
                kernel.dim()
            )));
        }
        a += n * m.d2();
        b += m.d1();
        c += m.d2();
        out.push(TrianglePiece { module: m, kernel, inclusion });
    }

    let t = OrbitObject::module(p1);
    let ext1 = orbit_hom(&t, nobj, 1, pi)?.total;
    let ext2 = orbit_hom(&t, nobj, 2, pi)?.total;
    if (b, c) != (ext1, ext2) {
        return Err(Error::ContractViolation(format!(
            "triangle multiplicities ({b}, {c}) differ from (Ext^1, Ext^2) = ({ext1}, {ext2})"
        )));
    }
    Ok(TriangleReport { a, b, c, pieces: out, shifted_t })
}

/// The form on `W = Ext^{-1}_D(T, T)` recovered from the triangle
/// `T ⊗ W -> T[-1] -> T[2] -β->` of the orbit category built from `pi_in`.
///
/// In `D^b` the triangle is the resolution `P_1 ⊗ W -> P_2 -> I_2 -ε->`, with
/// `T[-1] ≅ P_2` and `T[2] ≅ I_2`. The identification of `Hom(T[2], T[1])`
/// with `Ext^{-1}(T, T) = Hom(P_1, P_2)` goes through `a`, so the form is
/// `ε` composed with the inverse of `a: Hom(P_1, P_2) -> Ext^1(I_2, P_1)`.
pub fn pairing_pi_from_triangle(pi_in: &BilinearForm) -> Result<BilinearForm> {
    let (n, f) = (pi_in.n(), pi_in.field());
    let p1 = KroneckerRep::projective(1, n, f)?;
    let p2 = KroneckerRep::projective(2, n, f)?;
    let i2 = KroneckerRep::injective(2, n, f)?;
    let ext = ext1_space(&i2, &p1)?;
    let cflat = p2.twist(pi_in.inverse()).flat();

    // a(w) for w ∈ Hom(P_1, P_2): pull the sequence 0 -> P_1 -> X^0 -> X^1 -> 0
    // back along w: I_2 -> X^1, and read off the extension class.
    let mut m_a = Matrix::zeros(f, ext.dim(), n);
    for k in 0..n {
        let mut sys = cflat.clone();
        let mut col = Matrix::zeros(f, n, 1);
        col.set(k, 0, -f.one());
        sys = sys.hstack(&col);
        let ker = sys.kernel_basis();
        if ker.cols() != 1 || ker.get(n, 0).is_zero() {
            return Err(Error::ContractViolation("pullback is not an extension of I_2 by P_1".into()));
        }
        let t = ker.get(n, 0).inv();
        let h = Matrix::from_fn(f, 1, n, |_, j| ker.get(j, 0) * &t);
        let cls = ext.class_of(&h);
        for r in 0..ext.dim() {
            m_a.set(r, k, cls.get(r, 0).clone());
        }
    }

    // ε: P_2 as an extension of I_2 by P_1 ⊗ W
    let mut eps = Matrix::zeros(f, ext.dim(), n);
    for r in 0..n {
        let h = Matrix::from_fn(f, 1, n, |_, j| if j == r { f.one() } else { f.zero() });
        let cls = ext.class_of(&h);
        for i in 0..ext.dim() {
            eps.set(i, r, cls.get(i, 0).clone());
        }
    }

    let beta = m_a
        .inverse()
        .ok_or_else(|| Error::ContractViolation("a does not identify Hom(P_1, P_2) with Ext^1(I_2, P_1)".into()))?
        .mul(&eps);
    let pi = beta.inverse().ok_or_else(|| Error::ContractViolation("degenerate pairing".into()))?;
    BilinearForm::new(pi).map_err(|e| Error::ContractViolation(e.to_string()))
}

/// `Some(s)` with `a = s·b` when the matrices are proportional (`b ≠ 0`).
pub fn proportionality(a: &Matrix, b: &Matrix) -> Option<Scalar> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return None;
    }
    let (i, _) = b.entries().iter().enumerate().find(|(_, x)| !x.is_zero())?;
    let s = a.entries()[i].div(&b.entries()[i]);
    (a == &b.scale(&s)).then_some(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn triangle_examples() {
        let n = 3;
        let pi = BilinearForm::identity(n, Q);
        let p1 = OrbitObject::module(KroneckerRep::projective(1, n, Q).unwrap());
        let r = approximation_triangle(&p1, &pi).unwrap();
        assert_eq!((r.a, r.b, r.c), (1, 0, 0));
        let r = approximation_triangle(&p1.shifted(1), &pi).unwrap();
        assert_eq!((r.a, r.b, r.c), (n, 0, 1));
        let i2m = OrbitObject::new(FormalObject::single(KroneckerRep::injective(2, n, Q).unwrap(), -1));
        let r = approximation_triangle(&i2m, &pi).unwrap();
        assert_eq!((r.a, r.b, r.c), (n, 0, 1));
    }

    #[test]
    fn pairing_recovers_the_form() {
        let id = BilinearForm::identity(2, Q);
        let out = pairing_pi_from_triangle(&id).unwrap();
        assert!(proportionality(out.matrix(), id.matrix()).is_some());
        let anti = BilinearForm::new(Matrix::from_i64(Q, &[&[0, 1], &[-1, 0]])).unwrap();
        let out = pairing_pi_from_triangle(&anti).unwrap();
        assert!(proportionality(out.matrix(), anti.matrix()).is_some());
        assert_eq!(out.symmetry(), crate::kronecker::Symmetry::Antisymmetric);
    }
}
