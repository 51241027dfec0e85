//! Splitting off simple summands, and the square root `a` of the AR
//! translate together with its inverse.

use crate::derivedh::FormalObject;
use crate::error::Result;
use crate::exactlin::Matrix;

use super::rep::{BilinearForm, KroneckerRep};

/// `m ≅ m_reduced ⊕ S_1^s` with `s = dim coker c`; `m_reduced = (im c, V)`.
pub fn split_sink_simples(m: &KroneckerRep) -> (KroneckerRep, usize) {
    let flat = m.flat();
    let pivots = flat.pivot_columns();
    let image = flat.select_columns(&pivots);
    let maps = m
        .maps()
        .iter()
        .map(|c| image.solve(c).expect("c lands in its image"))
        .collect();
    let reduced = KroneckerRep::new(m.n(), m.field(), pivots.len(), m.d2(), maps).expect("consistent shapes");
    (reduced, m.d1() - pivots.len())
}

/// `m ≅ m_reduced ⊕ S_2^t` with `t = dim ∩_j ker c_j`.
pub fn split_source_simples(m: &KroneckerRep) -> (KroneckerRep, usize) {
    let kernel = stacked(m).kernel_basis();
    let (_, section) = kernel.cokernel_with_section();
    let maps = m.maps().iter().map(|c| c.mul(&section)).collect();
    let reduced = KroneckerRep::new(m.n(), m.field(), m.d1(), section.cols(), maps).expect("consistent shapes");
    (reduced, kernel.cols())
}

/// `V -> U ⊗ W*`, row `i·n + l` is row `i` of `c_l`.
fn stacked(m: &KroneckerRep) -> Matrix {
    let n = m.n();
    Matrix::from_fn(m.field(), m.d1() * n, m.d2(), |r, c| m.maps()[r % n].get(r / n, c).clone())
}

/// `a(x)`: the module part `(V, ker c♭, γ)` with `c♭ = c ∘ (π^{-1} ⊗ id)`,
/// plus `I_2[-1]` for every `S_1` summand of `x`.
pub fn apply_a(x: &KroneckerRep, pi: &BilinearForm) -> Result<FormalObject> {
    pi.check_for(x.n(), x.field())?;
    let n = x.n();
    let f = x.field();
    let (reduced, s) = split_sink_simples(x);
    let flat = reduced.twist(pi.inverse()).flat();
    let a = flat.kernel_basis();
    let d2 = reduced.d2();
    let maps = (0..n)
        .map(|j| Matrix::from_fn(f, d2, a.cols(), |i, c| a.get(i * n + j, c).clone()))
        .collect();
    let module = KroneckerRep::new(n, f, d2, a.cols(), maps)?;
    let mut out = FormalObject::zero(n, f);
    out.push(module, 0);
    out.push(KroneckerRep::injective(2, n, f)?.power(s), -1);
    Ok(out)
}

/// `a^{-1}(x)`: the module part `(coker ĉ, U, induced)` where `ĉ: V -> U ⊗ W*`
/// is the adjoint of `c`, twisted back by `π`; plus `P_1[1]` for every
/// `S_2` summand of `x`.
pub fn apply_a_inverse(x: &KroneckerRep, pi: &BilinearForm) -> Result<FormalObject> {
    pi.check_for(x.n(), x.field())?;
    let n = x.n();
    let f = x.field();
    let (reduced, t) = split_source_simples(x);
    let (p, _) = stacked(&reduced).cokernel_with_section();
    let d1 = reduced.d1();
    let pieces: Vec<Matrix> = (0..n)
        .map(|l| {
            let cols: Vec<usize> = (0..d1).map(|i| i * n + l).collect();
            p.select_columns(&cols)
        })
        .collect();
    let maps = (0..n)
        .map(|j| {
            (0..n).fold(Matrix::zeros(f, p.rows(), d1), |acc, l| acc.add(&pieces[l].scale(pi.matrix().get(l, j))))
        })
        .collect();
    let module = KroneckerRep::new(n, f, p.rows(), d1, maps)?;
    let mut out = FormalObject::zero(n, f);
    out.push(module, 0);
    out.push(KroneckerRep::projective(1, n, f)?.power(t), 1);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;
    use crate::kronecker::rep::DimVector;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn pi(n: usize) -> BilinearForm {
        let m = Matrix::from_fn(Q, n, n, |r, c| Q.from_i64(((r * 3 + c * 5) % 7) as i64 + if r == c { 4 } else { 0 }));
        BilinearForm::new(m).unwrap()
    }

    #[test]
    fn split_examples() {
        let n = 3;
        let (r, s) = split_sink_simples(&KroneckerRep::projective(1, n, Q).unwrap());
        assert!(r.is_zero());
        assert_eq!(s, 1);
        let p2 = KroneckerRep::projective(2, n, Q).unwrap();
        let (r, s) = split_sink_simples(&p2);
        assert_eq!((r.dim(), s), (p2.dim(), 0));
        let (r, t) = split_source_simples(&KroneckerRep::injective(2, n, Q).unwrap());
        assert!(r.is_zero());
        assert_eq!(t, 1);
    }

    #[test]
    fn recorded_values_of_a() {
        for n in [2, 3, 4] {
            let pi = pi(n);
            let a = apply_a(&KroneckerRep::projective(2, n, Q).unwrap(), &pi).unwrap();
            assert_eq!(a.dims_by_shift(), vec![(0, DimVector::new(1, 0))]);
            let a = apply_a(&KroneckerRep::projective(1, n, Q).unwrap(), &pi).unwrap();
            assert_eq!(a.dims_by_shift(), vec![(-1, DimVector::new(0, 1))]);
            let a = apply_a(&KroneckerRep::injective(2, n, Q).unwrap(), &pi).unwrap();
            assert_eq!(a.dims_by_shift(), vec![(0, DimVector::new(1, n))]);
        }
    }

    #[test]
    fn recorded_values_of_a_inverse() {
        let n = 3;
        let pi = pi(n);
        let b = apply_a_inverse(&KroneckerRep::projective(1, n, Q).unwrap(), &pi).unwrap();
        assert_eq!(b.dims_by_shift(), vec![(0, DimVector::new(n, 1))]);
        let b = apply_a_inverse(&KroneckerRep::injective(2, n, Q).unwrap(), &pi).unwrap();
        assert_eq!(b.dims_by_shift(), vec![(1, DimVector::new(1, 0))]);
        let b = apply_a_inverse(&KroneckerRep::projective(2, n, Q).unwrap(), &pi).unwrap();
        assert_eq!(b.dims_by_shift(), vec![(0, DimVector::new(n * n - 1, n))]);
    }

    #[test]
    fn singular_form_is_rejected_at_construction() {
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert!(matches!(BilinearForm::new(m), Err(crate::Error::InvalidForm(_))));
        let p = KroneckerRep::projective(1, 3, Q).unwrap();
        assert!(matches!(apply_a(&p, &BilinearForm::identity(2, Q)), Err(crate::Error::InvalidForm(_))));
    }
}
