//! The derived AR translate, computed from the standard projective
//! resolution `0 -> P_1 ⊗ (V⊗W) -> P_1 ⊗ U ⊕ P_2 ⊗ V -> M -> 0` by applying
//! the Nakayama functor.

use crate::derivedh::FormalObject;
use crate::exactlin::Matrix;

use super::hom::{cokernel_rep, kernel_rep, RepMorphism};
use super::rep::KroneckerRep;

/// `τ(x)`: the kernel of `ν(d)` in shift 0 and its cokernel in shift -1.
pub fn tau(x: &KroneckerRep) -> FormalObject {
    let n = x.n();
    let f = x.field();
    let (d1, d2) = (x.d1(), x.d2());
    let nx = n * d2;
    let flat = x.flat();

    // I_1 ⊗ X with X = V ⊗ W
    let src_maps = (0..n)
        .map(|j| unit_row(f, n, j).tensor(&Matrix::identity(f, nx)))
        .collect();
    let source = KroneckerRep::new(n, f, nx, n * nx, src_maps).expect("consistent shapes");

    // I_1 ⊗ U ⊕ I_2 ⊗ V
    let tgt_maps = (0..n)
        .map(|j| unit_row(f, n, j).tensor(&Matrix::identity(f, d1)).hstack(&Matrix::zeros(f, d1, d2)))
        .collect();
    let target = KroneckerRep::new(n, f, d1, n * d1 + d2, tgt_maps).expect("consistent shapes");

    let mut ev = Matrix::zeros(f, d2, n * nx);
    for i in 0..d2 {
        for l in 0..n {
            ev.set(i, l * nx + i * n + l, f.one());
        }
    }
    let g = RepMorphism { f1: flat.clone(), f2: Matrix::identity(f, n).tensor(&flat).vstack(&ev) };
    debug_assert!(g.is_morphism(&source, &target));

    let (k, _) = kernel_rep(&source, &g);
    let (c, _) = cokernel_rep(&target, &g);
    let mut out = FormalObject::zero(n, f);
    out.push(k, 0);
    out.push(c, -1);
    out
}

fn unit_row(f: crate::exactlin::FieldSpec, n: usize, j: usize) -> Matrix {
    Matrix::from_fn(f, 1, n, |_, c| if c == j { f.one() } else { f.zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;
    use crate::kronecker::rep::DimVector;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn projectives_go_to_shifted_injectives() {
        for n in [2, 3] {
            let t = tau(&KroneckerRep::projective(1, n, Q).unwrap());
            assert_eq!(t.dims_by_shift(), vec![(-1, DimVector::new(1, n))]);
            let t = tau(&KroneckerRep::projective(2, n, Q).unwrap());
            assert_eq!(t.dims_by_shift(), vec![(-1, DimVector::new(0, 1))]);
        }
    }

    #[test]
    fn coxeter_action_on_injectives() {
        for n in [2, 3] {
            let t = tau(&KroneckerRep::injective(2, n, Q).unwrap());
            assert_eq!(t.dims_by_shift(), vec![(0, DimVector::new(n, n * n - 1))]);
        }
    }

    #[test]
    fn generic_regular_for_two_arrows() {
        let x = KroneckerRep::new(2, Q, 1, 1, vec![Matrix::from_i64(Q, &[&[1]]), Matrix::from_i64(Q, &[&[3]])]).unwrap();
        assert_eq!(tau(&x).dims_by_shift(), vec![(0, DimVector::new(1, 1))]);
    }
}
