use kronmcm::gradedring::*;
use kronmcm::poly::{monomials, Poly};
use kronmcm::{Error, FieldSpec};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn polynomial_rings_have_parameter_n() {
    for n in 1..=8 {
        assert_eq!(gorenstein_parameter(&hilbert_polynomial_ring(n).unwrap(), n).unwrap(), n as i64);
    }
}

#[test]
fn veronese_parameter_is_n_over_m() {
    for n in 1..=8usize {
        let h = hilbert_polynomial_ring(n).unwrap();
        for m in 1..=n {
            let v = veronese(&h, m).unwrap();
            let a = gorenstein_parameter(&v, n);
            if n % m == 0 {
                assert_eq!(a.unwrap(), (n / m) as i64, "n={n} m={m}");
            } else {
                assert!(matches!(a, Err(Error::NotGorenstein(_))), "n={n} m={m}");
            }
        }
    }
}

#[test]
fn veronese_coefficients_match_binomials() {
    for n in 1..=6usize {
        let h = hilbert_polynomial_ring(n).unwrap();
        for m in 1..=4usize {
            let c = veronese(&h, m).unwrap().coefficients(31).unwrap();
            for (i, &ci) in c.iter().enumerate() {
                let want = binomial((m * i + n - 1) as i128, (n - 1) as i128);
                assert_eq!(ci, want, "n={n} m={m} i={i}");
            }
        }
    }
}

#[test]
fn koszul_of_the_variables_is_the_residue_field() {
    for n in 1..=3usize {
        let a = GradedModulePresentation::ring(Q, vec![1; n]).unwrap();
        let xs: Vec<Poly> = (0..n).map(|i| Poly::var(Q, n, i)).collect();
        let r = koszul_cohomology(&xs, &a, 4).unwrap();
        for i in 0..n {
            assert_eq!(r.total(i), 0);
        }
        assert_eq!(r.total(n), 1);
        assert_eq!(r.h(n, -(n as i64)), 1);
        assert!(matches!(r.finiteness, Finiteness::Finite { .. }));
    }
}

#[test]
fn weighted_variables() {
    // k[x, y] with deg y = 2 modulo (y): a copy of k[x]
    let y = Poly::var(Q, 2, 1);
    let m = GradedModulePresentation::quotient(Q, vec![1, 2], &[y]).unwrap();
    let x = Poly::var(Q, 2, 0);
    let r = koszul_cohomology(&[x], &m, 6).unwrap();
    assert_eq!(r.total(1), 1);
    assert_eq!(r.finiteness, Finiteness::Finite { witness: 1 });
}

#[test]
fn small_bound_is_undecided() {
    let names = ["x", "y"];
    let m = GradedModulePresentation::ring(Q, vec![1, 1]).unwrap();
    // (x^2 + y^2, x^2 - y^2) is a system of parameters; A/(...) vanishes from degree 3
    let s = [Poly::parse("x^2 + y^2", &names, Q).unwrap(), Poly::parse("x^2 - y^2", &names, Q).unwrap()];
    assert_eq!(koszul_cohomology(&s, &m, 1).unwrap().finiteness, Finiteness::Undecided);
    assert_eq!(koszul_cohomology(&s, &m, 4).unwrap().finiteness, Finiteness::Finite { witness: 3 });
}

fn arb_homogeneous(nvars: usize, deg: u32) -> impl Strategy<Value = Poly> {
    let mons = monomials(&vec![1; nvars], deg);
    proptest::collection::vec(-2i64..=2, mons.len()).prop_map(move |cs| {
        mons.iter().zip(cs).fold(Poly::zero(Q, nvars), |acc, (e, c)| {
            acc.add(&Poly::monomial(Q, e.clone(), Q.from_i64(c)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn koszul_euler_characteristic(
        f in arb_homogeneous(2, 2),
        a in arb_homogeneous(2, 1),
        b in arb_homogeneous(2, 2),
    ) {
        let m = if f.is_zero() {
            GradedModulePresentation::ring(Q, vec![1, 1]).unwrap()
        } else {
            GradedModulePresentation::quotient(Q, vec![1, 1], &[f]).unwrap()
        };
        let r = koszul_cohomology(&[a, b], &m, 5).unwrap();
        for t in 0..r.terms[0].len() {
            let chi_h: i64 = (0..=2).map(|i| if i % 2 == 0 { 1 } else { -1 } * r.cohomology[i][t] as i64).sum();
            let chi_k: i64 = (0..=2).map(|i| if i % 2 == 0 { 1 } else { -1 } * r.terms[i][t] as i64).sum();
            prop_assert_eq!(chi_h, chi_k);
        }
    }
}
