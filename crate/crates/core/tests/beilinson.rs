use kronmcm::beilinson::*;
use kronmcm::derivedh::FormalObject;
use kronmcm::kronecker::{iso_check, DimVector, KroneckerRep, Symmetry};
use kronmcm::orbitcat::OrbitObject;
use kronmcm::FieldSpec;
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::Rationals;

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn sheaf(n: usize, kind: SheafKind, k: i64) -> SheafDescriptor {
    SheafDescriptor::new(n, kind, k).unwrap()
}

#[test]
fn exceptional_pair_on_p3() {
    let omega_dual = sheaf(3, SheafKind::OmegaDual, 1);
    let o2 = SheafDescriptor::line(3, 2).unwrap();
    let o3 = SheafDescriptor::line(3, 3).unwrap();
    assert_eq!(cohomology(&o3).unwrap().h, vec![20, 0, 0, 0]);
    assert_eq!(hom_dim(&omega_dual, &o3).unwrap(), 6);
    assert_eq!(hom_dim(&o2, &omega_dual).unwrap(), 4);
    assert_eq!(hom_dim(&o2, &o3).unwrap(), 4);
    // no higher Ext and nothing backwards
    assert_eq!(ext_table(&omega_dual, &o3).unwrap().nonzero_degrees(), vec![0]);
    assert!(ext_table(&o3, &omega_dual).unwrap().h.iter().all(|&x| x == 0));
}

#[test]
fn line_bundles_are_acyclic_outside_one_degree() {
    for n in [2usize, 3] {
        for k in -12..=12 {
            let t = cohomology(&SheafDescriptor::line(n, k).unwrap()).unwrap();
            assert!(t.nonzero_degrees().len() <= 1, "O{{{k}}} on P{n}: {t}");
            assert_eq!(t.euler_characteristic(), binomial(k + n as i64, n as i64) as i128 * if k >= 0 { 1 } else { 0 }
                + if k < -(n as i64) { (-1i128).pow(n as u32) * binomial(-k - 1, n as i64) as i128 } else { 0 });
        }
    }
}

#[test]
fn serre_duality_for_every_kind() {
    for n in [2usize, 3] {
        for kind in [SheafKind::O, SheafKind::Omega, SheafKind::OmegaDual] {
            for k in -10..=10 {
                let s = sheaf(n, kind, k).with_multiplicity(2);
                let a = cohomology(&s).unwrap().h;
                let b = cohomology(&s.serre_partner()).unwrap().h;
                for i in 0..=n {
                    assert_eq!(a[i], b[n - i], "{s} on P{n}, degree {i}");
                }
            }
        }
    }
}

#[test]
fn euler_sequence_additivity() {
    for k in -10..=10 {
        let chi = |s: SheafDescriptor| cohomology(&s).unwrap().euler_characteristic();
        let omega = chi(sheaf(3, SheafKind::Omega, k));
        assert_eq!(omega, 4 * chi(sheaf(3, SheafKind::O, k - 1)) - chi(sheaf(3, SheafKind::O, k)), "k={k}");
        let dual = chi(sheaf(3, SheafKind::OmegaDual, k));
        assert_eq!(dual, 4 * chi(sheaf(3, SheafKind::O, k + 1)) - chi(sheaf(3, SheafKind::O, k)), "k={k}");
    }
}

#[test]
fn exceptional_collection_on_p2() {
    let o = |k| SheafDescriptor::line(2, k).unwrap();
    assert_eq!(hom_dim(&o(1), &o(2)).unwrap(), 3);
    for i in -3..=3 {
        for j in i..=i + 5 {
            assert_eq!(hom_dim(&o(i), &o(j)).unwrap(), binomial(j - i + 2, 2) as u128);
        }
    }
}

#[test]
fn wedge_pairing_signs() {
    let pi = wedge_form(Q);
    assert_eq!(pi.symmetry(), Symmetry::Symmetric);
    assert_eq!(wedge_pairing((0, 1), (2, 3)), 1);
    assert_eq!(wedge_pairing((0, 2), (1, 3)), -1);
    assert_eq!(wedge_pairing((0, 1), (0, 2)), 0);
    // e_a ∧ e_b is the determinant of the 4x4 matrix of coordinates
    let basis = wedge_basis();
    for (r, &a) in basis.iter().enumerate() {
        for (c, &b) in basis.iter().enumerate() {
            let mut m = [[0i64; 4]; 4];
            for (row, &v) in [a.0, a.1, b.0, b.1].iter().enumerate() {
                m[row][v] = 1;
            }
            assert_eq!(pi.matrix().get(r, c), &Q.from_i64(det4(&m)));
        }
    }
}

fn det4(m: &[[i64; 4]; 4]) -> i64 {
    let mut total = 0;
    let perms = permutations(4);
    for p in perms {
        let mut sign = 1;
        for i in 0..4 {
            for j in i + 1..4 {
                if p[i] > p[j] {
                    sign = -sign;
                }
            }
        }
        total += sign * (0..4).map(|i| m[i][p[i]]).product::<i64>();
    }
    total
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn koszul_slice() {
    let r = koszul_slice_check(Q).unwrap();
    assert!(r.injective);
    assert_eq!(r.cokernel.dim(), DimVector::new(35, 6));
    assert!(r.iso.is_iso());
    assert!(iso_check(&r.cokernel, &r.expected).unwrap().is_iso());
}

#[test]
fn sigma_on_projectives() {
    let pi = wedge_form(Q);
    let p = |i| OrbitObject::module(KroneckerRep::projective(i, 6, Q).unwrap());
    let s1 = sigma(&p(1), &pi).unwrap();
    assert_eq!(s1.representative.shifts(), vec![1]);
    assert!(iso_check(&s1.representative.component(1), &KroneckerRep::projective(2, 6, Q).unwrap()).unwrap().is_iso());
    let s2 = sigma(&p(2), &pi).unwrap();
    assert_eq!(s2.representative.dims_by_shift(), vec![(1, DimVector::new(35, 6))]);
    let s11 = sigma(&s1, &pi).unwrap();
    assert!(sigma_square_check(&p(1), &pi).unwrap().is_iso());
    assert_eq!(s11.representative.dims_by_shift(), vec![(2, DimVector::new(35, 6))]);
    // τ^{-1} P_1 = P_3 directly
    let t = tau_inverse_formal(&p(1).representative);
    assert!(kronmcm::derivedh::formal_iso_check(&t, &s11.representative.shifted(-2)).unwrap().is_iso());
}

#[test]
fn tau_inverse_undoes_tau() {
    let pi = wedge_form(Q);
    let small = sample_objects(&pi, 12, 3).unwrap().into_iter().filter(|x| {
        x.representative.summands().iter().map(|s| s.rep.d1() + s.rep.d2()).sum::<usize>() <= 2
    });
    for x in small {
        let x = x.representative;
        assert!(kronmcm::derivedh::formal_iso_check(&tau_formal(&tau_inverse_formal(&x)), &x).unwrap().is_iso(), "{x}");
        assert!(kronmcm::derivedh::formal_iso_check(&tau_inverse_formal(&tau_formal(&x)), &x).unwrap().is_iso(), "{x}");
    }
}

#[test]
fn sigma_square_is_inverse_translate() {
    let pi = wedge_form(Q);
    for x in sample_objects(&pi, 20, 7).unwrap() {
        assert!(sigma_square_check(&x, &pi).unwrap().is_iso(), "{x}");
        assert!(sigma_commutes_check(&x, &pi).unwrap().is_iso(), "{x}");
    }
}

#[test]
fn tau_formal_is_summandwise() {
    let i2 = KroneckerRep::injective(2, 6, Q).unwrap();
    let p1 = KroneckerRep::projective(1, 6, Q).unwrap();
    let mut x = FormalObject::single(i2, 0);
    x.push(p1, 3);
    let t = tau_formal(&x);
    // τ I_2 is a module, τ P_1 = I_1[-1]
    assert_eq!(t.shifts(), vec![0, 2]);
    assert_eq!(t.component(2).dim(), DimVector::new(1, 6));
}

#[test]
fn example_models() {
    let r = example12_model(Q, 8, 1).unwrap();
    assert!(r.passed(), "{:?}", r.checks);
    let r = example11_model(3, Q, 50).unwrap();
    assert!(r.passed(), "{:?}", r.checks);
    let cy = r.checks.iter().find(|c| c.name == "2-CY").unwrap();
    assert!(cy.detail.starts_with("45 pairs"), "{}", cy.detail);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplicity_scales_tables(n in 2usize..=3, k in -12i64..=12, m in 0usize..5, kind in 0usize..3) {
        let kind = [SheafKind::O, SheafKind::Omega, SheafKind::OmegaDual][kind];
        let s = sheaf(n, kind, k);
        let one = cohomology(&s).unwrap().h;
        let many = cohomology(&s.with_multiplicity(m)).unwrap().h;
        prop_assert_eq!(many, one.iter().map(|x| x * m as u128).collect::<Vec<_>>());
    }
}
