//! Minimal graded free resolutions over `S = k[U, V]/(UV)`.
//!
//! `S_e` has basis `1` for `e = 0` and `U^e, V^e` for `e > 0`, so every graded
//! piece of a free module is small and syzygies are found degree by degree.

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::gradedring::GradedModulePresentation;
use crate::poly::{Exponents, Poly};

use super::linsys::{Block, System};
use super::{scalar_identity, MatrixFactorization, PolyMatrix};

fn s_basis(e: i64) -> Vec<Exponents> {
    match e {
        e if e < 0 => Vec::new(),
        0 => vec![vec![0, 0]],
        e => vec![vec![e as u32, 0], vec![0, e as u32]],
    }
}

/// Image in `S`: mixed monomials vanish.
fn reduce(p: &Poly) -> Poly {
    p.terms().filter(|(e, _)| e[0] == 0 || e[1] == 0).fold(Poly::zero(p.field(), 2), |acc, (e, c)| {
        acc.add(&Poly::monomial(p.field(), e.clone(), c.clone()))
    })
}

/// `⊕ S(-g)` for the generator degrees `g`.
struct FreeS {
    field: FieldSpec,
    gens: Vec<i64>,
}

impl FreeS {
    fn basis(&self, e: i64) -> Vec<(usize, Exponents)> {
        self.gens.iter().enumerate().flat_map(|(i, &g)| s_basis(e - g).into_iter().map(move |m| (i, m))).collect()
    }

    fn to_vec(&self, elem: &[Poly], e: i64) -> Vec<Scalar> {
        self.basis(e).iter().map(|(i, m)| elem[*i].coeff(m)).collect()
    }

    fn element(&self, v: &[Scalar], e: i64) -> Vec<Poly> {
        let mut out = vec![Poly::zero(self.field, 2); self.gens.len()];
        for ((i, m), c) in self.basis(e).into_iter().zip(v) {
            out[i] = out[i].add(&Poly::monomial(self.field, m, c.clone()));
        }
        out
    }

    fn column(&self, elem: &[Poly], e: i64) -> Matrix {
        let v = self.to_vec(elem, e);
        Matrix::from_fn(self.field, v.len(), 1, |r, _| v[r].clone())
    }
}

/// `d: ⊕ S(-source) -> target`, column `j` being the image of generator `j`.
struct SMap {
    source: FreeS,
    target: FreeS,
    cols: Vec<Vec<Poly>>,
}

impl SMap {
    /// Matrix of `d` from `source_e` to `target_e`.
    fn at(&self, e: i64) -> Matrix {
        let f = self.source.field;
        let basis = self.source.basis(e);
        let mut m = Matrix::zeros(f, self.target.basis(e).len(), basis.len());
        for (c, (j, mon)) in basis.iter().enumerate() {
            let x = Poly::monomial(f, mon.clone(), f.one());
            let img: Vec<Poly> = self.cols[*j].iter().map(|p| reduce(&p.mul(&x))).collect();
            for (r, s) in self.target.to_vec(&img, e).into_iter().enumerate() {
                m.set(r, c, s);
            }
        }
        m
    }

    fn max_entry_degree(&self) -> i64 {
        self.cols.iter().flatten().filter_map(|p| p.homogeneous_degree(&[1, 1])).max().unwrap_or(0) as i64
    }
}

/// Minimal generators, by degree, of the submodule of `free` whose degree-`e`
/// piece is spanned by the columns of `span(e)`.
fn minimal_generators(free: &FreeS, lo: i64, hi: i64, span: impl Fn(i64) -> Matrix) -> Vec<(i64, Vec<Poly>)> {
    let f = free.field;
    let (u, v) = (Poly::var(f, 2, 0), Poly::var(f, 2, 1));
    let mut prev = Matrix::zeros(f, free.basis(lo - 1).len(), 0);
    let mut out = Vec::new();
    for e in lo..=hi {
        let mut mult = Matrix::zeros(f, free.basis(e).len(), 0);
        for c in 0..prev.cols() {
            let w: Vec<Scalar> = (0..prev.rows()).map(|r| prev.get(r, c).clone()).collect();
            let elem = free.element(&w, e - 1);
            for x in [&u, &v] {
                let moved: Vec<Poly> = elem.iter().map(|p| reduce(&p.mul(x))).collect();
                mult = mult.hstack(&free.column(&moved, e));
            }
        }
        let here = span(e);
        let both = mult.hstack(&here);
        let piv = both.pivot_columns();
        for &c in piv.iter().filter(|&&c| c >= mult.cols()) {
            let w: Vec<Scalar> = (0..here.rows()).map(|r| here.get(r, c - mult.cols()).clone()).collect();
            out.push((e, free.element(&w, e)));
        }
        prev = both.select_columns(&piv);
    }
    out
}

fn kernel_generators(d: &SMap) -> Result<Vec<(i64, Vec<Poly>)>> {
    let (Some(&lo), Some(&top)) = (d.source.gens.iter().min(), d.source.gens.iter().max()) else {
        return Ok(Vec::new());
    };
    let hi = top + d.max_entry_degree() + 1;
    let gens = minimal_generators(&d.source, lo, hi + 2, |e| d.at(e).kernel_basis());
    if gens.iter().any(|(e, _)| *e > hi) {
        return Err(Error::Undecided(format!("syzygies of degree above {hi}")));
    }
    Ok(gens)
}

/// The unique `B` with `A B = UV`, if `A` is square and such a `B` exists.
fn complement(a: &PolyMatrix, deg0: &[i64], deg1: &[i64], field: FieldSpec) -> Option<PolyMatrix> {
    let r = deg0.len();
    let b = Block::new(r, r, 0, |j, i| deg0[i] + 2 - deg1[j]);
    let lambda = b.len();
    let mut sys = System::new(field, lambda + 1);
    sys.left(0, a, &b, 1);
    sys.constant(0, &scalar_identity(&super::node(field), r), lambda, -1);
    let k = sys.matrix().kernel_basis();
    let c = (0..k.cols()).find(|&c| !k.get(lambda, c).is_zero())?;
    let s = k.get(lambda, c).inv();
    let v: Vec<Scalar> = (0..lambda).map(|i| k.get(i, c) * &s).collect();
    Some(b.to_matrix(&v, field))
}

fn twist_of(a: &[i64], b: &[i64]) -> Option<i64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    if a.len() != b.len() {
        return None;
    }
    a.sort_unstable();
    b.sort_unstable();
    let c = match (a.first(), b.first()) {
        (Some(x), Some(y)) => y - x,
        _ => 0,
    };
    a.iter().zip(&b).all(|(x, y)| y - x == c).then_some(c)
}

#[derive(Clone, Debug)]
pub struct Stabilization {
    pub mf: MatrixFactorization,
    /// Homological degree `k` with `mf` built from `d_k: F_k -> F_{k-1}`.
    pub step: usize,
    /// Generator degrees of `F_0, F_1, ...` as far as computed.
    pub betti: Vec<Vec<i64>>,
}

/// Resolves `m ⊗ S` (`m` presented over `k[U, V]`) until two consecutive
/// free modules agree up to a twist and the differential there lifts to a
/// factorization of `UV`.
pub fn mf_stabilize(m: &GradedModulePresentation, steps: usize) -> Result<Stabilization> {
    if m.weights() != [1, 1] {
        return Err(Error::InvalidArgument("expected a module over k[U, V] with deg U = deg V = 1".into()));
    }
    let field = m.field();
    let mut betti = vec![m.generators().to_vec()];
    let f0 = FreeS { field, gens: m.generators().to_vec() };
    let relations = SMap {
        source: FreeS { field, gens: m.relations().to_vec() },
        target: FreeS { field, gens: f0.gens.clone() },
        cols: (0..m.relations().len()).map(|j| m.matrix().iter().map(|row| reduce(&row[j])).collect()).collect(),
    };
    let (lo, hi) = match (m.relations().iter().min(), m.relations().iter().max()) {
        (Some(&a), Some(&b)) => (a, b),
        _ => (0, -1),
    };
    let mut gens = minimal_generators(&f0, lo, hi, |e| relations.at(e));
    let mut d = SMap {
        source: FreeS { field, gens: gens.iter().map(|g| g.0).collect() },
        target: f0,
        cols: gens.drain(..).map(|g| g.1).collect(),
    };
    for step in 1..=steps {
        betti.push(d.source.gens.clone());
        if twist_of(&d.target.gens, &d.source.gens).is_some() {
            let r = d.source.gens.len();
            let a: PolyMatrix = (0..r).map(|i| (0..r).map(|j| d.cols[j][i].clone()).collect()).collect();
            if let Some(b) = complement(&a, &d.target.gens, &d.source.gens, field) {
                let mf = MatrixFactorization::new(field, a, b, d.target.gens.clone(), d.source.gens.clone())?;
                if mf.is_valid() {
                    return Ok(Stabilization { mf, step, betti });
                }
            }
        }
        let next = kernel_generators(&d)?;
        d = SMap {
            source: FreeS { field, gens: next.iter().map(|g| g.0).collect() },
            target: FreeS { field, gens: d.source.gens.clone() },
            cols: next.into_iter().map(|g| g.1).collect(),
        };
    }
    Err(Error::Undecided(format!("no periodic step within {steps} steps (Betti degrees {betti:?})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronecker::IsoOutcome;
    use crate::mfnode::mf_iso_check;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn module(rels: &[&str]) -> GradedModulePresentation {
        let ps: Vec<Poly> = rels.iter().map(|r| Poly::parse(r, &super::super::NAMES, Q).unwrap()).collect();
        GradedModulePresentation::quotient(Q, vec![1, 1], &ps).unwrap()
    }

    #[test]
    fn residue_field() {
        let s = mf_stabilize(&module(&["U", "V"]), 8).unwrap();
        assert_eq!(s.step, 2);
        assert_eq!(s.betti, vec![vec![0], vec![1, 1], vec![2, 2]]);
        let p = MatrixFactorization::p(Q);
        assert_eq!(mf_iso_check(&s.mf, &p.direct_sum(&p.shift())).unwrap(), IsoOutcome::Isomorphic);
    }

    #[test]
    fn cyclic_modules() {
        let s = mf_stabilize(&module(&["U"]), 8).unwrap();
        assert_eq!(s.step, 1);
        assert_eq!(s.mf, MatrixFactorization::q(Q));
        let s = mf_stabilize(&module(&["U V"]), 8).unwrap();
        assert_eq!(s.mf.rank(), 0);
        // the syzygy of S/(U^2) is U^2 S, a twist of US
        let s = mf_stabilize(&module(&["U^2"]), 8).unwrap();
        assert_eq!(s.step, 2);
        assert_eq!(mf_iso_check(&s.mf, &MatrixFactorization::p(Q)).unwrap(), IsoOutcome::Isomorphic);
    }
}
