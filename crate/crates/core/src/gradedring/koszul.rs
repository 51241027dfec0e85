//! Koszul cohomology `H^i(K(a_1, ..., a_r) ⊗ M)` of a graded module, one
//! internal degree at a time.
//!
//! `K(a)` is `A -a-> A(deg a)` in cohomological degrees 0 and 1, so
//! `K^i_t = ⊕_{|S|=i} M_{t + deg a_S}`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::poly::{monomials, Exponents, Poly};

/// `M = coker(⊕_j A(-r_j) -P-> ⊕_i A(-g_i))` over `A = k[x_1..x_n]` with
/// positive variable degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModulePresentation {
    field: FieldSpec,
    weights: Vec<u32>,
    generators: Vec<i64>,
    relations: Vec<i64>,
    /// `matrix[i][j]`: coefficient of generator `i` in relation `j`.
    matrix: Vec<Vec<Poly>>,
}

impl GradedModulePresentation {
    pub fn new(
        field: FieldSpec,
        weights: Vec<u32>,
        generators: Vec<i64>,
        relations: Vec<i64>,
        matrix: Vec<Vec<Poly>>,
    ) -> Result<Self> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(Error::InvalidArgument("variable degrees must be positive".into()));
        }
        if matrix.len() != generators.len() || matrix.iter().any(|r| r.len() != relations.len()) {
            return Err(Error::DimensionMismatch(format!(
                "presentation matrix must be {} x {}",
                generators.len(),
                relations.len()
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if p.field() != field || p.nvars() != weights.len() {
                    return Err(Error::DimensionMismatch(format!("entry ({i}, {j}) lives in another ring")));
                }
                let want = relations[j] - generators[i];
                let ok = p.is_zero() || p.homogeneous_degree(&weights).map(i64::from) == Some(want);
                if !ok {
                    return Err(Error::InvalidArgument(format!(
                        "entry ({i}, {j}) is not homogeneous of degree {want}"
                    )));
                }
            }
        }
        Ok(GradedModulePresentation { field, weights, generators, relations, matrix })
    }

    /// `A` itself.
    pub fn ring(field: FieldSpec, weights: Vec<u32>) -> Result<Self> {
        Self::quotient(field, weights, &[])
    }

    /// `A/(f_1, ..., f_k)` on one generator of degree 0.
    pub fn quotient(field: FieldSpec, weights: Vec<u32>, relations: &[Poly]) -> Result<Self> {
        let mut degs = Vec::with_capacity(relations.len());
        for f in relations {
            degs.push(f.homogeneous_degree(&weights).map(i64::from).ok_or_else(|| {
                Error::InvalidArgument("relations must be nonzero and homogeneous".into())
            })?);
        }
        Self::new(field, weights, vec![0], degs, vec![relations.to_vec()])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn relations(&self) -> &[i64] {
        &self.relations
    }

    /// `matrix()[i][j]`: coefficient of generator `i` in relation `j`.
    pub fn matrix(&self) -> &[Vec<Poly>] {
        &self.matrix
    }

    /// The quotient `M / (a_1, ..., a_r) M`.
    pub fn quotient_by(&self, seq: &[Poly]) -> Result<Self> {
        let mut relations = self.relations.clone();
        let mut matrix = self.matrix.clone();
        let zero = Poly::zero(self.field, self.weights.len());
        for a in seq {
            let Some(e) = a.homogeneous_degree(&self.weights) else { continue };
            for (i, &g) in self.generators.iter().enumerate() {
                relations.push(g + e as i64);
                for (k, row) in matrix.iter_mut().enumerate() {
                    row.push(if k == i { a.clone() } else { zero.clone() });
                }
            }
        }
        Self::new(self.field, self.weights.clone(), self.generators.clone(), relations, matrix)
    }

    /// The presentation matrix evaluated at a point.
    fn evaluate(&self, point: &[Scalar]) -> Matrix {
        Matrix::from_fn(self.field, self.generators.len(), self.relations.len(), |i, j| {
            self.matrix[i][j].evaluate(point)
        })
    }
}

/// `M_d` as a quotient of `F0_d`.
struct Piece {
    index: HashMap<(usize, Exponents), usize>,
    projection: Matrix,
    section: Matrix,
    basis: Vec<(usize, Exponents)>,
}

impl Piece {
    fn dim(&self) -> usize {
        self.projection.rows()
    }
}

fn piece(m: &GradedModulePresentation, d: i64) -> Piece {
    let f = m.field;
    let mut basis = Vec::new();
    for (i, &g) in m.generators.iter().enumerate() {
        if d >= g {
            basis.extend(monomials(&m.weights, (d - g) as u32).into_iter().map(|mu| (i, mu)));
        }
    }
    let index: HashMap<(usize, Exponents), usize> = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
    let mut cols = Vec::new();
    for (j, &r) in m.relations.iter().enumerate() {
        if d < r {
            continue;
        }
        for mu in monomials(&m.weights, (d - r) as u32) {
            let mut col = vec![f.zero(); basis.len()];
            for (i, row) in m.matrix.iter().enumerate() {
                for (e, c) in row[j].terms() {
                    let key = (i, e.iter().zip(&mu).map(|(a, b)| a + b).collect::<Exponents>());
                    let k = index[&key];
                    col[k] = &col[k] + c;
                }
            }
            cols.push(col);
        }
    }
    let image = Matrix::from_fn(f, basis.len(), cols.len(), |r, c| cols[c][r].clone());
    let (projection, section) = image.cokernel_with_section();
    Piece { index, projection, section, basis }
}

/// Multiplication by `a` from `M_d` to `M_{d+e}`.
fn multiply(m: &GradedModulePresentation, a: &Poly, from: &Piece, to: &Piece) -> Matrix {
    let f = m.field;
    let mut lifted = Matrix::zeros(f, to.basis.len(), from.dim());
    for c in 0..from.dim() {
        for (k, (i, mu)) in from.basis.iter().enumerate() {
            let s = from.section.get(k, c);
            if s.is_zero() {
                continue;
            }
            for (e, coef) in a.terms() {
                let key = (*i, e.iter().zip(mu).map(|(x, y)| x + y).collect::<Exponents>());
                let row = to.index[&key];
                let v = lifted.get(row, c) + &(s * coef);
                lifted.set(row, c, v);
            }
        }
    }
    to.projection.mul(&lifted)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finiteness {
    /// `M/(a)M` vanishes in every degree `>= witness`, so all cohomology has
    /// finite length.
    Finite { witness: i64 },
    /// `M/(a)M` is nonzero at the point below, so the top cohomology does
    /// not have finite length.
    Infinite { point: Vec<Scalar> },
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulReport {
    pub length: usize,
    /// Internal degrees `first..=last` covered by the tables.
    pub first: i64,
    pub last: i64,
    /// `terms[i][t - first] = dim K^i_t`.
    pub terms: Vec<Vec<usize>>,
    /// `cohomology[i][t - first] = dim H^i_t`.
    pub cohomology: Vec<Vec<usize>>,
    pub finiteness: Finiteness,
}

impl KoszulReport {
    pub fn h(&self, i: usize, t: i64) -> usize {
        if t < self.first || t > self.last {
            return 0;
        }
        self.cohomology[i][(t - self.first) as usize]
    }

    /// Total dimension of `H^i` over the computed degrees.
    pub fn total(&self, i: usize) -> usize {
        self.cohomology[i].iter().sum()
    }

    pub fn is_finite_length(&self) -> Option<bool> {
        match self.finiteness {
            Finiteness::Finite { .. } => Some(true),
            Finiteness::Infinite { .. } => Some(false),
            Finiteness::Undecided => None,
        }
    }
}

fn subsets(r: usize, i: usize) -> Vec<u32> {
    (0u32..1 << r).filter(|s| s.count_ones() as usize == i).collect()
}

/// Cohomology of `K(seq) ⊗ M` in internal degrees up to `degree_bound`.
pub fn koszul_cohomology(seq: &[Poly], m: &GradedModulePresentation, degree_bound: i64) -> Result<KoszulReport> {
    let r = seq.len();
    if r > 16 {
        return Err(Error::InvalidArgument("at most 16 Koszul elements".into()));
    }
    let mut degs = Vec::with_capacity(r);
    for a in seq {
        if a.field() != m.field || a.nvars() != m.weights.len() {
            return Err(Error::DimensionMismatch("Koszul element lives in another ring".into()));
        }
        degs.push(if a.is_zero() {
            0
        } else {
            a.homogeneous_degree(&m.weights)
                .map(i64::from)
                .ok_or_else(|| Error::InvalidArgument("Koszul elements must be homogeneous".into()))?
        });
    }
    let total_deg: i64 = degs.iter().sum();
    let Some(&gmin) = m.generators.iter().min() else {
        return Ok(KoszulReport {
            length: r,
            first: 0,
            last: -1,
            terms: vec![Vec::new(); r + 1],
            cohomology: vec![Vec::new(); r + 1],
            finiteness: Finiteness::Finite { witness: 0 },
        });
    };
    let first = gmin - total_deg;
    let last = degree_bound.max(first);
    let deg_of = |s: u32| (0..r).filter(|j| s >> j & 1 == 1).map(|j| degs[j]).sum::<i64>();

    let pieces: HashMap<i64, Piece> =
        (first..=last + total_deg).into_par_iter().map(|d| (d, piece(m, d))).collect();

    let per_degree: Vec<(Vec<usize>, Vec<usize>)> = (first..=last)
        .into_par_iter()
        .map(|t| {
            let sets: Vec<Vec<u32>> = (0..=r).map(|i| subsets(r, i)).collect();
            let dims: Vec<usize> =
                sets.iter().map(|ss| ss.iter().map(|&s| pieces[&(t + deg_of(s))].dim()).sum()).collect();
            let mut ranks = vec![0usize; r + 1];
            for i in 0..r {
                let mut d = Matrix::zeros(m.field, dims[i + 1], dims[i]);
                let mut col0 = 0;
                for &s in &sets[i] {
                    let src = &pieces[&(t + deg_of(s))];
                    let mut row0 = 0;
                    for &s2 in &sets[i + 1] {
                        let dst = &pieces[&(t + deg_of(s2))];
                        if s2 & s == s {
                            let j = (s2 ^ s).trailing_zeros() as usize;
                            let sign = (s & ((1 << j) - 1)).count_ones() % 2 == 1;
                            let mut blk = multiply(m, &seq[j], src, dst);
                            if sign {
                                blk = blk.neg();
                            }
                            for a in 0..blk.rows() {
                                for b in 0..blk.cols() {
                                    d.set(row0 + a, col0 + b, blk.get(a, b).clone());
                                }
                            }
                        }
                        row0 += dst.dim();
                    }
                    col0 += src.dim();
                }
                ranks[i + 1] = d.rank();
            }
            // ranks[i] = rank of d^{i-1}: K^{i-1} -> K^i
            let h = (0..=r).map(|i| dims[i] - ranks.get(i + 1).copied().unwrap_or(0) - ranks[i]).collect();
            (dims, h)
        })
        .collect();

    let mut terms = vec![Vec::new(); r + 1];
    let mut cohomology = vec![Vec::new(); r + 1];
    for (dims, h) in per_degree {
        for i in 0..=r {
            terms[i].push(dims[i]);
            cohomology[i].push(h[i]);
        }
    }
    let finiteness = finiteness(seq, m, degree_bound)?;
    Ok(KoszulReport { length: r, first, last, terms, cohomology, finiteness })
}

fn finiteness(seq: &[Poly], m: &GradedModulePresentation, bound: i64) -> Result<Finiteness> {
    let nq = m.quotient_by(seq)?;
    let gmax = *m.generators.iter().max().expect("nonempty");
    let wmax = *m.weights.iter().max().expect("nonempty") as i64;
    // N is generated in degrees <= gmax, so N_d = sum_i x_i N_{d - w_i} for d > gmax
    let mut run = 0;
    for d in gmax..=bound {
        if piece(&nq, d).dim() == 0 {
            run += 1;
            if run == wmax {
                return Ok(Finiteness::Finite { witness: d - wmax + 1 });
            }
        } else {
            run = 0;
        }
    }
    // a nonzero point where the fibre of N is nonzero lies on a line in Supp N
    let f = m.field;
    let n = m.weights.len();
    let values: Vec<Scalar> = match f {
        FieldSpec::Rationals => [-1, 0, 1, 2].iter().map(|&v| f.from_i64(v)).collect(),
        FieldSpec::Prime(p) => (0..p.min(4) as i64).map(|v| f.from_i64(v)).collect(),
    };
    let count = (values.len() as u64).saturating_pow(n as u32).min(4096);
    for code in 1..count {
        let mut c = code;
        let point: Vec<Scalar> = (0..n)
            .map(|_| {
                let v = values[(c % values.len() as u64) as usize].clone();
                c /= values.len() as u64;
                v
            })
            .collect();
        if point.iter().all(Scalar::is_zero) {
            continue;
        }
        if nq.evaluate(&point).rank() < nq.generators.len() {
            return Ok(Finiteness::Infinite { point });
        }
    }
    Ok(Finiteness::Undecided)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn regular_element() {
        let x = Poly::var(Q, 1, 0);
        let a = GradedModulePresentation::ring(Q, vec![1]).unwrap();
        let r = koszul_cohomology(&[x], &a, 6).unwrap();
        assert_eq!(r.total(0), 0);
        assert_eq!(r.total(1), 1);
        assert_eq!(r.h(1, -1), 1);
        assert_eq!(r.finiteness, Finiteness::Finite { witness: 1 });
    }

    #[test]
    fn zero_element() {
        let a = GradedModulePresentation::ring(Q, vec![1]).unwrap();
        let r = koszul_cohomology(&[Poly::zero(Q, 1)], &a, 5).unwrap();
        assert!((0..=5).all(|t| r.h(0, t) == 1 && r.h(1, t) == 1));
        assert_eq!(r.is_finite_length(), Some(false));
    }

    #[test]
    fn node_system_of_parameters() {
        let names = ["U", "V"];
        let uv = Poly::parse("U V", &names, Q).unwrap();
        let s = GradedModulePresentation::quotient(Q, vec![1, 1], &[uv]).unwrap();
        let a = Poly::parse("U - V", &names, Q).unwrap();
        let r = koszul_cohomology(&[a], &s, 8).unwrap();
        assert_eq!(r.finiteness, Finiteness::Finite { witness: 2 });
        assert_eq!(r.total(0), 0);
        assert_eq!(r.total(1), 2);
    }

    #[test]
    fn rejects_inhomogeneous_entries() {
        let p = Poly::parse("x1 + 1", &["x1"], Q).unwrap();
        assert!(GradedModulePresentation::new(Q, vec![1], vec![0], vec![1], vec![vec![p]]).is_err());
    }
}
