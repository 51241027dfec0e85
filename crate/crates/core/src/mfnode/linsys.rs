//! Homogeneous polynomial matrix equations as finite linear systems.

use std::collections::HashMap;

use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::poly::{monomials, Exponents, Poly};

use super::PolyMatrix;

/// A matrix of unknown homogeneous polynomials in `U, V`; entry `(r, c)` has
/// a fixed degree (no unknowns when it is negative).
#[derive(Clone, Debug)]
pub(crate) struct Block {
    rows: usize,
    cols: usize,
    mons: Vec<Vec<Vec<Exponents>>>,
    start: Vec<Vec<usize>>,
    offset: usize,
    len: usize,
}

impl Block {
    pub fn new(rows: usize, cols: usize, offset: usize, degree: impl Fn(usize, usize) -> i64) -> Self {
        let mut mons = vec![vec![Vec::new(); cols]; rows];
        let mut start = vec![vec![0; cols]; rows];
        let mut len = 0;
        for r in 0..rows {
            for c in 0..cols {
                start[r][c] = offset + len;
                let d = degree(r, c);
                if d >= 0 {
                    mons[r][c] = monomials(&[1, 1], d as u32);
                    len += mons[r][c].len();
                }
            }
        }
        Block { rows, cols, mons, start, offset, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn index(&self, r: usize, c: usize, mon: &[u32]) -> Option<usize> {
        self.mons[r][c].iter().position(|m| m == mon).map(|k| self.start[r][c] + k)
    }

    /// Variables of entry `(r, c)` with their monomials.
    fn entry(&self, r: usize, c: usize) -> impl Iterator<Item = (usize, &Exponents)> {
        self.mons[r][c].iter().enumerate().map(move |(k, m)| (self.start[r][c] + k, m))
    }

    /// The polynomial matrix with coefficients `v[offset..offset + len]`.
    pub fn to_matrix(&self, v: &[Scalar], field: FieldSpec) -> PolyMatrix {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        self.entry(r, c).fold(Poly::zero(field, 2), |acc, (i, m)| {
                            acc.add(&Poly::monomial(field, m.clone(), v[i].clone()))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Coordinates of `m` (relative to `offset`), if every term fits.
    pub fn to_vec(&self, m: &PolyMatrix, field: FieldSpec) -> Option<Vec<Scalar>> {
        let mut v = vec![field.zero(); self.len];
        for (r, row) in m.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                for (e, x) in p.terms() {
                    v[self.index(r, c, e)? - self.offset] = x.clone();
                }
            }
        }
        Some(v)
    }
}

type RowKey = (usize, usize, usize, Exponents);

/// Linear equations `Σ (fixed · unknown)` collected coefficient by coefficient.
pub(crate) struct System {
    field: FieldSpec,
    ncols: usize,
    rows: HashMap<RowKey, usize>,
    entries: Vec<(usize, usize, Scalar)>,
}

fn add_exps(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl System {
    pub fn new(field: FieldSpec, ncols: usize) -> Self {
        System { field, ncols, rows: HashMap::new(), entries: Vec::new() }
    }

    fn row(&mut self, key: (usize, usize, usize, Exponents)) -> usize {
        let n = self.rows.len();
        *self.rows.entry(key).or_insert(n)
    }

    /// Adds `sign · p · X` to equation block `eq`.
    pub fn left(&mut self, eq: usize, p: &PolyMatrix, x: &Block, sign: i64) {
        let s = self.field.from_i64(sign);
        for (k, prow) in p.iter().enumerate() {
            for (i, pe) in prow.iter().enumerate() {
                for j in 0..x.cols {
                    for (col, m) in x.entry(i, j) {
                        for (e, c) in pe.terms() {
                            let row = self.row((eq, k, j, add_exps(e, m)));
                            self.entries.push((row, col, &s * c));
                        }
                    }
                }
            }
        }
    }

    /// Adds `sign · X · p` to equation block `eq`.
    pub fn right(&mut self, eq: usize, x: &Block, p: &PolyMatrix, sign: i64) {
        let s = self.field.from_i64(sign);
        for i in 0..x.rows {
            for (j, pj) in p.iter().enumerate().take(x.cols) {
                for (col, m) in x.entry(i, j) {
                    for (l, pe) in pj.iter().enumerate() {
                        for (e, c) in pe.terms() {
                            let row = self.row((eq, i, l, add_exps(m, e)));
                            self.entries.push((row, col, &s * c));
                        }
                    }
                }
            }
        }
    }

    /// Adds `sign · p` times the scalar unknown `col` to equation block `eq`.
    pub fn constant(&mut self, eq: usize, p: &PolyMatrix, col: usize, sign: i64) {
        let s = self.field.from_i64(sign);
        for (k, prow) in p.iter().enumerate() {
            for (j, pe) in prow.iter().enumerate() {
                for (e, c) in pe.terms() {
                    let row = self.row((eq, k, j, e.clone()));
                    self.entries.push((row, col, &s * c));
                }
            }
        }
    }

    fn assemble(&self, nrows: usize, row_of: impl Fn(&RowKey, usize) -> usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, nrows, self.ncols);
        let mut keys: Vec<(&RowKey, &usize)> = self.rows.iter().collect();
        keys.sort_by_key(|(_, &r)| r);
        let map: Vec<usize> = keys.iter().map(|(k, &r)| row_of(k, r)).collect();
        for (r, c, v) in &self.entries {
            let rr = map[*r];
            let old = m.get(rr, *c).clone();
            m.set(rr, *c, &old + v);
        }
        m
    }

    /// The coefficient matrix, one row per (equation entry, monomial).
    pub fn matrix(&self) -> Matrix {
        self.assemble(self.rows.len(), |_, r| r)
    }

    /// The coefficient matrix with rows indexed by the unknowns of `target`,
    /// for equations of block 0 whose entries are shaped like `target`.
    pub fn matrix_on(&self, target: &Block) -> Matrix {
        self.assemble(target.len(), |(_, r, c, e), _| {
            target.index(*r, *c, e).expect("term of the expected degree") - target.offset()
        })
    }
}
