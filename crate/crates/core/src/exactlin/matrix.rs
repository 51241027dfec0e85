//! Dense matrices over an exact field.
//!
//! Tensor convention (used crate-wide): the basis of `X ⊗ Y` is
//! `x_i ⊗ y_j` at index `i * dim(Y) + j`, i.e. the second factor runs
//! fastest. `tensor(a, b)` is the Kronecker product in that basis.

use std::fmt;

use super::elim;
use super::field::{FieldSpec, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over {}](", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, ")")
    }
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(s) = data.iter().find(|s| s.field() != field) {
            return Err(Error::InvalidField(format!("entry over {} in a matrix over {field}", s.field())));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Self::from_fn(field, n, n, |r, c| if r == c { field.one() } else { field.zero() })
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Integer entries, row-major. Panics on ragged input.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Self::from_fn(field, nr, nc, |r, c| field.from_i64(rows[r][c]))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { data: self.data.iter().map(|x| x * s).collect(), ..self.clone() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { data: self.data.iter().map(|x| -x).collect(), ..self.clone() }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add: shape mismatch");
        Matrix { data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(), ..self.clone() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub: shape mismatch");
        Matrix { data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "mul: inner dimension mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    /// Checked product for user-supplied shapes.
    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        Self::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack: column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Self::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Self::from_fn(self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    pub fn column(&self, c: usize) -> Matrix {
        self.select_columns(&[c])
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let (r0, c0) = (self.rows, self.cols);
        Self::from_fn(self.field, r0 + other.rows, c0 + other.cols, |r, c| {
            if r < r0 && c < c0 {
                self.get(r, c).clone()
            } else if r >= r0 && c >= c0 {
                other.get(r - r0, c - c0).clone()
            } else {
                self.field.zero()
            }
        })
    }

    /// Kronecker product, second factor fastest.
    pub fn tensor(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "tensor: field mismatch");
        let (br, bc) = (other.rows, other.cols);
        Self::from_fn(self.field, self.rows * br, self.cols * bc, |r, c| {
            self.get(r / br, c / bc) * other.get(r % br, c % bc)
        })
    }

    pub fn rank(&self) -> usize {
        elim::rank(self)
    }

    /// Columns form a basis of the right kernel.
    pub fn kernel_basis(&self) -> Matrix {
        elim::kernel(self)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut w = self.clone();
        let p = elim::gauss_jordan(&mut w);
        (w, p)
    }

    /// Indices of columns forming a basis of the column space.
    pub fn pivot_columns(&self) -> Vec<usize> {
        match self.field {
            FieldSpec::Rationals => elim::rational_pivots(self),
            FieldSpec::Prime(_) => self.rref().1,
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (red, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(self.field, n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Some solution `x` of `self * x = rhs`, if one exists.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let n = self.cols;
        let (red, piv) = self.hstack(rhs).rref();
        if piv.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, n, rhs.cols);
        for (i, &p) in piv.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(p, c, red.get(i, n + c).clone());
            }
        }
        Some(x)
    }

    /// Projection of the codomain onto a complement of the column space,
    /// together with a section of that complement.
    ///
    /// `projection * self = 0`, `projection * section = I`, and
    /// `projection` has `rows - rank` rows. The complement is spanned by
    /// standard basis vectors.
    pub fn cokernel_with_section(&self) -> (Matrix, Matrix) {
        let f = self.field;
        let d = self.rows;
        let image = self.select_columns(&self.pivot_columns());
        let r = image.cols();
        // pivots of the transposed image name coordinates already covered
        let covered = image.transpose().pivot_columns();
        let free: Vec<usize> = (0..d).filter(|i| !covered.contains(i)).collect();
        let section = Matrix::from_fn(f, d, free.len(), |row, c| if row == free[c] { f.one() } else { f.zero() });
        let basis = image.hstack(&section);
        let inv = basis.inverse().expect("image plus complement is a basis");
        let projection = inv.select_rows(&(r..d).collect::<Vec<_>>());
        (projection, section)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(Q, 0, 0).rank(), 0);
        assert_eq!(Matrix::identity(Q, 3).rank(), 3);
        assert_eq!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 4).kernel_basis().cols(), 0);
        let z = Matrix::zeros(Q, 2, 3);
        let k = z.kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rank(), 3);
        let m = Matrix::from_i64(Q, &[&[1, 1, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn kernel_over_prime_field() {
        let f = FieldSpec::prime(5).unwrap();
        let m = Matrix::from_i64(f, &[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn cokernel_examples() {
        let (p, _) = Matrix::identity(Q, 2).cokernel_with_section();
        assert_eq!(p.rows(), 0);
        let (p, s) = Matrix::zeros(Q, 1, 1).cokernel_with_section();
        assert_eq!(p, Matrix::identity(Q, 1));
        assert_eq!(s, Matrix::identity(Q, 1));
        let m = Matrix::from_i64(Q, &[&[1], &[0]]);
        let (p, s) = m.cokernel_with_section();
        assert_eq!(p.rows(), 1);
        assert!(p.mul(&m).is_zero());
        assert_eq!(p.rank(), 1);
        assert_eq!(p.mul(&s), Matrix::identity(Q, 1));
        // second coordinate up to scalar
        assert!(p.get(0, 0).is_zero() && !p.get(0, 1).is_zero());
    }

    #[test]
    fn tensor_identities() {
        let t = Matrix::identity(Q, 2).tensor(&Matrix::identity(Q, 3));
        assert_eq!(t, Matrix::identity(Q, 6));
        let a = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        assert_eq!(a.tensor(&Matrix::identity(Q, 1)), a);
        // second factor fastest
        let b = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        let ab = a.tensor(&b);
        assert_eq!(ab.get(0, 1).to_i64(), Some(1));
        assert_eq!(ab.get(1, 2).to_i64(), Some(2));
    }

    #[test]
    fn inverse_and_solve() {
        let a = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(Q, 2));
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let rhs = Matrix::from_i64(Q, &[&[3], &[2]]);
        let x = a.solve(&rhs).unwrap();
        assert_eq!(a.mul(&x), rhs);
        assert!(Matrix::from_i64(Q, &[&[1, 1], &[1, 1]]).solve(&rhs).is_none());
    }
}
