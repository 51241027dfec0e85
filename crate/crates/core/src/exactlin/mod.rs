//! Exact dense linear algebra over the rationals and prime fields.

mod elim;
mod field;
mod matrix;
mod modular;

pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;

use rand::Rng;

/// Random matrix with small integer entries in `[-range, range]`.
pub fn random_matrix<R: Rng + ?Sized>(field: FieldSpec, rows: usize, cols: usize, range: i64, rng: &mut R) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| field.from_i64(rng.gen_range(-range..=range)))
}
