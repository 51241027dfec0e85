//! Elimination kernels.
//!
//! Over the rationals rows are scaled to integers. Rank uses fraction-free
//! (Bareiss) elimination; reduced forms are computed modularly and certified,
//! with Bareiss plus back-substitution as a fallback. Over prime fields plain
//! Gauss-Jordan is used.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{FieldSpec, Scalar};
use super::matrix::Matrix;

/// Scales every row of a rational matrix to integers (row rank is unchanged).
fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row: Vec<&BigRational> = (0..m.cols())
                .map(|c| m.get(r, c).as_rational().expect("rational matrix"))
                .collect();
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect()
}

/// Integer matrix in row echelon form produced by Bareiss elimination.
struct IntEchelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Fraction-free forward elimination: every update
/// `a_ij <- (a_kk a_ij - a_ik a_kj) / p_prev` divides exactly.
fn bareiss(m: &Matrix) -> IntEchelon {
    let mut a = integer_rows(m);
    let (nr, nc) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nr {
            let lead = a[i][c].clone();
            for j in c + 1..nc {
                let v = &a[r][c] * &a[i][j] - &lead * &a[r][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(pivots.len());
    IntEchelon { rows: a, pivots }
}

/// Reduced rows from an integer echelon form, by back-substitution.
fn reduce_echelon(ech: IntEchelon, ncols: usize) -> Vec<Vec<BigRational>> {
    let mut out: Vec<Vec<BigRational>> = Vec::with_capacity(ech.pivots.len());
    for (i, &pc) in ech.pivots.iter().enumerate().rev() {
        let lead = BigRational::from_integer(ech.rows[i][pc].clone());
        let mut row: Vec<BigRational> = (0..ncols)
            .map(|j| if j < pc { BigRational::zero() } else { BigRational::from_integer(ech.rows[i][j].clone()) / &lead })
            .collect();
        // out holds the reduced rows below, last pivot first
        for (k, below) in out.iter().enumerate() {
            let bc = ech.pivots[ech.pivots.len() - 1 - k];
            let f = row[bc].clone();
            if !f.is_zero() {
                for j in bc..ncols {
                    if !below[j].is_zero() {
                        row[j] -= &f * &below[j];
                    }
                }
            }
        }
        out.push(row);
    }
    out.reverse();
    out
}

fn sparse_integer_rows(m: &Matrix) -> Vec<Vec<(usize, BigInt)>> {
    integer_rows(m)
        .into_iter()
        .map(|r| r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect()
}

/// Pivots and nonzero rows of the reduced row echelon form of a rational matrix.
fn rational_rref(m: &Matrix) -> (Vec<usize>, Vec<Vec<BigRational>>) {
    if let Some(out) = modular_rref(m) {
        return out;
    }
    let ech = bareiss(m);
    let pivots = ech.pivots.clone();
    (pivots, reduce_echelon(ech, m.cols()))
}

/// In-place reduced row echelon form over any field; returns pivot columns.
pub(crate) fn gauss_jordan(m: &mut Matrix) -> Vec<usize> {
    if m.field() != FieldSpec::Rationals || m.rows() == 0 {
        return plain_gauss_jordan(m);
    }
    let (pivots, rows) = rational_rref(m);
    let (nr, nc) = (m.rows(), m.cols());
    *m = Matrix::from_fn(FieldSpec::Rationals, nr, nc, |r, c| {
        rows.get(r).map_or_else(|| Scalar::Rat(BigRational::zero()), |row| Scalar::Rat(row[c].clone()))
    });
    pivots
}

fn plain_gauss_jordan(m: &mut Matrix) -> Vec<usize> {
    let (nr, nc) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m.get(r, c).inv();
        for j in c..nc {
            let v = m.get(r, j) * &inv;
            m.set(r, j, v);
        }
        for i in 0..nr {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in c..nc {
                if m.get(r, j).is_zero() {
                    continue;
                }
                let v = m.get(i, j) - &(&factor * m.get(r, j));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(m: &Matrix) -> usize {
    match m.field() {
        FieldSpec::Rationals => bareiss(m).pivots.len(),
        FieldSpec::Prime(_) => {
            let mut w = m.clone();
            gauss_jordan(&mut w).len()
        }
    }
}

pub(crate) fn kernel(m: &Matrix) -> Matrix {
    let f = m.field();
    let nc = m.cols();
    match f {
        FieldSpec::Rationals => {
            let (pivots, rows) = rational_rref(m);
            let free: Vec<usize> = (0..nc).filter(|c| pivots.binary_search(c).is_err()).collect();
            let mut out = Matrix::zeros(f, nc, free.len());
            for (k, &fc) in free.iter().enumerate() {
                out.set(fc, k, f.one());
                for (i, &pc) in pivots.iter().enumerate() {
                    out.set(pc, k, Scalar::Rat(-rows[i][fc].clone()));
                }
            }
            out
        }
        FieldSpec::Prime(_) => {
            let mut w = m.clone();
            let pivots = gauss_jordan(&mut w);
            let free: Vec<usize> = (0..nc).filter(|c| !pivots.contains(c)).collect();
            let mut out = Matrix::zeros(f, nc, free.len());
            for (k, &fc) in free.iter().enumerate() {
                out.set(fc, k, f.one());
                for (i, &pc) in pivots.iter().enumerate() {
                    out.set(pc, k, -w.get(i, fc));
                }
            }
            out
        }
    }
}

pub(crate) fn rational_pivots(m: &Matrix) -> Vec<usize> {
    rational_rref(m).0
}

/// Reduced form through the fraction-free path only.
#[cfg(test)]
pub(crate) fn bareiss_rref(m: &Matrix) -> (Vec<usize>, Vec<Vec<BigRational>>) {
    let ech = bareiss(m);
    let pivots = ech.pivots.clone();
    (pivots, reduce_echelon(ech, m.cols()))
}

pub(crate) fn modular_rref(m: &Matrix) -> Option<(Vec<usize>, Vec<Vec<BigRational>>)> {
    super::modular::rref_rational(&sparse_integer_rows(m), m.cols())
}
