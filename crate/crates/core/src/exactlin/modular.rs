//! Reduced row echelon form over the rationals by elimination modulo word-sized
//! primes, Chinese remaindering and rational reconstruction.
//!
//! A candidate form `R` with pivots `P` is accepted only after checking that
//! every row `a` of the input equals `sum_i a[P_i] R_i`. Then the row space of
//! the input lies in that of `R`, and since reduction mod `p` never raises the
//! rank, the two spaces agree and `R` is the reduced form.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

const MAX_PRIMES: usize = 48;

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(MAX_PRIMES);
        let mut c: u64 = (1 << 31) - 1;
        while out.len() < MAX_PRIMES {
            if (2..).take_while(|d| d * d <= c).all(|d| !c.is_multiple_of(d)) {
                out.push(c);
            }
            c -= 2;
        }
        out
    })
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reduced form mod `p`: pivots and, for each pivot row, its entries.
fn rref_mod(rows: &[Vec<(usize, BigInt)>], ncols: usize, p: u64) -> (Vec<usize>, Vec<Vec<u64>>) {
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            let mut v = vec![0u64; ncols];
            for (c, x) in row {
                v[*c] = x.mod_floor(&pb).to_u64().expect("residue below p");
            }
            v
        })
        .collect();
    let nr = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nr {
            break;
        }
        let Some(k) = (r..nr).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, k);
        let inv = inv_mod(a[r][c], p);
        for x in a[r][c..].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = std::mem::take(&mut a[r]);
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = p - row[c];
            for j in c..ncols {
                if pivot_row[j] != 0 {
                    row[j] = (row[j] + f * pivot_row[j]) % p;
                }
            }
        }
        a[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    a.truncate(pivots.len());
    (pivots, a)
}

fn reconstruct(a: &BigInt, m: &BigInt, bound: &BigInt) -> Option<BigRational> {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() || t1.abs() > *bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Pivots and pivot rows of the reduced row echelon form of an integer matrix
/// given by its sparse rows, or `None` if no certificate was found.
pub(crate) fn rref_rational(
    rows: &[Vec<(usize, BigInt)>],
    ncols: usize,
) -> Option<(Vec<usize>, Vec<Vec<BigRational>>)> {
    let mut best: Option<Vec<usize>> = None;
    let mut residues: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::one();
    for &p in primes() {
        let (piv, red) = rref_mod(rows, ncols, p);
        let better = match &best {
            None => true,
            Some(b) => piv.len() > b.len() || (piv.len() == b.len() && piv < *b),
        };
        if better {
            best = Some(piv);
            residues = red.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            modulus = BigInt::from(p);
        } else if best.as_ref() == Some(&piv) {
            // x ≡ old mod M, x ≡ new mod p
            let pb = BigInt::from(p);
            let m_inv = BigInt::from(inv_mod((&modulus % &pb).to_u64().expect("residue"), p));
            for (old, new) in residues.iter_mut().zip(red) {
                for (o, n) in old.iter_mut().zip(new) {
                    let delta = (BigInt::from(n) - &*o).mod_floor(&pb) * &m_inv % &pb;
                    *o += &modulus * delta;
                }
            }
            modulus *= &pb;
        } else {
            continue;
        }
        let pivots = best.as_ref().expect("set above");
        let bound = (&modulus / 2u32).sqrt();
        let cand: Option<Vec<Vec<BigRational>>> = residues
            .iter()
            .map(|row| row.iter().map(|x| reconstruct(x, &modulus, &bound)).collect())
            .collect();
        if let Some(cand) = cand {
            if certify(rows, ncols, pivots, &cand) {
                return Some((pivots.clone(), cand));
            }
        }
    }
    None
}

fn certify(rows: &[Vec<(usize, BigInt)>], ncols: usize, pivots: &[usize], red: &[Vec<BigRational>]) -> bool {
    rows.iter().all(|row| {
        let mut want = vec![BigRational::zero(); ncols];
        let mut coeffs = Vec::new();
        for (c, x) in row {
            want[*c] = BigRational::from_integer(x.clone());
            if let Ok(i) = pivots.binary_search(c) {
                coeffs.push((i, BigRational::from_integer(x.clone())));
            }
        }
        let mut got = vec![BigRational::zero(); want.len()];
        for (i, a) in &coeffs {
            for (g, r) in got.iter_mut().zip(&red[*i]) {
                if !r.is_zero() {
                    *g += a * r;
                }
            }
        }
        got == want
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(m: &[&[i64]]) -> Vec<Vec<(usize, BigInt)>> {
        m.iter()
            .map(|r| r.iter().enumerate().filter(|(_, x)| **x != 0).map(|(c, x)| (c, BigInt::from(*x))).collect())
            .collect()
    }

    #[test]
    fn recovers_fractions() {
        let (piv, red) = rref_rational(&sparse(&[&[3, 1, 0], &[6, 2, 7]]), 3).unwrap();
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(red[0][1], BigRational::new(1.into(), 3.into()));
    }

    #[test]
    fn unlucky_prime_is_outvoted() {
        let p = (1i64 << 31) - 1;
        let (piv, _) = rref_rational(&sparse(&[&[p, 1], &[0, 1]]), 2).unwrap();
        assert_eq!(piv, vec![0, 1]);
    }
}
