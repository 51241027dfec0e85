//! Isomorphism testing for representations.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactlin::{FieldSpec, Scalar};

use super::hom::{combine, hom_basis, RepMorphism};
use super::rep::KroneckerRep;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic,
    NotIsomorphic,
    Undecided,
}

impl IsoOutcome {
    pub fn is_iso(self) -> bool {
        self == IsoOutcome::Isomorphic
    }
}

impl fmt::Display for IsoOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsoOutcome::Isomorphic => "isomorphic",
            IsoOutcome::NotIsomorphic => "not-isomorphic",
            IsoOutcome::Undecided => "undecided",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct IsoOptions {
    pub trials: usize,
    pub seed: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { trials: 20, seed: 0x5eed }
    }
}

/// Random element of the span of `basis`.
pub(crate) fn random_coeffs<R: Rng + ?Sized>(field: FieldSpec, k: usize, rng: &mut R) -> Vec<Scalar> {
    (0..k)
        .map(|_| match field {
            FieldSpec::Rationals => field.from_i64(rng.gen_range(-50..=50)),
            FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
        })
        .collect()
}

pub fn iso_check(x: &KroneckerRep, y: &KroneckerRep) -> Result<IsoOutcome> {
    iso_check_with(x, y, IsoOptions::default())
}

pub fn iso_check_with(x: &KroneckerRep, y: &KroneckerRep, opts: IsoOptions) -> Result<IsoOutcome> {
    x.check_compatible(y)?;
    if x.dim() != y.dim() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    if x.is_zero() {
        return Ok(IsoOutcome::Isomorphic);
    }
    let basis = hom_basis(x, y)?;
    if basis.len() != hom_basis(x, x)?.len() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    if basis.is_empty() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let field = x.field();
    let zero = RepMorphism::zero(x, y);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.trials {
        let g = combine(&basis, &random_coeffs(field, basis.len(), &mut rng), &zero);
        if g.is_iso() {
            return Ok(IsoOutcome::Isomorphic);
        }
    }
    if let FieldSpec::Prime(p) = field {
        if p <= 7 && basis.len() <= 4 {
            return Ok(enumerate(&basis, &zero, p));
        }
    }
    Ok(IsoOutcome::Undecided)
}

fn enumerate(basis: &[RepMorphism], zero: &RepMorphism, p: u32) -> IsoOutcome {
    let field = FieldSpec::Prime(p);
    let total = (p as usize).pow(basis.len() as u32);
    for code in 0..total {
        let mut c = code;
        let coeffs: Vec<Scalar> = (0..basis.len())
            .map(|_| {
                let v = c % p as usize;
                c /= p as usize;
                field.from_i64(v as i64)
            })
            .collect();
        if combine(basis, &coeffs, zero).is_iso() {
            return IsoOutcome::Isomorphic;
        }
    }
    IsoOutcome::NotIsomorphic
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;

    #[test]
    fn basic_outcomes() {
        let q = FieldSpec::Rationals;
        let p2 = KroneckerRep::projective(2, 3, q).unwrap();
        assert_eq!(iso_check(&p2, &p2).unwrap(), IsoOutcome::Isomorphic);
        let p1 = KroneckerRep::projective(1, 3, q).unwrap();
        let i2 = KroneckerRep::injective(2, 3, q).unwrap();
        assert_eq!(iso_check(&p1, &i2).unwrap(), IsoOutcome::NotIsomorphic);
    }

    #[test]
    fn regular_parameters_distinguished() {
        let f = FieldSpec::prime(5).unwrap();
        let one = Matrix::from_i64(f, &[&[1]]);
        let x = KroneckerRep::new(2, f, 1, 1, vec![one.clone(), Matrix::from_i64(f, &[&[2]])]).unwrap();
        let y = KroneckerRep::new(2, f, 1, 1, vec![one.clone(), Matrix::from_i64(f, &[&[3]])]).unwrap();
        assert_eq!(iso_check(&x, &y).unwrap(), IsoOutcome::NotIsomorphic);
        let z = KroneckerRep::new(2, f, 1, 1, vec![Matrix::from_i64(f, &[&[2]]), Matrix::from_i64(f, &[&[4]])]).unwrap();
        assert_eq!(iso_check(&x, &z).unwrap(), IsoOutcome::Isomorphic);
    }
}
