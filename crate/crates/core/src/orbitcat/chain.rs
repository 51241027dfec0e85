//! The transjective component of `D^b(mod kQ_n)` as a numerical model.
//!
//! `X_k = a^{-k} P_1` for `k >= 0`, and `X_k = a^{-k} P_1` is a preinjective
//! module in shift -1 for `k < 0` (so `X_{-1} = I_2[-1]`). Since `a` maps `X_k`
//! to `X_{k-1}`, Hom dimensions between `X_k[s]` and `X_l[t]` only depend on
//! `l - k` and `t - s`, and are read off the dimension vectors.

use std::fmt;

use rayon::prelude::*;

use crate::derivedh::{apply_a_power, FormalObject};
use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::kronecker::{BilinearForm, DimVector, KroneckerRep};

/// `F = a^{a_power}[-shift]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitFunctor {
    pub a_power: i64,
    pub shift: i64,
}

impl OrbitFunctor {
    /// `a[-1]`.
    pub const A_SHIFT: OrbitFunctor = OrbitFunctor { a_power: 1, shift: 1 };
    /// `a^2[-1]`, which is `τ[-1]` for (anti)symmetric forms.
    pub const TAU_SHIFT: OrbitFunctor = OrbitFunctor { a_power: 2, shift: 1 };
}

impl fmt::Display for OrbitFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{}[-{}]", self.a_power, self.shift)
    }
}

/// `X_index[shift]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainObject {
    pub index: i64,
    pub shift: i64,
}

impl ChainObject {
    pub const fn new(index: i64, shift: i64) -> Self {
        ChainObject { index, shift }
    }

    pub const P1: ChainObject = ChainObject::new(0, 0);
    pub const P2: ChainObject = ChainObject::new(1, 0);
    /// `I_2[-1] = a P_1`.
    pub const I2_MINUS: ChainObject = ChainObject::new(-1, 0);

    /// `a^k I_2`.
    pub const fn preinjective(k: i64) -> Self {
        ChainObject::new(-1 - k, 1)
    }
}

impl fmt::Display for ChainObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}[{}]", self.index, self.shift)
    }
}

#[derive(Clone, Debug)]
pub struct ChainModel {
    n: usize,
    dims: Vec<(u128, u128)>,
}

impl ChainModel {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("the chain model needs n >= 2, got {n}")));
        }
        Ok(ChainModel { n, dims: vec![(1, 0), (n as u128, 1)] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension vector of `a^{-k} P_1`, `k >= 0`.
    pub fn preprojective_dims(&mut self, k: usize) -> Result<(u128, u128)> {
        let n = self.n as u128;
        while self.dims.len() <= k {
            let l = self.dims.len();
            let (a, b) = (self.dims[l - 1], self.dims[l - 2]);
            let next = (
                n.checked_mul(a.0).and_then(|x| x.checked_sub(b.0)),
                n.checked_mul(a.1).and_then(|x| x.checked_sub(b.1)),
            );
            match next {
                (Some(x), Some(y)) => self.dims.push((x, y)),
                _ => return Err(Error::Overflow(format!("dimension vector of index {l}"))),
            }
        }
        Ok(self.dims[k])
    }

    /// Module part and its shift of `X_k`.
    pub fn module_of(&mut self, k: i64) -> Result<((u128, u128), i64)> {
        if k >= 0 {
            Ok((self.preprojective_dims(k as usize)?, 0))
        } else {
            let (a, b) = self.preprojective_dims((-k - 1) as usize)?;
            Ok(((b, a), -1))
        }
    }

    /// `dim Hom(X_0, X_m[e])` in `D^b`.
    fn h(&mut self, m: i64, e: i64) -> Result<u128> {
        Ok(match (m >= 0, e) {
            (true, 0) => self.preprojective_dims(m as usize)?.0,
            (false, 1) => self.preprojective_dims((-m - 1) as usize)?.1,
            _ => 0,
        })
    }

    /// `dim Hom(x, y)` in `D^b`.
    pub fn hom(&mut self, x: ChainObject, y: ChainObject) -> Result<u128> {
        self.h(y.index - x.index, y.shift - x.shift)
    }

    /// `dim Hom_D(x, y[j])` in the orbit category of `f`.
    pub fn orbit_hom(&mut self, f: OrbitFunctor, x: ChainObject, y: ChainObject, j: i64) -> Result<u128> {
        if f.shift <= 0 {
            return Err(Error::InvalidArgument("the orbit functor must lower shifts".into()));
        }
        // only i with y.shift + j - i·q - x.shift ∈ {0, 1} contribute
        let base = y.shift + j - x.shift;
        let mut total = 0u128;
        for e in [0, 1] {
            if (base - e).rem_euclid(f.shift) == 0 {
                let i = (base - e).div_euclid(f.shift);
                total += self.h(y.index - f.a_power * i - x.index, e)?;
            }
        }
        Ok(total)
    }

    /// `x ≅ y` in the orbit category of `f`.
    pub fn orbit_iso(&self, f: OrbitFunctor, x: ChainObject, y: ChainObject) -> bool {
        let ds = x.shift - y.shift;
        ds.rem_euclid(f.shift) == 0 && {
            let i = ds.div_euclid(f.shift);
            y.index == x.index - f.a_power * i
        }
    }

    /// The actual object `X_k[s]` for a form `pi` on `k^n`.
    pub fn realize(&self, x: ChainObject, field: FieldSpec, pi: &BilinearForm) -> Result<FormalObject> {
        let p1 = FormalObject::single(KroneckerRep::projective(1, self.n, field)?, 0);
        Ok(apply_a_power(&p1, -x.index, pi)?.shifted(x.shift))
    }

    pub fn dim_vector(&mut self, x: ChainObject) -> Result<(DimVector, i64)> {
        let ((a, b), s) = self.module_of(x.index)?;
        let a = usize::try_from(a).map_err(|_| Error::Overflow("dimension".into()))?;
        let b = usize::try_from(b).map_err(|_| Error::Overflow("dimension".into()))?;
        Ok((DimVector::new(a, b), s + x.shift))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanViolation {
    pub object: ChainObject,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub n: usize,
    pub functor: OrbitFunctor,
    pub candidate: Vec<ChainObject>,
    pub degrees: Vec<i64>,
    pub rigid: bool,
    pub checked: usize,
    pub violations: Vec<ScanViolation>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.rigid && self.violations.is_empty()
    }
}

/// Preprojectives `a^{-k} P_1` and preinjectives `a^k I_2` for
/// `0 <= k <= max_index`, plus `I_2[-1]`.
pub fn scan_family(max_index: usize) -> Vec<ChainObject> {
    let m = max_index as i64;
    let mut v: Vec<ChainObject> = (0..=m).map(|k| ChainObject::new(k, 0)).collect();
    v.extend((0..=m).map(ChainObject::preinjective));
    v.push(ChainObject::I2_MINUS);
    v
}

/// Checks that `candidate` is rigid in `degrees` and that every object of the
/// scan family not isomorphic to a summand of it has a nonzero Ext in one of
/// those degrees.
pub fn cluster_tilting_scan(
    n: usize,
    max_index: usize,
    functor: OrbitFunctor,
    candidate: &[ChainObject],
    degrees: &[i64],
) -> Result<ScanReport> {
    let model = ChainModel::new(n)?;
    let mut m = model.clone();
    let mut rigid = true;
    for &t in candidate {
        for &u in candidate {
            for &d in degrees {
                rigid &= m.orbit_hom(functor, t, u, d)? == 0;
            }
        }
    }
    let family = scan_family(max_index);
    let results: Vec<Result<Option<ScanViolation>>> = family
        .par_iter()
        .map(|&x| {
            let mut m = model.clone();
            if candidate.iter().any(|&t| m.orbit_iso(functor, t, x)) {
                return Ok(None);
            }
            let mut total = 0u128;
            for &t in candidate {
                for &d in degrees {
                    total += m.orbit_hom(functor, t, x, d)?;
                }
            }
            Ok((total == 0).then(|| ScanViolation {
                object: x,
                reason: format!("all Ext^{degrees:?} from the candidate vanish"),
            }))
        })
        .collect();
    let mut violations = Vec::new();
    for r in results {
        if let Some(v) = r? {
            violations.push(v);
        }
    }
    Ok(ScanReport {
        n,
        functor,
        candidate: candidate.to_vec(),
        degrees: degrees.to_vec(),
        rigid,
        checked: family.len(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_follow_recurrence() {
        let mut m = ChainModel::new(6).unwrap();
        assert_eq!(m.preprojective_dims(2).unwrap(), (35, 6));
        assert_eq!(m.module_of(-2).unwrap(), ((1, 6), -1));
        assert!(ChainModel::new(1).is_err());
    }

    #[test]
    fn ext_of_p1_in_model() {
        let mut m = ChainModel::new(6).unwrap();
        let f = OrbitFunctor::A_SHIFT;
        let p1 = ChainObject::P1;
        let got: Vec<u128> = (-1..=2).map(|j| m.orbit_hom(f, p1, p1, j).unwrap()).collect();
        assert_eq!(got, vec![6, 1, 0, 0]);
        // I_2[-1] = a P_1 is P_1[1] in the orbit category
        assert!(m.orbit_iso(f, ChainObject::I2_MINUS, ChainObject::new(0, 1)));
        assert_eq!(m.orbit_hom(f, ChainObject::I2_MINUS, ChainObject::I2_MINUS, 2).unwrap(), 0);
        assert_eq!(m.orbit_hom(f, ChainObject::P1, ChainObject::new(-1, 1), 1).unwrap(), 1);
    }

    #[test]
    fn scan_examples() {
        let r = cluster_tilting_scan(6, 8, OrbitFunctor::A_SHIFT, &[ChainObject::P1], &[1, 2]).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = cluster_tilting_scan(6, 8, OrbitFunctor::A_SHIFT, &[ChainObject::I2_MINUS], &[1, 2]).unwrap();
        assert!(r.passed());
        let bad = [ChainObject::P1, ChainObject::I2_MINUS];
        let r = cluster_tilting_scan(6, 8, OrbitFunctor::A_SHIFT, &bad, &[1, 2]).unwrap();
        assert!(!r.rigid);
        let r = cluster_tilting_scan(6, 8, OrbitFunctor::A_SHIFT, &[ChainObject::P1], &[1]).unwrap();
        assert!(!r.violations.is_empty());
        let r = cluster_tilting_scan(3, 8, OrbitFunctor::TAU_SHIFT, &[ChainObject::P1, ChainObject::P2], &[1]).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
