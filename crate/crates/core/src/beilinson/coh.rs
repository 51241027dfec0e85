//! Cohomology of twists of `O`, `Ω` and `Ω*` on `P^2` and `P^3`.
//!
//! Twists are in the grading of the polynomial ring, so `O{1}` is the
//! hyperplane bundle. `Ω` and its dual are handled through the Euler sequence
//! `0 -> Ω -> V ⊗ O{-1} -> O -> 0` and its dual, using that the induced maps
//! on `H^0` and `H^N` are multiplication maps of the symmetric algebra, which
//! are onto (resp. into) except in one degree each.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SheafKind {
    O,
    Omega,
    OmegaDual,
}

impl fmt::Display for SheafKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SheafKind::O => "O",
            SheafKind::Omega => "Omega",
            SheafKind::OmegaDual => "Omega*",
        })
    }
}

/// `k^multiplicity ⊗ E{twist}` on `P^space_dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SheafDescriptor {
    pub space_dim: usize,
    pub kind: SheafKind,
    pub twist: i64,
    pub multiplicity: usize,
}

impl SheafDescriptor {
    pub fn new(space_dim: usize, kind: SheafKind, twist: i64) -> Result<Self> {
        if !(2..=3).contains(&space_dim) {
            return Err(Error::InvalidArgument(format!("P^{space_dim} (expected P^2 or P^3)")));
        }
        Ok(SheafDescriptor { space_dim, kind, twist, multiplicity: 1 })
    }

    pub fn line(space_dim: usize, twist: i64) -> Result<Self> {
        Self::new(space_dim, SheafKind::O, twist)
    }

    pub fn with_multiplicity(self, multiplicity: usize) -> Self {
        SheafDescriptor { multiplicity, ..self }
    }

    pub fn twisted(self, k: i64) -> Self {
        SheafDescriptor { twist: self.twist + k, ..self }
    }

    /// `E^∨ ⊗ O{-N-1}`, whose cohomology is dual to that of `E`.
    pub fn serre_partner(self) -> Self {
        let kind = match self.kind {
            SheafKind::O => SheafKind::O,
            SheafKind::Omega => SheafKind::OmegaDual,
            SheafKind::OmegaDual => SheafKind::Omega,
        };
        SheafDescriptor { kind, twist: -self.twist - self.space_dim as i64 - 1, ..self }
    }

    /// Parses `O{3}`, `Omega{-1}`, `Omega*{1}`, optionally prefixed by a
    /// multiplicity as in `4 O{-1}`.
    pub fn parse(text: &str, space_dim: usize) -> Result<Self> {
        let t = text.trim();
        let bad = || Error::Parse(format!("sheaf `{text}` (expected e.g. O{{3}}, Omega{{-1}}, Omega*{{1}})"));
        let (mult, body) = match t.split_once(char::is_whitespace) {
            Some((m, rest)) => (m.parse::<usize>().map_err(|_| bad())?, rest.trim()),
            None => (1, t),
        };
        let (name, rest) = body.split_once('{').ok_or_else(bad)?;
        let twist = rest.strip_suffix('}').ok_or_else(bad)?.trim().parse::<i64>().map_err(|_| bad())?;
        let kind: SheafKind = name.trim().parse().map_err(|_| bad())?;
        Ok(Self::new(space_dim, kind, twist)?.with_multiplicity(mult))
    }
}

impl fmt::Display for SheafDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity != 1 {
            write!(f, "{} ", self.multiplicity)?;
        }
        write!(f, "{}{{{}}}", self.kind, self.twist)
    }
}

impl FromStr for SheafKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O" => Ok(SheafKind::O),
            "Omega" => Ok(SheafKind::Omega),
            "Omega*" => Ok(SheafKind::OmegaDual),
            _ => Err(Error::Parse(format!("sheaf kind `{s}`"))),
        }
    }
}

/// `h^0, ..., h^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohTable {
    pub h: Vec<u128>,
}

impl CohTable {
    pub fn euler_characteristic(&self) -> i128 {
        self.h.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i128 } else { -(x as i128) }).sum()
    }

    pub fn nonzero_degrees(&self) -> Vec<usize> {
        (0..self.h.len()).filter(|&i| self.h[i] != 0).collect()
    }
}

impl fmt::Display for CohTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.h.iter().enumerate().map(|(i, x)| format!("h{i}={x}")).collect();
        f.write_str(&parts.join(" "))
    }
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn h0_line(nn: i128, k: i128) -> i128 {
    binomial(k + nn, nn)
}

fn htop_line(nn: i128, k: i128) -> i128 {
    binomial(-k - 1, nn)
}

pub fn cohomology(s: &SheafDescriptor) -> Result<CohTable> {
    let nn = s.space_dim as i128;
    let k = s.twist as i128;
    let top = s.space_dim;
    let mut h = vec![0i128; top + 1];
    let delta = |c: bool| c as i128;
    match s.kind {
        SheafKind::O => {
            h[0] = h0_line(nn, k);
            h[top] += htop_line(nn, k);
        }
        SheafKind::Omega => {
            // V ⊗ S_{k-1} -> S_k is onto except for k = 0
            h[0] = (nn + 1) * h0_line(nn, k - 1) - h0_line(nn, k) + delta(k == 0);
            h[1] += delta(k == 0);
            h[top] += (nn + 1) * htop_line(nn, k - 1) - htop_line(nn, k);
        }
        SheafKind::OmegaDual => {
            // dual sequence 0 -> O -> V* ⊗ O{1} -> Ω* -> 0
            h[0] = (nn + 1) * h0_line(nn, k + 1) - h0_line(nn, k);
            h[top - 1] += delta(k == -nn - 1);
            h[top] += (nn + 1) * htop_line(nn, k + 1) - htop_line(nn, k) + delta(k == -nn - 1);
        }
    }
    let m = s.multiplicity as i128;
    let h = h
        .into_iter()
        .map(|x| {
            u128::try_from(x * m).map_err(|_| Error::ContractViolation(format!("negative cohomology for {s}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CohTable { h })
}

/// `Ext^i(e, f) = H^i(e^∨ ⊗ f)`, available when one side is a twist of `O`.
pub fn ext_table(e: &SheafDescriptor, f: &SheafDescriptor) -> Result<CohTable> {
    if e.space_dim != f.space_dim {
        return Err(Error::DimensionMismatch(format!("sheaves on P^{} and P^{}", e.space_dim, f.space_dim)));
    }
    let kind = match (e.kind, f.kind) {
        (SheafKind::O, k) => k,
        (SheafKind::Omega, SheafKind::O) => SheafKind::OmegaDual,
        (SheafKind::OmegaDual, SheafKind::O) => SheafKind::Omega,
        _ => {
            return Err(Error::UnsupportedMorphism(format!("Ext({e}, {f}) needs one side to be a line bundle")));
        }
    };
    let s = SheafDescriptor {
        space_dim: e.space_dim,
        kind,
        twist: f.twist - e.twist,
        multiplicity: e.multiplicity * f.multiplicity,
    };
    cohomology(&s)
}

pub fn hom_dim(e: &SheafDescriptor, f: &SheafDescriptor) -> Result<u128> {
    Ok(ext_table(e, f)?.h[0])
}
