//! Graded matrix factorizations of the node `f = UV` over `k[U, V]`.
//!
//! A factorization `(phi, psi)` has `phi: F1 -> F0`, `psi: F0 -> F1(-deg f)`
//! with `phi psi = psi phi = f`, and stands for the module `coker phi` over
//! `S = k[U, V]/(UV)`. `F0` and `F1` have generators in degrees `deg0`,
//! `deg1`, so `phi[i][j]` has degree `deg1[j] - deg0[i]` and `psi[j][i]` has
//! degree `deg0[i] + deg f - deg1[j]`.
//!
//! `𝔭 = US` is `(V, U)` and `𝔮 = VS` is `(U, V)`.

mod io;
mod linsys;
mod resolve;
mod scan;
mod stable;

pub use io::{read_mf, write_mf};
pub use resolve::{mf_stabilize, Stabilization};
pub use scan::{node_suite, rank_one_scan, RankOneScan};
pub use stable::{default_top, homotopy_witness, mf_iso_check, mf_iso_check_with, mf_stable_hom, morphisms, StableHomReport, StableHomSpace};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::poly::Poly;

pub type PolyMatrix = Vec<Vec<Poly>>;

pub const NAMES: [&str; 2] = ["U", "V"];

pub fn node(field: FieldSpec) -> Poly {
    Poly::var(field, 2, 0).mul(&Poly::var(field, 2, 1))
}

pub(crate) fn mat_mul(a: &PolyMatrix, b: &PolyMatrix, field: FieldSpec, inner: usize) -> PolyMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Poly::zero(field, 2), |acc, k| acc.add(&row[k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

pub(crate) fn scalar_identity(p: &Poly, n: usize) -> PolyMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { p.clone() } else { Poly::zero(p.field(), 2) }).collect()).collect()
}

fn block_diag(a: &PolyMatrix, b: &PolyMatrix, acols: usize, bcols: usize, field: FieldSpec) -> PolyMatrix {
    let z = || Poly::zero(field, 2);
    let mut out: PolyMatrix = a.iter().map(|r| r.iter().cloned().chain((0..bcols).map(|_| z())).collect()).collect();
    out.extend(b.iter().map(|r| (0..acols).map(|_| z()).chain(r.iter().cloned()).collect()));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    field: FieldSpec,
    f: Poly,
    phi: PolyMatrix,
    psi: PolyMatrix,
    deg0: Vec<i64>,
    deg1: Vec<i64>,
}

impl MatrixFactorization {
    /// A factorization of `UV`; only the shapes are checked here, see
    /// [`MatrixFactorization::validate`].
    pub fn new(field: FieldSpec, phi: PolyMatrix, psi: PolyMatrix, deg0: Vec<i64>, deg1: Vec<i64>) -> Result<Self> {
        let (r0, r1) = (deg0.len(), deg1.len());
        let shaped = |m: &PolyMatrix, r: usize, c: usize| m.len() == r && m.iter().all(|row| row.len() == c);
        if !shaped(&phi, r0, r1) || !shaped(&psi, r1, r0) {
            return Err(Error::DimensionMismatch(format!(
                "phi must be {r0}x{r1} and psi {r1}x{r0} for generator degrees {deg0:?} / {deg1:?}"
            )));
        }
        if phi.iter().chain(&psi).flatten().any(|p| p.nvars() != 2 || p.field() != field) {
            return Err(Error::InvalidArgument("entries must be polynomials in U, V over the given field".into()));
        }
        Ok(MatrixFactorization { field, f: node(field), phi, psi, deg0, deg1 })
    }

    /// `(phi, psi)` of rank one with `F0` generated in degree 0.
    pub fn rank_one(field: FieldSpec, phi: &Poly, psi: &Poly) -> Result<Self> {
        let d = phi.homogeneous_degree(&[1, 1]).unwrap_or(0) as i64;
        Self::new(field, vec![vec![phi.clone()]], vec![vec![psi.clone()]], vec![0], vec![d])
    }

    pub fn parse_rank_one(field: FieldSpec, phi: &str, psi: &str) -> Result<Self> {
        Self::rank_one(field, &Poly::parse(phi, &NAMES, field)?, &Poly::parse(psi, &NAMES, field)?)
    }

    /// `𝔭 = US`, i.e. `(V, U)`.
    pub fn p(field: FieldSpec) -> Self {
        Self::parse_rank_one(field, "V", "U").expect("valid")
    }

    /// `𝔮 = VS`, i.e. `(U, V)`.
    pub fn q(field: FieldSpec) -> Self {
        Self::parse_rank_one(field, "U", "V").expect("valid")
    }

    /// `(1, UV)`, the factorization of the free module `S`.
    pub fn trivial(field: FieldSpec) -> Self {
        Self::parse_rank_one(field, "1", "U V").expect("valid")
    }

    pub fn zero(field: FieldSpec) -> Self {
        Self::new(field, Vec::new(), Vec::new(), Vec::new(), Vec::new()).expect("empty")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn f(&self) -> &Poly {
        &self.f
    }
    pub fn phi(&self) -> &PolyMatrix {
        &self.phi
    }
    pub fn psi(&self) -> &PolyMatrix {
        &self.psi
    }
    pub fn deg0(&self) -> &[i64] {
        &self.deg0
    }
    pub fn deg1(&self) -> &[i64] {
        &self.deg1
    }
    pub fn rank(&self) -> usize {
        self.deg0.len()
    }

    pub fn f_degree(&self) -> i64 {
        2
    }

    /// Largest degree of an entry of `phi` or `psi`.
    pub fn max_entry_degree(&self) -> i64 {
        self.phi
            .iter()
            .chain(&self.psi)
            .flatten()
            .filter_map(|p| p.homogeneous_degree(&[1, 1]))
            .max()
            .unwrap_or(0) as i64
    }

    /// Checks square shape, `phi psi = f = psi phi` and homogeneity.
    pub fn validate(&self) -> Result<()> {
        let (r0, r1) = (self.deg0.len(), self.deg1.len());
        if r0 != r1 {
            return Err(Error::InvalidArgument(format!("phi is {r0}x{r1}, not square")));
        }
        let d = self.f_degree();
        for (i, row) in self.phi.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                check_degree(p, self.deg1[j] - self.deg0[i], "phi", i, j)?;
            }
        }
        for (j, row) in self.psi.iter().enumerate() {
            for (i, p) in row.iter().enumerate() {
                check_degree(p, self.deg0[i] + d - self.deg1[j], "psi", j, i)?;
            }
        }
        let fi = scalar_identity(&self.f, r0);
        if mat_mul(&self.phi, &self.psi, self.field, r1) != fi {
            return Err(Error::InvalidArgument("phi psi is not UV times the identity".into()));
        }
        if mat_mul(&self.psi, &self.phi, self.field, r0) != fi {
            return Err(Error::InvalidArgument("psi phi is not UV times the identity".into()));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// `Σ(phi, psi) = (psi, phi)`; `F1` becomes the new `F0` and `F0(-deg f)`
    /// the new `F1`, so `Σ²` is the twist by `deg f`.
    pub fn shift(&self) -> Self {
        let d = self.f_degree();
        MatrixFactorization {
            phi: self.psi.clone(),
            psi: self.phi.clone(),
            deg0: self.deg1.clone(),
            deg1: self.deg0.iter().map(|a| a + d).collect(),
            ..self.clone()
        }
    }

    /// Generators moved up by `k` degrees.
    pub fn twisted(&self, k: i64) -> Self {
        MatrixFactorization {
            deg0: self.deg0.iter().map(|a| a + k).collect(),
            deg1: self.deg1.iter().map(|a| a + k).collect(),
            ..self.clone()
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r, s) = (self.rank(), other.rank());
        MatrixFactorization {
            field: self.field,
            f: self.f.clone(),
            phi: block_diag(&self.phi, &other.phi, r, s, self.field),
            psi: block_diag(&self.psi, &other.psi, r, s, self.field),
            deg0: self.deg0.iter().chain(&other.deg0).copied().collect(),
            deg1: self.deg1.iter().chain(&other.deg1).copied().collect(),
        }
    }
}

fn check_degree(p: &Poly, want: i64, name: &str, r: usize, c: usize) -> Result<()> {
    if p.is_zero() {
        return Ok(());
    }
    match p.homogeneous_degree(&[1, 1]) {
        Some(d) if d as i64 == want => Ok(()),
        Some(d) => Err(Error::InvalidArgument(format!("{name}[{r}][{c}] has degree {d}, expected {want}"))),
        None => Err(Error::InvalidArgument(format!("{name}[{r}][{c}] is not homogeneous"))),
    }
}

fn fmt_matrix(m: &PolyMatrix) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|p| p.display(&NAMES).to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

impl fmt::Display for MatrixFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "phi={} psi={} deg0={:?} deg1={:?}",
            fmt_matrix(&self.phi),
            fmt_matrix(&self.psi),
            self.deg0,
            self.deg1
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn validation() {
        assert!(MatrixFactorization::p(Q).is_valid());
        assert!(MatrixFactorization::q(Q).is_valid());
        assert!(MatrixFactorization::trivial(Q).is_valid());
        assert!(MatrixFactorization::zero(Q).is_valid());
        let bad = MatrixFactorization::parse_rank_one(Q, "U", "U").unwrap();
        assert!(bad.validate().unwrap_err().to_string().contains("not UV"));
        let mut twisted = MatrixFactorization::p(Q);
        twisted.deg1 = vec![2];
        assert!(twisted.validate().unwrap_err().to_string().contains("degree"));
    }

    #[test]
    fn shift_swaps() {
        let p = MatrixFactorization::p(Q);
        let s = p.shift();
        assert_eq!((s.phi(), s.psi()), (MatrixFactorization::q(Q).phi(), MatrixFactorization::q(Q).psi()));
        assert_eq!((s.deg0(), s.deg1()), (&[1][..], &[2][..]));
        assert!(s.is_valid());
        assert_eq!(s.shift(), p.twisted(2));
        let sum = p.direct_sum(&s);
        assert!(sum.is_valid());
        assert_eq!(sum.to_string(), "phi=[[V, 0], [0, U]] psi=[[U, 0], [0, V]] deg0=[0, 1] deg1=[1, 2]");
    }
}
