//! Exact computations around the stable categories of the Iyama–Yoshino
//! singularities, reduced to linear algebra over generalized Kronecker
//! quivers.
//!
//! * [`exactlin`]: dense matrices over the rationals and prime fields.
//! * [`kronecker`]: representations of the `n`-Kronecker quiver, Hom/Ext,
//!   the square root `a` of the Auslander–Reiten translate, and `tau`.
//! * [`derivedh`]: objects of the bounded derived category as formal sums
//!   of shifted representations, with cones and `F = a[-1]`.
//! * [`orbitcat`]: the orbit category `D^b(mod kQ_n)/(a[-1])`.
//! * [`gradedring`]: Hilbert series, Veronese subrings, Gorenstein
//!   parameters and Koszul cohomology.
//! * [`beilinson`]: the projective-space side (`P^2`, `P^3`).
//! * [`mfnode`]: graded matrix factorizations of `UV`.

pub mod beilinson;
pub mod cli;
pub mod derivedh;
pub mod error;
pub mod exactlin;
pub mod gradedring;
pub mod kronecker;
pub mod mfnode;
pub mod orbitcat;
pub mod poly;
pub mod records;
pub mod textio;
pub mod suite;

pub use error::{Error, Result};
pub use exactlin::{FieldSpec, Matrix, Scalar};
