//! Representations of the `n`-Kronecker quiver `Q_n`: two vertices and `n`
//! arrows, indexed by a basis of a space `W`.

mod hom;
mod io;
mod iso;
mod reflect;
mod rep;
mod tau;

pub use hom::{
    cokernel_rep, combine, delta_matrix, euler_form, ext1_space, extension_rep, hom_basis, hom_ext, kernel_rep,
    Ext1Space, HomExt, RepMorphism,
};
pub use io::{read_form, read_rep, write_form, write_rep};
pub use iso::{iso_check, iso_check_with, IsoOptions, IsoOutcome};
pub(crate) use iso::random_coeffs;
pub use reflect::{apply_a, apply_a_inverse, split_sink_simples, split_source_simples};
pub use rep::{BilinearForm, DimVector, KroneckerRep, Symmetry};
pub use tau::tau;

/// Twist of a module by [`BilinearForm::twist_matrix`]; it carries `a²(x)`
/// to `τ(x)` for any invertible `π`.
pub fn lemma_twist(x: &KroneckerRep, pi: &BilinearForm) -> KroneckerRep {
    x.twist(&pi.twist_matrix())
}
