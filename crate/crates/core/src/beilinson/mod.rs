//! Projective space and its tilting bundles.
//!
//! `σ` is only realized on the Kronecker side, as `a^{-1}(-)[1]`; the sheaf
//! side is reduced to cohomology tables and Hom dimensions.

mod coh;
mod tilting;

pub use coh::{cohomology, ext_table, hom_dim, CohTable, SheafDescriptor, SheafKind};
pub use tilting::{
    example11_model, example12_model, koszul_slice_check, sample_objects, sigma, sigma_commutes_check,
    sigma_square_check, tau_formal, tau_inverse_formal, third_preprojective, wedge_basis, wedge_form, wedge_pairing, ExampleReport,
    SliceReport,
};

pub use crate::records::Check;
