//! Hilbert series of graded rings, Veronese subrings, Gorenstein parameters
//! and Koszul cohomology of graded modules over polynomial rings.

mod hilbert;
mod io;
mod koszul;

pub use hilbert::{gorenstein_parameter, hilbert_polynomial_ring, veronese, HilbertSeries};
pub use io::{read_presentation, read_series, write_presentation, write_series, ModuleFile};
pub use koszul::{koszul_cohomology, Finiteness, GradedModulePresentation, KoszulReport};
