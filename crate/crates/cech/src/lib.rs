//! Level-wise derived localization: Čech complexes of the cover by the sets
//! {a_i ≠ 0}, their Alexander–Whitney product, the triangle with the dual
//! Koszul levels, and the cohomological-completeness criterion.

pub mod cochain;
pub mod complete;
pub mod cone;
pub mod error;
pub mod level;
pub mod localized;

pub use cochain::{aw_product, Cochain};
pub use complete::complete_char_verify;
pub use cone::cone_triangle_verify;
pub use error::CechError;
pub use level::{cech_level, cech_transition, CechLevelComplex};
pub use localized::LocalizedElement;
