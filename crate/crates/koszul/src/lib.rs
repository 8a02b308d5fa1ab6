//! Koszul complexes of powers of a finite sequence, the dual Koszul direct
//! system, and certificates for weak proregularity.

pub mod prozero;
pub mod tower;

pub use prozero::{pro_zero_check, wpr_check, ProZeroCertificate, SystemCertificate, Verdict};
pub use tower::{
    dual_koszul_complex, dual_koszul_system, duality_isomorphism, koszul_complex, koszul_tower,
    koszul_transition, quotient_module, DualKoszulSystem, KoszulTower,
};
