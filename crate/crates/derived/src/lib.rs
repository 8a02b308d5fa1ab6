//! Derived torsion RΓ_𝔞 and derived completion LΛ_𝔞 realized as level
//! systems, graded-window evaluation of their (co)limits, and verifiers for
//! idempotence, the torsion characterization, MGM equivalence, GM duality,
//! permanence and base change.

pub mod compare;
pub mod error;
pub mod gm;
pub mod idempotence;
pub mod llambda;
pub mod mgm;
pub mod permanence;
pub mod report;
pub mod rgamma;
pub mod systems;
pub mod window;

pub use error::DerivedError;
pub use gm::gm_duality_verify;
pub use idempotence::{idempotence_verify, kernel_identity_verify, torsion_char_verify};
pub use llambda::{default_resolution_length, llambda, LLambdaTower};
pub use mgm::{koszul_limit_contrast, mgm_verify};
pub use permanence::{base_change_verify, default_suite, permanence_verify, RingMap};
pub use report::{Check, NamedTable, Outcome, Report};
pub use rgamma::{rgamma, RGammaSystem};
pub use window::{ComplexSlices, GradedWindowTable, TableEntry};
