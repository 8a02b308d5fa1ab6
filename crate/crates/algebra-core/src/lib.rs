//! Exact algebra substrate: coefficient fields, polynomial rings and their
//! quotients, module Gröbner bases with syzygies, finitely presented modules,
//! dense linear algebra over the coefficient field, and ideal operations.

pub mod error;
pub mod field;
pub mod graded;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod matrix;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod syzygy;

pub use error::AlgebraError;
pub use field::{Coeff, Field};
pub use matrix::Matrix;
pub use module::{FpModule, MapDefect, ModuleMap};
pub use monomial::{Monomial, TermOrder};
pub use poly::Poly;
pub use ring::{make_ring, make_ring_str, ElementSequence, Ring, RingElement, RingRef};
pub use syzygy::{groebner_and_syzygies, syzygy_matrix, ModuleGb};
