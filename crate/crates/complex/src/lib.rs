//! Bounded cochain complexes of finitely presented modules: constructions,
//! exact cohomology, quasi-isomorphism tests, free resolutions and level
//! systems.

pub mod cohomology;
pub mod complex;
pub mod error;
pub mod graded;
pub mod map;
pub mod ops;
pub mod resolution;
pub mod system;

pub use cohomology::{cohomology, induced_map, is_acyclic, is_quasi_iso, Cohomology, QuasiIsoReport};
pub use complex::Complex;
pub use error::ComplexError;
pub use map::ComplexMap;
pub use ops::{cone, hom_from_free, tensor};
pub use resolution::{free_resolution, resolve_complex, Resolution};
pub use system::{ComplexSystem, Direction, LevelSystem, ModuleSystem};
