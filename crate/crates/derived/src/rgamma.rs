//! RΓ_𝔞 as the direct system K^∨(A;𝒂^j) ⊗ M with the augmentations
//! σ_j = e^∨_j ⊗ 1 : K^∨(A;𝒂^j) ⊗ M → M.
//!
//! K^∨ is a bounded complex of free modules, so the tensor product with M
//! is already the derived one and M's components may be any finitely
//! presented modules.

use algebra_core::ElementSequence;
use complex::cohomology::{cohomological_support, Cohomology};
use complex::ops::{tensor, tensor_maps};
use complex::system::{ComplexSystem, Direction, LevelSystem};
use complex::{Complex, ComplexMap};
use koszul::{dual_koszul_system, DualKoszulSystem};

use crate::error::DerivedError;
use crate::systems::{cohomology_of, CohomologySystem};
use crate::window::GradedWindowTable;

#[derive(Clone, Debug)]
pub struct RGammaSystem {
    pub seq: ElementSequence,
    pub input: Complex,
    pub dual: DualKoszulSystem,
    pub system: ComplexSystem,
    sigma: Vec<ComplexMap>,
}

impl RGammaSystem {
    pub fn cap(&self) -> usize {
        self.system.last()
    }

    pub fn level(&self, j: usize) -> &Complex {
        self.system.level(j)
    }

    /// σ_j : level j → M.
    pub fn sigma(&self, j: usize) -> &ComplexMap {
        &self.sigma[j - 1]
    }

    pub fn sigmas(&self) -> &[ComplexMap] {
        &self.sigma
    }

    pub fn cohomology(&self, k: i32) -> CohomologySystem {
        cohomology_of(&self.system, k)
    }

    /// Cohomological degrees allowed by finite cohomological dimension:
    /// [inf H(M), sup H(M) + n]; `None` when M is acyclic.
    pub fn dimension_bounds(&self) -> Option<(i32, i32)> {
        let s = cohomological_support(&self.input);
        Some((*s.first()?, *s.last()? + self.seq.len() as i32))
    }

    /// (level, degree) pairs with nonzero cohomology outside the bounds.
    pub fn bound_violations(&self) -> Vec<(usize, i32)> {
        let bounds = self.dimension_bounds();
        let mut out = Vec::new();
        for j in self.system.levels() {
            let x = self.level(j);
            for k in x.degrees() {
                let inside = bounds.is_some_and(|(a, b)| a <= k && k <= b);
                if !inside && !Cohomology::new(x, k).module().is_zero() {
                    out.push((j, k));
                }
            }
        }
        out
    }

    /// Colimit table over internal degrees with stable levels up to the
    /// cap; one extra level is built as the guard.
    pub fn window_table(&self, window: (i64, i64)) -> Result<GradedWindowTable, DerivedError> {
        let guarded = rgamma(&self.input, &self.seq, self.cap() + 1)?;
        GradedWindowTable::new(&guarded.system, window, self.cap())
    }
}

/// The direct system {K^∨(A;𝒂^j) ⊗ M}_{j=1..cap}.
pub fn rgamma(m: &Complex, seq: &ElementSequence, cap: usize) -> Result<RGammaSystem, DerivedError> {
    if cap == 0 {
        return Err(DerivedError::CapTooSmall(1));
    }
    let dual = dual_koszul_system(seq, cap)?;
    let levels: Vec<Complex> = (1..=cap)
        .map(|j| tensor(dual.level(j), m))
        .collect::<Result<_, _>>()?;
    let id = ComplexMap::identity(m);
    let transitions = (1..cap)
        .map(|j| tensor_maps(dual.system.transition(j), &id, &levels[j - 1], &levels[j]))
        .collect();
    let unit_m = tensor(&dual.unit(), m)?;
    let sigma = (1..=cap)
        .map(|j| tensor_maps(&dual.augmentation(j), &id, &levels[j - 1], &unit_m).retarget(&levels[j - 1], m))
        .collect();
    let system = LevelSystem::new(Direction::Direct, 1, levels, transitions)?;
    Ok(RGammaSystem {
        seq: seq.clone(),
        input: m.clone(),
        dual,
        system,
        sigma,
    })
}
