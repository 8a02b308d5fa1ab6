//! LΛ_𝔞 as the inverse system Hom(Tel_j(A;𝒂), P) ≅ Tel_j^∨ ⊗ P for a free
//! replacement P → M, with τ_j = Hom(u_j, 1) : P → Hom(Tel_j, P) and the
//! levelwise comparison tel_j : Hom(Tel_j, P) → A/(𝒂^j) ⊗ P.

use algebra_core::ElementSequence;
use complex::cohomology::{cohomological_support, is_quasi_iso, Cohomology, QuasiIsoReport};
use complex::system::ComplexSystem;
use complex::{resolve_complex, Complex, ComplexMap, Resolution};
use telescope::{tel_on_module, CompletionTower, TelTower};

use crate::error::DerivedError;
use crate::systems::{cohomology_of, CohomologySystem};
use crate::window::GradedWindowTable;

#[derive(Clone, Debug)]
pub struct LLambdaTower {
    pub seq: ElementSequence,
    pub input: Complex,
    pub resolution: Resolution,
    pub resolution_length: usize,
    pub tower: TelTower,
}

/// n + amp(M) + 2 with n the number of ring variables.
pub fn default_resolution_length(m: &Complex) -> usize {
    let amp = m.inf_sup_amp().map_or(0, |(_, _, a)| a as usize);
    m.ring().nvars() + amp + 2
}

impl LLambdaTower {
    pub fn cap(&self) -> usize {
        self.tower.hom.last()
    }

    pub fn system(&self) -> &ComplexSystem {
        &self.tower.hom
    }

    pub fn level(&self, j: usize) -> &Complex {
        self.tower.hom.level(j)
    }

    /// The free replacement P.
    pub fn free_input(&self) -> &Complex {
        &self.resolution.complex
    }

    pub fn completion(&self) -> &CompletionTower {
        &self.tower.completion
    }

    /// τ_j : P → Hom(Tel_j, P).
    pub fn tau(&self, j: usize) -> ComplexMap {
        self.tower.hom_u(j)
    }

    /// Lowest cohomological degree whose values are independent of the
    /// resolution's truncation; `None` when the resolution terminated.
    pub fn validity_floor(&self) -> Option<i32> {
        self.resolution.validity_floor()
    }

    pub fn check_degree(&self, k: i32) -> Result<(), DerivedError> {
        match self.validity_floor() {
            Some(floor) if k < floor => Err(DerivedError::OutsideValidity { k, floor }),
            _ => Ok(()),
        }
    }

    pub fn cohomology(&self, k: i32) -> Result<CohomologySystem, DerivedError> {
        self.check_degree(k)?;
        Ok(cohomology_of(&self.tower.hom, k))
    }

    /// The comparison with the completion tower at level j.
    pub fn xi(&self, j: usize) -> QuasiIsoReport {
        is_quasi_iso(self.tower.tel(j))
    }

    /// [inf H(M) − n, sup H(M)]; `None` when M is acyclic.
    pub fn dimension_bounds(&self) -> Option<(i32, i32)> {
        let s = cohomological_support(&self.input);
        Some((*s.first()? - self.seq.len() as i32, *s.last()?))
    }

    /// (level, degree) pairs inside the validity window with nonzero
    /// cohomology outside the bounds.
    pub fn bound_violations(&self) -> Vec<(usize, i32)> {
        let bounds = self.dimension_bounds();
        let mut out = Vec::new();
        for j in self.tower.hom.levels() {
            let x = self.level(j);
            for k in x.degrees().filter(|&k| self.check_degree(k).is_ok()) {
                let inside = bounds.is_some_and(|(a, b)| a <= k && k <= b);
                if !inside && !Cohomology::new(x, k).module().is_zero() {
                    out.push((j, k));
                }
            }
        }
        out
    }

    /// Limit table over internal degrees with stable levels up to the cap;
    /// one extra level is built as the guard. Rows below the validity floor
    /// are dropped.
    pub fn window_table(&self, window: (i64, i64)) -> Result<GradedWindowTable, DerivedError> {
        let guarded = tel_on_module(&self.seq, self.free_input(), self.cap() + 1)?;
        let mut t = GradedWindowTable::new(&guarded.hom, window, self.cap())?;
        if let Some(floor) = self.validity_floor() {
            t.retain_degrees(floor);
        }
        Ok(t)
    }
}

/// Builds the tower to `cap` levels over a free replacement of M computed
/// `resolution_length` degrees below M (default n + amp + 2).
pub fn llambda(
    m: &Complex,
    seq: &ElementSequence,
    cap: usize,
    resolution_length: Option<usize>,
) -> Result<LLambdaTower, DerivedError> {
    if cap == 0 {
        return Err(DerivedError::CapTooSmall(1));
    }
    let len = resolution_length.unwrap_or_else(|| default_resolution_length(m));
    let resolution = resolve_complex(m, len)?;
    let tower = tel_on_module(seq, &resolution.complex, cap)?;
    Ok(LLambdaTower {
        seq: seq.clone(),
        input: m.clone(),
        resolution,
        resolution_length: len,
        tower,
    })
}
