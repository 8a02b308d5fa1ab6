//! Graded windows: for a system of graded complexes, the field dimension of
//! H^k in internal degree d at every level, and the level where each entry
//! stabilizes.
//!
//! An entry is stable at level s when the transitions between s−1, s and
//! s+1 are all bijective on H^k(−)_d; level s+1 is the guard and may lie one
//! past the detection cap.

use algebra_core::linalg::FMat;
use complex::graded::{induced_slice_map, GradedSlice};
use complex::system::{ComplexSystem, Direction};
use complex::{Complex, ComplexMap};
use rayon::prelude::*;

use crate::error::DerivedError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub k: i32,
    pub d: i64,
    /// dim H^k(level)_d for each computed level, starting at the first.
    pub dims: Vec<usize>,
    pub stable_level: Option<usize>,
    pub stable_dim: Option<usize>,
}

/// Degree-d slices of one complex for every d in a window.
#[derive(Clone, Debug)]
pub struct ComplexSlices {
    pub window: (i64, i64),
    pub lo: i32,
    pub hi: i32,
    slices: Vec<GradedSlice>,
}

impl ComplexSlices {
    pub fn new(x: &Complex, window: (i64, i64)) -> Result<Self, DerivedError> {
        if !x.is_graded() {
            return Err(DerivedError::NotGraded("complex without generator degrees".into()));
        }
        let slices = (window.0..=window.1)
            .into_par_iter()
            .map(|d| GradedSlice::new(x, d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            window,
            lo: x.lo(),
            hi: x.hi(),
            slices,
        })
    }

    pub fn slice(&self, d: i64) -> &GradedSlice {
        &self.slices[(d - self.window.0) as usize]
    }

    pub fn dim(&self, k: i32, d: i64) -> usize {
        self.slice(d).dim(k)
    }

    /// Entries (k, d, dim) over the stored cohomological degrees.
    pub fn dims(&self) -> Vec<(i32, i64, usize)> {
        let mut out = Vec::new();
        for k in self.lo..=self.hi {
            for d in self.window.0..=self.window.1 {
                out.push((k, d, self.dim(k, d)));
            }
        }
        out
    }
}

fn is_bijective(m: &FMat, field: &algebra_core::Field) -> bool {
    m.nrows() == m.ncols() && m.rank(field) == m.nrows()
}

/// Whether H^k(φ)_d is bijective between the given slices.
pub fn slice_map_bijective(phi: &ComplexMap, k: i32, src: &GradedSlice, tgt: &GradedSlice) -> bool {
    let m = induced_slice_map(phi, k, src, tgt);
    is_bijective(&m, phi.source().ring().field())
}

#[derive(Clone, Debug)]
pub struct GradedWindowTable {
    pub direction: Direction,
    pub window: (i64, i64),
    pub first: usize,
    /// Highest level allowed as a stable level.
    pub cap: usize,
    /// Highest computed level (guard).
    pub last: usize,
    pub degrees: (i32, i32),
    entries: Vec<TableEntry>,
    levels: Vec<ComplexSlices>,
}

impl GradedWindowTable {
    pub fn new(sys: &ComplexSystem, window: (i64, i64), cap: usize) -> Result<Self, DerivedError> {
        let first = sys.first;
        let last = sys.last();
        let cap = cap.min(last);
        let levels: Vec<ComplexSlices> = sys
            .levels()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|j| ComplexSlices::new(sys.level(j), window))
            .collect::<Result<_, _>>()?;
        let lo = sys.levels().map(|j| sys.level(j).lo()).min().unwrap_or(0);
        let hi = sys.levels().map(|j| sys.level(j).hi()).max().unwrap_or(-1);
        let field = sys.level(first).ring().field().clone();
        let mut cells = Vec::new();
        for k in lo..=hi {
            for d in window.0..=window.1 {
                cells.push((k, d));
            }
        }
        let entries = cells
            .into_par_iter()
            .map(|(k, d)| {
                let dims: Vec<usize> = levels.iter().map(|l| l.dim(k, d)).collect();
                // bij[i]: transition between levels first+i and first+i+1
                let bij: Vec<bool> = (first..last)
                    .map(|j| {
                        let (a, b) = (&levels[j - first], &levels[j + 1 - first]);
                        let m = match sys.direction {
                            Direction::Direct => induced_slice_map(sys.transition(j), k, a.slice(d), b.slice(d)),
                            Direction::Inverse => induced_slice_map(sys.transition(j), k, b.slice(d), a.slice(d)),
                        };
                        is_bijective(&m, &field)
                    })
                    .collect();
                // Every transition from s through the last computed level is
                // bijective; at least one such transition exists.
                let stable_level = (first..=cap.min(last.saturating_sub(1)))
                    .find(|&s| bij[s - first..].iter().all(|&b| b));
                TableEntry {
                    k,
                    d,
                    stable_dim: stable_level.map(|s| dims[s - first]),
                    dims,
                    stable_level,
                }
            })
            .collect();
        Ok(Self {
            direction: sys.direction,
            window,
            first,
            cap,
            last,
            degrees: (lo, hi),
            entries,
            levels,
        })
    }

    /// Drops rows in cohomological degrees below `floor`.
    pub fn retain_degrees(&mut self, floor: i32) {
        self.entries.retain(|e| e.k >= floor);
        self.degrees.0 = self.degrees.0.max(floor);
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn entry(&self, k: i32, d: i64) -> Option<&TableEntry> {
        self.entries.iter().find(|e| e.k == k && e.d == d)
    }

    /// Stable dimension; entries outside the stored degrees are zero.
    pub fn stable_dim(&self, k: i32, d: i64) -> Option<usize> {
        match self.entry(k, d) {
            Some(e) => e.stable_dim,
            None => Some(0),
        }
    }

    pub fn stable_level(&self, k: i32, d: i64) -> Option<usize> {
        self.entry(k, d).and_then(|e| e.stable_level)
    }

    pub fn slices(&self, level: usize) -> &ComplexSlices {
        &self.levels[level - self.first]
    }

    /// First entry that failed to stabilize.
    pub fn require_stable(&self) -> Result<(), DerivedError> {
        match self.entries.iter().find(|e| e.stable_level.is_none()) {
            Some(e) => Err(DerivedError::WindowInsufficient {
                k: e.k,
                d: e.d,
                cap: self.cap,
            }),
            None => Ok(()),
        }
    }

    /// Entries of a direct system whose dimensions decrease somewhere before
    /// the stable level. Inverse systems carry no such constraint: the lim
    /// of ℚ[t]/(t^j) has dimensions 0, …, 0, 1, 1 in degree d.
    pub fn monotonicity_violations(&self) -> Vec<(i32, i64)> {
        self.entries
            .iter()
            .filter(|e| {
                let end = e.stable_level.map_or(e.dims.len(), |s| s - self.first + 1);
                let seg = &e.dims[..end];
                match self.direction {
                    Direction::Direct => seg.windows(2).any(|w| w[0] > w[1]),
                    Direction::Inverse => false,
                }
            })
            .map(|e| (e.k, e.d))
            .collect()
    }

    /// Stable dimensions of the nonzero stable entries, sorted by (k, d).
    pub fn stable_profile(&self) -> Vec<(i32, i64, usize)> {
        self.entries
            .iter()
            .filter_map(|e| e.stable_dim.filter(|&x| x > 0).map(|x| (e.k, e.d, x)))
            .collect()
    }
}
