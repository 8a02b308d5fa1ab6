//! Bounded cochain complexes and the standard constructions on them.

use std::fmt;

use algebra_core::{FpModule, Matrix, ModuleMap, RingRef};

use crate::error::ComplexError;

#[derive(Clone)]
pub struct Complex {
    ring: RingRef,
    lo: i32,
    comps: Vec<FpModule>,
    diffs: Vec<ModuleMap>,
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(lo={}, ranks={:?})", self.lo, self.ranks())
    }
}

impl Complex {
    /// Components in degrees `lo..lo+len`, `diffs[i]` from degree `lo+i` to `lo+i+1`.
    pub fn new(
        ring: &RingRef,
        lo: i32,
        comps: Vec<FpModule>,
        diffs: Vec<ModuleMap>,
    ) -> Result<Self, ComplexError> {
        let c = Self::from_parts(ring, lo, comps, diffs)?;
        c.check_square_zero()?;
        Ok(c)
    }

    /// Shape checks only; d∘d = 0 is the caller's responsibility.
    pub fn from_parts(
        ring: &RingRef,
        lo: i32,
        comps: Vec<FpModule>,
        diffs: Vec<ModuleMap>,
    ) -> Result<Self, ComplexError> {
        if comps.len().saturating_sub(1) != diffs.len() {
            return Err(ComplexError::Shape(format!(
                "{} components need {} differentials, got {}",
                comps.len(),
                comps.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.source().ngens() != comps[i].ngens() || d.target().ngens() != comps[i + 1].ngens() {
                return Err(ComplexError::Shape(format!("differential in degree {}", lo + i as i32)));
            }
        }
        let diffs = diffs
            .into_iter()
            .enumerate()
            .map(|(i, d)| d.retarget(&comps[i], &comps[i + 1]))
            .collect();
        Ok(Self {
            ring: ring.clone(),
            lo,
            comps,
            diffs,
        })
    }

    /// Builds from components and differential matrices, verifying that each
    /// differential is a well-defined module map and that d∘d = 0.
    pub fn from_matrices(
        ring: &RingRef,
        lo: i32,
        comps: Vec<FpModule>,
        mats: Vec<Matrix>,
    ) -> Result<Self, ComplexError> {
        if comps.len().saturating_sub(1) != mats.len() {
            return Err(ComplexError::Shape("differential count".into()));
        }
        let mut diffs = Vec::with_capacity(mats.len());
        for (i, m) in mats.into_iter().enumerate() {
            diffs.push(ModuleMap::new(&comps[i], &comps[i + 1], m)?);
        }
        Self::new(ring, lo, comps, diffs)
    }

    /// Free complex with given ranks and differential matrices.
    pub fn free(ring: &RingRef, lo: i32, ranks: &[usize], mats: Vec<Matrix>) -> Result<Self, ComplexError> {
        let comps = ranks.iter().map(|&r| FpModule::free(ring, r)).collect();
        Self::from_matrices(ring, lo, comps, mats)
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self {
            ring: ring.clone(),
            lo: 0,
            comps: vec![],
            diffs: vec![],
        }
    }

    /// A module sitting in a single degree.
    pub fn concentrated(m: &FpModule, degree: i32) -> Self {
        Self {
            ring: m.ring().clone(),
            lo: degree,
            comps: vec![m.clone()],
            diffs: vec![],
        }
    }

    pub fn check_square_zero(&self) -> Result<(), ComplexError> {
        for i in 0..self.diffs.len().saturating_sub(1) {
            let dd = self.diffs[i + 1].compose(&self.diffs[i]);
            if !dd.is_zero_map() {
                return Err(ComplexError::NotAComplex(self.lo + i as i32));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Lowest stored degree.
    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Highest stored degree (`lo - 1` when empty).
    pub fn hi(&self) -> i32 {
        self.lo + self.comps.len() as i32 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    pub fn component(&self, k: i32) -> FpModule {
        if k < self.lo || k > self.hi() {
            return FpModule::zero(&self.ring);
        }
        self.comps[(k - self.lo) as usize].clone()
    }

    pub fn component_ref(&self, k: i32) -> Option<&FpModule> {
        if k < self.lo || k > self.hi() {
            None
        } else {
            Some(&self.comps[(k - self.lo) as usize])
        }
    }

    /// d^k : X^k → X^{k+1}.
    pub fn differential(&self, k: i32) -> ModuleMap {
        if k >= self.lo && k < self.hi() {
            return self.diffs[(k - self.lo) as usize].clone();
        }
        ModuleMap::zero(&self.component(k), &self.component(k + 1))
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.comps.iter().map(|c| c.ngens()).collect()
    }

    /// Generator count in degree k (0 outside the stored range).
    pub fn rank(&self, k: i32) -> usize {
        self.component_ref(k).map_or(0, |c| c.ngens())
    }

    pub fn is_free(&self) -> bool {
        self.comps.iter().all(|c| c.is_free())
    }

    pub fn is_graded(&self) -> bool {
        self.comps.iter().all(|c| c.degrees().is_some())
    }

    /// Degrees holding a nonzero component.
    pub fn support(&self) -> Vec<i32> {
        self.degrees().filter(|&k| !self.component(k).is_zero()).collect()
    }

    /// inf, sup and amplitude of the nonzero components; `None` for the zero complex.
    pub fn inf_sup_amp(&self) -> Option<(i32, i32, i32)> {
        let s = self.support();
        let (a, b) = (*s.first()?, *s.last()?);
        Some((a, b, b - a))
    }

    /// X[k] with X[k]^n = X^{n+k} and differential (−1)^k d_X.
    pub fn shift(&self, k: i32) -> Complex {
        let sign_neg = k.rem_euclid(2) == 1;
        let diffs = self
            .diffs
            .iter()
            .map(|d| if sign_neg { d.neg() } else { d.clone() })
            .collect();
        Complex {
            ring: self.ring.clone(),
            lo: self.lo - k,
            comps: self.comps.clone(),
            diffs,
        }
    }

    /// Keeps components in degrees [i, j], zero elsewhere.
    pub fn stupid_truncate(&self, i: i32, j: i32) -> Complex {
        let a = i.max(self.lo);
        let b = j.min(self.hi());
        if a > b {
            return Complex {
                ring: self.ring.clone(),
                lo: a,
                comps: vec![],
                diffs: vec![],
            };
        }
        let comps = (a..=b).map(|k| self.component(k)).collect();
        let diffs = (a..b).map(|k| self.differential(k)).collect();
        Complex {
            ring: self.ring.clone(),
            lo: a,
            comps,
            diffs,
        }
    }

    /// Same data over a widened degree range (zero components added).
    pub fn padded(&self, lo: i32, hi: i32) -> Complex {
        let a = lo.min(self.lo);
        let b = hi.max(self.hi());
        let comps: Vec<FpModule> = (a..=b).map(|k| self.component(k)).collect();
        let diffs = (a..b)
            .map(|k| self.differential(k).retarget(&comps[(k - a) as usize], &comps[(k - a + 1) as usize]))
            .collect();
        Complex {
            ring: self.ring.clone(),
            lo: a,
            comps,
            diffs,
        }
    }

    /// Replaces each component with a pruned presentation (same generators
    /// when nothing can be pruned).
    pub fn map_components<F>(&self, f: F) -> Complex
    where
        F: Fn(&FpModule) -> FpModule,
    {
        let comps: Vec<FpModule> = self.comps.iter().map(&f).collect();
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(i, d)| d.retarget(&comps[i], &comps[i + 1]))
            .collect();
        Complex {
            ring: self.ring.clone(),
            lo: self.lo,
            comps,
            diffs,
        }
    }
}
