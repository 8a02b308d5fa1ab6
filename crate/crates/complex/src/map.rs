//! Chain maps between bounded complexes.

use std::collections::BTreeMap;
use std::fmt;

use algebra_core::{Matrix, ModuleMap};

use crate::complex::Complex;
use crate::error::ComplexError;

#[derive(Clone)]
pub struct ComplexMap {
    source: Complex,
    target: Complex,
    maps: BTreeMap<i32, ModuleMap>,
}

impl fmt::Debug for ComplexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexMap({:?} -> {:?})", self.source, self.target)
    }
}

impl ComplexMap {
    /// Degreewise matrices; absent degrees are zero. Verifies that every
    /// component is well defined and commutes with the differentials.
    pub fn new(source: &Complex, target: &Complex, mats: Vec<(i32, Matrix)>) -> Result<Self, ComplexError> {
        let mut maps = BTreeMap::new();
        for (k, m) in mats {
            let f = ModuleMap::new(&source.component(k), &target.component(k), m)?;
            maps.insert(k, f);
        }
        let c = Self {
            source: source.clone(),
            target: target.clone(),
            maps,
        };
        c.check_commutes()?;
        Ok(c)
    }

    /// No verification; for maps correct by construction.
    pub fn from_parts(source: &Complex, target: &Complex, mats: Vec<(i32, Matrix)>) -> Self {
        let maps = mats
            .into_iter()
            .map(|(k, m)| {
                (
                    k,
                    ModuleMap::from_parts(&source.component(k), &target.component(k), m),
                )
            })
            .collect();
        Self {
            source: source.clone(),
            target: target.clone(),
            maps,
        }
    }

    pub fn identity(x: &Complex) -> Self {
        let mats = x
            .degrees()
            .map(|k| (k, Matrix::identity(x.ring(), x.rank(k))))
            .collect();
        Self::from_parts(x, x, mats)
    }

    pub fn zero(source: &Complex, target: &Complex) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            maps: BTreeMap::new(),
        }
    }

    pub fn source(&self) -> &Complex {
        &self.source
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    /// Degrees where either side is stored.
    pub fn degree_range(&self) -> std::ops::RangeInclusive<i32> {
        let lo = self.source.lo().min(self.target.lo());
        let hi = self.source.hi().max(self.target.hi());
        lo..=hi
    }

    pub fn component(&self, k: i32) -> ModuleMap {
        match self.maps.get(&k) {
            Some(m) => m.clone(),
            None => ModuleMap::zero(&self.source.component(k), &self.target.component(k)),
        }
    }

    pub fn check_commutes(&self) -> Result<(), ComplexError> {
        for k in self.degree_range() {
            let lhs = self.target.differential(k).compose(&self.component(k));
            let rhs = self.component(k + 1).compose(&self.source.differential(k));
            if !lhs.equals(&rhs) {
                return Err(ComplexError::NotAChainMap(k));
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ComplexMap) -> ComplexMap {
        let lo = first.source.lo().min(self.target.lo());
        let hi = first.source.hi().max(self.target.hi());
        let mats = (lo..=hi)
            .map(|k| (k, self.component(k).compose(&first.component(k)).matrix().clone()))
            .collect();
        Self::from_parts(&first.source, &self.target, mats)
    }

    pub fn add(&self, o: &ComplexMap) -> ComplexMap {
        let mats = self
            .degree_range()
            .map(|k| (k, self.component(k).add(&o.component(k)).matrix().clone()))
            .collect();
        Self::from_parts(&self.source, &self.target, mats)
    }

    pub fn neg(&self) -> ComplexMap {
        let mats = self
            .maps
            .iter()
            .map(|(k, m)| (*k, m.neg().matrix().clone()))
            .collect();
        Self::from_parts(&self.source, &self.target, mats)
    }

    /// Degreewise equality as module homomorphisms.
    pub fn equals(&self, o: &ComplexMap) -> bool {
        self.degree_range().all(|k| self.component(k).equals(&o.component(k)))
    }

    /// Whether every component is an isomorphism of modules.
    pub fn is_degreewise_iso(&self) -> bool {
        self.degree_range().all(|k| self.component(k).is_iso())
    }

    /// Same matrices between other complexes with identical ranks.
    pub fn retarget(&self, source: &Complex, target: &Complex) -> ComplexMap {
        let mats = self
            .maps
            .iter()
            .map(|(k, m)| (*k, m.matrix().clone()))
            .collect();
        Self::from_parts(source, target, mats)
    }

    /// The map X[k] → Y[k]; components are unchanged.
    pub fn shift(&self, k: i32) -> ComplexMap {
        let s = self.source.shift(k);
        let t = self.target.shift(k);
        let mats = self
            .maps
            .iter()
            .map(|(d, m)| (*d - k, m.matrix().clone()))
            .collect();
        Self::from_parts(&s, &t, mats)
    }
}
