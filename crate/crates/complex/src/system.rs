//! Inverse and direct systems indexed by consecutive levels.

use algebra_core::{FpModule, ModuleMap};

use crate::cohomology::{induced_map_between, Cohomology};
use crate::complex::Complex;
use crate::error::ComplexError;
use crate::map::ComplexMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Transitions go from level j+1 to level j.
    Inverse,
    /// Transitions go from level j to level j+1.
    Direct,
}

/// Composable morphisms.
pub trait Arrow: Clone {
    type Object: Clone;
    /// `self` followed by `next`.
    fn then(&self, next: &Self) -> Self;
    fn identity_on(obj: &Self::Object) -> Self;
}

impl Arrow for ModuleMap {
    type Object = FpModule;
    fn then(&self, next: &Self) -> Self {
        next.compose(self)
    }
    fn identity_on(obj: &FpModule) -> Self {
        ModuleMap::identity(obj)
    }
}

impl Arrow for ComplexMap {
    type Object = Complex;
    fn then(&self, next: &Self) -> Self {
        next.compose(self)
    }
    fn identity_on(obj: &Complex) -> Self {
        ComplexMap::identity(obj)
    }
}

#[derive(Clone, Debug)]
pub struct LevelSystem<T: Arrow> {
    pub direction: Direction,
    /// Index of `levels[0]`.
    pub first: usize,
    levels: Vec<T::Object>,
    /// `transitions[i]` joins `levels[i]` and `levels[i + 1]`.
    transitions: Vec<T>,
}

pub type ModuleSystem = LevelSystem<ModuleMap>;
pub type ComplexSystem = LevelSystem<ComplexMap>;

impl<T: Arrow> LevelSystem<T> {
    pub fn new(direction: Direction, first: usize, levels: Vec<T::Object>, transitions: Vec<T>) -> Result<Self, ComplexError> {
        if levels.is_empty() || transitions.len() + 1 != levels.len() {
            return Err(ComplexError::Shape(format!(
                "{} levels need {} transitions, got {}",
                levels.len(),
                levels.len().saturating_sub(1),
                transitions.len()
            )));
        }
        Ok(Self {
            direction,
            first,
            levels,
            transitions,
        })
    }

    pub fn last(&self) -> usize {
        self.first + self.levels.len() - 1
    }

    pub fn levels(&self) -> std::ops::RangeInclusive<usize> {
        self.first..=self.last()
    }

    pub fn level(&self, j: usize) -> &T::Object {
        &self.levels[j - self.first]
    }

    /// The transition between levels j and j+1, in the system's direction.
    pub fn transition(&self, j: usize) -> &T {
        &self.transitions[j - self.first]
    }

    /// Composite transition between levels i ≤ j: level j → level i for an
    /// inverse system, level i → level j for a direct one.
    pub fn composite(&self, i: usize, j: usize) -> T {
        assert!(i <= j, "composite needs i ≤ j");
        let mut acc = T::identity_on(self.level(match self.direction {
            Direction::Inverse => j,
            Direction::Direct => i,
        }));
        match self.direction {
            Direction::Inverse => {
                for l in (i..j).rev() {
                    acc = acc.then(self.transition(l));
                }
            }
            Direction::Direct => {
                for l in i..j {
                    acc = acc.then(self.transition(l));
                }
            }
        }
        acc
    }

    /// Applies a functor levelwise.
    pub fn map<U: Arrow, F, G>(&self, on_levels: F, on_arrows: G) -> LevelSystem<U>
    where
        F: Fn(usize, &T::Object) -> U::Object,
        G: Fn(usize, &T, &U::Object, &U::Object) -> U,
    {
        let levels: Vec<U::Object> = self
            .levels()
            .map(|j| on_levels(j, self.level(j)))
            .collect();
        let transitions = self
            .levels()
            .take(self.levels.len() - 1)
            .map(|j| {
                let (a, b) = (&levels[j - self.first], &levels[j + 1 - self.first]);
                let (s, t) = match self.direction {
                    Direction::Inverse => (b, a),
                    Direction::Direct => (a, b),
                };
                on_arrows(j, self.transition(j), s, t)
            })
            .collect();
        LevelSystem {
            direction: self.direction,
            first: self.first,
            levels,
            transitions,
        }
    }
}

/// H^k applied levelwise, with presentations chosen once per level so that
/// the induced transitions compose.
pub fn cohomology_system(sys: &ComplexSystem, k: i32) -> ModuleSystem {
    let hs: Vec<Cohomology> = sys.levels().map(|j| Cohomology::new(sys.level(j), k)).collect();
    let levels = hs.iter().map(|h| h.module().clone()).collect();
    let transitions = sys
        .levels()
        .take(hs.len() - 1)
        .map(|j| {
            let i = j - sys.first;
            match sys.direction {
                Direction::Inverse => induced_map_between(sys.transition(j), &hs[i + 1], &hs[i]),
                Direction::Direct => induced_map_between(sys.transition(j), &hs[i], &hs[i + 1]),
            }
        })
        .collect();
    LevelSystem {
        direction: sys.direction,
        first: sys.first,
        levels,
        transitions,
    }
}
