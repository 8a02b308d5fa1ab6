//! Certificates that a family of level maps between two systems induces an
//! isomorphism of ind- or pro-objects on cohomology, and that a system is
//! ind- or pro-zero.
//!
//! For maps φ_j : X_j → Y_j of direct systems, H^k(φ) is an ind-isomorphism
//! when every kernel class of H^k(φ_j) dies in some later H^k(X_{j'}) and
//! every class of H^k(Y_j) becomes an image in some later H^k(Y_{j'}).
//! Inverse systems use the dual conditions.

use algebra_core::ModuleMap;
use complex::cohomology::{induced_map_between, Cohomology};
use complex::system::{ComplexSystem, Direction, LevelSystem, ModuleSystem};
use complex::ComplexMap;
use rayon::prelude::*;

/// H^k of every level with the induced transitions, keeping the chosen
/// presentations so that level maps can be induced compatibly.
pub struct CohomologySystem {
    pub degree: i32,
    pub groups: Vec<Cohomology>,
    pub system: ModuleSystem,
}

pub fn cohomology_of(sys: &ComplexSystem, k: i32) -> CohomologySystem {
    let groups: Vec<Cohomology> = sys
        .levels()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|j| Cohomology::new(sys.level(j), k))
        .collect();
    let levels = groups.iter().map(|h| h.module().clone()).collect();
    let transitions = sys
        .levels()
        .take(groups.len() - 1)
        .map(|j| {
            let i = j - sys.first;
            match sys.direction {
                Direction::Inverse => induced_map_between(sys.transition(j), &groups[i + 1], &groups[i]),
                Direction::Direct => induced_map_between(sys.transition(j), &groups[i], &groups[i + 1]),
            }
        })
        .collect();
    let system = LevelSystem::new(sys.direction, sys.first, levels, transitions).expect("same shape as the complex system");
    CohomologySystem {
        degree: k,
        groups,
        system,
    }
}

/// Composite transition on H^k as a map from the earlier level in the
/// direction of the system: i → j (direct) or j → i (inverse).
fn composite(sys: &ModuleSystem, i: usize, j: usize) -> ModuleMap {
    sys.composite(i, j)
}

/// (i, j) pairs: level i is killed by the composite through level j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroCertificate {
    pub pairs: Vec<(usize, usize)>,
    pub cap: usize,
}

impl ZeroCertificate {
    /// Last level of the contiguous certified range, if any.
    pub fn through(&self) -> Option<usize> {
        self.pairs.last().map(|p| p.0)
    }

    pub fn offsets(&self) -> Vec<usize> {
        self.pairs.iter().map(|(i, j)| j - i).collect()
    }
}

/// Ind- or pro-zero search; stops at the first level that survives to the cap.
pub fn eventually_zero(sys: &ModuleSystem) -> ZeroCertificate {
    let mut pairs = Vec::new();
    for i in sys.levels() {
        match (i..=sys.last()).find(|&j| composite(sys, i, j).is_zero_map()) {
            Some(j) => pairs.push((i, j)),
            None => break,
        }
    }
    ZeroCertificate {
        pairs,
        cap: sys.last(),
    }
}

/// Evidence that H^k of a family of level maps is an ind/pro-isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    pub degree: i32,
    /// (i, j): the kernel at level i (direct) or j (inverse) dies by level
    /// j (direct) or i (inverse).
    pub kernel: Vec<(usize, usize)>,
    /// (i, j): level i of the target (direct) lands in the image at level j;
    /// for inverse systems, level j maps into the image at level i.
    pub cokernel: Vec<(usize, usize)>,
    pub cap: usize,
}

impl IsoCertificate {
    /// Last level i certified on both sides.
    pub fn through(&self) -> Option<usize> {
        match (self.kernel.last(), self.cokernel.last()) {
            (Some(a), Some(b)) => Some(a.0.min(b.0)),
            _ => None,
        }
    }

    /// Levels from which the maps are already surjective on H^k.
    pub fn surjective_levels(&self) -> Vec<usize> {
        self.cokernel.iter().filter(|(i, j)| i == j).map(|p| p.0).collect()
    }
}

/// `maps[j - first]` is φ_j : X_j → Y_j; X and Y must share direction and
/// level range.
pub fn iso_certificate(x: &ComplexSystem, y: &ComplexSystem, maps: &[ComplexMap], k: i32) -> IsoCertificate {
    let hx = cohomology_of(x, k);
    let hy = cohomology_of(y, k);
    iso_certificate_on(&hx, &hy, maps, x.direction)
}

pub fn iso_certificate_on(hx: &CohomologySystem, hy: &CohomologySystem, maps: &[ComplexMap], direction: Direction) -> IsoCertificate {
    let first = hx.system.first;
    let last = hx.system.last();
    let hphi: Vec<ModuleMap> = maps
        .par_iter()
        .enumerate()
        .map(|(i, f)| induced_map_between(f, &hx.groups[i], &hy.groups[i]))
        .collect();
    let kernels: Vec<ModuleMap> = hphi.par_iter().map(|f| f.kernel().1).collect();
    let cokernels: Vec<ModuleMap> = hphi.par_iter().map(|f| f.cokernel().1).collect();
    let mut kernel = Vec::new();
    for i in first..=last {
        let hit = (i..=last).find(|&j| match direction {
            Direction::Direct => composite(&hx.system, i, j).compose(&kernels[i - first]).is_zero_map(),
            Direction::Inverse => composite(&hx.system, i, j).compose(&kernels[j - first]).is_zero_map(),
        });
        match hit {
            Some(j) => kernel.push((i, j)),
            None => break,
        }
    }
    let mut cokernel = Vec::new();
    for i in first..=last {
        let hit = (i..=last).find(|&j| match direction {
            Direction::Direct => cokernels[j - first].compose(&composite(&hy.system, i, j)).is_zero_map(),
            Direction::Inverse => cokernels[i - first].compose(&composite(&hy.system, i, j)).is_zero_map(),
        });
        match hit {
            Some(j) => cokernel.push((i, j)),
            None => break,
        }
    }
    IsoCertificate {
        degree: hx.degree,
        kernel,
        cokernel,
        cap: last,
    }
}
