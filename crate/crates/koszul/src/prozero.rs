//! Pro-zero certificates for inverse systems of modules.

use complex::system::{Direction, ModuleSystem};

use crate::tower::KoszulTower;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every level i ≤ `through` has a recorded j(i) with zero composite.
    Certified { through: usize },
    /// Not even level `first` dies by the cap.
    UndeterminedAtCap(usize),
}

/// Outcome for one inverse system: pairs (i, j(i)) with the composite
/// level j(i) → level i zero, j(i) minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemCertificate {
    pub pairs: Vec<(usize, usize)>,
    pub verdict: Verdict,
}

impl SystemCertificate {
    pub fn is_certified(&self) -> bool {
        matches!(self.verdict, Verdict::Certified { .. })
    }

    /// j(i) − i for each recorded pair.
    pub fn offsets(&self) -> Vec<usize> {
        self.pairs.iter().map(|(i, j)| j - i).collect()
    }

    /// Re-checks every recorded pair against the system.
    pub fn verify(&self, system: &ModuleSystem) -> bool {
        self.pairs
            .iter()
            .all(|&(i, j)| j <= system.last() && system.composite(i, j).is_zero_map())
    }
}

/// Searches, for i = first, first+1, ..., the least j ≤ cap with a zero
/// composite; the certificate stops at the first level that survives.
pub fn pro_zero_check(system: &ModuleSystem) -> SystemCertificate {
    assert_eq!(system.direction, Direction::Inverse, "pro-zero is a property of inverse systems");
    let mut pairs = Vec::new();
    for i in system.levels() {
        let found = (i..=system.last()).find(|&j| system.composite(i, j).is_zero_map());
        match found {
            Some(j) => pairs.push((i, j)),
            None => break,
        }
    }
    let verdict = match pairs.last() {
        Some(&(i, _)) => Verdict::Certified { through: i },
        None => Verdict::UndeterminedAtCap(system.last()),
    };
    SystemCertificate { pairs, verdict }
}

/// Certificates for H^k of the Koszul tower in every degree k < 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProZeroCertificate {
    pub cap: usize,
    pub degrees: Vec<(i32, SystemCertificate)>,
}

impl ProZeroCertificate {
    pub fn is_certified(&self) -> bool {
        self.degrees.iter().all(|(_, c)| c.is_certified())
    }

    pub fn degree(&self, k: i32) -> Option<&SystemCertificate> {
        self.degrees.iter().find(|(d, _)| *d == k).map(|(_, c)| c)
    }

    pub fn verify(&self, tower: &KoszulTower) -> bool {
        self.degrees
            .iter()
            .all(|(k, c)| c.verify(&tower.cohomology(*k)))
    }
}

/// Weak proregularity evidence: each H^k tower (k < 0) of the Koszul
/// system is checked for pro-zero up to the tower's cap.
pub fn wpr_check(tower: &KoszulTower) -> ProZeroCertificate {
    let n = tower.seq.len() as i32;
    let degrees = (-n..0)
        .map(|k| (k, pro_zero_check(&tower.cohomology(k))))
        .collect();
    ProZeroCertificate {
        cap: tower.cap(),
        degrees,
    }
}
