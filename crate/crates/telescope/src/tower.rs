//! Completion towers A/(𝒂^j) ⊗ M and the tower map out of Hom(Tel_j, M).

use algebra_core::{ElementSequence, Matrix, Poly};
use complex::ops::{hom_from_free, hom_map_source};
use complex::system::{ComplexSystem, Direction, LevelSystem};
use complex::{Complex, ComplexMap};
use koszul::quotient_module;

use crate::error::TelescopeError;
use crate::tel::{tel_inclusion, tel_level_map, telescope, u_map, unit_complex};

/// Inverse system {A/(𝒂^j) ⊗ M}_{j=1..J} with canonical surjections, and the
/// canonical maps τ_j : M → A/(𝒂^j) ⊗ M.
#[derive(Clone, Debug)]
pub struct CompletionTower {
    pub seq: ElementSequence,
    pub source: Complex,
    pub system: ComplexSystem,
}

impl CompletionTower {
    pub fn level(&self, j: usize) -> &Complex {
        self.system.level(j)
    }

    pub fn cap(&self) -> usize {
        self.system.last()
    }

    pub fn tau(&self, j: usize) -> ComplexMap {
        identity_matrices(&self.source, self.level(j))
    }
}

fn identity_matrices(src: &Complex, tgt: &Complex) -> ComplexMap {
    let ring = src.ring();
    let mats = src
        .degrees()
        .map(|k| (k, Matrix::identity(ring, src.rank(k))))
        .collect();
    ComplexMap::from_parts(src, tgt, mats)
}

/// A/(𝒂^j) ⊗ M degreewise.
pub fn completion_level(seq: &ElementSequence, m: &Complex, j: usize) -> Complex {
    let q = quotient_module(&seq.power(j as u32));
    m.map_components(|c| q.tensor(c))
}

pub fn completion_tower(seq: &ElementSequence, m: &Complex, cap: usize) -> Result<CompletionTower, TelescopeError> {
    if cap == 0 {
        return Err(TelescopeError::BadLevels(0, 0));
    }
    let levels: Vec<Complex> = (1..=cap).map(|j| completion_level(seq, m, j)).collect();
    let transitions = (1..cap)
        .map(|j| identity_matrices(&levels[j], &levels[j - 1]))
        .collect();
    let system = LevelSystem::new(Direction::Inverse, 1, levels, transitions)?;
    Ok(CompletionTower {
        seq: seq.clone(),
        source: m.clone(),
        system,
    })
}

/// The inverse system {Hom(Tel_j, M)} (restriction along Tel_j ⊂ Tel_{j+1})
/// with the levelwise maps tel_{𝒂,M,j} into the completion tower.
#[derive(Clone, Debug)]
pub struct TelTower {
    pub hom: ComplexSystem,
    pub completion: CompletionTower,
    tel: Vec<ComplexMap>,
}

impl TelTower {
    pub fn tel(&self, j: usize) -> &ComplexMap {
        &self.tel[j - 1]
    }

    /// Hom(u_{𝒂,j}, 1_M) : M ≅ Hom(A, M) → Hom(Tel_j, M).
    pub fn hom_u(&self, j: usize) -> ComplexMap {
        let seq = &self.completion.seq;
        let m = &self.completion.source;
        let unit = unit_complex(seq);
        let hom_a = hom_from_free(&unit, m).expect("free source");
        let f = hom_map_source(&u_map(seq, j), m, &hom_a, self.hom.level(j));
        f.retarget(m, self.hom.level(j))
    }

    /// Whether tel_j commutes with the two transitions j+1 → j.
    pub fn square_commutes(&self, j: usize) -> bool {
        let a = self.tel(j).compose(self.hom.transition(j));
        let b = self.completion.system.transition(j).compose(self.tel(j + 1));
        a.equals(&b)
    }
}

/// tel_{𝒂,M,j} = tel_{𝒂,j} ⊗ 1_M on Hom(Tel_j, M) ≅ Tel_j^∨ ⊗ M.
pub fn tel_module_map(seq: &ElementSequence, m: &Complex, hom: &Complex, target: &Complex, j: usize) -> Result<ComplexMap, TelescopeError> {
    let tel = telescope(seq, j).complex;
    let t = tel_level_map(seq, j)?;
    let coeffs = t.component(0).matrix().row(0);
    let r0 = tel.rank(0);
    let mut mats = Vec::new();
    for k in hom.degrees() {
        let blocks = complex::ops::hom_blocks(&tel, m, k);
        let g = m.rank(k);
        let mut mat = Matrix::zeros(target.rank(k), hom.rank(k));
        if let Some(b) = blocks.iter().find(|b| b.i == 0) {
            for a in 0..r0 {
                for e in 0..g {
                    mat.set(e, b.offset + a * g + e, coeffs[a].clone());
                }
            }
        }
        mats.push((k, mat));
    }
    Ok(ComplexMap::new(hom, target, mats)?)
}

pub fn tel_on_module(seq: &ElementSequence, m: &Complex, cap: usize) -> Result<TelTower, TelescopeError> {
    let completion = completion_tower(seq, m, cap)?;
    let tels: Vec<Complex> = (1..=cap).map(|j| telescope(seq, j).complex).collect();
    let homs: Vec<Complex> = tels
        .iter()
        .map(|t| hom_from_free(t, m).map_err(TelescopeError::from))
        .collect::<Result<_, _>>()?;
    let mut transitions = Vec::new();
    for j in 1..cap {
        let inc = tel_inclusion(seq, j, j + 1)?;
        transitions.push(hom_map_source(&inc, m, &homs[j], &homs[j - 1]));
    }
    let tel = (1..=cap)
        .map(|j| tel_module_map(seq, m, &homs[j - 1], completion.level(j), j))
        .collect::<Result<Vec<_>, _>>()?;
    let hom = LevelSystem::new(Direction::Inverse, 1, homs, transitions)?;
    Ok(TelTower {
        hom,
        completion,
        tel,
    })
}

/// Generator coordinates in Hom(Tel_j, M)^0 of the degree-0 function f.
pub fn degree0_element(
    seq: &ElementSequence,
    m: &Complex,
    hom: &Complex,
    f: &[(Vec<usize>, Vec<Poly>)],
    j: usize,
) -> Result<Vec<Poly>, TelescopeError> {
    let ring = seq.ring();
    let tel = telescope(seq, j);
    let blocks = complex::ops::hom_blocks(&tel.complex, m, 0);
    let b = blocks.iter().find(|b| b.i == 0).expect("degree-0 block");
    let g = m.rank(0);
    let mut v = vec![Poly::zero(); hom.rank(0)];
    for (idx, val) in f {
        let a = tel.degree0_index(idx)?;
        for e in 0..g {
            v[b.offset + a * g + e] = ring.add(&v[b.offset + a * g + e], &val[e]);
        }
    }
    Ok(v)
}
