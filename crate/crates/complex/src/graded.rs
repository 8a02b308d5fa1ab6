//! Degree-d pieces of graded complexes as complexes of vector spaces.

use algebra_core::graded::{map_piece, ModulePiece};
use algebra_core::linalg::{FMat, Homology};
use algebra_core::AlgebraError;

use crate::complex::Complex;
use crate::map::ComplexMap;

/// X_d with cohomology of every component, computed over the field.
#[derive(Clone, Debug)]
pub struct GradedSlice {
    pub d: i64,
    pub lo: i32,
    pieces: Vec<ModulePiece>,
    diffs: Vec<FMat>,
    homology: Vec<Homology>,
}

impl GradedSlice {
    pub fn new(x: &Complex, d: i64) -> Result<Self, AlgebraError> {
        let ring = x.ring();
        let (lo, hi) = (x.lo(), x.hi());
        let pieces: Vec<ModulePiece> = (lo - 1..=hi + 1)
            .map(|k| ModulePiece::new(&x.component(k), d))
            .collect::<Result<_, _>>()?;
        let diffs: Vec<FMat> = (lo - 1..=hi)
            .map(|k| {
                let i = (k - lo + 1) as usize;
                map_piece(&x.differential(k), &pieces[i], &pieces[i + 1])
            })
            .collect();
        let homology = (lo..=hi)
            .map(|k| {
                let i = (k - lo + 1) as usize;
                Homology::new(ring.field(), &diffs[i - 1], &diffs[i], pieces[i].dim())
            })
            .collect();
        Ok(Self {
            d,
            lo,
            pieces,
            diffs,
            homology,
        })
    }

    fn idx(&self, k: i32) -> Option<usize> {
        let i = k - self.lo;
        (i >= 0 && (i as usize) < self.homology.len()).then_some(i as usize)
    }

    /// dim H^k(X)_d.
    pub fn dim(&self, k: i32) -> usize {
        self.idx(k).map_or(0, |i| self.homology[i].dim)
    }

    pub fn component_dim(&self, k: i32) -> usize {
        self.idx(k).map_or(0, |i| self.pieces[i + 1].dim())
    }

    pub fn homology(&self, k: i32) -> Option<&Homology> {
        self.idx(k).map(|i| &self.homology[i])
    }

    pub fn piece(&self, k: i32) -> Option<&ModulePiece> {
        self.idx(k).map(|i| &self.pieces[i + 1])
    }

    pub fn differential(&self, k: i32) -> Option<&FMat> {
        self.idx(k).map(|i| &self.diffs[i + 1])
    }
}

/// Matrix of H^k(φ)_d in the homology bases of the two slices.
pub fn induced_slice_map(phi: &ComplexMap, k: i32, src: &GradedSlice, tgt: &GradedSlice) -> FMat {
    let field = phi.source().ring().field().clone();
    let (Some(hs), Some(ps)) = (src.homology(k), src.piece(k)) else {
        return FMat::zeros(tgt.dim(k), 0);
    };
    let (Some(ht), Some(pt)) = (tgt.homology(k), tgt.piece(k)) else {
        return FMat::zeros(0, hs.dim);
    };
    let f = map_piece(&phi.component(k), ps, pt);
    let img = f.mul(&field, &hs.representatives());
    ht.coords(&field, &img)
}
