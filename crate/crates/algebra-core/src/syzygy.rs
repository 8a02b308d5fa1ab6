//! Gröbner bases of submodules of A^m (A a presented ring), membership,
//! lifting and syzygies.
//!
//! Over a quotient A = P/I the submodule is represented by its preimage in
//! P^m, i.e. the generators are joined by g·e_k for g in the Gröbner basis of
//! I. Tracking uses the augmented module {(c_i, e_i)} in P^{m+s}; vectors
//! with vanishing top part are exactly the syzygies.

use crate::groebner::{groebner_basis, SVec};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Clone, Debug)]
pub struct ModuleGb {
    rank: usize,
    ncols: usize,
    tracked: bool,
    basis: Vec<SVec>,
}

impl ModuleGb {
    /// Gröbner basis of the submodule of A^rank spanned by `cols`.
    pub fn new(ring: &Ring, rank: usize, cols: &[Vec<Poly>], tracked: bool) -> Self {
        let ncols = cols.len();
        let total = if tracked { rank + ncols } else { rank };
        let mut gens = Vec::with_capacity(ncols + ring.quotient_gb().len() * total);
        for (i, c) in cols.iter().enumerate() {
            debug_assert_eq!(c.len(), rank);
            let mut v = SVec::from_column(c, 0);
            if tracked {
                let tag = SVec::from_column(std::slice::from_ref(&ring.one()), rank + i);
                v.terms.extend(tag.terms);
            }
            gens.push(v);
        }
        for g in ring.quotient_gb() {
            for k in 0..total {
                gens.push(SVec::from_column(std::slice::from_ref(g), k));
            }
        }
        let basis = groebner_basis(ring.ctx(), &gens);
        Self {
            rank,
            ncols,
            tracked,
            basis,
        }
    }

    pub fn from_matrix(ring: &Ring, m: &Matrix, tracked: bool) -> Self {
        Self::new(ring, m.nrows(), &m.cols(), tracked)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Normal form of `v` modulo the submodule (canonical representative).
    pub fn reduce(&self, ring: &Ring, v: &[Poly]) -> Vec<Poly> {
        let r = ring.ctx().vreduce(&SVec::from_column(v, 0), &self.basis);
        r.to_column(0, self.rank)
    }

    pub fn contains(&self, ring: &Ring, v: &[Poly]) -> bool {
        let r = ring.ctx().vreduce(&SVec::from_column(v, 0), &self.basis);
        r.terms.iter().all(|t| t.pos >= self.rank)
    }

    /// Coefficients h with v = Σ h_i c_i, if v lies in the submodule.
    pub fn lift(&self, ring: &Ring, v: &[Poly]) -> Option<Vec<Poly>> {
        assert!(self.tracked, "lift needs a tracked basis");
        let r = ring.ctx().vreduce(&SVec::from_column(v, 0), &self.basis);
        if !r.supported_from(self.rank) {
            return None;
        }
        Some(
            r.to_column(self.rank, self.ncols)
                .iter()
                .map(|h| ring.nf(&ring.neg(h)))
                .collect(),
        )
    }

    /// Generators of the syzygy module of the input columns, reduced modulo
    /// the defining ideal, zero columns dropped.
    pub fn syzygies(&self, ring: &Ring) -> Vec<Vec<Poly>> {
        assert!(self.tracked, "syzygies need a tracked basis");
        let mut out: Vec<Vec<Poly>> = Vec::new();
        for b in &self.basis {
            if !b.supported_from(self.rank) {
                continue;
            }
            let col: Vec<Poly> = b
                .to_column(self.rank, self.ncols)
                .iter()
                .map(|p| ring.nf(p))
                .collect();
            if col.iter().all(|p| p.is_zero()) || out.contains(&col) {
                continue;
            }
            out.push(col);
        }
        out
    }

    /// The reduced Gröbner basis of the submodule itself, as columns.
    pub fn basis_columns(&self) -> Vec<Vec<Poly>> {
        self.basis
            .iter()
            .filter(|b| !b.supported_from(self.rank))
            .map(|b| b.to_column(0, self.rank))
            .collect()
    }
}

/// Reduced module Gröbner basis of the column span of `m` and a generating
/// matrix of its syzygies (columns).
pub fn groebner_and_syzygies(ring: &Ring, m: &Matrix) -> (Vec<Vec<Poly>>, Matrix) {
    let gb = ModuleGb::from_matrix(ring, m, true);
    let syz = gb.syzygies(ring);
    let quotient_free: Vec<Vec<Poly>> = gb
        .basis_columns()
        .into_iter()
        .filter(|c| !is_quotient_relation(ring, c))
        .collect();
    (quotient_free, Matrix::from_cols(m.ncols(), &syz))
}

fn is_quotient_relation(ring: &Ring, c: &[Poly]) -> bool {
    c.iter().all(|p| ring.nf(p).is_zero())
}

/// Syzygy matrix of the columns of `m` over the ring.
pub fn syzygy_matrix(ring: &Ring, m: &Matrix) -> Matrix {
    let gb = ModuleGb::from_matrix(ring, m, true);
    Matrix::from_cols(m.ncols(), &gb.syzygies(ring))
}

/// Drops columns lying in the span of the remaining ones (greedy, last
/// first), keeping the column order of survivors. `extra` columns are always
/// available for spanning but never returned.
pub fn irredundant_columns(ring: &Ring, rank: usize, cols: &[Vec<Poly>], extra: &[Vec<Poly>]) -> Vec<usize> {
    let mut keep: Vec<usize> = (0..cols.len()).collect();
    let mut k = cols.len();
    while k > 0 {
        k -= 1;
        if !keep.contains(&k) {
            continue;
        }
        let others: Vec<Vec<Poly>> = keep
            .iter()
            .filter(|&&i| i != k)
            .map(|&i| cols[i].clone())
            .chain(extra.iter().cloned())
            .collect();
        if cols[k].iter().all(|p| p.is_zero()) {
            keep.retain(|&i| i != k);
            continue;
        }
        let gb = ModuleGb::new(ring, rank, &others, false);
        if gb.contains(ring, &cols[k]) {
            keep.retain(|&i| i != k);
        }
    }
    keep
}
