//! Degreewise linear algebra for graded rings: the degree-d piece of a
//! graded free or finitely presented module is a finite-dimensional vector
//! space, and homogeneous maps become matrices over the field.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::field::Coeff;
use crate::linalg::FMat;
use crate::matrix::Matrix;
use crate::module::{FpModule, ModuleMap};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::Ring;

/// Monomial basis {(generator, standard monomial)} of F_d.
#[derive(Clone, Debug)]
pub struct FreePiece {
    pub basis: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl FreePiece {
    pub fn new(ring: &Ring, degrees: &[i64], d: i64) -> Self {
        let mut basis = Vec::new();
        for (i, g) in degrees.iter().enumerate() {
            for m in ring.degree_basis(d - g).iter() {
                basis.push((i, *m));
            }
        }
        let index = basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        Self { basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a column in normal form, homogeneous of degree d.
    pub fn coords(&self, col: &[Poly]) -> Vec<Coeff> {
        let mut v = vec![Coeff::zero(); self.basis.len()];
        for (i, p) in col.iter().enumerate() {
            for t in p.terms() {
                let k = self
                    .index
                    .get(&(i, t.m))
                    .unwrap_or_else(|| panic!("term outside degree piece (generator {i})"));
                v[*k] = t.c.clone();
            }
        }
        v
    }

    /// Image of the basis element `k` under a matrix of ring elements.
    fn image_of(&self, ring: &Ring, phi: &Matrix, k: usize) -> Vec<Poly> {
        let (i, m) = self.basis[k];
        let mono = ring.ctx().monomial(m, ring.field().one());
        (0..phi.nrows())
            .map(|r| {
                let e = phi.get(r, i);
                if e.is_zero() {
                    Poly::zero()
                } else {
                    ring.mul(e, &mono)
                }
            })
            .collect()
    }
}

/// Matrix of a homogeneous map of graded free modules in one degree.
pub fn free_map_piece(ring: &Ring, phi: &Matrix, src: &FreePiece, tgt: &FreePiece) -> FMat {
    let cols: Vec<Vec<Coeff>> = (0..src.dim())
        .map(|k| tgt.coords(&src.image_of(ring, phi, k)))
        .collect();
    FMat::from_cols(tgt.dim(), &cols)
}

/// M_d = F_d / (image of the relations)_d with the quotient basis given by
/// the non-pivot coordinates of the row-reduced image.
#[derive(Clone, Debug)]
pub struct ModulePiece {
    pub free: FreePiece,
    rref: FMat,
    pivots: Vec<usize>,
    quotient: Vec<usize>,
}

impl ModulePiece {
    pub fn new(m: &FpModule, d: i64) -> Result<Self, AlgebraError> {
        let ring = m.ring();
        let degrees = m
            .degrees()
            .ok_or_else(|| AlgebraError::NotGraded("module without generator degrees".into()))?;
        let free = FreePiece::new(ring, degrees, d);
        let rel_deg = m.relation_degrees().ok_or_else(|| {
            AlgebraError::NotGraded("relation column is not homogeneous".into())
        })?;
        let rels = m.relations();
        let mut rows: Vec<Vec<Coeff>> = Vec::new();
        for (j, &cd) in rel_deg.iter().enumerate() {
            if cd == i64::MIN {
                continue;
            }
            for mono in ring.degree_basis(d - cd).iter() {
                let mp = ring.ctx().monomial(*mono, ring.field().one());
                let col: Vec<Poly> = (0..rels.nrows())
                    .map(|r| ring.mul(rels.get(r, j), &mp))
                    .collect();
                rows.push(free.coords(&col));
            }
        }
        let img = if rows.is_empty() {
            FMat::zeros(0, free.dim())
        } else {
            FMat::from_rows(&rows)
        };
        let (rref, pivots) = img.rref(ring.field());
        let rref = rref.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        let quotient = (0..free.dim()).filter(|c| !pivots.contains(c)).collect();
        Ok(Self {
            free,
            rref,
            pivots,
            quotient,
        })
    }

    pub fn dim(&self) -> usize {
        self.quotient.len()
    }

    /// Coordinates in M_d of F_d vectors (columns).
    pub fn project(&self, ring: &Ring, v: &FMat) -> FMat {
        let f = ring.field();
        let mut out = FMat::zeros(self.quotient.len(), v.ncols());
        for j in 0..v.ncols() {
            let mut w = v.col(j);
            for (i, &p) in self.pivots.iter().enumerate() {
                let c = w[p].clone();
                if c.is_zero() {
                    continue;
                }
                for k in 0..w.len() {
                    let r = self.rref.get(i, k);
                    if !r.is_zero() {
                        w[k] = f.sub(&w[k], &f.mul(&c, r));
                    }
                }
            }
            for (qi, &q) in self.quotient.iter().enumerate() {
                out.set(qi, j, w[q].clone());
            }
        }
        out
    }

    /// F_d lifts of the quotient basis (unit vectors).
    pub fn lifts(&self, ring: &Ring) -> FMat {
        let mut m = FMat::zeros(self.free.dim(), self.quotient.len());
        for (j, &q) in self.quotient.iter().enumerate() {
            m.set(q, j, ring.field().one());
        }
        m
    }
}

/// Matrix of a homogeneous module map M_d → N_d in the quotient bases.
pub fn map_piece(f: &ModuleMap, src: &ModulePiece, tgt: &ModulePiece) -> FMat {
    let ring = f.ring();
    let full = free_map_piece(ring, f.matrix(), &src.free, &tgt.free);
    let lifted = full.mul(ring.field(), &src.lifts(ring));
    tgt.project(ring, &lifted)
}

/// Hilbert function values of a graded module over a degree range.
pub fn hilbert_values(m: &FpModule, d0: i64, d1: i64) -> Result<Vec<usize>, AlgebraError> {
    (d0..=d1).map(|d| Ok(ModulePiece::new(m, d)?.dim())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::TermOrder;
    use crate::ring::make_ring_str;

    #[test]
    fn quotient_by_squares() {
        let r = make_ring_str(Field::Rational, &["x", "y"], Some(&[1, 1]), &[], TermOrder::Grevlex).unwrap();
        let m = FpModule::new(
            &r,
            Matrix::parse(&r, &[&["x^2", "y^2"]]).unwrap(),
            Some(vec![0]),
        )
        .unwrap();
        assert_eq!(hilbert_values(&m, -1, 4).unwrap(), vec![0, 1, 2, 1, 0, 0]);
    }

    #[test]
    fn multiplication_map_piece() {
        let r = make_ring_str(Field::Rational, &["t"], Some(&[1]), &[], TermOrder::Grevlex).unwrap();
        let a0 = FpModule::free_graded(&r, vec![0]);
        let a1 = FpModule::free_graded(&r, vec![1]);
        // t : A(-1) -> A
        let f = ModuleMap::new(&a1, &a0, Matrix::parse(&r, &[&["t"]]).unwrap()).unwrap();
        let s = ModulePiece::new(&a1, 3).unwrap();
        let t = ModulePiece::new(&a0, 3).unwrap();
        let m = map_piece(&f, &s, &t);
        assert_eq!((m.nrows(), m.ncols()), (1, 1));
        assert_eq!(m.get(0, 0), &Coeff::from_integer(1.into()));
    }
}
