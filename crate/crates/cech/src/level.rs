//! The level-j Čech complex of the cover by the sets {a_i ≠ 0}.
//!
//! Degree p carries one rank-1 free module per strictly increasing tuple
//! I = (i_0 < … < i_p); its generator e_I stands for 1/s_I^j with
//! s_I = a_{i_0}···a_{i_p}. Restricting e_I to I ∪ {i} multiplies by a_i^j,
//! and the coboundary is the alternating sum of these restrictions.

use algebra_core::{ElementSequence, FpModule, Matrix, Poly};
use complex::{Complex, ComplexMap};
use koszul::tower::graded_degrees;

use crate::error::CechError;
use crate::localized::LocalizedElement;

/// Strictly increasing tuples of length `len` from 0..n, in lexicographic order.
pub fn strict_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, len, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug)]
pub struct CechLevelComplex {
    pub seq: ElementSequence,
    pub level: usize,
    /// `tuples[p]` indexes the generators of degree p.
    pub tuples: Vec<Vec<Vec<usize>>>,
    pub complex: Complex,
}

impl CechLevelComplex {
    pub fn n(&self) -> usize {
        self.seq.len()
    }

    /// The denominator base s_I.
    pub fn base(&self, tuple: &[usize]) -> Poly {
        let ring = self.seq.ring();
        tuple.iter().fold(ring.one(), |acc, &i| ring.mul(&acc, self.seq.get(i)))
    }

    pub fn index(&self, tuple: &[usize]) -> Option<usize> {
        self.tuples.get(tuple.len().checked_sub(1)?)?.iter().position(|t| t == tuple)
    }

    /// The element c·e_I = c/s_I^j of A[s_I^{-1}], with saturation cap 2j.
    pub fn element(&self, tuple: &[usize], c: &Poly) -> LocalizedElement {
        let ring = self.seq.ring();
        LocalizedElement::new(ring, &self.base(tuple), c, self.level as u32, saturation_cap(self.level))
    }

    /// f_𝒂 : A → C^0, 1 ↦ (a_i^j / a_i^j)_i.
    pub fn localization_map(&self) -> ComplexMap {
        let ring = self.seq.ring();
        let unit = unit_complex(&self.seq);
        let col: Vec<Poly> = self.tuples[0].iter().map(|t| ring.pow(self.seq.get(t[0]), self.level as u32)).collect();
        ComplexMap::from_parts(&unit, &self.complex, vec![(0, Matrix::from_cols(col.len(), &[col]))])
    }
}

/// Default saturation cap at level j.
pub fn saturation_cap(level: usize) -> u32 {
    2 * level as u32
}

pub(crate) fn unit_complex(seq: &ElementSequence) -> Complex {
    let ring = seq.ring();
    let m = match graded_degrees(seq) {
        Some(_) => FpModule::free_graded(ring, vec![0]),
        None => FpModule::free(ring, 1),
    };
    Complex::concentrated(&m, 0)
}

pub fn cech_level(seq: &ElementSequence, j: usize) -> Result<CechLevelComplex, CechError> {
    let ring = seq.ring();
    let n = seq.len();
    let degs = graded_degrees(seq);
    let tuples: Vec<Vec<Vec<usize>>> = (1..=n).map(|len| strict_tuples(n, len)).collect();
    let comps: Vec<FpModule> = tuples
        .iter()
        .map(|ts| match &degs {
            Some(d) => FpModule::free_graded(ring, ts.iter().map(|t| -(j as i64) * t.iter().map(|&i| d[i]).sum::<i64>()).collect()),
            None => FpModule::free(ring, ts.len()),
        })
        .collect();
    let mats: Vec<Matrix> = (0..n.saturating_sub(1))
        .map(|p| {
            let (src, tgt) = (&tuples[p], &tuples[p + 1]);
            let mut m = Matrix::zeros(tgt.len(), src.len());
            for (r, big) in tgt.iter().enumerate() {
                for (pos, &i) in big.iter().enumerate() {
                    let small: Vec<usize> = big.iter().copied().filter(|&x| x != i).collect();
                    let c = src.iter().position(|t| *t == small).expect("face of a strict tuple");
                    let a = ring.pow(seq.get(i), j as u32);
                    m.set(r, c, if pos % 2 == 0 { a } else { ring.neg(&a) });
                }
            }
            m
        })
        .collect();
    let complex = Complex::from_matrices(ring, 0, comps, mats)?;
    Ok(CechLevelComplex {
        seq: seq.clone(),
        level: j,
        tuples,
        complex,
    })
}

/// Level j → level j+1: e_I ↦ s_I·e_I, since 1/s_I^j = s_I/s_I^{j+1}.
pub fn cech_transition(from: &CechLevelComplex, to: &CechLevelComplex) -> ComplexMap {
    let mats = from
        .tuples
        .iter()
        .enumerate()
        .map(|(p, ts)| {
            let diag: Vec<Poly> = ts.iter().map(|t| from.base(t)).collect();
            (p as i32, Matrix::diagonal(&diag))
        })
        .collect();
    ComplexMap::from_parts(&from.complex, &to.complex, mats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_strict_and_lexicographic() {
        assert_eq!(strict_tuples(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(strict_tuples(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(saturation_cap(3), 6);
    }
}
