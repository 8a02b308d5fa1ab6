//! Cochains on a Čech level and the Alexander–Whitney product.

use algebra_core::{ElementSequence, Poly};

use crate::error::CechError;
use crate::level::{saturation_cap, strict_tuples, CechLevelComplex};
use crate::localized::LocalizedElement;

/// A degree-p cochain at level j: the value on the tuple I is
/// `values[idx(I)] / s_I^j`.
#[derive(Clone, Debug)]
pub struct Cochain {
    pub seq: ElementSequence,
    pub level: usize,
    pub degree: usize,
    pub values: Vec<Poly>,
}

fn same_sequence(a: &ElementSequence, b: &ElementSequence) -> bool {
    std::sync::Arc::ptr_eq(a.ring(), b.ring()) && a.elements() == b.elements()
}

impl Cochain {
    pub fn new(seq: &ElementSequence, level: usize, degree: usize, values: Vec<Poly>) -> Result<Self, CechError> {
        let expected = strict_tuples(seq.len(), degree + 1).len();
        if values.len() != expected {
            return Err(CechError::CochainShape { degree, expected, got: values.len() });
        }
        let ring = seq.ring();
        Ok(Self {
            seq: seq.clone(),
            level,
            degree,
            values: values.iter().map(|v| ring.nf(v)).collect(),
        })
    }

    /// The constant degree-0 cochain 1 at level j (value s_i^j / s_i^j).
    pub fn unit(seq: &ElementSequence, level: usize) -> Self {
        let ring = seq.ring();
        let values = (0..seq.len()).map(|i| ring.pow(seq.get(i), level as u32)).collect();
        Self {
            seq: seq.clone(),
            level,
            degree: 0,
            values,
        }
    }

    pub fn tuples(&self) -> Vec<Vec<usize>> {
        strict_tuples(self.seq.len(), self.degree + 1)
    }

    fn base(&self, t: &[usize]) -> Poly {
        let ring = self.seq.ring();
        t.iter().fold(ring.one(), |acc, &i| ring.mul(&acc, self.seq.get(i)))
    }

    /// Values as localized elements.
    pub fn elements(&self) -> Vec<LocalizedElement> {
        let ring = self.seq.ring();
        self.tuples()
            .iter()
            .zip(&self.values)
            .map(|(t, v)| LocalizedElement::new(ring, &self.base(t), v, self.level as u32, saturation_cap(self.level)))
            .collect()
    }

    /// The same cochain written at level L ≥ j (numerators times s_I^{L−j}).
    pub fn raise(&self, to: usize) -> Result<Cochain, CechError> {
        if to < self.level {
            return Err(CechError::MismatchedLevels(self.level, to));
        }
        let ring = self.seq.ring();
        let values = self
            .tuples()
            .iter()
            .zip(&self.values)
            .map(|(t, v)| ring.mul(v, &ring.pow(&self.base(t), (to - self.level) as u32)))
            .collect();
        Ok(Self {
            values,
            level: to,
            ..self.clone()
        })
    }

    /// Coboundary (dc)(J) = Σ_k (−1)^k c(J ∖ j_k) restricted to J.
    pub fn coboundary(&self) -> Cochain {
        let ring = self.seq.ring();
        let src = self.tuples();
        let tgt = strict_tuples(self.seq.len(), self.degree + 2);
        let values = tgt
            .iter()
            .map(|big| {
                big.iter().enumerate().fold(ring.zero(), |acc, (pos, &i)| {
                    let small: Vec<usize> = big.iter().copied().filter(|&x| x != i).collect();
                    let c = src.iter().position(|t| *t == small).expect("face");
                    let term = ring.mul(&self.values[c], &ring.pow(self.seq.get(i), self.level as u32));
                    if pos % 2 == 0 {
                        ring.add(&acc, &term)
                    } else {
                        ring.sub(&acc, &term)
                    }
                })
            })
            .collect();
        Self {
            seq: self.seq.clone(),
            level: self.level,
            degree: self.degree + 1,
            values,
        }
    }

    pub fn add(&self, o: &Cochain) -> Result<Cochain, CechError> {
        self.compatible(o)?;
        let ring = self.seq.ring();
        Ok(Self {
            values: self.values.iter().zip(&o.values).map(|(a, b)| ring.add(a, b)).collect(),
            ..self.clone()
        })
    }

    pub fn neg(&self) -> Cochain {
        let ring = self.seq.ring();
        Self {
            values: self.values.iter().map(|a| ring.neg(a)).collect(),
            ..self.clone()
        }
    }

    fn compatible(&self, o: &Cochain) -> Result<(), CechError> {
        if !same_sequence(&self.seq, &o.seq) {
            return Err(CechError::MismatchedSequences);
        }
        if self.level != o.level {
            return Err(CechError::MismatchedLevels(self.level, o.level));
        }
        Ok(())
    }

    /// Equality in the localizations, after raising both sides to a common level.
    pub fn equals(&self, o: &Cochain) -> Result<bool, CechError> {
        if !same_sequence(&self.seq, &o.seq) {
            return Err(CechError::MismatchedSequences);
        }
        if self.degree != o.degree {
            return Ok(false);
        }
        let l = self.level.max(o.level);
        let (x, y) = (self.raise(l)?, o.raise(l)?);
        for (a, b) in x.elements().iter().zip(y.elements()) {
            if !a.equals(&b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First tuple where the two cochains differ, if any.
    pub fn difference_witness(&self, o: &Cochain) -> Result<Option<Vec<usize>>, CechError> {
        let l = self.level.max(o.level);
        let (x, y) = (self.raise(l)?, o.raise(l)?);
        for ((t, a), b) in x.tuples().iter().zip(x.elements()).zip(y.elements()) {
            if !a.equals(&b)? {
                return Ok(Some(t.clone()));
            }
        }
        Ok(None)
    }
}

/// (f·g)(i_0..i_{p+q}) = f(i_0..i_p)·g(i_p..i_{p+q}). Both cochains must sit
/// on the same level j; the product of denominators puts the result on
/// level 2j, where its numerator is f_{I₁}·g_{I₂}·(s_{I₂}/a_{i_p})^j·(s_{I₁}/a_{i_p})^j.
pub fn aw_product(f: &Cochain, g: &Cochain) -> Result<Cochain, CechError> {
    f.compatible(g)?;
    let ring = f.seq.ring();
    let j = f.level as u32;
    let (p, q) = (f.degree, g.degree);
    let ft = f.tuples();
    let gt = g.tuples();
    let tuples = strict_tuples(f.seq.len(), p + q + 1);
    let values = tuples
        .iter()
        .map(|t| {
            let (i1, i2) = (&t[..=p], &t[p..]);
            let a = ft.iter().position(|x| x == i1).expect("front face");
            let b = gt.iter().position(|x| x == i2).expect("back face");
            let rest = |s: &[usize]| s.iter().filter(|&&i| i != t[p]).fold(ring.one(), |acc, &i| ring.mul(&acc, f.seq.get(i)));
            let fill = ring.mul(&ring.pow(&rest(i2), j), &ring.pow(&rest(i1), j));
            ring.mul(&ring.mul(&f.values[a], &g.values[b]), &fill)
        })
        .collect();
    Ok(Cochain {
        seq: f.seq.clone(),
        level: 2 * f.level,
        degree: p + q,
        values,
    })
}

/// The cochain on `c` with coordinates `v` in degree p.
pub fn cochain_on(c: &CechLevelComplex, degree: usize, v: Vec<Poly>) -> Result<Cochain, CechError> {
    Cochain::new(&c.seq, c.level, degree, v)
}
