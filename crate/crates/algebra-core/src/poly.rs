//! Sparse polynomials over an exact field in a fixed term order.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::field::{Coeff, Field};
use crate::monomial::{Monomial, MonomialOrder, TermOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub m: Monomial,
    pub c: Coeff,
}

/// Terms sorted strictly descending in the ambient order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Builds from terms already sorted descending with nonzero coefficients.
    pub fn from_sorted_terms(terms: Vec<Term>) -> Self {
        Self { terms }
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [t] if t.m.is_one() => Some(t.c.clone()),
            _ => None,
        }
    }

    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].m.is_one()
    }
}

/// The ambient polynomial ring: field, variable count and term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyCtx {
    pub field: Field,
    pub order: MonomialOrder,
}

impl PolyCtx {
    pub fn new(field: Field, kind: TermOrder, nvars: usize, weights: Option<&[u32]>) -> Self {
        Self {
            field,
            order: MonomialOrder::new(kind, nvars, weights),
        }
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn constant(&self, c: Coeff) -> Poly {
        self.monomial(Monomial::one(), c)
    }

    pub fn one(&self) -> Poly {
        self.constant(self.field.one())
    }

    pub fn from_i64(&self, v: i64) -> Poly {
        self.constant(self.field.from_i64(v))
    }

    pub fn monomial(&self, m: Monomial, c: Coeff) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![Term { m, c }],
            }
        }
    }

    pub fn var(&self, i: usize) -> Poly {
        self.monomial(Monomial::var(i, 1), self.field.one())
    }

    /// Collects arbitrary terms into canonical form.
    pub fn from_terms(&self, mut terms: Vec<Term>) -> Poly {
        terms.sort_by(|a, b| self.cmp(&b.m, &a.m));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.m == t.m {
                    last.c = self.field.add(&last.c, &t.c);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.c.is_zero());
        Poly { terms: out }
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.add_scaled(a, b, &self.field.one(), &Monomial::one())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add_scaled(a, b, &self.field.from_i64(-1), &Monomial::one())
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    m: t.m,
                    c: self.field.neg(&t.c),
                })
                .collect(),
        }
    }

    pub fn scale(&self, a: &Poly, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    m: t.m,
                    c: self.field.mul(&t.c, c),
                })
                .collect(),
        }
    }

    pub fn mul_term(&self, a: &Poly, m: &Monomial, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: a
                .terms
                .iter()
                .map(|t| Term {
                    m: t.m.mul(m),
                    c: self.field.mul(&t.c, c),
                })
                .collect(),
        }
    }

    /// `a + c·m·b`, by a single merge.
    pub fn add_scaled(&self, a: &Poly, b: &Poly, c: &Coeff, m: &Monomial) -> Poly {
        if c.is_zero() || b.is_zero() {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < b.terms.len() {
            if j == b.terms.len() {
                out.extend_from_slice(&a.terms[i..]);
                break;
            }
            let bm = b.terms[j].m.mul(m);
            if i == a.terms.len() {
                out.push(Term {
                    m: bm,
                    c: self.field.mul(&b.terms[j].c, c),
                });
                j += 1;
                continue;
            }
            match self.cmp(&a.terms[i].m, &bm) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        m: bm,
                        c: self.field.mul(&b.terms[j].c, c),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = self
                        .field
                        .add(&a.terms[i].c, &self.field.mul(&b.terms[j].c, c));
                    if !s.is_zero() {
                        out.push(Term { m: bm, c: s });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        if small.len() == 1 {
            return self.mul_term(big, &small.terms[0].m, &small.terms[0].c);
        }
        let mut terms = Vec::with_capacity(a.len() * b.len());
        for s in &small.terms {
            for t in &big.terms {
                terms.push(Term {
                    m: s.m.mul(&t.m),
                    c: self.field.mul(&s.c, &t.c),
                });
            }
        }
        self.from_terms(terms)
    }

    pub fn make_monic(&self, a: &Poly) -> Poly {
        match a.lead() {
            None => Poly::zero(),
            Some(t) if self.field.is_one(&t.c) => a.clone(),
            Some(t) => self.scale(a, &self.field.inv(&t.c)),
        }
    }

    pub fn degree(&self, m: &Monomial) -> i64 {
        self.order.degree(m)
    }

    /// Weighted degree if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self, a: &Poly) -> Option<i64> {
        let d = self.degree(&a.lead()?.m);
        a.terms
            .iter()
            .all(|t| self.degree(&t.m) == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self, a: &Poly) -> bool {
        a.is_zero() || self.homogeneous_degree(a).is_some()
    }

    /// Division remainder by a list of monic polynomials, reducing all terms.
    pub fn reduce(&self, p: &Poly, basis: &[Poly]) -> Poly {
        if basis.is_empty() {
            return p.clone();
        }
        let mut rem: Vec<Term> = Vec::new();
        let mut cur = p.clone();
        while let Some(lt) = cur.terms.first().cloned() {
            let hit = basis
                .iter()
                .find(|b| b.terms[0].m.divides(&lt.m));
            match hit {
                Some(b) => {
                    let q = b.terms[0].m.quotient_of(&lt.m);
                    let c = self.field.neg(&lt.c);
                    cur = self.add_scaled(&cur, b, &c, &q);
                }
                None => {
                    rem.push(lt);
                    cur.terms.remove(0);
                }
            }
        }
        Poly { terms: rem }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PolyCtx {
        PolyCtx::new(Field::Rational, TermOrder::Grevlex, 2, None)
    }

    #[test]
    fn arithmetic_cancels() {
        let r = ctx();
        let x = r.var(0);
        let y = r.var(1);
        let s = r.add(&x, &y);
        let d = r.sub(&x, &y);
        let p = r.mul(&s, &d);
        let x2 = r.mul(&x, &x);
        let y2 = r.mul(&y, &y);
        assert_eq!(p, r.sub(&x2, &y2));
        assert!(r.sub(&p, &p).is_zero());
    }

    #[test]
    fn reduce_by_monic_basis() {
        let r = ctx();
        let x = r.var(0);
        let y = r.var(1);
        let x2 = r.mul(&x, &x);
        let xy = r.mul(&x, &y);
        let p = r.add(&x2, &xy);
        let rem = r.reduce(&p, &[x2.clone()]);
        assert_eq!(rem, xy);
    }

    #[test]
    fn homogeneity() {
        let r = ctx();
        let x = r.var(0);
        let one = r.one();
        assert_eq!(r.homogeneous_degree(&x), Some(1));
        assert!(!r.is_homogeneous(&r.add(&x, &one)));
    }
}
