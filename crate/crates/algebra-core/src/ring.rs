//! Ring presentations: quotients of a polynomial ring by an ideal given
//! through its reduced Gröbner basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use dashmap::DashMap;

use crate::error::AlgebraError;
use crate::field::{Coeff, Field};
use crate::groebner::{groebner_basis, SVec};
use crate::monomial::{Monomial, TermOrder, MAX_VARS};
use crate::parse::parse_poly;
use crate::poly::{Poly, PolyCtx};

type IdealKey = (PolyCtx, Vec<Poly>);

static IDEAL_CACHE: LazyLock<DashMap<IdealKey, Arc<Vec<Poly>>>> = LazyLock::new(DashMap::new);

/// Reduced monic Gröbner basis of an ideal of the ambient ring, memoized
/// across threads on the exact generator list.
pub fn ideal_groebner(ctx: &PolyCtx, gens: &[Poly]) -> Arc<Vec<Poly>> {
    let mut key_gens: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    key_gens.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
    key_gens.dedup();
    let key = (ctx.clone(), key_gens);
    if let Some(hit) = IDEAL_CACHE.get(&key) {
        return hit.clone();
    }
    let vecs: Vec<SVec> = key
        .1
        .iter()
        .map(|g| SVec::from_column(std::slice::from_ref(g), 0))
        .collect();
    let gb: Vec<Poly> = groebner_basis(ctx, &vecs)
        .into_iter()
        .map(|v| v.to_column(0, 1).pop().unwrap())
        .collect();
    let gb = Arc::new(gb);
    IDEAL_CACHE.insert(key, gb.clone());
    gb
}

pub struct Ring {
    ctx: PolyCtx,
    vars: Vec<String>,
    graded: bool,
    quotient_gens: Vec<Poly>,
    gb: Arc<Vec<Poly>>,
    basis_cache: Mutex<HashMap<i64, Arc<Vec<Monomial>>>>,
}

pub type RingRef = Arc<Ring>;

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.ctx.field, self.vars.join(","))?;
        if !self.gb.is_empty() {
            let g: Vec<String> = self.gb.iter().map(|p| self.render(p)).collect();
            write!(f, "/({})", g.join(", "))?;
        }
        Ok(())
    }
}

impl PartialEq for Ring {
    fn eq(&self, o: &Self) -> bool {
        self.ctx == o.ctx && self.vars == o.vars && self.gb == o.gb
    }
}

impl Eq for Ring {}

/// Builds a ring from already-parsed generators over the given variables.
pub fn make_ring(
    field: Field,
    variables: &[&str],
    weights: Option<&[u32]>,
    quotient: Vec<Poly>,
    order: TermOrder,
) -> Result<RingRef, AlgebraError> {
    let ctx = ambient_ctx(&field, variables, weights, order)?;
    Ring::build(ctx, variables, weights.is_some(), quotient)
}

/// Builds a ring from generator strings in the surface syntax.
pub fn make_ring_str(
    field: Field,
    variables: &[&str],
    weights: Option<&[u32]>,
    quotient: &[&str],
    order: TermOrder,
) -> Result<RingRef, AlgebraError> {
    let ctx = ambient_ctx(&field, variables, weights, order)?;
    let names: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
    let gens = quotient
        .iter()
        .map(|s| parse_poly(&ctx, &names, s))
        .collect::<Result<Vec<_>, _>>()?;
    Ring::build(ctx, variables, weights.is_some(), gens)
}

fn ambient_ctx(
    field: &Field,
    variables: &[&str],
    weights: Option<&[u32]>,
    order: TermOrder,
) -> Result<PolyCtx, AlgebraError> {
    if variables.len() > MAX_VARS {
        return Err(AlgebraError::TooManyVariables {
            max: MAX_VARS,
            got: variables.len(),
        });
    }
    for (i, v) in variables.iter().enumerate() {
        if variables[..i].contains(v) {
            return Err(AlgebraError::DuplicateVariable(v.to_string()));
        }
    }
    if let Some(w) = weights {
        if w.len() != variables.len() || w.contains(&0) {
            return Err(AlgebraError::BadWeights);
        }
    }
    Ok(PolyCtx::new(field.clone(), order, variables.len(), weights))
}

impl Ring {
    fn build(
        ctx: PolyCtx,
        variables: &[&str],
        graded: bool,
        quotient: Vec<Poly>,
    ) -> Result<RingRef, AlgebraError> {
        let vars: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
        if graded {
            for g in &quotient {
                if !ctx.is_homogeneous(g) {
                    let tmp = Ring {
                        ctx: ctx.clone(),
                        vars: vars.clone(),
                        graded,
                        quotient_gens: vec![],
                        gb: Arc::new(vec![]),
                        basis_cache: Mutex::new(HashMap::new()),
                    };
                    return Err(AlgebraError::NonHomogeneous(tmp.render(g)));
                }
            }
        }
        let gb = ideal_groebner(&ctx, &quotient);
        if gb.iter().any(|g| g.is_nonzero_constant()) {
            return Err(AlgebraError::ZeroRing);
        }
        Ok(Arc::new(Ring {
            ctx,
            vars,
            graded,
            quotient_gens: quotient,
            gb,
            basis_cache: Mutex::new(HashMap::new()),
        }))
    }

    pub fn ctx(&self) -> &PolyCtx {
        &self.ctx
    }

    pub fn field(&self) -> &Field {
        &self.ctx.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn weights(&self) -> &[u32] {
        &self.ctx.order.weights
    }

    pub fn term_order(&self) -> TermOrder {
        self.ctx.order.kind
    }

    pub fn quotient_generators(&self) -> &[Poly] {
        &self.quotient_gens
    }

    /// Reduced Gröbner basis of the defining ideal.
    pub fn quotient_gb(&self) -> &[Poly] {
        &self.gb
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.gb.is_empty()
    }

    pub fn nf(&self, p: &Poly) -> Poly {
        self.ctx.reduce(p, &self.gb)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero()
    }

    pub fn one(&self) -> Poly {
        self.nf(&self.ctx.one())
    }

    pub fn from_i64(&self, v: i64) -> Poly {
        self.ctx.from_i64(v)
    }

    pub fn constant(&self, c: Coeff) -> Poly {
        self.ctx.constant(c)
    }

    pub fn var(&self, i: usize) -> Poly {
        self.nf(&self.ctx.var(i))
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.ctx.add(a, b)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.ctx.sub(a, b)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        self.ctx.neg(a)
    }

    pub fn scale(&self, a: &Poly, c: &Coeff) -> Poly {
        self.ctx.scale(a, c)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        self.nf(&self.ctx.mul(a, b))
    }

    pub fn pow(&self, a: &Poly, e: u32) -> Poly {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    pub fn is_zero(&self, a: &Poly) -> bool {
        self.nf(a).is_zero()
    }

    pub fn parse(&self, s: &str) -> Result<Poly, AlgebraError> {
        Ok(self.nf(&parse_poly(&self.ctx, &self.vars, s)?))
    }

    pub fn element(self: &Arc<Self>, s: &str) -> Result<RingElement, AlgebraError> {
        Ok(RingElement {
            ring: self.clone(),
            poly: self.parse(s)?,
        })
    }

    pub fn degree_of(&self, m: &Monomial) -> i64 {
        self.ctx.degree(m)
    }

    pub fn homogeneous_degree(&self, p: &Poly) -> Option<i64> {
        self.ctx.homogeneous_degree(p)
    }

    /// Whether `f` lies in the ideal generated by `gens` together with the
    /// defining ideal.
    pub fn ideal_contains(&self, gens: &[Poly], f: &Poly) -> bool {
        let gb = self.ideal_gb(gens);
        self.ctx.reduce(f, &gb).is_zero()
    }

    /// Gröbner basis in the ambient ring of `gens` plus the defining ideal.
    pub fn ideal_gb(&self, gens: &[Poly]) -> Arc<Vec<Poly>> {
        let mut all: Vec<Poly> = self.gb.to_vec();
        all.extend(gens.iter().cloned());
        ideal_groebner(&self.ctx, &all)
    }

    /// Standard monomials of weighted degree `d` (a vector-space basis of the
    /// degree-`d` piece for graded rings).
    pub fn degree_basis(&self, d: i64) -> Arc<Vec<Monomial>> {
        if let Some(b) = self.basis_cache.lock().unwrap().get(&d) {
            return b.clone();
        }
        let mut out = Vec::new();
        if d >= 0 {
            let n = self.nvars();
            let mut exps = vec![0u32; n];
            self.enumerate_degree(0, d, &mut exps, &mut out);
        }
        out.retain(|m| !self.gb.iter().any(|g| g.terms()[0].m.divides(m)));
        out.sort_by(|a, b| self.ctx.cmp(b, a));
        let out = Arc::new(out);
        self.basis_cache.lock().unwrap().insert(d, out.clone());
        out
    }

    fn enumerate_degree(&self, i: usize, rest: i64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = self.nvars();
        if i == n {
            if rest == 0 {
                out.push(Monomial::from_exponents(exps));
            }
            return;
        }
        let w = self.weights()[i] as i64;
        let mut e = 0;
        while e * w <= rest {
            exps[i] = e as u32;
            self.enumerate_degree(i + 1, rest - e * w, exps, out);
            e += 1;
        }
        exps[i] = 0;
    }

    pub fn render(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, t) in p.terms().iter().enumerate() {
            let neg = self.field().is_negative_repr(&t.c);
            let abs = if neg { self.field().neg(&t.c) } else { t.c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.render_monomial(&t.m);
            let one = self.field().is_one(&abs);
            match (one, mono.is_empty()) {
                (true, true) => s.push('1'),
                (true, false) => s.push_str(&mono),
                (false, true) => s.push_str(&self.field().render(&abs)),
                (false, false) => {
                    s.push_str(&self.field().render(&abs));
                    s.push('*');
                    s.push_str(&mono);
                }
            }
        }
        s
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, v) in self.vars.iter().enumerate() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(v.clone()),
                e => parts.push(format!("{v}^{e}")),
            }
        }
        parts.join("*")
    }
}

/// An element of a presented ring, kept in normal form.
#[derive(Clone)]
pub struct RingElement {
    pub ring: RingRef,
    pub poly: Poly,
}

impl RingElement {
    pub fn new(ring: &RingRef, p: &Poly) -> Self {
        Self {
            ring: ring.clone(),
            poly: ring.nf(p),
        }
    }

    pub fn add(&self, o: &RingElement) -> RingElement {
        Self::new(&self.ring, &self.ring.add(&self.poly, &o.poly))
    }

    pub fn mul(&self, o: &RingElement) -> RingElement {
        Self::new(&self.ring, &self.ring.mul(&self.poly, &o.poly))
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl PartialEq for RingElement {
    fn eq(&self, o: &Self) -> bool {
        *self.ring == *o.ring && self.poly == o.poly
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.render(&self.poly))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.render(&self.poly))
    }
}

/// A finite sequence a_1..a_n of elements of one ring.
#[derive(Clone, Debug)]
pub struct ElementSequence {
    ring: RingRef,
    elems: Vec<Poly>,
    // Formal weighted degrees; powers scale them even when a power vanishes
    // in a quotient ring.
    degs: Option<Vec<i64>>,
}

impl ElementSequence {
    pub fn new(ring: &RingRef, elems: Vec<Poly>) -> Result<Self, AlgebraError> {
        if elems.is_empty() {
            return Err(AlgebraError::InvalidArgument(
                "a sequence needs at least one element".into(),
            ));
        }
        let elems: Vec<Poly> = elems.iter().map(|e| ring.nf(e)).collect();
        let degs = elems
            .iter()
            .map(|a| if a.is_zero() { Some(0) } else { ring.homogeneous_degree(a) })
            .collect();
        Ok(Self {
            ring: ring.clone(),
            elems,
            degs,
        })
    }

    pub fn parse(ring: &RingRef, elems: &[&str]) -> Result<Self, AlgebraError> {
        let ps = elems
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, ps)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elems
    }

    pub fn get(&self, i: usize) -> &Poly {
        &self.elems[i]
    }

    /// The sequence of i-th powers (a_1^i, ..., a_n^i).
    pub fn power(&self, i: u32) -> ElementSequence {
        ElementSequence {
            ring: self.ring.clone(),
            elems: self.elems.iter().map(|a| self.ring.pow(a, i)).collect(),
            degs: self.degs.as_ref().map(|d| d.iter().map(|x| x * i as i64).collect()),
        }
    }

    /// Weighted degrees of the elements, when all are homogeneous. A zero
    /// element of the original sequence has degree 0; the i-th power of a
    /// degree-e element has degree i·e even when it vanishes.
    pub fn degrees(&self) -> Option<Vec<i64>> {
        self.degs.clone()
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.elems.iter().map(|a| self.ring.render(a)).collect();
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishing_powers_keep_their_degree() {
        let r = make_ring_str(Field::Rational, &["x"], None, &["x^2"], TermOrder::Grevlex).unwrap();
        let s = ElementSequence::parse(&r, &["x"]).unwrap();
        let p = s.power(3);
        assert!(p.get(0).is_zero());
        assert_eq!(p.degrees(), Some(vec![3]));
    }

    #[test]
    fn quotient_reduces_products() {
        let r = make_ring_str(Field::Rational, &["x"], None, &["x^2"], TermOrder::Grevlex).unwrap();
        let x = r.var(0);
        assert!(r.mul(&x, &x).is_zero());
        assert_eq!(r.to_string(), "QQ[x]/(x^2)");
    }

    #[test]
    fn zero_ring_rejected() {
        let e = make_ring_str(Field::Rational, &["x"], None, &["x", "1-x"], TermOrder::Grevlex);
        assert_eq!(e.unwrap_err(), AlgebraError::ZeroRing);
    }

    #[test]
    fn non_homogeneous_rejected_under_grading() {
        let e = make_ring_str(Field::Rational, &["x", "y"], Some(&[1, 1]), &["x^2 - y"], TermOrder::Grevlex);
        assert!(matches!(e, Err(AlgebraError::NonHomogeneous(_))));
        let ok = make_ring_str(Field::Rational, &["x", "y"], Some(&[2, 1]), &["x - y^2"], TermOrder::Grevlex);
        assert!(ok.is_ok());
    }

    #[test]
    fn duplicate_variables_rejected() {
        let e = make_ring_str(Field::Rational, &["x", "x"], None, &[], TermOrder::Grevlex);
        assert!(matches!(e, Err(AlgebraError::DuplicateVariable(_))));
    }

    #[test]
    fn degree_basis_of_quotient() {
        let r = make_ring_str(Field::Rational, &["x", "y"], Some(&[1, 1]), &["x^2", "y^2"], TermOrder::Grevlex).unwrap();
        assert_eq!(r.degree_basis(0).len(), 1);
        assert_eq!(r.degree_basis(1).len(), 2);
        assert_eq!(r.degree_basis(2).len(), 1);
        assert_eq!(r.degree_basis(3).len(), 0);
        assert_eq!(r.degree_basis(-1).len(), 0);
    }

    #[test]
    fn rendering_is_canonical() {
        let r = make_ring_str(Field::Rational, &["x", "y"], None, &[], TermOrder::Grevlex).unwrap();
        let p = r.parse("3*y - x^2 + 1/2").unwrap();
        assert_eq!(r.render(&p), "-x^2 + 3*y + 1/2");
    }
}
