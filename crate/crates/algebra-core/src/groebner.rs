//! Buchberger's algorithm for submodules of free modules P^m over the
//! ambient polynomial ring, in position-over-term order where a lower
//! position index is larger. Ideals are the case m = 1.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::poly::{Poly, PolyCtx, Term};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VTerm {
    pub pos: usize,
    pub m: Monomial,
    pub c: Coeff,
}

/// A sparse vector of P^m, terms strictly descending in position-over-term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SVec {
    pub terms: Vec<VTerm>,
}

impl SVec {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    /// Places `col[i]` at position `offset + i`.
    pub fn from_column(col: &[Poly], offset: usize) -> SVec {
        let mut terms = Vec::new();
        for (i, p) in col.iter().enumerate() {
            for t in p.terms() {
                terms.push(VTerm {
                    pos: offset + i,
                    m: t.m,
                    c: t.c.clone(),
                });
            }
        }
        SVec { terms }
    }

    /// Entries at positions `start..start+len`, reindexed from zero.
    pub fn to_column(&self, start: usize, len: usize) -> Vec<Poly> {
        let mut buckets: Vec<Vec<Term>> = vec![Vec::new(); len];
        for t in &self.terms {
            if t.pos >= start && t.pos < start + len {
                buckets[t.pos - start].push(Term {
                    m: t.m,
                    c: t.c.clone(),
                });
            }
        }
        buckets.into_iter().map(Poly::from_sorted_terms).collect()
    }

    pub fn max_pos(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.pos).max()
    }

    /// True when every term sits at a position `>= start`.
    pub fn supported_from(&self, start: usize) -> bool {
        self.terms.iter().all(|t| t.pos >= start)
    }
}

impl PolyCtx {
    pub fn pot_cmp(&self, p1: usize, m1: &Monomial, p2: usize, m2: &Monomial) -> Ordering {
        match p2.cmp(&p1) {
            Ordering::Equal => self.cmp(m1, m2),
            o => o,
        }
    }

    /// `a + c·m·b`.
    pub fn vadd_scaled(&self, a: &SVec, b: &SVec, c: &Coeff, m: &Monomial) -> SVec {
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
            let bt = &b.terms[j];
            let bm = bt.m.mul(m);
            if i == a.terms.len() {
                out.push(VTerm {
                    pos: bt.pos,
                    m: bm,
                    c: self.field.mul(&bt.c, c),
                });
                j += 1;
                continue;
            }
            let at = &a.terms[i];
            match self.pot_cmp(at.pos, &at.m, bt.pos, &bm) {
                Ordering::Greater => {
                    out.push(at.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(VTerm {
                        pos: bt.pos,
                        m: bm,
                        c: self.field.mul(&bt.c, c),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = self.field.add(&at.c, &self.field.mul(&bt.c, c));
                    if !s.is_zero() {
                        out.push(VTerm {
                            pos: bt.pos,
                            m: bm,
                            c: s,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SVec { terms: out }
    }

    pub fn vscale(&self, a: &SVec, c: &Coeff) -> SVec {
        if c.is_zero() {
            return SVec::default();
        }
        SVec {
            terms: a
                .terms
                .iter()
                .map(|t| VTerm {
                    pos: t.pos,
                    m: t.m,
                    c: self.field.mul(&t.c, c),
                })
                .collect(),
        }
    }

    pub fn vmonic(&self, a: &SVec) -> SVec {
        match a.lead() {
            Some(t) if !self.field.is_one(&t.c) => self.vscale(a, &self.field.inv(&t.c)),
            _ => a.clone(),
        }
    }

    /// Canonicalizes an arbitrary list of terms.
    pub fn vcollect(&self, mut terms: Vec<VTerm>) -> SVec {
        terms.sort_by(|a, b| self.pot_cmp(b.pos, &b.m, a.pos, &a.m));
        let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.pos == t.pos && last.m == t.m {
                    last.c = self.field.add(&last.c, &t.c);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.c.is_zero());
        SVec { terms: out }
    }

    /// Full reduction of every term by a list of monic vectors.
    pub fn vreduce(&self, v: &SVec, basis: &[SVec]) -> SVec {
        let mut rem: Vec<VTerm> = Vec::new();
        let mut cur = v.clone();
        while let Some(lt) = cur.terms.first() {
            let hit = basis.iter().find(|b| {
                let bl = &b.terms[0];
                bl.pos == lt.pos && bl.m.divides(&lt.m)
            });
            match hit {
                Some(b) => {
                    let q = b.terms[0].m.quotient_of(&lt.m);
                    let c = self.field.neg(&lt.c);
                    cur = self.vadd_scaled(&cur, b, &c, &q);
                }
                None => rem.push(cur.terms.remove(0)),
            }
        }
        SVec { terms: rem }
    }
}

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis (monic, sorted ascending by leading term) of the
/// submodule generated by `gens`. When `ideal_mode` is set every vector lives
/// at position 0 and Buchberger's product criterion is used.
pub fn groebner_basis(ctx: &PolyCtx, gens: &[SVec]) -> Vec<SVec> {
    let ideal_mode = gens.iter().all(|g| g.terms.iter().all(|t| t.pos == 0));
    let mut basis: Vec<SVec> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut seeds: Vec<SVec> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ctx.vmonic(g))
        .collect();
    seeds.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        ctx.pot_cmp(x.pos, &x.m, y.pos, &y.m)
    });
    for g in seeds {
        let h = top_reduce(ctx, &g, &basis, &active);
        if !h.is_zero() {
            let h = ctx.vmonic(&h);
            update(&mut basis, &mut active, &mut pairs, h, ideal_mode);
        }
    }

    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let da = ctx.degree(&a.lcm);
            let db = ctx.degree(&b.lcm);
            let less = match da.cmp(&db) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => ctx.pot_cmp(a.pos, &a.lcm, b.pos, &b.lcm) == Ordering::Less,
            };
            if less {
                best = k;
            }
        }
        let p = pairs.swap_remove(best);
        let s = spoly(ctx, &basis[p.i], &basis[p.j], &p.lcm);
        let h = top_reduce(ctx, &s, &basis, &active);
        if !h.is_zero() {
            let h = ctx.vmonic(&h);
            update(&mut basis, &mut active, &mut pairs, h, ideal_mode);
        }
    }

    let mut minimal: Vec<SVec> = basis
        .into_iter()
        .zip(active)
        .filter_map(|(b, a)| a.then_some(b))
        .collect();
    // drop elements whose lead is divisible by another lead
    let mut keep = vec![true; minimal.len()];
    for i in 0..minimal.len() {
        for j in 0..minimal.len() {
            if i != j && keep[j] {
                let (li, lj) = (minimal[i].lead().unwrap(), minimal[j].lead().unwrap());
                if li.pos == lj.pos && lj.m.divides(&li.m) && (li.m != lj.m || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let mut idx = 0;
    minimal.retain(|_| {
        idx += 1;
        keep[idx - 1]
    });
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let lead = SVec {
            terms: vec![minimal[i].terms[0].clone()],
        };
        let tail = SVec {
            terms: minimal[i].terms[1..].to_vec(),
        };
        let others: Vec<SVec> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let t = ctx.vreduce(&tail, &others);
        let mut terms = lead.terms;
        terms.extend(t.terms);
        reduced.push(SVec { terms });
    }
    reduced.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        ctx.pot_cmp(x.pos, &x.m, y.pos, &y.m)
    });
    reduced
}

fn spoly(ctx: &PolyCtx, f: &SVec, g: &SVec, lcm: &Monomial) -> SVec {
    let lf = f.lead().unwrap();
    let lg = g.lead().unwrap();
    let a = lf.m.quotient_of(lcm);
    let b = lg.m.quotient_of(lcm);
    let left = ctx.vadd_scaled(&SVec::default(), f, &ctx.field.one(), &a);
    ctx.vadd_scaled(&left, g, &ctx.field.from_i64(-1), &b)
}

fn top_reduce(ctx: &PolyCtx, v: &SVec, basis: &[SVec], active: &[bool]) -> SVec {
    let mut cur = v.clone();
    loop {
        let Some(lt) = cur.lead() else { return cur };
        let hit = basis.iter().zip(active).find(|(b, a)| {
            **a && {
                let bl = &b.terms[0];
                bl.pos == lt.pos && bl.m.divides(&lt.m)
            }
        });
        match hit {
            Some((b, _)) => {
                let q = b.terms[0].m.quotient_of(&lt.m);
                let c = ctx.field.neg(&lt.c);
                cur = ctx.vadd_scaled(&cur, b, &c, &q);
            }
            None => return cur,
        }
    }
}

fn update(
    basis: &mut Vec<SVec>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: SVec,
    ideal_mode: bool,
) {
    let t = basis.len();
    let lh = h.lead().unwrap().clone();

    // candidate pairs with the new element
    let mut cand: Vec<(usize, Monomial, bool)> = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        if !active[i] {
            continue;
        }
        let lb = b.lead().unwrap();
        if lb.pos != lh.pos {
            continue;
        }
        let coprime = ideal_mode && lb.m.gcd_is_one(&lh.m);
        cand.push((i, lb.m.lcm(&lh.m), coprime));
    }
    // criterion M: drop pairs whose lcm is properly divisible by another lcm
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        for b in 0..cand.len() {
            if a != b && cand[b].1.divides(&cand[a].1) && cand[b].1 != cand[a].1 {
                keep[a] = false;
                break;
            }
        }
    }
    // equal lcms: keep one representative, drop the class if any is coprime
    let mut new_pairs: Vec<Pair> = Vec::new();
    let mut seen: Vec<(Monomial, bool)> = Vec::new();
    for (k, (i, l, cop)) in cand.iter().enumerate() {
        if !keep[k] {
            continue;
        }
        if let Some(e) = seen.iter_mut().find(|(m, _)| m == l) {
            e.1 |= *cop;
            continue;
        }
        seen.push((*l, *cop));
        new_pairs.push(Pair {
            i: *i,
            j: t,
            pos: lh.pos,
            lcm: *l,
        });
    }
    new_pairs.retain(|p| !seen.iter().any(|(m, cop)| *m == p.lcm && *cop));

    // chain criterion on old pairs
    pairs.retain(|p| {
        if p.pos != lh.pos || !lh.m.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i].lead().unwrap().m.lcm(&lh.m);
        let lj = basis[p.j].lead().unwrap().m.lcm(&lh.m);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(new_pairs);

    for (i, b) in basis.iter().enumerate() {
        if active[i] {
            let lb = b.lead().unwrap();
            if lb.pos == lh.pos && lh.m.divides(&lb.m) {
                active[i] = false;
            }
        }
    }
    basis.push(h);
    active.push(true);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::TermOrder;

    fn ctx(n: usize) -> PolyCtx {
        PolyCtx::new(Field::Rational, TermOrder::Grevlex, n, None)
    }

    fn poly_vec(p: &Poly) -> SVec {
        SVec::from_column(std::slice::from_ref(p), 0)
    }

    #[test]
    fn ideal_of_twisted_cubic_like_relations() {
        let r = ctx(2);
        let x = r.var(0);
        let y = r.var(1);
        // (x^2 - y, x y - 1) contains y^2 - x
        let f = r.sub(&r.mul(&x, &x), &y);
        let g = r.sub(&r.mul(&x, &y), &r.one());
        let gb = groebner_basis(&r, &[poly_vec(&f), poly_vec(&g)]);
        let target = r.sub(&r.mul(&y, &y), &x);
        assert!(r.vreduce(&poly_vec(&target), &gb).is_zero());
        assert!(!r.vreduce(&poly_vec(&x), &gb).is_zero());
    }

    #[test]
    fn unit_ideal_detected() {
        let r = ctx(1);
        let x = r.var(0);
        let g = r.sub(&r.one(), &x);
        let gb = groebner_basis(&r, &[poly_vec(&x), poly_vec(&g)]);
        assert_eq!(gb.len(), 1);
        assert!(gb[0].terms[0].m.is_one());
    }

    #[test]
    fn module_membership() {
        let r = ctx(2);
        let x = r.var(0);
        let y = r.var(1);
        let c1 = SVec::from_column(&[x.clone(), y.clone()], 0);
        let c2 = SVec::from_column(&[y.clone(), Poly::zero()], 0);
        let gb = groebner_basis(&r, &[c1.clone(), c2.clone()]);
        let v = r.vadd_scaled(&c1, &c2, &r.field.from_i64(3), &Monomial::var(0, 2));
        assert!(r.vreduce(&v, &gb).is_zero());
        let e1 = SVec::from_column(&[r.one(), Poly::zero()], 0);
        assert!(!r.vreduce(&e1, &gb).is_zero());
    }
}
