//! Ideal powers, radical comparison and torsion submodules.

use crate::error::AlgebraError;
use crate::matrix::Matrix;
use crate::module::{FpModule, ModuleMap};
use crate::monomial::{Monomial, MAX_VARS};
use crate::poly::{Poly, PolyCtx, Term};
use crate::ring::{ideal_groebner, ElementSequence, Ring, RingRef};
use crate::syzygy::ModuleGb;

#[derive(Clone, Debug)]
pub struct IdealPowers {
    /// Generators a_1^j, ..., a_n^j of the ideal (𝒂^j).
    pub sequence_power: Vec<Poly>,
    /// All products of j elements of the sequence, generating 𝔞^j.
    pub adic_power: Vec<Poly>,
}

/// Products of `j` entries of `gens` with repetition, in lexicographic index order.
pub fn product_generators(ring: &Ring, gens: &[Poly], j: u32) -> Vec<Poly> {
    fn rec(ring: &Ring, gens: &[Poly], start: usize, left: u32, acc: Poly, out: &mut Vec<Poly>) {
        if left == 0 {
            if !out.contains(&acc) {
                out.push(acc);
            }
            return;
        }
        for i in start..gens.len() {
            rec(ring, gens, i, left - 1, ring.mul(&acc, &gens[i]), out);
        }
    }
    let mut out = Vec::new();
    rec(ring, gens, 0, j, ring.one(), &mut out);
    out.retain(|p| !p.is_zero());
    out
}

pub fn ideal_power(seq: &ElementSequence, j: u32) -> Result<IdealPowers, AlgebraError> {
    if j == 0 {
        return Err(AlgebraError::InvalidArgument("ideal power needs j >= 1".into()));
    }
    let ring = seq.ring();
    Ok(IdealPowers {
        sequence_power: seq.power(j).elements().to_vec(),
        adic_power: product_generators(ring, seq.elements(), j),
    })
}

/// Whether every generator of `small` lies in the ideal generated by `big`.
pub fn ideal_contained(ring: &Ring, small: &[Poly], big: &[Poly]) -> bool {
    let gb = ring.ideal_gb(big);
    small.iter().all(|f| ring.ctx().reduce(f, &gb).is_zero())
}

/// Checks 𝔞^{jn} ⊆ (𝒂^j) ⊆ 𝔞^j.
pub fn inclusion_chain_holds(seq: &ElementSequence, j: u32) -> bool {
    let ring = seq.ring();
    let n = seq.len() as u32;
    let p = ideal_power(seq, j).unwrap();
    let big = product_generators(ring, seq.elements(), j * n);
    ideal_contained(ring, &big, &p.sequence_power) && ideal_contained(ring, &p.sequence_power, &p.adic_power)
}

/// Whether `f` lies in the radical of (`gens`) + defining ideal, decided by
/// testing 1 ∈ (I + 𝔟 + (1 − t·f)) with a fresh variable t.
pub fn in_radical(ring: &Ring, gens: &[Poly], f: &Poly) -> Result<bool, AlgebraError> {
    let n = ring.nvars();
    if n + 1 > MAX_VARS {
        return Err(AlgebraError::TooManyVariables {
            max: MAX_VARS - 1,
            got: n,
        });
    }
    let base = ring.ctx();
    let weights: Vec<u32> = base.order.weights.iter().copied().chain([1]).collect();
    let ext = PolyCtx::new(base.field.clone(), base.order.kind, n + 1, Some(&weights));
    let lift = |p: &Poly| ext.from_terms(p.terms().to_vec());
    let mut all: Vec<Poly> = ring.quotient_gb().iter().map(lift).collect();
    all.extend(gens.iter().map(lift));
    let t = Monomial::var(n, 1);
    let tf: Vec<Term> = f
        .terms()
        .iter()
        .map(|term| Term {
            m: term.m.mul(&t),
            c: base.field.neg(&term.c),
        })
        .collect();
    let rab = ext.add(&ext.one(), &ext.from_terms(tf));
    all.push(rab);
    let gb = ideal_groebner(&ext, &all);
    Ok(gb.iter().any(|g| g.is_nonzero_constant()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalComparison {
    pub equal: bool,
    /// A generator of one side outside the radical of the other:
    /// (`0` for the first list / `1` for the second, index).
    pub witness: Option<(usize, usize)>,
}

pub fn radical_equal(ring: &Ring, a: &[Poly], b: &[Poly]) -> Result<RadicalComparison, AlgebraError> {
    for (side, (src, other)) in [(a, b), (b, a)].into_iter().enumerate() {
        for (i, f) in src.iter().enumerate() {
            if !in_radical(ring, other, f)? {
                return Ok(RadicalComparison {
                    equal: false,
                    witness: Some((side, i)),
                });
            }
        }
    }
    Ok(RadicalComparison {
        equal: true,
        witness: None,
    })
}

#[derive(Clone, Debug)]
pub struct TorsionSubmodule {
    pub module: FpModule,
    pub inclusion: ModuleMap,
    pub level: usize,
}

/// (0 :_M J) for the ideal generated by `gens`, as a kernel.
pub fn annihilator_submodule(m: &FpModule, gens: &[Poly]) -> (FpModule, ModuleMap) {
    let ring = m.ring();
    let copies: Vec<&FpModule> = gens.iter().map(|_| m).collect();
    let target = if copies.is_empty() {
        FpModule::zero(ring)
    } else {
        FpModule::direct_sum(&copies)
    };
    let g = m.ngens();
    let mut mat = Matrix::zeros(g * gens.len(), g);
    for (k, f) in gens.iter().enumerate() {
        for i in 0..g {
            mat.set(k * g + i, i, f.clone());
        }
    }
    ModuleMap::from_parts(m, &target, mat).kernel()
}

/// The 𝔞-torsion submodule as the stable member of (0 :_M 𝔞^i).
pub fn torsion_submodule(
    m: &FpModule,
    seq: &ElementSequence,
    cap: usize,
) -> Result<TorsionSubmodule, AlgebraError> {
    let ring: &RingRef = m.ring();
    let mut prev = annihilator_submodule(m, &ideal_power(seq, 1)?.adic_power);
    for i in 1..=cap {
        let next = annihilator_submodule(m, &ideal_power(seq, i as u32 + 1)?.adic_power);
        // prev ⊆ next always; equality iff next's generators lie in prev + relations
        let mut span: Vec<Vec<Poly>> = prev.1.matrix().cols();
        span.extend(m.relations().cols());
        let gb = ModuleGb::new(ring, m.ngens(), &span, false);
        let stable = next
            .1
            .matrix()
            .cols()
            .iter()
            .all(|c| gb.contains(ring, c));
        if stable {
            return Ok(TorsionSubmodule {
                module: prev.0,
                inclusion: prev.1,
                level: i,
            });
        }
        prev = next;
    }
    Err(AlgebraError::LevelCapExceeded(cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::TermOrder;
    use crate::ring::make_ring_str;

    fn qxy() -> RingRef {
        make_ring_str(Field::Rational, &["x", "y"], None, &[], TermOrder::Grevlex).unwrap()
    }

    #[test]
    fn powers_of_two_variables() {
        let r = qxy();
        let s = ElementSequence::parse(&r, &["x", "y"]).unwrap();
        let p = ideal_power(&s, 2).unwrap();
        assert_eq!(p.sequence_power.len(), 2);
        assert_eq!(p.adic_power.len(), 3);
        let xy = r.parse("x*y").unwrap();
        assert!(!r.ideal_contains(&p.sequence_power, &xy));
        assert!(r.ideal_contains(&p.sequence_power, &r.mul(&xy, &xy)));
        assert!(inclusion_chain_holds(&s, 2));
    }

    #[test]
    fn radicals() {
        let r = qxy();
        let p = |s: &str| r.parse(s).unwrap();
        assert!(radical_equal(&r, &[p("x"), p("y")], &[p("x^2"), p("y")]).unwrap().equal);
        let c = radical_equal(&r, &[p("x")], &[p("y")]).unwrap();
        assert_eq!(c.witness, Some((0, 0)));
        assert!(radical_equal(&r, &[p("x"), p("y")], &[p("x+y"), p("y")]).unwrap().equal);
    }

    #[test]
    fn torsion_of_nilpotent_quotient() {
        let r = make_ring_str(Field::Rational, &["x"], None, &[], TermOrder::Grevlex).unwrap();
        let s = ElementSequence::parse(&r, &["x"]).unwrap();
        let m = FpModule::cyclic(&r, &[r.parse("x^2").unwrap()]);
        let t = torsion_submodule(&m, &s, 10).unwrap();
        assert_eq!(t.level, 2);
        assert!(t.inclusion.is_surjective());
    }

    #[test]
    fn torsion_of_domain_vanishes() {
        let r = qxy();
        let s = ElementSequence::parse(&r, &["x", "y"]).unwrap();
        let m = FpModule::free(&r, 1);
        let t = torsion_submodule(&m, &s, 10).unwrap();
        assert!(t.module.is_zero());
    }
}
