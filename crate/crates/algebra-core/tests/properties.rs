use algebra_core::ideal::{inclusion_chain_holds, torsion_submodule};
use algebra_core::monomial::Monomial;
use algebra_core::{
    make_ring_str, syzygy_matrix, ElementSequence, Field, FpModule, Matrix, ModuleMap, Poly,
    RingRef, TermOrder,
};
use proptest::prelude::*;

fn qxy_quotient() -> RingRef {
    make_ring_str(Field::Rational, &["x", "y"], None, &["x^2*y - y^2", "x^3"], TermOrder::Grevlex).unwrap()
}

fn qxy() -> RingRef {
    make_ring_str(Field::Rational, &["x", "y"], None, &[], TermOrder::Grevlex).unwrap()
}

fn build(r: &RingRef, terms: &[(i64, u32, u32)]) -> Poly {
    let mut p = Poly::zero();
    for &(c, a, b) in terms {
        let t = r
            .ctx()
            .monomial(Monomial::from_exponents(&[a, b]), r.field().from_i64(c));
        p = r.ctx().add(&p, &t);
    }
    p
}

fn poly_terms() -> impl Strategy<Value = Vec<(i64, u32, u32)>> {
    prop::collection::vec((-3i64..=3, 0u32..3, 0u32..3), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_forms_are_canonical(f in poly_terms(), g in poly_terms()) {
        let r = qxy_quotient();
        let (f, g) = (build(&r, &f), build(&r, &g));
        let lhs = r.nf(&r.ctx().add(&f, &g));
        let rhs = r.nf(&r.ctx().add(&r.nf(&f), &r.nf(&g)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn syzygies_annihilate_the_matrix(entries in prop::collection::vec(poly_terms(), 4), quotient in any::<bool>()) {
        let r = if quotient { qxy_quotient() } else { qxy() };
        let polys: Vec<Poly> = entries.iter().map(|t| r.nf(&build(&r, t))).collect();
        let m = Matrix::from_rows(vec![polys[..2].to_vec(), polys[2..].to_vec()]);
        let syz = syzygy_matrix(&r, &m);
        prop_assert!(m.mul(&r, &syz).is_zero());
    }

    #[test]
    fn image_and_cokernel_are_compatible(entries in prop::collection::vec(poly_terms(), 2)) {
        let r = qxy();
        let polys: Vec<Poly> = entries.iter().map(|t| build(&r, t)).collect();
        let src = FpModule::free(&r, 2);
        let tgt = FpModule::cyclic(&r, &[r.parse("x^2").unwrap()]);
        let phi = ModuleMap::new(&src, &tgt, Matrix::from_rows(vec![polys])).unwrap();
        let (_, _, inc) = phi.image();
        prop_assert!(inc.is_injective());
        let (c1, _) = phi.cokernel();
        let (c2, _) = inc.cokernel();
        let cmp = ModuleMap::new(&c2, &c1, Matrix::identity(&r, 1)).unwrap();
        prop_assert!(cmp.is_iso());
    }
}

#[test]
fn inclusion_chain_for_small_sequences() {
    let r = make_ring_str(Field::Rational, &["x", "y", "z"], None, &[], TermOrder::Grevlex).unwrap();
    for seq in [vec!["x"], vec!["x", "y"], vec!["x", "y", "z"], vec!["x + y", "y*z"]] {
        let s = ElementSequence::parse(&r, &seq).unwrap();
        for j in 1..=4 {
            assert!(inclusion_chain_holds(&s, j), "{seq:?} j={j}");
        }
    }
}

#[test]
fn torsion_is_idempotent() {
    let r = qxy();
    let s = ElementSequence::parse(&r, &["x", "y"]).unwrap();
    let rels = Matrix::parse(&r, &[&["x*y", "y^2", "0"], &["0", "x", "x^2"]]).unwrap();
    let m = FpModule::new(&r, rels, None).unwrap();
    let t1 = torsion_submodule(&m, &s, 10).unwrap();
    let t2 = torsion_submodule(&t1.module, &s, 10).unwrap();
    assert!(t2.inclusion.is_iso());
}
