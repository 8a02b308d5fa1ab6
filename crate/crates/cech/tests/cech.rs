use algebra_core::{make_ring_str, ElementSequence, Field, FpModule, Matrix, Poly, RingRef, TermOrder};
use cech::*;
use complex::Complex;
use derived::Outcome;
use proptest::prelude::*;

fn graded(vars: &[&str], quot: &[&str]) -> RingRef {
    let w = vec![1; vars.len()];
    make_ring_str(Field::Rational, vars, Some(&w), quot, TermOrder::Grevlex).unwrap()
}

fn seq(r: &RingRef, s: &[&str]) -> ElementSequence {
    ElementSequence::parse(r, s).unwrap()
}

fn p(r: &RingRef, s: &str) -> Poly {
    r.parse(s).unwrap()
}

fn cyclic(r: &RingRef, rels: &[&str]) -> Complex {
    let m = FpModule::new(r, Matrix::parse(r, &[rels]).unwrap(), Some(vec![0])).unwrap();
    Complex::concentrated(&m, 0)
}

#[test]
fn single_element_level_is_one_localization() {
    let r = graded(&["x"], &[]);
    let s = seq(&r, &["x"]);
    let c = cech_level(&s, 2).unwrap();
    assert_eq!((c.complex.lo(), c.complex.hi()), (0, 0));
    assert_eq!(c.complex.ranks(), vec![1]);
    assert_eq!(c.complex.component(0).degrees(), Some(&[-2][..]));
    let t = cech_transition(&c, &cech_level(&s, 3).unwrap());
    assert_eq!(t.component(0).matrix(), &Matrix::from_rows(vec![vec![p(&r, "x")]]));
}

#[test]
fn two_element_level_tuples_and_coboundary() {
    let r = graded(&["x", "y"], &[]);
    let s = seq(&r, &["x", "y"]);
    let c = cech_level(&s, 1).unwrap();
    assert_eq!(c.complex.ranks(), vec![2, 1]);
    assert_eq!(c.tuples[0], vec![vec![0], vec![1]]);
    assert_eq!(c.tuples[1], vec![vec![0, 1]]);
    assert_eq!(c.base(&[0]), p(&r, "x"));
    assert_eq!(c.base(&[1]), p(&r, "y"));
    assert_eq!(c.base(&[0, 1]), p(&r, "x*y"));
    // 1/x ↦ y/(xy) on (0,1) with sign −, 1/y ↦ x/(xy) with sign +.
    let d = c.complex.differential(0);
    assert_eq!(d.matrix(), &Matrix::from_rows(vec![vec![p(&r, "-y"), p(&r, "x")]]));
}

#[test]
fn coboundary_squares_to_zero() {
    let r = graded(&["x", "y", "z"], &[]);
    for j in 1..=3 {
        let c = cech_level(&seq(&r, &["x", "y", "z"]), j).unwrap();
        let x = &c.complex;
        assert_eq!(x.ranks(), vec![3, 3, 1]);
        assert!(x.differential(1).compose(&x.differential(0)).is_zero_map(), "level {j}");
    }
}

#[test]
fn localized_elements_normalize_and_compare() {
    let r = graded(&["x", "y"], &[]);
    let x = p(&r, "x");
    let a = LocalizedElement::new(&r, &x, &p(&r, "x*y"), 2, 4);
    assert_eq!(a.exponent(), 1);
    assert_eq!(a.numerator(), &p(&r, "y"));
    let b = LocalizedElement::new(&r, &x, &p(&r, "x^2*y"), 3, 4);
    assert!(a.equals(&b).unwrap());
    let c = LocalizedElement::new(&r, &x, &p(&r, "y"), 2, 4);
    assert!(!a.equals(&c).unwrap());
    let sum = a.add(&a.neg()).unwrap();
    assert!(sum.is_zero());
    let other = LocalizedElement::new(&r, &p(&r, "y"), &p(&r, "1"), 1, 2);
    assert_eq!(a.equals(&other), Err(CechError::MismatchedBases));
}

#[test]
fn nilpotent_base_localizes_to_zero() {
    let r = graded(&["x", "y"], &["x^2"]);
    let e = LocalizedElement::new(&r, &p(&r, "x"), &p(&r, "y"), 1, 2);
    assert!(e.is_zero());
    // 1/y = x/(xy) after restriction; y is not nilpotent, so 1/y ≠ 0.
    let u = LocalizedElement::new(&r, &p(&r, "y"), &p(&r, "1"), 1, 2);
    assert!(!u.is_zero());
    assert!(u.restrict(&p(&r, "x")).is_zero());
}

fn random_poly(r: &RingRef, c: &[i64]) -> Poly {
    let monos = ["1", "x", "y", "x*y", "x^2"];
    let s: Vec<String> = c.iter().zip(monos).map(|(a, m)| format!("({a})*{m}")).collect();
    p(r, &s.join(" + "))
}

fn random_cochain(r: &RingRef, s: &ElementSequence, level: usize, degree: usize, c: &[Vec<i64>]) -> Cochain {
    let n = cech::level::strict_tuples(s.len(), degree + 1).len();
    Cochain::new(s, level, degree, c[..n].iter().map(|v| random_poly(r, v)).collect()).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 3)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, rng_seed: proptest::test_runner::RngSeed::Fixed(7), ..ProptestConfig::default() })]

    #[test]
    fn aw_leibniz(fc in coeffs(), gc in coeffs(), j in 1usize..=3, p_deg in 0usize..=1) {
        let r = graded(&["x", "y"], &[]);
        let s = seq(&r, &["x", "y"]);
        let f = random_cochain(&r, &s, j, p_deg, &fc);
        let g = random_cochain(&r, &s, j, 0, &gc);
        let lhs = aw_product(&f, &g).unwrap().coboundary();
        let a = aw_product(&f.coboundary(), &g).unwrap();
        let b = aw_product(&f, &g.coboundary()).unwrap();
        let rhs = if p_deg % 2 == 0 { a.add(&b).unwrap() } else { a.add(&b.neg()).unwrap() };
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn aw_associative_and_unital(fc in coeffs(), gc in coeffs(), hc in coeffs(), j in 1usize..=2) {
        let r = graded(&["x", "y"], &[]);
        let s = seq(&r, &["x", "y"]);
        let f = random_cochain(&r, &s, j, 0, &fc);
        let g = random_cochain(&r, &s, j, 0, &gc);
        let h = random_cochain(&r, &s, j, 1, &hc);
        let left = aw_product(&aw_product(&f, &g).unwrap(), &h.raise(2 * j).unwrap()).unwrap();
        let right = aw_product(&f.raise(2 * j).unwrap(), &aw_product(&g, &h).unwrap()).unwrap();
        prop_assert!(left.equals(&right).unwrap());
        let one = Cochain::unit(&s, j);
        prop_assert!(aw_product(&one, &h).unwrap().equals(&h).unwrap());
        prop_assert!(aw_product(&f, &one).unwrap().equals(&f).unwrap());
    }
}

#[test]
fn aw_product_is_not_commutative() {
    let r = graded(&["x", "y"], &[]);
    let s = seq(&r, &["x", "y"]);
    // f = (1/x, 0) in degree 0, g = 1/(xy) in degree 1.
    let f = Cochain::new(&s, 1, 0, vec![p(&r, "1"), p(&r, "0")]).unwrap();
    let g = Cochain::new(&s, 1, 1, vec![p(&r, "1")]).unwrap();
    let fg = aw_product(&f, &g).unwrap();
    let gf = aw_product(&g, &f).unwrap();
    assert_eq!(fg.difference_witness(&gf).unwrap(), Some(vec![0, 1]));
    assert!(gf.values[0].is_zero());
}

#[test]
fn aw_product_rejects_mismatched_levels() {
    let r = graded(&["x", "y"], &[]);
    let s = seq(&r, &["x", "y"]);
    let f = Cochain::unit(&s, 1);
    let g = Cochain::unit(&s, 2);
    assert_eq!(aw_product(&f, &g).unwrap_err(), CechError::MismatchedLevels(1, 2));
    let t = seq(&r, &["x", "x+y"]);
    assert_eq!(aw_product(&f, &Cochain::unit(&t, 1)).unwrap_err(), CechError::MismatchedSequences);
}

#[test]
fn cone_triangle_one_and_two_elements() {
    let r = graded(&["x", "y"], &[]);
    for elems in [&["x"][..], &["x", "y"][..]] {
        for j in 1..=3 {
            let rep = cone_triangle_verify(&seq(&r, elems), j).unwrap();
            assert_eq!(rep.outcome, Outcome::Pass, "{elems:?} level {j}: {:?}", rep.witnesses);
        }
    }
}

#[test]
fn cone_triangle_with_zero_element() {
    let r = graded(&["x", "y"], &[]);
    let s = seq(&r, &["x", "0"]);
    let c = cech_level(&s, 2).unwrap();
    assert!(c.complex.differential(0).matrix().get(0, 0).is_zero());
    let rep = cone_triangle_verify(&s, 2).unwrap();
    assert_eq!(rep.outcome, Outcome::Pass, "{:?}", rep.witnesses);
}

fn verdict(rep: &derived::Report) -> &str {
    &rep.certificates.iter().find(|(k, _)| k == "verdict").unwrap().1
}

#[test]
fn residue_field_and_zero_are_complete() {
    let r = graded(&["x", "y"], &[]);
    let s = seq(&r, &["x", "y"]);
    for m in [cyclic(&r, &["x", "y"]), Complex::zero(&r)] {
        let rep = complete_char_verify(&m, &s, 3, (-2, 2)).unwrap();
        assert_eq!(rep.outcome, Outcome::Pass, "{:?}", rep.witnesses);
        assert_eq!(verdict(&rep), "complete");
    }
}

#[test]
fn polynomial_ring_is_not_complete() {
    let r = graded(&["x", "y"], &[]);
    let rep = complete_char_verify(&cyclic(&r, &[]), &seq(&r, &["x", "y"]), 3, (-2, 2)).unwrap();
    assert_eq!(rep.outcome, Outcome::Pass, "{:?}", rep.witnesses);
    assert_eq!(verdict(&rep), "not complete");
    assert!(!rep.witnesses.is_empty());
}

#[test]
fn line_modulo_y_is_not_complete_for_x() {
    let r = graded(&["x", "y"], &[]);
    let rep = complete_char_verify(&cyclic(&r, &["y"]), &seq(&r, &["x"]), 3, (-2, 2)).unwrap();
    assert_eq!(verdict(&rep), "not complete");
    assert!(rep.check_named("criteria_agree").unwrap().passed);
}

#[test]
fn completeness_window_too_wide() {
    let r = graded(&["x"], &[]);
    let err = complete_char_verify(&cyclic(&r, &[]), &seq(&r, &["x"]), 2, (0, 30)).unwrap_err();
    assert!(matches!(err, CechError::Derived(derived::DerivedError::WindowInsufficient { .. })), "{err:?}");
}
