mod common;

use algebra_core::{make_ring_str, Field, TermOrder};
use common::*;
use derived::*;

#[test]
fn radical_equal_sequences_agree() {
    let r = graded(&["x", "y"], &[]);
    let t = std::time::Instant::now();
    let rep = permanence_verify(&seq(&r, &["x", "y"]), &seq(&r, &["x^2", "y"]), 6, (-5, 0), None).unwrap();
    eprintln!("permanence: {:?}", t.elapsed());
    assert_eq!(rep.outcome, Outcome::Pass, "{:?}", rep.witnesses);
    assert!(rep.check_named("stable_dims_agree").unwrap().passed);
    let h2: Vec<_> = rep.tables[0].rows.iter().filter(|e| e.k == 2).map(|e| (e.d, e.stable_dim)).collect();
    assert_eq!(h2, vec![(-5, Some(4)), (-4, Some(3)), (-3, Some(2)), (-2, Some(1)), (-1, Some(0)), (0, Some(0))]);
}

#[test]
fn hypothesis_fails_with_witness() {
    let r = graded(&["x", "y"], &[]);
    let rep = permanence_verify(&seq(&r, &["x"]), &seq(&r, &["y"]), 3, (-2, 0), None).unwrap();
    assert_eq!(rep.outcome, Outcome::Fail);
    assert_eq!(rep.witnesses, vec!["radical_equal: hypothesis fails: x ∉ √(y)"]);
}

#[test]
fn equal_ideals_agree_levelwise() {
    let r = graded(&["x", "y"], &[]);
    let rep = permanence_verify(&seq(&r, &["x", "y"]), &seq(&r, &["x+y", "y"]), 4, (-4, 0), None).unwrap();
    assert_eq!(rep.outcome, Outcome::Pass, "{:?}", rep.witnesses);
    assert!(rep.check_named("levelwise_dims_agree").unwrap().passed);
}

#[test]
fn base_change_along_inclusion() {
    let a = graded(&["x"], &[]);
    let b = graded(&["x", "y"], &[]);
    let f = RingMap::parse(&a, &b, &["x"]).unwrap();
    let rep = base_change_verify(&f, &seq(&a, &["x"]), &seq(&b, &["x"]), &unit(&b), 4, (-3, 2)).unwrap();
    assert_eq!(rep.outcome, Outcome::Pass, "{:?}", rep.witnesses);
}

#[test]
fn base_change_identity() {
    let a = graded(&["x", "y"], &[]);
    let f = RingMap::identity(&a);
    let rep = base_change_verify(&f, &seq(&a, &["x", "y"]), &seq(&a, &["x", "y"]), &cyclic(&a, &["x", "y"]), 4, (-3, 1)).unwrap();
    assert_eq!(rep.outcome, Outcome::Pass, "{:?}", rep.witnesses);
}

#[test]
fn base_change_to_dual_numbers() {
    let a = graded(&["x"], &[]);
    let b = graded(&["x"], &["x^2"]);
    let f = RingMap::parse(&a, &b, &["x"]).unwrap();
    let rep = base_change_verify(&f, &seq(&a, &["x"]), &seq(&b, &["x"]), &unit(&b), 4, (-2, 2)).unwrap();
    assert_eq!(rep.outcome, Outcome::Pass, "{:?}", rep.witnesses);
    let rows = &rep.tables[0].rows;
    let total: usize = rows.iter().filter_map(|e| e.stable_dim).sum();
    assert_eq!(total, 2);
}

#[test]
fn ring_map_rejects_bad_images() {
    let a = graded(&["x"], &["x^2"]);
    let b = graded(&["x"], &[]);
    assert!(matches!(RingMap::parse(&a, &b, &["x"]), Err(DerivedError::RingMap(_))));
    let c = graded(&["x", "y"], &[]);
    let p = graded(&["t"], &[]);
    assert!(matches!(RingMap::parse(&p, &c, &["x^2"]), Err(DerivedError::RingMap(_))));
    let q = make_ring_str(Field::Prime(5), &["t"], Some(&[1]), &[], TermOrder::Grevlex).unwrap();
    assert!(matches!(RingMap::parse(&q, &c, &["x"]), Err(DerivedError::RingMap(_))));
}
