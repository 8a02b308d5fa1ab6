#![allow(dead_code)]

use algebra_core::{make_ring_str, ElementSequence, Field, FpModule, Matrix, RingRef, TermOrder};
use complex::Complex;

pub fn graded(vars: &[&str], quot: &[&str]) -> RingRef {
    let w = vec![1; vars.len()];
    make_ring_str(Field::Rational, vars, Some(&w), quot, TermOrder::Grevlex).unwrap()
}

pub fn seq(r: &RingRef, s: &[&str]) -> ElementSequence {
    ElementSequence::parse(r, s).unwrap()
}

/// The ring as a complex in degree 0.
pub fn unit(r: &RingRef) -> Complex {
    Complex::concentrated(&FpModule::free_graded(r, vec![0]), 0)
}

/// A/(rels) in degree 0.
pub fn cyclic(r: &RingRef, rels: &[&str]) -> Complex {
    let m = FpModule::new(r, Matrix::parse(r, &[rels]).unwrap(), Some(vec![0])).unwrap();
    Complex::concentrated(&m, 0)
}
