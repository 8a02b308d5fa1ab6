use algebra_core::ideal::ideal_contained;
use algebra_core::{make_ring_str, Field, FpModule, MapDefect, Matrix, Poly, RingRef, TermOrder};
use complex::cohomology::{cohomology, is_acyclic, is_quasi_iso, tensor_free_comparison, Cohomology};
use complex::ops::{cone, hom_from_free, tensor};
use complex::resolution::{free_resolution, resolve_complex};
use complex::{Complex, ComplexError, ComplexMap};

fn ring(vars: &[&str], quot: &[&str]) -> RingRef {
    make_ring_str(Field::Rational, vars, None, quot, TermOrder::Grevlex).unwrap()
}

fn graded(vars: &[&str], quot: &[&str]) -> RingRef {
    let w = vec![1; vars.len()];
    make_ring_str(Field::Rational, vars, Some(&w), quot, TermOrder::Grevlex).unwrap()
}

fn koszul1(r: &RingRef, a: &str) -> Complex {
    Complex::free(r, -1, &[1, 1], vec![Matrix::parse(r, &[&[a]]).unwrap()]).unwrap()
}

fn unit(r: &RingRef) -> Complex {
    Complex::concentrated(&FpModule::free(r, 1), 0)
}

fn polys(r: &RingRef, s: &[&str]) -> Vec<Poly> {
    s.iter().map(|t| r.parse(t).unwrap()).collect()
}

/// Independent product of two polynomial matrices.
fn naive_mul(r: &RingRef, a: &Matrix, b: &Matrix) -> Vec<Vec<Poly>> {
    (0..a.nrows())
        .map(|i| {
            (0..b.ncols())
                .map(|j| {
                    let mut s = Poly::zero();
                    for k in 0..a.ncols() {
                        s = r.add(&s, &r.mul(a.get(i, k), b.get(k, j)));
                    }
                    r.nf(&s)
                })
                .collect()
        })
        .collect()
}

#[test]
fn stupid_truncation_to_middle() {
    let r = ring(&["x", "y"], &[]);
    let k = tensor(&koszul1(&r, "x"), &koszul1(&r, "y")).unwrap();
    let t = k.stupid_truncate(-1, -1);
    assert_eq!((t.lo(), t.hi()), (-1, -1));
    assert_eq!(t.ranks(), vec![2]);
}

#[test]
fn cone_of_identity_is_acyclic() {
    let r = ring(&["x"], &[]);
    let k = koszul1(&r, "x");
    let c = cone(&ComplexMap::identity(&k)).unwrap();
    assert!(c.check_square_zero().is_ok());
    assert!(is_acyclic(&c));
    assert!(!is_acyclic(&k));
}

#[test]
fn shift_by_one() {
    let r = ring(&["x"], &[]);
    let s = koszul1(&r, "x").shift(1);
    assert_eq!((s.lo(), s.hi()), (-2, -1));
    assert_eq!(r.render(s.differential(-2).matrix().get(0, 0)), "-x");
}

#[test]
fn koszul_of_a_pair() {
    let r = ring(&["x", "y"], &[]);
    let k = tensor(&koszul1(&r, "x"), &koszul1(&r, "y")).unwrap();
    assert_eq!((k.lo(), k.hi()), (-2, 0));
    assert_eq!(k.ranks(), vec![1, 2, 1]);
    let d = k.differential(-1).matrix().render(&r);
    assert_eq!(d, vec![vec!["x".to_string(), "y".to_string()]]);
}

#[test]
fn tensor_unit() {
    let r = ring(&["x", "y"], &[]);
    let k = tensor(&koszul1(&r, "x"), &koszul1(&r, "y")).unwrap();
    let t = tensor(&k, &unit(&r)).unwrap();
    assert_eq!(t.ranks(), k.ranks());
    for d in k.degrees() {
        assert_eq!(t.differential(d).matrix(), k.differential(d).matrix());
    }
}

#[test]
fn square_zero_over_quotient_by_direct_multiplication() {
    let r = ring(&["x"], &["x^2"]);
    let k = tensor(&koszul1(&r, "x"), &koszul1(&r, "x")).unwrap();
    assert_eq!(k.ranks(), vec![1, 2, 1]);
    let prod = naive_mul(&r, k.differential(-1).matrix(), k.differential(-2).matrix());
    assert!(prod.iter().flatten().all(|p| p.is_zero()));
    // four-term self-tensor: every consecutive product vanishes
    let kk = tensor(&k, &k).unwrap();
    assert_eq!(kk.ranks(), vec![1, 4, 6, 4, 1]);
    for d in kk.lo()..kk.hi() - 1 {
        let p = naive_mul(&r, kk.differential(d + 1).matrix(), kk.differential(d).matrix());
        assert!(p.iter().flatten().all(|q| q.is_zero()), "degree {d}");
    }
}

#[test]
fn tensor_of_two_non_free_complexes_is_rejected() {
    let r = ring(&["x"], &[]);
    let m = Complex::concentrated(&FpModule::cyclic(&r, &polys(&r, &["x"])), 0);
    assert_eq!(tensor(&m, &m).unwrap_err(), ComplexError::NonFreeTensor(0, 0));
    assert!(tensor(&koszul1(&r, "x"), &m).is_ok());
}

#[test]
fn hom_from_unit_is_identity() {
    let r = ring(&["x", "y"], &[]);
    let n = tensor(&koszul1(&r, "x"), &koszul1(&r, "y")).unwrap();
    let h = hom_from_free(&unit(&r), &n).unwrap();
    assert_eq!((h.lo(), h.hi()), (n.lo(), n.hi()));
    for d in n.degrees() {
        assert_eq!(h.differential(d).matrix(), n.differential(d).matrix());
    }
}

#[test]
fn dual_koszul_via_hom() {
    let r = ring(&["x"], &[]);
    let h = hom_from_free(&koszul1(&r, "x"), &unit(&r)).unwrap();
    assert_eq!((h.lo(), h.hi()), (0, 1));
    // d(f) = −f∘d_P in degree 0
    assert_eq!(r.render(h.differential(0).matrix().get(0, 0)), "-x");
    // isomorphic to A →x A through the diagonal sign (1, −1)
    let plain = Complex::free(&r, 0, &[1, 1], vec![Matrix::parse(&r, &[&["x"]]).unwrap()]).unwrap();
    let iso = ComplexMap::new(
        &h,
        &plain,
        vec![(0, Matrix::parse(&r, &[&["1"]]).unwrap()), (1, Matrix::parse(&r, &[&["-1"]]).unwrap())],
    )
    .unwrap();
    assert!(iso.is_degreewise_iso());
}

#[test]
fn hom_rejects_non_free_source() {
    let r = ring(&["x"], &[]);
    let m = Complex::concentrated(&FpModule::cyclic(&r, &polys(&r, &["x"])), 0);
    assert_eq!(hom_from_free(&m, &unit(&r)).unwrap_err(), ComplexError::NotFree(0));
}

#[test]
fn cohomology_of_koszul_on_two_variables() {
    let r = ring(&["x", "y"], &[]);
    let k = tensor(&koszul1(&r, "x"), &koszul1(&r, "y")).unwrap();
    let h0 = cohomology(&k, 0);
    assert_eq!(h0.ngens(), 1);
    let rels = h0.relations().row(0);
    let xy = polys(&r, &["x", "y"]);
    assert!(ideal_contained(&r, &rels, &xy) && ideal_contained(&r, &xy, &rels));
    assert!(cohomology(&k, -1).is_zero());
    assert!(cohomology(&k, -2).is_zero());
}

#[test]
fn cohomology_with_zero_differential() {
    let r = ring(&["x"], &["x^2"]);
    let k = koszul1(&r, "x^2");
    let h = cohomology(&k, -1);
    assert_eq!(h.ngens(), 1);
    assert!(h.is_free());
}

#[test]
fn quasi_isomorphism_verdicts() {
    let r = ring(&["x"], &[]);
    let k = koszul1(&r, "x");
    assert!(is_quasi_iso(&ComplexMap::identity(&k)).holds());

    let q = Complex::concentrated(&FpModule::cyclic(&r, &polys(&r, &["x"])), 0);
    let aug = ComplexMap::new(&k, &q, vec![(0, Matrix::parse(&r, &[&["1"]]).unwrap())]).unwrap();
    assert!(is_quasi_iso(&aug).holds());
    assert!(!is_quasi_iso(&ComplexMap::zero(&k, &Complex::zero(&r))).holds());

    let a = unit(&r);
    let mx = ComplexMap::new(&a, &a, vec![(0, Matrix::parse(&r, &[&["x"]]).unwrap())]).unwrap();
    let rep = is_quasi_iso(&mx);
    assert!(!rep.holds());
    assert_eq!(rep.failing_degrees(), vec![0]);
    let defect = rep.degrees.iter().find(|(k, _)| *k == 0).unwrap().1.clone();
    assert!(matches!(defect, Some(MapDefect::Cokernel(0))));
}

#[test]
fn cohomology_classes_round_trip() {
    let r = ring(&["x", "y"], &[]);
    let k = tensor(&koszul1(&r, "x"), &koszul1(&r, "y")).unwrap();
    let h = Cohomology::new(&k, 0);
    let reps = h.representatives();
    for g in 0..reps.ncols() {
        let c = h.class_of(&reps.col(g)).unwrap();
        let mut e = vec![Poly::zero(); h.module().ngens()];
        e[g] = r.one();
        let diff: Vec<Poly> = c.iter().zip(&e).map(|(a, b)| r.sub(a, b)).collect();
        assert!(h.module().is_zero_element(&diff));
    }
    // boundaries are zero classes
    let b = polys(&r, &["x*y"]);
    assert!(h.module().is_zero_element(&h.class_of(&b).unwrap()));
}

#[test]
fn resolution_of_residue_field_terminates() {
    let r = ring(&["x", "y"], &[]);
    let m = FpModule::cyclic(&r, &polys(&r, &["x", "y"]));
    let res = free_resolution(&m, 3).unwrap();
    assert_eq!(res.complex.ranks(), vec![1, 2, 1]);
    assert!(res.terminated);
    assert_eq!(res.length(), 2);
    assert!(res.validity_floor().is_none());
    assert!(is_quasi_iso(&res.augmentation).holds());
}

#[test]
fn periodic_resolution_over_dual_numbers() {
    let r = ring(&["x"], &["x^2"]);
    let m = FpModule::cyclic(&r, &polys(&r, &["x"]));
    let res = free_resolution(&m, 4).unwrap();
    assert_eq!(res.complex.ranks(), vec![1; 5]);
    assert!(!res.terminated);
    assert_eq!(res.validity_floor(), Some(-3));
    for k in -4..0 {
        assert_eq!(r.render(res.complex.differential(k).matrix().get(0, 0)), "x");
    }
    for k in -3..0 {
        assert!(cohomology(&res.complex, k).is_zero());
    }
}

#[test]
fn resolution_of_free_module_is_itself() {
    let r = ring(&["x", "y"], &[]);
    let m = FpModule::free(&r, 2);
    let res = free_resolution(&m, 3).unwrap();
    assert_eq!(res.complex.ranks(), vec![2]);
    assert!(res.terminated);
}

#[test]
fn resolving_a_two_term_complex_of_torsion_modules() {
    let r = graded(&["x", "y"], &[]);
    let m0 = FpModule::new(&r, Matrix::parse(&r, &[&["x^2", "y"]]).unwrap(), Some(vec![0])).unwrap();
    let m1 = FpModule::new(&r, Matrix::parse(&r, &[&["x", "y"]]).unwrap(), Some(vec![0])).unwrap();
    let d = algebra_core::ModuleMap::new(&m0, &m1, Matrix::parse(&r, &[&["1"]]).unwrap()).unwrap();
    let x = Complex::new(&r, 0, vec![m0, m1], vec![d]).unwrap();
    let res = resolve_complex(&x, 3).unwrap();
    assert!(res.complex.is_free());
    assert!(res.terminated);
    assert!(res.augmentation.check_commutes().is_ok());
    assert!(is_quasi_iso(&res.augmentation).holds());
}

#[test]
fn exact_functor_comparison_on_koszul() {
    let r = ring(&["x", "y"], &[]);
    let k = tensor(&koszul1(&r, "x"), &koszul1(&r, "x*y")).unwrap();
    for d in k.degrees() {
        assert!(tensor_free_comparison(&k, 2, d).unwrap().is_iso());
    }
}
