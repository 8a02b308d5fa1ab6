use algebra_core::{make_ring_str, ElementSequence, Field, FpModule, Matrix, ModuleMap, RingRef, TermOrder};
use complex::cohomology::cohomology;
use complex::ops::hom_from_free;
use complex::system::{Direction, LevelSystem};
use complex::Complex;
use koszul::*;

fn ring(vars: &[&str], quot: &[&str]) -> RingRef {
    make_ring_str(Field::Rational, vars, None, quot, TermOrder::Grevlex).unwrap()
}

fn graded(vars: &[&str], quot: &[&str]) -> RingRef {
    let w = vec![1; vars.len()];
    make_ring_str(Field::Rational, vars, Some(&w), quot, TermOrder::Grevlex).unwrap()
}

fn seq(r: &RingRef, s: &[&str]) -> ElementSequence {
    ElementSequence::parse(r, s).unwrap()
}

fn entry(r: &RingRef, m: &Matrix, i: usize, j: usize) -> String {
    r.render(m.get(i, j))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

#[test]
fn single_element_tower() {
    let r = ring(&["x"], &[]);
    let t = koszul_tower(&seq(&r, &["x"]), 2).unwrap();
    assert_eq!(entry(&r, t.level(1).differential(-1).matrix(), 0, 0), "x");
    assert_eq!(entry(&r, t.level(2).differential(-1).matrix(), 0, 0), "x^2");
    let p = t.system.transition(1);
    assert_eq!(entry(&r, p.component(-1).matrix(), 0, 0), "x");
    assert_eq!(entry(&r, p.component(0).matrix(), 0, 0), "1");
    assert!(p.check_commutes().is_ok());
}

#[test]
fn pair_has_binomial_ranks_and_residue_h0() {
    let r = ring(&["x", "y"], &[]);
    let t = koszul_tower(&seq(&r, &["x", "y"]), 1).unwrap();
    assert_eq!(t.level(1).ranks(), vec![1, 2, 1]);
    assert!(t.h0_comparison(1).is_iso());
}

#[test]
fn powers_vanish_in_dual_numbers() {
    let r = ring(&["x"], &["x^2"]);
    let t = koszul_tower(&seq(&r, &["x"]), 3).unwrap();
    assert!(!t.level(1).differential(-1).matrix().is_zero());
    for i in 2..=3 {
        assert!(t.level(i).differential(-1).matrix().is_zero());
    }
}

#[test]
fn rank_profiles_and_h0_for_three_elements() {
    let r = graded(&["x", "y", "z"], &[]);
    let s = seq(&r, &["x", "y*z", "z^2"]);
    let t = koszul_tower(&s, 3).unwrap();
    for i in 1..=3 {
        let ranks = t.level(i).ranks();
        let expect: Vec<usize> = (0..=3).rev().map(|k| binomial(3, k)).collect();
        assert_eq!(ranks, expect);
        assert!(t.h0_comparison(i).is_iso());
    }
    // H⁰ of the transitions is the canonical surjection
    for i in 1..3 {
        let h = t.cohomology(0);
        let p = h.transition(i);
        let ci = t.h0_comparison(i);
        let cj = t.h0_comparison(i + 1);
        let surj = ModuleMap::new(cj.target(), ci.target(), Matrix::identity(&r, 1)).unwrap();
        assert!(ci.compose(p).equals(&surj.compose(&cj)));
    }
}

#[test]
fn dual_levels_and_their_cohomology() {
    let r = ring(&["x"], &[]);
    let d = dual_koszul_system(&seq(&r, &["x"]), 3).unwrap();
    for j in 1..=3 {
        let l = d.level(j);
        assert_eq!((l.lo(), l.hi()), (0, 1));
        assert_eq!(entry(&r, l.differential(0).matrix(), 0, 0), format!("x{}", if j == 1 { String::new() } else { format!("^{j}") }));
        // H¹ = A/(x^j)
        let h1 = cohomology(l, 1);
        let q = FpModule::cyclic(&r, &[r.parse(&format!("x^{j}")).unwrap()]);
        let cmp = ModuleMap::new(&h1, &q, Matrix::identity(&r, h1.ngens())).unwrap();
        assert!(cmp.is_iso());
    }
}

#[test]
fn dual_augmentations_are_compatible() {
    let r = ring(&["x", "y"], &[]);
    let d = dual_koszul_system(&seq(&r, &["x", "y"]), 2).unwrap();
    let e1 = d.augmentation(1);
    let e2 = d.augmentation(2);
    assert!(e1.check_commutes().is_ok());
    assert!(e2.compose(d.system.transition(1)).equals(&e1));
    assert_eq!(d.system.direction, Direction::Direct);
}

#[test]
fn duality_with_hom_is_a_signed_identification() {
    for (vars, elems) in [(vec!["x"], vec!["x"]), (vec!["x", "y"], vec!["x", "y"]), (vec!["x", "y", "z"], vec!["x", "y^2", "x*z"])] {
        let r = graded(&vars, &[]);
        let s = seq(&r, &elems);
        for i in 1..=2 {
            let phi = duality_isomorphism(&s, i).unwrap();
            assert!(phi.is_degreewise_iso());
            // every component is a signed permutation
            for k in phi.source().degrees() {
                let m = phi.component(k).matrix().clone();
                for c in 0..m.ncols() {
                    let nz: Vec<String> = (0..m.nrows()).filter(|&rr| !m.get(rr, c).is_zero()).map(|rr| entry(&r, &m, rr, c)).collect();
                    assert_eq!(nz.len(), 1);
                    assert!(nz[0] == "1" || nz[0] == "-1");
                }
            }
            // source is exactly Hom(K, A)
            let unit = Complex::concentrated(&FpModule::free_graded(&r, vec![0]), 0);
            let hom = hom_from_free(&koszul_complex(&s.power(i)), &unit).unwrap();
            assert_eq!(hom.ranks(), phi.source().ranks());
        }
    }
}

#[test]
fn regular_sequence_certificate_is_trivial() {
    let r = ring(&["x", "y"], &[]);
    let t = koszul_tower(&seq(&r, &["x", "y"]), 2).unwrap();
    let c = wpr_check(&t);
    assert!(c.is_certified());
    assert_eq!(c.degrees.len(), 2);
    for (_, dc) in &c.degrees {
        assert_eq!(dc.pairs, vec![(1, 1), (2, 2)]);
    }
    assert!(c.verify(&t));
}

/// Whether H^{−1} of level j → level i vanishes over ℚ[x]/(x²), using the
/// 2-dimensional space with basis 1, x: H^{−1}(level j) = ker(x^j) and the
/// transition multiplies by x^{j−i}.
fn dual_numbers_oracle(i: u32, j: u32) -> bool {
    // multiplication by x on (1, x): [[0,0],[1,0]]
    let mul_x = [[0i64, 0], [1, 0]];
    let pow = |e: u32| {
        let mut m = [[1i64, 0], [0, 1]];
        for _ in 0..e {
            let mut n = [[0i64; 2]; 2];
            for a in 0..2 {
                for b in 0..2 {
                    n[a][b] = (0..2).map(|c| mul_x[a][c] * m[c][b]).sum();
                }
            }
            m = n;
        }
        m
    };
    // kernel of x^j on (1, x): all of it for j ≥ 2, span(x) for j = 1
    let ker: Vec<[i64; 2]> = if j >= 2 { vec![[1, 0], [0, 1]] } else { vec![[0, 1]] };
    let t = pow(j - i);
    // K^{−2} = 0, so a class vanishes only when its cycle does
    ker.iter().all(|v| {
        let w = [t[0][0] * v[0] + t[0][1] * v[1], t[1][0] * v[0] + t[1][1] * v[1]];
        w == [0, 0]
    })
}

#[test]
fn dual_numbers_certificate_has_offset_two() {
    let r = ring(&["x"], &["x^2"]);
    let t = koszul_tower(&seq(&r, &["x"]), 4).unwrap();
    let c = wpr_check(&t);
    assert!(c.is_certified());
    let dc = c.degree(-1).unwrap();
    for &(i, j) in &dc.pairs {
        let oracle = (i as u32..=4).find(|&jj| dual_numbers_oracle(i as u32, jj)).unwrap();
        assert_eq!(j as u32, oracle);
        assert_eq!(j, i + 2);
    }
    assert_eq!(dc.pairs, vec![(1, 3), (2, 4)]);
    assert_eq!(dc.verdict, Verdict::Certified { through: 2 });
    assert!(c.verify(&t));
}

#[test]
fn identity_system_is_undetermined() {
    let r = ring(&["x"], &[]);
    let m = FpModule::free(&r, 1);
    let levels = vec![m.clone(); 4];
    let trans = vec![ModuleMap::identity(&m); 3];
    let sys = LevelSystem::new(Direction::Inverse, 1, levels, trans).unwrap();
    let c = pro_zero_check(&sys);
    assert_eq!(c.verdict, Verdict::UndeterminedAtCap(4));
    assert!(c.pairs.is_empty());
}

#[test]
fn zero_system_is_pro_zero() {
    let r = ring(&["x"], &[]);
    let z = FpModule::zero(&r);
    let sys = LevelSystem::new(Direction::Inverse, 1, vec![z.clone(); 3], vec![ModuleMap::identity(&z); 2]).unwrap();
    let c = pro_zero_check(&sys);
    assert_eq!(c.pairs, vec![(1, 1), (2, 2), (3, 3)]);
}

#[test]
fn canonical_surjections_are_undetermined() {
    let r = ring(&["x"], &[]);
    let levels: Vec<FpModule> = (1..=4).map(|i| FpModule::cyclic(&r, &[r.parse(&format!("x^{i}")).unwrap()])).collect();
    let trans = (0..3)
        .map(|i| ModuleMap::new(&levels[i + 1], &levels[i], Matrix::identity(&r, 1)).unwrap())
        .collect();
    let sys = LevelSystem::new(Direction::Inverse, 1, levels, trans).unwrap();
    assert_eq!(pro_zero_check(&sys).verdict, Verdict::UndeterminedAtCap(4));
}

#[test]
fn engineered_tower_vanishes_with_offset_two() {
    // M_i = A/(x²) with transitions multiplication by x
    let r = ring(&["x"], &[]);
    let m = FpModule::cyclic(&r, &[r.parse("x^2").unwrap()]);
    let t = ModuleMap::new(&m, &m, Matrix::parse(&r, &[&["x"]]).unwrap()).unwrap();
    let sys = LevelSystem::new(Direction::Inverse, 1, vec![m.clone(); 5], vec![t; 4]).unwrap();
    let c = pro_zero_check(&sys);
    assert_eq!(c.offsets(), vec![2, 2, 2]);
    assert!(c.verify(&sys));
    // membership: x^{j−i} ∈ (x²) exactly when j − i ≥ 2
    let x2 = [r.parse("x^2").unwrap()];
    for e in 0..4u32 {
        let v = r.pow(&r.var(0), e);
        assert_eq!(algebra_core::ideal::ideal_contained(&r, &[v], &x2), e >= 2);
    }
}

#[test]
fn noetherian_sequences_certify_by_level_six() {
    let cases: Vec<(RingRef, Vec<&str>)> = vec![
        (ring(&["x", "y"], &[]), vec!["x*y", "y^2"]),
        (ring(&["x", "y"], &["x*y"]), vec!["x", "y"]),
        (ring(&["x"], &["x^3"]), vec!["x"]),
        (ring(&["x", "y"], &["x^2", "x*y"]), vec!["y"]),
    ];
    for (r, elems) in cases {
        let t = koszul_tower(&seq(&r, &elems), 6).unwrap();
        let c = wpr_check(&t);
        assert!(c.is_certified(), "{elems:?} over {r}");
        assert!(c.verify(&t));
    }
}
