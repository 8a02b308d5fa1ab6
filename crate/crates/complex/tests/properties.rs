use algebra_core::{make_ring_str, syzygy_matrix, Field, Matrix, Poly, RingRef, TermOrder};
use complex::cohomology::tensor_free_comparison;
use complex::ops::{cone, hom_blocks, hom_from_free, tensor, tensor_blocks};
use complex::{Complex, ComplexMap};
use proptest::prelude::*;

fn ring() -> RingRef {
    make_ring_str(Field::Rational, &["x", "y"], None, &[], TermOrder::Grevlex).unwrap()
}

fn linear(r: &RingRef, c: &[i64]) -> Poly {
    let x = r.scale(&r.var(0), &r.field().from_i64(c[0]));
    let y = r.scale(&r.var(1), &r.field().from_i64(c[1]));
    r.add(&r.add(&x, &y), &r.from_i64(c[2]))
}

/// Free complex with at most three terms of rank ≤ 2: a random first
/// differential followed by random combinations of its left syzygies.
fn build(r: &RingRef, lo: i32, ranks: &[usize], coeffs: &[i64]) -> Complex {
    let mut it = coeffs.chunks(3).cycle();
    let mut mats = Vec::new();
    if ranks.len() >= 2 {
        let mut d0 = Matrix::zeros(ranks[1], ranks[0]);
        for i in 0..ranks[1] {
            for j in 0..ranks[0] {
                d0.set(i, j, linear(r, it.next().unwrap()));
            }
        }
        mats.push(d0.clone());
        if ranks.len() == 3 {
            let left = syzygy_matrix(r, &d0.transpose()).transpose();
            let mut d1 = Matrix::zeros(ranks[2], ranks[1]);
            for i in 0..ranks[2] {
                for s in 0..left.nrows() {
                    let c = r.from_i64(it.next().unwrap()[0]);
                    for j in 0..ranks[1] {
                        let v = r.add(d1.get(i, j), &r.mul(&c, left.get(s, j)));
                        d1.set(i, j, v);
                    }
                }
            }
            mats.push(d1);
        }
    }
    Complex::free(r, lo, ranks, mats).unwrap()
}

fn complex_strategy() -> impl Strategy<Value = (i32, Vec<usize>, Vec<i64>)> {
    (
        -1i32..=1,
        prop::collection::vec(0usize..=2, 1..=3),
        prop::collection::vec(-2i64..=2, 3..=24).prop_map(|mut v| {
            v.truncate(v.len() / 3 * 3);
            v
        }),
    )
}

fn square_zero(c: &Complex) -> bool {
    c.check_square_zero().is_ok()
}

/// Canonical basis bijection, given as index maps, assembled into a chain map.
fn bijection(
    src: &Complex,
    tgt: &Complex,
    f: impl Fn(i32, usize) -> usize,
) -> ComplexMap {
    let r = src.ring();
    let mats = src
        .degrees()
        .map(|k| {
            let mut m = Matrix::zeros(tgt.rank(k), src.rank(k));
            for c in 0..src.rank(k) {
                m.set(f(k, c), c, r.one());
            }
            (k, m)
        })
        .collect();
    ComplexMap::new(src, tgt, mats).expect("canonical map is a chain map")
}

/// Locates generator `c` of (X⊗Y)^k as (i, j, a, b).
fn split_tensor(x: &Complex, y: &Complex, k: i32, c: usize) -> (i32, i32, usize, usize) {
    let b = tensor_blocks(x, y, k)
        .into_iter()
        .find(|b| c >= b.offset && c < b.offset + b.size)
        .unwrap();
    let ry = y.rank(b.j);
    (b.i, b.j, (c - b.offset) / ry, (c - b.offset) % ry)
}

fn tensor_index(x: &Complex, y: &Complex, i: i32, j: i32, a: usize, b: usize) -> usize {
    let blk = tensor_blocks(x, y, i + j)
        .into_iter()
        .find(|blk| blk.i == i)
        .unwrap();
    blk.offset + a * y.rank(j) + b
}

fn hom_index(p: &Complex, n: &Complex, k: i32, i: i32, a: usize, b: usize) -> usize {
    let blk = hom_blocks(p, n, k).into_iter().find(|blk| blk.i == i).unwrap();
    blk.offset + a * n.rank(i + k) + b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constructions_square_to_zero(a in complex_strategy(), b in complex_strategy()) {
        let r = ring();
        let x = build(&r, a.0, &a.1, &a.2);
        let y = build(&r, b.0, &b.1, &b.2);
        prop_assert!(square_zero(&tensor(&x, &y).unwrap()));
        prop_assert!(square_zero(&hom_from_free(&x, &y).unwrap()));
        prop_assert!(square_zero(&cone(&ComplexMap::identity(&x)).unwrap()));
        prop_assert!(square_zero(&x.shift(1)));
    }

    #[test]
    fn tensor_associativity(a in complex_strategy(), b in complex_strategy(), c in complex_strategy()) {
        let r = ring();
        let x = build(&r, a.0, &a.1, &a.2);
        let y = build(&r, b.0, &b.1, &b.2);
        let z = build(&r, c.0, &c.1, &c.2);
        let xy = tensor(&x, &y).unwrap();
        let yz = tensor(&y, &z).unwrap();
        let left = tensor(&xy, &z).unwrap();
        let right = tensor(&x, &yz).unwrap();
        prop_assert_eq!(left.ranks().iter().sum::<usize>(), right.ranks().iter().sum::<usize>());
        if left.ranks().iter().sum::<usize>() == 0 {
            return Ok(());
        }
        let phi = bijection(&left, &right, |k, g| {
            let (s, t, p, w) = split_tensor(&xy, &z, k, g);
            let (i, j, u, v) = split_tensor(&x, &y, s, p);
            let inner = tensor_index(&y, &z, j, t, v, w);
            tensor_index(&x, &yz, i, j + t, u, inner)
        });
        prop_assert!(phi.is_degreewise_iso());
    }

    #[test]
    fn tensor_unit_map(a in complex_strategy()) {
        let r = ring();
        let x = build(&r, a.0, &a.1, &a.2);
        let u = Complex::concentrated(&algebra_core::FpModule::free(&r, 1), 0);
        let xu = tensor(&x, &u).unwrap();
        let phi = bijection(&xu, &x, |_, g| g);
        prop_assert!(phi.is_degreewise_iso());
    }

    #[test]
    fn hom_tensor_adjunction(a in complex_strategy(), b in complex_strategy(), c in complex_strategy()) {
        let r = ring();
        let p = build(&r, a.0, &a.1, &a.2);
        let q = build(&r, b.0, &b.1, &b.2);
        let m = build(&r, c.0, &c.1, &c.2);
        let pq = tensor(&p, &q).unwrap();
        let hqm = hom_from_free(&q, &m).unwrap();
        let left = hom_from_free(&pq, &m).unwrap();
        let right = hom_from_free(&p, &hqm).unwrap();
        if left.ranks().iter().sum::<usize>() == 0 {
            prop_assert_eq!(right.ranks().iter().sum::<usize>(), 0);
            return Ok(());
        }
        // (p_a ⊗ q_b)^∨ ⊗ m_c  ↦  p_a^∨ ⊗ (q_b^∨ ⊗ m_c)
        let phi = bijection(&left, &right, |k, g| {
            let blk = hom_blocks(&pq, &m, k)
                .into_iter()
                .find(|blk| g >= blk.offset && g < blk.offset + blk.size)
                .unwrap();
            let rm = m.rank(blk.j);
            let (src, mc) = ((g - blk.offset) / rm, (g - blk.offset) % rm);
            let (i, j, pa, qb) = split_tensor(&p, &q, blk.i, src);
            // f lands in Hom(Q^j, M^{j + i + k − i})
            let inner = hom_index(&q, &m, i + k, j, qb, mc);
            hom_index(&p, &hqm, k, i, pa, inner)
        });
        prop_assert!(phi.is_degreewise_iso());
    }

    #[test]
    fn exact_functor_commutes_with_cohomology(a in complex_strategy(), rank in 1usize..=2) {
        let r = ring();
        let x = build(&r, a.0, &a.1, &a.2);
        for k in x.degrees() {
            prop_assert!(tensor_free_comparison(&x, rank, k).unwrap().is_iso());
        }
    }

    #[test]
    fn stupid_truncations_form_short_exact_sequences(a in complex_strategy(), cut in -2i32..=2) {
        let r = ring();
        let x = build(&r, a.0, &a.1, &a.2);
        let upper = x.stupid_truncate(cut, i32::MAX);
        let lower = x.stupid_truncate(i32::MIN, cut - 1);
        let id = |c: &Complex| -> Vec<(i32, Matrix)> {
            c.degrees().map(|k| (k, Matrix::identity(&r, c.rank(k)))).collect()
        };
        let inc = ComplexMap::new(&upper, &x, id(&upper)).unwrap();
        let proj = ComplexMap::new(&x, &lower, id(&lower)).unwrap();
        for k in x.lo() - 1..=x.hi() + 1 {
            let (i, p) = (inc.component(k), proj.component(k));
            prop_assert!(i.is_injective());
            prop_assert!(p.is_surjective());
            prop_assert!(p.compose(&i).is_zero_map());
            let (_, ker) = p.kernel();
            let (_, _, im) = i.image();
            let gb = algebra_core::ModuleGb::from_matrix(&r, &im.matrix().hcat(x.component(k).relations()), false);
            for col in ker.matrix().cols() {
                prop_assert!(gb.contains(&r, &col));
            }
        }
    }
}
