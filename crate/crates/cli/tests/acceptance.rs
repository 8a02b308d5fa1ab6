//! One line per acceptance criterion, each timed against its limit.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use algebra_core::{make_ring_str, syzygy_matrix, ElementSequence, Field, FpModule, Matrix, Poly, RingRef, TermOrder};
use cech::{complete_char_verify, cone_triangle_verify};
use complex::cohomology::{cohomology, tensor_free_comparison};
use complex::ops::{cone, hom_blocks, hom_from_free, tensor, tensor_blocks};
use complex::{is_quasi_iso, Complex, ComplexMap};
use derived::{gm_duality_verify, idempotence_verify, koszul_limit_contrast, mgm_verify, permanence_verify, torsion_char_verify, Report};
use koszul::{koszul_tower, pro_zero_check, wpr_check};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn ring(vars: &[&str], quot: &[&str]) -> RingRef {
    let w = vec![1; vars.len()];
    make_ring_str(Field::Rational, vars, Some(&w), quot, TermOrder::Grevlex).unwrap()
}

fn seq(r: &RingRef, s: &[&str]) -> ElementSequence {
    ElementSequence::parse(r, s).unwrap()
}

fn unit(r: &RingRef) -> Complex {
    Complex::concentrated(&FpModule::free_graded(r, vec![0]), 0)
}

fn cyclic(r: &RingRef, rels: &[&str]) -> Complex {
    let m = FpModule::new(r, Matrix::parse(r, &[rels]).unwrap(), Some(vec![0])).unwrap();
    Complex::concentrated(&m, 0)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(what: &str, r: &Report) -> Result<(), String> {
    ensure(r.passed(), || format!("{what}: {} {:?}", r.outcome, r.witnesses))
}

fn koszul_soundness() -> Verdict {
    for vars in [&["x", "y"][..], &["x", "y", "z"][..]] {
        let r = ring(vars, &[]);
        let s = seq(&r, vars);
        let t = koszul_tower(&s, 3).map_err(|e| e.to_string())?;
        for i in 1..=3 {
            for k in 1..=vars.len() as i32 {
                ensure(cohomology(t.level(i), -k).is_zero(), || format!("{r}: H^-{k} at i={i} is nonzero"))?;
            }
            ensure(t.h0_comparison(i).is_iso(), || format!("{r}: H^0 ≇ A/(𝒂^{i})"))?;
        }
    }
    Ok("ℚ[x,y], ℚ[x,y,z], i ≤ 3".into())
}

fn wpr_offset() -> Verdict {
    let r = ring(&["x"], &["x^2"]);
    let t = koszul_tower(&seq(&r, &["x"]), 6).map_err(|e| e.to_string())?;
    let c = wpr_check(&t);
    let h = c.degree(-1).ok_or("no certificate in degree -1")?;
    ensure(c.is_certified() && c.verify(&t), || "not certified".into())?;
    ensure(!h.pairs.is_empty() && h.offsets().iter().all(|&o| o == 2), || format!("offsets {:?}", h.offsets()))?;
    Ok(format!("offsets {:?}", h.offsets()))
}

fn telescope_lemma() -> Verdict {
    let plane = ring(&["x", "y"], &[]);
    let dual = ring(&["x"], &["x^2"]);
    let cases = [(&plane, vec!["x"]), (&plane, vec!["x", "y"]), (&dual, vec!["x"]), (&dual, vec!["x", "x"])];
    let mut n = 0;
    for (r, elems) in cases {
        let s = seq(r, &elems);
        for j in 1..=3 {
            let q = is_quasi_iso(&telescope::w_map(&s, j));
            ensure(q.holds(), || format!("{r} {elems:?} j={j}: degrees {:?}", q.failing_degrees()))?;
            n += 1;
        }
    }
    Ok(format!("{n} maps"))
}

fn completion_window() -> Verdict {
    let r = ring(&["t"], &[]);
    let s = seq(&r, &["t"]);
    let contrast = koszul_limit_contrast(&s, 7, (0, 5)).map_err(|e| e.to_string())?;
    passed("koszul_limit_contrast", &contrast)?;
    let ll = derived::llambda(&unit(&r), &s, 7, None).map_err(|e| e.to_string())?;
    let table = ll.window_table((0, 5)).map_err(|e| e.to_string())?;
    table.require_stable().map_err(|e| e.to_string())?;
    for d in 0..=5 {
        ensure(table.stable_dim(0, d) == Some(1), || format!("H^0 in degree {d}: {:?}", table.stable_dim(0, d)))?;
    }
    for k in ll.level(1).degrees().filter(|&k| k != 0) {
        let h = ll.cohomology(k).map_err(|e| e.to_string())?;
        ensure(pro_zero_check(&h.system).is_certified(), || format!("H^{k} not pro-zero"))?;
    }
    Ok("H^0 dim 1 in degrees 0..=5; towers not levelwise isomorphic".into())
}

fn mgm() -> Verdict {
    let r = ring(&["x", "y"], &[]);
    let s = seq(&r, &["x", "y"]);
    for (name, m) in [("A/(x,y)", cyclic(&r, &["x", "y"])), ("A", unit(&r)), ("A/(x^2,y)", cyclic(&r, &["x^2", "y"]))] {
        let rep = mgm_verify(&m, &s, 6, (-6, 3)).map_err(|e| format!("{name}: {e}"))?;
        passed(name, &rep)?;
    }
    Ok("A/(x,y), A, A/(x^2,y)".into())
}

fn gm() -> Verdict {
    let r = ring(&["x"], &[]);
    let a = unit(&r);
    let rep = gm_duality_verify(&a, &a, &seq(&r, &["x"]), 5, (0, 4)).map_err(|e| e.to_string())?;
    passed("gm_duality_verify", &rep)?;
    Ok("φ1..φ4 and ρ^LR".into())
}

fn idempotence_torsion() -> Verdict {
    let line = ring(&["x"], &[]);
    let rep = idempotence_verify(&unit(&line), &seq(&line, &["x"]), 4).map_err(|e| e.to_string())?;
    passed("idempotence", &rep)?;
    let plane = ring(&["x", "y"], &[]);
    let rep = torsion_char_verify(&cyclic(&plane, &["x^2", "y"]), &seq(&plane, &["x", "y"]), 4).map_err(|e| e.to_string())?;
    passed("torsion_char", &rep)?;
    let onset = rep.certificates.iter().find(|c| c.0 == "onset").ok_or("no onset certificate")?;
    Ok(format!("σ onset level {}", onset.1))
}

fn permanence() -> Verdict {
    let r = ring(&["x", "y"], &[]);
    let rep = permanence_verify(&seq(&r, &["x", "y"]), &seq(&r, &["x^2", "y"]), 6, (-5, 0), None).map_err(|e| e.to_string())?;
    passed("permanence", &rep)?;
    for c in ["radical_equal", "stable_dims_agree"] {
        ensure(rep.check_named(c).is_some_and(|c| c.passed), || format!("{c} missing or failed"))?;
    }
    Ok("(x,y) vs (x^2,y)".into())
}

fn derived_localization() -> Verdict {
    let r = ring(&["x", "y"], &[]);
    for elems in [&["x"][..], &["x", "y"][..]] {
        for j in 1..=3 {
            let rep = cone_triangle_verify(&seq(&r, elems), j).map_err(|e| e.to_string())?;
            passed(&format!("cone_triangle {elems:?} j={j}"), &rep)?;
        }
    }
    let s = seq(&r, &["x", "y"]);
    for (name, m, complete) in [
        ("0", Complex::zero(&r), true),
        ("A/(x,y)", cyclic(&r, &["x", "y"]), true),
        ("A", unit(&r), false),
    ] {
        let rep = complete_char_verify(&m, &s, 3, (-2, 2)).map_err(|e| format!("{name}: {e}"))?;
        ensure(rep.check_named("criteria_agree").is_some_and(|c| c.passed), || format!("{name}: criteria disagree"))?;
        let verdict = rep.certificates.iter().find(|c| c.0 == "verdict").map(|c| c.1.as_str());
        let expected = if complete { "complete" } else { "not complete" };
        ensure(verdict == Some(expected), || format!("{name}: verdict {verdict:?}"))?;
    }
    Ok("cone lemma j ≤ 3; criteria agree on 0, A/(x,y), A".into())
}

// Random free complexes over ℚ[x,y] with linear differentials.

fn linear(r: &RingRef, rng: &mut ChaCha8Rng) -> Poly {
    let (a, b, c): (i64, i64, i64) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2));
    r.parse(&format!("{a}*x + {b}*y + {c}")).unwrap()
}

fn random_complex(r: &RingRef, rng: &mut ChaCha8Rng) -> Complex {
    let lo = rng.gen_range(-1..=1);
    let len = rng.gen_range(1..=3);
    let ranks: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=2)).collect();
    let mut mats = Vec::new();
    if len >= 2 {
        let mut d0 = Matrix::zeros(ranks[1], ranks[0]);
        for i in 0..ranks[1] {
            for j in 0..ranks[0] {
                d0.set(i, j, linear(r, rng));
            }
        }
        mats.push(d0.clone());
        if len == 3 {
            let left = syzygy_matrix(r, &d0.transpose()).transpose();
            let mut d1 = Matrix::zeros(ranks[2], ranks[1]);
            for i in 0..ranks[2] {
                for s in 0..left.nrows() {
                    let c = r.from_i64(rng.gen_range(-2..=2));
                    for j in 0..ranks[1] {
                        let v = r.add(d1.get(i, j), &r.mul(&c, left.get(s, j)));
                        d1.set(i, j, v);
                    }
                }
            }
            mats.push(d1);
        }
    }
    Complex::free(r, lo, &ranks, mats).unwrap()
}

fn random_poly(r: &RingRef, rng: &mut ChaCha8Rng) -> Poly {
    let terms: Vec<String> = (0..rng.gen_range(0..4))
        .map(|_| format!("{}*x^{}*y^{}", rng.gen_range(-3..=3), rng.gen_range(0..3), rng.gen_range(0..3)))
        .collect();
    if terms.is_empty() {
        r.zero()
    } else {
        r.parse(&terms.join(" + ")).unwrap()
    }
}

fn syzygy_instance(rng: &mut ChaCha8Rng, rings: &[RingRef]) -> Result<(), String> {
    let r = &rings[rng.gen_range(0..rings.len())];
    let (rows, cols) = (rng.gen_range(1..=2), rng.gen_range(1..=3));
    let m = Matrix::from_rows((0..rows).map(|_| (0..cols).map(|_| random_poly(r, rng)).collect()).collect());
    let syz = syzygy_matrix(r, &m);
    ensure(m.mul(r, &syz).is_zero(), || format!("syzygies of {:?} do not annihilate", m.render(r)))
}

fn split(x: &Complex, y: &Complex, k: i32, c: usize) -> (i32, i32, usize, usize) {
    let b = tensor_blocks(x, y, k).into_iter().find(|b| c >= b.offset && c < b.offset + b.size).unwrap();
    let ry = y.rank(b.j);
    (b.i, b.j, (c - b.offset) / ry, (c - b.offset) % ry)
}

fn hom_index(p: &Complex, n: &Complex, k: i32, i: i32, a: usize, b: usize) -> usize {
    let blk = hom_blocks(p, n, k).into_iter().find(|blk| blk.i == i).unwrap();
    blk.offset + a * n.rank(i + k) + b
}

/// Hom(P ⊗ Q, M) → Hom(P, Hom(Q, M)) on canonical bases is a chain isomorphism.
fn adjunction_instance(rng: &mut ChaCha8Rng, r: &RingRef) -> Result<(), String> {
    let (p, q, m) = (random_complex(r, rng), random_complex(r, rng), random_complex(r, rng));
    let pq = tensor(&p, &q).unwrap();
    let hqm = hom_from_free(&q, &m).unwrap();
    let left = hom_from_free(&pq, &m).unwrap();
    let right = hom_from_free(&p, &hqm).unwrap();
    let total = |c: &Complex| c.ranks().iter().sum::<usize>();
    if total(&left) == 0 {
        return ensure(total(&right) == 0, || "ranks differ".into());
    }
    let mats = left
        .degrees()
        .map(|k| {
            let mut mat = Matrix::zeros(right.rank(k), left.rank(k));
            for g in 0..left.rank(k) {
                let blk = hom_blocks(&pq, &m, k).into_iter().find(|b| g >= b.offset && g < b.offset + b.size).unwrap();
                let rm = m.rank(blk.j);
                let (src, mc) = ((g - blk.offset) / rm, (g - blk.offset) % rm);
                let (i, j, pa, qb) = split(&p, &q, blk.i, src);
                let inner = hom_index(&q, &m, i + k, j, qb, mc);
                mat.set(hom_index(&p, &hqm, k, i, pa, inner), g, r.one());
            }
            (k, mat)
        })
        .collect();
    let phi = ComplexMap::new(&left, &right, mats).map_err(|e| e.to_string())?;
    ensure(phi.is_degreewise_iso(), || "adjunction map is not an isomorphism".into())
}

fn closure_instance(rng: &mut ChaCha8Rng, r: &RingRef) -> Result<(), String> {
    let (x, y) = (random_complex(r, rng), random_complex(r, rng));
    let f = random_poly(r, rng);
    let scaled = ComplexMap::new(&x, &x, x.degrees().map(|k| (k, Matrix::identity(r, x.rank(k)).scale_poly(r, &f))).collect())
        .map_err(|e| e.to_string())?;
    let built = [
        tensor(&x, &y).unwrap(),
        hom_from_free(&x, &y).unwrap(),
        cone(&scaled).unwrap(),
        cone(&ComplexMap::identity(&x)).unwrap(),
    ];
    ensure(built.iter().all(|c| c.check_square_zero().is_ok()), || "d∘d ≠ 0".into())
}

fn exact_functor_instance(rng: &mut ChaCha8Rng, r: &RingRef) -> Result<(), String> {
    let x = random_complex(r, rng);
    let rank = rng.gen_range(1..=2);
    for k in x.degrees() {
        let phi = tensor_free_comparison(&x, rank, k).map_err(|e| e.to_string())?;
        ensure(phi.is_iso(), || format!("H^{k}(F ⊗ X) ≇ F ⊗ H^{k}(X)"))?;
    }
    Ok(())
}

fn substrate() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let plane = ring(&["x", "y"], &[]);
    let rings = [plane.clone(), make_ring_str(Field::Rational, &["x", "y"], None, &["x^2*y - y^2", "x^3"], TermOrder::Grevlex).unwrap()];
    let mut counts = [0usize; 4];
    for n in 0..500 {
        let kind = n % 4;
        let res = match kind {
            0 => syzygy_instance(&mut rng, &rings),
            1 => adjunction_instance(&mut rng, &plane),
            2 => closure_instance(&mut rng, &plane),
            _ => exact_functor_instance(&mut rng, &plane),
        };
        res.map_err(|e| format!("instance {n}: {e}"))?;
        counts[kind] += 1;
    }
    Ok(format!(
        "500 instances: {} syzygy, {} adjunction, {} closure, {} exact functor",
        counts[0], counts[1], counts[2], counts[3]
    ))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Verdict); 10] = [
        ("Koszul soundness", 10, koszul_soundness),
        ("WPR certificate", 5, wpr_offset),
        ("telescope lemma", 30, telescope_lemma),
        ("completion in a graded window", 20, completion_window),
        ("MGM equivalence", 120, mgm),
        ("GM duality", 60, gm),
        ("idempotence and torsion characterization", 30, idempotence_torsion),
        ("permanence", 60, permanence),
        ("derived localization", 60, derived_localization),
        ("algebraic substrate", 120, substrate),
    ];
    let mut failures = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let out = out.and_then(|m| {
            if took > Duration::from_secs(*limit) {
                Err(format!("took {:.1}s, limit {limit}s", took.as_secs_f64()))
            } else {
                Ok(m)
            }
        });
        match out {
            Ok(m) => println!("criterion {:>2} PASS  {name} ({:.1}s, limit {limit}s): {m}", i + 1, took.as_secs_f64()),
            Err(m) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name} ({:.1}s, limit {limit}s): {m}", i + 1, took.as_secs_f64());
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
