//! The triangle K^∨(A;𝒂^j) → A → C_j at a fixed level: K^∨(A;𝒂^j)[1] is
//! isomorphic to cone(f_𝒂) through a signed identification of generators.

use algebra_core::{ElementSequence, Matrix, ModuleMap};
use complex::cohomology::{induced_map_between, Cohomology};
use complex::ops::cone;
use complex::{Complex, ComplexMap};
use derived::{Check, Report};
use koszul::tower::{dual_koszul_complex, factor_labels};

use crate::error::CechError;
use crate::level::{cech_level, unit_complex, CechLevelComplex};

/// Tuple of factors in their non-zero degree, per generator of K^∨ in each degree.
fn koszul_tuples(seq: &ElementSequence) -> Vec<(i32, Vec<Vec<usize>>)> {
    let ring = seq.ring();
    let parts: Vec<Complex> = (0..seq.len())
        .map(|_| Complex::free(ring, 0, &[1, 1], vec![Matrix::zeros(1, 1)]).expect("two-term"))
        .collect();
    factor_labels(&parts)
        .into_iter()
        .map(|(k, ls)| (k, ls.iter().map(|l| l.iter().enumerate().filter(|p| *p.1).map(|p| p.0).collect()).collect()))
        .collect()
}

/// φ : K^∨(A;𝒂^j)[1] → cone(f_𝒂), the identity A → A in degree −1 and
/// e_I ↦ (−1)^{p+1} e_I in degree p ≥ 0.
pub fn cone_isomorphism(c: &CechLevelComplex, shifted: &Complex, cone_c: &Complex) -> ComplexMap {
    let ring = c.seq.ring();
    let labels = koszul_tuples(&c.seq);
    let mut mats = vec![(-1, Matrix::identity(ring, 1))];
    for (p, ts) in c.tuples.iter().enumerate() {
        let gens = &labels.iter().find(|(k, _)| *k == p as i32 + 1).expect("Koszul degree").1;
        let sign = if p % 2 == 0 { ring.from_i64(-1) } else { ring.one() };
        let mut m = Matrix::zeros(ts.len(), gens.len());
        for (g, t) in gens.iter().enumerate() {
            let r = ts.iter().position(|x| x == t).expect("same tuples");
            m.set(r, g, sign.clone());
        }
        mats.push((p as i32, m));
    }
    ComplexMap::from_parts(shifted, cone_c, mats)
}

/// Exactness of X →f Y →g Z at Y.
fn exact_at(f: &ModuleMap, g: &ModuleMap) -> bool {
    if !g.compose(f).is_zero_map() {
        return false;
    }
    let (_, inc) = g.kernel();
    let (coker, proj) = f.cokernel();
    inc.matrix().cols().iter().all(|v| coker.is_zero_element(&proj.apply(v)))
}

/// `delta` : C → K^∨[1], so H^k(delta) lands in H^{k+1}(K^∨). Positions in
/// the long exact sequence H^k(K^∨) → H^k(A) → H^k(C) → H^{k+1}(K^∨)
/// where exactness fails, as (k, spot) with spot ∈ {"A", "C", "K"}.
fn triangle_defects(k_dual: &Complex, unit: &Complex, c: &Complex, aug: &ComplexMap, f: &ComplexMap, delta: &ComplexMap) -> Vec<(i32, &'static str)> {
    let lo = k_dual.lo().min(0) - 1;
    let hi = k_dual.hi().max(c.hi()) + 1;
    let hk: Vec<Cohomology> = (lo..=hi + 1).map(|k| Cohomology::new(k_dual, k)).collect();
    let ha: Vec<Cohomology> = (lo..=hi).map(|k| Cohomology::new(unit, k)).collect();
    let hc: Vec<Cohomology> = (lo..=hi).map(|k| Cohomology::new(c, k)).collect();
    let i = |k: i32| (k - lo) as usize;
    let mut bad = Vec::new();
    for k in lo..=hi {
        let a = induced_map_between(aug, &hk[i(k)], &ha[i(k)]);
        let b = induced_map_between(f, &ha[i(k)], &hc[i(k)]);
        let d = induced_map_between(delta, &hc[i(k)], &hk[i(k + 1)]);
        if !exact_at(&a, &b) {
            bad.push((k, "A"));
        }
        if !exact_at(&b, &d) {
            bad.push((k, "C"));
        }
        if k < hi {
            let a1 = induced_map_between(aug, &hk[i(k + 1)], &ha[i(k + 1)]);
            if !exact_at(&d, &a1) {
                bad.push((k + 1, "K"));
            }
        }
    }
    bad
}

pub fn cone_triangle_verify(seq: &ElementSequence, j: usize) -> Result<Report, CechError> {
    if j == 0 {
        return Err(CechError::LevelTooSmall(1));
    }
    let mut report = Report::new("cone_triangle_verify");
    report.certificate("level", j);
    let c = cech_level(seq, j)?;
    let x = &c.complex;
    let square_zero = (x.lo()..x.hi()).all(|k| x.differential(k + 1).compose(&x.differential(k)).is_zero_map());
    report.check(Check::new("coboundary_square_zero", square_zero, format!("Čech level {j}, degrees {}..{}", x.lo(), x.hi())));

    let f = c.localization_map();
    report.check(Check::new("localization_chain_map", f.check_commutes().is_ok(), "f_𝒂 : A → C_j"));

    let cone_c = cone(&f)?;
    let k_dual = dual_koszul_complex(&seq.power(j as u32));
    let shifted = k_dual.shift(1);
    let phi = cone_isomorphism(&c, &shifted, &cone_c);
    let iso = match ComplexMap::new(&shifted, &cone_c, (-1..=cone_c.hi()).map(|k| (k, phi.component(k).matrix().clone())).collect()) {
        Ok(m) if m.is_degreewise_iso() => Ok(()),
        Ok(_) => Err("not an isomorphism in some degree".to_string()),
        Err(e) => Err(e.to_string()),
    };
    report.check(Check::new(
        "cone_isomorphism",
        iso.is_ok(),
        iso.err().unwrap_or_else(|| "K^∨(A;𝒂^j)[1] ≅ cone(f_𝒂), signs (−1)^{p+1} in degree p ≥ 0".into()),
    ));

    // C_j → cone(f) → K^∨[1]; φ is a signed permutation, so its inverse is its transpose.
    let unit = unit_complex(seq);
    let into_cone = ComplexMap::from_parts(
        x,
        &cone_c,
        x.degrees()
            .map(|k| {
                let mut m = Matrix::zeros(cone_c.rank(k), x.rank(k));
                let off = cone_c.rank(k) - x.rank(k);
                m.set_block(off, 0, &Matrix::identity(seq.ring(), x.rank(k)));
                (k, m)
            })
            .collect(),
    );
    let phi_inv = ComplexMap::from_parts(&cone_c, &shifted, phi_inverse(&phi, &cone_c));
    let delta = phi_inv.compose(&into_cone);
    let aug = ComplexMap::from_parts(&k_dual, &unit, vec![(0, Matrix::identity(seq.ring(), 1))]);
    let bad = triangle_defects(&k_dual, &unit, x, &aug, &f, &delta);
    let detail = match bad.first() {
        None => "long exact cohomology sequence is exact".to_string(),
        Some((k, spot)) => format!("not exact at H^{k}({spot})"),
    };
    report.check(Check::new("triangle_exact", bad.is_empty(), detail));
    Ok(report.finish())
}

fn phi_inverse(phi: &ComplexMap, cone_c: &Complex) -> Vec<(i32, Matrix)> {
    cone_c.degrees().map(|k| (k, phi.component(k).matrix().transpose())).collect()
}
