//! GM duality in the graded regime, with Tel_j standing in for the
//! telescope T. Each of the four morphisms keeps one telescope index fixed
//! (the outer level o) and lets the other vary.

use algebra_core::ElementSequence;
use complex::cohomology::is_quasi_iso;
use complex::ops::{hom_from_free, hom_map_source, hom_map_target, tensor, tensor_maps};
use complex::system::Direction;
use complex::{resolve_complex, Complex, ComplexMap};
use koszul::dual_koszul_system;
use telescope::tel::unit_complex;
use telescope::{tel_inclusion, tel_on_module, telescope, u_map, w_map};

use crate::compare::{compare_with_fixed, INNER_CAP_LIMIT};
use crate::error::DerivedError;
use crate::llambda::default_resolution_length;
use crate::mgm::{build_system, require_graded};
use crate::report::{Check, Report};
use crate::window::GradedWindowTable;

struct Tels {
    seq: ElementSequence,
    levels: Vec<Complex>,
}

impl Tels {
    fn new(seq: &ElementSequence, cap: usize) -> Self {
        Self {
            seq: seq.clone(),
            levels: (1..=cap).map(|j| telescope(seq, j).complex).collect(),
        }
    }

    fn inc(&self, j: usize) -> ComplexMap {
        tel_inclusion(&self.seq, j, j + 1).expect("consecutive levels")
    }
}

/// A bounded free complex quasi-isomorphic to `x`; the resolution must
/// terminate, since truncation would change the Hom complexes.
fn free_model(x: &Complex, what: &str, report: &mut Report) -> Result<Complex, DerivedError> {
    if x.is_free() {
        return Ok(x.clone());
    }
    let len = default_resolution_length(x);
    let res = resolve_complex(x, len)?;
    if !res.terminated {
        return Err(DerivedError::ResolutionTruncated(what.into(), len));
    }
    report.certificate(format!("{what}.resolution"), format!("free ranks {:?}", res.complex.ranks()));
    Ok(res.complex)
}

/// Outer levels run to `cap`; inner levels start at `cap` and are doubled
/// (up to the adaptive limit) until every entry stabilizes. Inputs that are
/// not free are replaced by their free resolutions.
pub fn gm_duality_verify(m: &Complex, n: &Complex, seq: &ElementSequence, cap: usize, window: (i64, i64)) -> Result<Report, DerivedError> {
    if cap < 2 {
        return Err(DerivedError::CapTooSmall(2));
    }
    require_graded(m, seq)?;
    require_graded(n, seq)?;
    let mut models = Report::new("gm_duality_verify");
    let m = &free_model(m, "M", &mut models)?;
    let n = &free_model(n, "N", &mut models)?;
    let mut inner = cap;
    loop {
        match attempt(m, n, seq, cap, inner, window).map(|r| r.with_certificates(&models)) {
            Err(DerivedError::WindowInsufficient { .. }) if inner < INNER_CAP_LIMIT => {
                inner = (2 * inner).min(INNER_CAP_LIMIT);
            }
            r => return r,
        }
    }
}

fn attempt(m: &Complex, n: &Complex, seq: &ElementSequence, cap: usize, inner: usize, window: (i64, i64)) -> Result<Report, DerivedError> {
    let mut report = Report::new("gm_duality_verify");
    report.certificate("cap", cap);
    report.certificate("inner_cap", inner);
    report.certificate("window", format!("[{}, {}]", window.0, window.1));
    let tels = Tels::new(seq, inner + 1);
    let unit = unit_complex(seq);
    let id_m = ComplexMap::identity(m);
    let id_n = ComplexMap::identity(n);
    let tm: Vec<Complex> = tels.levels.iter().map(|t| tensor(t, m)).collect::<Result<_, _>>()?;
    let tn: Vec<Complex> = tels.levels.iter().map(|t| tensor(t, n)).collect::<Result<_, _>>()?;
    let hn: Vec<Complex> = tels.levels.iter().map(|t| hom_from_free(t, n)).collect::<Result<_, _>>()?;
    let hm: Vec<Complex> = tels.levels.iter().map(|t| hom_from_free(t, m)).collect::<Result<_, _>>()?;
    let um = tensor(&unit, m)?;
    let un = tensor(&unit, n)?;
    let hom_a_n = hom_from_free(&unit, n)?;
    let hom_a_m = hom_from_free(&unit, m)?;
    // u_j ⊗ 1 : Tel_j ⊗ X → X and Hom(u_j, 1) : X → Hom(Tel_j, X).
    let u_tensor = |j: usize, x: &Complex, tx: &Complex, ux: &Complex| {
        tensor_maps(&u_map(seq, j), &ComplexMap::identity(x), tx, ux).retarget(tx, x)
    };
    let hom_u = |j: usize, x: &Complex, hx: &Complex, hom_a: &Complex| {
        hom_map_source(&u_map(seq, j), x, hom_a, hx).retarget(x, hx)
    };
    let tel_inc_m = |j: usize| tensor_maps(&tels.inc(j), &id_m, &tm[j - 1], &tm[j]);
    let tel_inc_n = |j: usize| tensor_maps(&tels.inc(j), &id_n, &tn[j - 1], &tn[j]);
    let res_n = |j: usize| hom_map_source(&tels.inc(j), n, &hn[j], &hn[j - 1]);
    let res_m = |j: usize| hom_map_source(&tels.inc(j), m, &hm[j], &hm[j - 1]);

    let mut results: Vec<(&str, bool, String)> = Vec::new();
    let mut run = |name: &'static str, outer: usize, c: crate::compare::FixedComparison, report: &mut Report| {
        report.certificate(format!("{name}.outer{outer}"), c.detail());
        match results.iter_mut().find(|r| r.0 == name) {
            Some(r) => {
                if r.1 && !c.holds() {
                    r.1 = false;
                    r.2 = format!("outer level {outer}: {}", c.detail());
                }
            }
            None => results.push((name, c.holds(), if c.holds() { String::new() } else { format!("outer level {outer}: {}", c.detail()) })),
        }
    };

    for o in 1..=cap {
        let src = &tm[o - 1];
        // φ1: Hom(T_o ⊗ M, T_j ⊗ N) → Hom(T_o ⊗ M, N)
        let levels: Vec<Complex> = tn.iter().map(|x| hom_from_free(src, x)).collect::<Result<_, _>>()?;
        let sys = build_system(Direction::Direct, levels.clone(), |j, s, t| hom_map_target(src, &tel_inc_n(j), s, t))?;
        let fixed = hom_from_free(src, n)?;
        let c = compare_with_fixed(&sys, inner, &fixed, |j| hom_map_target(src, &u_tensor(j, n, &tn[j - 1], &un), &levels[j - 1], &fixed), true, window, None)?;
        run("phi1", o, c, &mut report);

        // φ2: Hom(T_o ⊗ M, N) → Hom(T_o ⊗ M, Hom(T_j, N))
        let levels: Vec<Complex> = hn.iter().map(|x| hom_from_free(src, x)).collect::<Result<_, _>>()?;
        let sys = build_system(Direction::Inverse, levels.clone(), |j, s, t| hom_map_target(src, &res_n(j), s, t))?;
        let c = compare_with_fixed(&sys, inner, &fixed, |j| hom_map_target(src, &hom_u(j, n, &hn[j - 1], &hom_a_n), &fixed, &levels[j - 1]), false, window, None)?;
        run("phi2", o, c, &mut report);

        let tgt = &hn[o - 1];
        // φ3: Hom(M, Hom(T_o, N)) → Hom(T_i ⊗ M, Hom(T_o, N))
        let levels: Vec<Complex> = tm.iter().map(|x| hom_from_free(x, tgt)).collect::<Result<_, _>>()?;
        let sys = build_system(Direction::Inverse, levels.clone(), |j, s, t| hom_map_source(&tel_inc_m(j), tgt, s, t))?;
        let fixed = hom_from_free(m, tgt)?;
        let fixed_u = hom_from_free(&um, tgt)?;
        let c = compare_with_fixed(
            &sys,
            inner,
            &fixed,
            |j| hom_map_source(&u_tensor(j, m, &tm[j - 1], &um), tgt, &fixed_u, &levels[j - 1]).retarget(&fixed, &levels[j - 1]),
            false,
            window,
            None,
        )?;
        run("phi3", o, c, &mut report);

        // φ4: Hom(Hom(T_i, M), Hom(T_o, N)) → Hom(M, Hom(T_o, N))
        let levels: Vec<Complex> = hm.iter().map(|x| hom_from_free(x, tgt)).collect::<Result<_, _>>()?;
        let sys = build_system(Direction::Direct, levels.clone(), |j, s, t| hom_map_source(&res_m(j), tgt, s, t))?;
        let fixed_a = hom_from_free(&hom_a_m, tgt)?;
        let c = compare_with_fixed(
            &sys,
            inner,
            &fixed,
            |j| hom_map_source(&hom_u(j, m, &hm[j - 1], &hom_a_m).retarget(&hom_a_m, &hm[j - 1]), tgt, &levels[j - 1], &fixed_a).retarget(&levels[j - 1], &fixed),
            true,
            window,
            None,
        )?;
        run("phi4", o, c, &mut report);
    }
    for (name, ok, detail) in results {
        let detail = if ok { format!("quasi-isomorphism for outer levels 1..={cap}") } else { detail };
        report.check(Check::new(name, ok, detail));
    }

    rho_lr(&mut report, n, seq, cap, inner, window)?;
    Ok(report.finish())
}

/// ρ^{LR}: Hom(w_j, 1) : Hom(K^∨_j, N) → Hom(Tel_j, N) is a quasi-isomorphism
/// at every level, and the Hom(K^∨_j, N) tower has the stable table of LΛ(N).
fn rho_lr(report: &mut Report, n: &Complex, seq: &ElementSequence, cap: usize, inner: usize, window: (i64, i64)) -> Result<(), DerivedError> {
    let dual = dual_koszul_system(seq, inner + 1)?;
    let tower = tel_on_module(seq, n, inner + 1)?;
    let levels: Vec<Complex> = (1..=inner + 1)
        .map(|j| hom_from_free(dual.level(j), n))
        .collect::<Result<_, _>>()?;
    let levelwise = (1..=cap).all(|j| {
        let phi = hom_map_source(&w_map(seq, j).retarget(&telescope(seq, j).complex, dual.level(j)), n, &levels[j - 1], tower.hom.level(j));
        is_quasi_iso(&phi).holds()
    });
    report.check(Check::new("rho_lr_levelwise", levelwise, format!("Hom(w_j, 1) quasi-isomorphism for j ≤ {cap}")));
    let sys = build_system(Direction::Inverse, levels, |j, s, t| hom_map_source(dual.system.transition(j), n, s, t))?;
    let kt = GradedWindowTable::new(&sys, window, inner)?;
    let lt = GradedWindowTable::new(&tower.hom, window, inner)?;
    kt.require_stable()?;
    lt.require_stable()?;
    let lo = kt.degrees.0.min(lt.degrees.0);
    let hi = kt.degrees.1.max(lt.degrees.1);
    let mismatch = (lo..=hi)
        .flat_map(|k| (window.0..=window.1).map(move |d| (k, d)))
        .find(|&(k, d)| kt.stable_dim(k, d) != lt.stable_dim(k, d));
    let detail = match mismatch {
        None => "stable tables agree".to_string(),
        Some((k, d)) => format!("k={k}, d={d}: {:?} vs {:?}", kt.stable_dim(k, d), lt.stable_dim(k, d)),
    };
    report.check(Check::new("rho_lr_tables", mismatch.is_none(), detail));
    report.table("Hom(K^∨, N)", kt.entries().to_vec());
    Ok(())
}
