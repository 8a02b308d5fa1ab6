//! Per-degree comparison of a system of complexes with a fixed complex at
//! stable levels, plus small helpers shared by the verifiers.

use std::collections::BTreeMap;

use algebra_core::ideal::torsion_submodule;
use algebra_core::{ElementSequence, FpModule, Poly};
use complex::system::ComplexSystem;
use complex::{Complex, ComplexMap};

use crate::error::DerivedError;
use crate::window::{slice_map_bijective, ComplexSlices, GradedWindowTable, TableEntry};

/// Annihilator chains are followed this far before giving up.
pub const TORSION_CAP: usize = 32;

/// Largest inner level the adaptive comparisons will build.
pub const INNER_CAP_LIMIT: usize = 48;

#[derive(Clone, Debug)]
pub struct FixedComparison {
    pub table: GradedWindowTable,
    pub fixed: ComplexSlices,
    /// (k, d) entries where the map at the stable level is not bijective.
    pub failures: Vec<(i32, i64)>,
    pub checked: usize,
    pub inner_cap: usize,
}

impl FixedComparison {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn detail(&self) -> String {
        match self.failures.first() {
            None => format!("{} entries bijective at stable levels (inner cap {})", self.checked, self.inner_cap),
            Some((k, d)) => format!("not bijective at k={k}, d={d}"),
        }
    }
}

/// `sys` has one guard level past `cap`; `maps(j)` is the level-j map into
/// `fixed` when `into` is set and out of it otherwise. Degrees below
/// `floor` are skipped.
pub fn compare_with_fixed<F>(
    sys: &ComplexSystem,
    cap: usize,
    fixed: &Complex,
    maps: F,
    into: bool,
    window: (i64, i64),
    floor: Option<i32>,
) -> Result<FixedComparison, DerivedError>
where
    F: Fn(usize) -> ComplexMap,
{
    let mut table = GradedWindowTable::new(sys, window, cap)?;
    if let Some(f) = floor {
        table.retain_degrees(f);
    }
    table.require_stable()?;
    let fixed_slices = ComplexSlices::new(fixed, window)?;
    let lo = table.degrees.0.min(fixed.lo());
    let hi = table.degrees.1.max(fixed.hi());
    let mut cache: BTreeMap<usize, ComplexMap> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut checked = 0;
    for k in lo..=hi {
        if floor.is_some_and(|f| k < f) {
            continue;
        }
        for d in window.0..=window.1 {
            checked += 1;
            let ok = match table.stable_level(k, d) {
                Some(s) => {
                    let phi = cache.entry(s).or_insert_with(|| maps(s));
                    let ls = table.slices(s).slice(d);
                    let fs = fixed_slices.slice(d);
                    if into {
                        slice_map_bijective(phi, k, ls, fs)
                    } else {
                        slice_map_bijective(phi, k, fs, ls)
                    }
                }
                None => fixed_slices.dim(k, d) == 0,
            };
            if !ok {
                failures.push((k, d));
            }
        }
    }
    Ok(FixedComparison {
        table,
        fixed: fixed_slices,
        failures,
        checked,
        inner_cap: cap,
    })
}

/// As [`compare_with_fixed`], rebuilding the system with twice as many
/// inner levels whenever some entry has not stabilized, up to
/// [`INNER_CAP_LIMIT`]. `build(c)` must return levels 1..=c+1.
#[allow(clippy::too_many_arguments)]
pub fn compare_adaptive<B, F>(
    start: usize,
    build: B,
    fixed: &Complex,
    maps: F,
    into: bool,
    window: (i64, i64),
    floor: Option<i32>,
) -> Result<FixedComparison, DerivedError>
where
    B: Fn(usize) -> Result<ComplexSystem, DerivedError>,
    F: Fn(&ComplexSystem, usize) -> ComplexMap,
{
    let mut cap = start.max(2);
    loop {
        let sys = build(cap)?;
        match compare_with_fixed(&sys, cap, fixed, |j| maps(&sys, j), into, window, floor) {
            Err(DerivedError::WindowInsufficient { .. }) if cap < INNER_CAP_LIMIT => {
                cap = (2 * cap).min(INNER_CAP_LIMIT);
            }
            r => return r,
        }
    }
}

/// Table rows of a single complex, one level.
pub fn fixed_rows(s: &ComplexSlices) -> Vec<TableEntry> {
    s.dims()
        .into_iter()
        .map(|(k, d, n)| TableEntry {
            k,
            d,
            dims: vec![n],
            stable_level: Some(0),
            stable_dim: Some(n),
        })
        .collect()
}

/// A generator of M outside Γ_𝔞(M), or `None` when M is 𝔞-torsion.
pub fn torsion_witness(m: &FpModule, seq: &ElementSequence) -> Result<Option<usize>, DerivedError> {
    if m.is_zero() {
        return Ok(None);
    }
    let t = torsion_submodule(m, seq, TORSION_CAP)?;
    let (coker, proj) = t.inclusion.cokernel();
    Ok((0..m.ngens()).find(|&i| !coker.is_zero_element(&proj.apply(&m.unit_vector(i)))))
}

/// Whether two submodules of M (given by inclusion matrices) coincide.
pub fn same_submodule(m: &FpModule, a: &algebra_core::ModuleMap, b: &algebra_core::ModuleMap) -> bool {
    let inside = |x: &algebra_core::ModuleMap, y: &algebra_core::ModuleMap| {
        let (coker, proj) = y.cokernel();
        x.matrix()
            .cols()
            .iter()
            .all(|c| coker.is_zero_element(&proj.apply(c)))
    };
    debug_assert!(a.target().ngens() == m.ngens());
    inside(a, b) && inside(b, a)
}

/// Coordinates spanning the kernel of a chain map whose columns are either
/// zero or distinct unit vectors; `None` otherwise. The kernel is returned
/// as a subcomplex on the zero columns, with the kept coordinates.
pub fn coordinate_kernel(phi: &ComplexMap) -> Option<(Complex, BTreeMap<i32, Vec<usize>>)> {
    let x = phi.source();
    let ring = x.ring();
    let mut keep: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for k in x.degrees() {
        let m = phi.component(k).matrix().clone();
        let mut zero = Vec::new();
        let mut rows_hit = Vec::new();
        for c in 0..m.ncols() {
            let col = m.col(c);
            let nz: Vec<usize> = (0..col.len()).filter(|&r| !col[r].is_zero()).collect();
            match nz.as_slice() {
                [] => zero.push(c),
                [r] if col[*r] == ring.one() && !rows_hit.contains(r) => rows_hit.push(*r),
                _ => return None,
            }
        }
        keep.insert(k, zero);
    }
    let comps: Vec<FpModule> = x
        .degrees()
        .map(|k| select_generators(&x.component(k), &keep[&k]))
        .collect();
    let mats = x
        .degrees()
        .take(comps.len().saturating_sub(1))
        .map(|k| {
            let d = x.differential(k).matrix().clone();
            // the subspace must be preserved: rows outside the kernel vanish
            let outside: Vec<usize> = (0..d.nrows()).filter(|r| !keep[&(k + 1)].contains(r)).collect();
            let sub = d.select_cols(&keep[&k]);
            if !sub.select_rows(&outside).is_zero() {
                return None;
            }
            Some(sub.select_rows(&keep[&(k + 1)]))
        })
        .collect::<Option<Vec<_>>>()?;
    let sub = Complex::from_matrices(ring, x.lo(), comps, mats).ok()?;
    Some((sub, keep))
}

fn select_generators(m: &FpModule, idx: &[usize]) -> FpModule {
    debug_assert!(m.is_free());
    match m.degrees() {
        Some(d) => FpModule::free_graded(m.ring(), idx.iter().map(|&i| d[i]).collect()),
        None => FpModule::free(m.ring(), idx.len()),
    }
}

/// Restriction of a chain map between coordinate-kernel subcomplexes.
pub fn restrict_map(phi: &ComplexMap, src_keep: &BTreeMap<i32, Vec<usize>>, tgt_keep: &BTreeMap<i32, Vec<usize>>, source: &Complex, target: &Complex) -> ComplexMap {
    let mats = source
        .degrees()
        .map(|k| {
            let m = phi.component(k).matrix().clone();
            let empty = Vec::new();
            let rows = tgt_keep.get(&k).unwrap_or(&empty);
            let cols = src_keep.get(&k).unwrap_or(&empty);
            (k, m.select_cols(cols).select_rows(rows))
        })
        .collect();
    ComplexMap::from_parts(source, target, mats)
}

/// Renders a ring element for witnesses.
pub fn render(seq: &ElementSequence, p: &Poly) -> String {
    seq.ring().render(p)
}
