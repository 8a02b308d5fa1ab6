//! Free resolutions of modules and bounded complexes.

use algebra_core::module::column_degree;
use algebra_core::syzygy::irredundant_columns;
use algebra_core::{syzygy_matrix, FpModule, Matrix, ModuleMap, Poly, RingRef};

use crate::complex::Complex;
use crate::error::ComplexError;
use crate::map::ComplexMap;
use crate::ops::cone;

#[derive(Clone, Debug)]
pub struct Resolution {
    /// Bounded complex of finite-rank free modules.
    pub complex: Complex,
    /// Comparison map P → M.
    pub augmentation: ComplexMap,
    /// The construction stopped because nothing was left to kill.
    pub terminated: bool,
    /// H^k(augmentation) is an isomorphism for every k ≥ floor; when
    /// `terminated` it is a quasi-isomorphism outright.
    pub floor: i32,
}

impl Resolution {
    pub fn length(&self) -> usize {
        (self.complex.hi() - self.complex.lo()).max(0) as usize
    }

    /// `None` when P is a genuine resolution, otherwise the lowest degree in
    /// which cohomology of P is guaranteed to agree with M.
    pub fn validity_floor(&self) -> Option<i32> {
        (!self.terminated).then_some(self.floor)
    }
}

fn free_with(ring: &RingRef, n: usize, degrees: Option<Vec<i64>>) -> FpModule {
    match degrees {
        Some(d) => FpModule::free_graded(ring, d),
        None => FpModule::free(ring, n),
    }
}

fn column_degrees(m: &FpModule, mat: &Matrix, degrees: Option<&[i64]>) -> Option<Vec<i64>> {
    degrees.map(|d| {
        (0..mat.ncols())
            .map(|c| column_degree(m.ring(), &mat.col(c), d).expect("homogeneous column"))
            .collect()
    })
}

fn trimmed(m: &FpModule, mat: &Matrix) -> Matrix {
    let keep = irredundant_columns(m.ring(), mat.nrows(), &mat.cols(), &[]);
    mat.select_cols(&keep)
}

/// Free resolution of a module in degrees −L..0 by iterated syzygies,
/// stopping early when the syzygies vanish.
pub fn free_resolution(m: &FpModule, length: usize) -> Result<Resolution, ComplexError> {
    let ring = m.ring().clone();
    let (pruned, _, back) = m.prune();
    let mut comps = vec![free_with(&ring, pruned.ngens(), pruned.degrees().map(|d| d.to_vec()))];
    let mut mats: Vec<Matrix> = Vec::new();
    let mut cur = trimmed(&pruned, pruned.relations());
    for step in 0..length {
        if cur.ncols() == 0 {
            break;
        }
        let degs = column_degrees(m, &cur, comps.last().unwrap().degrees());
        comps.push(free_with(&ring, cur.ncols(), degs));
        mats.push(cur.clone());
        cur = if step + 1 < length {
            trimmed(&pruned, &syzygy_matrix(&ring, &cur))
        } else {
            syzygy_matrix(&ring, &cur)
        };
    }
    let terminated = cur.ncols() == 0;
    let len = comps.len() - 1;
    comps.reverse();
    mats.reverse();
    let diffs: Vec<ModuleMap> = mats
        .into_iter()
        .enumerate()
        .map(|(i, mat)| ModuleMap::from_parts(&comps[i], &comps[i + 1], mat))
        .collect();
    let complex = Complex::from_parts(&ring, -(len as i32), comps, diffs)?;
    let target = Complex::concentrated(m, 0);
    let augmentation = ComplexMap::from_parts(&complex, &target, vec![(0, back.matrix().clone())]);
    Ok(Resolution {
        complex,
        augmentation,
        terminated,
        floor: -(length as i32) + 1,
    })
}

pub fn is_free_complex(x: &Complex) -> bool {
    x.degrees().all(|k| x.component(k).is_free())
}

/// Free replacement of a bounded complex, built from the top degree down
/// by killing the cycles of the mapping cone; `extra` counts the degrees
/// constructed below the lowest component of `x`.
pub fn resolve_complex(x: &Complex, extra: usize) -> Result<Resolution, ComplexError> {
    let ring = x.ring().clone();
    if is_free_complex(x) {
        return Ok(Resolution {
            complex: x.clone(),
            augmentation: ComplexMap::identity(x),
            terminated: true,
            floor: x.lo(),
        });
    }
    let hi = x.hi();
    let bottom = x.lo() - extra as i32;
    // descending degrees; comps_desc[i] in degree hi − i
    let mut comps_desc: Vec<FpModule> = Vec::new();
    let mut diffs_desc: Vec<Matrix> = Vec::new(); // from degree hi−i−1 to hi−i
    let mut phis: Vec<(i32, Matrix)> = Vec::new();
    let mut terminated = false;
    let mut k = hi;
    while k >= bottom {
        // partial P in degrees k+1..hi
        let p = assemble(&ring, k + 1, &comps_desc, &diffs_desc)?;
        let phi = ComplexMap::from_parts(&p, x, phis.clone());
        let c = cone(&phi)?;
        let ck = c.component(k);
        let dk = c.differential(k);
        let (_, inc) = dk.kernel();
        let pk1 = p.rank(k + 1);
        let mut extra_cols: Vec<Vec<Poly>> = ck.relations().cols();
        let bd = x.differential(k - 1).matrix().clone();
        for col in bd.cols() {
            let mut v = vec![Poly::zero(); pk1];
            v.extend(col);
            extra_cols.push(v);
        }
        let cycles = inc.matrix().cols();
        let keep = irredundant_columns(&ring, ck.ngens(), &cycles, &extra_cols);
        let chosen: Vec<Vec<Poly>> = keep.iter().map(|&i| cycles[i].clone()).collect();
        if chosen.is_empty() && k < x.lo() {
            terminated = true;
            break;
        }
        let n = chosen.len();
        let degs = ck.degrees().map(|d| {
            chosen
                .iter()
                .map(|col| column_degree(&ring, col, d).expect("homogeneous cycle"))
                .collect::<Vec<i64>>()
        });
        let new = free_with(&ring, n, degs);
        let mut dmat = Matrix::zeros(pk1, n);
        let mut fmat = Matrix::zeros(x.rank(k), n);
        for (j, col) in chosen.iter().enumerate() {
            for r in 0..pk1 {
                dmat.set(r, j, ring.neg(&col[r]));
            }
            for r in 0..x.rank(k) {
                fmat.set(r, j, col[pk1 + r].clone());
            }
        }
        if !comps_desc.is_empty() {
            diffs_desc.push(dmat);
        }
        comps_desc.push(new);
        phis.push((k, fmat));
        k -= 1;
    }
    let lo = hi - comps_desc.len() as i32 + 1;
    let p = assemble(&ring, lo, &comps_desc, &diffs_desc)?;
    let augmentation = ComplexMap::from_parts(&p, x, phis);
    Ok(Resolution {
        complex: p,
        augmentation,
        terminated,
        floor: bottom + 1,
    })
}

fn assemble(
    ring: &RingRef,
    lo: i32,
    comps_desc: &[FpModule],
    diffs_desc: &[Matrix],
) -> Result<Complex, ComplexError> {
    if comps_desc.is_empty() {
        return Ok(Complex::zero(ring));
    }
    let comps: Vec<FpModule> = comps_desc.iter().rev().cloned().collect();
    let diffs: Vec<ModuleMap> = diffs_desc
        .iter()
        .rev()
        .enumerate()
        .map(|(i, m)| ModuleMap::from_parts(&comps[i], &comps[i + 1], m.clone()))
        .collect();
    Complex::from_parts(ring, lo, comps, diffs)
}
