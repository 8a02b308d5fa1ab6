//! Tensor products, Hom out of free complexes and mapping cones.
//!
//! Sign conventions: d(x⊗y) = dx⊗y + (−1)^i x⊗dy for x of degree i;
//! d(f) = d_N∘f − (−1)^k f∘d_P on Hom^k; cone(φ)^k = X^{k+1} ⊕ Y^k with
//! differential (−d_X, 0; φ, d_Y). Tensor bases are ordered by the first
//! factor's degree, then lexicographically in (first index, second index).

use algebra_core::{FpModule, Matrix, ModuleMap};

use crate::complex::Complex;
use crate::error::ComplexError;
use crate::map::ComplexMap;

/// One summand of a total-complex component: bidegree and generator offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub i: i32,
    pub j: i32,
    pub offset: usize,
    pub size: usize,
}

/// Summands X^i ⊗ Y^{k−i} of (X⊗Y)^k in order of increasing i.
pub fn tensor_blocks(x: &Complex, y: &Complex, k: i32) -> Vec<Block> {
    let mut out = Vec::new();
    let mut off = 0;
    for i in x.degrees() {
        let j = k - i;
        if j < y.lo() || j > y.hi() {
            continue;
        }
        let size = x.rank(i) * y.rank(j);
        out.push(Block { i, j, offset: off, size });
        off += size;
    }
    out
}

pub fn tensor(x: &Complex, y: &Complex) -> Result<Complex, ComplexError> {
    let ring = x.ring().clone();
    if x.hi() < x.lo() || y.hi() < y.lo() {
        return Ok(Complex::zero(&ring));
    }
    for i in x.degrees() {
        for j in y.degrees() {
            let (a, b) = (x.component(i), y.component(j));
            if !a.is_free() && !b.is_free() && a.ngens() > 0 && b.ngens() > 0 {
                return Err(ComplexError::NonFreeTensor(i, j));
            }
        }
    }
    let lo = x.lo() + y.lo();
    let hi = x.hi() + y.hi();
    let mut comps = Vec::new();
    for k in lo..=hi {
        let parts: Vec<FpModule> = tensor_blocks(x, y, k)
            .iter()
            .map(|b| x.component(b.i).tensor(&y.component(b.j)))
            .collect();
        comps.push(sum_or_zero(&ring, &parts));
    }
    let mut diffs = Vec::new();
    for k in lo..hi {
        let src = tensor_blocks(x, y, k);
        let tgt = tensor_blocks(x, y, k + 1);
        let nr: usize = tgt.iter().map(|b| b.size).sum();
        let nc: usize = src.iter().map(|b| b.size).sum();
        let mut m = Matrix::zeros(nr, nc);
        for s in &src {
            let idx = |i: i32, j: i32| tgt.iter().find(|b| b.i == i && b.j == j);
            if let Some(t) = idx(s.i + 1, s.j) {
                let idy = Matrix::identity(&ring, y.rank(s.j));
                let blk = x.differential(s.i).matrix().kron(&ring, &idy);
                m.set_block(t.offset, s.offset, &blk);
            }
            if let Some(t) = idx(s.i, s.j + 1) {
                let idx_ = Matrix::identity(&ring, x.rank(s.i));
                let mut blk = idx_.kron(&ring, y.differential(s.j).matrix());
                if s.i.rem_euclid(2) == 1 {
                    blk = blk.neg(&ring);
                }
                m.set_block(t.offset, s.offset, &blk);
            }
        }
        let (a, b) = ((k - lo) as usize, (k - lo + 1) as usize);
        diffs.push(ModuleMap::from_parts(&comps[a], &comps[b], m));
    }
    Complex::from_parts(&ring, lo, comps, diffs)
}

fn sum_or_zero(ring: &algebra_core::RingRef, parts: &[FpModule]) -> FpModule {
    if parts.is_empty() {
        FpModule::zero(ring)
    } else {
        let refs: Vec<&FpModule> = parts.iter().collect();
        FpModule::direct_sum(&refs)
    }
}

/// f ⊗ g between total complexes built by [`tensor`].
pub fn tensor_maps(f: &ComplexMap, g: &ComplexMap, source: &Complex, target: &Complex) -> ComplexMap {
    let ring = source.ring().clone();
    let (x, y) = (f.source(), g.source());
    let (x2, y2) = (f.target(), g.target());
    let mut mats = Vec::new();
    for k in source.degrees() {
        let src = tensor_blocks(x, y, k);
        let tgt = tensor_blocks(x2, y2, k);
        let mut m = Matrix::zeros(target.rank(k), source.rank(k));
        for s in &src {
            if let Some(t) = tgt.iter().find(|b| b.i == s.i && b.j == s.j) {
                let blk = f
                    .component(s.i)
                    .matrix()
                    .kron(&ring, g.component(s.j).matrix());
                m.set_block(t.offset, s.offset, &blk);
            }
        }
        mats.push((k, m));
    }
    ComplexMap::from_parts(source, target, mats)
}

/// Summands Hom(P^i, N^{i+k}) of Hom(P, N)^k, increasing i.
pub fn hom_blocks(p: &Complex, n: &Complex, k: i32) -> Vec<Block> {
    let mut out = Vec::new();
    let mut off = 0;
    for i in p.degrees() {
        let j = i + k;
        if j < n.lo() || j > n.hi() {
            continue;
        }
        let size = p.rank(i) * n.rank(j);
        out.push(Block { i, j, offset: off, size });
        off += size;
    }
    out
}

/// Hom(P, N) for P bounded with free finite-rank components, realized as
/// P^∨ ⊗ N: the generator e_a^∨ ⊗ n_b (index a·rank N + b) is the map
/// sending e_a to n_b.
pub fn hom_from_free(p: &Complex, n: &Complex) -> Result<Complex, ComplexError> {
    let ring = p.ring().clone();
    for i in p.degrees() {
        if !p.component(i).is_free() {
            return Err(ComplexError::NotFree(i));
        }
    }
    if p.hi() < p.lo() || n.hi() < n.lo() {
        return Ok(Complex::zero(&ring));
    }
    let lo = n.lo() - p.hi();
    let hi = n.hi() - p.lo();
    let mut comps = Vec::new();
    for k in lo..=hi {
        let parts: Vec<FpModule> = hom_blocks(p, n, k)
            .iter()
            .map(|b| dual_free(&p.component(b.i)).tensor(&n.component(b.j)))
            .collect();
        comps.push(sum_or_zero(&ring, &parts));
    }
    let mut diffs = Vec::new();
    for k in lo..hi {
        let src = hom_blocks(p, n, k);
        let tgt = hom_blocks(p, n, k + 1);
        let nr: usize = tgt.iter().map(|b| b.size).sum();
        let nc: usize = src.iter().map(|b| b.size).sum();
        let mut m = Matrix::zeros(nr, nc);
        for s in &src {
            // d_N ∘ f stays in block i
            if let Some(t) = tgt.iter().find(|b| b.i == s.i) {
                let blk = Matrix::identity(&ring, p.rank(s.i)).kron(&ring, n.differential(s.j).matrix());
                m.set_block(t.offset, s.offset, &blk);
            }
            // −(−1)^k f ∘ d_P lands in block i−1
            if let Some(t) = tgt.iter().find(|b| b.i == s.i - 1) {
                let dp_t = p.differential(s.i - 1).matrix().transpose();
                let mut blk = dp_t.kron(&ring, &Matrix::identity(&ring, n.rank(s.j)));
                if k.rem_euclid(2) == 0 {
                    blk = blk.neg(&ring);
                }
                m.set_block(t.offset, s.offset, &blk);
            }
        }
        let (a, b) = ((k - lo) as usize, (k - lo + 1) as usize);
        diffs.push(ModuleMap::from_parts(&comps[a], &comps[b], m));
    }
    Complex::from_parts(&ring, lo, comps, diffs)
}

/// Dual of a free module; generator degrees are negated.
pub fn dual_free(m: &FpModule) -> FpModule {
    match m.degrees() {
        Some(d) => FpModule::free_graded(m.ring(), d.iter().map(|x| -x).collect()),
        None => FpModule::free(m.ring(), m.ngens()),
    }
}

/// Hom(u, N): Hom(P, N) → Hom(P', N) for a chain map u : P' → P of free complexes.
pub fn hom_map_source(u: &ComplexMap, n: &Complex, source: &Complex, target: &Complex) -> ComplexMap {
    let ring = source.ring().clone();
    let (p2, p) = (u.source(), u.target());
    let mut mats = Vec::new();
    for k in source.degrees() {
        let src = hom_blocks(p, n, k);
        let tgt = hom_blocks(p2, n, k);
        let mut m = Matrix::zeros(target.rank(k), source.rank(k));
        for s in &src {
            if let Some(t) = tgt.iter().find(|b| b.i == s.i) {
                let ut = u.component(s.i).matrix().transpose();
                let blk = ut.kron(&ring, &Matrix::identity(&ring, n.rank(s.j)));
                m.set_block(t.offset, s.offset, &blk);
            }
        }
        mats.push((k, m));
    }
    ComplexMap::from_parts(source, target, mats)
}

/// Hom(P, g): Hom(P, N) → Hom(P, N') for a chain map g : N → N'.
pub fn hom_map_target(p: &Complex, g: &ComplexMap, source: &Complex, target: &Complex) -> ComplexMap {
    let ring = source.ring().clone();
    let (n, n2) = (g.source(), g.target());
    let mut mats = Vec::new();
    for k in source.degrees() {
        let src = hom_blocks(p, n, k);
        let tgt = hom_blocks(p, n2, k);
        let mut m = Matrix::zeros(target.rank(k), source.rank(k));
        for s in &src {
            if let Some(t) = tgt.iter().find(|b| b.i == s.i) {
                let blk = Matrix::identity(&ring, p.rank(s.i)).kron(&ring, g.component(s.j).matrix());
                m.set_block(t.offset, s.offset, &blk);
            }
        }
        mats.push((k, m));
    }
    ComplexMap::from_parts(source, target, mats)
}

/// Mapping cone of φ : X → Y.
pub fn cone(phi: &ComplexMap) -> Result<Complex, ComplexError> {
    let (x, y) = (phi.source(), phi.target());
    let ring = x.ring().clone();
    let lo = (x.lo() - 1).min(y.lo());
    let hi = (x.hi() - 1).max(y.hi());
    if hi < lo {
        return Ok(Complex::zero(&ring));
    }
    let comps: Vec<FpModule> = (lo..=hi)
        .map(|k| FpModule::direct_sum(&[&x.component(k + 1), &y.component(k)]))
        .collect();
    let mut diffs = Vec::new();
    for k in lo..hi {
        let (a1, b1) = (x.rank(k + 1), y.rank(k));
        let (a2, b2) = (x.rank(k + 2), y.rank(k + 1));
        let mut m = Matrix::zeros(a2 + b2, a1 + b1);
        m.set_block(0, 0, &x.differential(k + 1).matrix().neg(&ring));
        m.set_block(a2, 0, phi.component(k + 1).matrix());
        m.set_block(a2, a1, y.differential(k).matrix());
        let (s, t) = ((k - lo) as usize, (k - lo + 1) as usize);
        diffs.push(ModuleMap::from_parts(&comps[s], &comps[t], m));
    }
    Complex::from_parts(&ring, lo, comps, diffs)
}

/// Direct sum of complexes, componentwise.
pub fn direct_sum(parts: &[&Complex]) -> Complex {
    let ring = parts[0].ring().clone();
    let lo = parts.iter().map(|c| c.lo()).min().unwrap();
    let hi = parts.iter().map(|c| c.hi()).max().unwrap();
    if hi < lo {
        return Complex::zero(&ring);
    }
    let comps: Vec<FpModule> = (lo..=hi)
        .map(|k| {
            let cs: Vec<FpModule> = parts.iter().map(|c| c.component(k)).collect();
            FpModule::direct_sum(&cs.iter().collect::<Vec<_>>())
        })
        .collect();
    let diffs = (lo..hi)
        .map(|k| {
            let ms: Vec<Matrix> = parts.iter().map(|c| c.differential(k).matrix().clone()).collect();
            let m = Matrix::block_diag(&ms.iter().collect::<Vec<_>>());
            let (s, t) = ((k - lo) as usize, (k - lo + 1) as usize);
            ModuleMap::from_parts(&comps[s], &comps[t], m)
        })
        .collect();
    Complex::from_parts(&ring, lo, comps, diffs).expect("direct sum shapes")
}
