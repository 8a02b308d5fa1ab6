//! Cohomology modules, induced maps and quasi-isomorphism verdicts.

use algebra_core::syzygy::ModuleGb;
use algebra_core::{FpModule, MapDefect, Matrix, ModuleMap, Poly};

use crate::complex::Complex;
use crate::map::ComplexMap;

/// H^k(X) = ker d^k / im d^{k−1}, pruned. Generator `g` of `module` is
/// represented by the cycle `representatives().col(g)` of X^k.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: i32,
    module: FpModule,
    cycles: Matrix,
    to_pruned: Matrix,
    from_pruned: Matrix,
    // tracked basis of [cycles | boundaries | relations of X^k]
    lifter: ModuleGb,
}

impl Cohomology {
    pub fn new(x: &Complex, k: i32) -> Self {
        let ring = x.ring().clone();
        let ck = x.component(k);
        let (_, inc) = x.differential(k).kernel();
        let z = inc.matrix().clone();
        let b = x.differential(k - 1).matrix().clone();
        let aug = z.hcat(&b).hcat(ck.relations());
        let lifter = ModuleGb::from_matrix(&ring, &aug, true);
        let nz = z.ncols();
        let mut rels: Vec<Vec<Poly>> = Vec::new();
        for s in lifter.syzygies(&ring) {
            let c = s[..nz].to_vec();
            if c.iter().any(|p| !p.is_zero()) && !rels.contains(&c) {
                rels.push(c);
            }
        }
        let degrees = inc.source().degrees().map(|d| d.to_vec());
        let raw = FpModule::from_parts(&ring, Matrix::from_cols(nz, &rels), degrees);
        let (module, fwd, bwd) = raw.prune();
        Self {
            degree: k,
            module,
            cycles: z,
            to_pruned: fwd.matrix().clone(),
            from_pruned: bwd.matrix().clone(),
            lifter,
        }
    }

    pub fn module(&self) -> &FpModule {
        &self.module
    }

    /// Cycles in X^k representing the generators of `module`.
    pub fn representatives(&self) -> Matrix {
        let ring = self.module.ring();
        self.cycles.mul(ring, &self.from_pruned)
    }

    /// Class of a cycle of X^k in generator coordinates of `module`;
    /// `None` if `v` is not a cycle.
    pub fn class_of(&self, v: &[Poly]) -> Option<Vec<Poly>> {
        let ring = self.module.ring();
        let c = self.lifter.lift(ring, v)?;
        let nz = self.cycles.ncols();
        Some(self.to_pruned.mul_vec(ring, &c[..nz]))
    }
}

pub fn cohomology(x: &Complex, k: i32) -> FpModule {
    Cohomology::new(x, k).module
}

/// H^k(φ) between the given cohomology presentations.
pub fn induced_map_between(phi: &ComplexMap, hx: &Cohomology, hy: &Cohomology) -> ModuleMap {
    let ring = hx.module.ring().clone();
    let reps = hx.representatives();
    let f = phi.component(hx.degree);
    let cols: Vec<Vec<Poly>> = (0..reps.ncols())
        .map(|g| {
            let img = f.matrix().mul_vec(&ring, &reps.col(g));
            hy.class_of(&img).expect("chain maps send cycles to cycles")
        })
        .collect();
    let m = Matrix::from_cols(hy.module.ngens(), &cols);
    ModuleMap::new(&hx.module, &hy.module, m).expect("induced map is well defined")
}

pub fn induced_map(phi: &ComplexMap, k: i32) -> ModuleMap {
    let hx = Cohomology::new(phi.source(), k);
    let hy = Cohomology::new(phi.target(), k);
    induced_map_between(phi, &hx, &hy)
}

/// Per-degree outcome of a quasi-isomorphism test.
#[derive(Clone, Debug)]
pub struct QuasiIsoReport {
    pub degrees: Vec<(i32, Option<MapDefect>)>,
}

impl QuasiIsoReport {
    pub fn holds(&self) -> bool {
        self.degrees.iter().all(|(_, d)| d.is_none())
    }

    pub fn failing_degrees(&self) -> Vec<i32> {
        self.degrees
            .iter()
            .filter(|(_, d)| d.is_some())
            .map(|(k, _)| *k)
            .collect()
    }
}

pub fn is_quasi_iso(phi: &ComplexMap) -> QuasiIsoReport {
    let (x, y) = (phi.source(), phi.target());
    let lo = x.lo().min(y.lo());
    let hi = x.hi().max(y.hi());
    let degrees = (lo..=hi)
        .map(|k| (k, induced_map(phi, k).iso_defect()))
        .collect();
    QuasiIsoReport { degrees }
}

/// First degree with nonzero cohomology, with a nonzero generator index.
pub fn acyclicity_witness(x: &Complex) -> Option<(i32, usize)> {
    x.degrees().find_map(|k| {
        let h = cohomology(x, k);
        h.zero_witness().map(|g| (k, g))
    })
}

pub fn is_acyclic(x: &Complex) -> bool {
    acyclicity_witness(x).is_none()
}

/// Degrees in which H^k(X) ≠ 0.
pub fn cohomological_support(x: &Complex) -> Vec<i32> {
    x.degrees().filter(|&k| !cohomology(x, k).is_zero()).collect()
}

/// Canonical comparison H^k(X) ⊗ A^r → H^k(X ⊗ A^r) for the exact functor
/// − ⊗ A^r, with A^r placed in degree 0.
pub fn tensor_free_comparison(x: &Complex, r: usize, k: i32) -> Result<ModuleMap, crate::ComplexError> {
    let ring = x.ring().clone();
    let free = FpModule::free(&ring, r);
    let fx = crate::ops::tensor(x, &Complex::concentrated(&free, 0))?;
    let hx = Cohomology::new(x, k);
    let hfx = Cohomology::new(&fx, k);
    let src = hx.module.tensor(&free);
    let reps = hx.representatives();
    let n = x.rank(k);
    let mut cols = Vec::new();
    for g in 0..reps.ncols() {
        for s in 0..r {
            let mut v = vec![Poly::zero(); n * r];
            for a in 0..n {
                v[a * r + s] = reps.get(a, g).clone();
            }
            cols.push(hfx.class_of(&v).expect("tensor of a cycle is a cycle"));
        }
    }
    let m = Matrix::from_cols(hfx.module.ngens(), &cols);
    Ok(ModuleMap::new(&src, &hfx.module, m)?)
}
