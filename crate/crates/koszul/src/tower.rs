//! Koszul complexes K(A;𝒂^i) and the inverse system they form.

use algebra_core::{ElementSequence, FpModule, Matrix, ModuleMap, Poly, RingRef};
use complex::ops::{tensor, tensor_maps};
use complex::system::{cohomology_system, ComplexSystem, Direction, LevelSystem, ModuleSystem};
use complex::{Complex, ComplexError, ComplexMap};

/// Generator degrees of a sequence when the ring is graded and every
/// element is homogeneous.
pub fn graded_degrees(seq: &ElementSequence) -> Option<Vec<i64>> {
    if seq.ring().is_graded() {
        seq.degrees()
    } else {
        None
    }
}

fn free(ring: &RingRef, degree: Option<i64>) -> FpModule {
    match degree {
        Some(d) => FpModule::free_graded(ring, vec![d]),
        None => FpModule::free(ring, 1),
    }
}

/// A →a A in degrees lo, lo+1; the generator in degree lo has weight `w`.
fn two_term(ring: &RingRef, a: &Poly, lo: i32, w: Option<(i64, i64)>) -> Complex {
    let c0 = free(ring, w.map(|x| x.0));
    let c1 = free(ring, w.map(|x| x.1));
    let d = ModuleMap::from_parts(&c0, &c1, Matrix::from_rows(vec![vec![a.clone()]]));
    Complex::from_parts(ring, lo, vec![c0, c1], vec![d]).expect("two-term shape")
}

/// Folds a list of complexes (and matching maps) with the tensor product.
fn fold_tensor(parts: &[Complex]) -> Complex {
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = tensor(&acc, p).expect("factors are free");
    }
    acc
}

fn fold_tensor_maps(maps: &[ComplexMap], src_parts: &[Complex], tgt_parts: &[Complex]) -> ComplexMap {
    let mut acc = maps[0].clone();
    let mut s = src_parts[0].clone();
    let mut t = tgt_parts[0].clone();
    for i in 1..maps.len() {
        let s2 = tensor(&s, &src_parts[i]).expect("free");
        let t2 = tensor(&t, &tgt_parts[i]).expect("free");
        acc = tensor_maps(&acc, &maps[i], &s2, &t2);
        s = s2;
        t = t2;
    }
    acc
}

fn koszul_factors(seq: &ElementSequence) -> Vec<Complex> {
    let ring = seq.ring();
    let degs = graded_degrees(seq);
    seq.elements()
        .iter()
        .enumerate()
        .map(|(t, a)| two_term(ring, a, -1, degs.as_ref().map(|d| (d[t], 0))))
        .collect()
}

/// K(A;𝒂) = ⊗_t (A →a_t A) in degrees −n..0.
pub fn koszul_complex(seq: &ElementSequence) -> Complex {
    fold_tensor(&koszul_factors(seq))
}

/// p_{𝒂,j,i} : K(A;𝒂^j) → K(A;𝒂^i) for j ≥ i.
pub fn koszul_transition(seq: &ElementSequence, j: u32, i: u32) -> ComplexMap {
    let ring = seq.ring();
    let src = koszul_factors(&seq.power(j));
    let tgt = koszul_factors(&seq.power(i));
    let maps: Vec<ComplexMap> = seq
        .elements()
        .iter()
        .enumerate()
        .map(|(t, a)| {
            let m1 = Matrix::from_rows(vec![vec![ring.pow(a, j - i)]]);
            let m0 = Matrix::identity(ring, 1);
            ComplexMap::from_parts(&src[t], &tgt[t], vec![(-1, m1), (0, m0)])
        })
        .collect();
    fold_tensor_maps(&maps, &src, &tgt)
}

/// Inverse system {K(A;𝒂^i)}_{i=1..J}.
#[derive(Clone, Debug)]
pub struct KoszulTower {
    pub seq: ElementSequence,
    pub system: ComplexSystem,
}

impl KoszulTower {
    pub fn cap(&self) -> usize {
        self.system.last()
    }

    pub fn level(&self, i: usize) -> &Complex {
        self.system.level(i)
    }

    /// H^k applied levelwise.
    pub fn cohomology(&self, k: i32) -> ModuleSystem {
        cohomology_system(&self.system, k)
    }

    /// Comparison H⁰(K(A;𝒂^i)) → A/(𝒂^i) sending the class of a cycle in
    /// K⁰ = A to its residue.
    pub fn h0_comparison(&self, i: usize) -> ModuleMap {
        let h = complex::Cohomology::new(self.level(i), 0);
        let target = quotient_module(&self.seq.power(i as u32));
        let reps = h.representatives();
        ModuleMap::new(h.module(), &target, reps).expect("residue map is well defined")
    }
}

/// A/(𝒂) as a cyclic module, graded when the sequence is.
pub fn quotient_module(seq: &ElementSequence) -> FpModule {
    let ring = seq.ring();
    let rels = Matrix::from_rows(vec![seq.elements().to_vec()]);
    let degs = graded_degrees(seq).map(|_| vec![0]);
    FpModule::new(ring, rels, degs).expect("homogeneous elements")
}

pub fn koszul_tower(seq: &ElementSequence, cap: usize) -> Result<KoszulTower, ComplexError> {
    if cap == 0 {
        return Err(ComplexError::Shape("a tower needs at least one level".into()));
    }
    let levels: Vec<Complex> = (1..=cap).map(|i| koszul_complex(&seq.power(i as u32))).collect();
    let transitions = (1..cap)
        .map(|i| {
            koszul_transition(seq, i as u32 + 1, i as u32).retarget(&levels[i], &levels[i - 1])
        })
        .collect();
    let system = LevelSystem::new(Direction::Inverse, 1, levels, transitions)?;
    Ok(KoszulTower {
        seq: seq.clone(),
        system,
    })
}

/// Dual Koszul complex K^∨(A;𝒂) = ⊗_t (A →a_t A) in degrees 0..n.
pub fn dual_koszul_complex(seq: &ElementSequence) -> Complex {
    fold_tensor(&dual_factors(seq))
}

fn dual_factors(seq: &ElementSequence) -> Vec<Complex> {
    let ring = seq.ring();
    let degs = graded_degrees(seq);
    seq.elements()
        .iter()
        .enumerate()
        .map(|(t, a)| two_term(ring, a, 0, degs.as_ref().map(|d| (0, -d[t]))))
        .collect()
}

/// p^∨_{𝒂,j,i} : K^∨(A;𝒂^i) → K^∨(A;𝒂^j) for j ≥ i.
pub fn dual_transition(seq: &ElementSequence, i: u32, j: u32) -> ComplexMap {
    let ring = seq.ring();
    let src = dual_factors(&seq.power(i));
    let tgt = dual_factors(&seq.power(j));
    let maps: Vec<ComplexMap> = seq
        .elements()
        .iter()
        .enumerate()
        .map(|(t, a)| {
            let m0 = Matrix::identity(ring, 1);
            let m1 = Matrix::from_rows(vec![vec![ring.pow(a, j - i)]]);
            ComplexMap::from_parts(&src[t], &tgt[t], vec![(0, m0), (1, m1)])
        })
        .collect();
    fold_tensor_maps(&maps, &src, &tgt)
}

/// Direct system {K^∨(A;𝒂^i)}_{i=1..J} with augmentations K^∨(A;𝒂^i) → A.
#[derive(Clone, Debug)]
pub struct DualKoszulSystem {
    pub seq: ElementSequence,
    pub system: ComplexSystem,
}

impl DualKoszulSystem {
    pub fn cap(&self) -> usize {
        self.system.last()
    }

    pub fn level(&self, i: usize) -> &Complex {
        self.system.level(i)
    }

    /// The unit A (in degree 0) of the ring, graded when the sequence is.
    pub fn unit(&self) -> Complex {
        let ring = self.seq.ring();
        let deg = graded_degrees(&self.seq).map(|_| 0);
        Complex::concentrated(&free(ring, deg), 0)
    }

    /// e^∨_i : K^∨(A;𝒂^i) → A, the identity on degree 0.
    pub fn augmentation(&self, i: usize) -> ComplexMap {
        let ring = self.seq.ring();
        ComplexMap::from_parts(self.level(i), &self.unit(), vec![(0, Matrix::identity(ring, 1))])
    }
}

pub fn dual_koszul_system(seq: &ElementSequence, cap: usize) -> Result<DualKoszulSystem, ComplexError> {
    if cap == 0 {
        return Err(ComplexError::Shape("a system needs at least one level".into()));
    }
    let levels: Vec<Complex> = (1..=cap).map(|i| dual_koszul_complex(&seq.power(i as u32))).collect();
    let transitions = (1..cap)
        .map(|i| dual_transition(seq, i as u32, i as u32 + 1).retarget(&levels[i - 1], &levels[i]))
        .collect();
    let system = LevelSystem::new(Direction::Direct, 1, levels, transitions)?;
    Ok(DualKoszulSystem {
        seq: seq.clone(),
        system,
    })
}

/// Labels each generator of an iterated tensor product by the set of
/// factors sitting in their non-zero degree.
pub fn factor_labels(parts: &[Complex]) -> Vec<(i32, Vec<Vec<bool>>)> {
    let mut acc = parts[0].clone();
    let mut labels: Vec<(i32, Vec<Vec<bool>>)> = acc
        .degrees()
        .map(|k| (k, vec![vec![k != 0]]))
        .collect();
    for p in &parts[1..] {
        let next = tensor(&acc, p).expect("free");
        let mut out = Vec::new();
        for k in next.degrees() {
            let mut ls = Vec::new();
            for b in complex::ops::tensor_blocks(&acc, p, k) {
                let left = &labels.iter().find(|(d, _)| *d == b.i).unwrap().1;
                for l in left {
                    let mut v = l.clone();
                    v.push(b.j != 0);
                    ls.push(v);
                }
            }
            out.push((k, ls));
        }
        acc = next;
        labels = out;
    }
    labels
}

/// The canonical isomorphism Hom(K(A;𝒂^i), A) → K^∨(A;𝒂^i): generator
/// e_S^∨ goes to ±e_S, with signs propagated along the differentials and
/// the result verified as a chain map.
pub fn duality_isomorphism(seq: &ElementSequence, i: u32) -> Result<ComplexMap, ComplexError> {
    let ring = seq.ring();
    let pw = seq.power(i);
    let k = koszul_complex(&pw);
    let unit = Complex::concentrated(&free(ring, graded_degrees(seq).map(|_| 0)), 0);
    let hom = complex::ops::hom_from_free(&k, &unit)?;
    let dual = dual_koszul_complex(&pw);
    let kl = factor_labels(&koszul_factors(&pw));
    let dl = factor_labels(&dual_factors(&pw));
    // hom generator in degree d is the dual of K^{−d} generator with the same index
    let position = |deg: i32, g: usize| -> usize {
        let label = &kl.iter().find(|(d, _)| *d == -deg).unwrap().1[g];
        dl.iter()
            .find(|(d, _)| *d == deg)
            .unwrap()
            .1
            .iter()
            .position(|l| l == label)
            .expect("matching factor set")
    };
    let mut signs: Vec<Vec<Option<bool>>> = hom.degrees().map(|d| vec![None; hom.rank(d)]).collect();
    let idx = |d: i32| (d - hom.lo()) as usize;
    signs[idx(0)][0] = Some(false);
    for d in hom.lo()..hom.hi() {
        let dh = hom.differential(d);
        let dd = dual.differential(d);
        for c in 0..hom.rank(d) {
            let sc = signs[idx(d)][c].unwrap_or(false);
            for r in 0..hom.rank(d + 1) {
                let h = dh.matrix().get(r, c);
                if h.is_zero() {
                    continue;
                }
                let v = dd.matrix().get(position(d + 1, r), position(d, c));
                let same = *v == *h;
                if !same && *v != ring.neg(h) {
                    return Err(ComplexError::Shape("differentials differ beyond sign".into()));
                }
                // s_r · D_hom = D_dual · s_c
                signs[idx(d + 1)][r] = Some(sc ^ !same);
            }
        }
    }
    let mats = hom
        .degrees()
        .map(|d| {
            let n = hom.rank(d);
            let mut m = Matrix::zeros(n, n);
            for g in 0..n {
                let neg = signs[idx(d)][g].unwrap_or(false);
                m.set(position(d, g), g, ring.from_i64(if neg { -1 } else { 1 }));
            }
            (d, m)
        })
        .collect();
    ComplexMap::new(&hom, &dual, mats)
}
