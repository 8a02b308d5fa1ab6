//! Truncated telescope complexes Tel_j(A;𝒂) and the maps w, u and tel.

use algebra_core::{ElementSequence, FpModule, Matrix, ModuleMap, Poly, RingRef};
use complex::ops::{hom_from_free, tensor, tensor_maps};
use complex::{Complex, ComplexMap};
use koszul::tower::graded_degrees;
use koszul::{dual_koszul_complex, quotient_module};

use crate::error::TelescopeError;

fn free(ring: &RingRef, degrees: Option<Vec<i64>>, n: usize) -> FpModule {
    match degrees {
        Some(d) => FpModule::free_graded(ring, d),
        None => FpModule::free(ring, n),
    }
}

/// Tel_j(A;a): F([0,j]) → F([0,j]) in degrees 0, 1.
fn single(ring: &RingRef, a: &Poly, deg: Option<i64>, j: usize) -> Complex {
    let d0 = deg.map(|e| (0..=j as i64).map(|i| -(i - 1).max(0) * e).collect());
    let d1 = deg.map(|e| (0..=j as i64).map(|i| -i * e).collect());
    let c0 = free(ring, d0, j + 1);
    let c1 = free(ring, d1, j + 1);
    let mut m = Matrix::zeros(j + 1, j + 1);
    m.set(0, 0, ring.one());
    for i in 1..=j {
        m.set(i - 1, i, ring.one());
        m.set(i, i, ring.neg(a));
    }
    let d = ModuleMap::from_parts(&c0, &c1, m);
    Complex::from_parts(ring, 0, vec![c0, c1], vec![d]).expect("two-term shape")
}

fn fold(parts: &[Complex]) -> Complex {
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = tensor(&acc, p).expect("free factors");
    }
    acc
}

fn fold_maps(maps: &[ComplexMap]) -> ComplexMap {
    let mut acc = maps[0].clone();
    for m in &maps[1..] {
        let s = tensor(acc.source(), m.source()).expect("free factors");
        let t = tensor(acc.target(), m.target()).expect("free factors");
        acc = tensor_maps(&acc, m, &s, &t);
    }
    acc
}

#[derive(Clone, Debug)]
pub struct TelescopeComplex {
    pub seq: ElementSequence,
    pub level: usize,
    pub complex: Complex,
}

impl TelescopeComplex {
    /// Position of δ_{i_1} ⊗ ⋯ ⊗ δ_{i_n} in degree 0.
    pub fn degree0_index(&self, idx: &[usize]) -> Result<usize, TelescopeError> {
        index_of(self.seq.len(), self.level, idx)
    }
}

fn index_of(n: usize, j: usize, idx: &[usize]) -> Result<usize, TelescopeError> {
    if idx.len() != n {
        return Err(TelescopeError::Arity { expected: n, got: idx.len() });
    }
    let mut pos = 0;
    for &i in idx {
        if i > j {
            return Err(TelescopeError::LevelTooSmall { level: j, index: i });
        }
        pos = pos * (j + 1) + i;
    }
    Ok(pos)
}

/// Index tuples of the degree-0 basis, in basis order.
pub fn degree0_tuples(n: usize, j: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=j).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

fn factors(seq: &ElementSequence, j: usize) -> Vec<Complex> {
    let ring = seq.ring();
    let degs = graded_degrees(seq);
    seq.elements()
        .iter()
        .enumerate()
        .map(|(t, a)| single(ring, a, degs.as_ref().map(|d| d[t]), j))
        .collect()
}

pub fn telescope(seq: &ElementSequence, j: usize) -> TelescopeComplex {
    TelescopeComplex {
        seq: seq.clone(),
        level: j,
        complex: fold(&factors(seq, j)),
    }
}

/// Tel_j ⊂ Tel_{j'}, basis vectors to same-named basis vectors.
pub fn tel_inclusion(seq: &ElementSequence, j: usize, j2: usize) -> Result<ComplexMap, TelescopeError> {
    if j == 0 || j > j2 {
        return Err(TelescopeError::BadLevels(j, j2));
    }
    let ring = seq.ring();
    let src = factors(seq, j);
    let tgt = factors(seq, j2);
    let maps: Vec<ComplexMap> = src
        .iter()
        .zip(&tgt)
        .map(|(s, t)| {
            let mut m = Matrix::zeros(j2 + 1, j + 1);
            for i in 0..=j {
                m.set(i, i, ring.one());
            }
            ComplexMap::from_parts(s, t, vec![(0, m.clone()), (1, m)])
        })
        .collect();
    Ok(fold_maps(&maps))
}

/// w_{𝒂,j} : Tel_j(A;𝒂) → K^∨(A;𝒂^j).
pub fn w_map(seq: &ElementSequence, j: usize) -> ComplexMap {
    let ring = seq.ring();
    let src = factors(seq, j);
    let pw = seq.power(j as u32);
    let maps: Vec<ComplexMap> = seq
        .elements()
        .iter()
        .enumerate()
        .map(|(t, a)| {
            let single_seq = ElementSequence::new(ring, vec![pw.get(t).clone()]).unwrap();
            let tgt = dual_koszul_complex(&single_seq);
            let mut w0 = Matrix::zeros(1, j + 1);
            w0.set(0, 0, ring.one());
            let mut w1 = Matrix::zeros(1, j + 1);
            for i in 0..=j {
                w1.set(0, i, ring.pow(a, (j - i) as u32));
            }
            ComplexMap::from_parts(&src[t], &tgt, vec![(0, w0), (1, w1)])
        })
        .collect();
    fold_maps(&maps)
}

/// A in degree 0, graded when the sequence is.
pub fn unit_complex(seq: &ElementSequence) -> Complex {
    let ring = seq.ring();
    let deg = graded_degrees(seq).map(|_| vec![0]);
    Complex::concentrated(&free(ring, deg, 1), 0)
}

/// u_{𝒂,j} = e^∨ ∘ w : Tel_j → A, nonzero only on δ_0 ⊗ ⋯ ⊗ δ_0.
pub fn u_map(seq: &ElementSequence, j: usize) -> ComplexMap {
    let ring = seq.ring();
    let tel = telescope(seq, j).complex;
    let mut m = Matrix::zeros(1, tel.rank(0));
    m.set(0, 0, ring.one());
    ComplexMap::from_parts(&tel, &unit_complex(seq), vec![(0, m)])
}

/// p(a, i): 1, −1, −a^{i−1}.
pub fn modified_power(ring: &RingRef, a: &Poly, i: usize) -> Poly {
    match i {
        0 => ring.one(),
        1 => ring.from_i64(-1),
        _ => ring.neg(&ring.pow(a, (i - 1) as u32)),
    }
}

/// Tel_j^∨ = Hom(Tel_j, A), in degrees −n..0.
pub fn dual_telescope(seq: &ElementSequence, j: usize) -> Complex {
    hom_from_free(&telescope(seq, j).complex, &unit_complex(seq)).expect("free source")
}

/// A/(𝒂^j) in degree 0.
pub fn residue_complex(seq: &ElementSequence, j: usize) -> Complex {
    Complex::concentrated(&quotient_module(&seq.power(j as u32)), 0)
}

/// tel_{𝒂,j} : Tel_j^∨ → A/(𝒂^j), the dual of δ_{i_1}⊗⋯⊗δ_{i_n} going to
/// ∏ p(a_t, i_t). Verified as a chain map.
pub fn tel_level_map(seq: &ElementSequence, j: usize) -> Result<ComplexMap, TelescopeError> {
    let src = dual_telescope(seq, j);
    let tgt = residue_complex(seq, j);
    let row: Vec<Poly> = degree0_tuples(seq.len(), j)
        .iter()
        .map(|idx| tel_coefficient(seq, idx))
        .collect();
    let m = Matrix::from_rows(vec![row]);
    Ok(ComplexMap::new(&src, &tgt, vec![(0, m)])?)
}

fn tel_coefficient(seq: &ElementSequence, idx: &[usize]) -> Poly {
    let ring = seq.ring();
    idx.iter()
        .enumerate()
        .fold(ring.one(), |acc, (t, &i)| ring.mul(&acc, &modified_power(ring, seq.get(t), i)))
}

/// Value of the modified-power series on a finitely supported function
/// f : ℕⁿ → M (given by its nonzero values as generator coordinates of
/// `m`), as an element of A/(𝒂^j) ⊗ M in normal form.
pub fn tel_eval(
    seq: &ElementSequence,
    m: &FpModule,
    f: &[(Vec<usize>, Vec<Poly>)],
    j: usize,
) -> Result<Vec<Poly>, TelescopeError> {
    let ring = seq.ring();
    let n = seq.len();
    let mut acc = vec![Poly::zero(); m.ngens()];
    for (idx, val) in f {
        if idx.len() != n {
            return Err(TelescopeError::Arity { expected: n, got: idx.len() });
        }
        let c = tel_coefficient(seq, idx);
        for (a, v) in acc.iter_mut().zip(val) {
            *a = ring.add(a, &ring.mul(&c, v));
        }
    }
    let level = quotient_module(&seq.power(j as u32)).tensor(m);
    Ok(level.normal_form(&acc))
}
