//! Finitely presented modules M = coker(R: A^s → A^g) and maps between them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::AlgebraError;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::{Ring, RingRef};
use crate::syzygy::{irredundant_columns, ModuleGb};

#[derive(Clone)]
pub struct FpModule {
    ring: RingRef,
    ngens: usize,
    rels: Matrix,
    degrees: Option<Vec<i64>>,
    gb: Arc<OnceLock<ModuleGb>>,
}

impl fmt::Debug for FpModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FpModule(gens={}, rels={:?}",
            self.ngens,
            self.rels.render(&self.ring)
        )?;
        if let Some(d) = &self.degrees {
            write!(f, ", degrees={d:?}")?;
        }
        write!(f, ")")
    }
}

impl FpModule {
    /// Module with the given relation columns. Entries are reduced to normal
    /// form; with degrees, every relation column must be homogeneous.
    pub fn new(ring: &RingRef, rels: Matrix, degrees: Option<Vec<i64>>) -> Result<Self, AlgebraError> {
        let ngens = rels.nrows();
        let mut rels = rels;
        for r in 0..rels.nrows() {
            for c in 0..rels.ncols() {
                let v = ring.nf(rels.get(r, c));
                rels.set(r, c, v);
            }
        }
        if let Some(d) = &degrees {
            if d.len() != ngens {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "{} degrees for {} generators",
                    d.len(),
                    ngens
                )));
            }
            for c in 0..rels.ncols() {
                if column_degree(ring, &rels.col(c), d).is_err() {
                    return Err(AlgebraError::NonHomogeneous(format!("relation column {c}")));
                }
            }
        }
        Ok(Self::from_parts(ring, rels, degrees))
    }

    /// No normal forms or homogeneity checks; relations must already be valid.
    pub fn from_parts(ring: &RingRef, rels: Matrix, degrees: Option<Vec<i64>>) -> Self {
        Self {
            ring: ring.clone(),
            ngens: rels.nrows(),
            rels,
            degrees,
            gb: Arc::new(OnceLock::new()),
        }
    }

    pub fn free(ring: &RingRef, n: usize) -> Self {
        Self::from_parts(ring, Matrix::zeros(n, 0), None)
    }

    pub fn free_graded(ring: &RingRef, degrees: Vec<i64>) -> Self {
        let n = degrees.len();
        Self::from_parts(ring, Matrix::zeros(n, 0), Some(degrees))
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self::from_parts(ring, Matrix::zeros(0, 0), Some(vec![]))
    }

    /// A/(gens) as a cyclic module.
    pub fn cyclic(ring: &RingRef, ideal: &[Poly]) -> Self {
        let rels = Matrix::from_rows(vec![ideal.to_vec()]);
        let degrees = if ring.is_graded() && ideal.iter().all(|p| p.is_zero() || ring.homogeneous_degree(p).is_some()) {
            Some(vec![0])
        } else {
            None
        };
        Self::from_parts(ring, rels, degrees)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relations(&self) -> &Matrix {
        &self.rels
    }

    pub fn degrees(&self) -> Option<&[i64]> {
        self.degrees.as_deref()
    }

    pub fn with_degrees(&self, degrees: Option<Vec<i64>>) -> Result<Self, AlgebraError> {
        Self::new(&self.ring, self.rels.clone(), degrees)
    }

    /// Degree of each relation column (graded modules only).
    pub fn relation_degrees(&self) -> Option<Vec<i64>> {
        let d = self.degrees.as_ref()?;
        (0..self.rels.ncols())
            .map(|c| column_degree(&self.ring, &self.rels.col(c), d).ok())
            .collect()
    }

    pub fn is_free(&self) -> bool {
        self.rels.is_zero()
    }

    pub fn relation_gb(&self) -> &ModuleGb {
        self.gb
            .get_or_init(|| ModuleGb::from_matrix(&self.ring, &self.rels, false))
    }

    /// Whether the vector (in generator coordinates) is zero in M.
    pub fn is_zero_element(&self, v: &[Poly]) -> bool {
        if v.iter().all(|p| p.is_zero()) {
            return true;
        }
        self.relation_gb().contains(&self.ring, v)
    }

    /// Canonical representative of the class of `v`.
    pub fn normal_form(&self, v: &[Poly]) -> Vec<Poly> {
        self.relation_gb().reduce(&self.ring, v)
    }

    /// True iff every standard generator lies in the relation span.
    pub fn is_zero(&self) -> bool {
        self.zero_witness().is_none()
    }

    /// A generator index that is nonzero in M, if any.
    pub fn zero_witness(&self) -> Option<usize> {
        (0..self.ngens).find(|&i| {
            let mut e = vec![Poly::zero(); self.ngens];
            e[i] = self.ring.one();
            !self.is_zero_element(&e)
        })
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Poly> {
        let mut e = vec![Poly::zero(); self.ngens];
        e[i] = self.ring.one();
        e
    }

    pub fn same_ring(&self, o: &FpModule) -> bool {
        Arc::ptr_eq(&self.ring, &o.ring) || *self.ring == *o.ring
    }

    pub fn direct_sum(parts: &[&FpModule]) -> FpModule {
        let ring = parts
            .first()
            .map(|p| p.ring.clone())
            .expect("direct sum of no modules needs a ring; use FpModule::zero");
        let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.rels).collect();
        let rels = Matrix::block_diag(&blocks);
        let degrees = parts
            .iter()
            .map(|p| p.degrees.clone())
            .collect::<Option<Vec<_>>>()
            .map(|v| v.concat());
        FpModule::from_parts(&ring, rels, degrees)
    }

    /// Right-exact tensor product; generator (i, j) has index i·g₂ + j.
    pub fn tensor(&self, o: &FpModule) -> FpModule {
        let ring = &self.ring;
        let g1 = Matrix::identity(ring, self.ngens);
        let g2 = Matrix::identity(ring, o.ngens);
        let r1 = self.rels.kron(ring, &g2);
        let r2 = g1.kron(ring, &o.rels);
        let rels = drop_zero_cols(&r1.hcat(&r2));
        let degrees = match (&self.degrees, &o.degrees) {
            (Some(a), Some(b)) => Some(
                a.iter()
                    .flat_map(|x| b.iter().map(move |y| x + y))
                    .collect(),
            ),
            _ => None,
        };
        FpModule::from_parts(ring, rels, degrees)
    }

    /// M / (columns of `extra`), with the projection from M.
    pub fn quotient_by(&self, extra: &Matrix) -> (FpModule, ModuleMap) {
        let rels = drop_zero_cols(&self.rels.hcat(extra));
        let q = FpModule::from_parts(&self.ring, rels, self.degrees.clone());
        let p = ModuleMap::from_parts(self, &q, Matrix::identity(&self.ring, self.ngens));
        (q, p)
    }

    /// Degree shift M(s): generator degrees decrease by `s`.
    pub fn twist(&self, s: i64) -> FpModule {
        let degrees = self
            .degrees
            .as_ref()
            .map(|d| d.iter().map(|x| x - s).collect());
        FpModule::from_parts(&self.ring, self.rels.clone(), degrees)
    }

    /// Removes generators that a relation with a unit entry expresses through
    /// the others, drops zero and repeated relations. Returns the pruned
    /// module with mutually inverse isomorphisms (old → new, new → old).
    pub fn prune(&self) -> (FpModule, ModuleMap, ModuleMap) {
        let ring = &self.ring;
        let mut rels = self.rels.clone();
        let mut alive: Vec<usize> = (0..self.ngens).collect();
        // to_new: rows index alive generators, columns index original gens
        let mut to_new = Matrix::identity(ring, self.ngens);
        loop {
            let mut pick: Option<(usize, usize)> = None;
            let mut best = usize::MAX;
            for c in 0..rels.ncols() {
                let nnz = (0..rels.nrows()).filter(|&r| !rels.get(r, c).is_zero()).count();
                for r in 0..rels.nrows() {
                    if rels.get(r, c).is_nonzero_constant() && nnz < best {
                        best = nnz;
                        pick = Some((r, c));
                    }
                }
            }
            let Some((i, c)) = pick else { break };
            let u = rels.get(i, c).constant_value().unwrap();
            let uinv = ring.field().inv(&u);
            // e_i = -u^{-1} Σ_{r≠i} rels[r][c] e_r
            let mut expr: Vec<Poly> = (0..rels.nrows())
                .map(|r| ring.scale(rels.get(r, c), &ring.field().neg(&uinv)))
                .collect();
            expr[i] = Poly::zero();
            let mut new_rels = Matrix::zeros(rels.nrows() - 1, rels.ncols() - 1);
            let keep_rows: Vec<usize> = (0..rels.nrows()).filter(|&r| r != i).collect();
            let keep_cols: Vec<usize> = (0..rels.ncols()).filter(|&k| k != c).collect();
            for (jj, &k) in keep_cols.iter().enumerate() {
                let w = rels.get(i, k).clone();
                for (ii, &r) in keep_rows.iter().enumerate() {
                    let mut v = rels.get(r, k).clone();
                    if !w.is_zero() && !expr[r].is_zero() {
                        v = ring.add(&v, &ring.mul(&w, &expr[r]));
                    }
                    new_rels.set(ii, jj, v);
                }
            }
            // update old → new: row i is substituted by expr
            let mut new_to = Matrix::zeros(to_new.nrows() - 1, to_new.ncols());
            for (ii, &r) in keep_rows.iter().enumerate() {
                for col in 0..to_new.ncols() {
                    let mut v = to_new.get(r, col).clone();
                    let w = to_new.get(i, col);
                    if !w.is_zero() && !expr[r].is_zero() {
                        v = ring.add(&v, &ring.mul(w, &expr[r]));
                    }
                    new_to.set(ii, col, v);
                }
            }
            to_new = new_to;
            rels = new_rels;
            alive.remove(i);
        }
        // drop zero and duplicate relation columns
        let mut cols: Vec<Vec<Poly>> = Vec::new();
        for c in 0..rels.ncols() {
            let col = rels.col(c);
            if col.iter().all(|p| p.is_zero()) || cols.contains(&col) {
                continue;
            }
            cols.push(col);
        }
        let rels = Matrix::from_cols(alive.len(), &cols);
        let degrees = self
            .degrees
            .as_ref()
            .map(|d| alive.iter().map(|&i| d[i]).collect());
        let pruned = FpModule::from_parts(ring, rels, degrees);
        let mut back = Matrix::zeros(self.ngens, alive.len());
        for (j, &i) in alive.iter().enumerate() {
            back.set(i, j, ring.one());
        }
        let fwd = ModuleMap::from_parts(self, &pruned, to_new);
        let bwd = ModuleMap::from_parts(&pruned, self, back);
        (pruned, fwd, bwd)
    }

    /// Drops relation columns implied by the others.
    pub fn trim_relations(&self) -> FpModule {
        let cols = self.rels.cols();
        let keep = irredundant_columns(&self.ring, self.ngens, &cols, &[]);
        FpModule::from_parts(&self.ring, self.rels.select_cols(&keep), self.degrees.clone())
    }
}

fn drop_zero_cols(m: &Matrix) -> Matrix {
    let keep: Vec<usize> = (0..m.ncols())
        .filter(|&c| (0..m.nrows()).any(|r| !m.get(r, c).is_zero()))
        .collect();
    m.select_cols(&keep)
}

/// Degree of a homogeneous column with respect to generator degrees; zero
/// columns get `i64::MIN`.
pub fn column_degree(ring: &Ring, col: &[Poly], degrees: &[i64]) -> Result<i64, ()> {
    let mut deg: Option<i64> = None;
    for (r, p) in col.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let d = ring.homogeneous_degree(p).ok_or(())? + degrees[r];
        match deg {
            None => deg = Some(d),
            Some(e) if e == d => {}
            _ => return Err(()),
        }
    }
    Ok(deg.unwrap_or(i64::MIN))
}

/// A homomorphism of finitely presented modules given on generators.
#[derive(Clone)]
pub struct ModuleMap {
    source: FpModule,
    target: FpModule,
    matrix: Matrix,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({:?})", self.matrix.render(&self.source.ring))
    }
}

/// Result of an injectivity, surjectivity or isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapDefect {
    /// A source element (generator coordinates) that is nonzero but maps to zero.
    Kernel(Vec<Poly>),
    /// A target generator index outside the image.
    Cokernel(usize),
}

impl ModuleMap {
    /// Verifies that the relations of the source map into the relations of the target.
    pub fn new(source: &FpModule, target: &FpModule, matrix: Matrix) -> Result<Self, AlgebraError> {
        if !source.same_ring(target) {
            return Err(AlgebraError::RingMismatch);
        }
        if matrix.nrows() != target.ngens || matrix.ncols() != source.ngens {
            return Err(AlgebraError::DimensionMismatch(format!(
                "map matrix {}x{} for {} -> {} generators",
                matrix.nrows(),
                matrix.ncols(),
                source.ngens,
                target.ngens
            )));
        }
        let ring = source.ring.clone();
        let mut matrix = matrix;
        for r in 0..matrix.nrows() {
            for c in 0..matrix.ncols() {
                let v = ring.nf(matrix.get(r, c));
                matrix.set(r, c, v);
            }
        }
        let img = matrix.mul(&ring, &source.rels);
        for c in 0..img.ncols() {
            if !target.is_zero_element(&img.col(c)) {
                return Err(AlgebraError::NotWellDefined(c));
            }
        }
        Ok(Self::from_parts(source, target, matrix))
    }

    /// Skips the well-definedness check; for maps correct by construction.
    pub fn from_parts(source: &FpModule, target: &FpModule, matrix: Matrix) -> Self {
        debug_assert_eq!(matrix.nrows(), target.ngens);
        debug_assert_eq!(matrix.ncols(), source.ngens);
        Self {
            source: source.clone(),
            target: target.clone(),
            matrix,
        }
    }

    pub fn identity(m: &FpModule) -> Self {
        Self::from_parts(m, m, Matrix::identity(&m.ring, m.ngens))
    }

    pub fn zero(source: &FpModule, target: &FpModule) -> Self {
        Self::from_parts(source, target, Matrix::zeros(target.ngens, source.ngens))
    }

    pub fn source(&self) -> &FpModule {
        &self.source
    }

    pub fn target(&self) -> &FpModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn ring(&self) -> &RingRef {
        &self.source.ring
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap) -> ModuleMap {
        let m = self.matrix.mul(&self.source.ring, &first.matrix);
        ModuleMap::from_parts(&first.source, &self.target, m)
    }

    pub fn add(&self, o: &ModuleMap) -> ModuleMap {
        ModuleMap::from_parts(&self.source, &self.target, self.matrix.add(self.ring(), &o.matrix))
    }

    pub fn neg(&self) -> ModuleMap {
        ModuleMap::from_parts(&self.source, &self.target, self.matrix.neg(self.ring()))
    }

    pub fn apply(&self, v: &[Poly]) -> Vec<Poly> {
        self.matrix.mul_vec(self.ring(), v)
    }

    /// Same matrix between other presentations with the same generator counts.
    pub fn retarget(&self, source: &FpModule, target: &FpModule) -> ModuleMap {
        ModuleMap::from_parts(source, target, self.matrix.clone())
    }

    /// Whether every generator maps to zero.
    pub fn is_zero_map(&self) -> bool {
        (0..self.matrix.ncols()).all(|c| self.target.is_zero_element(&self.matrix.col(c)))
    }

    /// Whether two maps agree as homomorphisms (difference lands in target relations).
    pub fn equals(&self, o: &ModuleMap) -> bool {
        self.matrix.ncols() == o.matrix.ncols()
            && self.matrix.nrows() == o.matrix.nrows()
            && self.sub_matrix_zero(o)
    }

    fn sub_matrix_zero(&self, o: &ModuleMap) -> bool {
        let d = self.matrix.sub(self.ring(), &o.matrix);
        (0..d.ncols()).all(|c| self.target.is_zero_element(&d.col(c)))
    }

    /// Cycles of the map: generators of {u ∈ A^{g_src} : Φu ∈ im R_tgt}.
    fn preimage_of_relations(&self) -> Matrix {
        let ring = self.ring();
        let aug = self.matrix.hcat(&self.target.rels);
        let gb = ModuleGb::from_matrix(ring, &aug, true);
        let syz = gb.syzygies(ring);
        let g = self.source.ngens;
        let cols: Vec<Vec<Poly>> = syz
            .into_iter()
            .map(|s| s[..g].to_vec())
            .filter(|c| c.iter().any(|p| !p.is_zero()))
            .collect();
        Matrix::from_cols(g, &cols)
    }

    /// Kernel as a module together with its inclusion into the source.
    pub fn kernel(&self) -> (FpModule, ModuleMap) {
        let ring = self.ring().clone();
        let z = self.preimage_of_relations();
        // drop cycles that are already zero in the source
        let cols: Vec<Vec<Poly>> = z
            .cols()
            .into_iter()
            .filter(|c| !self.source.is_zero_element(c))
            .collect();
        let keep = irredundant_columns(&ring, self.source.ngens, &cols, &self.source.rels.cols());
        let cols: Vec<Vec<Poly>> = keep.iter().map(|&i| cols[i].clone()).collect();
        let z = Matrix::from_cols(self.source.ngens, &cols);
        let rel = relations_of_subquotient(&ring, &z, &self.source.rels);
        let degrees = self.source.degrees.as_ref().and_then(|d| {
            (0..z.ncols())
                .map(|c| column_degree(&ring, &z.col(c), d).ok())
                .collect::<Option<Vec<i64>>>()
        });
        let k = FpModule::from_parts(&ring, rel, degrees);
        let inc = ModuleMap::from_parts(&k, &self.source, z);
        (k, inc)
    }

    /// Image as a module, with the surjection from the source and the
    /// inclusion into the target.
    pub fn image(&self) -> (FpModule, ModuleMap, ModuleMap) {
        let ring = self.ring().clone();
        let z = self.preimage_of_relations();
        let im = FpModule::from_parts(&ring, z, self.source.degrees.clone());
        let onto = ModuleMap::from_parts(&self.source, &im, Matrix::identity(&ring, self.source.ngens));
        let inc = ModuleMap::from_parts(&im, &self.target, self.matrix.clone());
        (im, onto, inc)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (FpModule, ModuleMap) {
        self.target.quotient_by(&self.matrix)
    }

    pub fn injectivity_witness(&self) -> Option<Vec<Poly>> {
        let z = self.preimage_of_relations();
        (0..z.ncols())
            .map(|c| z.col(c))
            .find(|c| !self.source.is_zero_element(c))
    }

    pub fn surjectivity_witness(&self) -> Option<usize> {
        let (c, _) = self.cokernel();
        c.zero_witness()
    }

    pub fn is_injective(&self) -> bool {
        self.injectivity_witness().is_none()
    }

    pub fn is_surjective(&self) -> bool {
        self.surjectivity_witness().is_none()
    }

    /// `None` when the map is an isomorphism, else the first defect found.
    pub fn iso_defect(&self) -> Option<MapDefect> {
        if let Some(i) = self.surjectivity_witness() {
            return Some(MapDefect::Cokernel(i));
        }
        self.injectivity_witness().map(MapDefect::Kernel)
    }

    pub fn is_iso(&self) -> bool {
        self.iso_defect().is_none()
    }
}

/// Relations among the columns of `z` as elements of coker(`rels`):
/// the projection to the first columns of syz([z | rels]).
pub fn relations_of_subquotient(ring: &Ring, z: &Matrix, rels: &Matrix) -> Matrix {
    let k = z.ncols();
    let aug = z.hcat(rels);
    let gb = ModuleGb::from_matrix(ring, &aug, true);
    let cols: Vec<Vec<Poly>> = gb
        .syzygies(ring)
        .into_iter()
        .map(|s| s[..k].to_vec())
        .filter(|c| c.iter().any(|p| !p.is_zero()))
        .collect();
    let mut uniq: Vec<Vec<Poly>> = Vec::new();
    for c in cols {
        if !uniq.contains(&c) {
            uniq.push(c);
        }
    }
    Matrix::from_cols(k, &uniq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::TermOrder;
    use crate::ring::make_ring_str;

    fn qx(quot: &[&str]) -> RingRef {
        make_ring_str(Field::Rational, &["x"], None, quot, TermOrder::Grevlex).unwrap()
    }

    #[test]
    fn cokernel_of_multiplication() {
        let r = qx(&[]);
        let a = FpModule::free(&r, 1);
        let m = ModuleMap::new(&a, &a, Matrix::parse(&r, &[&["x"]]).unwrap()).unwrap();
        let (c, _) = m.cokernel();
        assert!(!c.is_zero());
        assert!(c.is_zero_element(&[r.parse("x").unwrap()]));
        assert!(m.is_injective());
    }

    #[test]
    fn kernel_of_multiplication_in_quotient() {
        let r = qx(&["x^2"]);
        let a = FpModule::free(&r, 1);
        let m = ModuleMap::new(&a, &a, Matrix::parse(&r, &[&["x"]]).unwrap()).unwrap();
        let (k, inc) = m.kernel();
        assert_eq!(k.ngens(), 1);
        assert_eq!(r.render(inc.matrix().get(0, 0)), "x");
        // x·x = 0 so the kernel is A/(x), one-dimensional
        assert!(k.is_zero_element(&[r.parse("x").unwrap()]));
        assert!(!k.is_zero());
    }

    #[test]
    fn identity_has_zero_cokernel() {
        let r = qx(&[]);
        let a = FpModule::free(&r, 2);
        let (c, _) = ModuleMap::identity(&a).cokernel();
        assert!(c.is_zero());
    }

    #[test]
    fn ill_defined_map_rejected() {
        let r = qx(&[]);
        let src = FpModule::cyclic(&r, &[r.parse("x").unwrap()]);
        let tgt = FpModule::free(&r, 1);
        let e = ModuleMap::new(&src, &tgt, Matrix::identity(&r, 1));
        assert!(matches!(e, Err(AlgebraError::NotWellDefined(0))));
    }

    #[test]
    fn prune_removes_unit_relations() {
        let r = qx(&[]);
        let rels = Matrix::parse(&r, &[&["1", "0"], &["-x", "x^2"]]).unwrap();
        let m = FpModule::new(&r, rels, None).unwrap();
        let (p, fwd, bwd) = m.prune();
        assert_eq!(p.ngens(), 1);
        assert!(fwd.is_iso());
        assert!(bwd.is_iso());
        assert!(fwd.compose(&bwd).equals(&ModuleMap::identity(&p)));
        assert!(bwd.compose(&fwd).equals(&ModuleMap::identity(&m)));
    }
}
