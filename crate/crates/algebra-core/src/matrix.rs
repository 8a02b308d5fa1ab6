//! Dense matrices of ring elements (row-major), entries kept in normal form.

use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Poly>,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            data: vec![Poly::zero(); nrows * ncols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(entries: &[Poly]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        Self { nrows, ncols, data }
    }

    pub fn from_cols(nrows: usize, cols: &[Vec<Poly>]) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length");
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    /// Parses rows of polynomial literals.
    pub fn parse(ring: &Ring, rows: &[&[&str]]) -> Result<Self, crate::AlgebraError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_rows(rows))
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Poly) {
        self.data[r * self.ncols + c] = v;
    }

    pub fn col(&self, c: usize) -> Vec<Poly> {
        (0..self.nrows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Poly> {
        self.data[r * self.ncols..(r + 1) * self.ncols].to_vec()
    }

    pub fn cols(&self) -> Vec<Vec<Poly>> {
        (0..self.ncols).map(|c| self.col(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn mul(&self, ring: &Ring, o: &Matrix) -> Matrix {
        assert_eq!(self.ncols, o.nrows, "matrix product shape");
        let mut out = Matrix::zeros(self.nrows, o.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.ncols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let p = ring.ctx().mul(a, b);
                    let idx = i * out.ncols + j;
                    out.data[idx] = ring.ctx().add(&out.data[idx], &p);
                }
            }
        }
        for p in out.data.iter_mut() {
            if !p.is_zero() {
                *p = ring.nf(p);
            }
        }
        out
    }

    pub fn mul_vec(&self, ring: &Ring, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(self.ncols, v.len(), "matrix-vector shape");
        (0..self.nrows)
            .map(|i| {
                let mut acc = Poly::zero();
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !x.is_zero() {
                        acc = ring.ctx().add(&acc, &ring.ctx().mul(a, x));
                    }
                }
                ring.nf(&acc)
            })
            .collect()
    }

    pub fn add(&self, ring: &Ring, o: &Matrix) -> Matrix {
        assert_eq!((self.nrows, self.ncols), (o.nrows, o.ncols), "matrix sum shape");
        Matrix {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, ring: &Ring, o: &Matrix) -> Matrix {
        self.add(ring, &o.neg(ring))
    }

    pub fn neg(&self, ring: &Ring) -> Matrix {
        Matrix {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(|a| ring.neg(a)).collect(),
        }
    }

    pub fn scale_poly(&self, ring: &Ring, p: &Poly) -> Matrix {
        Matrix {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self.data.iter().map(|a| ring.mul(a, p)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.ncols, self.nrows);
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn hcat(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.nrows, o.nrows, "hcat rows");
        let mut m = Matrix::zeros(self.nrows, self.ncols + o.ncols);
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..o.ncols {
                m.set(r, self.ncols + c, o.get(r, c).clone());
            }
        }
        m
    }

    pub fn vcat(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.ncols, o.ncols, "vcat cols");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix {
            nrows: self.nrows + o.nrows,
            ncols: self.ncols,
            data,
        }
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let nr: usize = blocks.iter().map(|b| b.nrows).sum();
        let nc: usize = blocks.iter().map(|b| b.ncols).sum();
        let mut m = Matrix::zeros(nr, nc);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.nrows;
            c0 += b.ncols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for r in 0..b.nrows {
            for c in 0..b.ncols {
                self.set(r0 + r, c0 + c, b.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Matrix {
        let mut m = Matrix::zeros(nr, nc);
        for r in 0..nr {
            for c in 0..nc {
                m.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        m
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.nrows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.nrows {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), self.ncols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.ncols {
                m.set(i, c, self.get(r, c).clone());
            }
        }
        m
    }

    /// Kronecker product with row and column index `(i, j) ↦ i·(b size) + j`.
    pub fn kron(&self, ring: &Ring, b: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.nrows * b.nrows, self.ncols * b.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..b.nrows {
                    for l in 0..b.ncols {
                        let e = b.get(k, l);
                        if !e.is_zero() {
                            m.set(i * b.nrows + k, j * b.ncols + l, ring.mul(a, e));
                        }
                    }
                }
            }
        }
        m
    }

    pub fn render(&self, ring: &Ring) -> Vec<Vec<String>> {
        (0..self.nrows)
            .map(|r| (0..self.ncols).map(|c| ring.render(self.get(r, c))).collect())
            .collect()
    }
}
