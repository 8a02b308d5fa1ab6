//! Dense linear algebra over the coefficient field.

use num_traits::Zero;

use crate::field::{Coeff, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMat {
    nrows: usize,
    ncols: usize,
    data: Vec<Coeff>,
}

impl FMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            data: vec![Coeff::zero(); nrows * ncols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_cols(nrows: usize, cols: &[Vec<Coeff>]) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Coeff>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &Coeff {
        &self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        self.data[r * self.ncols + c] = v;
    }

    pub fn col(&self, c: usize) -> Vec<Coeff> {
        (0..self.nrows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, field: &Field, o: &FMat) -> FMat {
        assert_eq!(self.ncols, o.nrows, "product shape");
        let mut out = FMat::zeros(self.nrows, o.ncols);
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
                    let idx = i * o.ncols + j;
                    out.data[idx] = field.add(&out.data[idx], &field.mul(a, b));
                }
            }
        }
        out
    }

    pub fn sub(&self, field: &Field, o: &FMat) -> FMat {
        assert_eq!((self.nrows, self.ncols), (o.nrows, o.ncols));
        FMat {
            nrows: self.nrows,
            ncols: self.ncols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| field.sub(a, b))
                .collect(),
        }
    }

    pub fn hcat(&self, o: &FMat) -> FMat {
        assert_eq!(self.nrows, o.nrows, "hcat rows");
        let mut m = FMat::zeros(self.nrows, self.ncols + o.ncols);
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

    pub fn select_cols(&self, cols: &[usize]) -> FMat {
        let mut m = FMat::zeros(self.nrows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.nrows {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> FMat {
        let mut m = FMat::zeros(rows.len(), self.ncols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.ncols {
                m.set(i, c, self.get(r, c).clone());
            }
        }
        m
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, field: &Field) -> (FMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..m.ncols {
            if row == m.nrows {
                break;
            }
            let Some(p) = (row..m.nrows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            if p != row {
                for k in 0..m.ncols {
                    m.data.swap(p * m.ncols + k, row * m.ncols + k);
                }
            }
            let inv = field.inv(m.get(row, c));
            for k in c..m.ncols {
                let v = field.mul(m.get(row, k), &inv);
                m.set(row, k, v);
            }
            for r in 0..m.nrows {
                if r == row {
                    continue;
                }
                let f = m.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for k in c..m.ncols {
                    let v = field.sub(m.get(r, k), &field.mul(&f, m.get(row, k)));
                    m.set(r, k, v);
                }
            }
            pivots.push(c);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.rref(field).1.len()
    }

    /// Basis of the null space, one column per free variable.
    pub fn kernel(&self, field: &Field) -> FMat {
        let (r, pivots) = self.rref(field);
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let mut k = FMat::zeros(self.ncols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, field.one());
            for (i, &p) in pivots.iter().enumerate() {
                let v = field.neg(r.get(i, f));
                k.set(p, j, v);
            }
        }
        k
    }

    /// Solves `self · X = B` for all columns of `B` at once.
    pub fn solve(&self, field: &Field, b: &FMat) -> Option<FMat> {
        assert_eq!(self.nrows, b.nrows, "solve shape");
        let aug = self.hcat(b);
        let (r, pivots) = aug.rref(field);
        if pivots.iter().any(|&p| p >= self.ncols) {
            return None;
        }
        let mut x = FMat::zeros(self.ncols, b.ncols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.ncols {
                x.set(p, j, r.get(i, self.ncols + j).clone());
            }
        }
        Some(x)
    }

    /// Columns forming a basis of the column space (first maximal independent set).
    pub fn independent_columns(&self, field: &Field) -> Vec<usize> {
        self.rref(field).1
    }
}

/// H = ker(d_out) / im(d_in) at a vector space of dimension `dim`, with
/// chosen cycle representatives and a coordinate map.
#[derive(Clone, Debug)]
pub struct Homology {
    pub dim: usize,
    /// Image basis followed by the chosen cycle representatives.
    frame: FMat,
    nimage: usize,
}

impl Homology {
    pub fn new(field: &Field, d_in: &FMat, d_out: &FMat, dim: usize) -> Self {
        assert_eq!(d_in.nrows(), dim);
        assert_eq!(d_out.ncols(), dim);
        let img_idx = d_in.independent_columns(field);
        let img = d_in.select_cols(&img_idx);
        let ker = d_out.kernel(field);
        let both = img.hcat(&ker);
        let (_, piv) = both.rref(field);
        let reps: Vec<usize> = piv.iter().filter(|&&p| p >= img.ncols()).map(|&p| p - img.ncols()).collect();
        let frame = img.hcat(&ker.select_cols(&reps));
        Self {
            dim: reps.len(),
            frame,
            nimage: img.ncols(),
        }
    }

    /// Cycle representatives, one column per homology basis vector.
    pub fn representatives(&self) -> FMat {
        let idx: Vec<usize> = (self.nimage..self.frame.ncols()).collect();
        self.frame.select_cols(&idx)
    }

    /// Coordinates of cycles (columns of `v`) in the homology basis.
    pub fn coords(&self, field: &Field, v: &FMat) -> FMat {
        let x = self
            .frame
            .solve(field, v)
            .expect("argument columns must be cycles");
        let idx: Vec<usize> = (self.nimage..self.frame.ncols()).collect();
        x.select_rows(&idx)
    }
}
