//! Row spaces over Z_p kept in reduced row-echelon form.

use crate::error::{Error, Result};
use crate::prime_field::Prime;

/// A subspace of Z_p^n stored as the rows of its RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowSpace {
    p: Prime,
    cols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn zero(p: Prime, cols: usize) -> Self {
        RowSpace {
            p,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: Prime, cols: usize) -> Self {
        let rows = (0..cols)
            .map(|i| {
                let mut r = vec![0; cols];
                r[i] = 1;
                r
            })
            .collect();
        RowSpace {
            p,
            cols,
            rows,
            pivots: (0..cols).collect(),
        }
    }

    /// Row space of arbitrary vectors; entries are reduced mod p.
    pub fn from_rows<I, R>(p: Prime, cols: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: AsRef<[u32]>,
    {
        let mut m: Vec<Vec<u32>> = Vec::new();
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            m.push(r.iter().map(|&v| v % p.get()).collect());
        }
        Ok(Self::from_matrix(p, cols, m))
    }

    fn from_matrix(p: Prime, cols: usize, mut m: Vec<Vec<u32>>) -> Self {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..cols {
            let Some(pr) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(rank, pr);
            let inv = p.inv(m[rank][c]).expect("nonzero pivot");
            for v in m[rank].iter_mut() {
                *v = p.mul(*v, inv);
            }
            let pivot_row = m[rank].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != rank && row[c] != 0 {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                        *x = p.sub(*x, p.mul(f, y));
                    }
                }
            }
            pivots.push(c);
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        m.truncate(rank);
        RowSpace {
            p,
            cols,
            rows: m,
            pivots,
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut w: Vec<u32> = v.iter().map(|&x| x % p.get()).collect();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = w[c];
            if f != 0 {
                for (x, &y) in w.iter_mut().zip(row).skip(c) {
                    *x = p.sub(*x, p.mul(f, y));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.cols && self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Adds `v` to the space, keeping RREF. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let p = self.p;
        let mut w = self.reduce(v);
        let Some(c) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = p.inv(w[c]).expect("nonzero");
        for x in w.iter_mut() {
            *x = p.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let f = row[c];
            if f != 0 {
                for (x, &y) in row.iter_mut().zip(&w).skip(c) {
                    *x = p.sub(*x, p.mul(f, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, w);
        true
    }

    /// Basis of {x : row . x = 0 for every basis row}.
    pub fn kernel(&self) -> RowSpace {
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &c) in self.rows.iter().zip(&self.pivots) {
                v[c] = p.neg(row[free]);
            }
            out.push(v);
        }
        RowSpace::from_matrix(p, self.cols, out)
    }

    /// Euclidean dual.
    pub fn dual(&self) -> RowSpace {
        self.kernel()
    }

    /// Intersection via kernels of the stacked duals.
    pub fn intersect(&self, other: &RowSpace) -> RowSpace {
        let stacked: Vec<Vec<u32>> = self
            .dual()
            .rows
            .into_iter()
            .chain(other.dual().rows)
            .collect();
        RowSpace::from_matrix(self.p, self.cols, stacked).kernel()
    }

    /// Image of the space under a linear map given as a function on vectors.
    pub fn map<F>(&self, cols: usize, f: F) -> RowSpace
    where
        F: Fn(&[u32]) -> Vec<u32>,
    {
        let rows = self.rows.iter().map(|r| f(r)).collect();
        RowSpace::from_matrix(self.p, cols, rows)
    }

    /// Visits every vector of the space (p^dim of them).
    pub fn for_each_vector<F: FnMut(&[u32])>(&self, mut f: F) {
        let p = self.p.get();
        let k = self.dim();
        let mut coeffs = vec![0u32; k];
        let mut v = vec![0u32; self.cols];
        loop {
            f(&v);
            // Gray-style odometer: bump one coefficient and add its row.
            let mut i = 0;
            loop {
                if i == k {
                    return;
                }
                coeffs[i] += 1;
                let wrap = coeffs[i] == p;
                for (x, &y) in v.iter_mut().zip(&self.rows[i]) {
                    *x = self.p.add(*x, y);
                }
                if wrap {
                    coeffs[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }

    /// p^dim, if it fits in u128.
    pub fn size(&self) -> Option<u128> {
        (self.p.get() as u128).checked_pow(self.dim() as u32)
    }
}

pub fn dot(p: Prime, a: &[u32], b: &[u32]) -> u32 {
    let pp = p.get() as u64;
    let s = a
        .iter()
        .zip(b)
        .fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64) % pp);
    s as u32
}
