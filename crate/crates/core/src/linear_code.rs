//! Linear codes over Z_p.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::prime_field::Prime;

/// Codes with at most this many codewords may be enumerated when the
/// column-subset search runs out of budget.
pub const ENUMERATION_LIMIT: u128 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    space: RowSpace,
}

impl LinearCode {
    pub fn new<I, R>(p: Prime, n: usize, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: AsRef<[u32]>,
    {
        Ok(LinearCode {
            space: RowSpace::from_rows(p, n, rows)?,
        })
    }

    pub fn from_space(space: RowSpace) -> Self {
        LinearCode { space }
    }

    pub fn full(p: Prime, n: usize) -> Self {
        LinearCode {
            space: RowSpace::full(p, n),
        }
    }

    pub fn zero(p: Prime, n: usize) -> Self {
        LinearCode {
            space: RowSpace::zero(p, n),
        }
    }

    pub fn prime(&self) -> Prime {
        self.space.prime()
    }

    pub fn length(&self) -> usize {
        self.space.cols()
    }

    pub fn dimension(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &RowSpace {
        &self.space
    }

    /// RREF generator rows.
    pub fn generator(&self) -> &[Vec<u32>] {
        self.space.rows()
    }

    /// Rows of H with G H^T = 0.
    pub fn parity_check(&self) -> Vec<Vec<u32>> {
        self.space.kernel().rows().to_vec()
    }

    pub fn euclidean_dual(&self) -> LinearCode {
        LinearCode {
            space: self.space.kernel(),
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.space.contains(v)
    }

    pub fn contains_code(&self, other: &LinearCode) -> bool {
        self.space.contains_space(&other.space)
    }

    /// Whether the Euclidean dual is a subcode.
    pub fn is_dual_containing(&self) -> bool {
        self.space.contains_space(&self.space.kernel())
    }

    /// Exact minimum Hamming distance.
    ///
    /// Searches for the smallest linearly dependent set of parity-check
    /// columns of size at most `search_cap`. If that budget runs out, codes
    /// with at most [`ENUMERATION_LIMIT`] codewords are enumerated; otherwise
    /// `NotDetermined` carries the certified lower bound `search_cap + 1`.
    pub fn min_distance(&self, search_cap: usize) -> Result<usize> {
        let n = self.length();
        let k = self.dimension();
        if k == 0 {
            return Err(Error::ZeroDimension);
        }
        let singleton = n - k + 1;
        let limit = search_cap.min(n - k);
        if let Some(d) = self.smallest_dependent_columns(limit) {
            debug_assert!(d <= singleton);
            return Ok(d);
        }
        if singleton <= search_cap {
            return Ok(singleton);
        }
        if self.space.size().is_some_and(|s| s <= ENUMERATION_LIMIT) {
            return Ok(self.min_weight_by_enumeration());
        }
        Err(Error::NotDetermined {
            lower_bound: search_cap + 1,
        })
    }

    /// Minimum weight over all nonzero codewords.
    pub fn min_weight_by_enumeration(&self) -> usize {
        let mut best = usize::MAX;
        self.space.for_each_vector(|v| {
            let w = v.iter().filter(|&&x| x != 0).count();
            if w > 0 && w < best {
                best = w;
            }
        });
        best
    }

    /// Size of the smallest dependent set of columns of H, if at most `limit`.
    fn smallest_dependent_columns(&self, limit: usize) -> Option<usize> {
        let p = self.prime();
        let n = self.length();
        let h = self.parity_check();
        let m = h.len();
        let columns: Vec<Vec<u32>> = (0..n).map(|j| h.iter().map(|row| row[j]).collect()).collect();
        // best holds the smallest size found so far, or limit + 1.
        let best = AtomicUsize::new(limit + 1);
        (0..n).into_par_iter().for_each(|first| {
            let mut search = Search {
                p,
                columns: &columns,
                best: &best,
                basis: Vec::with_capacity(m),
            };
            search.visit(first);
        });
        let d = best.load(Ordering::Relaxed);
        (d <= limit).then_some(d)
    }

    fn block_shift(&self, blocks: &[(usize, usize, u32)]) -> impl Fn(&[u32]) -> Vec<u32> + '_ {
        let p = self.prime();
        let blocks = blocks.to_vec();
        move |v: &[u32]| {
            let mut w = vec![0u32; v.len()];
            for &(off, len, lambda) in &blocks {
                if len == 0 {
                    continue;
                }
                w[off] = p.mul(v[off + len - 1], lambda);
                w[off + 1..off + len].copy_from_slice(&v[off..off + len - 1]);
            }
            w
        }
    }

    fn invariant_under(&self, blocks: &[(usize, usize, u32)]) -> bool {
        let shift = self.block_shift(blocks);
        self.generator().iter().all(|r| self.contains(&shift(r)))
    }

    /// Invariance under the cyclic shift of each of `l` equal blocks.
    pub fn is_quasi_cyclic(&self, l: usize) -> Result<bool> {
        self.is_quasi_twisted(1, l)
    }

    /// Invariance under the lambda-constacyclic shift of each of `l` equal blocks.
    pub fn is_quasi_twisted(&self, lambda: u32, l: usize) -> Result<bool> {
        let n = self.length();
        if l == 0 || n % l != 0 {
            return Err(Error::LengthMismatch {
                expected: n,
                got: l,
            });
        }
        let m = n / l;
        self.is_generalized_quasi_twisted(&vec![lambda; l], &vec![m; l])
    }

    /// Invariance under independent lambda_i-constacyclic shifts of blocks
    /// of the given lengths.
    pub fn is_generalized_quasi_twisted(&self, lambdas: &[u32], block_lens: &[usize]) -> Result<bool> {
        let p = self.prime();
        if lambdas.len() != block_lens.len() {
            return Err(Error::LengthMismatch {
                expected: block_lens.len(),
                got: lambdas.len(),
            });
        }
        let total: usize = block_lens.iter().sum();
        if total != self.length() {
            return Err(Error::LengthMismatch {
                expected: self.length(),
                got: total,
            });
        }
        let mut blocks = Vec::with_capacity(lambdas.len());
        let mut off = 0;
        for (&lambda, &len) in lambdas.iter().zip(block_lens) {
            let lambda = lambda % p.get();
            if len > 0 && lambda == 0 {
                return Err(Error::NotAUnit);
            }
            blocks.push((off, len, lambda));
            off += len;
        }
        Ok(self.invariant_under(&blocks))
    }
}

/// Depth-first search over independent column sets in increasing index order.
struct Search<'a> {
    p: Prime,
    columns: &'a [Vec<u32>],
    best: &'a AtomicUsize,
    /// Echelon basis of the chosen columns: (pivot, normalized vector).
    basis: Vec<(usize, Vec<u32>)>,
}

impl Search<'_> {
    fn reduce(&self, col: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut w = col.to_vec();
        for (pivot, b) in &self.basis {
            let f = w[*pivot];
            if f != 0 {
                for (x, &y) in w.iter_mut().zip(b) {
                    *x = p.sub(*x, p.mul(f, y));
                }
            }
        }
        w
    }

    /// Tries adding column `j` to the current independent set.
    fn visit(&mut self, j: usize) {
        let size = self.basis.len() + 1;
        if size >= self.best.load(Ordering::Relaxed) {
            return;
        }
        let w = self.reduce(&self.columns[j]);
        let Some(pivot) = w.iter().position(|&x| x != 0) else {
            self.best.fetch_min(size, Ordering::Relaxed);
            return;
        };
        // Extending to size + 1 only helps if size + 1 < best.
        if size + 1 >= self.best.load(Ordering::Relaxed) {
            return;
        }
        let inv = self.p.inv(w[pivot]).expect("nonzero pivot");
        let w: Vec<u32> = w.iter().map(|&x| self.p.mul(x, inv)).collect();
        self.basis.push((pivot, w));
        for next in j + 1..self.columns.len() {
            self.visit(next);
        }
        self.basis.pop();
    }
}
