//! Reference implementations for tests: dense 0/1 elimination and subset
//! enumeration, sharing no code with the library's bitmask paths.

#![allow(dead_code)]

use coext::BinaryMatroid;

/// Columns of `m`'s representation as dense vectors.
pub fn columns(m: &BinaryMatroid) -> Vec<Vec<u8>> {
    let a = m.matrix();
    (0..a.width())
        .map(|j| (0..a.row_count()).map(|i| a.get(i, j) as u8).collect())
        .collect()
}

/// Rank of the chosen columns by Gaussian elimination on a dense copy.
pub fn dense_rank(cols: &[Vec<u8>], chosen: &[usize]) -> usize {
    let mut vs: Vec<Vec<u8>> = chosen.iter().map(|&j| cols[j].clone()).collect();
    let height = cols.first().map_or(0, Vec::len);
    let mut rank = 0;
    for pivot_row in 0..height {
        let Some(p) = (rank..vs.len()).find(|&k| vs[k][pivot_row] == 1) else {
            continue;
        };
        vs.swap(rank, p);
        let pivot = vs[rank].clone();
        for (k, v) in vs.iter_mut().enumerate() {
            if k != rank && v[pivot_row] == 1 {
                for (x, y) in v.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

pub struct Oracle {
    pub n: usize,
    /// Rank of every subset, indexed by mask.
    pub rank: Vec<usize>,
}

impl Oracle {
    pub fn new(m: &BinaryMatroid) -> Self {
        let cols = columns(m);
        let n = cols.len();
        assert!(n <= 20, "oracle is exhaustive");
        let rank = (0..1u64 << n)
            .map(|s| dense_rank(&cols, &members(s, n)))
            .collect();
        Oracle { n, rank }
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn r(&self, s: u64) -> usize {
        self.rank[s as usize]
    }

    /// Minimal dependent sets, as sorted masks.
    pub fn circuits(&self) -> Vec<u64> {
        let mut out: Vec<u64> = (1..=self.full())
            .filter(|&s| {
                let k = s.count_ones() as usize;
                self.r(s) < k
                    && members(s, self.n)
                        .iter()
                        .all(|&i| self.r(s & !(1 << i)) == k - 1)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Minimal sets whose complement has lower rank.
    pub fn cocircuits(&self) -> Vec<u64> {
        let full = self.full();
        let r = self.r(full);
        let mut out: Vec<u64> = (1..=full)
            .filter(|&x| {
                self.r(full & !x) < r
                    && members(x, self.n)
                        .iter()
                        .all(|&i| self.r((full & !x) | 1 << i) == r)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The least `k` with a `k`-separation, if any.
    pub fn connectivity(&self) -> Option<usize> {
        let full = self.full();
        let r = self.r(full);
        (1..full)
            .filter_map(|a| {
                let b = full & !a;
                let lambda = self.r(a) + self.r(b) - r;
                let side = a.count_ones().min(b.count_ones()) as usize;
                (lambda + 1 <= side).then_some(lambda + 1)
            })
            .min()
    }

    pub fn is_n_connected(&self, n: usize) -> bool {
        self.connectivity().map_or(true, |k| k >= n)
    }
}

/// Masks of `m`'s circuits, sorted numerically.
pub fn masks(sets: &[coext::ElementSet]) -> Vec<u64> {
    let mut v: Vec<u64> = sets.iter().map(|s| s.bits()).collect();
    v.sort_unstable();
    v
}

pub mod strategies {
    use coext::{BinaryMatroid, Gf2Matrix};
    use proptest::prelude::*;

    /// Binary matroids on `1..=max_width` elements from random 0/1 rows.
    pub fn matroid(max_width: usize, max_rows: usize) -> impl Strategy<Value = BinaryMatroid> {
        (1..=max_width, 1..=max_rows).prop_flat_map(|(w, r)| {
            proptest::collection::vec(0u64..(1 << w), r).prop_map(move |rows| {
                let labels = (0..w).map(|i| format!("e{i}")).collect();
                BinaryMatroid::from_matrix(&Gf2Matrix::from_bits(labels, rows).unwrap()).unwrap()
            })
        })
    }

    /// A matroid together with a nonempty mask over its ground set.
    pub fn matroid_and_subset(
        max_width: usize,
        max_rows: usize,
    ) -> impl Strategy<Value = (BinaryMatroid, u64)> {
        matroid(max_width, max_rows).prop_flat_map(|m| {
            let n = m.len();
            (Just(m), 1u64..(1 << n))
        })
    }
}
