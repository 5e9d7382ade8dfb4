//! Dense linear algebra over GF(2).
//!
//! Rows are stored as `u64` masks: bit `j` of a row is the entry in column
//! `j`. Matrices carry a label per column, so a matrix is at most 64 columns
//! wide. The number of rows is unbounded.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on `width - rank` for null-space enumeration.
pub const DEFAULT_CORANK_CAP: usize = 20;

/// A vector over GF(2) with at most 64 coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2Vector {
    bits: u64,
    width: usize,
}

impl Gf2Vector {
    /// Bits at positions `>= width` are dropped.
    pub fn new(bits: u64, width: usize) -> Self {
        assert!(width <= 64, "a Gf2Vector holds at most 64 coordinates");
        Gf2Vector {
            bits: bits & mask(width),
            width,
        }
    }

    pub fn zero(width: usize) -> Self {
        Gf2Vector::new(0, width)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.width && (self.bits >> i) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn dot(&self, other: &Gf2Vector) -> bool {
        (self.bits & other.bits).count_ones() % 2 == 1
    }
}

impl std::ops::Add for Gf2Vector {
    type Output = Gf2Vector;

    fn add(self, rhs: Gf2Vector) -> Gf2Vector {
        debug_assert_eq!(self.width, rhs.width);
        Gf2Vector::new(self.bits ^ rhs.bits, self.width.max(rhs.width))
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub(crate) fn mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Rank of a family of row masks, by insertion into an xor basis keyed on
/// the leading bit.
pub fn rank_of_rows<I: IntoIterator<Item = u64>>(rows: I) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in rows {
        while v != 0 {
            let lead = 63 - v.leading_zeros() as usize;
            if basis[lead] == 0 {
                basis[lead] = v;
                rank += 1;
                break;
            }
            v ^= basis[lead];
        }
    }
    rank
}

/// A matrix over GF(2) with labeled columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: Vec<u64>,
    labels: Vec<String>,
}

impl Gf2Matrix {
    /// Builds a matrix from row masks. Labels must be distinct and there
    /// must be at most 64 of them.
    pub fn from_bits<S: Into<String>>(labels: Vec<S>, rows: Vec<u64>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > 64 {
            return Err(Error::TooManyColumns(labels.len()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let m = mask(labels.len());
        for &r in &rows {
            if r & !m != 0 {
                return Err(Error::WidthMismatch {
                    expected: labels.len(),
                    found: 64 - r.leading_zeros() as usize,
                });
            }
        }
        Ok(Gf2Matrix { rows, labels })
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows<S: Into<String>>(labels: Vec<S>, rows: &[Vec<u8>]) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let width = labels.len();
        let mut masks = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    found: row.len(),
                });
            }
            let bits =
                row.iter().enumerate().fold(
                    0u64,
                    |acc, (j, &x)| if x & 1 == 1 { acc | 1 << j } else { acc },
                );
            masks.push(bits);
        }
        Gf2Matrix::from_bits(labels, masks)
    }

    /// `rows x width` zero matrix with labels `"1"..="width"`.
    pub fn zero(rows: usize, width: usize) -> Self {
        let labels = (1..=width).map(|i| i.to_string()).collect();
        Gf2Matrix::from_bits(labels, vec![0; rows]).expect("numeric labels are distinct")
    }

    /// `n x n` identity with labels `"1"..="n"`.
    pub fn identity(n: usize) -> Self {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Gf2Matrix::from_bits(labels, (0..n).map(|i| 1u64 << i).collect())
            .expect("numeric labels are distinct")
    }

    pub fn width(&self) -> usize {
        self.labels.len()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> Gf2Vector {
        Gf2Vector::new(self.rows[i], self.width())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        (self.rows[row] >> col) & 1 == 1
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Column mask of a set of labels.
    pub fn columns_of<I, S>(&self, labels: I) -> Result<u64>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u64;
        for l in labels {
            let l = l.as_ref();
            let j = self
                .index_of(l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            bits |= 1 << j;
        }
        Ok(bits)
    }

    /// Reduced row echelon form with zero rows removed, and the pivot
    /// column of each remaining row.
    ///
    /// Pivots are taken left to right, so the pivot list is increasing.
    pub fn rref(&self) -> (Gf2Matrix, Vec<usize>) {
        let (rows, pivots) = rref_rows(&self.rows, self.width());
        (
            Gf2Matrix {
                rows,
                labels: self.labels.clone(),
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows.iter().copied())
    }

    /// Rank of the columns selected by `cols`.
    pub fn column_rank_of_mask(&self, cols: u64) -> usize {
        rank_of_rows(self.rows.iter().map(|r| r & cols))
    }

    /// Rank of the submatrix formed by the labeled columns.
    pub fn column_rank_of_subset<I, S>(&self, labels: I) -> Result<usize>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(self.column_rank_of_mask(self.columns_of(labels)?))
    }

    /// Transpose, with columns labeled `"1"..="rows"`. Needs at most 64 rows.
    pub fn transpose(&self) -> Result<Gf2Matrix> {
        if self.rows.len() > 64 {
            return Err(Error::TooManyColumns(self.rows.len()));
        }
        let rows = (0..self.width())
            .map(|j| {
                self.rows
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, r)| acc | ((r >> j) & 1) << i)
            })
            .collect();
        let labels = (1..=self.rows.len()).map(|i| i.to_string()).collect();
        Gf2Matrix::from_bits(labels, rows)
    }

    /// `self * x`, one coordinate per row. Needs at most 64 rows.
    pub fn mul_vec(&self, x: &Gf2Vector) -> Gf2Vector {
        assert!(self.rows.len() <= 64);
        let bits = self.rows.iter().enumerate().fold(0u64, |acc, (i, r)| {
            acc | (((r & x.bits).count_ones() & 1) as u64) << i
        });
        Gf2Vector::new(bits, self.rows.len())
    }

    /// Enumerates the null space `{x : self * x = 0}`.
    pub fn null_space(&self) -> Result<NullSpace> {
        self.null_space_with_cap(DEFAULT_CORANK_CAP)
    }

    pub fn null_space_with_cap(&self, cap: usize) -> Result<NullSpace> {
        NullSpace::new(&self.rows, self.width(), cap)
    }

    /// Copy with one more row.
    pub fn with_row(&self, row: u64) -> Result<Gf2Matrix> {
        let mut rows = self.rows.clone();
        rows.push(row);
        Gf2Matrix::from_bits(self.labels.clone(), rows)
    }

    /// Copy with one more column (appended last) whose entries are given
    /// by bit `i` of `entries` for row `i`.
    pub fn with_column(&self, label: &str, entries: u64) -> Result<Gf2Matrix> {
        if self.index_of(label).is_some() {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        let j = self.width();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &r)| r | ((entries >> i) & 1) << j)
            .collect();
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        Gf2Matrix::from_bits(labels, rows)
    }

    /// Copy without column `j`; later columns shift left.
    pub fn without_column(&self, j: usize) -> Gf2Matrix {
        let rows = self.rows.iter().map(|&r| remove_bit(r, j)).collect();
        let mut labels = self.labels.clone();
        labels.remove(j);
        Gf2Matrix { rows, labels }
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.labels.join(" "))?;
        for i in 0..self.rows.len() {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Drops bit `j` from `x`, shifting higher bits down by one.
pub(crate) fn remove_bit(x: u64, j: usize) -> u64 {
    let low = x & mask(j);
    let high = if j >= 63 { 0 } else { (x >> (j + 1)) << j };
    low | high
}

pub(crate) fn rref_rows(rows: &[u64], width: usize) -> (Vec<u64>, Vec<usize>) {
    let mut rows = rows.to_vec();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let bit = 1u64 << col;
        let Some(p) = (next..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(next, p);
        let pivot_row = rows[next];
        for (i, r) in rows.iter_mut().enumerate() {
            if i != next && *r & bit != 0 {
                *r ^= pivot_row;
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    (rows, pivots)
}

/// Null-space enumerator.
///
/// Visits all `2^(width - rank)` vectors exactly once, in binary reflected
/// Gray-code order over the free columns: step `k` flips the basis vector of
/// the free column indexed by the lowest set bit of `k`, where free columns
/// are indexed in increasing column order. The first vector is zero.
#[derive(Clone, Debug)]
pub struct NullSpace {
    basis: Vec<u64>,
    width: usize,
    current: u64,
    step: u64,
    total: u64,
}

impl NullSpace {
    fn new(rows: &[u64], width: usize, cap: usize) -> Result<Self> {
        let (reduced, pivots) = rref_rows(rows, width);
        let corank = width - pivots.len();
        if corank > cap {
            return Err(Error::CorankTooLarge { corank, cap });
        }
        let pivot_mask = pivots.iter().fold(0u64, |m, &p| m | 1 << p);
        let basis = (0..width)
            .filter(|j| pivot_mask & (1 << j) == 0)
            .map(|f| {
                reduced
                    .iter()
                    .zip(&pivots)
                    .filter(|(r, _)| (*r >> f) & 1 == 1)
                    .fold(1u64 << f, |v, (_, &p)| v | 1 << p)
            })
            .collect::<Vec<_>>();
        Ok(NullSpace {
            total: 1u64 << basis.len(),
            basis,
            width,
            current: 0,
            step: 0,
        })
    }

    /// Basis vectors, one per free column.
    pub fn basis(&self) -> impl Iterator<Item = Gf2Vector> + '_ {
        self.basis.iter().map(|&b| Gf2Vector::new(b, self.width))
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Raw masks instead of `Gf2Vector`s.
    pub(crate) fn into_masks(self) -> impl Iterator<Item = u64> {
        let mut inner = self;
        std::iter::from_fn(move || inner.next_mask())
    }

    fn next_mask(&mut self) -> Option<u64> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            self.current ^= self.basis[self.step.trailing_zeros() as usize];
        }
        self.step += 1;
        Some(self.current)
    }
}

impl Iterator for NullSpace {
    type Item = Gf2Vector;

    fn next(&mut self) -> Option<Gf2Vector> {
        let w = self.width;
        self.next_mask().map(|b| Gf2Vector::new(b, w))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}
