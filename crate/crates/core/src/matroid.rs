//! Binary matroids given by a representation over GF(2).

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{rank_of_rows, remove_bit, Gf2Matrix, DEFAULT_CORANK_CAP};
use crate::set::ElementSet;

/// A nonnegative integer or infinity, for girths and connectivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extended {
    Finite(usize),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extended::Finite(k) => Some(k),
            Extended::Infinite => None,
        }
    }

    /// `self >= k`, with infinity above everything.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Extended::Finite(v) => v >= k,
            Extended::Infinite => true,
        }
    }
}

impl Ord for Extended {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Extended::Finite(a), Extended::Finite(b)) => a.cmp(b),
            (Extended::Finite(_), Extended::Infinite) => Ordering::Less,
            (Extended::Infinite, Extended::Finite(_)) => Ordering::Greater,
            (Extended::Infinite, Extended::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(k) => write!(f, "{k}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(k) => s.serialize_u64(*k as u64),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

/// What a witness subset demonstrates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Circuit,
    Cocircuit,
    Dependent,
    Separating,
    /// A set meeting every circuit with odd intersection with T.
    Blocking,
}

/// A labeled subset of some matroid's ground set, with its role.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubsetWitness {
    pub kind: WitnessKind,
    pub elements: Vec<String>,
}

/// A binary matroid: the column matroid of a GF(2) matrix.
///
/// The representation is kept in reduced row echelon form without zero rows,
/// so the row count is the rank. Circuit and cocircuit lists are computed on
/// first request and cached.
#[derive(Clone)]
pub struct BinaryMatroid {
    name: String,
    matrix: Gf2Matrix,
    pivots: Vec<usize>,
    circuits: OnceLock<Vec<ElementSet>>,
    cocircuits: OnceLock<Vec<ElementSet>>,
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryMatroid")
            .field("name", &self.name)
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl BinaryMatroid {
    pub fn from_matrix(m: &Gf2Matrix) -> Result<Self> {
        let (matrix, pivots) = m.rref();
        Ok(BinaryMatroid {
            name: "M".to_string(),
            matrix,
            pivots,
            circuits: OnceLock::new(),
            cocircuits: OnceLock::new(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Canonical representation.
    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    pub fn ground(&self) -> &[String] {
        self.matrix.labels()
    }

    pub fn len(&self) -> usize {
        self.matrix.width()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn rank(&self) -> usize {
        self.matrix.row_count()
    }

    pub fn corank(&self) -> usize {
        self.len() - self.rank()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.matrix
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn set_of<I, S>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.matrix.columns_of(labels).map(ElementSet::from_bits)
    }

    pub fn labels_of(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|i| self.ground()[i].clone()).collect()
    }

    pub fn rank_set(&self, set: ElementSet) -> usize {
        rank_of_rows(self.matrix.rows().iter().map(|r| r & set.bits()))
    }

    pub fn rank_of<I, S>(&self, labels: I) -> Result<usize>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(self.rank_set(self.set_of(labels)?))
    }

    pub fn is_loop(&self, i: usize) -> bool {
        self.matrix.rows().iter().all(|r| (r >> i) & 1 == 0)
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        self.rank_set(self.full_set().remove(i)) < self.rank()
    }

    /// All circuits, sorted by size and then lexicographically.
    ///
    /// The supports of null-space vectors are the cycles of the matroid; a
    /// cycle is a circuit exactly when its columns have nullity one.
    pub fn circuits(&self) -> Result<&[ElementSet]> {
        self.circuits_with_cap(DEFAULT_CORANK_CAP)
    }

    pub fn circuits_with_cap(&self, cap: usize) -> Result<&[ElementSet]> {
        if let Some(c) = self.circuits.get() {
            return Ok(c);
        }
        let space = self.matrix.null_space_with_cap(cap)?;
        Ok(self.circuits.get_or_init(|| {
            let mut out: Vec<ElementSet> = space
                .into_masks()
                .map(ElementSet::from_bits)
                .filter(|s| !s.is_empty() && self.rank_set(*s) + 1 == s.len())
                .collect();
            out.sort();
            out
        }))
    }

    /// The dual on the same labeled ground set: `[I | D]` becomes `[D^T | I]`
    /// with columns kept in place.
    pub fn dual(&self) -> BinaryMatroid {
        let pivot_set = ElementSet::from_indices(self.pivots.iter().copied());
        let rows = (0..self.len())
            .filter(|&f| !pivot_set.contains(f))
            .map(|f| {
                self.matrix
                    .rows()
                    .iter()
                    .zip(&self.pivots)
                    .filter(|(r, _)| (*r >> f) & 1 == 1)
                    .fold(1u64 << f, |v, (_, &p)| v | 1 << p)
            })
            .collect();
        let m = Gf2Matrix::from_bits(self.ground().to_vec(), rows)
            .expect("dual keeps the labels of a valid matrix");
        let name = match self.name.strip_suffix('*') {
            Some(base) => base.to_string(),
            None => format!("{}*", self.name),
        };
        BinaryMatroid::from_matrix(&m)
            .expect("labels are distinct")
            .with_name(name)
    }

    pub fn cocircuits(&self) -> Result<&[ElementSet]> {
        self.cocircuits_with_cap(DEFAULT_CORANK_CAP)
    }

    pub fn cocircuits_with_cap(&self, cap: usize) -> Result<&[ElementSet]> {
        if let Some(c) = self.cocircuits.get() {
            return Ok(c);
        }
        let list = self.dual().circuits_with_cap(cap)?.to_vec();
        Ok(self.cocircuits.get_or_init(|| list))
    }

    pub fn girth(&self) -> Result<Extended> {
        Ok(smallest(self.circuits()?))
    }

    pub fn cogirth(&self) -> Result<Extended> {
        Ok(smallest(self.cocircuits()?))
    }

    pub fn delete(&self, label: &str) -> Result<BinaryMatroid> {
        let j = self.index_of(label)?;
        let m = self.matrix.without_column(j);
        Ok(BinaryMatroid::from_matrix(&m)?.with_name(format!("{}\\{}", self.name, label)))
    }

    /// Contraction. A loop is deleted instead.
    pub fn contract(&self, label: &str) -> Result<BinaryMatroid> {
        let j = self.index_of(label)?;
        let rows = self.matrix.rows();
        let Some(p) = rows.iter().position(|r| (r >> j) & 1 == 1) else {
            return Ok(self
                .delete(label)?
                .with_name(format!("{}/{}", self.name, label)));
        };
        let pivot_row = rows[p];
        let reduced: Vec<u64> = rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != p)
            .map(|(_, &r)| if (r >> j) & 1 == 1 { r ^ pivot_row } else { r })
            .map(|r| remove_bit(r, j))
            .collect();
        let mut labels = self.ground().to_vec();
        labels.remove(j);
        let m = Gf2Matrix::from_bits(labels, reduced)?;
        Ok(BinaryMatroid::from_matrix(&m)?.with_name(format!("{}/{}", self.name, label)))
    }

    /// Labeled equality: same ground labels and the same circuits.
    pub fn same_matroid(&self, other: &BinaryMatroid) -> Result<bool> {
        if self.len() != other.len() || self.rank() != other.rank() {
            return Ok(false);
        }
        let mut map = Vec::with_capacity(other.len());
        for l in other.ground() {
            match self.matrix.index_of(l) {
                Some(i) => map.push(i),
                None => return Ok(false),
            }
        }
        let mut mapped: Vec<ElementSet> = other
            .circuits()?
            .iter()
            .map(|c| c.iter().map(|i| map[i]).collect())
            .collect();
        mapped.sort();
        Ok(mapped == self.circuits()?)
    }
}

fn smallest(sets: &[ElementSet]) -> Extended {
    sets.iter()
        .map(|s| s.len())
        .min()
        .map_or(Extended::Infinite, Extended::Finite)
}

/// Direct sum; the label sets must be disjoint.
pub fn direct_sum(a: &BinaryMatroid, b: &BinaryMatroid) -> Result<BinaryMatroid> {
    let shift = a.len();
    let mut labels = a.ground().to_vec();
    labels.extend_from_slice(b.ground());
    let mut rows = a.matrix().rows().to_vec();
    rows.extend(b.matrix().rows().iter().map(|r| r << shift));
    if labels.len() > 64 {
        return Err(Error::TooManyColumns(labels.len()));
    }
    let m = Gf2Matrix::from_bits(labels, rows)?;
    Ok(BinaryMatroid::from_matrix(&m)?.with_name(format!("{}+{}", a.name(), b.name())))
}

/// Index lookup for a list of sets.
pub(crate) fn set_index(sets: &[ElementSet]) -> HashMap<u64, usize> {
    sets.iter()
        .enumerate()
        .map(|(i, s)| (s.bits(), i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn sets(m: &BinaryMatroid, groups: &[&[&str]]) -> Vec<ElementSet> {
        let mut v: Vec<_> = groups.iter().map(|g| m.set_of(g.iter()).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn zero_row_matroid_is_all_loops() {
        let m = BinaryMatroid::from_matrix(&Gf2Matrix::zero(0, 3)).unwrap();
        assert_eq!(m.rank(), 0);
        assert!((0..3).all(|i| m.is_loop(i)));
        assert_eq!(m.circuits().unwrap().len(), 3);
        assert!(m.cocircuits().unwrap().is_empty());
        assert_eq!(m.cogirth().unwrap(), Extended::Infinite);
    }

    #[test]
    fn free_matroid() {
        let m = BinaryMatroid::from_matrix(&Gf2Matrix::identity(3)).unwrap();
        assert!(m.circuits().unwrap().is_empty());
        assert_eq!(m.girth().unwrap(), Extended::Infinite);
        let d = m.dual();
        assert_eq!(d.rank(), 0);
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn fano_circuits() {
        let f = catalog::fano();
        assert_eq!(f.rank(), 3);
        let lines: &[&[&str]] = &[
            &["1", "2", "5"],
            &["1", "3", "7"],
            &["2", "3", "6"],
            &["3", "4", "5"],
            &["1", "4", "6"],
            &["2", "4", "7"],
            &["5", "6", "7"],
        ];
        let mut expected = sets(&f, lines);
        let full = f.full_set();
        let mut complements: Vec<_> = expected.iter().map(|l| full.difference(*l)).collect();
        complements.sort();
        expected.extend(complements.iter().copied());
        assert_eq!(f.circuits().unwrap(), &expected[..]);
        assert_eq!(f.cocircuits().unwrap(), &complements[..]);
        assert!(f
            .cocircuits()
            .unwrap()
            .contains(&f.set_of(["3", "4", "6", "7"]).unwrap()));
        assert_eq!(f.girth().unwrap(), Extended::Finite(3));
        assert_eq!(f.cogirth().unwrap(), Extended::Finite(4));
    }

    #[test]
    fn fano_ranks() {
        let f = catalog::fano();
        assert_eq!(f.rank_of(["1", "2", "5"]).unwrap(), 2);
        assert_eq!(f.rank_of(f.ground().to_vec()).unwrap(), 3);
        assert_eq!(f.rank_of(Vec::<String>::new()).unwrap(), 0);
        assert_eq!(f.rank_of(["x"]), Err(Error::UnknownLabel("x".into())));
    }

    #[test]
    fn dual_of_fano() {
        let f = catalog::fano();
        let d = f.dual();
        assert_eq!(d.rank(), 4);
        assert_eq!(d.ground(), f.ground());
        assert_eq!(d.circuits().unwrap(), f.cocircuits().unwrap());
        assert!(d.dual().same_matroid(&f).unwrap());
        assert_eq!(d.name(), "F7*");
        assert_eq!(d.dual().name(), "F7");
    }

    #[test]
    fn k4_girths() {
        let m = catalog::matroid("M(K4)").unwrap();
        assert_eq!(m.circuits().unwrap().len(), 7);
        assert_eq!(m.cocircuits().unwrap().len(), 7);
        assert_eq!(m.girth().unwrap(), Extended::Finite(3));
        assert_eq!(m.cogirth().unwrap(), Extended::Finite(3));
    }

    #[test]
    fn contract_fano_element() {
        let f = catalog::fano();
        let c = f.contract("1").unwrap();
        assert_eq!(c.rank(), 2);
        assert_eq!(c.len(), 6);
        // lines through 1 become parallel pairs
        for pair in [["2", "5"], ["3", "7"], ["4", "6"]] {
            assert!(c.circuits().unwrap().contains(&c.set_of(pair).unwrap()));
        }
        let d = f.delete("1").unwrap();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.len(), 6);
    }

    #[test]
    fn contract_loop_deletes() {
        let m = Gf2Matrix::from_rows(vec!["x", "y"], &[vec![1, 0]]).unwrap();
        let m = BinaryMatroid::from_matrix(&m).unwrap();
        assert!(m.is_loop(1));
        let c = m.contract("y").unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.ground(), &["x".to_string()]);
        assert!(m.is_coloop(0));
    }

    #[test]
    fn same_matroid_ignores_column_order() {
        let a = catalog::fano();
        let cols: Vec<usize> = vec![6, 2, 0, 4, 1, 5, 3];
        let labels: Vec<String> = cols.iter().map(|&j| a.ground()[j].clone()).collect();
        let rows: Vec<u64> = a
            .matrix()
            .rows()
            .iter()
            .map(|r| {
                cols.iter()
                    .enumerate()
                    .fold(0, |acc, (k, &j)| acc | ((r >> j) & 1) << k)
            })
            .collect();
        let b = BinaryMatroid::from_matrix(&Gf2Matrix::from_bits(labels, rows).unwrap()).unwrap();
        assert!(a.same_matroid(&b).unwrap());
        assert!(!a.same_matroid(&a.dual()).unwrap());
    }

    #[test]
    fn direct_sum_ranks_add() {
        let a = catalog::fano();
        let b = BinaryMatroid::from_matrix(
            &Gf2Matrix::from_rows(vec!["x", "y", "z"], &[vec![1, 1, 1]]).unwrap(),
        )
        .unwrap();
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!(s.rank(), 4);
        assert_eq!(s.circuits().unwrap().len(), 14 + 3);
    }

    #[test]
    fn extended_order() {
        assert!(Extended::Finite(100) < Extended::Infinite);
        assert!(Extended::Finite(2) < Extended::Finite(3));
        assert!(Extended::Infinite.at_least(1000));
        assert_eq!(Extended::Infinite.to_string(), "inf");
    }
}
