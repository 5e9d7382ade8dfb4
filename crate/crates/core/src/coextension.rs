//! Element splitting: the single-element coextension `M'_T`.
//!
//! Given a representation `A` of `M` and `T ⊆ E(M)`, append a row that is
//! `1` exactly on the columns of `T`, and a new column `a` that is `1` only
//! in that row. The column matroid of the result is `M'_T`, and `M'_T / a`
//! is `M` again.
//!
//! Sets over `M'_T` use the positions of `M` for the old elements; the new
//! element is the last position.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::matroid::{set_index, BinaryMatroid};
use crate::set::ElementSet;

pub const DEFAULT_NEW_LABEL: &str = "a";

#[derive(Clone, Debug)]
pub struct ElementSplit {
    pub result: BinaryMatroid,
    pub new_element: String,
    /// `T`, over the ground of either matroid.
    pub t_set: ElementSet,
    pub source_rank: usize,
}

impl ElementSplit {
    /// Position of the new element in `result`.
    pub fn new_index(&self) -> usize {
        self.result.len() - 1
    }

    pub fn new_set(&self) -> ElementSet {
        ElementSet::singleton(self.new_index())
    }
}

/// Appends the `T` row and the new unit column to any representation.
pub fn split_matrix(m: &Gf2Matrix, t_cols: u64, new_label: &str) -> Result<Gf2Matrix> {
    if t_cols == 0 {
        return Err(Error::EmptyT);
    }
    if m.index_of(new_label).is_some() {
        return Err(Error::LabelCollision(new_label.to_string()));
    }
    let last = m.row_count();
    m.with_row(t_cols)?.with_column(new_label, 1u64 << last)
}

/// Row masks of `split_matrix` without labels.
pub fn split_rows(rows: &[u64], width: usize, t_cols: u64) -> Vec<u64> {
    let mut out = rows.to_vec();
    out.push(t_cols | 1u64 << width);
    out
}

/// `M'_T`, built from the canonical representation of `m`.
pub fn element_split(m: &BinaryMatroid, t: ElementSet, new_label: &str) -> Result<ElementSplit> {
    if t.is_empty() {
        return Err(Error::EmptyT);
    }
    if !t.is_subset(m.full_set()) {
        return Err(Error::InvalidArguments(format!(
            "T has positions outside a ground set of size {}",
            m.len()
        )));
    }
    if m.len() >= 64 {
        return Err(Error::TooManyColumns(m.len() + 1));
    }
    let matrix = split_matrix(m.matrix(), t.bits(), new_label)?;
    let t_labels = m.labels_of(t).join(",");
    let result =
        BinaryMatroid::from_matrix(&matrix)?.with_name(format!("{}'_{{{}}}", m.name(), t_labels));
    Ok(ElementSplit {
        result,
        new_element: new_label.to_string(),
        t_set: t,
        source_rank: m.rank(),
    })
}

/// Label-based form of [`element_split`].
pub fn element_split_labels<I, S>(m: &BinaryMatroid, t: I, new_label: &str) -> Result<ElementSplit>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let t = m.set_of(t)?;
    element_split(m, t, new_label)
}

/// Recovers `N` as an element split of `N / a`.
///
/// Takes the first cocircuit `T1` of `N` containing `a`, sets
/// `T = T1 - {a}`, and checks that splitting `N / a` by `T` gives back `N`.
/// Returns `T` (as labels) and the outcome of the check.
pub fn coextension_roundtrip(n: &BinaryMatroid, a: &str) -> Result<(Vec<String>, bool)> {
    let ai = n.index_of(a)?;
    if n.is_loop(ai) || n.is_coloop(ai) {
        return Err(Error::LoopOrColoop(a.to_string()));
    }
    let t1 = *n
        .cocircuits()?
        .iter()
        .find(|c| c.contains(ai))
        .expect("a non-coloop element of a matroid with a cocircuit through it");
    let t_labels = n.labels_of(t1.remove(ai));
    let contracted = n.contract(a)?;
    let rebuilt = element_split_labels(&contracted, &t_labels, a)?;
    let ok = rebuilt.result.same_matroid(n)?;
    Ok((t_labels, ok))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CircuitTag {
    C1,
    C2,
    C3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CocircuitTag {
    Q1,
    Q2,
    Q3,
    Q4,
    Q5,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitClass {
    pub tag: CircuitTag,
    pub members: Vec<ElementSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocircuitClass {
    pub tag: CocircuitTag,
    pub members: Vec<ElementSet>,
}

/// A set of `M'_T` that failed the class assertion it was tested against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub set: Vec<String>,
    pub class: String,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct CircuitClassification {
    pub split: ElementSplit,
    /// `C1`, `C2`, `C3`, in that order.
    pub classes: Vec<CircuitClass>,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug)]
pub struct CocircuitClassification {
    pub split: ElementSplit,
    /// `Q1` through `Q5`, in that order. A cocircuit may sit in several.
    pub classes: Vec<CocircuitClass>,
    /// Cocircuits matched by more than one class.
    pub overlaps: Vec<(ElementSet, Vec<CocircuitTag>)>,
    pub violations: Vec<Violation>,
}

fn is_odd(set: ElementSet, t: ElementSet) -> bool {
    set.intersection(t).len() % 2 == 1
}

/// Sorts every circuit of `M'_T` into the classes
///
/// - `C1`: circuits of `M` meeting `T` evenly,
/// - `C2`: `C ∪ {a}` for circuits `C` of `M` meeting `T` oddly,
/// - `C3`: disjoint unions of two circuits of `M` that each meet `T` oddly
///   and contain no `C1` member,
///
/// and records every circuit that does not fit the class it lands in.
pub fn classify_circuits(m: &BinaryMatroid, t: ElementSet) -> Result<CircuitClassification> {
    if let Some(i) = (0..m.len()).find(|&i| m.is_loop(i)) {
        return Err(Error::InvalidArguments(format!(
            "circuit classification needs a loopless matroid; `{}` is a loop",
            m.ground()[i]
        )));
    }
    let split = element_split(m, t, DEFAULT_NEW_LABEL)?;
    let a = split.new_set();
    let base = m.circuits()?;
    let base_index = set_index(base);
    let even: Vec<ElementSet> = base.iter().copied().filter(|c| !is_odd(*c, t)).collect();

    let mut c1 = Vec::new();
    let mut c2 = Vec::new();
    let mut c3 = Vec::new();
    let mut violations = Vec::new();
    let mut violate = |x: ElementSet, class: &str, reason: String| {
        violations.push(Violation {
            set: split.result.labels_of(x),
            class: class.to_string(),
            reason,
        })
    };

    for &x in split.result.circuits()? {
        if !x.is_disjoint(a) {
            let rest = x.difference(a);
            if !base_index.contains_key(&rest.bits()) {
                violate(x, "C2", "removing a does not leave a circuit of M".into());
            } else if !is_odd(rest, t) {
                violate(x, "C2", "the circuit of M meets T evenly".into());
            }
            c2.push(x);
        } else if base_index.contains_key(&x.bits()) {
            if is_odd(x, t) {
                violate(x, "C1", "circuit of M meets T oddly".into());
            }
            c1.push(x);
        } else {
            let low = x.min().expect("circuits are nonempty");
            let decomposes = base.iter().any(|&first| {
                first.contains(low) && first.is_proper_subset(x) && is_odd(first, t) && {
                    let second = x.difference(first);
                    base_index.contains_key(&second.bits()) && is_odd(second, t)
                }
            });
            if !decomposes {
                violate(
                    x,
                    "C3",
                    "not a disjoint union of two circuits of M meeting T oddly".into(),
                );
            } else if even.iter().any(|e| e.is_subset(x)) {
                violate(
                    x,
                    "C3",
                    "union contains a circuit of M meeting T evenly".into(),
                );
            }
            c3.push(x);
        }
    }
    Ok(CircuitClassification {
        split,
        classes: vec![
            CircuitClass {
                tag: CircuitTag::C1,
                members: c1,
            },
            CircuitClass {
                tag: CircuitTag::C2,
                members: c2,
            },
            CircuitClass {
                tag: CircuitTag::C3,
                members: c3,
            },
        ],
        violations,
    })
}

/// Rank in `M'_T` of a subset `s` of `E(M) ∪ {a}` by cases:
/// `r(s - a) + 1` if `a ∈ s`; otherwise `r(s) + 1` if `s` contains a circuit
/// of `M` meeting `T` oddly, and `r(s)` if not.
///
/// `s` is over the ground of `M'_T`, with `a` at position `|E(M)|`.
pub fn rank_by_cases(m: &BinaryMatroid, t: ElementSet, s: ElementSet) -> Result<usize> {
    let a = ElementSet::singleton(m.len());
    if !s.is_subset(m.full_set().union(a)) {
        return Err(Error::InvalidArguments(
            "subset has positions outside E(M) ∪ {a}".into(),
        ));
    }
    if !s.is_disjoint(a) {
        return Ok(m.rank_set(s.difference(a)) + 1);
    }
    let odd_inside = m
        .circuits()?
        .iter()
        .any(|c| c.is_subset(s) && is_odd(*c, t));
    Ok(m.rank_set(s) + usize::from(odd_inside))
}

/// Label-based form of [`rank_by_cases`]; `a_label` names the new element.
pub fn rank_via_formula<I, S>(
    m: &BinaryMatroid,
    t: ElementSet,
    subset: I,
    a_label: &str,
) -> Result<usize>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut s = ElementSet::EMPTY;
    for l in subset {
        let l = l.as_ref();
        if l == a_label {
            s = s.insert(m.len());
        } else {
            s = s.insert(m.index_of(l)?);
        }
    }
    rank_by_cases(m, t, s)
}

/// Matches every cocircuit of `M'_T` against the classes
///
/// - `Q1`: `(C* - T) ∪ {a}` with `T ⊊ C*`,
/// - `Q2`: cocircuits `C*` of `M`,
/// - `Q3`: `(C* Δ T) ∪ {a}` with `1 <= |C* ∩ T| < |T|`, where `C*` contains
///   no `D* - T` for a cocircuit `D* ⊋ T`,
/// - `Q4`: `((C*_1 ∪ ... ∪ C*_k) - T) ∪ {a}` for `k >= 2` mutually disjoint
///   cocircuits meeting `T`, where the union minus `T` contains no `D* - T`
///   for a cocircuit `D* ⊋ T`,
/// - `Q5`: `T ∪ {a}`,
///
/// with `C*`, `D*` ranging over cocircuits of `M`. Requires that `T`
/// contains no cocircuit of `M`.
pub fn classify_cocircuits(m: &BinaryMatroid, t: ElementSet) -> Result<CocircuitClassification> {
    let base = m.cocircuits()?;
    if let Some(c) = base.iter().find(|c| c.is_subset(t)) {
        return Err(Error::TContainsCocircuit(m.labels_of(*c)));
    }
    let split = element_split(m, t, DEFAULT_NEW_LABEL)?;
    let a = split.new_set();
    let base_index = set_index(base);
    let over_t: Vec<ElementSet> = base
        .iter()
        .copied()
        .filter(|d| t.is_proper_subset(*d))
        .collect();
    let avoids_d_minus_t = |s: ElementSet| over_t.iter().all(|d| !d.difference(t).is_subset(s));

    let mut members: [Vec<ElementSet>; 5] = Default::default();
    let mut overlaps = Vec::new();
    let mut violations = Vec::new();

    for &y in split.result.cocircuits()? {
        let mut tags = Vec::new();
        if y.is_disjoint(a) {
            if base_index.contains_key(&y.bits()) {
                tags.push(CocircuitTag::Q2);
            }
        } else {
            let rest = y.difference(a);
            let q1 = rest.union(t);
            if rest.is_disjoint(t) && t.is_proper_subset(q1) && base_index.contains_key(&q1.bits())
            {
                tags.push(CocircuitTag::Q1);
            }
            let q3 = rest.symmetric_difference(t);
            let meet = q3.intersection(t).len();
            if base_index.contains_key(&q3.bits())
                && meet >= 1
                && meet < t.len()
                && avoids_d_minus_t(q3)
            {
                tags.push(CocircuitTag::Q3);
            }
            if rest.is_disjoint(t) && avoids_d_minus_t(rest) && union_form(base, t, rest) {
                tags.push(CocircuitTag::Q4);
            }
            if rest == t {
                tags.push(CocircuitTag::Q5);
            }
        }
        for tag in &tags {
            members[*tag as usize].push(y);
        }
        match tags.len() {
            0 => violations.push(Violation {
                set: split.result.labels_of(y),
                class: "Q1-Q5".into(),
                reason: "cocircuit of M'_T matches no class".into(),
            }),
            1 => {}
            _ => overlaps.push((y, tags)),
        }
    }
    let tags = [
        CocircuitTag::Q1,
        CocircuitTag::Q2,
        CocircuitTag::Q3,
        CocircuitTag::Q4,
        CocircuitTag::Q5,
    ];
    Ok(CocircuitClassification {
        split,
        classes: tags
            .into_iter()
            .zip(members)
            .map(|(tag, members)| CocircuitClass { tag, members })
            .collect(),
        overlaps,
        violations,
    })
}

/// Whether `target` (disjoint from `T`) equals `(C*_1 ∪ ... ∪ C*_k) - T` for
/// some `k >= 2` mutually disjoint cocircuits each meeting `T`.
fn union_form(base: &[ElementSet], t: ElementSet, target: ElementSet) -> bool {
    let within = target.union(t);
    let candidates: Vec<ElementSet> = base
        .iter()
        .copied()
        .filter(|c| c.is_subset(within) && !c.is_disjoint(t))
        .collect();
    // every candidate has an element outside T, since T holds no cocircuit
    fn cover(
        cands: &[ElementSet],
        t: ElementSet,
        left: ElementSet,
        used: ElementSet,
        k: usize,
    ) -> bool {
        let Some(x) = left.min() else {
            return k >= 2;
        };
        cands.iter().any(|&c| {
            c.contains(x)
                && c.is_disjoint(used)
                && c.difference(t).is_subset(left)
                && cover(cands, t, left.difference(c), used.union(c), k + 1)
        })
    }
    cover(&candidates, t, target, ElementSet::EMPTY, 0)
}
