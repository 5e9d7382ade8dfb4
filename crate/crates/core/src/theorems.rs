//! Executable forms of the connectivity criteria for `M'_T`, and the sweep
//! that checks they agree.
//!
//! For an `n`-connected binary matroid `M` with `|E(M)| >= 2n - 2` and
//! `|T| = n - 1`, the following are checked against each other on every `T`:
//!
//! - (i) `M'_T` is `n`-connected,
//! - (ii) `|Q| >= 2|Q ∩ T|` for every cocircuit `Q` of `M` meeting `T`,
//! - (iii) for every `A ⊆ E(M)` with `|A| = n - 2` some circuit of `M`
//!   avoiding `A` meets `T` in an odd number of elements.
//!
//! For `n <= 4` the weaker hypothesis "every cocircuit containing `T` has at
//! least `2n - 2` elements" must imply (i).

use rayon::prelude::*;
use serde::Serialize;

use crate::coextension::{element_split, DEFAULT_NEW_LABEL};
use crate::connectivity::{check_size_bound, find_k_separation, is_n_connected, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::matroid::{BinaryMatroid, SubsetWitness, WitnessKind};
use crate::set::{k_subsets, ElementSet};

/// Condition (ii). On failure returns the first violating cocircuit in
/// the sorted cocircuit order.
pub fn check_cocircuit_condition(
    m: &BinaryMatroid,
    t: ElementSet,
) -> Result<(bool, Option<ElementSet>)> {
    if t.is_empty() {
        return Err(Error::EmptyT);
    }
    let bad = m
        .cocircuits()?
        .iter()
        .copied()
        .find(|q| !q.is_disjoint(t) && q.len() < 2 * q.intersection(t).len());
    Ok((bad.is_none(), bad))
}

/// Condition (iii). On failure returns the first blocking `A` in
/// lexicographic order of `(n-2)`-subsets.
pub fn check_circuit_condition(
    m: &BinaryMatroid,
    t: ElementSet,
    n: usize,
) -> Result<(bool, Option<ElementSet>)> {
    if n < 2 || t.len() + 1 != n {
        return Err(Error::InvalidArguments(format!(
            "need n >= 2 and |T| = n-1, got n={n}, |T|={}",
            t.len()
        )));
    }
    if m.len() < 2 * n - 2 {
        return Err(Error::InvalidArguments(format!(
            "|E|={} < 2n-2={}",
            m.len(),
            2 * n - 2
        )));
    }
    let odd: Vec<ElementSet> = m
        .circuits()?
        .iter()
        .copied()
        .filter(|c| c.intersection(t).len() % 2 == 1)
        .collect();
    let blocking = k_subsets(m.len(), n - 2).find(|a| odd.iter().all(|c| !c.is_disjoint(*a)));
    Ok((blocking.is_none(), blocking))
}

/// The weak sufficient condition for `n ∈ {2, 3, 4}`: every cocircuit
/// containing `T` has at least `2n - 2` elements.
pub fn check_weak_condition(m: &BinaryMatroid, t: ElementSet, n: usize) -> Result<bool> {
    if !(2..=4).contains(&n) {
        return Err(Error::InvalidArguments(format!(
            "the weak condition applies for n in {{2,3,4}}, got n={n}"
        )));
    }
    if t.len() + 1 != n {
        return Err(Error::InvalidArguments(format!(
            "|T|={} != n-1={}",
            t.len(),
            n - 1
        )));
    }
    Ok(m.cocircuits()?
        .iter()
        .filter(|q| t.is_subset(**q))
        .all(|q| q.len() >= 2 * n - 2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub matroid: String,
    pub n: usize,
    pub t_set: Vec<String>,
    pub stmt_i: bool,
    pub stmt_ii: bool,
    pub stmt_iii: bool,
    pub weak: Option<bool>,
    pub equivalent: bool,
    pub witnesses: Vec<SubsetWitness>,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sweep {
    pub matroid: String,
    pub n: usize,
    pub rows: Vec<VerificationReport>,
    pub violations: Vec<String>,
}

impl Sweep {
    /// True when no row and no sweep-level check reported a violation.
    pub fn clean(&self) -> bool {
        self.violations.is_empty() && self.rows.iter().all(|r| r.violations.is_empty())
    }

    pub fn violation_count(&self) -> usize {
        self.violations.len() + self.rows.iter().map(|r| r.violations.len()).sum::<usize>()
    }
}

/// One row of the sweep.
pub fn verify_one(m: &BinaryMatroid, n: usize, t: ElementSet) -> Result<VerificationReport> {
    let split = element_split(m, t, DEFAULT_NEW_LABEL)?;
    let n_split = &split.result;
    let stmt_i = is_n_connected(n_split, n)?;
    let (stmt_ii, bad_q) = check_cocircuit_condition(m, t)?;
    let (stmt_iii, blocking) = check_circuit_condition(m, t, n)?;
    let weak = if n <= 4 {
        Some(check_weak_condition(m, t, n)?)
    } else {
        None
    };

    let mut witnesses = Vec::new();
    let mut violations = Vec::new();
    if !stmt_i {
        for k in 1..n {
            if let Some(sep) = find_k_separation(n_split, k)? {
                witnesses.push(SubsetWitness {
                    kind: WitnessKind::Separating,
                    elements: n_split.labels_of(sep.side_a),
                });
                break;
            }
        }
    }
    if let Some(q) = bad_q {
        witnesses.push(SubsetWitness {
            kind: WitnessKind::Cocircuit,
            elements: m.labels_of(q),
        });
        // (Q Δ T) ∪ {a} must hold a cocircuit of M'_T with fewer than n elements
        let around = q.symmetric_difference(t).union(split.new_set());
        let small = n_split
            .cocircuits()?
            .iter()
            .any(|x| x.is_subset(around) && x.len() < n);
        if !small {
            violations.push(format!(
                "(Q Δ T) ∪ {{a}} holds no cocircuit of M'_T smaller than {n} for Q={{{}}}",
                m.labels_of(q).join(",")
            ));
        }
    }
    if let Some(a) = blocking {
        witnesses.push(SubsetWitness {
            kind: WitnessKind::Blocking,
            elements: m.labels_of(a),
        });
    }

    if let Some(c) = m.cocircuits()?.iter().find(|c| c.is_subset(t)) {
        violations.push(format!(
            "T contains the cocircuit {{{}}} of M",
            m.labels_of(*c).join(",")
        ));
    }
    if n_split.rank() != m.rank() + 1 {
        violations.push(format!(
            "r(M'_T)={} != r(M)+1={}",
            n_split.rank(),
            m.rank() + 1
        ));
    }
    let equivalent = stmt_i == stmt_ii && stmt_ii == stmt_iii;
    if !equivalent {
        violations.push(format!(
            "statements disagree: (i)={stmt_i} (ii)={stmt_ii} (iii)={stmt_iii}"
        ));
    }
    if weak == Some(true) && !stmt_i {
        violations.push("weak condition holds but M'_T is not n-connected".into());
    }
    Ok(VerificationReport {
        matroid: m.name().to_string(),
        n,
        t_set: m.labels_of(t),
        stmt_i,
        stmt_ii,
        stmt_iii,
        weak,
        equivalent,
        witnesses,
        violations,
    })
}

/// Runs [`verify_one`] on every `T` with `|T| = n - 1`, in lexicographic
/// order of `T`. Refuses matroids that are not `n`-connected.
pub fn verify_equivalence(m: &BinaryMatroid, n: usize) -> Result<Sweep> {
    verify_equivalence_with_jobs(m, n, None)
}

/// As [`verify_equivalence`], evaluating rows on at most `jobs` threads.
/// Row order does not depend on `jobs`.
pub fn verify_equivalence_with_jobs(
    m: &BinaryMatroid,
    n: usize,
    jobs: Option<usize>,
) -> Result<Sweep> {
    if n < 2 {
        return Err(Error::InvalidArguments(format!("n={n} < 2")));
    }
    if m.len() < 2 * n - 2 {
        return Err(Error::InvalidArguments(format!(
            "|E|={} < 2n-2={}",
            m.len(),
            2 * n - 2
        )));
    }
    if m.len() + 1 > ENUMERATION_CAP {
        return Err(Error::GroundSetTooLarge {
            size: m.len() + 1,
            cap: ENUMERATION_CAP,
        });
    }
    if !is_n_connected(m, n)? {
        return Err(Error::NotNConnected { n });
    }
    // fill the caches before the rows share `m`
    m.circuits()?;
    m.cocircuits()?;

    let mut violations = Vec::new();
    if !check_size_bound(m, n)? {
        violations.push(format!(
            "{n}-connected matroid has girth {} and cogirth {}",
            m.girth()?,
            m.cogirth()?
        ));
    }
    let ts: Vec<ElementSet> = k_subsets(m.len(), n - 1).collect();
    let run = || {
        ts.par_iter()
            .map(|&t| verify_one(m, n, t))
            .collect::<Result<Vec<_>>>()
    };
    let rows = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidArguments(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    Ok(Sweep {
        matroid: m.name().to_string(),
        n,
        rows,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn fano_cocircuit_condition() {
        let f = catalog::fano();
        // {1,2,3,4} is the complement of the line {5,6,7} and contains T
        let (ok, q) = check_cocircuit_condition(&f, f.set_of(["1", "2", "3"]).unwrap()).unwrap();
        assert!(!ok);
        assert_eq!(q, Some(f.set_of(["1", "2", "3", "4"]).unwrap()));
        for t in k_subsets(7, 2) {
            assert!(check_cocircuit_condition(&f, t).unwrap().0);
        }
    }

    #[test]
    fn k4_adjacent_pair_fails() {
        let m = catalog::matroid("M(K4)").unwrap();
        let t = m.set_of(["1-2", "1-3"]).unwrap();
        let (ok, q) = check_cocircuit_condition(&m, t).unwrap();
        assert!(!ok);
        assert_eq!(q, Some(m.set_of(["1-2", "1-3", "1-4"]).unwrap()));
        let (ok, a) = check_circuit_condition(&m, t, 3).unwrap();
        assert!(!ok);
        assert_eq!(a.unwrap().len(), 1);
        assert!(!check_weak_condition(&m, t, 3).unwrap());
    }

    #[test]
    fn vacuous_cocircuit_condition() {
        // T = {5}: cocircuits of F7 avoiding 5 impose nothing
        let f = catalog::fano();
        let t = f.set_of(["5"]).unwrap();
        assert!(f.cocircuits().unwrap().iter().any(|q| q.is_disjoint(t)));
        assert!(check_cocircuit_condition(&f, t).unwrap().0);
    }

    #[test]
    fn circuit_condition_small_n() {
        let f = catalog::fano();
        assert!(
            check_circuit_condition(&f, f.set_of(["1"]).unwrap(), 2)
                .unwrap()
                .0
        );
        assert!(
            check_circuit_condition(&f, f.set_of(["1", "2"]).unwrap(), 3)
                .unwrap()
                .0
        );
        assert!(matches!(
            check_circuit_condition(&f, f.set_of(["1"]).unwrap(), 3),
            Err(Error::InvalidArguments(_))
        ));
    }

    #[test]
    fn weak_condition_arguments() {
        let f = catalog::fano();
        for t in k_subsets(7, 2) {
            assert!(check_weak_condition(&f, t, 3).unwrap());
        }
        assert!(matches!(
            check_weak_condition(&f, f.set_of(["1", "2", "3", "4"]).unwrap(), 5),
            Err(Error::InvalidArguments(_))
        ));
        // T contained in no cocircuit: {1,2,5} is a line, and every
        // cocircuit (a line complement) misses some point of it
        let m = catalog::fano();
        let t = m.set_of(["1", "2", "5"]).unwrap();
        assert!(m.cocircuits().unwrap().iter().all(|q| !t.is_subset(*q)));
        assert!(check_weak_condition(&m, t, 4).unwrap());
    }

    #[test]
    fn sweep_refuses_unconnected() {
        let f = catalog::fano();
        assert_eq!(
            verify_equivalence(&f, 4).unwrap_err(),
            Error::NotNConnected { n: 4 }
        );
    }

    #[test]
    fn fano_sweep() {
        let f = catalog::fano();
        let s = verify_equivalence(&f, 3).unwrap();
        assert_eq!(s.rows.len(), 21);
        assert!(s.clean());
        assert!(s.rows.iter().all(|r| r.stmt_i && r.stmt_ii && r.stmt_iii));
        let s2 = verify_equivalence_with_jobs(&f, 3, Some(2)).unwrap();
        assert_eq!(s, s2);
    }
}
