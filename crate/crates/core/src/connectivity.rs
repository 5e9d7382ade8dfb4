//! Tutte connectivity by exhaustive separation search.
//!
//! A `k`-separation of `M` is a partition `(A, B)` of the ground set with
//! `min(|A|, |B|) >= k` and `r(A) + r(B) - r(M) <= k - 1`. `M` is
//! `n`-connected when it has no `k`-separation for `k < n`.
//!
//! Sides are scanned as bitmasks in increasing numeric order, restricted to
//! `|A| <= |E|/2`. Every partition is seen at least once that way.

use crate::error::{Error, Result};
use crate::gf2::rank_of_rows;
use crate::matroid::{BinaryMatroid, Extended};
use crate::set::ElementSet;

/// Largest ground set accepted by the separation search.
pub const ENUMERATION_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub side_a: ElementSet,
    pub side_b: ElementSet,
    pub order: usize,
}

fn check_size(m: &BinaryMatroid) -> Result<()> {
    if m.len() > ENUMERATION_CAP {
        return Err(Error::GroundSetTooLarge {
            size: m.len(),
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// Scans candidate sides `A` in mask order and stops at the first one for
/// which `visit(|A|, |B|, r(A) + r(B) - r(M))` returns true.
fn scan<F>(m: &BinaryMatroid, mut visit: F) -> Option<ElementSet>
where
    F: FnMut(usize, usize, usize) -> bool,
{
    let n = m.len();
    let full = ElementSet::full(n).bits();
    let rows = m.matrix().rows();
    let r = m.rank();
    for a in 1..(1u64 << n) {
        let size_a = a.count_ones() as usize;
        if 2 * size_a > n {
            continue;
        }
        let b = full & !a;
        let ra = rank_of_rows(rows.iter().map(|x| x & a));
        let rb = rank_of_rows(rows.iter().map(|x| x & b));
        if visit(size_a, n - size_a, ra + rb - r) {
            return Some(ElementSet::from_bits(a));
        }
    }
    None
}

/// The first `k`-separation in mask order over sides with `|A| <= |E|/2`.
pub fn find_k_separation(m: &BinaryMatroid, k: usize) -> Result<Option<Separation>> {
    check_size(m)?;
    let found = scan(m, |sa, sb, lambda| sa >= k && sb >= k && lambda < k);
    Ok(found.map(|a| Separation {
        side_a: a,
        side_b: m.full_set().difference(a),
        order: k,
    }))
}

/// True iff `m` has no `k`-separation with `k < n`.
pub fn is_n_connected(m: &BinaryMatroid, n: usize) -> Result<bool> {
    check_size(m)?;
    // a side with connectivity value lambda separates every order in
    // lambda+1 ..= min(|A|, |B|)
    Ok(scan(m, |sa, sb, lambda| {
        lambda + 1 <= sa.min(sb) && lambda + 1 < n
    })
    .is_none())
}

/// The least `k` admitting a `k`-separation, or infinity.
pub fn connectivity(m: &BinaryMatroid) -> Result<Extended> {
    check_size(m)?;
    let mut best = usize::MAX;
    scan(m, |sa, sb, lambda| {
        if lambda + 1 <= sa.min(sb) {
            best = best.min(lambda + 1);
        }
        best == 1
    });
    Ok(if best == usize::MAX {
        Extended::Infinite
    } else {
        Extended::Finite(best)
    })
}

/// Whether every circuit and every cocircuit has at least `n` elements.
pub fn check_size_bound(m: &BinaryMatroid, n: usize) -> Result<bool> {
    Ok(m.girth()?.at_least(n) && m.cogirth()?.at_least(n))
}
