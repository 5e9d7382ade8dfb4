mod common;

use coext::coextension::element_split;
use coext::connectivity::{check_size_bound, connectivity, find_k_separation, is_n_connected};
use coext::set::k_subsets;
use coext::theorems::{
    check_circuit_condition, check_cocircuit_condition, verify_equivalence,
    verify_equivalence_with_jobs,
};
use coext::{catalog, Extended};
use proptest::prelude::*;

use common::{strategies, Oracle};

fn sweep_agrees_with_oracle(name: &str, n: usize) {
    let m = catalog::matroid(name).unwrap();
    let s = verify_equivalence(&m, n).unwrap();
    assert!(s.clean(), "{name}");
    for (row, t) in s.rows.iter().zip(k_subsets(m.len(), n - 1)) {
        let split = element_split(&m, t, "a").unwrap();
        assert_eq!(
            row.stmt_i,
            Oracle::new(&split.result).is_n_connected(n),
            "{name} {:?}",
            row.t_set
        );
    }
}

#[test]
fn small_sweeps_match_oracle() {
    sweep_agrees_with_oracle("F7", 3);
    sweep_agrees_with_oracle("F7", 2);
    sweep_agrees_with_oracle("M(K4)", 3);
    sweep_agrees_with_oracle("M(W3)", 3);
    sweep_agrees_with_oracle("M(K33)", 3);
}

#[test]
fn k5_sweep_is_all_true() {
    // every cocircuit of M(K5) is a vertex star of size 4 or a 2|3 cut of size 6
    let m = catalog::matroid("M(K5)").unwrap();
    let s = verify_equivalence(&m, 3).unwrap();
    assert_eq!(s.rows.len(), 45);
    assert!(s
        .rows
        .iter()
        .all(|r| r.stmt_i && r.stmt_ii && r.stmt_iii && r.witnesses.is_empty()));
}

#[test]
fn w4_sweep_witnesses() {
    let m = catalog::matroid("M(W4)").unwrap();
    let s = verify_equivalence(&m, 3).unwrap();
    assert!(s.clean());
    for r in &s.rows {
        assert_eq!(r.witnesses.is_empty(), r.stmt_i);
        if !r.stmt_i {
            assert_eq!(r.witnesses.len(), 3);
        }
    }
}

#[test]
fn jobs_do_not_change_rows() {
    let m = catalog::matroid("M(K33)").unwrap();
    let one = verify_equivalence_with_jobs(&m, 3, Some(1)).unwrap();
    let four = verify_equivalence_with_jobs(&m, 3, Some(4)).unwrap();
    assert_eq!(one, four);
}

#[test]
fn conditions_reject_bad_arguments() {
    let m = catalog::matroid("M(K4)").unwrap();
    let t = m.set_of(["1-2"]).unwrap();
    assert!(check_circuit_condition(&m, t, 3).is_err());
    assert!(check_cocircuit_condition(&m, coext::ElementSet::EMPTY).is_err());
    assert!(verify_equivalence(&m, 1).is_err());
}

/// The restriction of F7 to the points whose bits are set in `mask`.
fn fano_restriction(mask: u32) -> coext::BinaryMatroid {
    let cols: Vec<u64> = (1u64..8).filter(|p| mask >> (p - 1) & 1 == 1).collect();
    let labels: Vec<String> = (0..cols.len()).map(|i| format!("p{i}")).collect();
    let rows: Vec<u64> = (0..3)
        .map(|r| {
            cols.iter()
                .enumerate()
                .filter(|(_, &c)| c >> r & 1 == 1)
                .map(|(j, _)| 1u64 << j)
                .sum()
        })
        .collect();
    coext::BinaryMatroid::from_matrix(&coext::Gf2Matrix::from_bits(labels, rows).unwrap()).unwrap()
}

#[test]
fn every_simple_rank_three_matroid() {
    let mut connected = [0usize; 2];
    for mask in (1u32..(1 << 7)).filter(|m| m.count_ones() >= 4) {
        let m = fano_restriction(mask);
        let o = Oracle::new(&m);
        for n in 2..=3 {
            assert_eq!(is_n_connected(&m, n).unwrap(), o.is_n_connected(n));
            if !o.is_n_connected(n) {
                continue;
            }
            connected[n - 2] += 1;
            let s = verify_equivalence(&m, n).unwrap();
            assert!(s.clean(), "mask {mask:07b} n={n}");
        }
    }
    // 7 + 21 + 7 + 1 restrictions with no coloop; F7 and its seven M(K4) deletions
    assert_eq!(connected, [36, 8]);
}

proptest! {
    #[test]
    fn connectivity_matches_oracle(m in strategies::matroid(10, 6)) {
        let o = Oracle::new(&m);
        let expect = o.connectivity().map_or(Extended::Infinite, Extended::Finite);
        prop_assert_eq!(connectivity(&m).unwrap(), expect);
        for n in 2..=4 {
            prop_assert_eq!(is_n_connected(&m, n).unwrap(), o.is_n_connected(n));
        }
    }

    #[test]
    fn separations_are_valid(m in strategies::matroid(10, 6), k in 1usize..4) {
        if let Some(sep) = find_k_separation(&m, k).unwrap() {
            prop_assert_eq!(sep.side_a.union(sep.side_b), m.full_set());
            prop_assert!(sep.side_a.is_disjoint(sep.side_b));
            prop_assert!(sep.side_a.len() >= k && sep.side_b.len() >= k);
            prop_assert!(m.rank_set(sep.side_a) + m.rank_set(sep.side_b) - m.rank() < k);
        }
    }

    #[test]
    fn size_bound_for_connected(m in strategies::matroid(10, 6), n in 2usize..5) {
        if m.len() >= 2 * n - 2 && is_n_connected(&m, n).unwrap() {
            prop_assert!(check_size_bound(&m, n).unwrap());
        }
    }

    #[test]
    fn criteria_agree(m in strategies::matroid(9, 5), n in 2usize..4) {
        if m.len() < 2 * n - 2 || !is_n_connected(&m, n).unwrap() {
            return Ok(());
        }
        let s = verify_equivalence(&m, n).unwrap();
        prop_assert!(s.clean(), "{:?}", s);
        for r in &s.rows {
            prop_assert!(r.equivalent);
            if r.weak == Some(true) {
                prop_assert!(r.stmt_i);
            }
        }
    }
}
