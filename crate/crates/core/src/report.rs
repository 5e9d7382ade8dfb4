//! Report emission: JSON Lines records and aligned text tables.
//!
//! A sweep renders as one JSON object per `T`, keys in the order
//!
//! ```text
//! matroid n t_set stmt_i stmt_ii stmt_iii weak equivalent witnesses violations
//! ```
//!
//! followed by nothing else. `weak` is `null` for `n > 4`; `witnesses` and
//! `violations` are always present, possibly empty. Sweep-level findings go
//! on a final `{"sweep": ...}` line only when there are some.

use serde::Serialize;

use crate::matroid::SubsetWitness;
use crate::theorems::{Sweep, VerificationReport};

/// Left-aligned columns separated by two spaces, no trailing whitespace.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            s.extend(std::iter::repeat(' ').take(w - cell.chars().count()));
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn witness_cell(ws: &[SubsetWitness]) -> String {
    ws.iter()
        .map(|w| {
            let kind = serde_json::to_value(w.kind)
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default();
            format!("{kind} {}", braces(&w.elements))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn table_row(r: &VerificationReport) -> Vec<String> {
    vec![
        braces(&r.t_set),
        yes_no(r.stmt_i).into(),
        yes_no(r.stmt_ii).into(),
        yes_no(r.stmt_iii).into(),
        r.weak.map_or("-", yes_no).into(),
        witness_cell(&r.witnesses),
    ]
}

/// The human-readable sweep table with a one-line summary.
pub fn sweep_table(s: &Sweep) -> String {
    let rows: Vec<Vec<String>> = s.rows.iter().map(table_row).collect();
    let mut out = format!("{} n={}\n", s.matroid, s.n);
    out.push_str(&render_table(
        &["T", "(i)", "(ii)", "(iii)", "weak", "witnesses"],
        &rows,
    ));
    for r in &s.rows {
        for v in &r.violations {
            out.push_str(&format!("violation at T={}: {v}\n", braces(&r.t_set)));
        }
    }
    for v in &s.violations {
        out.push_str(&format!("violation: {v}\n"));
    }
    let equivalent = s.rows.iter().filter(|r| r.equivalent).count();
    out.push_str(&format!(
        "{} rows, {equivalent} equivalent, {} violations\n",
        s.rows.len(),
        s.violation_count()
    ));
    out
}

#[derive(Serialize)]
struct SweepLine<'a> {
    sweep: &'a str,
    n: usize,
    violations: &'a [String],
}

/// Machine-readable records, one JSON object per line.
pub fn sweep_records(s: &Sweep) -> String {
    let mut out = String::new();
    for r in &s.rows {
        out.push_str(&to_line(r));
    }
    if !s.violations.is_empty() {
        out.push_str(&to_line(&SweepLine {
            sweep: &s.matroid,
            n: s.n,
            violations: &s.violations,
        }));
    }
    out
}

/// One JSON object and a newline.
pub fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::theorems::verify_equivalence;

    #[test]
    fn alignment() {
        let t = render_table(
            &["a", "bb"],
            &[vec!["xyz".into(), "1".into()], vec!["p".into(), "".into()]],
        );
        assert_eq!(t, "a    bb\nxyz  1\np\n");
    }

    #[test]
    fn k4_records() {
        let m = catalog::matroid("M(K4)").unwrap();
        let s = verify_equivalence(&m, 3).unwrap();
        let rec = sweep_records(&s);
        assert_eq!(rec.lines().count(), 15);
        let first = rec.lines().next().unwrap();
        assert!(first.starts_with(
            "{\"matroid\":\"M(K4)\",\"n\":3,\"t_set\":[\"1-2\",\"1-3\"],\"stmt_i\":false"
        ));
        let with_witness = rec
            .lines()
            .filter(|l| !l.contains("\"witnesses\":[]"))
            .count();
        assert_eq!(with_witness, 12);
        let table = sweep_table(&s);
        assert!(table.ends_with("15 rows, 15 equivalent, 0 violations\n"));
    }

    #[test]
    fn all_true_row_has_empty_witnesses() {
        let s = verify_equivalence(&catalog::fano(), 3).unwrap();
        let rec = sweep_records(&s);
        assert!(rec.lines().all(|l| l.contains("\"witnesses\":[]")));
        let table = sweep_table(&s);
        let row = table.lines().nth(2).unwrap();
        assert_eq!(row, "{1,2}  yes  yes   yes    yes");
    }
}
