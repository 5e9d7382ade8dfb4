//! Built-in matroids and graphs.
//!
//! Names are matched case-insensitively with the punctuation in `()_{},-`
//! and whitespace ignored, so `M(K_{3,3})`, `mk33` and `MK33` all name the
//! same entry.

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::graphs::{cycle_matroid, SimpleGraph};
use crate::matroid::BinaryMatroid;

/// Graph catalog names.
pub const GRAPHS: &[&str] = &[
    "K4", "K5", "K33", "K44", "K46", "W3", "W4", "W5", "Petersen", "Q3",
];

/// Matroid catalog names: the Fano plane, its dual, and the cycle matroid of
/// every catalog graph.
pub const MATROIDS: &[&str] = &[
    "F7",
    "F7*",
    "M(K4)",
    "M(K5)",
    "M(K33)",
    "M(K44)",
    "M(K46)",
    "M(W3)",
    "M(W4)",
    "M(W5)",
    "M(Petersen)",
    "M(Q3)",
];

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| !c.is_whitespace() && !"()_{},-".contains(*c))
        .flat_map(char::to_lowercase)
        .collect()
}

/// The Fano matroid as the standard representation `[I | D]` on `1..=7`.
pub fn fano() -> BinaryMatroid {
    let m = Gf2Matrix::from_rows(
        (1..=7).map(|i| i.to_string()).collect(),
        &[
            vec![1, 0, 0, 1, 1, 0, 1],
            vec![0, 1, 0, 1, 1, 1, 0],
            vec![0, 0, 1, 1, 0, 1, 1],
        ],
    )
    .expect("fixed matrix");
    BinaryMatroid::from_matrix(&m)
        .expect("fixed matrix")
        .with_name("F7")
}

pub fn complete(n: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((i.to_string(), j.to_string(), format!("{i}-{j}")));
        }
    }
    SimpleGraph::from_edges(format!("K{n}"), edges).expect("simple by construction")
}

/// `K_{p,q}` on `p1..pp` and `q1..qq`.
pub fn complete_bipartite(p: usize, q: usize) -> SimpleGraph {
    let (a, b) = if p == 3 && q == 3 {
        ("a", "b")
    } else {
        ("p", "q")
    };
    let mut edges = Vec::new();
    for i in 1..=p {
        for j in 1..=q {
            edges.push((
                format!("{a}{i}"),
                format!("{b}{j}"),
                format!("{a}{i}-{b}{j}"),
            ));
        }
    }
    SimpleGraph::from_edges(format!("K{p}{q}"), edges).expect("simple by construction")
}

/// Wheel with hub `h` and rim `r1..rk`.
pub fn wheel(k: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 1..=k {
        edges.push(("h".to_string(), format!("r{i}"), format!("h-r{i}")));
    }
    for i in 1..=k {
        let j = i % k + 1;
        let (lo, hi) = (i.min(j), i.max(j));
        edges.push((format!("r{lo}"), format!("r{hi}"), format!("r{lo}-r{hi}")));
    }
    SimpleGraph::from_edges(format!("W{k}"), edges).expect("simple by construction")
}

/// Petersen graph: outer 5-cycle `o0..o4`, inner pentagram `i0..i4`.
pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let j = (i + 1) % 5;
        let (lo, hi) = (i.min(j), i.max(j));
        edges.push((format!("o{lo}"), format!("o{hi}"), format!("o{lo}-o{hi}")));
    }
    for i in 0..5 {
        edges.push((format!("o{i}"), format!("i{i}"), format!("o{i}-i{i}")));
    }
    for i in 0..5 {
        let j = (i + 2) % 5;
        let (lo, hi) = (i.min(j), i.max(j));
        edges.push((format!("i{lo}"), format!("i{hi}"), format!("i{lo}-i{hi}")));
    }
    SimpleGraph::from_edges("Petersen", edges).expect("simple by construction")
}

/// The 3-cube on bit strings `000..111`.
pub fn cube() -> SimpleGraph {
    let name = |x: usize| format!("{:03b}", x);
    let mut edges = Vec::new();
    for x in 0..8usize {
        for bit in [4, 2, 1] {
            let y = x ^ bit;
            if x < y {
                edges.push((name(x), name(y), format!("{}-{}", name(x), name(y))));
            }
        }
    }
    SimpleGraph::from_edges("Q3", edges).expect("simple by construction")
}

pub fn graph(name: &str) -> Result<SimpleGraph> {
    Ok(match normalize(name).as_str() {
        "k4" => complete(4),
        "k5" => complete(5),
        "k33" => complete_bipartite(3, 3),
        "k44" => complete_bipartite(4, 4),
        "k46" => complete_bipartite(4, 6),
        "w3" => wheel(3),
        "w4" => wheel(4),
        "w5" => wheel(5),
        "petersen" => petersen(),
        "q3" => cube(),
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    })
}

pub fn matroid(name: &str) -> Result<BinaryMatroid> {
    let key = normalize(name);
    match key.as_str() {
        "f7" | "fano" => return Ok(fano()),
        "f7*" | "f7dual" => return Ok(fano().dual()),
        _ => {}
    }
    let graph_name = key
        .strip_prefix('m')
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    let g = graph(graph_name).map_err(|_| Error::UnknownCatalog(name.to_string()))?;
    cycle_matroid(&g)
}

/// Every catalog matroid, in [`MATROIDS`] order.
pub fn all_matroids() -> Vec<BinaryMatroid> {
    MATROIDS
        .iter()
        .map(|n| matroid(n).expect("catalog names resolve"))
        .collect()
}

pub fn all_graphs() -> Vec<SimpleGraph> {
    GRAPHS
        .iter()
        .map(|n| graph(n).expect("catalog names resolve"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve_loosely() {
        assert_eq!(matroid("M(K_{3,3})").unwrap().len(), 9);
        assert_eq!(matroid("mk33").unwrap().len(), 9);
        assert_eq!(matroid("f7").unwrap().name(), "F7");
        assert_eq!(matroid("F7*").unwrap().rank(), 4);
        assert!(matches!(matroid("K5"), Err(Error::UnknownCatalog(_))));
        assert!(matches!(graph("K6"), Err(Error::UnknownCatalog(_))));
    }

    #[test]
    fn sizes() {
        let expect = [
            ("K4", 4, 6),
            ("K5", 5, 10),
            ("K33", 6, 9),
            ("K44", 8, 16),
            ("K46", 10, 24),
            ("W3", 4, 6),
            ("W4", 5, 8),
            ("W5", 6, 10),
            ("Petersen", 10, 15),
            ("Q3", 8, 12),
        ];
        for (name, v, e) in expect {
            let g = graph(name).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (v, e), "{name}");
            assert!(g.is_connected());
            let m = cycle_matroid(&g).unwrap();
            assert_eq!(m.rank(), v - 1, "{name}");
        }
        for name in MATROIDS {
            matroid(name).unwrap();
        }
    }
}
