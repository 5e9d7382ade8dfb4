//! Simple graphs, n-point splitting, vertex connectivity, and the cycle
//! matroid bridge.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::coextension::element_split;
use crate::connectivity::{is_n_connected, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::matroid::{BinaryMatroid, Extended};
use crate::set::{k_subsets, ElementSet};
use crate::theorems::check_cocircuit_condition;

/// Largest vertex count accepted by [`vertex_connectivity`].
pub const CUT_SEARCH_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: String,
}

/// A labeled simple graph: no loops, no parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    name: String,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    pairs: HashMap<(usize, usize), usize>,
}

impl SimpleGraph {
    pub fn new(name: impl Into<String>) -> Self {
        SimpleGraph {
            name: name.into(),
            vertices: Vec::new(),
            edges: Vec::new(),
            vertex_index: HashMap::new(),
            edge_index: HashMap::new(),
            pairs: HashMap::new(),
        }
    }

    /// Builds a graph from `(u, v, label)` triples; vertices are declared in
    /// order of first appearance.
    pub fn from_edges<I, A, B, C>(name: impl Into<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B, C)>,
        A: AsRef<str>,
        B: AsRef<str>,
        C: AsRef<str>,
    {
        let mut g = SimpleGraph::new(name);
        for (u, v, l) in edges {
            g.ensure_vertex(u.as_ref());
            g.ensure_vertex(v.as_ref());
            g.add_edge(u.as_ref(), v.as_ref(), l.as_ref())?;
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if self.vertex_index.contains_key(label) {
            return Err(Error::LabelCollision(label.to_string()));
        }
        Ok(self.ensure_vertex(label))
    }

    fn ensure_vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.vertex_index.get(label) {
            return i;
        }
        self.vertices.push(label.to_string());
        self.vertex_index
            .insert(label.to_string(), self.vertices.len() - 1);
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, u: &str, v: &str, label: &str) -> Result<()> {
        let ui = self.vertex(u)?;
        let vi = self.vertex(v)?;
        if ui == vi {
            return Err(Error::SelfLoop(u.to_string()));
        }
        if self.edge_index.contains_key(label) {
            return Err(Error::LabelCollision(label.to_string()));
        }
        let key = (ui.min(vi), ui.max(vi));
        if let Some(&e) = self.pairs.get(&key) {
            return Err(Error::ParallelEdge(format!(
                "`{label}` between {u} and {v} duplicates `{}`",
                self.edges[e].label
            )));
        }
        self.pairs.insert(key, self.edges.len());
        self.edge_index.insert(label.to_string(), self.edges.len());
        self.edges.push(Edge {
            u: ui,
            v: vi,
            label: label.to_string(),
        });
        Ok(())
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertex_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn edge(&self, label: &str) -> Result<usize> {
        self.edge_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(label.to_string()))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    /// Indices of the edges at `v`, in edge order.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].u == v || self.edges[e].v == v)
            .collect()
    }

    pub fn has_edge_between(&self, u: usize, v: usize) -> bool {
        self.pairs.contains_key(&(u.min(v), u.max(v)))
    }

    /// Adjacency lists, each sorted by vertex index.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Whether the vertices outside `removed` induce a connected graph.
    /// An empty remainder counts as connected.
    pub fn is_connected_without(&self, removed: &[bool]) -> bool {
        let adj = self.adjacency();
        let Some(start) = (0..self.vertices.len()).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.to_vec();
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&vec![false; self.vertices.len()])
    }
}

/// Vertex connectivity by exhaustive cut search over vertex subsets in
/// increasing size. A complete graph on `m` vertices has connectivity `m-1`.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    if n > CUT_SEARCH_CAP {
        return Err(Error::TooManyVertices {
            size: n,
            cap: CUT_SEARCH_CAP,
        });
    }
    for size in 0..=n - 2 {
        for cut in k_subsets(n, size) {
            let removed: Vec<bool> = (0..n).map(|v| cut.contains(v)).collect();
            if !g.is_connected_without(&removed) {
                return Ok(size);
            }
        }
    }
    Ok(n - 1)
}

/// Length of a shortest cycle, by breadth-first search from every vertex.
pub fn graph_girth(g: &SimpleGraph) -> Extended {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Extended::Infinite
    } else {
        Extended::Finite(best)
    }
}

/// The cycle matroid: the GF(2) vertex-edge incidence matrix, one column per
/// edge label.
pub fn cycle_matroid(g: &SimpleGraph) -> Result<BinaryMatroid> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.edge_count() > 64 {
        return Err(Error::TooManyColumns(g.edge_count()));
    }
    let mut rows = vec![0u64; g.vertex_count()];
    for (j, e) in g.edges().iter().enumerate() {
        rows[e.u] |= 1 << j;
        rows[e.v] |= 1 << j;
    }
    let labels = g.edges().iter().map(|e| e.label.clone()).collect();
    let m = Gf2Matrix::from_bits(labels, rows)?;
    Ok(BinaryMatroid::from_matrix(&m)?.with_name(format!("M({})", g.name())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub graph: SimpleGraph,
    pub u: String,
    pub w: String,
    pub bridge_edge: String,
}

/// Splits `v` into adjacent vertices `u` and `w`: `u` takes the edges in `t`,
/// `w` takes the rest, and a new edge `u w` labeled `bridge` joins them.
///
/// The new vertices are named `v'` and `v''` (more primes on collision).
/// Requires `deg(v) >= 2|T|`.
pub fn point_split<S: AsRef<str>>(
    g: &SimpleGraph,
    v: &str,
    t: &[S],
    bridge: &str,
) -> Result<SplitResult> {
    let vi = g.vertex(v)?;
    if t.is_empty() {
        return Err(Error::EmptyT);
    }
    let mut t_edges = Vec::with_capacity(t.len());
    for l in t {
        let e = g.edge(l.as_ref())?;
        let edge = &g.edges()[e];
        if edge.u != vi && edge.v != vi {
            return Err(Error::EdgeNotAtV {
                edge: l.as_ref().to_string(),
                vertex: v.to_string(),
            });
        }
        if !t_edges.contains(&e) {
            t_edges.push(e);
        }
    }
    let deg = g.degree(vi);
    if deg < 2 * t_edges.len() || t_edges.len() >= deg {
        return Err(Error::DegreeTooSmall {
            vertex: v.to_string(),
            degree: deg,
            required: (2 * t_edges.len()).max(t_edges.len() + 1),
        });
    }
    if g.edge(bridge).is_ok() {
        return Err(Error::LabelCollision(bridge.to_string()));
    }
    let fresh = |base: String| {
        let mut name = base;
        while g.vertex(&name).is_ok() {
            name.push('\'');
        }
        name
    };
    let u = fresh(format!("{v}'"));
    let w = fresh(format!("{u}'"));

    let mut out = SimpleGraph::new(format!("{}'", g.name()));
    for (i, name) in g.vertices().iter().enumerate() {
        if i == vi {
            out.ensure_vertex(&u);
        } else {
            out.ensure_vertex(name);
        }
    }
    out.ensure_vertex(&w);
    for (e, edge) in g.edges().iter().enumerate() {
        let rename = |x: usize| -> &str {
            if x == vi {
                if t_edges.contains(&e) {
                    &u
                } else {
                    &w
                }
            } else {
                &g.vertices()[x]
            }
        };
        out.add_edge(rename(edge.u), rename(edge.v), &edge.label)?;
    }
    out.add_edge(&u, &w, bridge)?;
    Ok(SplitResult {
        graph: out,
        u,
        w,
        bridge_edge: bridge.to_string(),
    })
}

/// Outcome of checking that an n-point split of an n-connected graph of girth
/// at least n is again n-connected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlaterReport {
    pub graph: String,
    pub n: usize,
    pub vertex: String,
    pub t_set: Vec<String>,
    pub split_connectivity: usize,
    pub split_is_n_connected: bool,
    pub matroid_bridge_holds: bool,
    pub cocircuit_condition_holds: bool,
    /// `None` when the split has too many elements for the separation search.
    pub split_matroid_n_connected: Option<bool>,
    pub violations: Vec<String>,
}

impl SlaterReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the hypotheses on `(g, n, v, t)`, splits, and verifies the split
/// graph is n-connected, that its cycle matroid is the element split of
/// `M(g)` by `t`, and that the cocircuit condition holds.
pub fn slater_check<S: AsRef<str>>(
    g: &SimpleGraph,
    n: usize,
    v: &str,
    t: &[S],
) -> Result<SlaterReport> {
    if n < 2 {
        return Err(Error::HypothesisViolated(format!("n={n} < 2")));
    }
    let vi = g.vertex(v)?;
    if t.len() != n - 1 {
        return Err(Error::HypothesisViolated(format!(
            "|T|={} != n-1={}",
            t.len(),
            n - 1
        )));
    }
    let deg = g.degree(vi);
    if deg < 2 * n - 2 {
        return Err(Error::HypothesisViolated(format!(
            "deg({v})={deg} < 2n-2={}",
            2 * n - 2
        )));
    }
    let kappa = vertex_connectivity(g)?;
    if kappa < n {
        return Err(Error::HypothesisViolated(format!(
            "graph is {kappa}-connected, not {n}-connected"
        )));
    }
    let girth = graph_girth(g);
    if !girth.at_least(n) {
        return Err(Error::HypothesisViolated(format!("girth={girth} < n={n}")));
    }

    let split = point_split(g, v, t, "a")?;
    let split_kappa = vertex_connectivity(&split.graph)?;
    let m = cycle_matroid(g)?;
    let t_set = m.set_of(t.iter().map(AsRef::as_ref))?;
    let via_matroid = element_split(&m, t_set, "a")?;
    let bridge = cycle_matroid(&split.graph)?.same_matroid(&via_matroid.result)?;
    let (cocircuit_ok, _) = check_cocircuit_condition(&m, t_set)?;
    let matroid_conn = if via_matroid.result.len() <= ENUMERATION_CAP {
        Some(is_n_connected(&via_matroid.result, n)?)
    } else {
        None
    };

    let mut violations = Vec::new();
    if split_kappa < n {
        violations.push(format!(
            "split graph has vertex connectivity {split_kappa} < n={n}"
        ));
    }
    if !bridge {
        violations.push("cycle matroid of the split graph differs from the element split".into());
    }
    if !cocircuit_ok {
        violations.push("cocircuit condition fails on M(G)".into());
    }
    if matroid_conn == Some(false) {
        violations.push(format!("element split of M(G) is not {n}-connected"));
    }
    Ok(SlaterReport {
        graph: g.name().to_string(),
        n,
        vertex: v.to_string(),
        t_set: t.iter().map(|s| s.as_ref().to_string()).collect(),
        split_connectivity: split_kappa,
        split_is_n_connected: split_kappa >= n,
        matroid_bridge_holds: bridge,
        cocircuit_condition_holds: cocircuit_ok,
        split_matroid_n_connected: matroid_conn,
        violations,
    })
}

/// One step of [`reduce_to_cubic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicStep {
    pub vertex: String,
    pub degree: usize,
    pub t_set: Vec<String>,
    pub split: SplitResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicReduction {
    pub trace: Vec<CubicStep>,
    pub graph: SimpleGraph,
}

/// Repeated 3-point splitting until every vertex has degree 3.
///
/// Each step splits the smallest-labeled vertex of degree above 3 along its
/// two smallest-labeled edges; the bridges are labeled `a1`, `a2`, ...
/// Every intermediate graph is checked to be 3-connected.
pub fn reduce_to_cubic(g: &SimpleGraph) -> Result<CubicReduction> {
    let kappa = vertex_connectivity(g)?;
    if kappa < 3 || g.vertex_count() < 4 {
        return Err(Error::NotThreeConnected(kappa));
    }
    let mut current = g.clone();
    let mut trace = Vec::new();
    loop {
        let next = (0..current.vertex_count())
            .filter(|&v| current.degree(v) > 3)
            .min_by(|&a, &b| current.vertices()[a].cmp(&current.vertices()[b]));
        let Some(v) = next else { break };
        let mut labels: Vec<&str> = current
            .incident(v)
            .into_iter()
            .map(|e| current.edges()[e].label.as_str())
            .collect();
        labels.sort_unstable();
        let t = [labels[0].to_string(), labels[1].to_string()];
        let vertex = current.vertices()[v].clone();
        let degree = current.degree(v);
        let bridge = format!("a{}", trace.len() + 1);
        let split = point_split(&current, &vertex, &t, &bridge)?;
        let k = vertex_connectivity(&split.graph)?;
        if k < 3 {
            return Err(Error::HypothesisViolated(format!(
                "splitting {vertex} along {{{}}} left a {k}-connected graph",
                t.join(",")
            )));
        }
        current = split.graph.clone().with_name(g.name().to_string());
        trace.push(CubicStep {
            vertex,
            degree,
            t_set: t.to_vec(),
            split,
        });
    }
    Ok(CubicReduction {
        trace,
        graph: current,
    })
}

/// Number of 3-point splits needed to make every degree 3.
pub fn cubic_split_count(g: &SimpleGraph) -> usize {
    (0..g.vertex_count())
        .map(|v| g.degree(v).saturating_sub(3))
        .sum()
}

/// Edges incident to `v`, as a set over the ground of `M(g)`.
pub fn star(g: &SimpleGraph, v: usize) -> ElementSet {
    ElementSet::from_indices(g.incident(v))
}
