//! Combinatorial and metric graphs: data model, validation, stars, and the
//! metric → combinatorial association `g_e = 1/l_e`.
//!
//! Infinite graphs are represented by finite Dirichlet truncations: vertices
//! marked `boundary` model the cut and carry a zero condition in every
//! assembled form. Boundary vertices are exempt from the degree ≥ 2 rule.
//! Graphs are immutable once built and safe to share across threads.

mod build;
mod io;

pub use build::*;
pub use io::{load_graph, load_graph_str, save_graph, GraphFile};

use crate::error::{Error, Result};

/// Dense vertex index assigned at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

/// Dense edge index in insertion order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

/// Shared vertex/edge skeleton of both graph kinds.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Skeleton {
    pub labels: Vec<String>,
    pub boundary: Vec<bool>,
    /// Edge endpoints, `a < b` not required; insertion order is significant.
    pub endpoints: Vec<(usize, usize)>,
    /// Per vertex: (neighbor vertex, connecting edge).
    pub adj: Vec<Vec<(usize, usize)>>,
}

impl Skeleton {
    fn new(labels: Vec<String>, boundary: Vec<bool>, endpoints: Vec<(usize, usize)>) -> Self {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for (eid, &(a, b)) in endpoints.iter().enumerate() {
            if a < n && b < n {
                adj[a].push((b, eid));
                if a != b {
                    adj[b].push((a, eid));
                }
            }
        }
        Skeleton { labels, boundary, endpoints, adj }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn connected(&self) -> bool {
        let n = self.labels.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    fn star(&self, v: usize) -> Result<Vec<EdgeId>> {
        if v >= self.labels.len() {
            return Err(Error::UnknownVertex(v));
        }
        let mut edges: Vec<EdgeId> = self.adj[v].iter().map(|&(_, e)| EdgeId(e)).collect();
        edges.sort();
        Ok(edges)
    }

    fn edge_star(&self, e: usize) -> Result<Vec<EdgeId>> {
        if e >= self.endpoints.len() {
            return Err(Error::UnknownEdge(e));
        }
        let (a, b) = self.endpoints[e];
        let mut edges: Vec<EdgeId> = self.adj[a]
            .iter()
            .chain(self.adj[b].iter())
            .map(|&(_, eid)| EdgeId(eid))
            .collect();
        edges.sort();
        edges.dedup();
        Ok(edges)
    }

    /// True when the stars of `e` and `f` share at least one edge, i.e. when
    /// some endpoint of one is equal or adjacent to an endpoint of the other.
    fn stars_intersect(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.endpoints[e];
        let (c, d) = self.endpoints[f];
        if a == c || a == d || b == c || b == d {
            return true;
        }
        self.adj[a].iter().any(|&(w, _)| w == c || w == d)
            || self.adj[b].iter().any(|&(w, _)| w == c || w == d)
    }

    fn find_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// One structural invariant violation found by [`CombinatorialGraph::validate`].
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    Empty,
    Loop { edge: EdgeId },
    MultipleEdge { a: VertexId, b: VertexId },
    NotConnected,
    DegreeOne { vertex: VertexId },
    IsolatedVertex { vertex: VertexId },
    NonPositiveValue { edge: EdgeId, value: f64 },
    BadEndpoint { edge: EdgeId },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Empty => write!(f, "empty graph"),
            Violation::Loop { edge } => write!(f, "loop at edge {}", edge.0),
            Violation::MultipleEdge { a, b } => {
                write!(f, "multiple edge between vertices {} and {}", a.0, b.0)
            }
            Violation::NotConnected => write!(f, "not connected"),
            Violation::DegreeOne { vertex } => {
                write!(f, "non-boundary vertex {} has degree one", vertex.0)
            }
            Violation::IsolatedVertex { vertex } => {
                write!(f, "vertex {} has degree zero", vertex.0)
            }
            Violation::NonPositiveValue { edge, value } => {
                write!(f, "edge {} has non-positive weight/length {}", edge.0, value)
            }
            Violation::BadEndpoint { edge } => {
                write!(f, "edge {} references an unknown vertex", edge.0)
            }
        }
    }
}

/// Report-style validation result; empty violation list means pass.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Degree and weight/length extremes of a graph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GraphStats {
    /// Maximal vertex degree.
    pub degree_bound: usize,
    /// Maximal edge weight `g_e` (for metric graphs this equals `1/l_minus`).
    pub g_zero: f64,
    /// Minimal edge length (metric graphs only).
    pub l_minus: Option<f64>,
    /// Maximal edge length (metric graphs only).
    pub l_plus: Option<f64>,
}

fn validate_skeleton(sk: &Skeleton, values: &[f64]) -> ValidationReport {
    let mut violations = Vec::new();
    let n = sk.labels.len();
    if n == 0 {
        violations.push(Violation::Empty);
        return ValidationReport { violations };
    }
    let mut seen_pairs = std::collections::HashSet::new();
    for (eid, &(a, b)) in sk.endpoints.iter().enumerate() {
        if a >= n || b >= n {
            violations.push(Violation::BadEndpoint { edge: EdgeId(eid) });
            continue;
        }
        if a == b {
            violations.push(Violation::Loop { edge: EdgeId(eid) });
        }
        let key = (a.min(b), a.max(b));
        if !seen_pairs.insert(key) {
            violations.push(Violation::MultipleEdge { a: VertexId(key.0), b: VertexId(key.1) });
        }
        if values[eid] <= 0.0 || !values[eid].is_finite() {
            violations.push(Violation::NonPositiveValue { edge: EdgeId(eid), value: values[eid] });
        }
    }
    for v in 0..n {
        match sk.degree(v) {
            0 => violations.push(Violation::IsolatedVertex { vertex: VertexId(v) }),
            1 if !sk.boundary[v] => violations.push(Violation::DegreeOne { vertex: VertexId(v) }),
            _ => {}
        }
    }
    if !sk.connected() {
        violations.push(Violation::NotConnected);
    }
    ValidationReport { violations }
}

macro_rules! shared_graph_api {
    ($ty:ident, $values:ident) => {
        impl $ty {
            pub fn vertex_count(&self) -> usize {
                self.sk.labels.len()
            }

            pub fn edge_count(&self) -> usize {
                self.sk.endpoints.len()
            }

            pub fn label(&self, v: VertexId) -> &str {
                &self.sk.labels[v.0]
            }

            pub fn is_boundary(&self, v: VertexId) -> bool {
                self.sk.boundary[v.0]
            }

            pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
                self.sk.find_by_label(label).map(VertexId)
            }

            pub fn degree(&self, v: VertexId) -> usize {
                self.sk.degree(v.0)
            }

            pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
                let (a, b) = self.sk.endpoints[e.0];
                (VertexId(a), VertexId(b))
            }

            /// Edge between two vertices, if present.
            pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
                self.sk.adj[a.0]
                    .iter()
                    .find(|&&(w, _)| w == b.0)
                    .map(|&(_, e)| EdgeId(e))
            }

            /// Neighbors of `v` with the connecting edge, in insertion order.
            pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
                self.sk.adj[v.0].iter().map(|&(w, e)| (VertexId(w), EdgeId(e)))
            }

            /// All edges incident to `v`.
            pub fn star(&self, v: VertexId) -> Result<Vec<EdgeId>> {
                self.sk.star(v.0)
            }

            /// Union of the stars of both endpoints of `e` (contains `e`).
            pub fn edge_star(&self, e: EdgeId) -> Result<Vec<EdgeId>> {
                self.sk.edge_star(e.0)
            }

            /// Shared-vertex-or-adjacent-vertex predicate, equivalent to
            /// `edge_star(e) ∩ edge_star(f) ≠ ∅`.
            pub fn edge_stars_intersect(&self, e: EdgeId, f: EdgeId) -> bool {
                self.sk.stars_intersect(e.0, f.0)
            }

            pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
                (0..self.vertex_count()).map(VertexId)
            }

            pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
                (0..self.edge_count()).map(EdgeId)
            }

            /// Non-boundary vertices in id order.
            pub fn free_vertices(&self) -> Vec<VertexId> {
                (0..self.vertex_count())
                    .filter(|&v| !self.sk.boundary[v])
                    .map(VertexId)
                    .collect()
            }

            pub fn boundary_vertices(&self) -> Vec<VertexId> {
                (0..self.vertex_count())
                    .filter(|&v| self.sk.boundary[v])
                    .map(VertexId)
                    .collect()
            }

            pub fn validate(&self) -> ValidationReport {
                validate_skeleton(&self.sk, &self.$values)
            }

            /// Validate and convert violations into a hard error.
            pub fn validated(self) -> Result<Self> {
                let report = self.validate();
                if report.pass() {
                    Ok(self)
                } else {
                    let msg = report
                        .violations
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join("; ");
                    Err(Error::InvalidGraph(msg))
                }
            }
        }
    };
}

/// Weighted combinatorial graph with a designated Dirichlet boundary set.
#[derive(Clone, Debug, PartialEq)]
pub struct CombinatorialGraph {
    pub(crate) sk: Skeleton,
    weights: Vec<f64>,
}

shared_graph_api!(CombinatorialGraph, weights);

impl CombinatorialGraph {
    /// Build from explicit parts. Labels default to `v{i}` when empty.
    pub fn new(
        labels: Vec<String>,
        boundary: Vec<bool>,
        edges: Vec<(usize, usize, f64)>,
    ) -> Self {
        let endpoints: Vec<(usize, usize)> = edges.iter().map(|&(a, b, _)| (a, b)).collect();
        let weights: Vec<f64> = edges.iter().map(|&(_, _, w)| w).collect();
        CombinatorialGraph { sk: Skeleton::new(labels, boundary, endpoints), weights }
    }

    /// Unlabeled constructor for tests and builders: `n` vertices `v0..`,
    /// boundary given as vertex indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)], boundary: &[usize]) -> Self {
        let labels = (0..n).map(|i| format!("v{i}")).collect();
        let mut bnd = vec![false; n];
        for &b in boundary {
            bnd[b] = true;
        }
        Self::new(labels, bnd, edges.to_vec())
    }

    pub fn weight(&self, e: EdgeId) -> f64 {
        self.weights[e.0]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Sum of weights of edges incident to `v` (the diagonal of the stiffness form).
    pub fn weighted_degree(&self, v: VertexId) -> f64 {
        self.sk.adj[v.0].iter().map(|&(_, e)| self.weights[e]).sum()
    }

    pub fn stats(&self) -> GraphStats {
        let degree_bound = (0..self.vertex_count()).map(|v| self.sk.degree(v)).max().unwrap_or(0);
        let g_zero = self.weights.iter().cloned().fold(0.0, f64::max);
        GraphStats { degree_bound, g_zero, l_minus: None, l_plus: None }
    }
}

/// Metric graph: each edge is a segment of length `l_e`; `boundary` vertices
/// carry the Dirichlet truncation condition.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricGraph {
    pub(crate) sk: Skeleton,
    lengths: Vec<f64>,
}

shared_graph_api!(MetricGraph, lengths);

impl MetricGraph {
    pub fn new(
        labels: Vec<String>,
        boundary: Vec<bool>,
        edges: Vec<(usize, usize, f64)>,
    ) -> Self {
        let endpoints: Vec<(usize, usize)> = edges.iter().map(|&(a, b, _)| (a, b)).collect();
        let lengths: Vec<f64> = edges.iter().map(|&(_, _, l)| l).collect();
        MetricGraph { sk: Skeleton::new(labels, boundary, endpoints), lengths }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)], boundary: &[usize]) -> Self {
        let labels = (0..n).map(|i| format!("v{i}")).collect();
        let mut bnd = vec![false; n];
        for &b in boundary {
            bnd[b] = true;
        }
        Self::new(labels, bnd, edges.to_vec())
    }

    pub fn length(&self, e: EdgeId) -> f64 {
        self.lengths[e.0]
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }

    pub fn total_length(&self) -> f64 {
        self.lengths.iter().sum()
    }

    /// The associated combinatorial graph: identical structure, `g_e = 1/l_e`.
    pub fn associated_combinatorial(&self) -> CombinatorialGraph {
        let weights = self.lengths.iter().map(|&l| 1.0 / l).collect();
        CombinatorialGraph { sk: self.sk.clone(), weights }
    }

    pub fn stats(&self) -> GraphStats {
        let degree_bound = (0..self.vertex_count()).map(|v| self.sk.degree(v)).max().unwrap_or(0);
        let l_minus = self.lengths.iter().cloned().fold(f64::INFINITY, f64::min);
        let l_plus = self.lengths.iter().cloned().fold(0.0, f64::max);
        GraphStats {
            degree_bound,
            g_zero: 1.0 / l_minus,
            l_minus: Some(l_minus),
            l_plus: Some(l_plus),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> CombinatorialGraph {
        CombinatorialGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.0)], &[0, 2])
    }

    #[test]
    fn path_with_boundary_endpoints_passes() {
        assert!(path3().validate().pass());
    }

    #[test]
    fn duplicated_edge_is_a_violation() {
        let g = CombinatorialGraph::from_edges(2, &[(0, 1, 1.0), (0, 1, 2.0)], &[0, 1]);
        let report = g.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::MultipleEdge { .. })));
    }

    #[test]
    fn disjoint_triangles_are_not_connected() {
        let edges = [
            (0, 1, 1.0),
            (1, 2, 1.0),
            (2, 0, 1.0),
            (3, 4, 1.0),
            (4, 5, 1.0),
            (5, 3, 1.0),
        ];
        let g = CombinatorialGraph::from_edges(6, &edges, &[]);
        assert!(g.validate().violations.contains(&Violation::NotConnected));
    }

    #[test]
    fn degree_one_needs_boundary_mark() {
        let g = CombinatorialGraph::from_edges(3, &[(0, 1, 1.0), (1, 2, 1.0)], &[0]);
        let report = g.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DegreeOne { vertex } if vertex.0 == 2)));
    }

    #[test]
    fn association_inverts_lengths() {
        let m = MetricGraph::from_edges(3, &[(0, 1, 0.5), (1, 2, 1.0)], &[0, 2]);
        let g = m.associated_combinatorial();
        assert_eq!(g.weight(EdgeId(0)), 2.0);
        assert_eq!(g.weight(EdgeId(1)), 1.0);
        assert_eq!(g.vertex_count(), m.vertex_count());
        assert_eq!(g.edge_count(), m.edge_count());
    }

    #[test]
    fn g_zero_is_inverse_minimal_length() {
        let m = MetricGraph::from_edges(3, &[(0, 1, 0.25), (1, 2, 4.0)], &[0, 2]);
        let stats = m.stats();
        assert_eq!(stats.l_minus, Some(0.25));
        assert_eq!(stats.l_plus, Some(4.0));
        assert_eq!(m.associated_combinatorial().stats().g_zero, 4.0);
        assert_eq!(stats.g_zero, 4.0);
    }

    #[test]
    fn star_of_hub_in_k13() {
        let g = CombinatorialGraph::from_edges(
            4,
            &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)],
            &[1, 2, 3],
        );
        assert_eq!(g.star(VertexId(0)).unwrap().len(), 3);
        assert_eq!(g.star(VertexId(1)).unwrap().len(), 1);
    }

    #[test]
    fn edge_star_middle_of_p4_is_everything() {
        let g = CombinatorialGraph::from_edges(
            4,
            &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)],
            &[0, 3],
        );
        let es = g.edge_star(EdgeId(1)).unwrap();
        assert_eq!(es, vec![EdgeId(0), EdgeId(1), EdgeId(2)]);
    }

    #[test]
    fn edge_star_in_cycle4_has_three_edges() {
        let g = CombinatorialGraph::from_edges(
            4,
            &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)],
            &[],
        );
        for e in g.edge_ids() {
            let es = g.edge_star(e).unwrap();
            assert_eq!(es.len(), 3);
            assert!(es.contains(&e));
        }
    }

    #[test]
    fn edge_star_contains_edge_and_respects_size_bound() {
        let g = CombinatorialGraph::from_edges(
            5,
            &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (1, 4, 1.0), (1, 2, 1.0)],
            &[3, 4],
        );
        let d = g.stats().degree_bound;
        for e in g.edge_ids() {
            let es = g.edge_star(e).unwrap();
            assert!(es.contains(&e));
            assert!(es.len() <= 2 * d - 1);
        }
    }

    #[test]
    fn star_intersection_predicate_matches_materialized_stars() {
        let g = CombinatorialGraph::from_edges(
            6,
            &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 4, 1.0), (4, 5, 1.0), (5, 0, 1.0)],
            &[],
        );
        for e in g.edge_ids() {
            for f in g.edge_ids() {
                let se = g.edge_star(e).unwrap();
                let sf = g.edge_star(f).unwrap();
                let brute = se.iter().any(|x| sf.contains(x));
                assert_eq!(g.edge_stars_intersect(e, f), brute, "{e:?} {f:?}");
            }
        }
    }

    #[test]
    fn unknown_ids_are_errors() {
        let g = path3();
        assert!(g.star(VertexId(17)).is_err());
        assert!(g.edge_star(EdgeId(9)).is_err());
    }
}
