//! Greedy colorings used by the lower-bound constructions: vertex coloring
//! into independent sets (at most `d+1` classes for degree bound `d`) and
//! edge coloring into star-disjoint families (at most `2d^2+1` classes).
//!
//! Both procedures walk the vertices/edges in insertion order and assign the
//! smallest admissible class, so results are deterministic.

use crate::error::Result;
use crate::graphs::{CombinatorialGraph, EdgeId, VertexId};

/// Proper vertex coloring: no edge joins two vertices of the same class.
#[derive(Clone, Debug)]
pub struct VertexColoring {
    /// Class index per vertex id.
    pub color: Vec<usize>,
    pub class_count: usize,
}

impl VertexColoring {
    pub fn class_of(&self, v: VertexId) -> usize {
        self.color[v.0]
    }

    /// Members of one class.
    pub fn class(&self, c: usize) -> Vec<VertexId> {
        self.color
            .iter()
            .enumerate()
            .filter(|&(_, &cc)| cc == c)
            .map(|(v, _)| VertexId(v))
            .collect()
    }
}

/// Edge coloring whose classes have pairwise disjoint edge stars.
#[derive(Clone, Debug)]
pub struct EdgeStarColoring {
    pub color: Vec<usize>,
    pub class_count: usize,
}

impl EdgeStarColoring {
    pub fn class_of(&self, e: EdgeId) -> usize {
        self.color[e.0]
    }

    pub fn class(&self, c: usize) -> Vec<EdgeId> {
        self.color
            .iter()
            .enumerate()
            .filter(|&(_, &cc)| cc == c)
            .map(|(e, _)| EdgeId(e))
            .collect()
    }
}

/// Greedy proper coloring in vertex-id order; uses at most `degree_bound + 1`
/// classes.
pub fn greedy_vertex_coloring(g: &CombinatorialGraph) -> VertexColoring {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    let mut class_count = 0;
    let mut used = Vec::new();
    for v in 0..n {
        used.clear();
        for (w, _) in g.neighbors(VertexId(v)) {
            if color[w.0] != usize::MAX {
                used.push(color[w.0]);
            }
        }
        let mut c = 0;
        while used.contains(&c) {
            c += 1;
        }
        color[v] = c;
        class_count = class_count.max(c + 1);
    }
    VertexColoring { color, class_count }
}

/// Greedy star-disjoint edge coloring in edge-insertion order; uses at most
/// `2 * degree_bound^2 + 1` classes.
pub fn greedy_edge_star_coloring(g: &CombinatorialGraph) -> EdgeStarColoring {
    let ne = g.edge_count();
    let mut color = vec![usize::MAX; ne];
    let mut class_count = 0;
    let mut used = Vec::new();
    for e in 0..ne {
        used.clear();
        for f in 0..e {
            if g.edge_stars_intersect(EdgeId(e), EdgeId(f)) {
                used.push(color[f]);
            }
        }
        let mut c = 0;
        while used.contains(&c) {
            c += 1;
        }
        color[e] = c;
        class_count = class_count.max(c + 1);
    }
    EdgeStarColoring { color, class_count }
}

/// Exhaustive edge scan confirming the coloring is proper.
pub fn verify_proper(g: &CombinatorialGraph, col: &VertexColoring) -> Result<()> {
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        if col.color[a.0] == col.color[b.0] {
            return Err(crate::error::Error::InvalidArgument(format!(
                "vertices {} and {} share class {}",
                a.0, b.0, col.color[a.0]
            )));
        }
    }
    Ok(())
}

/// Brute-force pairwise check that classes are star-disjoint.
pub fn verify_star_disjoint(g: &CombinatorialGraph, col: &EdgeStarColoring) -> Result<()> {
    for c in 0..col.class_count {
        let members = col.class(c);
        for (i, &e) in members.iter().enumerate() {
            for &f in &members[i + 1..] {
                let se = g.edge_star(e)?;
                let sf = g.edge_star(f)?;
                if se.iter().any(|x| sf.contains(x)) {
                    return Err(crate::error::Error::InvalidArgument(format!(
                        "edges {} and {} in class {c} have intersecting stars",
                        e.0, f.0
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn four_cycle_needs_two_classes() {
        let g = build::cycle(4).unwrap();
        let col = greedy_vertex_coloring(&g);
        assert_eq!(col.class_count, 2);
        verify_proper(&g, &col).unwrap();
    }

    #[test]
    fn star_k14_needs_two_classes() {
        let g = build::star(4).unwrap();
        let col = greedy_vertex_coloring(&g);
        assert_eq!(col.class_count, 2);
        assert!(col.class_count <= g.stats().degree_bound + 1);
        verify_proper(&g, &col).unwrap();
    }

    #[test]
    fn random_vertex_colorings_proper_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let g = build::random_combinatorial(&mut rng, 40, 40, 6, 1.0, 1.0);
            let col = greedy_vertex_coloring(&g);
            verify_proper(&g, &col).unwrap();
            assert!(col.class_count <= g.stats().degree_bound + 1);
        }
    }

    #[test]
    fn p4_edges_all_conflict() {
        let g = build::path(4).unwrap();
        let col = greedy_edge_star_coloring(&g);
        // all three edges pairwise star-intersecting
        assert_eq!(col.class_count, 3);
        let d = g.stats().degree_bound;
        assert!(col.class_count <= 2 * d * d + 1);
        verify_star_disjoint(&g, &col).unwrap();
    }

    #[test]
    fn distant_edges_reuse_class_zero() {
        // path on 6 vertices: edges (0,1) and (4,5) are at distance >= 2
        let g = build::path(6).unwrap();
        let col = greedy_edge_star_coloring(&g);
        assert_eq!(col.color[0], 0);
        assert_eq!(col.color[4], 0);
        verify_star_disjoint(&g, &col).unwrap();
    }

    #[test]
    fn random_edge_star_colorings_disjoint_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..50 {
            let g = build::random_combinatorial(&mut rng, 25, 20, 5, 1.0, 1.0);
            let col = greedy_edge_star_coloring(&g);
            verify_star_disjoint(&g, &col).unwrap();
            let d = g.stats().degree_bound;
            assert!(col.class_count <= 2 * d * d + 1);
        }
    }

    #[test]
    fn coloring_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = build::random_combinatorial(&mut rng, 30, 25, 5, 1.0, 1.0);
        let a = greedy_vertex_coloring(&g);
        let b = greedy_vertex_coloring(&g);
        assert_eq!(a.color, b.color);
        let ea = greedy_edge_star_coloring(&g);
        let eb = greedy_edge_star_coloring(&g);
        assert_eq!(ea.color, eb.color);
    }
}
