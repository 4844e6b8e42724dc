//! Deterministic graph builders plus uniform-edge-sampling random graphs for
//! test sweeps.

use super::{CombinatorialGraph, MetricGraph};
use crate::error::{Error, Result};
use rand::Rng;

/// Default cap on generated vertex counts.
pub const DEFAULT_VERTEX_CAP: usize = 2_000_000;

fn check_cap(count: usize, cap: usize) -> Result<()> {
    if count > cap {
        Err(Error::SizeCap { got: count, cap })
    } else {
        Ok(())
    }
}

/// Box `{-radius..radius}^d` of the integer lattice with unit weights.
/// Vertices on a face of the box are marked boundary. Vertex ids follow
/// odometer order over coordinates, so the construction is deterministic.
pub fn lattice(d: usize, radius: i64, cap: usize) -> Result<CombinatorialGraph> {
    if d < 1 || radius < 1 {
        return Err(Error::InvalidArgument("lattice needs d >= 1, radius >= 1".into()));
    }
    let side = (2 * radius + 1) as usize;
    let count = side.checked_pow(d as u32).ok_or(Error::SizeCap { got: usize::MAX, cap })?;
    check_cap(count, cap)?;

    let coords_of = |mut idx: usize| -> Vec<i64> {
        let mut coords = vec![0i64; d];
        for axis in (0..d).rev() {
            coords[axis] = (idx % side) as i64 - radius;
            idx /= side;
        }
        coords
    };
    let index_of = |coords: &[i64]| -> usize {
        coords.iter().fold(0usize, |idx, &c| idx * side + (c + radius) as usize)
    };

    let mut labels = Vec::with_capacity(count);
    let mut boundary = Vec::with_capacity(count);
    let mut edges = Vec::new();
    for idx in 0..count {
        let coords = coords_of(idx);
        labels.push(coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("_"));
        boundary.push(coords.iter().any(|&c| c.abs() == radius));
        for axis in 0..d {
            if coords[axis] < radius {
                let mut next = coords.clone();
                next[axis] += 1;
                edges.push((idx, index_of(&next), 1.0));
            }
        }
    }
    CombinatorialGraph::new(labels, boundary, edges).validated()
}

/// Rooted tree with the given branching factor and `depth` levels below the
/// root, unit weights; leaves are marked boundary.
pub fn tree(branching: usize, depth: usize) -> Result<CombinatorialGraph> {
    if branching < 2 || depth < 1 {
        return Err(Error::InvalidArgument("tree needs branching >= 2, depth >= 1".into()));
    }
    let mut labels = vec!["n0".to_string()];
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    for _ in 0..depth {
        let mut next_level = Vec::new();
        for &parent in &level {
            for _ in 0..branching {
                let id = labels.len();
                labels.push(format!("n{id}"));
                edges.push((parent, id, 1.0));
                next_level.push(id);
            }
        }
        level = next_level;
    }
    let n = labels.len();
    let mut boundary = vec![false; n];
    for &leaf in &level {
        boundary[leaf] = true;
    }
    CombinatorialGraph::new(labels, boundary, edges).validated()
}

/// Path on `n` vertices, unit weights, endpoints boundary.
pub fn path(n: usize) -> Result<CombinatorialGraph> {
    if n < 2 {
        return Err(Error::InvalidArgument("path needs n >= 2".into()));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 1.0)).collect();
    CombinatorialGraph::from_edges(n, &edges, &[0, n - 1]).validated()
}

/// Cycle on `n` vertices, unit weights, no boundary.
pub fn cycle(n: usize) -> Result<CombinatorialGraph> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1.0)).collect();
    CombinatorialGraph::from_edges(n, &edges, &[]).validated()
}

/// Star `K_{1,k}` with unit weights; the leaves are boundary.
pub fn star(leaves: usize) -> Result<CombinatorialGraph> {
    if leaves < 2 {
        return Err(Error::InvalidArgument("star needs >= 2 leaves".into()));
    }
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i, 1.0)).collect();
    let bnd: Vec<_> = (1..=leaves).collect();
    CombinatorialGraph::from_edges(leaves + 1, &edges, &bnd).validated()
}

/// Metric path with the given edge lengths; endpoints boundary.
pub fn metric_path(lengths: &[f64]) -> Result<MetricGraph> {
    if lengths.is_empty() {
        return Err(Error::InvalidArgument("metric path needs >= 1 edge".into()));
    }
    let edges: Vec<_> = lengths.iter().enumerate().map(|(i, &l)| (i, i + 1, l)).collect();
    MetricGraph::from_edges(lengths.len() + 1, &edges, &[0, lengths.len()]).validated()
}

/// Metric star with one internal vertex and the given leg lengths; leaf ends
/// are boundary.
pub fn metric_star(lengths: &[f64]) -> Result<MetricGraph> {
    if lengths.len() < 2 {
        return Err(Error::InvalidArgument("metric star needs >= 2 legs".into()));
    }
    let edges: Vec<_> = lengths.iter().enumerate().map(|(i, &l)| (0, i + 1, l)).collect();
    let bnd: Vec<_> = (1..=lengths.len()).collect();
    MetricGraph::from_edges(lengths.len() + 1, &edges, &bnd).validated()
}

/// Metric lattice box with a common edge length.
pub fn metric_lattice(d: usize, radius: i64, edge_length: f64, cap: usize) -> Result<MetricGraph> {
    if edge_length <= 0.0 {
        return Err(Error::InvalidArgument("edge length must be positive".into()));
    }
    let g = lattice(d, radius, cap)?;
    let edges: Vec<(usize, usize, f64)> = g
        .edge_ids()
        .map(|e| {
            let (a, b) = g.endpoints(e);
            (a.0, b.0, edge_length)
        })
        .collect();
    let labels = g.vertex_ids().map(|v| g.label(v).to_string()).collect();
    let boundary = g.vertex_ids().map(|v| g.is_boundary(v)).collect();
    MetricGraph::new(labels, boundary, edges).validated()
}

/// Random connected skeleton: a random spanning tree plus uniformly sampled
/// extra edges, rejecting loops, duplicates, and degree-cap violations.
/// Degree-one vertices end up marked boundary.
fn random_skeleton<R: Rng>(
    rng: &mut R,
    n: usize,
    extra_edges: usize,
    max_degree: usize,
) -> (Vec<(usize, usize)>, Vec<bool>) {
    assert!(n >= 2 && max_degree >= 2);
    let mut degree = vec![0usize; n];
    let mut present = std::collections::HashSet::new();
    let mut edges = Vec::new();
    for v in 1..n {
        // attach to a random earlier vertex with spare degree
        let mut u = rng.gen_range(0..v);
        for _ in 0..4 * v {
            if degree[u] < max_degree {
                break;
            }
            u = rng.gen_range(0..v);
        }
        edges.push((u, v));
        present.insert((u.min(v), u.max(v)));
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut attempts = 0;
    let mut added = 0;
    while added < extra_edges && attempts < 50 * (extra_edges + 1) {
        attempts += 1;
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if present.contains(&key) || degree[a] >= max_degree || degree[b] >= max_degree {
            continue;
        }
        present.insert(key);
        edges.push((a, b));
        degree[a] += 1;
        degree[b] += 1;
        added += 1;
    }
    let boundary = degree.iter().map(|&d| d <= 1).collect();
    (edges, boundary)
}

/// Random combinatorial graph with weights uniform in `[w_lo, w_hi]`.
pub fn random_combinatorial<R: Rng>(
    rng: &mut R,
    n: usize,
    extra_edges: usize,
    max_degree: usize,
    w_lo: f64,
    w_hi: f64,
) -> CombinatorialGraph {
    let (edges, boundary) = random_skeleton(rng, n, extra_edges, max_degree);
    let weighted: Vec<_> =
        edges.iter().map(|&(a, b)| (a, b, rng.gen_range(w_lo..=w_hi))).collect();
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    CombinatorialGraph::new(labels, boundary, weighted)
}

/// Random metric graph with lengths uniform in `[l_lo, l_hi]`.
pub fn random_metric<R: Rng>(
    rng: &mut R,
    n: usize,
    extra_edges: usize,
    max_degree: usize,
    l_lo: f64,
    l_hi: f64,
) -> MetricGraph {
    let (edges, boundary) = random_skeleton(rng, n, extra_edges, max_degree);
    let measured: Vec<_> =
        edges.iter().map(|&(a, b)| (a, b, rng.gen_range(l_lo..=l_hi))).collect();
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    MetricGraph::new(labels, boundary, measured)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn lattice_d3_r2_counts() {
        let g = lattice(3, 2, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(g.vertex_count(), 125);
        // interior vertex (coordinates all zero) has degree 6
        let center = g.vertex_by_label("0_0_0").unwrap();
        assert_eq!(g.degree(center), 6);
        assert!(!g.is_boundary(center));
    }

    #[test]
    fn lattice_d1_r1_is_a_path_on_three() {
        let g = lattice(1, 1, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.free_vertices().len(), 1);
    }

    #[test]
    fn lattice_interior_degree_histogram_is_coordinate_symmetric() {
        let g = lattice(2, 3, DEFAULT_VERTEX_CAP).unwrap();
        let mut hist = std::collections::BTreeMap::new();
        for v in g.vertex_ids() {
            if !g.is_boundary(v) {
                *hist.entry(g.degree(v)).or_insert(0usize) += 1;
            }
        }
        assert_eq!(hist.len(), 1);
        assert_eq!(hist[&4], 25);
    }

    #[test]
    fn lattice_cap_enforced() {
        assert!(matches!(lattice(3, 10, 100), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn binary_tree_depth3_has_15_vertices() {
        let g = tree(2, 3).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.boundary_vertices().len(), 8);
    }

    #[test]
    fn random_graphs_are_valid_and_respect_degree_cap() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = random_combinatorial(&mut rng, 30, 25, 5, 0.5, 2.0);
            assert!(g.validate().pass(), "{:?}", g.validate().violations);
            assert!(g.stats().degree_bound <= 5);
            let m = random_metric(&mut rng, 20, 12, 4, 0.5, 2.0);
            assert!(m.validate().pass());
            assert!(m.stats().degree_bound <= 4);
        }
    }
}
