//! Potential representations and their scalar reductions: per-edge integrals
//! `eta(e) = l_e * ∫_e V`, vertex aggregates `kappa(v) = ∫_{S(v)} V`, the
//! distribution function `nu(tau) = #{entries > tau}`, and `l^q` / weak-`l^q`
//! quasi-norms.
//!
//! Potentials are nonnegative and stored separately from graphs so one graph
//! supports potential sweeps with identical structure.

use crate::error::{Error, Result};
use crate::graphs::{CombinatorialGraph, EdgeId, MetricGraph, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;

/// Vertex-indexed nonnegative potential.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexPotential {
    pub values: Vec<f64>,
}

impl VertexPotential {
    pub fn zeros(n: usize) -> Self {
        VertexPotential { values: vec![0.0; n] }
    }

    pub fn constant(n: usize, c: f64) -> Self {
        VertexPotential { values: vec![c; n] }
    }

    pub fn get(&self, v: VertexId) -> f64 {
        self.values[v.0]
    }

    pub fn set(&mut self, v: VertexId, value: f64) {
        self.values[v.0] = value;
    }

    /// Vertices with strictly positive value.
    pub fn support(&self) -> Vec<VertexId> {
        self.values
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x > 0.0)
            .map(|(v, _)| VertexId(v))
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        for (i, &x) in self.values.iter().enumerate() {
            if x < 0.0 || !x.is_finite() {
                return Err(Error::InvalidArgument(format!(
                    "vertex potential must be finite and >= 0, got {x} at vertex {i}"
                )));
            }
        }
        Ok(())
    }

    /// `l^q` norm of the value vector.
    pub fn ell_q(&self, q: f64) -> Result<f64> {
        SequenceSummary::new(self.values.clone()).ell_q(q)
    }
}

/// Quadrature rule for edge integrals; recorded in every derived output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quadrature {
    Trapezoid,
    Simpson,
}

impl Quadrature {
    /// Node weights for `n` equally spaced samples spanning a length-`h*(n-1)`
    /// interval with spacing `h`.
    pub fn weights(self, n: usize, h: f64) -> Result<Vec<f64>> {
        if n < 2 {
            return Err(Error::Quadrature(format!("need >= 2 samples, got {n}")));
        }
        match self {
            Quadrature::Trapezoid => {
                let mut w = vec![h; n];
                w[0] = 0.5 * h;
                w[n - 1] = 0.5 * h;
                Ok(w)
            }
            Quadrature::Simpson => {
                if n % 2 == 0 {
                    return Err(Error::Quadrature(format!(
                        "Simpson needs an odd sample count, got {n}"
                    )));
                }
                let mut w = vec![0.0; n];
                for i in 0..n {
                    w[i] = if i == 0 || i == n - 1 {
                        h / 3.0
                    } else if i % 2 == 1 {
                        4.0 * h / 3.0
                    } else {
                        2.0 * h / 3.0
                    };
                }
                Ok(w)
            }
        }
    }
}

/// Per-edge potential data: a constant or a uniform sample vector (endpoints
/// included) interpreted as a piecewise-linear function along the edge.
#[derive(Clone, Debug, PartialEq)]
pub enum EdgeValues {
    Const(f64),
    Samples(Vec<f64>),
}

/// Edge-indexed nonnegative potential on a metric graph.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgePotential {
    pub per_edge: Vec<EdgeValues>,
    pub rule: Quadrature,
}

impl EdgePotential {
    pub fn constant(edge_count: usize, c: f64) -> Self {
        EdgePotential {
            per_edge: vec![EdgeValues::Const(c); edge_count],
            rule: Quadrature::Trapezoid,
        }
    }

    pub fn zeros(edge_count: usize) -> Self {
        Self::constant(edge_count, 0.0)
    }

    /// Sample a function uniformly on every edge (`samples` points including
    /// the endpoints). The coordinate runs from 0 at the lower-id endpoint.
    pub fn sample<F: Fn(EdgeId, f64) -> f64>(
        graph: &MetricGraph,
        samples: usize,
        f: F,
    ) -> Result<Self> {
        if samples < 2 {
            return Err(Error::Quadrature("need >= 2 samples per edge".into()));
        }
        let mut per_edge = Vec::with_capacity(graph.edge_count());
        for e in graph.edge_ids() {
            let l = graph.length(e);
            let h = l / (samples - 1) as f64;
            let vals: Vec<f64> = (0..samples).map(|i| f(e, i as f64 * h)).collect();
            per_edge.push(EdgeValues::Samples(vals));
        }
        EdgePotential { per_edge, rule: Quadrature::Trapezoid }.validated()
    }

    pub fn with_rule(mut self, rule: Quadrature) -> Self {
        self.rule = rule;
        self
    }

    pub fn validated(self) -> Result<Self> {
        for (e, ev) in self.per_edge.iter().enumerate() {
            match ev {
                EdgeValues::Const(c) => {
                    if *c < 0.0 || !c.is_finite() {
                        return Err(Error::InvalidArgument(format!(
                            "edge potential must be finite and >= 0, got {c} on edge {e}"
                        )));
                    }
                }
                EdgeValues::Samples(v) => {
                    if v.len() < 2 {
                        return Err(Error::Quadrature(format!(
                            "edge {e} has {} samples, need >= 2",
                            v.len()
                        )));
                    }
                    if v.iter().any(|&x| x < 0.0 || !x.is_finite()) {
                        return Err(Error::InvalidArgument(format!(
                            "edge potential must be finite and >= 0 on edge {e}"
                        )));
                    }
                }
            }
        }
        Ok(self)
    }

    /// Value at coordinate `x in [0, l]` along the edge; sampled data is
    /// interpolated linearly.
    pub fn value_at(&self, e: EdgeId, x: f64, length: f64) -> f64 {
        match &self.per_edge[e.0] {
            EdgeValues::Const(c) => *c,
            EdgeValues::Samples(v) => {
                let t = (x / length).clamp(0.0, 1.0) * (v.len() - 1) as f64;
                let i = (t.floor() as usize).min(v.len() - 2);
                let frac = t - i as f64;
                v[i] * (1.0 - frac) + v[i + 1] * frac
            }
        }
    }

    /// Values at `n` uniformly spaced nodes (endpoints included) along edge `e`.
    ///
    /// Errors when the node grid is coarser than the stored sample grid, which
    /// would silently discard potential detail.
    pub fn values_on_nodes(&self, e: EdgeId, n: usize, length: f64) -> Result<Vec<f64>> {
        match &self.per_edge[e.0] {
            EdgeValues::Const(c) => Ok(vec![*c; n]),
            EdgeValues::Samples(v) => {
                if n < v.len() {
                    return Err(Error::MeshTooCoarse {
                        edge: e.0,
                        intervals: n - 1,
                        samples: v.len() - 1,
                    });
                }
                let h = length / (n - 1) as f64;
                Ok((0..n).map(|i| self.value_at(e, i as f64 * h, length)).collect())
            }
        }
    }

    /// Quadrature of `V` over edge `e` on the potential's own sample grid.
    pub fn integrate(&self, e: EdgeId, length: f64) -> Result<f64> {
        match &self.per_edge[e.0] {
            EdgeValues::Const(c) => Ok(c * length),
            EdgeValues::Samples(v) => {
                let h = length / (v.len() - 1) as f64;
                let w = self.rule.weights(v.len(), h)?;
                Ok(dot(v, &w))
            }
        }
    }

    /// Quadrature of `sqrt(V)` over edge `e`.
    pub fn integrate_sqrt(&self, e: EdgeId, length: f64) -> Result<f64> {
        match &self.per_edge[e.0] {
            EdgeValues::Const(c) => Ok(c.sqrt() * length),
            EdgeValues::Samples(v) => {
                let h = length / (v.len() - 1) as f64;
                let w = self.rule.weights(v.len(), h)?;
                Ok(v.iter().zip(&w).map(|(&x, &wi)| x.sqrt() * wi).sum())
            }
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

/// `eta(e) = l_e * ∫_e V` for every edge of the graph.
pub fn eta(graph: &MetricGraph, pot: &EdgePotential) -> Result<Vec<f64>> {
    graph
        .edge_ids()
        .map(|e| Ok(graph.length(e) * pot.integrate(e, graph.length(e))?))
        .collect()
}

/// `kappa(v) = ∫_{S(v)} V = Σ_{e∋v} ∫_e V` as a vertex potential.
pub fn kappa(graph: &MetricGraph, pot: &EdgePotential) -> Result<VertexPotential> {
    let mut values = vec![0.0; graph.vertex_count()];
    for e in graph.edge_ids() {
        let (a, b) = graph.endpoints(e);
        let integral = pot.integrate(e, graph.length(e))?;
        values[a.0] += integral;
        values[b.0] += integral;
    }
    Ok(VertexPotential { values })
}

/// `kappa` evaluated with the trapezoid rule on prescribed per-edge node
/// grids (`nodes_per_edge[e]` points including endpoints). Used where the
/// potential form of an assembled pair and the discrete comparison potential
/// must share one quadrature.
pub fn kappa_on_nodes(
    graph: &MetricGraph,
    pot: &EdgePotential,
    nodes_per_edge: &[usize],
) -> Result<VertexPotential> {
    let mut values = vec![0.0; graph.vertex_count()];
    for e in graph.edge_ids() {
        let l = graph.length(e);
        let n = nodes_per_edge[e.0];
        let v = pot.values_on_nodes(e, n, l)?;
        let w = Quadrature::Trapezoid.weights(n, l / (n - 1) as f64)?;
        let integral = dot(&v, &w);
        let (a, b) = graph.endpoints(e);
        values[a.0] += integral;
        values[b.0] += integral;
    }
    Ok(VertexPotential { values })
}

/// Sorted nonincreasing view of a nonnegative sequence with its distribution
/// function and quasi-norms.
#[derive(Clone, Debug)]
pub struct SequenceSummary {
    /// Nonincreasing.
    pub sorted: Vec<f64>,
}

impl SequenceSummary {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        SequenceSummary { sorted: values }
    }

    /// Distribution function `nu(tau) = #{entries > tau}` (strict).
    pub fn distribution(&self, tau: f64) -> usize {
        self.sorted.partition_point(|&x| x > tau)
    }

    /// `(Σ a^q)^{1/q}`.
    pub fn ell_q(&self, q: f64) -> Result<f64> {
        if q <= 0.0 {
            return Err(Error::InvalidArgument(format!("q must be > 0, got {q}")));
        }
        Ok(self.sorted.iter().map(|&a| a.powf(q)).sum::<f64>().powf(1.0 / q))
    }

    /// Weak quasi-norm `sup_n n^{1/q} a_(n)` over the sorted sequence
    /// (1-indexed).
    pub fn weak_q(&self, q: f64) -> Result<f64> {
        if q <= 0.0 {
            return Err(Error::InvalidArgument(format!("q must be > 0, got {q}")));
        }
        Ok(self
            .sorted
            .iter()
            .enumerate()
            .map(|(i, &a)| ((i + 1) as f64).powf(1.0 / q) * a)
            .fold(0.0, f64::max))
    }

    pub fn max(&self) -> f64 {
        self.sorted.first().copied().unwrap_or(0.0)
    }
}

/// Count of entries strictly above `tau`.
pub fn distribution(values: &[f64], tau: f64) -> usize {
    values.iter().filter(|&&x| x > tau).count()
}

/// `(l^q, weak-l^q)` pair for a value list.
pub fn quasi_norms(values: &[f64], q: f64) -> Result<(f64, f64)> {
    let s = SequenceSummary::new(values.to_vec());
    Ok((s.ell_q(q)?, s.weak_q(q)?))
}

// ---------------------------------------------------------------------------
// Potential file format
// ---------------------------------------------------------------------------

/// Serialize a vertex potential (`vpot <label> <value>` lines, zeros omitted).
pub fn save_vertex_potential(g: &CombinatorialGraph, pot: &VertexPotential) -> String {
    let mut out = String::new();
    for v in g.vertex_ids() {
        let x = pot.get(v);
        if x != 0.0 {
            writeln!(out, "vpot {} {}", g.label(v), x).unwrap();
        }
    }
    out
}

/// Serialize an edge potential. Edges are referenced as `label1:label2`.
pub fn save_edge_potential(g: &MetricGraph, pot: &EdgePotential) -> String {
    let mut out = String::new();
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        let key = format!("{}:{}", g.label(a), g.label(b));
        match &pot.per_edge[e.0] {
            EdgeValues::Const(c) => writeln!(out, "epot {key} const {c}").unwrap(),
            EdgeValues::Samples(v) => {
                let joined =
                    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                writeln!(out, "epot {key} samples {} {}", v.len(), joined).unwrap();
            }
        }
    }
    out
}

/// Parse `vpot` lines against a graph's label table; unlisted vertices get 0.
pub fn load_vertex_potential(g: &CombinatorialGraph, text: &str) -> Result<VertexPotential> {
    let mut pot = VertexPotential::zeros(g.vertex_count());
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let ctx = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        match tok.next().unwrap() {
            "vpot" => {
                let label = tok.next().ok_or_else(|| ctx("missing vertex label"))?;
                let value: f64 = tok
                    .next()
                    .ok_or_else(|| ctx("missing value"))?
                    .parse()
                    .map_err(|_| ctx("value is not a number"))?;
                let v = g
                    .vertex_by_label(label)
                    .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
                pot.set(v, value);
            }
            other => return Err(ctx(&format!("unknown directive {other:?}"))),
        }
    }
    pot.validate()?;
    Ok(pot)
}

/// Parse `epot` lines against a metric graph; unlisted edges get 0.
pub fn load_edge_potential(g: &MetricGraph, text: &str) -> Result<EdgePotential> {
    let mut by_edge: HashMap<usize, EdgeValues> = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let ctx = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        match tok.next().unwrap() {
            "epot" => {
                let key = tok.next().ok_or_else(|| ctx("missing edge reference"))?;
                let (la, lb) = key
                    .split_once(':')
                    .ok_or_else(|| ctx("edge reference must be label1:label2"))?;
                let a = g
                    .vertex_by_label(la)
                    .ok_or_else(|| Error::UnknownLabel(la.to_string()))?;
                let b = g
                    .vertex_by_label(lb)
                    .ok_or_else(|| Error::UnknownLabel(lb.to_string()))?;
                let e = g.edge_between(a, b).ok_or_else(|| {
                    Error::Parse(format!("line {}: no edge {la}:{lb}", lineno + 1))
                })?;
                let kind = tok.next().ok_or_else(|| ctx("missing const|samples"))?;
                let ev = match kind {
                    "const" => {
                        let c: f64 = tok
                            .next()
                            .ok_or_else(|| ctx("missing constant"))?
                            .parse()
                            .map_err(|_| ctx("constant is not a number"))?;
                        EdgeValues::Const(c)
                    }
                    "samples" => {
                        let n: usize = tok
                            .next()
                            .ok_or_else(|| ctx("missing sample count"))?
                            .parse()
                            .map_err(|_| ctx("sample count is not an integer"))?;
                        let vals: Vec<f64> = tok
                            .map(|s| s.parse::<f64>())
                            .collect::<std::result::Result<_, _>>()
                            .map_err(|_| ctx("sample is not a number"))?;
                        if vals.len() != n {
                            return Err(ctx(&format!(
                                "expected {n} samples, found {}",
                                vals.len()
                            )));
                        }
                        EdgeValues::Samples(vals)
                    }
                    other => return Err(ctx(&format!("unknown potential kind {other:?}"))),
                };
                by_key.insert((e.0, 0), ev);
            }
            other => return Err(ctx(&format!("unknown directive {other:?}"))),
        }
    }
    let per_edge = (0..g.edge_count())
        .map(|e| by_key.remove(&(e, 0)).unwrap_or(EdgeValues::Const(0.0)))
        .collect();
    EdgePotential { per_edge, rule: Quadrature::Trapezoid }.validated()
}
