//! Shared helpers for the integration suites: a brute-force Γ₂ oracle that
//! works on whole graphs straight from the operator definitions (independent
//! of the ball extraction and form assembly under test), and seeded random
//! graph generation.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bakry_emery::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Sparse vertex function: missing vertices read as 0.
pub type VertexFn = BTreeMap<String, f64>;

pub fn value(f: &VertexFn, v: &str) -> f64 {
    f.get(v).copied().unwrap_or(0.0)
}

pub fn indicator_fn(v: &str) -> VertexFn {
    BTreeMap::from([(v.to_owned(), 1.0)])
}

/// Δf(v) over the whole graph.
pub fn delta_full(g: &Graph, f: &VertexFn, v: &str) -> f64 {
    g.neighbors(v)
        .expect("vertex exists")
        .map(|w| value(f, w) - value(f, v))
        .sum()
}

/// Γ(f,h)(v) over the whole graph.
pub fn gamma_full(g: &Graph, f: &VertexFn, h: &VertexFn, v: &str) -> f64 {
    0.5 * g
        .neighbors(v)
        .expect("vertex exists")
        .map(|w| (value(f, w) - value(f, v)) * (value(h, w) - value(h, v)))
        .sum::<f64>()
}

/// Γ₂(f,h)(x) over the whole graph, by literal expansion of
/// 2Γ₂ = ΔΓ(f,h) − Γ(f,Δh) − Γ(h,Δf).
pub fn gamma2_full(g: &Graph, f: &VertexFn, h: &VertexFn, x: &str) -> f64 {
    let gamma_fh_x = gamma_full(g, f, h, x);
    let delta_gamma: f64 = g
        .neighbors(x)
        .expect("vertex exists")
        .map(|v| gamma_full(g, f, h, v) - gamma_fh_x)
        .sum();

    let df: VertexFn = g
        .vertices()
        .map(|v| (v.to_owned(), delta_full(g, f, v)))
        .collect();
    let dh: VertexFn = g
        .vertices()
        .map(|v| (v.to_owned(), delta_full(g, h, v)))
        .collect();

    0.5 * (delta_gamma - gamma_full(g, f, &dh, x) - gamma_full(g, h, &df, x))
}

/// Random connected simple graph on 4..=10 vertices: a random spanning tree
/// plus extra edges with a random density.
pub fn random_connected_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n: usize = rng.random_range(4..=10);
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut g = Graph::new();
    for i in 1..n {
        let j = rng.random_range(0..i);
        g.add_edge(&labels[i], &labels[j]).unwrap();
    }
    let p: f64 = rng.random_range(0.05..0.7);
    for i in 0..n {
        for j in (i + 1)..n {
            if !g.has_edge(&labels[i], &labels[j]) && rng.random_bool(p) {
                g.add_edge(&labels[i], &labels[j]).unwrap();
            }
        }
    }
    g
}

/// A uniformly random vertex label of the graph.
pub fn random_vertex(g: &Graph, rng: &mut ChaCha8Rng) -> String {
    let idx = rng.random_range(0..g.vertex_count());
    g.vertices().nth(idx).expect("index in range").to_owned()
}
