//! Combinatorial 2-balls of the order-k regular triangular tilings {3,k},
//! and the full sphere closures for k = 3, 4, 5 (tetrahedron, octahedron,
//! icosahedron).
//!
//! Only the 1-skeleton matters for the curvature, so the construction is
//! purely combinatorial; no coordinates or embeddings.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TilingError {
    #[error("invalid tiling order {order}: {requirement}")]
    InvalidOrder {
        order: u32,
        requirement: &'static str,
    },
}

/// Vertex degree k ≥ 3 of a {3,k} triangular tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TilingOrder(u32);

impl TilingOrder {
    pub fn new(k: u32) -> Result<Self, TilingError> {
        if k < 3 {
            return Err(TilingError::InvalidOrder {
                order: k,
                requirement: "a triangular tiling needs at least 3 triangles per vertex",
            });
        }
        Ok(TilingOrder(k))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for TilingOrder {
    type Error = TilingError;

    fn try_from(k: u32) -> Result<Self, Self::Error> {
        TilingOrder::new(k)
    }
}

impl std::fmt::Display for TilingOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Build the 2-ball of the {3,k} tiling around a vertex `x`.
///
/// The 1-sphere is the cycle `u0 … u(k−1)`, each `ui` adjacent to `x` and its
/// two cycle neighbors. For k ≥ 5 the second triangle over each edge
/// `ui u(i+1)` contributes a shared apex `wi`, and each `ui` picks up `k − 5`
/// private 2-sphere neighbors `pi_j`, bringing every 1-sphere degree to
/// exactly k. Two special orders collapse differently: k = 3 closes into the
/// complete graph on four vertices with an empty 2-sphere, and k = 4 merges
/// all apexes into the single antipode of the octahedron. Edges inside the
/// 2-sphere are irrelevant to the curvature at `x` and are omitted.
pub fn two_ball_of_order(order: TilingOrder) -> Graph {
    let k = order.get() as usize;
    let mut g = Graph::new();
    let u: Vec<String> = (0..k).map(|i| format!("u{i}")).collect();

    for i in 0..k {
        g.add_edge("x", &u[i]).expect("distinct labels");
        g.add_edge(&u[i], &u[(i + 1) % k]).expect("distinct labels");
    }

    match k {
        3 => {} // already K4: the 3-cycle closes the 1-sphere
        4 => {
            for ui in &u {
                g.add_edge("w0", ui).expect("distinct labels");
            }
        }
        _ => {
            for i in 0..k {
                let w = format!("w{i}");
                g.add_edge(&w, &u[i]).expect("distinct labels");
                g.add_edge(&w, &u[(i + 1) % k]).expect("distinct labels");
            }
            for i in 0..k {
                for j in 0..(k - 5) {
                    g.add_edge(&format!("p{i}_{j}"), &u[i])
                        .expect("distinct labels");
                }
            }
        }
    }
    g
}

/// The full 1-skeleton of the spherical {3,k} tiling, k ∈ {3, 4, 5}:
/// tetrahedron, octahedron, or icosahedron.
pub fn platonic(order: TilingOrder) -> Result<Graph, TilingError> {
    match order.get() {
        3 => Ok(tetrahedron()),
        4 => Ok(octahedron()),
        5 => Ok(icosahedron()),
        k => Err(TilingError::InvalidOrder {
            order: k,
            requirement: "only k = 3, 4, 5 close up into spherical polyhedra",
        }),
    }
}

fn tetrahedron() -> Graph {
    let mut g = Graph::new();
    let v = ["v0", "v1", "v2", "v3"];
    for i in 0..4 {
        for j in (i + 1)..4 {
            g.add_edge(v[i], v[j]).expect("distinct labels");
        }
    }
    g
}

fn octahedron() -> Graph {
    // complement of the perfect matching {v0v3, v1v4, v2v5}
    let mut g = Graph::new();
    let v: Vec<String> = (0..6).map(|i| format!("v{i}")).collect();
    for i in 0..6 {
        for j in (i + 1)..6 {
            if j != i + 3 {
                g.add_edge(&v[i], &v[j]).expect("distinct labels");
            }
        }
    }
    g
}

fn icosahedron() -> Graph {
    // pentagonal antiprism a0..a4 / b0..b4 capped by the poles t and s
    let mut g = Graph::new();
    for i in 0..5usize {
        let next = (i + 1) % 5;
        g.add_edge("t", &format!("a{i}")).expect("distinct labels");
        g.add_edge("s", &format!("b{i}")).expect("distinct labels");
        g.add_edge(&format!("a{i}"), &format!("a{next}"))
            .expect("distinct labels");
        g.add_edge(&format!("b{i}"), &format!("b{next}"))
            .expect("distinct labels");
        g.add_edge(&format!("a{i}"), &format!("b{i}"))
            .expect("distinct labels");
        g.add_edge(&format!("a{i}"), &format!("b{next}"))
            .expect("distinct labels");
    }
    g
}
