//! Parse a graph from edge-list text and compute the curvature at a few
//! vertices. The Petersen graph makes a nice non-tiling specimen: it is
//! vertex-transitive, so every vertex reports the same value.
//!
//! ```bash
//! cargo run --example curvature_from_edge_list
//! ```

use bakry_emery::{curvature_at, Graph};

const PETERSEN: &str = "\
# outer 5-cycle
o0 o1
o1 o2
o2 o3
o3 o4
o4 o0
# spokes
o0 i0
o1 i1
o2 i2
o3 i3
o4 i4
# inner pentagram
i0 i2
i2 i4
i4 i1
i1 i3
i3 i0
";

fn main() {
    let g = Graph::from_edge_list(PETERSEN).expect("well-formed edge list");
    println!(
        "Petersen graph: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );

    for vertex in ["o0", "o3", "i2"] {
        let result = curvature_at(&g, vertex).expect("vertex exists with degree 3");
        println!("K({vertex}) = {:.6}   (residual {:.1e})", result.kappa, result.residual);
    }

    // a path end has a different local picture than its interior
    let path = Graph::from_edge_list("a b\nb c\nc d").unwrap();
    for vertex in ["a", "b"] {
        println!(
            "path a-b-c-d: K({vertex}) = {:.6}",
            curvature_at(&path, vertex).unwrap().kappa
        );
    }
}
