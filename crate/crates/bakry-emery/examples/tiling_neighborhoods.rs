//! Generate the 2-ball neighborhoods of the {3,k} triangular tilings and
//! show how the local structure grows with the order: sphere sizes, the
//! shared apexes over the rim edges, and the private leaves that appear
//! from k = 6 on.
//!
//! ```bash
//! cargo run --example tiling_neighborhoods
//! ```

use bakry_emery::{two_ball_of_order, TilingOrder};

fn main() {
    println!("{:<5} {:>8} {:>6} {:>4} {:>4}", "order", "vertices", "edges", "|S1|", "|S2|");
    for k in 3..=12u32 {
        let order = TilingOrder::new(k).unwrap();
        let g = two_ball_of_order(order);
        let ball = g.two_ball("x").unwrap();
        println!(
            "{:<5} {:>8} {:>6} {:>4} {:>4}",
            k,
            g.vertex_count(),
            g.edge_count(),
            ball.s1().len(),
            ball.s2().len()
        );
    }

    println!("\nedge list of the order-5 ball (icosahedron minus its antipode):");
    print!("{}", two_ball_of_order(TilingOrder::new(5).unwrap()).to_edge_list());

    // orders below 3 cannot tile
    assert!(TilingOrder::new(2).is_err());
}
