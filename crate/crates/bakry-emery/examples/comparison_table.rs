//! Build the smooth-vs-discrete curvature comparison for the {3,k} tilings,
//! orders 3 through 9, and print it in all three formats.
//!
//! ```bash
//! cargo run --example comparison_table
//! ```

use bakry_emery::{comparison_table, render_table, TableFormat};

fn main() {
    let rows = comparison_table().expect("tiling balls are valid inputs");

    println!("{}", render_table(&rows, TableFormat::Text));
    println!("--- csv ---\n{}", render_table(&rows, TableFormat::Csv));
    println!("--- json ---\n{}", render_table(&rows, TableFormat::Json));
}
