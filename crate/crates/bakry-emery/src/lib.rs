//! Bakry–Émery curvature of graph vertices.
//!
//! The curvature of a finite simple graph at a vertex `x` is the largest
//! `K` such that `Γ₂(f)(x) ≥ K·Γ(f)(x)` for every real function `f` on the
//! vertices, where Γ and Γ₂ are the iterated carré-du-champ forms of the
//! unnormalized graph Laplacian. It is a discrete analogue of a Ricci
//! curvature lower bound, and it only depends on the 2-ball around `x`.
//!
//! The crate computes it two independent ways (exact Schur-complement
//! reduction and positive-semidefinite feasibility bisection), generates the
//! 2-ball neighborhoods of the order-k regular triangular tilings {3,k}
//! together with their spherical closures (tetrahedron, octahedron,
//! icosahedron), evaluates the matching smooth space-form curvatures in
//! closed form, and renders the smooth-vs-discrete comparison table.
//!
//! # Quick start
//!
//! ```
//! use bakry_emery::{curvature_at, Graph};
//!
//! let g = Graph::from_edge_list("x a\nx b\nx c\na b\na c\nb c").unwrap();
//! let result = curvature_at(&g, "x").unwrap();
//! assert!((result.kappa - 3.0).abs() < 1e-9); // complete graph K4
//! ```
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --example comparison_table        # the 7-row smooth-vs-discrete table
//! cargo run --example curvature_from_edge_list
//! cargo run --example tiling_neighborhoods    # {3,k} 2-ball generators
//! cargo run --example platonic_solids         # closures + vertex transitivity
//! cargo run --example space_forms             # closed-form smooth curvatures
//! cargo run --example minimizing_function     # extremal functions + both solvers
//! ```
//!
//! A thin CLI (`bakry-emery`) fronts the same entry points with
//! `curvature`, `tiling`, `table`, and `ball` subcommands.

pub mod forms;
pub mod graph;
pub mod matrix;
pub mod report;
pub mod solver;
pub mod spaceform;
pub mod tilings;

pub use forms::{
    assemble_gamma2_form, assemble_gamma_form, gamma2_at, gamma_at, laplacian_at, FormsError,
    FunctionOnBall, QuadraticForm,
};
pub use graph::{Graph, GraphError, LocalBall};
pub use matrix::SymMatrix;
pub use report::{
    comparison_table, non_increasing, render_table, strictly_decreasing, table_row, TableFormat,
    TableRow,
};
pub use solver::{
    curvature_at, curvature_at_verified, curvature_bisection, curvature_schur,
    min_eigen_symmetric, CurvatureResult, SolveMethod, SolverError, VerifiedCurvature,
};
pub use spaceform::{smooth_curvature, SpaceFormClass, SpaceFormCurvature};
pub use tilings::{platonic, two_ball_of_order, TilingError, TilingOrder};
