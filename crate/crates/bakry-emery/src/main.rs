//! Thin command-line front end; all computation lives in the library.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bakry_emery::solver::SolverError;
use bakry_emery::{
    comparison_table, curvature_at, curvature_at_verified, render_table, smooth_curvature,
    table_row, two_ball_of_order, Graph, TableFormat, TilingOrder,
};

#[derive(Parser)]
#[command(name = "bakry-emery", version, about = "Bakry-Émery curvature of graph vertices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the curvature at a vertex of an edge-list graph
    Curvature {
        /// Edge-list file: one `u v` pair per line, `#` comments allowed
        file: PathBuf,
        /// Vertex to evaluate at
        #[arg(long)]
        vertex: String,
        /// Run both solver routes and require agreement
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// One tiling order: smooth space-form curvature vs discrete curvature
    Tiling {
        /// Tiling order k ≥ 3
        #[arg(long)]
        order: u32,
        /// Also write the 2-ball edge list to this file
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// The full comparison table for orders 3 through 9
    Table {
        #[arg(long, value_enum, default_value_t = TableFormatArg::Text)]
        format: TableFormatArg,
    },
    /// Write the 2-ball of an order-k tiling as an edge list
    Ball {
        /// Tiling order k ≥ 3
        #[arg(long)]
        order: u32,
        /// Output file
        #[arg(long)]
        emit: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormatArg {
    Text,
    Csv,
    Json,
}

impl From<TableFormatArg> for TableFormat {
    fn from(f: TableFormatArg) -> Self {
        match f {
            TableFormatArg::Text => TableFormat::Text,
            TableFormatArg::Csv => TableFormat::Csv,
            TableFormatArg::Json => TableFormat::Json,
        }
    }
}

/// Exit code 2: bad input. Exit code 3: internal numerical failure.
enum AppError {
    Input(String),
    Numerical(String),
}

impl From<SolverError> for AppError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::Graph(g) => AppError::Input(g.to_string()),
            SolverError::MethodDisagreement { .. } => AppError::Numerical(e.to_string()),
            other => AppError::Numerical(other.to_string()),
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Input(format!("cannot read {}: {e}", path.display())))?;
    Graph::from_edge_list(&text).map_err(|e| AppError::Input(e.to_string()))
}

fn parse_order(k: u32) -> Result<TilingOrder, AppError> {
    TilingOrder::new(k).map_err(|e| AppError::Input(e.to_string()))
}

fn write_edge_list(graph: &Graph, path: &Path) -> Result<(), AppError> {
    std::fs::write(path, graph.to_edge_list())
        .map_err(|e| AppError::Input(format!("cannot write {}: {e}", path.display())))
}

fn cmd_curvature(file: &Path, vertex: &str, verify: bool, format: Format) -> Result<(), AppError> {
    let graph = read_graph(file)?;
    if verify {
        let both = curvature_at_verified(&graph, vertex)?;
        match format {
            Format::Text => {
                println!("schur     {:.6}", both.schur.kappa);
                println!("bisection {:.6}", both.bisection.kappa);
            }
            Format::Json => {
                let out = serde_json::json!({
                    "vertex": vertex,
                    "schur": both.schur.kappa,
                    "bisection": both.bisection.kappa,
                    "difference": both.difference(),
                });
                println!("{out}");
            }
        }
    } else {
        let result = curvature_at(&graph, vertex)?;
        match format {
            Format::Text => println!("{:.6}", result.kappa),
            Format::Json => {
                let minimizer: serde_json::Map<String, serde_json::Value> = result
                    .minimizer
                    .iter()
                    .flat_map(|f| f.iter())
                    .map(|(v, x)| (v.to_owned(), serde_json::json!(x)))
                    .collect();
                let out = serde_json::json!({
                    "vertex": vertex,
                    "curvature": result.kappa,
                    "method": result.method.as_str(),
                    "residual": result.residual,
                    "minimizer": minimizer,
                });
                println!("{out}");
            }
        }
    }
    Ok(())
}

fn cmd_tiling(k: u32, emit: Option<&Path>) -> Result<(), AppError> {
    let order = parse_order(k)?;
    let row = table_row(order)?;
    let smooth = smooth_curvature(order);
    println!("order:    {}", row.order);
    println!("tiling:   {}", row.label);
    println!("smooth curvature:   {:.6}", row.smooth_kappa);
    println!("discrete curvature: {:.6}", row.discrete_k);
    if let Some(r) = smooth.radius {
        println!("sphere radius:      {r:.6}");
    }
    if let Some(path) = emit {
        write_edge_list(&two_ball_of_order(order), path)?;
    }
    Ok(())
}

fn cmd_table(format: TableFormatArg) -> Result<(), AppError> {
    let rows = comparison_table()?;
    print!("{}", render_table(&rows, format.into()));
    Ok(())
}

fn cmd_ball(k: u32, emit: &Path) -> Result<(), AppError> {
    let order = parse_order(k)?;
    write_edge_list(&two_ball_of_order(order), emit)
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Curvature {
            file,
            vertex,
            verify,
            format,
        } => cmd_curvature(&file, &vertex, verify, format),
        Command::Tiling { order, emit } => cmd_tiling(order, emit.as_deref()),
        Command::Table { format } => cmd_table(format),
        Command::Ball { order, emit } => cmd_ball(order, &emit),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
