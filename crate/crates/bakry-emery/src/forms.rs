//! Pointwise evaluators for the graph Laplacian Δ and the bilinear forms
//! Γ and Γ₂, plus assembly of the two symmetric quadratic forms over the
//! coordinates `f(v)`, `v ∈ B₂(x) \ {x}`, with `f(x) = 0`.
//!
//! The operators, on functions `f, g` over vertices:
//!
//! ```text
//! Δf(x)      = Σ_{v∼x} (f(v) − f(x))
//! Γ(f,g)(x)  = ½ Σ_{v∼x} (f(v) − f(x)) (g(v) − g(x))
//! 2Γ₂(f,g)(x) = ΔΓ(f,g)(x) − Γ(f, Δg)(x) − Γ(g, Δf)(x)
//! ```
//!
//! Every term of Γ₂ at the ball center only reads values on the 2-ball and
//! edges incident to the 1-ball, so a [`LocalBall`] carries all the data the
//! assembly needs.
//!
//! Assembly evaluates the bilinear forms on indicator-function pairs instead
//! of using hand-derived closed-form entries; the matrices are small enough
//! that auditable directness wins over cleverness.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::LocalBall;
use crate::matrix::SymMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormsError {
    #[error("vertex {vertex:?} is outside the evaluation scope (center and 1-sphere only)")]
    OutOfScopeVertex { vertex: String },
    #[error("vertex {vertex:?} is not in the ball domain")]
    NotInBall { vertex: String },
}

/// A real-valued function on the vertices of a 2-ball.
///
/// The domain is exactly `{center} ∪ S₁ ∪ S₂`. Constructors start from zero
/// everywhere, which also pins the center to the `f(x) = 0` normalization the
/// quadratic forms assume; [`FunctionOnBall::set`] may override any vertex,
/// including the center, for the pointwise evaluators.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionOnBall {
    values: BTreeMap<String, f64>,
}

impl FunctionOnBall {
    /// The zero function on the ball.
    pub fn zero(ball: &LocalBall) -> Self {
        FunctionOnBall {
            values: ball.vertices().map(|v| (v.to_owned(), 0.0)).collect(),
        }
    }

    /// Indicator of a single ball vertex.
    pub fn indicator(ball: &LocalBall, vertex: &str) -> Result<Self, FormsError> {
        let mut f = FunctionOnBall::zero(ball);
        f.set(vertex, 1.0)?;
        Ok(f)
    }

    /// Build from a closure over the ball vertices.
    pub fn from_fn(ball: &LocalBall, mut value: impl FnMut(&str) -> f64) -> Self {
        FunctionOnBall {
            values: ball.vertices().map(|v| (v.to_owned(), value(v))).collect(),
        }
    }

    pub(crate) fn from_values(values: BTreeMap<String, f64>) -> Self {
        FunctionOnBall { values }
    }

    pub fn set(&mut self, vertex: &str, value: f64) -> Result<(), FormsError> {
        match self.values.get_mut(vertex) {
            Some(slot) => {
                *slot = value;
                Ok(())
            }
            None => Err(FormsError::NotInBall {
                vertex: vertex.to_owned(),
            }),
        }
    }

    /// Value at a vertex. Panics if the vertex is outside the domain; the
    /// constructors make that impossible for functions built from a ball.
    pub fn value(&self, vertex: &str) -> f64 {
        *self
            .values
            .get(vertex)
            .unwrap_or_else(|| panic!("vertex {vertex:?} is not in the function domain"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.values.iter().map(|(v, &x)| (v.as_str(), x))
    }
}

fn check_core(ball: &LocalBall, v: &str) -> Result<(), FormsError> {
    if ball.in_core(v) {
        Ok(())
    } else {
        Err(FormsError::OutOfScopeVertex {
            vertex: v.to_owned(),
        })
    }
}

/// Δf(v) = Σ_{w∼v} (f(w) − f(v)).
///
/// Defined on the center and the 1-sphere, where every neighbor lies inside
/// the ball; 2-sphere vertices may have neighbors the ball does not know.
pub fn laplacian_at(ball: &LocalBall, f: &FunctionOnBall, v: &str) -> Result<f64, FormsError> {
    check_core(ball, v)?;
    let fv = f.value(v);
    Ok(ball.neighbors(v).map(|w| f.value(w) - fv).sum())
}

/// Γ(f,g)(v) = ½ Σ_{w∼v} (f(w) − f(v)) (g(w) − g(v)).
pub fn gamma_at(
    ball: &LocalBall,
    f: &FunctionOnBall,
    g: &FunctionOnBall,
    v: &str,
) -> Result<f64, FormsError> {
    check_core(ball, v)?;
    let (fv, gv) = (f.value(v), g.value(v));
    Ok(0.5
        * ball
            .neighbors(v)
            .map(|w| (f.value(w) - fv) * (g.value(w) - gv))
            .sum::<f64>())
}

/// Γ₂(f,g) at the ball center:
/// 2Γ₂(f,g)(x) = ΔΓ(f,g)(x) − Γ(f,Δg)(x) − Γ(g,Δf)(x), where
/// ΔΓ(f,g)(x) = Σ_{v∼x} (Γ(f,g)(v) − Γ(f,g)(x)).
///
/// All inner evaluations stay on the center and 1-sphere, hence inside the
/// ball, so this is total for functions on the ball.
pub fn gamma2_at(ball: &LocalBall, f: &FunctionOnBall, g: &FunctionOnBall) -> f64 {
    let x = ball.center();
    let gamma_fg_x = gamma_at(ball, f, g, x).expect("center is in scope");

    let mut delta_gamma = 0.0;
    for v in ball.s1() {
        delta_gamma += gamma_at(ball, f, g, v).expect("S1 is in scope") - gamma_fg_x;
    }

    // Γ(f, Δg)(x) needs Δg only at the center and its neighbors.
    let delta_at = |h: &FunctionOnBall, v: &str| {
        laplacian_at(ball, h, v).expect("center and S1 are in scope")
    };
    let (fx, gx) = (f.value(x), g.value(x));
    let (dfx, dgx) = (delta_at(f, x), delta_at(g, x));
    let mut gamma_f_dg = 0.0;
    let mut gamma_g_df = 0.0;
    for v in ball.s1() {
        gamma_f_dg += (f.value(v) - fx) * (delta_at(g, v) - dgx);
        gamma_g_df += (g.value(v) - gx) * (delta_at(f, v) - dfx);
    }
    gamma_f_dg *= 0.5;
    gamma_g_df *= 0.5;

    0.5 * (delta_gamma - gamma_f_dg - gamma_g_df)
}

/// Symmetric quadratic form at a ball center, over the coordinates
/// `f(v)` for `v` in the 1-sphere followed by the 2-sphere.
#[derive(Debug, Clone)]
pub struct QuadraticForm {
    center: String,
    index: Vec<String>,
    s1_len: usize,
    matrix: SymMatrix,
}

impl QuadraticForm {
    pub fn center(&self) -> &str {
        &self.center
    }

    /// Coordinate vertices: 1-sphere first, then 2-sphere.
    pub fn index(&self) -> &[String] {
        &self.index
    }

    /// Number of leading coordinates that belong to the 1-sphere.
    pub fn s1_len(&self) -> usize {
        self.s1_len
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    /// Read a ball function into coordinate order.
    pub fn coordinate_vector(&self, f: &FunctionOnBall) -> Vec<f64> {
        self.index.iter().map(|v| f.value(v)).collect()
    }

    /// fᵀ Q f for coefficients in coordinate order.
    pub fn evaluate(&self, coeffs: &[f64]) -> f64 {
        self.matrix.quad(coeffs)
    }
}

/// Assemble Q₁ with fᵀQ₁f = Γ(f)(x) for every f with f(x) = 0:
/// diagonal, ½ on the 1-sphere coordinates and 0 on the 2-sphere.
pub fn assemble_gamma_form(ball: &LocalBall) -> QuadraticForm {
    let index: Vec<String> = ball.coordinates().map(str::to_owned).collect();
    let s1_len = ball.s1().len();
    let matrix = SymMatrix::from_fn(index.len(), |i, j| {
        if i == j && i < s1_len {
            0.5
        } else {
            0.0
        }
    });
    QuadraticForm {
        center: ball.center().to_owned(),
        index,
        s1_len,
        matrix,
    }
}

/// Assemble Q₂ with fᵀQ₂f = Γ₂(f)(x) for every f with f(x) = 0, by
/// evaluating Γ₂ on indicator pairs. The result is symmetrized to remove
/// floating-point asymmetry before any eigen work sees it.
pub fn assemble_gamma2_form(ball: &LocalBall) -> QuadraticForm {
    let index: Vec<String> = ball.coordinates().map(str::to_owned).collect();
    let s1_len = ball.s1().len();
    let indicators: Vec<FunctionOnBall> = index
        .iter()
        .map(|v| FunctionOnBall::indicator(ball, v).expect("coordinate vertices are in the ball"))
        .collect();
    let mut matrix = SymMatrix::from_fn(index.len(), |i, j| {
        gamma2_at(ball, &indicators[i], &indicators[j])
    });
    matrix.symmetrize();
    QuadraticForm {
        center: ball.center().to_owned(),
        index,
        s1_len,
        matrix,
    }
}
