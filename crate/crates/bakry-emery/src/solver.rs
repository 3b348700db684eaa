//! Curvature solvers: the largest `K` with `Γ₂(f)(x) ≥ K·Γ(f)(x)` for all
//! `f`, equivalently `inf Γ₂(f)(x)/Γ(f)(x)` over `Γ(f)(x) ≠ 0`.
//!
//! Two independent routes are implemented and cross-checked:
//!
//! * **Schur reduction.** With coordinates split as (S₁, S₂) and
//!   `Q₂ = [[A, B], [Bᵀ, D]]`, the quotient's inner minimization over the S₂
//!   values is exact (`D` is diagonal positive definite on valid balls),
//!   leaving the Schur complement `S = A − B D⁻¹ Bᵀ`. Since `Q₁` is `½·I` on
//!   the S₁ coordinates and zero on S₂,
//!
//!   ```text
//!   K = inf fᵀQ₂f / fᵀQ₁f = inf_y yᵀSy / (½ yᵀy) = 2·λ_min(S)
//!   ```
//!
//!   — the factor 2 is exactly the `½` of `Q₁` moving to the other side; it
//!   is not a convention choice.
//!
//! * **Feasibility bisection.** Directly maximize `K` subject to
//!   `Q₂ − K·Q₁ ⪰ 0`; the predicate is monotone in `K` because `Q₁ ⪰ 0`, so
//!   bracketing plus bisection converges unconditionally.
//!
//! `K = −∞` (allowed by the curvature definition's codomain, represented
//! here as `f64::NEG_INFINITY`) cannot occur for a valid ball: `Q₂` is
//! positive definite on the kernel of `Q₁`, which is spanned by the S₂
//! coordinates, so the bracket always terminates.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::forms::{assemble_gamma2_form, assemble_gamma_form, FunctionOnBall, QuadraticForm};
use crate::graph::{Graph, GraphError};
use crate::matrix::SymMatrix;

/// Asymmetry beyond this is rejected by the eigensolver.
const SYMMETRY_TOL: f64 = 1e-12;
/// Off-diagonal magnitude (relative to `1 + max|entry|`) at which Jacobi
/// sweeps stop; far below the 1e-10 residual the eigenpair contract allows.
const JACOBI_OFF_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 100;
/// A 2-sphere diagonal entry of Q₂ at or below this means a malformed ball.
const SINGULAR_DIAG_TOL: f64 = 1e-12;
/// Feasibility slack for the bisection predicate, relative to
/// `1 + max|Q₂|`. Large enough to absorb eigensolver error (~1e-14·scale),
/// small enough that the bisected value stays within ~1e-9 of the Schur one
/// even on the largest tiling balls.
const PSD_SLACK: f64 = 1e-12;
/// Bracket width at which the bisection stops.
const BISECTION_WIDTH: f64 = 1e-10;
/// Maximum allowed |K_schur − K_bisection| in verified mode.
pub const METHOD_AGREEMENT_TOL: f64 = 1e-7;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("matrix is not symmetric (asymmetry {asymmetry:.3e})")]
    NonSymmetric { asymmetry: f64 },
    #[error("2-sphere block is singular at {vertex:?} (diagonal {value:.3e}); ball is malformed")]
    SingularS2Block { vertex: String, value: f64 },
    #[error("solver methods disagree beyond {tol:.1e}: schur {schur}, bisection {bisection}")]
    MethodDisagreement {
        schur: f64,
        bisection: f64,
        tol: f64,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which route produced a [`CurvatureResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Schur,
    Bisection,
}

impl SolveMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveMethod::Schur => "schur",
            SolveMethod::Bisection => "bisection",
        }
    }
}

/// Curvature at a vertex together with solve diagnostics.
#[derive(Debug, Clone)]
pub struct CurvatureResult {
    /// The curvature K. Finite for every valid ball; `f64::NEG_INFINITY`
    /// is the reserved representation for the definition's −∞ case.
    pub kappa: f64,
    pub method: SolveMethod,
    /// A function achieving the infimum (up to scaling), center included
    /// with value 0.
    pub minimizer: Option<FunctionOnBall>,
    /// |λ_min(Q₂ − K·Q₁)| after the solve; near zero when K is tight.
    pub residual: f64,
}

/// Results of running both routes on the same forms.
#[derive(Debug, Clone)]
pub struct VerifiedCurvature {
    pub schur: CurvatureResult,
    pub bisection: CurvatureResult,
}

impl VerifiedCurvature {
    pub fn difference(&self) -> f64 {
        (self.schur.kappa - self.bisection.kappa).abs()
    }
}

/// Smallest eigenvalue and a unit eigenvector of a symmetric matrix, by
/// cyclic Jacobi rotations. Any dense symmetric matrix of dimension ≥ 1 is
/// accepted; asymmetry beyond 1e-12 is an error.
pub fn min_eigen_symmetric(m: &SymMatrix) -> Result<(f64, Vec<f64>), SolverError> {
    let n = m.dim();
    assert!(n >= 1, "matrix dimension must be at least 1");
    let asymmetry = m.asymmetry();
    if asymmetry > SYMMETRY_TOL {
        return Err(SolverError::NonSymmetric { asymmetry });
    }

    let mut a = m.clone();
    a.symmetrize();
    let scale = 1.0 + a.max_abs();
    let mut v = SymMatrix::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 });

    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a.get(p, q).abs());
            }
        }
        if off <= JACOBI_OFF_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq.abs() <= f64::EPSILON * scale {
                    continue;
                }
                // classic symmetric Schur 2x2: choose t = tan θ zeroing a_pq
                let tau = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                let app = a.get(p, p);
                let aqq = a.get(q, q);
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                for i in 0..n {
                    if i != p && i != q {
                        let aip = a.get(i, p);
                        let aiq = a.get(i, q);
                        a.set(i, p, c * aip - s * aiq);
                        a.set(p, i, c * aip - s * aiq);
                        a.set(i, q, s * aip + c * aiq);
                        a.set(q, i, s * aip + c * aiq);
                    }
                }
                for i in 0..n {
                    let vip = v.get(i, p);
                    let viq = v.get(i, q);
                    v.set(i, p, c * vip - s * viq);
                    v.set(i, q, s * vip + c * viq);
                }
            }
        }
    }

    let mut min_idx = 0;
    for i in 1..n {
        if a.get(i, i) < a.get(min_idx, min_idx) {
            min_idx = i;
        }
    }
    let lambda = a.get(min_idx, min_idx);
    let mut vec: Vec<f64> = (0..n).map(|i| v.get(i, min_idx)).collect();
    let norm = vec.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in &mut vec {
        *x /= norm;
    }
    Ok((lambda, vec))
}

fn check_form_pair(q1: &QuadraticForm, q2: &QuadraticForm) {
    assert_eq!(
        q1.index(),
        q2.index(),
        "forms must share the same coordinate index"
    );
    assert_eq!(q1.s1_len(), q2.s1_len());
    assert!(q1.dim() >= 1, "ball center must have degree >= 1");
}

fn s2_diagonal(q2: &QuadraticForm) -> Result<Vec<f64>, SolverError> {
    let m = q2.s1_len();
    let mut diag = Vec::with_capacity(q2.dim() - m);
    for w in m..q2.dim() {
        let d = q2.matrix().get(w, w);
        if d <= SINGULAR_DIAG_TOL {
            return Err(SolverError::SingularS2Block {
                vertex: q2.index()[w].clone(),
                value: d,
            });
        }
        diag.push(d);
    }
    Ok(diag)
}

fn lift_minimizer(q2: &QuadraticForm, coords: &[f64]) -> FunctionOnBall {
    let mut values: BTreeMap<String, f64> = BTreeMap::new();
    values.insert(q2.center().to_owned(), 0.0);
    for (v, &x) in q2.index().iter().zip(coords) {
        values.insert(v.clone(), x);
    }
    FunctionOnBall::from_values(values)
}

fn pencil_matrix(q1: &QuadraticForm, q2: &QuadraticForm, k: f64) -> SymMatrix {
    SymMatrix::from_fn(q2.dim(), |i, j| {
        q2.matrix().get(i, j) - k * q1.matrix().get(i, j)
    })
}

fn pencil_residual(q1: &QuadraticForm, q2: &QuadraticForm, k: f64) -> Result<f64, SolverError> {
    let (lambda, _) = min_eigen_symmetric(&pencil_matrix(q1, q2, k))?;
    Ok(lambda.abs())
}

/// Curvature by exact elimination of the 2-sphere coordinates.
///
/// `K = 2·λ_min(A − B D⁻¹ Bᵀ)`; when S₂ is empty, `K = 2·λ_min(A)`.
pub fn curvature_schur(
    q1: &QuadraticForm,
    q2: &QuadraticForm,
) -> Result<CurvatureResult, SolverError> {
    check_form_pair(q1, q2);
    let m = q2.s1_len();
    let d = s2_diagonal(q2)?;

    let schur = SymMatrix::from_fn(m, |i, j| {
        let mut entry = q2.matrix().get(i, j);
        for (wi, dw) in d.iter().enumerate() {
            let w = m + wi;
            entry -= q2.matrix().get(i, w) * q2.matrix().get(j, w) / dw;
        }
        entry
    });
    let (lambda, y) = min_eigen_symmetric(&schur)?;
    let kappa = 2.0 * lambda;

    // lift the S1 minimizer back over S2: z_w = −(Bᵀ y)_w / d_w
    let mut coords = vec![0.0; q2.dim()];
    coords[..m].copy_from_slice(&y);
    for (wi, dw) in d.iter().enumerate() {
        let w = m + wi;
        let by: f64 = (0..m).map(|i| q2.matrix().get(i, w) * y[i]).sum();
        coords[w] = -by / dw;
    }

    Ok(CurvatureResult {
        kappa,
        method: SolveMethod::Schur,
        minimizer: Some(lift_minimizer(q2, &coords)),
        residual: pencil_residual(q1, q2, kappa)?,
    })
}

/// Curvature as the maximum `K` with `Q₂ − K·Q₁ ⪰ 0`, by bracketing and
/// bisection on the minimum eigenvalue of the pencil.
pub fn curvature_bisection(
    q1: &QuadraticForm,
    q2: &QuadraticForm,
) -> Result<CurvatureResult, SolverError> {
    check_form_pair(q1, q2);
    s2_diagonal(q2)?; // same malformed-ball guard as the Schur route

    let scale = 1.0 + q2.matrix().max_abs();
    let feasible = |k: f64| -> Result<bool, SolverError> {
        let (lambda, _) = min_eigen_symmetric(&pencil_matrix(q1, q2, k))?;
        Ok(lambda >= -PSD_SLACK * scale)
    };

    // Upper start: twice the quotient of the first S1 indicator, then expand
    // until the bracket is certain. Feasibility fails for large K because Q₁
    // is nonzero, and holds for low K because Q₂ is PD on Q₁'s kernel.
    let quotient_e1 = q2.matrix().get(0, 0) / q1.matrix().get(0, 0);
    let mut hi = 2.0 * quotient_e1;
    let mut lo = hi.min(0.0) - 1.0;
    while !feasible(lo)? {
        lo -= lo.abs().max(1.0);
    }
    while feasible(hi)? {
        hi += hi.abs().max(1.0);
    }
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if feasible(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let kappa = lo;

    let (lambda, vec) = min_eigen_symmetric(&pencil_matrix(q1, q2, kappa))?;
    Ok(CurvatureResult {
        kappa,
        method: SolveMethod::Bisection,
        minimizer: Some(lift_minimizer(q2, &vec)),
        residual: lambda.abs(),
    })
}

/// Curvature at a vertex of a graph: extract the 2-ball, assemble the forms,
/// and solve by the Schur route.
pub fn curvature_at(graph: &Graph, x: &str) -> Result<CurvatureResult, SolverError> {
    let ball = graph.two_ball(x)?;
    let q1 = assemble_gamma_form(&ball);
    let q2 = assemble_gamma2_form(&ball);
    curvature_schur(&q1, &q2)
}

/// Curvature by both routes, with the agreement check the `--verify` CLI
/// mode exposes. Disagreement beyond [`METHOD_AGREEMENT_TOL`] is an error.
pub fn curvature_at_verified(graph: &Graph, x: &str) -> Result<VerifiedCurvature, SolverError> {
    let ball = graph.two_ball(x)?;
    let q1 = assemble_gamma_form(&ball);
    let q2 = assemble_gamma2_form(&ball);
    let schur = curvature_schur(&q1, &q2)?;
    let bisection = curvature_bisection(&q1, &q2)?;
    if (schur.kappa - bisection.kappa).abs() > METHOD_AGREEMENT_TOL {
        return Err(SolverError::MethodDisagreement {
            schur: schur.kappa,
            bisection: bisection.kappa,
            tol: METHOD_AGREEMENT_TOL,
        });
    }
    Ok(VerifiedCurvature { schur, bisection })
}
