//! Smooth curvature of the constant-curvature surface in which the {3,k}
//! tiling embeds with unit edge lengths.
//!
//! For the unit-length equilateral triangle with interior angle α = 2π/k,
//! the spherical and hyperbolic laws of cosines give
//!
//! ```text
//! cos(1/R)  = cos²(1/R)  + sin²(1/R)·cos α        (sphere of radius R)
//! cosh √−κ  = cosh²√−κ  − sinh²√−κ·cos α          (hyperbolic plane)
//! ```
//!
//! Both reduce to the same closed form `cos a = cos α/(1 − cos α)` resp.
//! `cosh a = cos α/(1 − cos α)`, with `a = 1/R` resp. `a = √−κ`: dividing
//! the relation by `1 − cos a` (resp. `1 − cosh a`) strips the flat root.
//! The ratio is in `[−1, 1]` exactly for k ≤ 6 and ≥ 1 for k ≥ 6, so each
//! order lands in exactly one regime, with both meeting at the flat k = 6.

use std::f64::consts::PI;

use crate::tilings::TilingOrder;

/// Constant-curvature regime of the ambient surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceFormClass {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl SpaceFormClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SpaceFormClass::Spherical => "sphere",
            SpaceFormClass::Euclidean => "plane",
            SpaceFormClass::Hyperbolic => "hyperbolic plane",
        }
    }
}

/// Curvature of the space form carrying a unit-edge {3,k} tiling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceFormCurvature {
    pub class: SpaceFormClass,
    /// Sectional curvature, in units of 1/length² with edge length 1.
    pub kappa: f64,
    /// Sphere radius R with κ = 1/R²; `None` unless spherical.
    pub radius: Option<f64>,
    /// Interior angle α = 2π/k of the tiling triangle, radians.
    pub interior_angle: f64,
}

impl SpaceFormCurvature {
    /// Residual of the original law-of-cosines relation at (κ, α); near zero
    /// when the closed form solved the right equation.
    pub fn law_of_cosines_residual(&self) -> f64 {
        let alpha = self.interior_angle;
        match self.class {
            SpaceFormClass::Spherical => {
                let a = self.kappa.sqrt(); // a = 1/R
                (a.cos() - (a.cos().powi(2) + a.sin().powi(2) * alpha.cos())).abs()
            }
            SpaceFormClass::Euclidean => 0.0,
            SpaceFormClass::Hyperbolic => {
                let a = (-self.kappa).sqrt();
                (a.cosh() - (a.cosh().powi(2) - a.sinh().powi(2) * alpha.cos())).abs()
            }
        }
    }
}

/// Closed-form smooth curvature for the order-k tiling:
/// spherical for k ∈ {3,4,5}, flat for k = 6, hyperbolic for k ≥ 7.
pub fn smooth_curvature(order: TilingOrder) -> SpaceFormCurvature {
    let k = order.get();
    let alpha = 2.0 * PI / f64::from(k);
    let ratio = alpha.cos() / (1.0 - alpha.cos());
    match k {
        3..=5 => {
            let a = ratio.acos();
            SpaceFormCurvature {
                class: SpaceFormClass::Spherical,
                kappa: a * a,
                radius: Some(1.0 / a),
                interior_angle: alpha,
            }
        }
        6 => SpaceFormCurvature {
            class: SpaceFormClass::Euclidean,
            kappa: 0.0,
            radius: None,
            interior_angle: alpha,
        },
        _ => {
            let a = ratio.acosh();
            SpaceFormCurvature {
                class: SpaceFormClass::Hyperbolic,
                kappa: -a * a,
                radius: None,
                interior_angle: alpha,
            }
        }
    }
}
