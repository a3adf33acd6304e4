//! Entire minimal graphs with one singular line.
//!
//! Fix a continuous non-decreasing `beta` and let `alpha = acot(beta)`.
//! From every point `(v, 0, 0)` of the x-axis two horizontal halflines
//! leave at planar angles `+alpha(v)` (into `y > 0`) and `-alpha(v)` (into
//! `y < 0`). Monotonicity makes the open halflines project to a partition
//! of the plane minus the axis, so their union is the graph of a continuous
//! function `u` with `u(x, 0) = 0`.
//!
//! Evaluation runs through the foot map: `xi(x, y)` is the axis parameter
//! of the halfline over `(x, y)`, the unique solution of
//! `v + |y| beta(v) = x`, and `u(x, y) = -y xi(x, y)`. Off the axis `u`
//! satisfies the implicit equation `t + x y - y |y| beta(-t/y) = 0`, and its
//! partial derivatives have closed forms in terms of `beta`, `beta'`, `xi`:
//!
//! ```text
//! u_x = -y / (1 + |y| beta'(xi))
//! u_y = (-x + |y| (2 beta(xi) - beta'(xi) xi)) / (1 + |y| beta'(xi))
//! ```
//!
//! On the axis `u(x, 0) = 0` and `grad u(x, 0) = (0, -x)` are exact limits
//! and are returned directly instead of through the off-axis formulas.

use core::fmt;
#[allow(unused_imports)]
use num_traits::Float;

use crate::heisenberg::{HorizontalVec, Point};
use crate::numeric::sgn;
use crate::profile::{angle_from_beta, BetaProfile};
use crate::surface::TGraph;

/// Which side of the singular line a limit is taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SolveError {
    /// The sign-change bracket could not be expanded to contain the root;
    /// the profile is not monotone (or inputs were not finite).
    BracketExpansion { x: f64, y: f64 },
    /// The implicit equation is undefined on the axis `y = 0`.
    UndefinedOnAxis,
    /// The horizontal normal on the axis needs a declared side.
    NoSideAtAxis,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::BracketExpansion { x, y } => write!(
                f,
                "failed to bracket the foot parameter at ({x}, {y}); profile is not monotone?"
            ),
            SolveError::UndefinedOnAxis => write!(f, "implicit equation undefined at y = 0"),
            SolveError::NoSideAtAxis => write!(f, "normal at y = 0 requires a side"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SolveError {}

/// The entire graph built from one monotone profile along the x-axis.
#[derive(Clone, Debug)]
pub struct LineGraphSurface {
    beta: BetaProfile,
    /// Residual tolerance of the foot solve, relative to `1 + |x|`.
    tol: f64,
    /// Geometric growth factor of the bracket expansion.
    bracket_growth: f64,
}

impl LineGraphSurface {
    pub fn new(beta: BetaProfile) -> Self {
        LineGraphSurface { beta, tol: 1e-12, bracket_growth: 2.0 }
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn beta(&self) -> &BetaProfile {
        &self.beta
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Foot parameter `xi(x, y)`: the unique `v` with `v + |y| beta(v) = x`.
    ///
    /// `rho_y(v) = v + |y| beta(v)` is continuous and strictly increasing,
    /// so the root is found by bisection after a geometric bracket
    /// expansion. Constant and linear profiles are solved in closed form.
    /// Bisection runs to floating-point bracket width; the residual
    /// `|rho_y(xi) - x|` then satisfies the `tol * (1 + |x|)` contract for
    /// locally lipschitz profiles (the Cantor kind is only Holder
    /// continuous, where no floating-point value can do better than the
    /// modulus of continuity allows).
    pub fn rho_inverse(&self, x: f64, y: f64) -> Result<f64, SolveError> {
        let ay = y.abs();
        if ay == 0.0 {
            return Ok(x);
        }
        match &self.beta {
            BetaProfile::Constant(b0) => return Ok(x - ay * b0),
            BetaProfile::Linear { slope, offset } => {
                return Ok((x - ay * offset) / (1.0 + ay * slope));
            }
            _ => {}
        }
        if !x.is_finite() || !ay.is_finite() {
            return Err(SolveError::BracketExpansion { x, y });
        }

        let g = |v: f64| v + ay * self.beta.eval(v) - x;

        // initial bracket around x, then geometric expansion until the
        // endpoints straddle the root
        let mut width = ay * (self.beta.eval(x).abs() + 1.0) + 1.0;
        let mut lo = x - width;
        let mut hi = x + width;
        let mut glo = g(lo);
        let mut ghi = g(hi);
        let mut expansions = 0;
        while glo > 0.0 || ghi < 0.0 {
            expansions += 1;
            if expansions > 200 || !width.is_finite() {
                return Err(SolveError::BracketExpansion { x, y });
            }
            width *= self.bracket_growth;
            if glo > 0.0 {
                lo = x - width;
                glo = g(lo);
            }
            if ghi < 0.0 {
                hi = x + width;
                ghi = g(hi);
            }
        }

        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break; // bracket at floating-point resolution
            }
            let gm = g(mid);
            if gm == 0.0 {
                return Ok(mid);
            }
            if gm < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Graph height `u(x, y) = -y xi(x, y)`; zero on the axis.
    pub fn try_height(&self, x: f64, y: f64) -> Result<f64, SolveError> {
        if y == 0.0 {
            return Ok(0.0);
        }
        Ok(-y * self.rho_inverse(x, y)?)
    }

    /// Residual of the implicit equation,
    /// `f(x, y, t) = t + x y - y |y| beta(-t / y)`; undefined at `y = 0`.
    pub fn implicit_residual(&self, x: f64, y: f64, t: f64) -> Result<f64, SolveError> {
        if y == 0.0 {
            return Err(SolveError::UndefinedOnAxis);
        }
        Ok(t + x * y - y * y.abs() * self.beta.eval(-t / y))
    }

    /// Point of the surface over foot parameter `v` at signed halfline
    /// parameter `w` (positive into `y > 0`).
    pub fn parametric(&self, v: f64, w: f64) -> Point {
        let alpha = angle_from_beta(self.beta.eval(v));
        let (sin, cos) = alpha.sin_cos();
        let aw = w.abs();
        if w >= 0.0 {
            Point::new(v + w * cos, w * sin, -v * w * sin)
        } else {
            Point::new(v + aw * cos, -aw * sin, v * aw * sin)
        }
    }

    /// Inverse of the planar part of [`Self::parametric`]:
    /// `(xi(x, y), sgn(y) |(x - xi, y)|)`.
    pub fn parametric_inverse(&self, x: f64, y: f64) -> Result<(f64, f64), SolveError> {
        let xi = self.rho_inverse(x, y)?;
        Ok((xi, sgn(y) * (x - xi).hypot(y)))
    }

    /// Plane gradient; `fd_fallback` is set when the profile has no
    /// analytic derivative at the foot point and central differences of the
    /// height were used instead.
    pub fn gradient_detailed(&self, x: f64, y: f64) -> Gradient {
        if y == 0.0 {
            return Gradient { ux: 0.0, uy: -x, fd_fallback: false };
        }
        let xi = match self.rho_inverse(x, y) {
            Ok(v) => v,
            Err(_) => return Gradient { ux: f64::NAN, uy: f64::NAN, fd_fallback: false },
        };
        match self.beta.derivative(xi) {
            Some(d) => {
                let ay = y.abs();
                let denom = 1.0 + ay * d;
                let b = self.beta.eval(xi);
                Gradient {
                    ux: -y / denom,
                    uy: (-x + ay * (2.0 * b - d * xi)) / denom,
                    fd_fallback: false,
                }
            }
            None => {
                const H: f64 = 1e-6;
                let u = |x: f64, y: f64| self.try_height(x, y).unwrap_or(f64::NAN);
                Gradient {
                    ux: (u(x + H, y) - u(x - H, y)) / (2.0 * H),
                    uy: (u(x, y + H) - u(x, y - H)) / (2.0 * H),
                    fd_fallback: true,
                }
            }
        }
    }

    /// Horizontal unit normal `(1, -sgn(y) beta(xi)) / sqrt(1 + beta(xi)^2)`
    /// in frame coefficients; undefined on the axis without a side.
    pub fn horizontal_normal(&self, x: f64, y: f64) -> Result<HorizontalVec, SolveError> {
        if y == 0.0 {
            return Err(SolveError::NoSideAtAxis);
        }
        Ok(self.normal_with_sign(x, y, sgn(y)))
    }

    /// One-sided limit of the horizontal normal on the axis, or the normal
    /// itself off the axis (the declared side must then match `sgn(y)`).
    pub fn horizontal_normal_sided(&self, x: f64, y: f64, side: Side) -> HorizontalVec {
        let s = match side {
            Side::Above => 1.0,
            Side::Below => -1.0,
        };
        self.normal_with_sign(x, y, s)
    }

    fn normal_with_sign(&self, x: f64, y: f64, s: f64) -> HorizontalVec {
        let xi = self.rho_inverse(x, y).unwrap_or(f64::NAN);
        let b = self.beta.eval(xi);
        let n = (1.0 + b * b).sqrt();
        HorizontalVec::new(1.0 / n, -s * b / n)
    }
}

/// Plane gradient of a line graph with a finite-difference fallback marker.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gradient {
    pub ux: f64,
    pub uy: f64,
    pub fd_fallback: bool,
}

impl TGraph for LineGraphSurface {
    /// Panics if the profile is not monotone (certified profiles never are);
    /// use [`LineGraphSurface::try_height`] for a fallible evaluation.
    fn height(&self, x: f64, y: f64) -> f64 {
        self.try_height(x, y)
            .expect("foot solve failed: non-monotone profile")
    }

    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        let g = self.gradient_detailed(x, y);
        (g.ux, g.uy)
    }
}
