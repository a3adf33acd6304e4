//! Monotone angle profiles and their cotangents.
//!
//! The graphs in this crate are ruled by horizontal halflines whose planar
//! direction at foot `v` makes an angle `alpha(v)` with the base line,
//! `alpha` continuous, non-increasing, with values in `(0, pi)`. All
//! formulas are written in terms of `beta = cot(alpha)`, a continuous
//! non-decreasing function. [`BetaProfile`] carries the supported profile
//! families; constructors validate monotonicity analytically, so every
//! value of this type is a certified non-decreasing continuous function.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;
#[allow(unused_imports)]
use num_traits::Float;

/// Nodes of the fixed-order midpoint rule used for mollification, on [-1, 1].
const MOLLIFIER_NODES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ProfileError {
    /// Linear profile with negative slope would be decreasing.
    NegativeSlope(f64),
    /// Breakpoint lists must be sorted in x and non-decreasing in value.
    BadBreakpoints(&'static str),
    /// Cantor argument rescale must be positive.
    NonPositiveScale(f64),
    /// Mollification radius must be positive.
    InvalidEpsilon(f64),
    /// Angle outside the open interval (0, pi).
    AngleOutOfRange(f64),
}

impl fmt::Display for ProfileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileError::NegativeSlope(s) => write!(f, "slope {s} is negative"),
            ProfileError::BadBreakpoints(msg) => write!(f, "bad breakpoints: {msg}"),
            ProfileError::NonPositiveScale(s) => write!(f, "scale {s} must be positive"),
            ProfileError::InvalidEpsilon(e) => write!(f, "mollification radius {e} must be positive"),
            ProfileError::AngleOutOfRange(a) => write!(f, "angle {a} must lie in (0, pi)"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ProfileError {}

/// A continuous non-decreasing function `beta: R -> R`.
///
/// Monotonicity is certified at construction (each constructor checks the
/// defining data analytically), so evaluation never re-validates.
#[derive(Clone, Debug, PartialEq)]
pub enum BetaProfile {
    /// `beta(v) = value`.
    Constant(f64),
    /// `beta(v) = slope * v + offset`, `slope >= 0`.
    Linear { slope: f64, offset: f64 },
    /// Piecewise-linear through the breakpoints, end segments extrapolated.
    PiecewiseLinear { points: Vec<(f64, f64)> },
    /// Devil's staircase: `beta(v) = c((v - shift) / scale)` where `c` is the
    /// Cantor function, constant 0 left of the base interval and 1 right of it.
    Cantor { scale: f64, shift: f64 },
    /// Monotone piecewise-linear interpolation of sorted samples, clamped to
    /// the end values outside the sample range.
    Table { points: Vec<(f64, f64)> },
    /// Convolution of `inner` with a smooth bump supported on `[-eps, eps]`.
    Mollified { inner: Box<BetaProfile>, eps: f64 },
    /// `inner` evaluated at `max(v, cut)`: constant continuation below `cut`.
    ConstantBelow { inner: Box<BetaProfile>, cut: f64 },
}

impl BetaProfile {
    pub fn constant(value: f64) -> Self {
        BetaProfile::Constant(value)
    }

    pub fn linear(slope: f64, offset: f64) -> Result<Self, ProfileError> {
        if slope < 0.0 || !slope.is_finite() {
            return Err(ProfileError::NegativeSlope(slope));
        }
        Ok(BetaProfile::Linear { slope, offset })
    }

    pub fn piecewise_linear(points: Vec<(f64, f64)>) -> Result<Self, ProfileError> {
        validate_breakpoints(&points)?;
        Ok(BetaProfile::PiecewiseLinear { points })
    }

    pub fn cantor(scale: f64, shift: f64) -> Result<Self, ProfileError> {
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(ProfileError::NonPositiveScale(scale));
        }
        Ok(BetaProfile::Cantor { scale, shift })
    }

    pub fn table(points: Vec<(f64, f64)>) -> Result<Self, ProfileError> {
        validate_breakpoints(&points)?;
        Ok(BetaProfile::Table { points })
    }

    /// Constant continuation of `self` by its value at `cut`, below `cut`.
    pub fn constant_below(self, cut: f64) -> Self {
        BetaProfile::ConstantBelow { inner: Box::new(self), cut }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            BetaProfile::Constant(_) => "constant",
            BetaProfile::Linear { .. } => "linear",
            BetaProfile::PiecewiseLinear { .. } => "piecewise_linear",
            BetaProfile::Cantor { .. } => "cantor",
            BetaProfile::Table { .. } => "table",
            BetaProfile::Mollified { .. } => "mollified",
            BetaProfile::ConstantBelow { .. } => "constant_below",
        }
    }

    /// Value of `beta` at `v`.
    pub fn eval(&self, v: f64) -> f64 {
        match self {
            BetaProfile::Constant(b) => *b,
            BetaProfile::Linear { slope, offset } => slope * v + offset,
            BetaProfile::PiecewiseLinear { points } => eval_pl(points, v, true),
            BetaProfile::Cantor { scale, shift } => cantor_function((v - shift) / scale),
            BetaProfile::Table { points } => eval_pl(points, v, false),
            BetaProfile::Mollified { inner, eps } => with_mollifier_rule(|q| {
                let mut acc = 0.0;
                for (s, w) in q.nodes.iter().zip(q.weights.iter()) {
                    acc += w * inner.eval(v - eps * s);
                }
                acc
            }),
            BetaProfile::ConstantBelow { inner, cut } => inner.eval(v.max(*cut)),
        }
    }

    /// Derivative of `beta` at `v` where it is defined analytically.
    ///
    /// Piecewise kinds use the right derivative at breakpoints. The Cantor
    /// kind returns 0 off the Cantor set (where the function is locally
    /// constant) and `None` on it; callers fall back to finite differences.
    pub fn derivative(&self, v: f64) -> Option<f64> {
        match self {
            BetaProfile::Constant(_) => Some(0.0),
            BetaProfile::Linear { slope, .. } => Some(*slope),
            BetaProfile::PiecewiseLinear { points } => Some(slope_pl(points, v, true)),
            BetaProfile::Cantor { scale, shift } => {
                let x = (v - shift) / scale;
                if !(0.0..=1.0).contains(&x) {
                    return Some(0.0);
                }
                if cantor_plateau(x) {
                    Some(0.0)
                } else {
                    None
                }
            }
            BetaProfile::Table { points } => Some(slope_pl(points, v, false)),
            BetaProfile::Mollified { inner, eps } => with_mollifier_rule(|q| {
                // exact derivative of the discrete convolution: the same
                // kernel weights applied to the inner derivative
                let mut acc = 0.0;
                for (s, w) in q.nodes.iter().zip(q.weights.iter()) {
                    acc += w * inner.derivative(v - eps * s)?;
                }
                Some(acc)
            }),
            BetaProfile::ConstantBelow { inner, cut } => {
                if v < *cut {
                    Some(0.0)
                } else {
                    inner.derivative(v.max(*cut))
                }
            }
        }
    }

    /// Smooth the profile by convolution with a normalized bump of radius
    /// `eps`. Monotonicity is preserved (the discrete kernel weights are
    /// nonnegative), and constants are returned unchanged.
    pub fn mollify(&self, eps: f64) -> Result<BetaProfile, ProfileError> {
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(ProfileError::InvalidEpsilon(eps));
        }
        Ok(match self {
            BetaProfile::Constant(b) => BetaProfile::Constant(*b),
            other => BetaProfile::Mollified { inner: Box::new(other.clone()), eps },
        })
    }

    /// Sampled monotonicity check: `n >= 2` evenly spaced samples on the
    /// interval must be non-decreasing within `1e-12` slack.
    pub fn validate_monotone(&self, interval: (f64, f64), n: usize) -> bool {
        if n < 2 {
            return false;
        }
        let (a, b) = interval;
        let mut prev = self.eval(a);
        for k in 1..n {
            let v = a + (b - a) * k as f64 / (n - 1) as f64;
            let cur = self.eval(v);
            if cur < prev - 1e-12 {
                return false;
            }
            prev = cur;
        }
        true
    }
}

fn validate_breakpoints(points: &[(f64, f64)]) -> Result<(), ProfileError> {
    if points.len() < 2 {
        return Err(ProfileError::BadBreakpoints("need at least two points"));
    }
    for w in points.windows(2) {
        if !(w[1].0 > w[0].0) {
            return Err(ProfileError::BadBreakpoints("x values must be strictly increasing"));
        }
        if w[1].1 < w[0].1 {
            return Err(ProfileError::BadBreakpoints("values must be non-decreasing"));
        }
    }
    if points.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(ProfileError::BadBreakpoints("coordinates must be finite"));
    }
    Ok(())
}

/// Piecewise-linear evaluation; `extrapolate` continues the end segments,
/// otherwise values are clamped.
fn eval_pl(points: &[(f64, f64)], v: f64, extrapolate: bool) -> f64 {
    let n = points.len();
    if v <= points[0].0 {
        return if extrapolate {
            seg_value(points[0], points[1], v)
        } else {
            points[0].1
        };
    }
    if v >= points[n - 1].0 {
        return if extrapolate {
            seg_value(points[n - 2], points[n - 1], v)
        } else {
            points[n - 1].1
        };
    }
    let i = points.partition_point(|p| p.0 <= v) - 1;
    seg_value(points[i], points[i + 1], v)
}

fn seg_value(a: (f64, f64), b: (f64, f64), v: f64) -> f64 {
    let t = (v - a.0) / (b.0 - a.0);
    a.1 + t * (b.1 - a.1)
}

fn seg_slope(a: (f64, f64), b: (f64, f64)) -> f64 {
    (b.1 - a.1) / (b.0 - a.0)
}

/// Right derivative of the piecewise-linear interpolant.
fn slope_pl(points: &[(f64, f64)], v: f64, extrapolate: bool) -> f64 {
    let n = points.len();
    if v < points[0].0 {
        return if extrapolate { seg_slope(points[0], points[1]) } else { 0.0 };
    }
    if v >= points[n - 1].0 {
        return if extrapolate { seg_slope(points[n - 2], points[n - 1]) } else { 0.0 };
    }
    let i = points.partition_point(|p| p.0 <= v) - 1;
    seg_slope(points[i], points[i + 1])
}

/// The Cantor (devil's staircase) function on [0, 1], extended by 0 and 1.
///
/// Evaluated from the ternary expansion of `x`, 53 digits: binary digits of
/// the result are half the ternary digits of the argument up to the first 1.
pub fn cantor_function(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let mut frac = x;
    let mut acc = 0.0;
    let mut pow = 0.5;
    for _ in 0..53 {
        frac *= 3.0;
        let digit = (frac.floor() as i32).min(2);
        frac -= digit as f64;
        if digit == 1 {
            return acc + pow;
        }
        if digit == 2 {
            acc += pow;
        }
        pow *= 0.5;
    }
    acc
}

/// True when `x` in [0, 1] falls in one of the plateau intervals removed
/// during the Cantor construction (a ternary digit 1 appears within the
/// depth budget).
///
/// The depth stops at 30 digits (3^-30 ~ 5e-15), the resolution below
/// which a root-found argument cannot be distinguished from a set point
/// anyway: set membership decides the steep/flat derivative branch, and an
/// argument a few ulps off a set point must still classify as on-set. The
/// image of the set under the foot map has positive measure, so this
/// branch carries real area.
fn cantor_plateau(x: f64) -> bool {
    let mut frac = x;
    for _ in 0..30 {
        frac *= 3.0;
        let digit = (frac.floor() as i32).min(2);
        frac -= digit as f64;
        if digit == 1 {
            return true;
        }
    }
    false
}

/// `beta = cot(alpha)` for `alpha` in `(0, pi)`.
pub fn beta_from_angle(alpha: f64) -> Result<f64, ProfileError> {
    if !(alpha > 0.0 && alpha < PI) {
        return Err(ProfileError::AngleOutOfRange(alpha));
    }
    Ok(alpha.cos() / alpha.sin())
}

/// Inverse cotangent with range `(0, pi)`; total on the real line.
pub fn angle_from_beta(beta: f64) -> f64 {
    PI / 2.0 - beta.atan()
}

/// An angle profile `alpha(v) = acot(beta(v))` in `(0, pi)` along a base
/// line at angle `axis_angle` in the plane.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleProfile {
    pub beta: BetaProfile,
    pub axis_angle: f64,
}

impl AngleProfile {
    pub fn new(beta: BetaProfile, axis_angle: f64) -> Self {
        AngleProfile { beta, axis_angle }
    }

    pub fn alpha(&self, v: f64) -> f64 {
        angle_from_beta(self.beta.eval(v))
    }
}

struct MollifierRule {
    nodes: [f64; MOLLIFIER_NODES],
    weights: [f64; MOLLIFIER_NODES],
}

/// Bump profile exp(-1/(1 - s^2)) on (-1, 1); the normalization constant is
/// absorbed by dividing through the discrete mass.
fn bump(s: f64) -> f64 {
    let d = 1.0 - s * s;
    if d <= 0.0 {
        0.0
    } else {
        (-1.0 / d).exp()
    }
}

/// Midpoint nodes on [-1, 1] with bump-function weights, normalized so the
/// discrete kernel has unit mass. Nodes come in exact +/- pairs, so affine
/// functions are reproduced to rounding and monotone inputs stay monotone
/// (all weights are nonnegative).
fn build_rule() -> MollifierRule {
    let n = MOLLIFIER_NODES;
    let h = 2.0 / n as f64;
    let mut nodes = [0.0; MOLLIFIER_NODES];
    for j in 0..n / 2 {
        let s = (j as f64 + 0.5) * h - 1.0;
        nodes[j] = s;
        nodes[n - 1 - j] = -s;
    }
    let mut mass = 0.0;
    for &s in nodes.iter() {
        mass += bump(s);
    }
    let mut weights = [0.0; MOLLIFIER_NODES];
    for j in 0..n {
        weights[j] = bump(nodes[j]) / mass;
    }
    MollifierRule { nodes, weights }
}

#[cfg(feature = "std")]
fn with_mollifier_rule<R>(f: impl FnOnce(&MollifierRule) -> R) -> R {
    use std::sync::OnceLock;
    static RULE: OnceLock<MollifierRule> = OnceLock::new();
    f(RULE.get_or_init(build_rule))
}

#[cfg(not(feature = "std"))]
fn with_mollifier_rule<R>(f: impl FnOnce(&MollifierRule) -> R) -> R {
    // no OnceLock without std; the rule is cheap enough to rebuild
    let rule = build_rule();
    f(&rule)
}
