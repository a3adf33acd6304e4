//! Entire minimal graphs with several singular halflines from one point.
//!
//! The configuration is a family of halflines `R_0, ..., R_{k-1}` leaving
//! the origin counter-clockwise, with the bisector `L_i` of the wedge
//! between `R_{i-1}` and `R_i` carrying an angle profile `alpha_i` that is
//! continuous, non-increasing, and starts at the half-opening
//! `alpha_i(0) = angle(L_i, R_i)`. The half-openings sum to `pi`. Each
//! closed wedge `W_i` carries the one-line graph of `beta_i = cot(alpha_i)`
//! (extended constantly below 0, which no point of `W_i` ever samples),
//! rotated so `L_i` is its singular halfline; heights agree along the
//! shared boundaries `R_i`, where every chart degenerates to the horizontal
//! lift of `R_i` through the origin at height 0.
//!
//! Constant profiles produce dilation-invariant cones. A single profile on
//! one halfline produces the patched graph `max(u, 0)` with one singular
//! halfline, zero outside the region swept positively.

use alloc::vec::Vec;
use core::fmt;
#[allow(unused_imports)]
use num_traits::Float;

use crate::graph_line::LineGraphSurface;
use crate::heisenberg::{rotate_z, HorizontalVec, Point};
use crate::numeric::{sgn, wrap_angle};
use crate::profile::{angle_from_beta, AngleProfile, BetaProfile};
use crate::surface::{rotate_vec, TGraph};

use core::f64::consts::PI;

/// Tolerance for the half-opening sum `sum alpha_i(0) = pi`.
const ANGLE_SUM_TOL: f64 = 1e-10;
/// Tolerance for the bisector recurrence between consecutive wedges.
const BISECTOR_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum WedgeConfigError {
    /// At least two wedges are needed (one halfline has its own type).
    TooFewWedges(usize),
    /// Bisector angles must be strictly increasing within one turn.
    BisectorOrder,
    /// The half-openings must sum to pi.
    AngleSumMismatch { sum: f64 },
    /// Consecutive bisectors must differ by the sum of the adjacent
    /// half-openings, so that each L_i bisects its wedge.
    BisectorMismatch { index: usize, gap: f64, expected: f64 },
    /// Angle profiles must be non-increasing (beta non-decreasing).
    ProfileNotMonotone { index: usize },
    /// Cones need constant profiles.
    NonConstantProfile { index: usize },
    /// The wedge decomposition is undefined at the origin.
    OriginQuery,
}

impl fmt::Display for WedgeConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WedgeConfigError::TooFewWedges(k) => write!(f, "need at least 2 wedges, got {k}"),
            WedgeConfigError::BisectorOrder => {
                write!(f, "bisector angles must be strictly increasing within one turn")
            }
            WedgeConfigError::AngleSumMismatch { sum } => {
                write!(f, "half-openings sum to {sum}, expected pi")
            }
            WedgeConfigError::BisectorMismatch { index, gap, expected } => write!(
                f,
                "bisector gap {gap} after wedge {index} does not match half-openings {expected}"
            ),
            WedgeConfigError::ProfileNotMonotone { index } => {
                write!(f, "profile {index} is not non-decreasing in beta")
            }
            WedgeConfigError::NonConstantProfile { index } => {
                write!(f, "profile {index} is not constant; cones need constant angles")
            }
            WedgeConfigError::OriginQuery => write!(f, "wedge index undefined at the origin"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WedgeConfigError {}

/// A validated wedge configuration: bisector angles, profiles, and the
/// derived half-openings.
#[derive(Clone, Debug)]
pub struct WedgeConfig {
    profiles: Vec<AngleProfile>,
    half_openings: Vec<f64>,
}

impl WedgeConfig {
    /// Validate and build a configuration. Each [`AngleProfile`] carries its
    /// bisector direction in `axis_angle`.
    pub fn new(profiles: Vec<AngleProfile>) -> Result<Self, WedgeConfigError> {
        let k = profiles.len();
        if k < 2 {
            return Err(WedgeConfigError::TooFewWedges(k));
        }
        for w in profiles.windows(2) {
            if !(w[1].axis_angle > w[0].axis_angle) {
                return Err(WedgeConfigError::BisectorOrder);
            }
        }
        if !(profiles[k - 1].axis_angle - profiles[0].axis_angle < 2.0 * PI) {
            return Err(WedgeConfigError::BisectorOrder);
        }
        let half_openings: Vec<f64> =
            profiles.iter().map(|p| angle_from_beta(p.beta.eval(0.0))).collect();
        let sum: f64 = half_openings.iter().sum();
        if (sum - PI).abs() > ANGLE_SUM_TOL {
            return Err(WedgeConfigError::AngleSumMismatch { sum });
        }
        for i in 0..k - 1 {
            let gap = profiles[i + 1].axis_angle - profiles[i].axis_angle;
            let expected = half_openings[i] + half_openings[i + 1];
            if (gap - expected).abs() > BISECTOR_TOL {
                return Err(WedgeConfigError::BisectorMismatch { index: i, gap, expected });
            }
        }
        for (i, p) in profiles.iter().enumerate() {
            if !p.beta.validate_monotone((0.0, 32.0), 513) {
                return Err(WedgeConfigError::ProfileNotMonotone { index: i });
            }
        }
        Ok(WedgeConfig { profiles, half_openings })
    }

    /// The symmetric constant configuration: `k` bisectors `2 pi i / k`,
    /// all half-openings `pi / k`.
    pub fn symmetric(k: usize) -> Result<Self, WedgeConfigError> {
        let beta0 = (PI / k as f64).cos() / (PI / k as f64).sin();
        let profiles = (0..k)
            .map(|i| AngleProfile::new(BetaProfile::constant(beta0), 2.0 * PI * i as f64 / k as f64))
            .collect();
        Self::new(profiles)
    }

    /// The two-wedge configuration whose singular set is the whole x-axis;
    /// reproduces the one-line cone of constant `beta0`.
    pub fn line_cone(beta0: f64) -> Result<Self, WedgeConfigError> {
        let profiles = alloc::vec![
            AngleProfile::new(BetaProfile::constant(beta0), 0.0),
            AngleProfile::new(BetaProfile::constant(-beta0), PI),
        ];
        Self::new(profiles)
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    pub fn profiles(&self) -> &[AngleProfile] {
        &self.profiles
    }

    pub fn bisector(&self, i: usize) -> f64 {
        self.profiles[i].axis_angle
    }

    /// Half-opening `alpha_i(0)` of wedge `i`.
    pub fn half_opening(&self, i: usize) -> f64 {
        self.half_openings[i]
    }

    /// Direction of the boundary halfline `R_i = L_i + alpha_i(0)` shared
    /// by wedges `i` and `i + 1`.
    pub fn boundary_angle(&self, i: usize) -> f64 {
        self.profiles[i].axis_angle + self.half_openings[i]
    }

    /// Index of the closed wedge containing `(x, y)`; boundary points
    /// resolve to the lowest matching index.
    pub fn locate_wedge(&self, x: f64, y: f64) -> Result<usize, WedgeConfigError> {
        if x == 0.0 && y == 0.0 {
            return Err(WedgeConfigError::OriginQuery);
        }
        let phi = y.atan2(x);
        let mut best = 0;
        let mut best_excess = f64::INFINITY;
        for i in 0..self.profiles.len() {
            let d = wrap_angle(phi - self.profiles[i].axis_angle).abs();
            let excess = d - self.half_openings[i];
            if excess <= 1e-12 {
                return Ok(i);
            }
            if excess < best_excess {
                best_excess = excess;
                best = i;
            }
        }
        // only reachable through rounding at a boundary; take the nearest wedge
        Ok(best)
    }
}

/// The assembled graph over all wedges.
#[derive(Clone, Debug)]
pub struct MultiWedgeSurface {
    config: WedgeConfig,
    charts: Vec<LineGraphSurface>,
}

impl MultiWedgeSurface {
    pub fn new(config: WedgeConfig) -> Self {
        let charts = config
            .profiles
            .iter()
            .map(|p| LineGraphSurface::new(p.beta.clone().constant_below(0.0)))
            .collect();
        MultiWedgeSurface { config, charts }
    }

    /// A dilation-invariant cone; every profile must be constant.
    pub fn make_cone(config: WedgeConfig) -> Result<Self, WedgeConfigError> {
        for (i, p) in config.profiles.iter().enumerate() {
            if !matches!(p.beta, BetaProfile::Constant(_)) {
                return Err(WedgeConfigError::NonConstantProfile { index: i });
            }
        }
        Ok(Self::new(config))
    }

    pub fn config(&self) -> &WedgeConfig {
        &self.config
    }

    pub fn is_cone(&self) -> bool {
        self.config
            .profiles
            .iter()
            .all(|p| matches!(p.beta, BetaProfile::Constant(_)))
    }

    /// Height evaluated with the chart of wedge `i` regardless of where the
    /// point lies; used to compare adjacent charts along the shared
    /// boundaries.
    pub fn height_in_wedge(&self, i: usize, x: f64, y: f64) -> f64 {
        let q = rotate_z(-self.config.bisector(i), Point::new(x, y, 0.0));
        self.charts[i].height(q.x, q.y)
    }

    /// Euclidean distance to the union of singular halflines `L_i`.
    pub fn distance_to_singular_set(&self, x: f64, y: f64) -> f64 {
        let mut best = f64::INFINITY;
        for p in &self.config.profiles {
            let (sin, cos) = p.axis_angle.sin_cos();
            let along = x * cos + y * sin;
            let d = if along <= 0.0 {
                x.hypot(y)
            } else {
                (x - along * cos).hypot(y - along * sin)
            };
            best = best.min(d);
        }
        best
    }

    /// The calibrating field: vertical translation of the graph normal, in
    /// ambient frame coefficients. Continuous through the wedge boundaries,
    /// discontinuous only across the singular halflines, where it is
    /// undefined (`None`).
    pub fn calibration_field(&self, x: f64, y: f64) -> Option<HorizontalVec> {
        let i = self.config.locate_wedge(x, y).ok()?;
        let q = rotate_z(-self.config.bisector(i), Point::new(x, y, 0.0));
        if q.y == 0.0 {
            return None;
        }
        let n = self.charts[i].horizontal_normal(q.x, q.y).ok()?;
        let s = sgn(q.y);
        let (a, b) = rotate_vec(self.config.bisector(i), (s * n.a, s * n.b));
        Some(HorizontalVec::new(a, b))
    }
}

impl TGraph for MultiWedgeSurface {
    fn height(&self, x: f64, y: f64) -> f64 {
        if x == 0.0 && y == 0.0 {
            return 0.0;
        }
        let i = self.config.locate_wedge(x, y).expect("not the origin");
        self.height_in_wedge(i, x, y)
    }

    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        if x == 0.0 && y == 0.0 {
            // all wedge charts meet at the cone point with vanishing
            // one-sided gradients along their singular lines
            return (0.0, 0.0);
        }
        let i = self.config.locate_wedge(x, y).expect("not the origin");
        let theta = self.config.bisector(i);
        let q = rotate_z(-theta, Point::new(x, y, 0.0));
        rotate_vec(theta, self.charts[i].gradient(q.x, q.y))
    }
}

/// The patched graph with a single singular halfline from the origin.
///
/// In coordinates where the halfline is the positive x-axis, the height is
/// `max(u_beta, 0)`: the one-line graph of the (constantly extended)
/// profile where it is positive, the plane `t = 0` elsewhere. The patch
/// boundary consists of the two halflines where the foot parameter
/// vanishes, at angles `+-alpha(0)`, and the x-axis. For constant `beta0`
/// this is `max(-xy + beta0 y |y|, 0)`.
#[derive(Clone, Debug)]
pub struct SingularHalflineSurface {
    chart: LineGraphSurface,
    direction: f64,
}

impl SingularHalflineSurface {
    pub fn new(beta: BetaProfile, direction: f64) -> Self {
        SingularHalflineSurface {
            chart: LineGraphSurface::new(beta.constant_below(0.0)),
            direction,
        }
    }

    pub fn direction(&self) -> f64 {
        self.direction
    }

    pub fn chart(&self) -> &LineGraphSurface {
        &self.chart
    }

    /// Angle of the patch halflines relative to the singular direction.
    pub fn patch_angle(&self) -> f64 {
        angle_from_beta(self.chart.beta().eval(0.0))
    }
}

impl TGraph for SingularHalflineSurface {
    fn height(&self, x: f64, y: f64) -> f64 {
        let q = rotate_z(-self.direction, Point::new(x, y, 0.0));
        let u = self.chart.height(q.x, q.y);
        if u > 0.0 {
            u
        } else {
            0.0
        }
    }

    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        let q = rotate_z(-self.direction, Point::new(x, y, 0.0));
        let u = self.chart.height(q.x, q.y);
        if u > 0.0 {
            rotate_vec(self.direction, self.chart.gradient(q.x, q.y))
        } else {
            (0.0, 0.0)
        }
    }
}
