//! Horizontal (sub-Riemannian) area of t-graphs and the divergence check
//! for the calibrating field.
//!
//! For a graph `t = u(x, y)` over a plane domain the perimeter of the
//! subgraph reduces to
//!
//! ```text
//! A(u) = integral sqrt((u_x - y)^2 + (u_y + x)^2) dx dy,
//! ```
//!
//! the plane integral of `|N_H| / |N_3|`, i.e. the horizontal part of the
//! Riemannian surface measure pushed to the plane. The companion mesh
//! evaluator (triangulating the graph and summing `|N_H|` times Riemannian
//! triangle area) converges to the same value; that cross-check lives with
//! the mesh code.
//!
//! Quadrature is the composite midpoint rule: the integrand has gradient
//! kinks along singular lines, so a low-order rule with a two-level
//! refinement estimate is preferred over high-order rules whose nominal
//! accuracy those kinks void. Accumulation is pairwise per row and then
//! across rows, so results do not depend on how callers split the work.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
#[allow(unused_imports)]
use num_traits::Float;

use crate::graph_line::{LineGraphSurface, Side};
use crate::heisenberg::HorizontalVec;
use crate::multiwedge::MultiWedgeSurface;
use crate::numeric::{pairwise_sum, sgn};
use crate::surface::TGraph;

/// Axis-aligned rectangle `[x0, x1] x [y0, y1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Rect {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Self {
        Rect { x0, x1, y0, y1 }
    }

    pub fn square(half: f64) -> Self {
        Rect { x0: -half, x1: half, y0: -half, y1: half }
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }
}

/// Disk indicator used to restrict quadrature to a disk inside the rectangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

/// Integration domain: a rectangle, optionally cut by a disk indicator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Domain {
    pub rect: Rect,
    pub disk: Option<Disk>,
}

impl Domain {
    pub fn rect(rect: Rect) -> Self {
        Domain { rect, disk: None }
    }

    /// The disk of radius `r` about the origin, inscribed in its bounding
    /// square.
    pub fn disk(r: f64) -> Self {
        Domain {
            rect: Rect::square(r),
            disk: Some(Disk { cx: 0.0, cy: 0.0, r }),
        }
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        match self.disk {
            None => true,
            Some(d) => {
                let (dx, dy) = (x - d.cx, y - d.cy);
                dx * dx + dy * dy <= d.r * d.r
            }
        }
    }
}

/// Quadrature value with the cell count and a two-level refinement
/// (Richardson difference) error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AreaReport {
    pub value: f64,
    pub cells: usize,
    pub error_estimate: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AreaError {
    /// Quadrature needs at least a 4 x 4 grid.
    TooCoarse(usize),
    /// The integrand produced a non-finite sample.
    NonFiniteSample { x: f64, y: f64 },
    /// Divergence stencil too close to the singular set.
    NearSingular { distance: f64, needed: f64 },
    /// Declared side does not match the sign of y.
    SideMismatch,
}

impl fmt::Display for AreaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AreaError::TooCoarse(n) => write!(f, "grid n = {n} too coarse, need n >= 4"),
            AreaError::NonFiniteSample { x, y } => {
                write!(f, "non-finite integrand sample at ({x}, {y})")
            }
            AreaError::NearSingular { distance, needed } => write!(
                f,
                "stencil distance {distance} to the singular set, need more than {needed}"
            ),
            AreaError::SideMismatch => write!(f, "declared side does not match sgn(y)"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for AreaError {}

/// Midpoint quadrature of the horizontal-area density over the domain,
/// with gradients supplied by the surface (closed forms where the surface
/// has them, central differences otherwise).
pub fn horizontal_area<S: TGraph + ?Sized>(
    s: &S,
    domain: &Domain,
    n: usize,
) -> Result<AreaReport, AreaError> {
    if n < 4 {
        return Err(AreaError::TooCoarse(n));
    }
    let fine = quadrature(s, domain, n)?;
    let coarse = quadrature(s, domain, n / 2)?;
    Ok(AreaReport {
        value: fine,
        cells: n * n,
        error_estimate: (fine - coarse).abs(),
    })
}

fn quadrature<S: TGraph + ?Sized>(s: &S, domain: &Domain, n: usize) -> Result<f64, AreaError> {
    let grid = GradientGrid::build(s, domain, n)?;
    Ok(grid.area_with(|_, _| (0.0, 0.0)))
}

/// Midpoint grid with the surface gradient cached per cell.
///
/// Perturbation tests integrate many variants `u + phi` of one base
/// surface; the base gradient is reused and only the (analytic) bump
/// gradient changes per trial.
#[derive(Clone, Debug)]
pub struct GradientGrid {
    n: usize,
    rect: Rect,
    cell_area: f64,
    /// Midpoint coordinates and cached base gradient per cell, row-major;
    /// masked-out cells (outside a disk indicator) carry NAN coordinates.
    cells: Vec<CellSample>,
}

#[derive(Clone, Copy, Debug)]
struct CellSample {
    x: f64,
    y: f64,
    gx: f64,
    gy: f64,
    inside: bool,
}

impl GradientGrid {
    pub fn build<S: TGraph + ?Sized>(
        s: &S,
        domain: &Domain,
        n: usize,
    ) -> Result<Self, AreaError> {
        if n < 2 {
            return Err(AreaError::TooCoarse(n));
        }
        let rect = domain.rect;
        let hx = rect.width() / n as f64;
        let hy = rect.height() / n as f64;
        let mut cells = Vec::with_capacity(n * n);
        for j in 0..n {
            let y = rect.y0 + (j as f64 + 0.5) * hy;
            for i in 0..n {
                let x = rect.x0 + (i as f64 + 0.5) * hx;
                let inside = domain.contains(x, y);
                let (gx, gy) = if inside { s.gradient(x, y) } else { (0.0, 0.0) };
                if inside && !(gx.is_finite() && gy.is_finite()) {
                    return Err(AreaError::NonFiniteSample { x, y });
                }
                cells.push(CellSample { x, y, gx, gy, inside });
            }
        }
        Ok(GradientGrid { n, rect, cell_area: hx * hy, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rect(&self) -> &Rect {
        &self.rect
    }

    /// Integrate the density of `u + phi` where `grad phi` is supplied by
    /// the closure; pass a zero closure for the base surface itself.
    pub fn area_with<F: Fn(f64, f64) -> (f64, f64)>(&self, extra_grad: F) -> f64 {
        let n = self.n;
        let mut row = vec![0.0; n];
        let mut rows = vec![0.0; n];
        for j in 0..n {
            for i in 0..n {
                let c = &self.cells[j * n + i];
                row[i] = if c.inside {
                    let (ex, ey) = extra_grad(c.x, c.y);
                    (c.gx + ex - c.y).hypot(c.gy + ey + c.x)
                } else {
                    0.0
                };
            }
            rows[j] = pairwise_sum(&row);
        }
        pairwise_sum(&rows) * self.cell_area
    }
}

/// Central-difference Riemannian divergence of a horizontal field whose
/// frame coefficients depend on `(x, y)` only.
///
/// For `U = f X + g Y` the Levi-Civita divergence is `Xf + Yg` (the
/// connection terms `<Grad_X(gY), X>` etc. cancel in this frame), which for
/// vertical-translation invariant coefficients is the plane divergence
/// `f_x + g_y`. The same value falls out of the coordinate form:
/// `U = (f, g, fy - gx)` and the volume form is Lebesgue, so
/// `div U = f_x + g_y + (fy - gx)_t = f_x + g_y`.
pub fn divergence_of_field<F: Fn(f64, f64) -> HorizontalVec>(
    field: &F,
    p: (f64, f64),
    h: f64,
) -> f64 {
    let (x, y) = p;
    (field(x + h, y).a - field(x - h, y).a) / (2.0 * h)
        + (field(x, y + h).b - field(x, y - h).b) / (2.0 * h)
}

/// Divergence of the vertically translated horizontal normal of a one-line
/// graph, at a point off the singular axis. The stencil must keep clear of
/// the axis by `2h` and the declared side must match `sgn(y)`.
pub fn divergence_check_line(
    s: &LineGraphSurface,
    p: (f64, f64),
    h: f64,
    side: Side,
) -> Result<f64, AreaError> {
    let (_, y) = p;
    if y.abs() <= 2.0 * h {
        return Err(AreaError::NearSingular { distance: y.abs(), needed: 2.0 * h });
    }
    let matches = (side == Side::Above && y > 0.0) || (side == Side::Below && y < 0.0);
    if !matches {
        return Err(AreaError::SideMismatch);
    }
    let field = |x: f64, yy: f64| s.horizontal_normal_sided(x, yy, side);
    Ok(divergence_of_field(&field, p, h))
}

/// Divergence of the calibrating field of an assembled wedge surface at a
/// point of an open wedge, `2h` away from every singular halfline.
pub fn divergence_check_multiwedge(
    s: &MultiWedgeSurface,
    p: (f64, f64),
    h: f64,
) -> Result<f64, AreaError> {
    let d = s.distance_to_singular_set(p.0, p.1);
    if d <= 2.0 * h {
        return Err(AreaError::NearSingular { distance: d, needed: 2.0 * h });
    }
    let field = |x: f64, y: f64| {
        s.calibration_field(x, y)
            .unwrap_or(HorizontalVec { a: f64::NAN, b: f64::NAN })
    };
    Ok(divergence_of_field(&field, p, h))
}

/// Convenience wrapper choosing the side from the sign of `p.1`.
pub fn divergence_check_line_auto(
    s: &LineGraphSurface,
    p: (f64, f64),
    h: f64,
) -> Result<f64, AreaError> {
    let side = if sgn(p.1) >= 0.0 { Side::Above } else { Side::Below };
    divergence_check_line(s, p, h, side)
}
