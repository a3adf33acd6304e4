//! The t-graph abstraction shared by quadrature and verification.
//!
//! Everything downstream only needs heights and plane gradients. The
//! horizontal-area integrand of a graph `t = u(x, y)` is
//! `|(u_x - y, u_y + x)|`; that residual vector also locates the singular
//! set (it vanishes exactly where the tangent plane is horizontal) and
//! orients the horizontal normal.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::area::Rect;
use crate::heisenberg::{rotate_z, HorizontalVec, Point};

/// A surface of the form `t = u(x, y)` over the whole plane.
pub trait TGraph {
    fn height(&self, x: f64, y: f64) -> f64;

    /// Plane gradient of the height. The default is a central difference;
    /// implementors override it with closed forms where available.
    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        const H: f64 = 1e-6;
        (
            (self.height(x + H, y) - self.height(x - H, y)) / (2.0 * H),
            (self.height(x, y + H) - self.height(x, y - H)) / (2.0 * H),
        )
    }
}

impl<S: TGraph + ?Sized> TGraph for &S {
    fn height(&self, x: f64, y: f64) -> f64 {
        (**self).height(x, y)
    }
    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        (**self).gradient(x, y)
    }
}

/// The horizontal-gradient residual `(u_x - y, u_y + x)`.
pub fn horizontal_residual<S: TGraph + ?Sized>(s: &S, x: f64, y: f64) -> (f64, f64) {
    let (ux, uy) = s.gradient(x, y);
    (ux - y, uy + x)
}

/// Integrand of the horizontal area: `|(u_x - y, u_y + x)|`.
pub fn area_density<S: TGraph + ?Sized>(s: &S, x: f64, y: f64) -> f64 {
    let (rx, ry) = horizontal_residual(s, x, y);
    rx.hypot(ry)
}

/// Horizontal unit normal computed from the gradient: the normalization of
/// `(y - u_x, -(x + u_y))` in frame coefficients, with the overall sign
/// fixed so the X-coefficient is nonnegative. With that orientation it
/// coincides with the closed form `(1, -sgn(y) beta(xi)) / sqrt(1 + beta^2)`
/// of the ruled graphs on both sides of the singular line.
///
/// Returns `None` at singular points (zero residual).
pub fn normal_from_gradient(x: f64, y: f64, grad: (f64, f64)) -> Option<HorizontalVec> {
    let v = HorizontalVec::new(y - grad.0, -(x + grad.1));
    let n = v.normalized()?;
    Some(if n.a < 0.0 || (n.a == 0.0 && n.b < 0.0) {
        HorizontalVec::new(-n.a, -n.b)
    } else {
        n
    })
}

/// Riemannian unit normal of the graph in frame coefficients
/// `(u_x - y, u_y + x, -1) / sqrt(1 + |residual|^2)`, oriented with negative
/// T-coefficient. This orientation varies continuously through the wedge
/// boundaries of the assembled cones.
pub fn riemannian_normal_from_gradient(x: f64, y: f64, grad: (f64, f64)) -> (f64, f64, f64) {
    let rx = grad.0 - y;
    let ry = grad.1 + x;
    let n = (1.0 + rx * rx + ry * ry).sqrt();
    (rx / n, ry / n, -1.0 / n)
}

/// Grid points of `rect` (n per axis) where the residual norm drops below
/// `tol`; row-major order. For the ruled graphs this locates the projection
/// of the singular set.
pub fn singular_scan<S: TGraph + ?Sized>(
    s: &S,
    rect: &Rect,
    n: usize,
    tol: f64,
) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for j in 0..n {
        let y = rect.y0 + (rect.y1 - rect.y0) * j as f64 / (n - 1) as f64;
        for i in 0..n {
            let x = rect.x0 + (rect.x1 - rect.x0) * i as f64 / (n - 1) as f64;
            let (rx, ry) = horizontal_residual(s, x, y);
            if rx.hypot(ry) < tol {
                out.push((x, y));
            }
        }
    }
    out
}

/// The plane `t = 0`; a minimal graph ruled by the horizontal lines
/// through the origin.
#[derive(Clone, Copy, Debug, Default)]
pub struct ZeroSurface;

impl TGraph for ZeroSurface {
    fn height(&self, _x: f64, _y: f64) -> f64 {
        0.0
    }
    fn gradient(&self, _x: f64, _y: f64) -> (f64, f64) {
        (0.0, 0.0)
    }
}

/// A graph rotated about the t-axis: `u'(p) = u(r_{-theta} p)`.
///
/// Rotation about the vertical axis is an isometry preserving the
/// horizontal distribution, so heights are carried over unchanged and the
/// gradient transforms as a plane covector.
#[derive(Clone, Copy, Debug)]
pub struct RotatedSurface<S> {
    pub inner: S,
    pub theta: f64,
}

impl<S: TGraph> RotatedSurface<S> {
    pub fn new(inner: S, theta: f64) -> Self {
        RotatedSurface { inner, theta }
    }
}

impl<S: TGraph> TGraph for RotatedSurface<S> {
    fn height(&self, x: f64, y: f64) -> f64 {
        let q = rotate_z(-self.theta, Point::new(x, y, 0.0));
        self.inner.height(q.x, q.y)
    }
    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        let q = rotate_z(-self.theta, Point::new(x, y, 0.0));
        let g = self.inner.gradient(q.x, q.y);
        rotate_vec(self.theta, g)
    }
}

/// Rotate a plane vector by `theta`.
pub(crate) fn rotate_vec(theta: f64, v: (f64, f64)) -> (f64, f64) {
    let (sin, cos) = theta.sin_cos();
    (cos * v.0 - sin * v.1, sin * v.0 + cos * v.1)
}

/// A graph given by explicit height and gradient closures.
pub struct HeightField<H, G>
where
    H: Fn(f64, f64) -> f64,
    G: Fn(f64, f64) -> (f64, f64),
{
    pub height: H,
    pub gradient: G,
}

impl<H, G> TGraph for HeightField<H, G>
where
    H: Fn(f64, f64) -> f64,
    G: Fn(f64, f64) -> (f64, f64),
{
    fn height(&self, x: f64, y: f64) -> f64 {
        (self.height)(x, y)
    }
    fn gradient(&self, x: f64, y: f64) -> (f64, f64) {
        (self.gradient)(x, y)
    }
}
