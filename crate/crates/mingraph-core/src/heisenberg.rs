//! Group structure, left-invariant frame, isometries, and geodesics of `H^1`.
//!
//! Points are written in exponential coordinates `(x, y, t)`, identified with
//! `C x R` via `z = x + iy`. The group law is
//! `[z,t] * [z',t'] = [z + z', t + t' + Im(z conj(z'))]`, and
//! `{X, Y, T}` with `X = d/dx + y d/dt`, `Y = d/dy - x d/dt`, `T = d/dt`
//! is a left-invariant orthonormal frame for the metric used throughout.
//! The horizontal distribution `span{X, Y}` is the kernel of the contact
//! form `w = -y dx + x dy + dt`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
#[allow(unused_imports)]
use num_traits::Float;

/// A point of `H^1` in exponential coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0, t: 0.0 };

    pub fn new(x: f64, y: f64, t: f64) -> Self {
        Point { x, y, t }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.t.is_finite()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.t)
    }
}

/// Coefficients of a horizontal vector with respect to the frame `{X, Y}`
/// at some base point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HorizontalVec {
    pub a: f64,
    pub b: f64,
}

impl HorizontalVec {
    pub fn new(a: f64, b: f64) -> Self {
        HorizontalVec { a, b }
    }

    pub fn norm(&self) -> f64 {
        self.a.hypot(self.b)
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(&self) -> Option<HorizontalVec> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            None
        } else {
            Some(HorizontalVec { a: self.a / n, b: self.b / n })
        }
    }

    /// Ambient coordinate vector `a X_p + b Y_p` at base point `p`.
    pub fn ambient_at(&self, p: Point) -> AmbientVec {
        AmbientVec {
            dx: self.a,
            dy: self.b,
            dt: self.a * p.y - self.b * p.x,
        }
    }
}

/// A coordinate tangent vector `(dx, dy, dt)` at some base point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AmbientVec {
    pub dx: f64,
    pub dy: f64,
    pub dt: f64,
}

impl AmbientVec {
    pub fn new(dx: f64, dy: f64, dt: f64) -> Self {
        AmbientVec { dx, dy, dt }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HeisenbergError {
    /// Halfline angle outside the open interval `(0, pi)`.
    AngleOutOfRange(f64),
    /// Initial geodesic velocity is not a unit horizontal vector.
    NonUnitTangent(f64),
    /// The integrator needs at least one step.
    ZeroSteps,
}

impl fmt::Display for HeisenbergError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeisenbergError::AngleOutOfRange(a) => {
                write!(f, "halfline angle {a} must lie in (0, pi)")
            }
            HeisenbergError::NonUnitTangent(n) => {
                write!(f, "initial velocity has norm {n}, expected 1 within 1e-12")
            }
            HeisenbergError::ZeroSteps => write!(f, "steps must be >= 1"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for HeisenbergError {}

/// Group product `p * q`.
///
/// In coordinates: `(x + x', y + y', t + t' + x' y - x y')`.
pub fn group_mul(p: Point, q: Point) -> Point {
    Point {
        x: p.x + q.x,
        y: p.y + q.y,
        t: p.t + q.t + q.x * p.y - p.x * q.y,
    }
}

/// Group inverse; `(x, y, t)^-1 = (-x, -y, -t)`.
pub fn group_inv(p: Point) -> Point {
    Point { x: -p.x, y: -p.y, t: -p.t }
}

/// The left-invariant frame `(X_p, Y_p, T_p)` as coordinate vectors.
pub fn frame_at(p: Point) -> (AmbientVec, AmbientVec, AmbientVec) {
    (
        AmbientVec::new(1.0, 0.0, p.y),
        AmbientVec::new(0.0, 1.0, -p.x),
        AmbientVec::new(0.0, 0.0, 1.0),
    )
}

/// Contact form `w = -y dx + x dy + dt` paired with `v` at `p`.
///
/// Vanishes exactly when `v` is horizontal at `p`.
pub fn contact_pairing(p: Point, v: AmbientVec) -> f64 {
    -p.y * v.dx + p.x * v.dy + v.dt
}

/// Oriented quarter-turn in the horizontal distribution: `J(X) = Y`,
/// `J(Y) = -X`.
///
/// The sign is a convention; it is fixed so that the characteristic
/// direction of the ruled graphs is `J` applied to their horizontal normal.
pub fn j_rotate(h: HorizontalVec) -> HorizontalVec {
    HorizontalVec { a: -h.b, b: h.a }
}

/// Intrinsic dilation by `e^s` centered at `center`.
///
/// This is `L_c . phi_s . L_c^-1` where `phi_s(x, y, t) = (e^s x, e^s y, e^(2s) t)`
/// and `L_c` is left translation by the center.
pub fn dilate(center: Point, s: f64, q: Point) -> Point {
    let w = group_mul(group_inv(center), q);
    let es = s.exp();
    let scaled = Point::new(es * w.x, es * w.y, (2.0 * s).exp() * w.t);
    group_mul(center, scaled)
}

/// Euclidean rotation of angle `theta` about the t-axis; an area-preserving
/// isometry of `H^1`.
pub fn rotate_z(theta: f64, q: Point) -> Point {
    let (sin, cos) = theta.sin_cos();
    Point {
        x: cos * q.x - sin * q.y,
        y: sin * q.x + cos * q.y,
        t: q.t,
    }
}

/// Point at signed parameter `w` on the horizontal line through `(v, 0, 0)`
/// whose planar direction makes angle `sign(w) * alpha` with the x-axis:
///
/// ```text
/// w >= 0:  (v + w cos a, w sin a, -v w sin a)
/// w <= 0:  (v + |w| cos a, -|w| sin a, v |w| sin a)
/// ```
///
/// Both branches are horizontal lines in `H^1`.
pub fn horizontal_lift_line(v: f64, alpha: f64, w: f64) -> Result<Point, HeisenbergError> {
    if !(alpha > 0.0 && alpha < core::f64::consts::PI) {
        return Err(HeisenbergError::AngleOutOfRange(alpha));
    }
    let (sin, cos) = alpha.sin_cos();
    let aw = w.abs();
    Ok(if w >= 0.0 {
        Point::new(v + w * cos, w * sin, -v * w * sin)
    } else {
        Point::new(v + aw * cos, -aw * sin, v * aw * sin)
    })
}

/// One sample of a geodesic trace: the point and the (unit, horizontal)
/// tangent in frame coefficients.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodesicSample {
    pub point: Point,
    pub tangent: HorizontalVec,
}

impl GeodesicSample {
    /// Tangent as an ambient coordinate vector at the sample point.
    pub fn tangent_ambient(&self) -> AmbientVec {
        self.tangent.ambient_at(self.point)
    }
}

/// Integrate the geodesic equation `D_g' g' + 2 lambda J(g') = 0` from
/// `p0` with unit horizontal velocity `h0`, over `length`, in `steps`
/// classical Runge-Kutta steps. Returns `steps + 1` samples (or a single
/// sample when `length == 0`).
///
/// Writing `g' = cos(phi) X + sin(phi) Y`, the connection terms cancel and
/// the equation reduces to `phi' = -2 lambda` (the frame satisfies
/// `Grad_X Y = -T = -Grad_Y X`, `Grad_X X = Grad_Y Y = 0`, so
/// `D_g' g' = phi' J(g')`). The integrator advances the position ODE
///
/// ```text
/// (x', y', t') = (cos phi, sin phi, y cos phi - x sin phi)
/// ```
///
/// with `phi(s) = phi0 - 2 lambda s` known in closed form, which keeps the
/// tangent unit and horizontal by construction.
pub fn geodesic_integrate(
    p0: Point,
    h0: HorizontalVec,
    lambda: f64,
    length: f64,
    steps: usize,
) -> Result<Vec<GeodesicSample>, HeisenbergError> {
    let n0 = h0.norm();
    if (n0 - 1.0).abs() > 1e-12 {
        return Err(HeisenbergError::NonUnitTangent(n0));
    }
    if steps == 0 {
        return Err(HeisenbergError::ZeroSteps);
    }
    let phi0 = h0.b.atan2(h0.a);
    let dir_at = |s: f64| {
        let (sin, cos) = (phi0 - 2.0 * lambda * s).sin_cos();
        HorizontalVec::new(cos, sin)
    };
    if length == 0.0 {
        return Ok(vec![GeodesicSample { point: p0, tangent: dir_at(0.0) }]);
    }

    let rhs = |s: f64, p: Point| {
        let d = dir_at(s);
        AmbientVec::new(d.a, d.b, p.y * d.a - p.x * d.b)
    };
    let h = length / steps as f64;
    let mut p = p0;
    let mut out = Vec::with_capacity(steps + 1);
    out.push(GeodesicSample { point: p, tangent: dir_at(0.0) });
    for k in 0..steps {
        let s = k as f64 * h;
        let k1 = rhs(s, p);
        let k2 = rhs(s + 0.5 * h, step(p, k1, 0.5 * h));
        let k3 = rhs(s + 0.5 * h, step(p, k2, 0.5 * h));
        let k4 = rhs(s + h, step(p, k3, h));
        p = Point::new(
            p.x + h / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx),
            p.y + h / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy),
            p.t + h / 6.0 * (k1.dt + 2.0 * k2.dt + 2.0 * k3.dt + k4.dt),
        );
        out.push(GeodesicSample { point: p, tangent: dir_at((k + 1) as f64 * h) });
    }
    Ok(out)
}

fn step(p: Point, v: AmbientVec, h: f64) -> Point {
    Point::new(p.x + h * v.dx, p.y + h * v.dy, p.t + h * v.dt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_point(rng: &mut ChaCha8Rng) -> Point {
        Point::new(
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
        )
    }

    #[test]
    fn group_law_examples() {
        let e = Point::ORIGIN;
        let p = Point::new(2.0, -1.0, 3.0);
        assert_eq!(group_mul(e, p), p);
        assert_eq!(group_mul(p, e), p);
        assert_eq!(
            group_mul(Point::new(1.0, 0.0, 0.0), Point::new(0.0, 1.0, 0.0)),
            Point::new(1.0, 1.0, -1.0)
        );
        assert_eq!(
            group_mul(Point::new(1.0, 0.0, 0.0), Point::new(1.0, 0.0, 0.0)),
            Point::new(2.0, 0.0, 0.0)
        );
    }

    #[test]
    fn group_associativity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let (p, q, r) = (rand_point(&mut rng), rand_point(&mut rng), rand_point(&mut rng));
            let lhs = group_mul(group_mul(p, q), r);
            let rhs = group_mul(p, group_mul(q, r));
            assert!((lhs.x - rhs.x).abs() < 1e-12);
            assert!((lhs.y - rhs.y).abs() < 1e-12);
            assert!((lhs.t - rhs.t).abs() < 1e-12);
        }
    }

    #[test]
    fn inverse_cancels() {
        assert_eq!(group_inv(Point::new(1.0, 2.0, 3.0)), Point::new(-1.0, -2.0, -3.0));
        assert_eq!(group_inv(Point::ORIGIN), Point::ORIGIN);
        assert_eq!(group_inv(Point::new(4.0, 0.0, 0.0)), Point::new(-4.0, 0.0, 0.0));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let p = rand_point(&mut rng);
            let e = group_mul(p, group_inv(p));
            assert!(e.x.abs() < 1e-12 && e.y.abs() < 1e-12 && e.t.abs() < 1e-12);
        }
    }

    #[test]
    fn frame_examples() {
        let (x, y, t) = frame_at(Point::ORIGIN);
        assert_eq!(x, AmbientVec::new(1.0, 0.0, 0.0));
        assert_eq!(y, AmbientVec::new(0.0, 1.0, 0.0));
        assert_eq!(t, AmbientVec::new(0.0, 0.0, 1.0));
        assert_eq!(frame_at(Point::new(0.0, 2.0, 5.0)).0, AmbientVec::new(1.0, 0.0, 2.0));
        assert_eq!(frame_at(Point::new(3.0, 0.0, 0.0)).1, AmbientVec::new(0.0, 1.0, -3.0));
    }

    /// Pushforward of a tangent vector at q under left translation by p.
    /// The Jacobian of q -> p * q is [[1,0,0],[0,1,0],[p.y,-p.x,1]].
    fn push_left(p: Point, v: AmbientVec) -> AmbientVec {
        AmbientVec::new(v.dx, v.dy, p.y * v.dx - p.x * v.dy + v.dt)
    }

    #[test]
    fn frame_is_left_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let p = rand_point(&mut rng);
            let q = rand_point(&mut rng);
            let (xq, yq, tq) = frame_at(q);
            let (xpq, ypq, tpq) = frame_at(group_mul(p, q));
            for (pushed, target) in [
                (push_left(p, xq), xpq),
                (push_left(p, yq), ypq),
                (push_left(p, tq), tpq),
            ] {
                assert!((pushed.dx - target.dx).abs() < 1e-12);
                assert!((pushed.dy - target.dy).abs() < 1e-12);
                assert!((pushed.dt - target.dt).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn contact_form_kernel_is_horizontal() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let p = rand_point(&mut rng);
            let (x, y, _) = frame_at(p);
            assert!(contact_pairing(p, x).abs() < 1e-12);
            assert!(contact_pairing(p, y).abs() < 1e-12);
        }
        assert_eq!(contact_pairing(Point::ORIGIN, AmbientVec::new(0.0, 0.0, 1.0)), 1.0);
        assert_eq!(contact_pairing(Point::new(1.0, 0.0, 0.0), AmbientVec::new(0.0, 1.0, 0.0)), 1.0);
    }

    #[test]
    fn j_rotation() {
        assert_eq!(j_rotate(HorizontalVec::new(1.0, 0.0)), HorizontalVec::new(0.0, 1.0));
        assert_eq!(j_rotate(HorizontalVec::new(0.0, 1.0)), HorizontalVec::new(-1.0, 0.0));
        assert_eq!(j_rotate(HorizontalVec::new(3.0, 4.0)), HorizontalVec::new(-4.0, 3.0));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let v = HorizontalVec::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            assert!((j_rotate(v).norm() - v.norm()).abs() < 1e-12);
            let jj = j_rotate(j_rotate(v));
            assert!((jj.a + v.a).abs() < 1e-12 && (jj.b + v.b).abs() < 1e-12);
        }
    }

    #[test]
    fn dilation_examples() {
        let q = dilate(Point::ORIGIN, 0.7, Point::ORIGIN);
        assert_eq!(q, Point::ORIGIN);
        let q = dilate(Point::ORIGIN, 2.0f64.ln(), Point::new(1.0, 1.0, 1.0));
        assert!((q.x - 2.0).abs() < 1e-12 && (q.y - 2.0).abs() < 1e-12 && (q.t - 4.0).abs() < 1e-12);
        let q = dilate(Point::new(1.0, 0.0, 0.0), 2.0f64.ln(), Point::new(1.0, 0.0, 5.0));
        assert!((q.x - 1.0).abs() < 1e-12 && q.y.abs() < 1e-12 && (q.t - 20.0).abs() < 1e-12);
    }

    #[test]
    fn dilations_form_a_one_parameter_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..200 {
            let c = rand_point(&mut rng);
            let q = rand_point(&mut rng);
            let s = rng.gen_range(-1.5..1.5);
            let s2 = rng.gen_range(-1.5..1.5);
            let a = dilate(c, s, dilate(c, s2, q));
            let b = dilate(c, s + s2, q);
            assert!((a.x - b.x).abs() < 1e-10);
            assert!((a.y - b.y).abs() < 1e-10);
            assert!((a.t - b.t).abs() < 1e-10);
        }
    }

    #[test]
    fn rotation_examples() {
        let p = Point::new(1.0, 0.0, 7.0);
        let r = rotate_z(PI / 2.0, p);
        assert!(r.x.abs() < 1e-15 && (r.y - 1.0).abs() < 1e-15 && r.t == 7.0);
        let p = Point::new(0.3, -0.4, 2.0);
        let r = rotate_z(PI, p);
        assert!((r.x + p.x).abs() < 1e-15 && (r.y + p.y).abs() < 1e-15 && r.t == p.t);
        let r = rotate_z(0.0, p);
        assert_eq!(r, p);
    }

    #[test]
    fn rotation_preserves_horizontality_of_lifted_lines() {
        // finite-difference tangents of the rotated lifted line must stay in
        // the kernel of the contact form
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let v = rng.gen_range(-2.0..2.0);
            let alpha = rng.gen_range(0.1..PI - 0.1);
            let theta = rng.gen_range(0.0..2.0 * PI);
            let w = rng.gen_range(-3.0..3.0);
            let h = 1e-4;
            let a = rotate_z(theta, horizontal_lift_line(v, alpha, w - h).unwrap());
            let m = rotate_z(theta, horizontal_lift_line(v, alpha, w).unwrap());
            let b = rotate_z(theta, horizontal_lift_line(v, alpha, w + h).unwrap());
            // lines: central differences are exact up to rounding
            let tangent = AmbientVec::new(
                (b.x - a.x) / (2.0 * h),
                (b.y - a.y) / (2.0 * h),
                (b.t - a.t) / (2.0 * h),
            );
            if w.abs() > h {
                // skip straddling the kink at w = 0 where the two branches meet
                assert!(contact_pairing(m, tangent).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn lift_line_examples() {
        let p = horizontal_lift_line(1.0, PI / 2.0, 2.0).unwrap();
        assert!((p.x - 1.0).abs() < 1e-15 && (p.y - 2.0).abs() < 1e-15 && (p.t + 2.0).abs() < 1e-12);
        let p = horizontal_lift_line(1.0, PI / 2.0, -2.0).unwrap();
        assert!((p.x - 1.0).abs() < 1e-15 && (p.y + 2.0).abs() < 1e-15 && (p.t - 2.0).abs() < 1e-12);
        let alpha = 0.9;
        let p = horizontal_lift_line(0.0, alpha, 1.0).unwrap();
        assert!((p.x - alpha.cos()).abs() < 1e-15);
        assert!((p.y - alpha.sin()).abs() < 1e-15);
        assert_eq!(p.t, 0.0);
        assert!(horizontal_lift_line(0.0, 0.0, 1.0).is_err());
        assert!(horizontal_lift_line(0.0, PI, 1.0).is_err());
        assert!(horizontal_lift_line(0.0, 3.5, 1.0).is_err());
    }

    #[test]
    fn lifted_lines_are_horizontal() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let v = rng.gen_range(-2.0..2.0);
            let alpha = rng.gen_range(0.05..PI - 0.05);
            let w = rng.gen_range(0.01..4.0) * if rng.gen::<bool>() { 1.0 } else { -1.0 };
            let p = horizontal_lift_line(v, alpha, w).unwrap();
            let (sin, cos) = alpha.sin_cos();
            let tangent = if w >= 0.0 {
                AmbientVec::new(cos, sin, -v * sin)
            } else {
                AmbientVec::new(cos, -sin, v * sin)
            };
            assert!(contact_pairing(p, tangent).abs() < 1e-12);
        }
    }

    #[test]
    fn geodesic_zero_curvature_is_a_line() {
        let samples =
            geodesic_integrate(Point::ORIGIN, HorizontalVec::new(1.0, 0.0), 0.0, 5.0, 100).unwrap();
        for (k, s) in samples.iter().enumerate() {
            let arc = 5.0 * k as f64 / 100.0;
            assert!((s.point.x - arc).abs() < 1e-12);
            assert!(s.point.y.abs() < 1e-12 && s.point.t.abs() < 1e-12);
        }
        let samples = geodesic_integrate(
            Point::new(1.0, 0.0, 0.0),
            HorizontalVec::new(0.0, 1.0),
            0.0,
            4.0,
            200,
        )
        .unwrap();
        for (k, s) in samples.iter().enumerate() {
            let arc = 4.0 * k as f64 / 200.0;
            let expect = horizontal_lift_line(1.0, PI / 2.0, arc).unwrap();
            assert!((s.point.x - expect.x).abs() < 1e-10);
            assert!((s.point.y - expect.y).abs() < 1e-10);
            assert!((s.point.t - expect.t).abs() < 1e-10);
        }
    }

    #[test]
    fn geodesic_matches_closed_form_circle() {
        // For lambda != 0 the planar projection is the circle
        //   x(s) = x0 + (sin(phi0) - sin(phi0 - 2 lambda s)) / (2 lambda)
        //   y(s) = y0 - (cos(phi0) - cos(phi0 - 2 lambda s)) / (2 lambda)
        let lambda = 0.8;
        let p0 = Point::new(0.3, -0.2, 0.1);
        let phi0 = 1.1f64;
        let h0 = HorizontalVec::new(phi0.cos(), phi0.sin());
        let samples = geodesic_integrate(p0, h0, lambda, 6.0, 600).unwrap();
        for (k, s) in samples.iter().enumerate() {
            let arc = 6.0 * k as f64 / 600.0;
            let phi = phi0 - 2.0 * lambda * arc;
            let x = p0.x + (phi0.sin() - phi.sin()) / (2.0 * lambda);
            let y = p0.y - (phi0.cos() - phi.cos()) / (2.0 * lambda);
            // fourth-order global error of the classical scheme
            assert!((s.point.x - x).abs() < 1e-9, "x deviates at k={k}");
            assert!((s.point.y - y).abs() < 1e-9, "y deviates at k={k}");
        }
    }

    #[test]
    fn geodesic_tangent_unit_and_horizontal() {
        let h0 = HorizontalVec::new(0.6, 0.8);
        for lambda in [0.0, 0.5, -2.0] {
            let samples = geodesic_integrate(Point::new(1.0, 2.0, 3.0), h0, lambda, 10.0, 500).unwrap();
            for s in &samples {
                assert!((s.tangent.norm() - 1.0).abs() < 1e-12);
                assert!(contact_pairing(s.point, s.tangent_ambient()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn geodesic_degenerate_inputs() {
        let out = geodesic_integrate(Point::new(1.0, 2.0, 3.0), HorizontalVec::new(1.0, 0.0), 0.3, 0.0, 10)
            .unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].point, Point::new(1.0, 2.0, 3.0));
        assert!(geodesic_integrate(Point::ORIGIN, HorizontalVec::new(0.5, 0.0), 0.0, 1.0, 10).is_err());
        assert!(geodesic_integrate(Point::ORIGIN, HorizontalVec::new(1.0, 0.0), 0.0, 1.0, 0).is_err());
    }
}
