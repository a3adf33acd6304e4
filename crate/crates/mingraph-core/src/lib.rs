//! Area-minimizing entire t-graphs in the first Heisenberg group.
//!
//! The Heisenberg group `H^1` is `R^3` with the group law
//! `[z,t] * [z',t'] = [z + z', t + t' + Im(z conj(z'))]` and the left
//! invariant frame `X = d/dx + y d/dt`, `Y = d/dy - x d/dt`, `T = d/dt`.
//! A *t-graph* is a surface `t = u(x, y)`; its sub-Riemannian (horizontal)
//! area over a plane domain `D` is
//!
//! ```text
//! A(u) = integral over D of sqrt((u_x - y)^2 + (u_y + x)^2) dx dy,
//! ```
//!
//! a convex functional of `u`. This crate constructs entire graphs ruled by
//! horizontal lines whose horizontal area is minimal:
//!
//! * [`graph_line`]: a graph with one singular line, built from a monotone
//!   angle profile along the x-axis;
//! * [`multiwedge`]: graphs with several singular halflines meeting at a
//!   point, assembled wedge by wedge, including dilation-invariant cones;
//! * [`area`]: midpoint quadrature for the horizontal area and a
//!   finite-difference divergence check for the calibrating normal field;
//! * [`verifier`]: seeded perturbation tests, an independent convex
//!   minimization oracle, and convergence/scaling checks.
//!
//! The crate is `no_std` compatible (with `alloc`); enable the default
//! `std` feature for `std::error::Error` impls.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod area;
pub mod graph_line;
pub mod heisenberg;
pub mod multiwedge;
pub mod numeric;
pub mod profile;
pub mod surface;
pub mod verifier;

pub use area::{horizontal_area, AreaReport, Disk, Domain, Rect};
pub use graph_line::LineGraphSurface;
pub use heisenberg::{AmbientVec, HorizontalVec, Point};
pub use multiwedge::{MultiWedgeSurface, SingularHalflineSurface, WedgeConfig};
pub use profile::{AngleProfile, BetaProfile};
pub use surface::TGraph;
pub use verifier::MinimalityReport;
