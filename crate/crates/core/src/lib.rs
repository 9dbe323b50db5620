//! Solvers for separated red-blue k-center clustering.
//!
//! Given points in `R^d`, counts `p` and `q` and a separation `alpha`, place
//! `p` red and `q` blue centers so that each color alone covers every point
//! within a common radius while every red center is at least `alpha` away
//! from every blue center; minimize the radius.
//!
//! * [`approx_general`]: factor-14 approximation with centers anywhere.
//! * [`feasibility`], [`radii`], [`exact`]: exact optimum when centers must
//!   lie on the x-axis (feasibility test plus search over a finite set of
//!   candidate radii).
//! * [`approx_line`]: factor-4 approximation on the x-axis and refinement to
//!   any `1 + eps`.
//! * [`oracle`]: exhaustive checks for tiny line instances.

pub mod approx_general;
pub mod approx_line;
pub mod error;
pub mod exact;
pub mod feasibility;
pub mod geometry;
pub mod kcenter;
pub mod oracle;
pub mod radii;
pub mod tol;

pub use approx_general::{approx_general_solve, lower_bound};
pub use approx_line::{constrained_4_approx, refine_eps};
pub use error::{Error, Result};
pub use exact::{solve_constrained, ExactSolution};
pub use feasibility::feasible;
pub use geometry::{check_solution, CheckReport, Instance, Interval, Point, PointSet, Solution};
pub use radii::candidate_radii;
pub use tol::Tolerance;
