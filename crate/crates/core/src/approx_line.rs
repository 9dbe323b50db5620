//! Factor-4 approximation for the line-constrained problem and its
//! refinement to `1 + eps` with the exact feasibility test.

use crate::error::{Error, Result};
use crate::feasibility::feasible;
use crate::geometry::{Instance, Solution};
use crate::kcenter::constrained_k_center;
use crate::tol::Tolerance;

/// Balls of the line p-center solution grouped around a core ball: the
/// leftmost ball not absorbed by the previous cluster, plus every later ball
/// intersecting it.
#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub core: f64,
    pub members: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineApprox {
    pub solution: Solution<f64>,
    /// Optimal line p-center radius for `min(p, q)` centers.
    pub p_center_radius: f64,
    /// `max(p_center_radius, alpha / 2)`, the radius of the clustered balls.
    pub ball_radius: f64,
    pub clusters: Vec<Cluster>,
}

/// Groups balls of common `radius` centered at the sorted `centers`.
pub fn cluster_balls(centers: &[f64], radius: f64) -> Vec<Cluster> {
    let mut clusters: Vec<Cluster> = Vec::new();
    for &c in centers {
        match clusters.last_mut() {
            Some(cl) if c - cl.core <= 2.0 * radius => cl.members.push(c),
            _ => clusters.push(Cluster {
                core: c,
                members: vec![c],
            }),
        }
    }
    clusters
}

/// Pushes `lo` and `hi` apart by ulps until they are at least `gap` apart.
fn spread(mut lo: f64, mut hi: f64, gap: f64) -> (f64, f64) {
    while hi - lo < gap {
        lo = lo.next_down();
        hi = hi.next_up();
    }
    (lo, hi)
}

pub fn constrained_4_approx(inst: &Instance, tol: Tolerance) -> LineApprox {
    if inst.p > inst.q {
        let mut out = constrained_4_approx(&inst.swapped(), tol);
        out.solution = out.solution.swapped();
        return out;
    }
    let base = constrained_k_center(&inst.points, inst.p, tol).expect("instance has points and p >= 1");
    let rho = base.radius.max(inst.alpha / 2.0);
    let clusters = cluster_balls(&base.centers, rho);
    let (mut red, mut blue) = (Vec::new(), Vec::new());
    for (i, cl) in clusters.iter().enumerate() {
        let (left, right) = spread(cl.core - rho, cl.core + rho, inst.alpha);
        if i % 2 == 0 {
            red.push(left);
            blue.push(right);
        } else {
            red.push(right);
            blue.push(left);
        }
    }
    LineApprox {
        solution: Solution::padded(red, blue, inst.p, inst.q, 4.0 * rho),
        p_center_radius: base.radius,
        ball_radius: rho,
        clusters,
    }
}

/// Smallest feasible radius on the grid `R/4 * (1 + eps)^t`,
/// `0 <= t <= ceil(log_{1+eps} 4)`, where `R` is a feasible radius at most
/// four times the optimum.
pub fn refine_eps(inst: &Instance, r_feasible: f64, eps: f64, tol: Tolerance) -> Result<(f64, Solution<f64>)> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidEpsilon(eps));
    }
    let top = feasible(inst, r_feasible, tol).ok_or(Error::InfeasibleRadius(r_feasible))?;
    let steps = (4f64.ln() / (1.0 + eps).ln()).ceil() as i32;
    let grid = |t: i32| r_feasible / 4.0 * (1.0 + eps).powi(t);
    let mut best = (r_feasible, top);
    let (mut lo, mut hi) = (0, steps);
    // grid(steps) >= R, feasible by monotonicity.
    while lo < hi {
        let mid = (lo + hi) / 2;
        let r = grid(mid);
        match feasible(inst, r, tol) {
            Some(sol) => {
                best = (r, sol);
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    let r = grid(lo);
    if r < best.0 {
        if let Some(sol) = feasible(inst, r, tol) {
            best = (r, sol);
        }
    }
    Ok(best)
}
