//! Constant-factor approximation in d-dimensional space.
//!
//! Farthest-point clustering with `min(p, q)` centers gives radius `g`. With
//! `r' = max(g, alpha / 2)`, thin the centers so kept ones are `4 r'` apart;
//! red goes on each kept center and blue at distance exactly `alpha` from it.
//! Both colors then cover within `7 r'`, which is at most fourteen times the
//! optimum.

use crate::error::{Error, Result};
use crate::geometry::{Instance, Point, Solution};
use crate::kcenter::gonzalez_p_center;

/// Keeps the first center, drops every remaining center closer than
/// `threshold` to it, and repeats on what is left.
pub fn greedy_separation_filter(centers: &[Point], threshold: f64) -> Vec<Point> {
    let mut remaining: Vec<&Point> = centers.iter().collect();
    let mut kept = Vec::new();
    while let Some((&first, rest)) = remaining.split_first() {
        kept.push(first.clone());
        remaining = rest
            .iter()
            .copied()
            .filter(|c| c.dist_unchecked(first) >= threshold)
            .collect();
    }
    kept
}

/// `x + alpha * e1`, nudged up if rounding would leave it closer than `alpha`.
fn offset_along_axis(x: &Point, alpha: f64) -> Point {
    let mut coords = x.coords().to_vec();
    let base = coords[0];
    let mut moved = base + alpha;
    while moved - base < alpha {
        moved = moved.next_up();
    }
    coords[0] = moved;
    Point::new(coords).expect("finite offset of a finite point")
}

/// Places red on the kept centers and blue `alpha` along the first axis from
/// each, padding both lists by repetition. The radius is `7 r_prime`.
pub fn construct_red_blue(kept: &[Point], r_prime: f64, inst: &Instance) -> Result<Solution<Point>> {
    let t = kept.len();
    if t > inst.p || t > inst.q {
        return Err(Error::TooManyCenters {
            kept: t,
            p: inst.p,
            q: inst.q,
        });
    }
    let blue = kept.iter().map(|x| offset_along_axis(x, inst.alpha)).collect();
    Ok(Solution::padded(kept.to_vec(), blue, inst.p, inst.q, 7.0 * r_prime))
}

pub fn approx_general_solve(inst: &Instance) -> Solution<Point> {
    let k = inst.p.min(inst.q);
    let clustering = gonzalez_p_center(&inst.points, k).expect("instance has points and k >= 1");
    let r_prime = clustering.radius.max(inst.alpha / 2.0);
    let kept = greedy_separation_filter(&clustering.centers, 4.0 * r_prime);
    construct_red_blue(&kept, r_prime, inst).expect("at most min(p, q) kept centers")
}

/// `max(alpha / 2, g / 2)` with `g` the farthest-point radius for
/// `min(p, q)` centers; never exceeds the optimal radius, constrained or not.
pub fn lower_bound(inst: &Instance) -> f64 {
    let k = inst.p.min(inst.q);
    let g = gonzalez_p_center(&inst.points, k)
        .expect("instance has points and k >= 1")
        .radius;
    (inst.alpha / 2.0).max(g / 2.0)
}
