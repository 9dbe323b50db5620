//! Plain k-center subroutines: farthest-point clustering in space and an
//! exact k-center solver for centers restricted to the x-axis.

use crate::error::{Error, Result};
use crate::geometry::{intervals_at, Interval, Point};
use crate::radii::solve_sum_equation;
use crate::tol::{sort_dedup_keep_max, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub struct PCenter {
    pub centers: Vec<Point>,
    pub radius: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineCenters {
    /// Sorted positions on the x-axis.
    pub centers: Vec<f64>,
    pub radius: f64,
}

/// Farthest-point traversal seeded with the first input point.
///
/// Stops early once every point coincides with a chosen center, so the
/// centers are always distinct. The radius is within a factor two of the
/// optimal `k`-center radius.
pub fn gonzalez_p_center(points: &[Point], k: usize) -> Result<PCenter> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    if k == 0 {
        return Err(Error::ZeroCenters);
    }
    let mut centers = vec![first.clone()];
    let mut nearest: Vec<f64> = points.iter().map(|p| p.dist_unchecked(first)).collect();
    loop {
        let (far, far_dist) =
            nearest
                .iter()
                .copied()
                .enumerate()
                .fold((0, 0.0), |best, (i, d)| if d > best.1 { (i, d) } else { best });
        if centers.len() == k || far_dist == 0.0 {
            return Ok(PCenter {
                centers,
                radius: far_dist,
            });
        }
        let c = points[far].clone();
        for (slot, p) in nearest.iter_mut().zip(points) {
            *slot = slot.min(p.dist_unchecked(&c));
        }
        centers.push(c);
    }
}

/// Minimum number of points stabbing every interval, with a witness.
pub fn hitting_number(intervals: &[Interval]) -> (usize, Vec<f64>) {
    hitting_number_within(intervals, 0.0)
}

/// Greedy stabbing: sweep by right endpoint, placing a point at the right end
/// of each interval not yet stabbed. An interval counts as stabbed by `x` when
/// `left <= x + eps`.
pub fn hitting_number_within(intervals: &[Interval], eps: f64) -> (usize, Vec<f64>) {
    let mut by_right: Vec<&Interval> = intervals.iter().collect();
    by_right.sort_by(|a, b| a.right.total_cmp(&b.right));
    let mut witness: Vec<f64> = Vec::new();
    for iv in by_right {
        match witness.last() {
            Some(&x) if iv.left <= x + eps => {}
            _ => witness.push(iv.right),
        }
    }
    (witness.len(), witness)
}

/// Exact k-center with centers on the x-axis.
///
/// The optimal radius is either the largest axis distance or a radius at
/// which a left endpoint meets a right endpoint; those are searched with the
/// greedy stabbing test.
pub fn constrained_k_center(points: &[Point], k: usize, tol: Tolerance) -> Result<LineCenters> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if k == 0 {
        return Err(Error::ZeroCenters);
    }
    let d: Vec<f64> = points.iter().map(Point::line_distance).collect();
    let floor = d.iter().copied().fold(0.0, f64::max);
    let scale = points
        .iter()
        .flat_map(|p| p.coords().iter().map(|c| c.abs()))
        .fold(floor, f64::max);
    let mut radii = vec![floor];
    for i in 0..points.len() {
        for j in 0..points.len() {
            if i == j {
                continue;
            }
            // a_i(r) = b_j(r)
            if let Some(r) = solve_sum_equation(d[i], d[j], points[i].x() - points[j].x()) {
                if r >= floor {
                    radii.push(r);
                }
            }
        }
    }
    let top = radii.iter().copied().fold(floor, f64::max);
    sort_dedup_keep_max(&mut radii, tol.slack(scale.max(top)));

    let stab = |r: f64| {
        let eps = tol.slack(scale.max(r));
        let intervals = intervals_at(points, r, eps).expect("radius at or above every axis distance");
        hitting_number_within(&intervals, eps)
    };
    // The largest candidate lies past every left/right crossing, where all
    // intervals share a point.
    let (mut lo, mut hi) = (0, radii.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if stab(radii[mid]).0 <= k {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let radius = radii[lo];
    let (count, centers) = stab(radius);
    debug_assert!(
        count <= k,
        "largest candidate radius {radius} needs {count} > {k} centers"
    );
    Ok(LineCenters { centers, radius })
}
