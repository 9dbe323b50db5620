//! Exhaustive ground truth for tiny line-constrained instances.
//!
//! Works only from the faces of the interval arrangement: every ordered
//! choice of `(face, color)` pairs within the budgets is packed greedily
//! leftmost and checked for coverage. No candidate positions and no dynamic
//! programming are involved.

use crate::error::{Error, Result};
use crate::feasibility::Color;
use crate::geometry::{intervals_at, Instance, Interval, Solution};
use crate::radii::candidate_radii;
use crate::tol::Tolerance;

pub const MAX_POINTS: usize = 8;
pub const MAX_CENTERS: usize = 5;

fn guard(inst: &Instance) -> Result<()> {
    if inst.n() > MAX_POINTS || inst.p + inst.q > MAX_CENTERS {
        return Err(Error::InstanceTooLarge {
            n: inst.n(),
            centers: inst.p + inst.q,
            max_points: MAX_POINTS,
            max_centers: MAX_CENTERS,
        });
    }
    Ok(())
}

struct Face {
    left: f64,
    right: f64,
    hits: u32,
}

/// Consecutive sorted endpoints (snapped within `eps`) spanning a stretch
/// inside some interval, each with the set of intervals containing it.
fn faces(intervals: &[Interval], eps: f64) -> Vec<Face> {
    let mut xs: Vec<f64> = intervals.iter().flat_map(|i| [i.left, i.right]).collect();
    xs.sort_by(f64::total_cmp);
    for j in 1..xs.len() {
        if xs[j] - xs[j - 1] <= eps {
            xs[j] = xs[j - 1];
        }
    }
    let mut out: Vec<Face> = Vec::new();
    for w in xs.windows(2) {
        let hits = intervals
            .iter()
            .enumerate()
            .filter(|(_, i)| i.left <= w[0] + eps && w[1] <= i.right + eps)
            .fold(0u32, |m, (j, _)| m | 1 << j);
        let dup = out.last().is_some_and(|f| f.left == w[0] && f.right == w[1]);
        if hits != 0 && !dup {
            out.push(Face {
                left: w[0],
                right: w[1],
                hits,
            });
        }
    }
    out
}

struct Search<'a> {
    faces: &'a [Face],
    alpha: f64,
    eps: f64,
    all: u32,
    p: usize,
    q: usize,
    path: Vec<(f64, Color)>,
}

impl Search<'_> {
    /// Extends the current sequence; `face` is the face of the last center
    /// and `used` the colors already placed in it.
    fn extend(&mut self, face: usize, used: [bool; 2], red_mask: u32, blue_mask: u32) -> bool {
        if red_mask == self.all && blue_mask == self.all {
            return true;
        }
        let reds = self.path.iter().filter(|(_, c)| *c == Color::Red).count();
        let blues = self.path.len() - reds;
        for g in face..self.faces.len() {
            for color in [Color::Red, Color::Blue] {
                let slot = color as usize;
                if g == face && used[slot] {
                    continue;
                }
                let budget_left = match color {
                    Color::Red => reds < self.p,
                    Color::Blue => blues < self.q,
                };
                if !budget_left {
                    continue;
                }
                let f = &self.faces[g];
                let pos = match self.path.last() {
                    None => f.left,
                    Some(&(prev, c)) if c == color => f.left.max(prev),
                    Some(&(prev, _)) => f.left.max(prev + self.alpha),
                };
                if pos > f.right + self.eps {
                    continue;
                }
                let mut next_used = if g == face { used } else { [false; 2] };
                next_used[slot] = true;
                let (r, b) = match color {
                    Color::Red => (red_mask | f.hits, blue_mask),
                    Color::Blue => (red_mask, blue_mask | f.hits),
                };
                self.path.push((pos, color));
                if self.extend(g, next_used, r, b) {
                    return true;
                }
                self.path.pop();
            }
        }
        false
    }
}

/// Exhaustive feasibility test for radius `r`.
pub fn brute_force_feasible(inst: &Instance, r: f64, tol: Tolerance) -> Result<Option<Solution<f64>>> {
    guard(inst)?;
    let eps = tol.slack(inst.scale(r));
    let Some(intervals) = intervals_at(&inst.points, r, eps) else {
        return Ok(None);
    };
    let faces = faces(&intervals, eps);
    let mut search = Search {
        faces: &faces,
        alpha: inst.alpha - eps,
        eps,
        all: (1u32 << intervals.len()) - 1,
        p: inst.p,
        q: inst.q,
        path: Vec::new(),
    };
    if !search.extend(0, [false; 2], 0, 0) {
        return Ok(None);
    }
    let pick = |color| {
        search
            .path
            .iter()
            .filter(|(_, c)| *c == color)
            .map(|(x, _)| *x)
            .collect()
    };
    Ok(Some(Solution::padded(
        pick(Color::Red),
        pick(Color::Blue),
        inst.p,
        inst.q,
        r,
    )))
}

/// Smallest candidate radius the exhaustive test accepts. Fails with
/// [`Error::CandidateGap`] if the midpoint between it and the next smaller
/// candidate is also feasible.
pub fn brute_force_optimal(inst: &Instance, tol: Tolerance) -> Result<f64> {
    guard(inst)?;
    let radii = candidate_radii(inst, tol);
    let ok = |r: f64| brute_force_feasible(inst, r, tol).map(|s| s.is_some());
    if !ok(*radii.last().expect("non-empty candidate set"))? {
        return Err(Error::NoFeasibleCandidate);
    }
    let (mut lo, mut hi) = (0, radii.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if ok(radii[mid])? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if lo > 0 {
        let (lower, upper) = (radii[lo - 1], radii[lo]);
        let midpoint = 0.5 * (lower + upper);
        if ok(midpoint)? {
            return Err(Error::CandidateGap { lower, upper, midpoint });
        }
    }
    Ok(radii[lo])
}
