//! Optimal radius for the line-constrained problem.

use crate::error::{Error, Result};
use crate::feasibility::feasible;
use crate::geometry::{Instance, Solution};
use crate::radii::candidate_radii;
use crate::tol::Tolerance;

#[derive(Debug, Clone, PartialEq)]
pub struct ExactSolution {
    pub radius: f64,
    pub solution: Solution<f64>,
    /// Number of distinct candidate radii searched.
    pub candidates: usize,
}

/// Binary search, by index, for the smallest feasible candidate radius.
pub fn solve_constrained(inst: &Instance, tol: Tolerance) -> Result<ExactSolution> {
    let radii = candidate_radii(inst, tol);
    let top = *radii.last().expect("candidate set contains the largest axis distance");
    let mut best = feasible(inst, top, tol).ok_or(Error::NoFeasibleCandidate)?;
    let (mut lo, mut hi) = (0, radii.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        match feasible(inst, radii[mid], tol) {
            Some(sol) => {
                best = sol;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    Ok(ExactSolution {
        radius: radii[lo],
        solution: best,
        candidates: radii.len(),
    })
}
