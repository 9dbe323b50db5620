//! Candidate optimal radii for the line-constrained problem.
//!
//! At an optimal radius some pair of interval endpoints sits exactly `t * alpha`
//! apart for an integer `0 <= t < p + q`. Writing `s_i = sqrt(r^2 - d_i^2)`
//! for the half-width of interval `i` (with `d_i` the axis distance of point
//! `i`), every such coincidence is one of
//!
//! * `2 s_i = t alpha` (both endpoints of one interval),
//! * `s_i + s_k = gamma` (a left endpoint against a right endpoint),
//! * `s_i - s_k = beta` (two left or two right endpoints),
//!
//! each of which has a closed-form solution.

use crate::error::{Error, Result};
use crate::geometry::Instance;
use crate::tol::{sort_dedup_keep_max, Tolerance};

/// Relative residual every emitted root must meet on back-substitution.
pub const BACK_SUBSTITUTION_RTOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquationKind {
    SameIndex,
    Sum,
    Difference,
}

/// One endpoint-coincidence equation. For `SameIndex` the constant is
/// `t * alpha`; for `Sum` it is gamma and for `Difference` it is beta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusEquation {
    pub i: usize,
    pub k: usize,
    pub t: usize,
    pub kind: EquationKind,
    pub constant: f64,
}

impl RadiusEquation {
    pub fn solve(&self, d: &[f64], alpha: f64) -> Result<Option<f64>> {
        match self.kind {
            EquationKind::SameIndex => Ok(Some(solve_same_index(d[self.i], self.t, alpha))),
            EquationKind::Sum => Ok(solve_sum_equation(d[self.i], d[self.k], self.constant)),
            EquationKind::Difference => solve_difference_equation(d[self.i], d[self.k], self.constant),
        }
    }

    /// Left side minus right side at radius `r`.
    pub fn residual(&self, r: f64, d: &[f64]) -> f64 {
        let (si, sk) = (half_width(r, d[self.i]), half_width(r, d[self.k]));
        match self.kind {
            EquationKind::SameIndex => 2.0 * si - self.constant,
            EquationKind::Sum => si + sk - self.constant,
            EquationKind::Difference => si - sk - self.constant,
        }
    }
}

/// An ordered pair of points at equal axis distance whose first coordinates
/// differ by exactly `t * alpha`; their left (and right) endpoints stay
/// `t * alpha` apart at every radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExceptionalPair {
    pub i: usize,
    pub k: usize,
    pub t: usize,
}

pub(crate) fn half_width(r: f64, d: f64) -> f64 {
    ((r - d).max(0.0) * (r + d)).sqrt()
}

fn back_substitutes(residual: f64, magnitude: f64) -> bool {
    residual.abs() <= BACK_SUBSTITUTION_RTOL * magnitude.max(1.0)
}

/// Radius at which interval `i` has width exactly `t * alpha`.
pub fn solve_same_index(d_i: f64, t: usize, alpha: f64) -> f64 {
    let half = t as f64 * alpha / 2.0;
    (half * half + d_i * d_i).sqrt()
}

/// Solves `sqrt(r^2 - d_i^2) + sqrt(r^2 - d_k^2) = gamma`.
pub fn solve_sum_equation(d_i: f64, d_k: f64, gamma: f64) -> Option<f64> {
    if gamma.is_nan() || gamma <= 0.0 {
        return None;
    }
    let skew = (d_k * d_k - d_i * d_i) / gamma;
    if gamma < skew.abs() {
        return None;
    }
    let s_i = 0.5 * (gamma + skew);
    let r = (d_i * d_i + s_i * s_i).sqrt();
    let residual = half_width(r, d_i) + half_width(r, d_k) - gamma;
    back_substitutes(residual, gamma.max(r)).then_some(r)
}

/// Solves `sqrt(r^2 - d_i^2) - sqrt(r^2 - d_k^2) = beta`.
///
/// Returns [`Error::DegenerateEquation`] when `d_i == d_k` and `beta == 0`,
/// where every admissible radius is a solution.
pub fn solve_difference_equation(d_i: f64, d_k: f64, beta: f64) -> Result<Option<f64>> {
    let gap = d_k * d_k - d_i * d_i;
    if beta == 0.0 {
        if gap == 0.0 {
            return Err(Error::DegenerateEquation { d: d_i });
        }
        return Ok(None);
    }
    // Sum of the two radicals.
    let sum = gap / beta;
    if sum.is_nan() || sum <= 0.0 || sum < beta.abs() {
        return Ok(None);
    }
    let s_i = 0.5 * (sum + beta);
    let r = (d_i * d_i + s_i * s_i).sqrt();
    let residual = half_width(r, d_i) - half_width(r, d_k) - beta;
    Ok(back_substitutes(residual, beta.abs().max(r)).then_some(r))
}

pub fn exceptional_pairs(inst: &Instance, tol: Tolerance) -> Vec<ExceptionalPair> {
    let d = inst.line_distances();
    let eps = tol.slack(inst.scale(0.0));
    let span = inst.p + inst.q;
    let mut out = Vec::new();
    for (i, pi) in inst.points.iter().enumerate() {
        for (k, pk) in inst.points.iter().enumerate() {
            if i == k || (d[i] - d[k]).abs() > eps {
                continue;
            }
            let gap = pi.x() - pk.x();
            for t in 0..span {
                if (gap - t as f64 * inst.alpha).abs() <= eps {
                    out.push(ExceptionalPair { i, k, t });
                }
            }
        }
    }
    out
}

/// All endpoint-coincidence equations of `inst`, minus the identically
/// satisfied difference equations of exceptional pairs.
pub fn radius_equations(inst: &Instance, tol: Tolerance) -> Vec<RadiusEquation> {
    let exceptional = exceptional_pairs(inst, tol);
    let is_exceptional = |i: usize, k: usize, t: usize| {
        exceptional
            .iter()
            .any(|e| e.t == t && ((e.i, e.k) == (i, k) || (e.i, e.k) == (k, i)))
    };
    let n = inst.n();
    let span = inst.p + inst.q;
    let alpha = inst.alpha;
    let x: Vec<f64> = inst.points.iter().map(|p| p.x()).collect();
    let mut eqs = Vec::with_capacity(n * n * span * 4);
    for i in 0..n {
        for t in 0..span {
            eqs.push(RadiusEquation {
                i,
                k: i,
                t,
                kind: EquationKind::SameIndex,
                constant: t as f64 * alpha,
            });
        }
    }
    for i in 0..n {
        for k in (0..n).filter(|&k| k != i) {
            for t in 0..span {
                let shift = t as f64 * alpha;
                let forward = x[i] - x[k] - shift;
                let backward = x[k] - x[i] + shift;
                let mut push = |kind, constant| {
                    eqs.push(RadiusEquation {
                        i,
                        k,
                        t,
                        kind,
                        constant,
                    })
                };
                // a_i = b_k + t alpha and b_i = a_k + t alpha
                push(EquationKind::Sum, forward);
                push(EquationKind::Sum, backward);
                // a_i = a_k + t alpha and b_i = b_k + t alpha
                if !is_exceptional(i, k, t) {
                    push(EquationKind::Difference, forward);
                    push(EquationKind::Difference, backward);
                }
            }
        }
    }
    eqs
}

/// Sorted, deduplicated candidate radii. Values below the largest axis
/// distance are dropped; that distance itself is always included.
pub fn candidate_radii(inst: &Instance, tol: Tolerance) -> Vec<f64> {
    let d = inst.line_distances();
    let floor = inst.max_line_distance();
    let eps = tol.slack(inst.scale(floor));
    let mut radii = vec![floor];
    for eq in radius_equations(inst, tol) {
        // Near-degenerate difference equations that escaped the exceptional
        // filter are skipped the same way.
        if let Ok(Some(r)) = eq.solve(&d, inst.alpha) {
            if r >= floor - eps {
                radii.push(r.max(floor));
            }
        }
    }
    let top = radii.iter().copied().fold(floor, f64::max);
    sort_dedup_keep_max(&mut radii, tol.slack(inst.scale(top)));
    radii
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::PointSet;

    fn inst(coords: Vec<Vec<f64>>, p: usize, q: usize, alpha: f64) -> Instance {
        Instance::new(PointSet::from_coords(coords).unwrap(), p, q, alpha).unwrap()
    }

    #[test]
    fn same_index() {
        assert_eq!(solve_same_index(3.0, 0, 2.0), 3.0);
        let r = solve_same_index(3.0, 2, 2.0);
        assert!((r - 13f64.sqrt()).abs() < 1e-15);
        // width 2 * sqrt(13 - 9) = 4 = t * alpha
        assert!((2.0 * half_width(r, 3.0) - 4.0).abs() < 1e-12);
        assert_eq!(solve_same_index(0.0, 4, 1.0), 2.0);
    }

    #[test]
    fn sum_equation() {
        assert!((solve_sum_equation(3.0, 4.0, 7.0).unwrap() - 5.0).abs() < 1e-12);
        assert_eq!(solve_sum_equation(3.0, 4.0, -1.0), None);
        assert_eq!(solve_sum_equation(3.0, 4.0, 0.0), None);
        assert_eq!(solve_sum_equation(0.0, 0.0, 10.0), Some(5.0));
        // smallest attainable sum for d = 3, 4 is sqrt(16 - 9)
        assert_eq!(solve_sum_equation(3.0, 4.0, 2.6), None);
        assert!(solve_sum_equation(3.0, 4.0, 2.65).is_some());
    }

    #[test]
    fn difference_equation() {
        let r = solve_difference_equation(4.0, 3.0, -1.0).unwrap().unwrap();
        assert!((r - 5.0).abs() < 1e-12);
        let r = solve_difference_equation(3.0, 4.0, 1.0).unwrap().unwrap();
        assert!((r - 5.0).abs() < 1e-12);
        assert_eq!(solve_difference_equation(2.0, 5.0, 10.0), Ok(None));
        // wrong sign: s_i < s_k whenever d_i > d_k
        assert_eq!(solve_difference_equation(4.0, 3.0, 1.0), Ok(None));
        assert_eq!(solve_difference_equation(2.0, 5.0, 0.0), Ok(None));
        assert_eq!(
            solve_difference_equation(2.0, 2.0, 0.0),
            Err(Error::DegenerateEquation { d: 2.0 })
        );
        assert_eq!(solve_difference_equation(2.0, 2.0, 1.0), Ok(None));
    }

    #[test]
    fn exceptional() {
        let tol = Tolerance::default();
        let e = exceptional_pairs(&inst(vec![vec![0.0, 3.0], vec![2.0, 3.0]], 1, 1, 2.0), tol);
        assert_eq!(e, vec![ExceptionalPair { i: 1, k: 0, t: 1 }]);
        assert!(exceptional_pairs(&inst(vec![vec![0.0, 3.0], vec![2.0, 4.0]], 1, 1, 2.0), tol).is_empty());
        assert!(exceptional_pairs(&inst(vec![vec![0.0, 3.0], vec![1.0, 3.0]], 1, 1, 2.0), tol).is_empty());
        // duplicates are exceptional in both orders at t = 0
        let e = exceptional_pairs(&inst(vec![vec![1.0, 1.0], vec![1.0, 1.0]], 1, 1, 2.0), tol);
        assert_eq!(e.len(), 2);
        assert!(e.iter().all(|p| p.t == 0));
    }

    #[test]
    fn exceptional_equations_are_skipped() {
        let tol = Tolerance::default();
        let i = inst(vec![vec![0.0, 3.0], vec![2.0, 3.0]], 1, 1, 2.0);
        let eqs = radius_equations(&i, tol);
        assert!(!eqs.iter().any(|e| e.kind == EquationKind::Difference && e.t == 1));
        // t = 0 difference equations of the pair are fine (beta = +-2)
        assert_eq!(
            eqs.iter()
                .filter(|e| e.kind == EquationKind::Difference && e.t == 0)
                .count(),
            4
        );
    }

    #[test]
    fn candidates_contain_known_optima() {
        let tol = Tolerance::default();
        let two = inst(vec![vec![0.0, 0.0], vec![10.0, 0.0]], 1, 1, 2.0);
        let c = candidate_radii(&two, tol);
        assert!(c.iter().any(|&r| (r - 6.0).abs() < 1e-12), "{c:?}");
        assert!(c.len() <= 5 * 4 * 2);
        let one = inst(vec![vec![0.0, 0.0]], 1, 1, 2.0);
        let c = candidate_radii(&one, tol);
        assert_eq!(c, vec![0.0, 1.0]);
    }

    #[test]
    fn candidates_respect_floor() {
        let tol = Tolerance::default();
        let i = inst(vec![vec![0.0, 3.0], vec![1.0, 0.5], vec![7.0, 1.0]], 2, 1, 1.5);
        let c = candidate_radii(&i, tol);
        assert_eq!(c[0], 3.0);
        assert!(c.windows(2).all(|w| w[0] < w[1]));
        assert!(c.len() <= 5 * 9 * 3);
    }

    #[test]
    fn equation_residuals() {
        let tol = Tolerance::default();
        let i = inst(vec![vec![0.0, 3.0], vec![1.0, 0.5], vec![7.0, 1.0]], 2, 2, 1.5);
        let d = i.line_distances();
        for eq in radius_equations(&i, tol) {
            if let Ok(Some(r)) = eq.solve(&d, i.alpha) {
                let mag = eq.constant.abs().max(r).max(1.0);
                assert!(eq.residual(r, &d).abs() <= 1e-7 * mag, "{eq:?} at {r}");
            }
        }
    }
}
