//! Deciding whether a radius admits a line-constrained solution.
//!
//! At radius `r` every point contributes the interval of line positions that
//! cover it. A solution is a red and a blue hitting set of those intervals
//! with every red/blue pair at least `alpha` apart. Centers can be restricted
//! to a finite candidate set: for each endpoint `x` of a face of the interval
//! arrangement take `x, x + alpha, x + 2 alpha, ...`, keeping at most three
//! terms per face.
//!
//! The search places centers left to right. Sorting the intervals by left
//! endpoint, the intervals a color still has to hit after its last center at
//! `c` are exactly those with left endpoint beyond `c`, a suffix of that
//! order, so a state is
//! `(color of next center, red suffix, blue suffix, red budget, blue budget, position)`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geometry::{intervals_at, sort_intervals, Instance, Interval, Solution};
use crate::tol::{sort_dedup_keep_min, Tolerance};

/// Closure `[left, right]` of a face of the interval arrangement that lies
/// inside at least one interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceClosure {
    pub left: f64,
    pub right: f64,
}

/// Sorted candidate center positions with, for each position, the index of
/// the first position at least `alpha` further right (`len()` if none).
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateCenterSet {
    positions: Vec<f64>,
    next_index: Vec<usize>,
}

impl CandidateCenterSet {
    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn next_index(&self, k: usize) -> usize {
        self.next_index[k]
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// One DP entry: the next center has color `color` and sits at candidate
/// `position`; intervals from `red_suffix` (resp. `blue_suffix`) on in
/// left-endpoint order still need a red (resp. blue) center, and at most
/// `red_budget`/`blue_budget` centers of each color remain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FeasibilityState {
    pub color: Color,
    pub red_suffix: usize,
    pub blue_suffix: usize,
    pub red_budget: usize,
    pub blue_budget: usize,
    pub position: usize,
}

/// Faces of the arrangement of `intervals` that lie inside some interval,
/// sorted left to right. Endpoints closer than `eps` are treated as one
/// point, so touching intervals produce a zero-width face.
pub fn compute_faces(intervals: &[Interval], eps: f64) -> Result<Vec<FaceClosure>> {
    if intervals.is_empty() {
        return Err(Error::EmptyIntervals);
    }
    let mut xs: Vec<f64> = intervals.iter().flat_map(|i| [i.left, i.right]).collect();
    xs.sort_by(f64::total_cmp);
    let mut start = xs[0];
    for x in xs.iter_mut() {
        if *x - start <= eps {
            *x = start;
        } else {
            start = *x;
        }
    }

    let mut by_left: Vec<&Interval> = intervals.iter().collect();
    by_left.sort_by(|a, b| a.left.total_cmp(&b.left));
    let mut next = 0;
    let mut reach = f64::NEG_INFINITY;
    let mut faces: Vec<FaceClosure> = Vec::new();
    for w in xs.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        while next < by_left.len() && by_left[next].left <= lo + eps {
            reach = reach.max(by_left[next].right);
            next += 1;
        }
        if reach >= hi - eps {
            let face = FaceClosure { left: lo, right: hi };
            if faces.last() != Some(&face) {
                faces.push(face);
            }
        }
    }
    Ok(faces)
}

/// Terms of `start + k alpha` (k >= 0) that fall in the faces, at most three
/// per face.
pub fn compute_seq(start: f64, faces: &[FaceClosure], alpha: f64, eps: f64) -> Vec<f64> {
    let mut seq = Vec::new();
    for f in faces.iter().filter(|f| f.right >= start - eps) {
        let lo = ((f.left - start - eps) / alpha).ceil().max(0.0);
        let hi = ((f.right - start + eps) / alpha).floor();
        let mut k = lo;
        while k <= hi && k < lo + 3.0 {
            let x = start + k * alpha;
            if seq.last() != Some(&x) {
                seq.push(x);
            }
            k += 1.0;
        }
    }
    seq
}

/// Union of the sequences started at every face endpoint.
pub fn candidate_centers(faces: &[FaceClosure], alpha: f64, eps: f64) -> CandidateCenterSet {
    let mut starts: Vec<f64> = faces.iter().flat_map(|f| [f.left, f.right]).collect();
    starts.dedup();
    let mut positions: Vec<f64> = starts.iter().flat_map(|&s| compute_seq(s, faces, alpha, eps)).collect();
    sort_dedup_keep_min(&mut positions, eps);
    let next_index = positions
        .iter()
        .map(|&c| positions.partition_point(|&x| x < c + alpha - eps))
        .collect();
    CandidateCenterSet { positions, next_index }
}

/// Candidate centers for `inst` at radius `r`, or `None` if some interval is
/// empty.
pub fn candidate_centers_at(inst: &Instance, r: f64, tol: Tolerance) -> Option<CandidateCenterSet> {
    let eps = tol.slack(inst.scale(r));
    let intervals = intervals_at(&inst.points, r, eps)?;
    let faces = compute_faces(&intervals, eps).ok()?;
    Some(candidate_centers(&faces, inst.alpha, eps))
}

const NONE: u32 = u32::MAX;

/// Key of one row of the DP: everything in a state except the position.
type RowKey = (Color, usize, usize, usize, usize);

struct Table<'a> {
    lefts: Vec<f64>,
    /// `suffix_min_right[s]` is the smallest right endpoint among intervals
    /// `s..n`.
    suffix_min_right: Vec<f64>,
    centers: &'a CandidateCenterSet,
    eps: f64,
    /// For each row, `first_true[k]` is the smallest `j >= k` whose entry is
    /// true, or `NONE`.
    rows: HashMap<RowKey, Vec<u32>>,
}

impl<'a> Table<'a> {
    fn new(sorted: &[Interval], centers: &'a CandidateCenterSet, eps: f64) -> Self {
        let n = sorted.len();
        let mut suffix_min_right = vec![f64::INFINITY; n + 1];
        for i in (0..n).rev() {
            suffix_min_right[i] = suffix_min_right[i + 1].min(sorted[i].right);
        }
        Table {
            lefts: sorted.iter().map(|i| i.left).collect(),
            suffix_min_right,
            centers,
            eps,
            rows: HashMap::new(),
        }
    }

    fn n(&self) -> usize {
        self.lefts.len()
    }

    /// First index at or after `suffix` whose interval starts right of `c`.
    fn advance(&self, suffix: usize, c: f64) -> usize {
        let cut = suffix + self.lefts[suffix..].partition_point(|&l| l <= c + self.eps);
        debug_assert!((suffix..self.n()).all(|i| (self.lefts[i] > c + self.eps) == (i >= cut)));
        cut
    }

    /// Successor of placing `state.color` at `state.position`: the row key
    /// after the placement, or `None` if the placement is illegal.
    fn place(&self, s: &FeasibilityState) -> Option<RowKey> {
        let c = self.centers.positions[s.position];
        let budget = match s.color {
            Color::Red => s.red_budget,
            Color::Blue => s.blue_budget,
        };
        if budget == 0 {
            return None;
        }
        // Nothing placed from here on can reach an interval ending before c.
        if self.suffix_min_right[s.red_suffix] < c - self.eps || self.suffix_min_right[s.blue_suffix] < c - self.eps {
            return None;
        }
        Some(match s.color {
            Color::Red => (
                s.color,
                self.advance(s.red_suffix, c),
                s.blue_suffix,
                s.red_budget - 1,
                s.blue_budget,
            ),
            Color::Blue => (
                s.color,
                s.red_suffix,
                self.advance(s.blue_suffix, c),
                s.red_budget,
                s.blue_budget - 1,
            ),
        })
    }

    fn done(&self, red_suffix: usize, blue_suffix: usize) -> bool {
        red_suffix == self.n() && blue_suffix == self.n()
    }

    fn first_true(&mut self, key: RowKey, from: usize) -> Option<usize> {
        if from >= self.centers.len() {
            return None;
        }
        if !self.rows.contains_key(&key) {
            let row = self.build_row(key);
            self.rows.insert(key, row);
        }
        match self.rows[&key][from] {
            NONE => None,
            j => Some(j as usize),
        }
    }

    fn build_row(&mut self, key: RowKey) -> Vec<u32> {
        let m = self.centers.len();
        let mut row = vec![NONE; m + 1];
        for k in (0..m).rev() {
            row[k] = if self.entry(key, k) { k as u32 } else { row[k + 1] };
        }
        row
    }

    fn entry(&mut self, key: RowKey, k: usize) -> bool {
        self.continuation(state(key, k)).is_some()
    }

    /// How an entry is satisfied: `Some(None)` when the placement finishes
    /// both colors, `Some(Some(next))` for the state of the following center,
    /// `None` when the entry is false.
    fn continuation(&mut self, s: FeasibilityState) -> Option<Option<FeasibilityState>> {
        if self.done(s.red_suffix, s.blue_suffix) {
            return Some(None);
        }
        let (color, red, blue, a, b) = self.place(&s)?;
        if self.done(red, blue) {
            return Some(None);
        }
        let same = (color, red, blue, a, b);
        if let Some(j) = self.first_true(same, s.position + 1) {
            return Some(Some(state(same, j)));
        }
        let other = (color.other(), red, blue, a, b);
        let j = self.first_true(other, self.centers.next_index(s.position))?;
        Some(Some(state(other, j)))
    }
}

fn state((color, red_suffix, blue_suffix, red_budget, blue_budget): RowKey, position: usize) -> FeasibilityState {
    FeasibilityState {
        color,
        red_suffix,
        blue_suffix,
        red_budget,
        blue_budget,
        position,
    }
}

/// Returns a solution of radius `r` with all centers on the x-axis, or
/// `None` when `r` is infeasible.
pub fn feasible(inst: &Instance, r: f64, tol: Tolerance) -> Option<Solution<f64>> {
    let eps = tol.slack(inst.scale(r));
    let mut intervals = intervals_at(&inst.points, r, eps)?;
    sort_intervals(&mut intervals);
    let faces = compute_faces(&intervals, eps).ok()?;
    let centers = candidate_centers(&faces, inst.alpha, eps);
    let mut table = Table::new(&intervals, &centers, eps);

    let start = [Color::Red, Color::Blue].into_iter().find_map(|color| {
        let key = (color, 0, 0, inst.p, inst.q);
        table.first_true(key, 0).map(|k| state(key, k))
    })?;

    let (mut red, mut blue) = (Vec::new(), Vec::new());
    let mut cur = Some(start);
    while let Some(s) = cur {
        let c = centers.positions[s.position];
        match s.color {
            Color::Red => red.push(c),
            Color::Blue => blue.push(c),
        }
        cur = table.continuation(s).expect("reconstruction follows true entries");
    }
    Some(Solution::padded(red, blue, inst.p, inst.q, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{check_solution, PointSet};

    fn iv(left: f64, right: f64) -> Interval {
        Interval { left, right, source: 0 }
    }

    fn face(left: f64, right: f64) -> FaceClosure {
        FaceClosure { left, right }
    }

    fn inst(coords: Vec<Vec<f64>>, p: usize, q: usize, alpha: f64) -> Instance {
        Instance::new(PointSet::from_coords(coords).unwrap(), p, q, alpha).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn faces() {
        assert_eq!(
            compute_faces(&[iv(-6.0, 6.0), iv(4.0, 16.0)], 0.0).unwrap(),
            vec![face(-6.0, 4.0), face(4.0, 6.0), face(6.0, 16.0)]
        );
        assert_eq!(compute_faces(&[iv(0.0, 1.0)], 0.0).unwrap(), vec![face(0.0, 1.0)]);
        assert_eq!(
            compute_faces(&[iv(0.0, 1.0), iv(2.0, 3.0)], 0.0).unwrap(),
            vec![face(0.0, 1.0), face(2.0, 3.0)]
        );
        assert_eq!(compute_faces(&[], 0.0), Err(Error::EmptyIntervals));
    }

    #[test]
    fn degenerate_faces() {
        // A lone point interval is its own face.
        assert_eq!(
            compute_faces(&[iv(0.0, 1.0), iv(3.0, 3.0)], 1e-9).unwrap(),
            vec![face(0.0, 1.0), face(3.0, 3.0)]
        );
        // Touching intervals share a zero-width face that hits both.
        assert_eq!(
            compute_faces(&[iv(0.0, 1.0), iv(1.0 + 1e-12, 2.0)], 1e-9).unwrap(),
            vec![face(0.0, 1.0), face(1.0, 1.0), face(1.0, 2.0)]
        );
    }

    #[test]
    fn sequences() {
        let s = compute_seq(0.0, &[face(0.0, 1.0), face(3.0, 4.0)], 0.3, 1e-12);
        assert!(close(&s, &[0.0, 0.3, 0.6, 3.0, 3.3, 3.6]), "{s:?}");
        assert_eq!(compute_seq(0.0, &[face(0.0, 1.0)], 5.0, 1e-12), vec![0.0]);
        assert_eq!(compute_seq(0.0, &[face(0.0, 10.0)], 2.0, 1e-12), vec![0.0, 2.0, 4.0]);
        // Faces left of the start contribute nothing.
        assert_eq!(
            compute_seq(5.0, &[face(0.0, 1.0), face(5.0, 6.0)], 0.5, 1e-12),
            vec![5.0, 5.5, 6.0]
        );
    }

    #[test]
    fn candidate_set() {
        let faces = compute_faces(&[iv(-6.0, 6.0), iv(4.0, 16.0)], 0.0).unwrap();
        let c = candidate_centers(&faces, 2.0, 1e-12);
        assert!(c.positions().contains(&4.0) && c.positions().contains(&6.0));
        assert!(c.positions().windows(2).all(|w| w[0] < w[1]));
        let f = faces.len();
        assert!(c.len() <= 3 * f * f + f);
        for (k, &x) in c.positions().iter().enumerate() {
            assert!(faces.iter().any(|f| f.left - 1e-12 <= x && x <= f.right + 1e-12));
            let j = c.next_index(k);
            assert!(j == c.len() || c.positions()[j] - x >= 2.0 - 1e-12);
            assert!(j == 0 || c.positions()[j - 1] - x < 2.0);
        }

        let single = candidate_centers(&[face(0.0, 1.0)], 10.0, 1e-12);
        assert_eq!(single.positions(), &[0.0, 1.0]);
        assert_eq!(single.next_index(0), 2);
    }

    #[test]
    fn single_point() {
        let tol = Tolerance::default();
        let i = inst(vec![vec![0.0, 0.0]], 1, 1, 2.0);
        let sol = feasible(&i, 1.0, tol).unwrap();
        let mut pair = [sol.red[0], sol.blue[0]];
        pair.sort_by(f64::total_cmp);
        assert_eq!(pair, [-1.0, 1.0]);
        assert!(check_solution(&i, &sol, tol).valid);
        assert!(feasible(&i, 0.9, tol).is_none());
    }

    #[test]
    fn two_points() {
        let tol = Tolerance::default();
        let i = inst(vec![vec![0.0, 0.0], vec![10.0, 0.0]], 1, 1, 2.0);
        let sol = feasible(&i, 6.0, tol).unwrap();
        assert!(check_solution(&i, &sol, tol).valid);
        assert!(feasible(&i, 5.9, tol).is_none());
    }

    #[test]
    fn below_axis_distance_is_infeasible() {
        let tol = Tolerance::default();
        let i = inst(vec![vec![0.0, 3.0], vec![50.0, 0.0]], 3, 3, 0.1);
        assert!(feasible(&i, 2.99, tol).is_none());
        // A zero-width interval cannot hold a red and a blue center.
        assert!(feasible(&i, 3.0, tol).is_none());
        assert!(feasible(&i, 3.001, tol).is_some());
    }

    #[test]
    fn budgets_matter() {
        let tol = Tolerance::default();
        // Three far-apart clusters need three centers per color.
        let i = |p, q| inst(vec![vec![0.0], vec![100.0], vec![200.0]], p, q, 1.0);
        assert!(feasible(&i(3, 3), 0.5, tol).is_some());
        assert!(feasible(&i(2, 3), 0.5, tol).is_none());
        assert!(feasible(&i(3, 2), 0.5, tol).is_none());
        let sol = feasible(&i(4, 5), 0.5, tol).unwrap();
        assert_eq!((sol.red.len(), sol.blue.len()), (4, 5));
        assert!(check_solution(&i(4, 5), &sol, tol).valid);
    }

    #[test]
    fn blue_only_remaining_is_not_free() {
        // One red center covers both points, but blue must also cover
        // them while staying 5 away from that red center.
        let tol = Tolerance::default();
        let i = inst(vec![vec![0.0], vec![1.0]], 1, 1, 5.0);
        assert!(feasible(&i, 2.9, tol).is_none());
        let sol = feasible(&i, 3.0, tol).unwrap();
        assert!(check_solution(&i, &sol, tol).valid);
    }
}
