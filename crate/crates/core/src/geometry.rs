//! Points, distances, and the intervals a ball cuts out of the x-axis.
//!
//! The line on which constrained centers live is always the x-axis: the
//! first coordinate is the position along the line, the remaining
//! coordinates are transverse.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::tol::Tolerance;

#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(&value) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::NonFinite { value });
        }
        Ok(Point(coords))
    }

    /// A point on the x-axis embedded in `dim` dimensions.
    pub fn on_line(x: f64, dim: usize) -> Self {
        assert!(dim >= 1);
        let mut coords = vec![0.0; dim];
        coords[0] = x;
        Point(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Position along the line.
    pub fn x(&self) -> f64 {
        self.0[0]
    }

    /// Distance from the x-axis.
    pub fn line_distance(&self) -> f64 {
        line_distance(self)
    }

    pub fn translated(&self, offset: &[f64]) -> Point {
        Point(self.0.iter().zip(offset).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn dist_unchecked(&self, other: &Point) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = Error;

    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Point::new(coords)
    }
}

/// Non-empty list of points sharing one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyPointSet)?;
        let dim = first.dim();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(PointSet { points })
    }

    pub fn from_coords(coords: Vec<Vec<f64>>) -> Result<Self> {
        Self::new(coords.into_iter().map(Point::new).collect::<Result<_>>()?)
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn into_vec(self) -> Vec<Point> {
        self.points
    }
}

impl Deref for PointSet {
    type Target = [Point];

    fn deref(&self) -> &[Point] {
        &self.points
    }
}

/// An input to the separated red-blue problem: cover `points` by `p` red and
/// by `q` blue balls of one common radius, red and blue centers at least
/// `alpha` apart.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub points: PointSet,
    pub p: usize,
    pub q: usize,
    pub alpha: f64,
}

impl Instance {
    pub fn new(points: PointSet, p: usize, q: usize, alpha: f64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidCounts { p, q });
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(Instance { points, p, q, alpha })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn dim(&self) -> usize {
        self.points.dim()
    }

    pub fn line_distances(&self) -> Vec<f64> {
        self.points.iter().map(line_distance).collect()
    }

    pub fn max_line_distance(&self) -> f64 {
        self.points.iter().map(line_distance).fold(0.0, f64::max)
    }

    /// Magnitude used to scale tolerances for computations at radius `r`.
    pub fn scale(&self, r: f64) -> f64 {
        self.points
            .iter()
            .map(Point::max_abs)
            .fold(self.alpha.max(r.abs()), f64::max)
    }

    /// The same instance with red and blue roles exchanged.
    pub fn swapped(&self) -> Instance {
        Instance {
            points: self.points.clone(),
            p: self.q,
            q: self.p,
            alpha: self.alpha,
        }
    }
}

/// The closed interval `[left, right]` of line positions whose ball of the
/// current radius covers point `source`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub left: f64,
    pub right: f64,
    pub source: usize,
}

impl Interval {
    pub fn width(&self) -> f64 {
        self.right - self.left
    }

    pub fn contains(&self, x: f64, eps: f64) -> bool {
        self.left - eps <= x && x <= self.right + eps
    }
}

/// A center that can be checked against input points.
pub trait Center {
    fn distance_to_point(&self, p: &Point) -> f64;
    fn distance_to(&self, other: &Self) -> f64;
    fn fits_dim(&self, dim: usize) -> bool;
    fn magnitude(&self) -> f64;
}

/// A position on the x-axis.
impl Center for f64 {
    fn distance_to_point(&self, p: &Point) -> f64 {
        let dx = self - p.x();
        let d = line_distance(p);
        (dx * dx + d * d).sqrt()
    }

    fn distance_to(&self, other: &f64) -> f64 {
        (self - other).abs()
    }

    fn fits_dim(&self, _dim: usize) -> bool {
        true
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Center for Point {
    fn distance_to_point(&self, p: &Point) -> f64 {
        self.dist_unchecked(p)
    }

    fn distance_to(&self, other: &Point) -> f64 {
        self.dist_unchecked(other)
    }

    fn fits_dim(&self, dim: usize) -> bool {
        self.dim() == dim
    }

    fn magnitude(&self) -> f64 {
        self.max_abs()
    }
}

/// Red and blue centers with their common covering radius. Line solutions
/// use `f64` positions on the x-axis, general ones use [`Point`].
#[derive(Debug, Clone, PartialEq)]
pub struct Solution<C> {
    pub red: Vec<C>,
    pub blue: Vec<C>,
    pub radius: f64,
}

impl<C: Clone> Solution<C> {
    /// Builds a solution, repeating the first center of each color until the
    /// requested counts are reached.
    pub fn padded(mut red: Vec<C>, mut blue: Vec<C>, p: usize, q: usize, radius: f64) -> Self {
        pad_to(&mut red, p);
        pad_to(&mut blue, q);
        Solution { red, blue, radius }
    }

    pub fn swapped(self) -> Self {
        Solution {
            red: self.blue,
            blue: self.red,
            radius: self.radius,
        }
    }
}

fn pad_to<C: Clone>(centers: &mut Vec<C>, count: usize) {
    if let Some(first) = centers.first().cloned() {
        while centers.len() < count {
            centers.push(first.clone());
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckReport {
    pub covers_red: bool,
    pub covers_blue: bool,
    pub min_separation: f64,
    pub valid: bool,
}

pub fn distance(a: &Point, b: &Point) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(a.dist_unchecked(b))
}

pub fn line_distance(p: &Point) -> f64 {
    p.coords()[1..].iter().map(|c| c * c).sum::<f64>().sqrt()
}

/// Positions on the x-axis whose ball of radius `r` covers `p`, or `None`
/// when `r` is below the distance of `p` from the axis.
pub fn interval_on_line(p: &Point, r: f64) -> Option<Interval> {
    let d = line_distance(p);
    if r < d {
        return None;
    }
    let half = ((r - d) * (r + d)).sqrt();
    Some(Interval {
        left: p.x() - half,
        right: p.x() + half,
        source: 0,
    })
}

/// Intervals of every point at radius `r`, in input order. A point whose
/// axis distance exceeds `r` by at most `eps` gets a zero-width interval;
/// beyond that the whole family is absent.
pub fn intervals_at(points: &[Point], r: f64, eps: f64) -> Option<Vec<Interval>> {
    points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let d = line_distance(p);
            if r < d - eps {
                return None;
            }
            let half = ((r - d).max(0.0) * (r + d)).sqrt();
            Some(Interval {
                left: p.x() - half,
                right: p.x() + half,
                source: i,
            })
        })
        .collect()
}

/// Sorts by left endpoint, ties by right endpoint.
pub fn sort_intervals(intervals: &mut [Interval]) {
    intervals.sort_by(|a, b| a.left.total_cmp(&b.left).then(a.right.total_cmp(&b.right)));
}

/// Checks coverage and separation of `sol` for `inst`, accepting violations
/// up to the tolerance. More than `p` red or `q` blue centers is invalid.
pub fn check_solution<C: Center>(inst: &Instance, sol: &Solution<C>, tol: Tolerance) -> CheckReport {
    let dim = inst.dim();
    let dims_ok = sol.red.iter().chain(&sol.blue).all(|c| c.fits_dim(dim));
    let scale = sol
        .red
        .iter()
        .chain(&sol.blue)
        .map(Center::magnitude)
        .fold(inst.scale(sol.radius), f64::max);
    let covers = |centers: &[C]| {
        dims_ok
            && inst.points.iter().all(|p| {
                centers
                    .iter()
                    .any(|c| tol.le(c.distance_to_point(p), sol.radius, scale))
            })
    };
    let covers_red = covers(&sol.red);
    let covers_blue = covers(&sol.blue);
    let min_separation = if dims_ok {
        sol.red
            .iter()
            .flat_map(|c| sol.blue.iter().map(move |d| c.distance_to(d)))
            .fold(f64::INFINITY, f64::min)
    } else {
        f64::NAN
    };
    let counts_ok = sol.red.len() <= inst.p && sol.blue.len() <= inst.q;
    let separated = tol.le(inst.alpha, min_separation, scale);
    CheckReport {
        covers_red,
        covers_blue,
        min_separation,
        valid: counts_ok && covers_red && covers_blue && separated && sol.radius >= 0.0,
    }
}
