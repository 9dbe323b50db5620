use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("points must have at least one coordinate")]
    ZeroDimension,
    #[error("coordinate {value} is not finite")]
    NonFinite { value: f64 },
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("interval list is empty")]
    EmptyIntervals,
    #[error("center counts must be positive (p = {p}, q = {q})")]
    InvalidCounts { p: usize, q: usize },
    #[error("center count k must be positive")]
    ZeroCenters,
    #[error("separation distance must be finite and positive, got {0}")]
    InvalidAlpha(f64),
    #[error("{kept} kept centers exceed the available counts (p = {p}, q = {q})")]
    TooManyCenters { kept: usize, p: usize, q: usize },
    #[error("difference equation is degenerate (d_i = d_k = {d}, beta = 0): every radius solves it")]
    DegenerateEquation { d: f64 },
    #[error("radius {0} is not feasible")]
    InfeasibleRadius(f64),
    #[error("refinement factor must be positive, got {0}")]
    InvalidEpsilon(f64),
    #[error("no candidate radius is feasible")]
    NoFeasibleCandidate,
    #[error(
        "instance too large for exhaustive search (n = {n}, p + q = {centers}; limits {max_points} and {max_centers})"
    )]
    InstanceTooLarge {
        n: usize,
        centers: usize,
        max_points: usize,
        max_centers: usize,
    },
    #[error("radius {midpoint} between candidates {lower} and {upper} is feasible")]
    CandidateGap { lower: f64, upper: f64, midpoint: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
