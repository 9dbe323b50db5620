/// Absolute-plus-relative comparison tolerance.
///
/// A quantity of magnitude `scale` is compared with slack `tau * (1 + |scale|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT_TAU: f64 = 1e-9;

    pub fn new(tau: f64) -> Self {
        assert!(
            tau >= 0.0 && tau.is_finite(),
            "tolerance must be finite and non-negative"
        );
        Tolerance(tau)
    }

    pub fn exact() -> Self {
        Tolerance(0.0)
    }

    pub fn tau(self) -> f64 {
        self.0
    }

    pub fn slack(self, scale: f64) -> f64 {
        self.0 * (1.0 + scale.abs())
    }

    /// `a <= b` up to the slack for `scale`.
    pub fn le(self, a: f64, b: f64, scale: f64) -> bool {
        a <= b + self.slack(scale)
    }

    pub fn eq(self, a: f64, b: f64, scale: f64) -> bool {
        (a - b).abs() <= self.slack(scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(Self::DEFAULT_TAU)
    }
}

/// Sorts `values` and merges runs whose spread is at most `eps`, keeping the
/// largest member of each run.
pub(crate) fn sort_dedup_keep_max(values: &mut Vec<f64>, eps: f64) {
    values.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(values.len());
    let mut run_start = f64::NAN;
    for &v in values.iter() {
        match out.last_mut() {
            Some(last) if v - run_start <= eps => *last = v,
            _ => {
                run_start = v;
                out.push(v);
            }
        }
    }
    *values = out;
}

/// Sorts `values` and merges runs whose spread is at most `eps`, keeping the
/// smallest member of each run.
pub(crate) fn sort_dedup_keep_min(values: &mut Vec<f64>, eps: f64) {
    values.sort_by(f64::total_cmp);
    values.dedup_by(|later, first| *later - *first <= eps);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slack_grows_with_scale() {
        let t = Tolerance::default();
        assert_eq!(t.slack(0.0), 1e-9);
        assert!((t.slack(99.0) - 1e-7).abs() < 1e-20);
        assert!(t.le(1.0 + 5e-10, 1.0, 0.0));
        assert!(!t.le(1.0 + 5e-9, 1.0, 0.0));
    }

    #[test]
    fn dedup_runs() {
        let mut v = vec![3.0, 1.0, 1.0 + 1e-12, 2.0, 1.0 + 2e-12];
        sort_dedup_keep_max(&mut v, 1e-9);
        assert_eq!(v, vec![1.0 + 2e-12, 2.0, 3.0]);
        let mut w = vec![3.0, 1.0, 1.0 + 1e-12, 2.0];
        sort_dedup_keep_min(&mut w, 1e-9);
        assert_eq!(w, vec![1.0, 2.0, 3.0]);
    }
}
