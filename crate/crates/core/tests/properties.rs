use proptest::prelude::*;

use rbcenter::approx_general::greedy_separation_filter;
use rbcenter::approx_line::constrained_4_approx;
use rbcenter::feasibility::feasible;
use rbcenter::geometry::{check_solution, distance, interval_on_line, Instance, Interval, Point, PointSet, Solution};
use rbcenter::kcenter::hitting_number;
use rbcenter::oracle::brute_force_feasible;
use rbcenter::{solve_constrained, Tolerance};

fn point(dim: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(-10.0f64..10.0, dim).prop_map(|c| Point::new(c).unwrap())
}

fn points(dim: usize, n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(point(dim), n)
}

fn small_instance() -> impl Strategy<Value = Instance> {
    (1usize..=3)
        .prop_flat_map(|dim| (points(dim, 1..=5), 1usize..=2, 1usize..=2, 0.05f64..25.0))
        .prop_map(|(pts, p, q, alpha)| Instance::new(PointSet::new(pts).unwrap(), p, q, alpha).unwrap())
}

fn nearest(p: &Point, centers: &[Point]) -> f64 {
    centers
        .iter()
        .map(|c| distance(p, c).unwrap())
        .fold(f64::INFINITY, f64::min)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn intervals_nest(p in point(3), extra in 0.0f64..10.0, grow in 0.0f64..10.0) {
        let r1 = p.line_distance() + extra;
        let a = interval_on_line(&p, r1).unwrap();
        let b = interval_on_line(&p, r1 + grow).unwrap();
        prop_assert!(b.left <= a.left && a.right <= b.right);
        prop_assert!(a.left <= p.x() && p.x() <= a.right);
    }

    #[test]
    fn validity_survives_translation(
        pts in points(2, 1..=6),
        red in points(2, 1..=3),
        blue in points(2, 1..=3),
        offset in prop::collection::vec(-100.0f64..100.0, 2),
        loose_radius in any::<bool>(),
        loose_alpha in any::<bool>(),
    ) {
        let need = pts.iter().map(|p| nearest(p, &red).max(nearest(p, &blue))).fold(0.0, f64::max);
        let sep = red.iter().map(|c| nearest(c, &blue)).fold(f64::INFINITY, f64::min);
        prop_assume!(need > 1e-3 && sep > 1e-3);
        let radius = need * if loose_radius { 1.1 } else { 0.9 };
        let alpha = sep * if loose_alpha { 0.9 } else { 1.1 };
        let shift = |v: &[Point]| v.iter().map(|c| c.translated(&offset)).collect::<Vec<_>>();
        let inst = Instance::new(PointSet::new(pts.clone()).unwrap(), red.len(), blue.len(), alpha).unwrap();
        let moved = Instance::new(PointSet::new(shift(&pts)).unwrap(), red.len(), blue.len(), alpha).unwrap();
        let sol = Solution { red: red.clone(), blue: blue.clone(), radius };
        let sol_moved = Solution { red: shift(&red), blue: shift(&blue), radius };
        let tol = Tolerance::default();
        let before = check_solution(&inst, &sol, tol);
        let after = check_solution(&moved, &sol_moved, tol);
        prop_assert_eq!(before.valid, loose_radius && loose_alpha);
        prop_assert_eq!(before.valid, after.valid);
        prop_assert!((before.min_separation - after.min_separation).abs() <= 1e-9 * (1.0 + sep));
    }

    #[test]
    fn filter_keeps_separated_cover(centers in points(2, 1..=12), threshold in 0.1f64..8.0) {
        let kept = greedy_separation_filter(&centers, threshold);
        prop_assert!(!kept.is_empty() && kept.len() <= centers.len());
        prop_assert!(kept.iter().all(|k| centers.contains(k)));
        for (i, a) in kept.iter().enumerate() {
            for b in &kept[i + 1..] {
                prop_assert!(distance(a, b).unwrap() >= threshold);
            }
        }
        prop_assert!(centers.iter().all(|c| nearest(c, &kept) < threshold));
    }

    #[test]
    fn widening_never_needs_more_points(
        spans in prop::collection::vec((-20.0f64..20.0, 0.0f64..5.0, 0.0f64..3.0), 1..=10),
    ) {
        let make = |w: f64| -> Vec<Interval> {
            spans
                .iter()
                .enumerate()
                .map(|(i, &(c, h, g))| Interval { left: c - h - w * g, right: c + h + w * g, source: i })
                .collect()
        };
        let (narrow, stab) = hitting_number(&make(0.0));
        let (wide, _) = hitting_number(&make(1.0));
        prop_assert!(wide <= narrow);
        for iv in make(0.0) {
            prop_assert!(stab.iter().any(|&x| iv.contains(x, 0.0)));
        }
    }

    #[test]
    fn dp_matches_oracle_and_witness_is_valid(inst in small_instance(), frac in 0.0f64..1.5) {
        let tol = Tolerance::default();
        let exact = solve_constrained(&inst, tol).unwrap();
        prop_assert!(check_solution(&inst, &exact.solution, tol).valid);
        let r = inst.max_line_distance() + frac * exact.radius;
        let dp = feasible(&inst, r, tol);
        let bf = brute_force_feasible(&inst, r, tol).unwrap();
        prop_assert_eq!(dp.is_some(), bf.is_some(), "r = {}", r);
        if let Some(sol) = dp {
            prop_assert!(check_solution(&inst, &sol, tol).valid);
            prop_assert!(r >= exact.radius * (1.0 - 1e-9));
        }
    }

    #[test]
    fn four_approx_brackets_optimum(inst in small_instance()) {
        let tol = Tolerance::default();
        let exact = solve_constrained(&inst, tol).unwrap().radius;
        let approx = constrained_4_approx(&inst, tol).solution;
        prop_assert!(check_solution(&inst, &approx, tol).valid);
        prop_assert!(exact <= approx.radius * (1.0 + 1e-9));
        prop_assert!(approx.radius <= 4.0 * exact + 1e-9);
    }
}
