use proptest::prelude::*;

use fracton_thermo::{
    entropy_per_state, free_energy, ln_theta, log_statistical_weight, occupation,
    occupation_via_theta, partition_theta, solve_gap, solve_y, ClassParam, Fugacity, ThermoPoint,
};

fn h(v: f64) -> ClassParam {
    ClassParam::new(v).unwrap()
}

fn xi(v: f64) -> Fugacity {
    Fugacity::new(v).unwrap()
}

fn h_grid() -> impl Iterator<Item = f64> {
    (0..=10).map(|k| 1.0 + k as f64 / 10.0)
}

fn xi_grid(points: usize) -> impl Iterator<Item = f64> {
    (0..points).map(move |k| 10f64.powf(-3.0 + 6.0 * k as f64 / (points - 1) as f64))
}

fn grid() -> Vec<(f64, f64)> {
    h_grid()
        .flat_map(|hv| xi_grid(25).map(move |x| (hv, x)))
        .filter(|&(hv, x)| hv < 2.0 || x > 1.0)
        .collect()
}

#[test]
fn solver_residual_on_grid() {
    for (hv, x) in grid() {
        let gap = solve_gap(h(hv), xi(x)).unwrap();
        let back = (1.0 + gap).powf(hv - 1.0) * gap.powf(2.0 - hv);
        assert!((back - x).abs() / x <= 1e-10, "h={hv} xi={x}: {back}");
        assert_eq!(solve_y(h(hv), xi(x)).unwrap(), 2.0 + gap);
    }
}

#[test]
fn theta_identity_on_grid() {
    for (hv, x) in grid() {
        let t = partition_theta(h(hv), xi(x)).unwrap();
        assert!(t > 0.0 && t < 1.0);
        let rhs = t.powf(hv - 2.0) - t.powf(hv - 1.0);
        assert!(
            (1.0 / x - rhs).abs() <= 1e-10 * (1.0 / x).max(1.0),
            "h={hv} xi={x}"
        );
    }
}

#[test]
fn finite_difference_occupation_on_grid() {
    for (hv, x) in grid() {
        let direct = occupation(h(hv), xi(x)).unwrap();
        let fd = occupation_via_theta(h(hv), xi(x)).unwrap();
        assert!(
            (direct - fd).abs() <= 1e-6,
            "h={hv} xi={x}: {direct} vs {fd}"
        );
    }
}

#[test]
fn closed_form_reductions() {
    for x in xi_grid(50) {
        let fermi = occupation(h(1.0), xi(x)).unwrap();
        assert!((fermi - 1.0 / (x + 1.0)).abs() <= 1e-10);
        let self_dual = occupation(h(1.5), xi(x)).unwrap();
        assert!((self_dual - 1.0 / (0.25 + x * x).sqrt()).abs() <= 1e-10);
        if x > 1.0 {
            let bose = occupation(h(2.0), xi(x)).unwrap();
            assert!((bose - 1.0 / (x - 1.0)).abs() <= 1e-10 * (1.0 / (x - 1.0)).max(1.0));
        }
    }
    assert!(occupation(h(2.0), xi(1.0)).is_err());
}

/// Maximiser of `S(n) − n ln ξ` by golden-section search on `(lo, hi)`.
fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = hi - g * (hi - lo);
    let mut b = lo + g * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    for _ in 0..200 {
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + g * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - g * (hi - lo);
            fa = f(a);
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn entropy_maximum_recovers_occupation() {
    let points: [(f64, f64); 20] = [
        (1.0, 0.3),
        (1.0, 4.0),
        (1.1, 0.05),
        (1.2, 2.5),
        (1.25, 1.0),
        (1.3, 0.7),
        (1.4, 10.0),
        (1.5, 0.2),
        (1.5, 1.0),
        (1.5, 3.0),
        (1.6, 0.9),
        (1.66, 5.0),
        (1.7, 0.01),
        (1.75, 1.5),
        (1.8, 0.4),
        (1.9, 2.0),
        (1.95, 0.8),
        (2.0, 1.5),
        (2.0, 3.0),
        (2.0, 20.0),
    ];
    for (hv, x) in points {
        let cls = h(hv);
        let hi = if hv < 2.0 {
            cls.max_occupation()
        } else {
            100.0
        };
        let objective = |n: f64| entropy_per_state(cls, n).unwrap() - n * x.ln();
        let n_star = golden_max(objective, 1e-12, hi * (1.0 - 1e-12));
        let n = occupation(cls, xi(x)).unwrap();
        assert!((n_star - n).abs() <= 1e-6, "h={hv} xi={x}: {n_star} vs {n}");
    }
}

#[test]
fn self_dual_entropy_closed_form() {
    for k in 1..=19 {
        let n = k as f64 / 10.0;
        let closed = (2.0 + n) * ((2.0 + n) / (2.0 * n)).sqrt().ln()
            - (2.0 - n) * ((2.0 - n) / (2.0 * n)).sqrt().ln();
        let s = entropy_per_state(h(1.5), n).unwrap();
        assert!((s - closed).abs() <= 1e-10, "n = {n}");
    }
}

#[test]
fn stirling_limit() {
    let target = entropy_per_state(h(1.5), 0.5).unwrap();
    let gaps: Vec<f64> = [1_000u64, 10_000, 100_000, 1_000_000]
        .iter()
        .map(|&g| (log_statistical_weight(h(1.5), g, g / 2).unwrap() / g as f64 - target).abs())
        .collect();
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    assert!(gaps[3] <= 1e-4, "{gaps:?}");
}

#[test]
fn degenerate_limit() {
    for hv in (0..10).map(|k| 1.0 + k as f64 / 10.0) {
        let n = occupation(h(hv), xi(1e-8)).unwrap();
        assert!((n - 1.0 / (2.0 - hv)).abs() <= 1e-6, "h = {hv}: {n}");
    }
}

#[test]
fn spot_values() {
    let ln_half = 0.5f64.ln();
    assert!((free_energy(h(1.0), xi(1.0), 1.0).unwrap() - ln_half).abs() < 1e-12);
    assert!((free_energy(h(2.0), xi(2.0), 1.0).unwrap() - ln_half).abs() < 1e-12);
    assert!((free_energy(h(1.5), xi(1.0), 2.0).unwrap() + 1.924_847_300_2).abs() < 1e-9);
    let t = partition_theta(h(1.5), xi(1.0)).unwrap();
    assert!((t - (5f64.sqrt() - 1.0) / (5f64.sqrt() + 1.0)).abs() < 1e-12);
    assert!((occupation_via_theta(h(2.0), xi(3.0)).unwrap() - 0.5).abs() < 1e-6);
}

fn class_param() -> impl Strategy<Value = f64> {
    (0u32..=1000).prop_map(|k| 1.0 + k as f64 / 1000.0)
}

proptest! {
    #[test]
    fn solved_points_are_consistent(hv in class_param(), ln_x in -20.0f64..20.0) {
        prop_assume!(hv < 2.0 || ln_x > 1e-6);
        let p = ThermoPoint::solve(h(hv), Fugacity::from_ln(ln_x).unwrap()).unwrap();
        let x = ln_x.exp();
        prop_assert!((p.reconstructed_fugacity() - x).abs() <= 1e-10 * x);
        // Θ itself may underflow; its logarithm may not
        let ln_t = ln_theta(h(hv), Fugacity::from_ln(ln_x).unwrap()).unwrap();
        prop_assert!(ln_t < 0.0 && ln_t.is_finite());
        prop_assert!((0.0..1.0).contains(&p.theta));
        prop_assert!(p.occupation > 0.0 && p.occupation <= h(hv).max_occupation());
        prop_assert!(p.entropy_per_state >= 0.0);
        prop_assert!(free_energy(h(hv), Fugacity::from_ln(ln_x).unwrap(), 1.0).unwrap() < 0.0);
    }

    #[test]
    fn occupation_decreases_with_fugacity(hv in class_param(), a in -10.0f64..10.0, d in 0.01f64..5.0) {
        prop_assume!(hv < 2.0 || a > 1e-3);
        let lower = occupation(h(hv), Fugacity::from_ln(a).unwrap()).unwrap();
        let upper = occupation(h(hv), Fugacity::from_ln(a + d).unwrap()).unwrap();
        prop_assert!(upper <= lower);
    }

    #[test]
    fn entropy_is_nonnegative(hv in class_param(), frac in 0.001f64..0.999) {
        let cls = h(hv);
        let n = if hv < 2.0 { frac * cls.max_occupation() } else { frac * 50.0 };
        prop_assert!(entropy_per_state(cls, n).unwrap() >= 0.0);
    }
}
