//! Values frozen from independent computations: closed forms, a separate
//! Gauss–Legendre integrator, bisection, and 30-digit reference evaluations.

use std::f64::consts::PI;

use fracton_thermo::{
    central_charge_dilog, central_charge_index, fractal_index, rogers_dilog,
    rogers_dilog_quadrature, solve_x_nu, ClassParam, ROGERS_AT_ONE,
};

fn h(v: f64) -> ClassParam {
    ClassParam::new(v).unwrap()
}

/// Nodes and weights of the n-point Gauss–Legendre rule on [−1, 1].
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let k = k as f64;
                    let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// Composite rule on a mesh graded geometrically towards 0.
fn composite(f: impl Fn(f64) -> f64, panels: usize, rule: &[(f64, f64)]) -> f64 {
    let ratio: f64 = 0.7;
    let mut edges: Vec<f64> = (0..=panels)
        .map(|k| ratio.powi((panels - k) as i32))
        .collect();
    edges[0] = 0.0;
    edges
        .windows(2)
        .map(|w| {
            let (c, r) = (0.5 * (w[0] + w[1]), 0.5 * (w[1] - w[0]));
            r * rule.iter().map(|&(x, wt)| wt * f(c + r * x)).sum::<f64>()
        })
        .sum()
}

/// i_f(3/2) from the self-dual closed form of Y, integrated in u = 1/ξ.
fn self_dual_index(panels: usize) -> f64 {
    let rule = gauss_legendre(20);
    let integrand = |u: f64| {
        let xi = 1.0 / u;
        // Y − 2 = (√(1+4ξ²) − 1)/2, written without cancellation
        let gap = 2.0 * xi * xi / ((1.0 + 4.0 * xi * xi).sqrt() + 1.0);
        (1.0 / gap).ln_1p() / u
    };
    6.0 / (PI * PI) * composite(integrand, panels, &rule)
}

#[test]
fn gauss_legendre_rule_is_exact_for_polynomials() {
    let rule = gauss_legendre(20);
    let integral: f64 = rule.iter().map(|&(x, w)| w * x.powi(38)).sum();
    assert!((integral - 2.0 / 39.0).abs() < 1e-14);
}

#[test]
fn self_dual_index_matches_independent_quadrature() {
    let coarse = self_dual_index(12);
    let fine = self_dual_index(120);
    println!("oracle i_f(3/2): coarse {coarse:.15} fine {fine:.15}");
    assert!((coarse - fine).abs() < 1e-12, "oracle did not settle");
    assert!((fine - 0.6).abs() < 1e-12);
    let ours = fractal_index(h(1.5)).unwrap();
    assert!((ours.value - fine).abs() < 1e-9, "{ours:?} vs {fine}");
    assert!(ours.value > 0.5 && ours.value < 1.0);
}

#[test]
fn fractal_index_reference_values() {
    let reference = [
        (1.0, 0.5),
        (1.25, 0.541_924_439_468_849),
        (1.5, 0.6),
        (5.0 / 3.0, 0.655_649_812_243_806),
        (1.75, 0.693_008_113_138_364),
        (2.0, 1.0),
    ];
    for (hv, want) in reference {
        let got = fractal_index(h(hv)).unwrap();
        assert!(got.abs_error_estimate <= 1e-9, "{got:?}");
        assert!(
            (got.value - want).abs() < 1e-9,
            "h = {hv}: {} vs {want}",
            got.value
        );
    }
}

#[test]
fn fractal_index_monotonicity_report() {
    let values: Vec<(f64, f64)> = (0..=20)
        .map(|k| {
            let hv = 1.0 + k as f64 / 20.0;
            (hv, fractal_index(h(hv)).unwrap().value)
        })
        .collect();
    let rises = values.windows(2).filter(|w| w[1].1 > w[0].1).count();
    for (hv, v) in &values {
        println!("i_f({hv:.2}) = {v:.12}");
    }
    println!("i_f increasing on {rises}/{} grid steps", values.len() - 1);
    assert!(values
        .iter()
        .all(|&(_, v)| (0.5 - 1e-9..=1.0 + 1e-9).contains(&v)));
}

fn bisect(nu: i32) -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if mid.powi(nu) + mid - 1.0 > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn roots_match_bisection() {
    assert_eq!(solve_x_nu(1), 0.5);
    assert!((solve_x_nu(2) - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-15);
    for nu in 1..=12 {
        assert!(
            (solve_x_nu(nu) - bisect(nu as i32)).abs() < 1e-14,
            "nu = {nu}"
        );
    }
    assert!((solve_x_nu(3) - 0.682_327_803_828_019_3).abs() < 1e-14);
}

#[test]
fn dilog_constants() {
    assert!((rogers_dilog(1.0).unwrap() - PI * PI / 6.0).abs() < 1e-12);
    assert!((rogers_dilog(0.5).unwrap() - PI * PI / 12.0).abs() < 1e-10);
    let quad = rogers_dilog_quadrature(0.5).unwrap();
    assert!((quad.value - PI * PI / 12.0).abs() < 1e-10);
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    let quad = rogers_dilog_quadrature(golden).unwrap();
    assert!((quad.value - PI * PI / 10.0).abs() < 1e-10);
}

#[test]
fn rogers_duality_by_both_routes() {
    for k in 1..=9 {
        let x = k as f64 / 10.0;
        let series = rogers_dilog(x).unwrap() + rogers_dilog(1.0 - x).unwrap();
        assert!((series - ROGERS_AT_ONE).abs() < 1e-10);
        let quad = rogers_dilog_quadrature(x).unwrap().value
            + rogers_dilog_quadrature(1.0 - x).unwrap().value;
        assert!((quad - ROGERS_AT_ONE).abs() < 1e-10, "x = {x}");
    }
}

#[test]
fn central_charge_reference_values() {
    let reference = [
        (1, 0.5),
        (2, 0.6),
        (3, 0.655_649_812_243_805_9),
        (4, 0.693_008_113_138_363_7),
        (5, 0.720_516_800_144_725_9),
        (6, 0.741_943_691_245_887_8),
    ];
    assert_eq!(central_charge_dilog(0).value_dilog, 0.0);
    for (nu, want) in reference {
        let c = central_charge_dilog(nu);
        assert!((c.value_dilog - want).abs() < 1e-9, "nu = {nu}");
        assert!((c.value_dilog + c.value_dilog_power - 1.0).abs() < 1e-12);
    }
}

#[test]
fn index_route_tracks_power_form() {
    for nu in 1..=6 {
        let c = central_charge_index(nu).unwrap();
        let index = c.value_index.unwrap();
        println!(
            "nu={nu} index={index:.12} dilog={:.12} dilog_power={:.12}",
            c.value_dilog, c.value_dilog_power
        );
        assert!((index - c.value_dilog_power).abs() < 1e-8, "nu = {nu}");
    }
    // ν = 2: class(2) is the boson, class(1/2) the self-dual class
    let c2 = central_charge_index(2).unwrap().value_index.unwrap();
    assert!((c2 - (1.0 - fractal_index(h(1.5)).unwrap().value)).abs() < 1e-12);
}
