//! Rogers dilogarithm
//! `L(x) = −½ ∫₀ˣ [ln(1−y)/y + ln y/(1−y)] dy = Li₂(x) + ½ ln x · ln(1−x)`.

use std::f64::consts::PI;

use crate::error::{Result, ThermoError};
use crate::quadrature::{Estimate, GaussKronrod};

/// `L(1) = π²/6`.
pub const ROGERS_AT_ONE: f64 = PI * PI / 6.0;

/// Power series `Σ xᵏ/k²`, used for `0 ≤ x ≤ ½` only.
fn li2_series(x: f64) -> f64 {
    debug_assert!((0.0..=0.5).contains(&x));
    let mut sum = 0.0;
    let mut power = x;
    let mut k = 1.0;
    while power > f64::EPSILON * 1e-3 * sum {
        sum += power / (k * k);
        power *= x;
        k += 1.0;
        if power == 0.0 {
            break;
        }
    }
    sum
}

fn check_domain(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(ThermoError::DilogDomain { x })
    }
}

/// Series evaluation, reflected through `L(x) + L(1−x) = L(1)` above ½.
pub fn rogers_dilog(x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(if x == 0.0 {
        0.0
    } else if x == 1.0 {
        ROGERS_AT_ONE
    } else if x <= 0.5 {
        li2_series(x) + 0.5 * x.ln() * (-x).ln_1p()
    } else {
        ROGERS_AT_ONE - rogers_dilog(1.0 - x)?
    })
}

fn integrand(y: f64) -> f64 {
    -0.5 * ((-y).ln_1p() / y + y.ln() / (1.0 - y))
}

/// Direct adaptive quadrature of the defining integral.
///
/// The integrand is symmetric under `y ↦ 1−y`, so the part above ½ is folded
/// back onto `[1−x, ½]` and only the singular end at 0 is ever approached.
pub fn rogers_dilog_quadrature(x: f64) -> Result<Estimate> {
    check_domain(x)?;
    let q = GaussKronrod::new(1e-14);
    if x <= 0.5 {
        return Ok(q.integrate(integrand, 0.0, x));
    }
    let lower = q.integrate(integrand, 0.0, 0.5);
    let folded = q.integrate(integrand, 1.0 - x, 0.5);
    Ok(Estimate {
        value: lower.value + folded.value,
        abs_error: lower.abs_error + folded.abs_error,
        evaluations: lower.evaluations + folded.evaluations,
        intervals: lower.intervals + folded.intervals,
        converged: lower.converged && folded.converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn special_values() {
        assert_eq!(rogers_dilog(0.0).unwrap(), 0.0);
        assert!((rogers_dilog(1.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((rogers_dilog(0.5).unwrap() - PI * PI / 12.0).abs() < 1e-15);
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert!((rogers_dilog(golden).unwrap() - PI * PI / 10.0).abs() < 1e-14);
        assert!((rogers_dilog(1.0 - golden).unwrap() - PI * PI / 15.0).abs() < 1e-14);
    }

    #[test]
    fn domain() {
        assert!(rogers_dilog(-0.1).is_err());
        assert!(rogers_dilog(1.1).is_err());
        assert!(rogers_dilog(f64::NAN).is_err());
        assert!(rogers_dilog_quadrature(2.0).is_err());
    }

    #[test]
    fn series_and_quadrature_agree() {
        for i in 1..=20 {
            let x = i as f64 / 20.0;
            let series = rogers_dilog(x).unwrap();
            let quad = rogers_dilog_quadrature(x).unwrap();
            assert!(quad.converged);
            assert!(
                (series - quad.value).abs() < 1e-12,
                "x = {x}: {series} vs {}",
                quad.value
            );
        }
    }

    #[test]
    fn monotone_on_unit_interval() {
        let values: Vec<f64> = (0..=200)
            .map(|i| rogers_dilog(i as f64 / 200.0).unwrap())
            .collect();
        assert!(values.windows(2).all(|w| w[0] < w[1]));
    }
}
