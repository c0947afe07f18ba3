//! The fractal distribution `n = 1/(Y − h)` with
//! `(Y−1)^(h−1) (Y−2)^(2−h) = ξ`.
//!
//! The solve runs in `s = ln(Y − 2)`, where the equation reads
//! `(h−1)·ln(1+eˢ) + (2−h)·s = ln ξ`. The left side is increasing and convex
//! in `s` for every `h ∈ [1, 2]`, and the gap `Y − 2` stays accurate even when
//! it is far below machine epsilon relative to 2.

use serde::Serialize;
use spectrum_core::Ratio;

use crate::error::{Result, ThermoError};
use crate::roots::{expand_bracket, NewtonBisect};

/// Hausdorff dimension of a universal class as a real in `[1, 2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct ClassParam(f64);

impl ClassParam {
    pub const FERMION: ClassParam = ClassParam(1.0);
    pub const BOSON: ClassParam = ClassParam(2.0);
    pub const SELF_DUAL: ClassParam = ClassParam(1.5);

    pub fn new(h: f64) -> Result<Self> {
        if (1.0..=2.0).contains(&h) {
            Ok(Self(h))
        } else {
            Err(ThermoError::ClassOutOfRange { h })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_boson(self) -> bool {
        self.0 == 2.0
    }

    /// Largest occupation `1/(2−h)`; infinite for bosons.
    pub fn max_occupation(self) -> f64 {
        1.0 / (2.0 - self.0)
    }
}

impl TryFrom<&Ratio> for ClassParam {
    type Error = ThermoError;

    fn try_from(h: &Ratio) -> Result<Self> {
        ClassParam::new(h.to_f64())
    }
}

/// `ξ = exp((ε − μ)/KT)`, kept together with its logarithm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fugacity {
    xi: f64,
    ln_xi: f64,
}

impl Fugacity {
    pub fn new(xi: f64) -> Result<Self> {
        if xi > 0.0 && xi.is_finite() {
            Ok(Self { xi, ln_xi: xi.ln() })
        } else {
            Err(ThermoError::InvalidFugacity { xi })
        }
    }

    /// From `ln ξ` directly; avoids rounding `ξ` when it is close to 1 or huge.
    pub fn from_ln(ln_xi: f64) -> Result<Self> {
        if ln_xi.is_finite() {
            Ok(Self {
                xi: ln_xi.exp(),
                ln_xi,
            })
        } else {
            Err(ThermoError::InvalidFugacity { xi: ln_xi.exp() })
        }
    }

    pub fn value(self) -> f64 {
        self.xi
    }

    pub fn ln(self) -> f64 {
        self.ln_xi
    }
}

/// `ln(1 + eˣ)` without overflow.
pub(crate) fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// `eˣ / (1 + eˣ)`.
fn logistic(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

const RESIDUAL_TOL: f64 = 1e-12;

/// Solves for `s = ln(Y − 2)`.
pub(crate) fn solve_log_gap(h: ClassParam, xi: Fugacity) -> Result<f64> {
    let h = h.value();
    let ln_xi = xi.ln();
    if h == 1.0 {
        return Ok(ln_xi);
    }
    if h == 2.0 {
        if ln_xi <= 0.0 {
            return Err(ThermoError::UnphysicalFugacity { xi: xi.value() });
        }
        return Ok(ln_xi.exp_m1().ln());
    }
    let residual = |s: f64| (h - 1.0) * softplus(s) + (2.0 - h) * s - ln_xi;
    let guess = if ln_xi > 0.0 {
        ln_xi
    } else {
        ln_xi / (2.0 - h)
    };
    let (lo, hi) = expand_bracket(residual, guess, 1100).ok_or(ThermoError::NonConvergence {
        iterations: 1100,
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    })?;
    let scale = ln_xi.abs().max(1.0);
    let solver = NewtonBisect {
        f_tol: 4.0 * f64::EPSILON * scale,
        max_iter: 400,
    };
    let s = solver
        .solve(
            |s| (residual(s), (h - 1.0) * logistic(s) + (2.0 - h)),
            lo,
            hi,
            guess,
        )
        .map_err(|u| ThermoError::NonConvergence {
            iterations: u.iterations,
            lo: 2.0 + u.lo.exp(),
            hi: 2.0 + u.hi.exp(),
        })?;
    if residual(s).abs() > RESIDUAL_TOL * scale {
        return Err(ThermoError::NonConvergence {
            iterations: solver.max_iter,
            lo: 2.0 + s.exp(),
            hi: 2.0 + s.exp(),
        });
    }
    Ok(s)
}

/// The unique `Y > 2` with `(Y−1)^(h−1) (Y−2)^(2−h) = ξ`.
///
/// For small ξ the gap `Y − 2` is far below the spacing of doubles near 2;
/// use [`solve_gap`] when it matters.
pub fn solve_y(h: ClassParam, xi: Fugacity) -> Result<f64> {
    Ok(2.0 + solve_gap(h, xi)?)
}

/// `Y − 2`, to full relative precision.
pub fn solve_gap(h: ClassParam, xi: Fugacity) -> Result<f64> {
    Ok(solve_log_gap(h, xi)?.exp())
}

/// Mean occupation `n = 1/(Y − h)`.
pub fn occupation(h: ClassParam, xi: Fugacity) -> Result<f64> {
    let gap = solve_log_gap(h, xi)?.exp();
    Ok(1.0 / (2.0 - h.value() + gap))
}

/// Single-particle partition function `Θ = (Y−2)/(Y−1)`.
pub fn partition_theta(h: ClassParam, xi: Fugacity) -> Result<f64> {
    Ok(logistic(solve_log_gap(h, xi)?))
}

/// `ln Θ`, computed without forming Θ.
pub fn ln_theta(h: ClassParam, xi: Fugacity) -> Result<f64> {
    Ok(-softplus(-solve_log_gap(h, xi)?))
}

/// Free energy of a single quantum state, `F = kT · ln Θ`.
pub fn free_energy(h: ClassParam, xi: Fugacity, kt: f64) -> Result<f64> {
    if !(kt > 0.0 && kt.is_finite()) {
        return Err(ThermoError::InvalidTemperature { kt });
    }
    Ok(kt * ln_theta(h, xi)?)
}

/// Occupation recovered as `ξ ∂ ln Θ / ∂ξ`, by a Richardson-extrapolated
/// central difference in `ln ξ`.
pub fn occupation_via_theta(h: ClassParam, xi: Fugacity) -> Result<f64> {
    let l = xi.ln();
    let mut step = 1e-3 * l.abs().max(1.0);
    if h.is_boson() {
        if l <= 0.0 {
            return Err(ThermoError::UnphysicalFugacity { xi: xi.value() });
        }
        // stay clear of the pole at ξ = 1
        step = step.min(l / 20.0);
    }
    let g = |x: f64| ln_theta(h, Fugacity::from_ln(x)?);
    let central = |d: f64| -> Result<f64> { Ok((g(l + d)? - g(l - d)?) / (2.0 * d)) };
    let coarse = central(step)?;
    let fine = central(0.5 * step)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// A fully solved `(h, ξ)` point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermoPoint {
    pub h: f64,
    pub xi: f64,
    pub y: f64,
    /// `Y − 2`, kept separately because `y` cannot resolve it for small ξ.
    pub gap: f64,
    /// `ln(Y − 2)`, the variable the solver works in.
    pub ln_gap: f64,
    pub occupation: f64,
    pub theta: f64,
    pub entropy_per_state: f64,
}

impl ThermoPoint {
    pub fn solve(h: ClassParam, xi: Fugacity) -> Result<Self> {
        let s = solve_log_gap(h, xi)?;
        let gap = s.exp();
        let n = 1.0 / (2.0 - h.value() + gap);
        // S/K = n·[(1+t)·ln(1+t) − t·ln t] with t = Y − 2
        let t_ln_t = if gap > 0.0 { gap * s } else { 0.0 };
        let entropy = n * ((1.0 + gap) * gap.ln_1p() - t_ln_t);
        Ok(Self {
            h: h.value(),
            xi: xi.value(),
            y: 2.0 + gap,
            gap,
            ln_gap: s,
            occupation: n,
            theta: logistic(s),
            entropy_per_state: entropy,
        })
    }

    /// `(Y−1)^(h−1) (Y−2)^(2−h)`, which should reproduce ξ.
    pub fn reconstructed_fugacity(&self) -> f64 {
        ((self.h - 1.0) * self.gap.ln_1p() + (2.0 - self.h) * self.ln_gap).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(v: f64) -> ClassParam {
        ClassParam::new(v).unwrap()
    }

    fn xi(v: f64) -> Fugacity {
        Fugacity::new(v).unwrap()
    }

    #[test]
    fn solve_y_reductions() {
        for x in [1e-3, 0.5, 1.0, 7.0, 1e3] {
            assert!((solve_y(h(1.0), xi(x)).unwrap() - (x + 2.0)).abs() < 1e-12 * (x + 2.0));
        }
        for x in [1.001, 2.0, 1e3] {
            assert!((solve_y(h(2.0), xi(x)).unwrap() - (x + 1.0)).abs() < 1e-12 * (x + 1.0));
        }
        let golden = (3.0 + 5f64.sqrt()) / 2.0;
        assert!((solve_y(h(1.5), xi(1.0)).unwrap() - golden).abs() < 1e-13);
    }

    #[test]
    fn boson_needs_xi_above_one() {
        assert!(matches!(
            solve_y(ClassParam::BOSON, xi(1.0)),
            Err(ThermoError::UnphysicalFugacity { .. })
        ));
        assert!(matches!(
            occupation(ClassParam::BOSON, xi(0.5)),
            Err(ThermoError::UnphysicalFugacity { .. })
        ));
        assert!(occupation_via_theta(ClassParam::BOSON, xi(0.9)).is_err());
    }

    #[test]
    fn parameter_validation() {
        assert!(ClassParam::new(0.99).is_err());
        assert!(ClassParam::new(2.01).is_err());
        assert!(ClassParam::new(f64::NAN).is_err());
        assert!(Fugacity::new(0.0).is_err());
        assert!(Fugacity::new(-1.0).is_err());
        assert!(Fugacity::new(f64::INFINITY).is_err());
        assert!(Fugacity::from_ln(f64::NAN).is_err());
        assert!(matches!(
            free_energy(h(1.5), xi(1.0), 0.0),
            Err(ThermoError::InvalidTemperature { .. })
        ));
    }

    #[test]
    fn occupation_examples() {
        assert!((occupation(h(1.0), xi(3.0)).unwrap() - 0.25).abs() < 1e-15);
        assert!((occupation(h(2.0), xi(3.0)).unwrap() - 0.5).abs() < 1e-15);
        assert!((occupation(h(1.5), xi(1.0)).unwrap() - 0.894_427_191_0).abs() < 1e-10);
    }

    #[test]
    fn theta_and_free_energy_examples() {
        assert!((partition_theta(h(1.0), xi(3.0)).unwrap() - 0.75).abs() < 1e-15);
        assert!((partition_theta(h(2.0), xi(4.0)).unwrap() - 0.75).abs() < 1e-15);
        assert!((partition_theta(h(1.5), xi(1.0)).unwrap() - 0.381_966_011_3).abs() < 1e-10);
        let ln_half = 0.5f64.ln();
        assert!((free_energy(h(1.0), xi(1.0), 1.0).unwrap() - ln_half).abs() < 1e-15);
        assert!((free_energy(h(2.0), xi(2.0), 1.0).unwrap() - ln_half).abs() < 1e-15);
        assert!((free_energy(h(1.5), xi(1.0), 2.0).unwrap() + 1.924_847_300_2).abs() < 1e-10);
    }

    #[test]
    fn finite_difference_examples() {
        assert!((occupation_via_theta(h(1.0), xi(1.0)).unwrap() - 0.5).abs() < 1e-9);
        assert!((occupation_via_theta(h(1.5), xi(1.0)).unwrap() - 0.894_427_2).abs() < 1e-7);
        assert!((occupation_via_theta(h(2.0), xi(3.0)).unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn extreme_fugacities_stay_finite() {
        for hv in [1.0, 1.3, 1.5, 1.9, 1.999] {
            for lx in [-700.0, -50.0, 50.0, 700.0] {
                let p = ThermoPoint::solve(h(hv), Fugacity::from_ln(lx).unwrap()).unwrap();
                assert!(p.occupation.is_finite() && p.occupation > 0.0, "{hv} {lx}");
                assert!(p.occupation <= 1.0 / (2.0 - hv));
                assert!(p.theta >= 0.0 && p.theta <= 1.0);
                assert!(p.entropy_per_state >= 0.0);
            }
        }
    }
}
