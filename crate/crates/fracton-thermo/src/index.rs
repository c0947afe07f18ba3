//! The fractal index
//! `i_f[h] = (6/π²) ∫ from ξ=∞ to ξ=1 of (dξ/ξ) ln Θ`.
//!
//! Substituting `v = ln ξ` turns it into `(6/π²) ∫₀^∞ ln(1/Θ) dv`. The
//! integrand decays like `e^{−v}`, and for bosons it has an integrable
//! logarithmic singularity at `v = 0`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::distribution::{softplus, solve_log_gap, ClassParam, Fugacity};
use crate::error::{Result, ThermoError};
use crate::quadrature::GaussKronrod;

pub const DEFAULT_INDEX_TOL: f64 = 1e-11;

/// Integration stops here; beyond it the integrand is below `e^{1−v}`.
const CUTOFF: f64 = 50.0;
const BREAKS: [f64; 7] = [0.0, 0.5, 2.0, 6.0, 15.0, 30.0, CUTOFF];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FractalIndex {
    pub h: f64,
    pub value: f64,
    pub abs_error_estimate: f64,
}

pub fn fractal_index(h: ClassParam) -> Result<FractalIndex> {
    fractal_index_with_tolerance(h, DEFAULT_INDEX_TOL)
}

pub fn fractal_index_with_tolerance(h: ClassParam, abs_tol: f64) -> Result<FractalIndex> {
    let norm = 6.0 / (PI * PI);
    let mut failure = None;
    let integrand = |v: f64| match Fugacity::from_ln(v).and_then(|xi| solve_log_gap(h, xi)) {
        Ok(s) => softplus(-s),
        Err(e) => {
            failure.get_or_insert(e);
            0.0
        }
    };
    let q = GaussKronrod::new(abs_tol / norm);
    let est = q.integrate_pieces(integrand, &BREAKS);
    if let Some(e) = failure {
        return Err(e);
    }
    let tail = (1.0 - CUTOFF).exp();
    let value = norm * est.value;
    let abs_error = norm * (est.abs_error + tail);
    if !est.converged {
        return Err(ThermoError::QuadratureFailure {
            value,
            achieved: abs_error,
            requested: abs_tol,
        });
    }
    Ok(FractalIndex {
        h: h.value(),
        value,
        abs_error_estimate: abs_error,
    })
}
