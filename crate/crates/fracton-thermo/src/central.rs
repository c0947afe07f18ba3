//! Central charges `c[ν]`, by the Rogers dilogarithm and by fractal indices.

use serde::Serialize;
use spectrum_core::{spectrum_h, Ratio};

use crate::dilog::{rogers_dilog, ROGERS_AT_ONE};
use crate::distribution::ClassParam;
use crate::error::{Result, ThermoError};
use crate::index::{fractal_index_with_tolerance, DEFAULT_INDEX_TOL};
use crate::roots::NewtonBisect;

/// Root of `x^ν + x = 1` in `[0, 1)`. `ν = 0` gives `x = 0` by continuity.
pub fn solve_x_nu(nu: u32) -> f64 {
    match nu {
        0 => 0.0,
        1 => 0.5,
        _ => {
            let p = nu as i32;
            let nu_f = nu as f64;
            let solver = NewtonBisect {
                f_tol: 2.0 * f64::EPSILON,
                max_iter: 200,
            };
            let eval = |x: f64| (x.powi(p) + x - 1.0, nu_f * x.powi(p - 1) + 1.0);
            // g(0) = −1 < 0 < 1 = g(1); bisection cannot fail to bracket
            solver
                .solve(eval, 0.0, 1.0, 0.5)
                .unwrap_or_else(|u| 0.5 * (u.lo + u.hi))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CentralCharge {
    pub nu: u32,
    pub x_root: f64,
    /// `L[x]/L[1]`.
    pub value_dilog: f64,
    /// `L[x^ν]/L[1] = L[1−x]/L[1]`, i.e. `1 − value_dilog`.
    pub value_dilog_power: f64,
    pub value_index: Option<f64>,
    pub index_abs_error: Option<f64>,
}

pub fn central_charge_dilog(nu: u32) -> CentralCharge {
    let x = solve_x_nu(nu);
    let power = x.powi(nu as i32).clamp(0.0, 1.0);
    // both arguments lie in [0, 1] by construction
    let l = |v: f64| rogers_dilog(v).expect("dilog argument in [0, 1]");
    CentralCharge {
        nu,
        x_root: x,
        value_dilog: l(x) / ROGERS_AT_ONE,
        value_dilog_power: l(power) / ROGERS_AT_ONE,
        value_index: None,
        index_abs_error: None,
    }
}

/// Both routes: fractal indices of the classes containing `ν` and `1/ν`
/// (`c = i_f[ν] − i_f[1/ν]` for even ν, `2·i_f[ν] − i_f[1/ν]` for odd ν),
/// alongside the dilogarithm values.
pub fn central_charge_index(nu: u32) -> Result<CentralCharge> {
    central_charge_index_with_tolerance(nu, DEFAULT_INDEX_TOL)
}

pub fn central_charge_index_with_tolerance(nu: u32, abs_tol: f64) -> Result<CentralCharge> {
    if nu == 0 {
        return Err(ThermoError::ZeroNu);
    }
    let class_of = |r: Ratio| -> Result<ClassParam> { ClassParam::try_from(&spectrum_h(&r)?) };
    let own = fractal_index_with_tolerance(class_of(Ratio::from_integer(nu))?, abs_tol)?;
    let inverse = fractal_index_with_tolerance(class_of(Ratio::new(1, nu))?, abs_tol)?;
    let weight = if nu.is_multiple_of(2) { 1.0 } else { 2.0 };
    let mut charge = central_charge_dilog(nu);
    charge.value_index = Some(weight * own.value - inverse.value);
    charge.index_abs_error = Some(weight * own.abs_error_estimate + inverse.abs_error_estimate);
    Ok(charge)
}
