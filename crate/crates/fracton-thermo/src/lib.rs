//! Thermodynamics of fracton universal classes.
//!
//! A class is labelled by its Hausdorff dimension `h ∈ [1, 2]`; `h = 1` is the
//! Fermi gas and `h = 2` the Bose gas. Everything here is a pure function of
//! its arguments and returns `f64`; quadrature results always carry their
//! error estimate.

pub mod central;
pub mod dilog;
pub mod distribution;
pub mod entropy;
pub mod error;
pub mod index;
pub mod quadrature;
pub mod roots;

pub use central::{
    central_charge_dilog, central_charge_index, central_charge_index_with_tolerance, solve_x_nu,
    CentralCharge,
};
pub use dilog::{rogers_dilog, rogers_dilog_quadrature, ROGERS_AT_ONE};
pub use distribution::{
    free_energy, ln_theta, occupation, occupation_via_theta, partition_theta, solve_gap, solve_y,
    ClassParam, Fugacity, ThermoPoint,
};
pub use entropy::{entropy_per_state, log_statistical_weight};
pub use error::{Result, ThermoError};
pub use index::{fractal_index, fractal_index_with_tolerance, FractalIndex, DEFAULT_INDEX_TOL};
