use spectrum_core::SpectrumError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThermoError {
    #[error("class parameter h = {h} outside [1, 2]")]
    ClassOutOfRange { h: f64 },

    #[error("fugacity must be positive and finite, got {xi}")]
    InvalidFugacity { xi: f64 },

    #[error("unphysical fugacity xi = {xi}: the boson class h = 2 needs xi > 1")]
    UnphysicalFugacity { xi: f64 },

    #[error("occupation n = {n} outside the physical range (0, {max}) for h = {h}")]
    UnphysicalOccupation { h: f64, n: f64, max: f64 },

    #[error("invalid occupancy: factorial argument {arg} of {term} is negative (h = {h}, G = {g}, N = {n})")]
    InvalidOccupancy {
        h: f64,
        g: u64,
        n: u64,
        term: &'static str,
        arg: f64,
    },

    #[error("kT must be positive and finite, got {kt}")]
    InvalidTemperature { kt: f64 },

    #[error("dilogarithm argument {x} outside [0, 1]")]
    DilogDomain { x: f64 },

    #[error(
        "root solve did not converge after {iterations} iterations; best bracket [{lo}, {hi}]"
    )]
    NonConvergence { iterations: usize, lo: f64, hi: f64 },

    #[error(
        "quadrature reached estimated error {achieved:e}, requested {requested:e} (value {value})"
    )]
    QuadratureFailure {
        value: f64,
        achieved: f64,
        requested: f64,
    },

    #[error("central charge via fractal indices needs nu >= 1")]
    ZeroNu,

    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

impl ThermoError {
    /// Numerical failures (as opposed to bad input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            ThermoError::NonConvergence { .. } | ThermoError::QuadratureFailure { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, ThermoError>;
