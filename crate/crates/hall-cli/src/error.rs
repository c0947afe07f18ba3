use fracton_thermo::ThermoError;
use spectrum_core::SpectrumError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Spectrum(#[from] SpectrumError),

    #[error(transparent)]
    Thermo(#[from] ThermoError),

    #[error("fixture {source_name}: {message}")]
    Fixture {
        source_name: String,
        message: String,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Thermo(e) if e.is_numerical() => 3,
            _ => 2,
        }
    }
}
