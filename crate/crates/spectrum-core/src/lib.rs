//! Exact-rational classification of filling factors into universal classes.
//!
//! Everything here works on [`Ratio`] (arbitrary-precision, always reduced);
//! nothing is ever rounded.

pub mod error;
pub mod farey;
pub mod groups;
pub mod ratio;
pub mod spectrum;

pub use error::{Result, SpectrumError};
pub use farey::{
    farey_sequence, farey_theorem_check, is_unimodular, mediant_refinement, validate_chain,
    FareyTheoremReport, TheoremEntry, TransitionChain,
};
pub use groups::{validate_class_sequence, ClassSequenceReport};
pub use ratio::Ratio;
pub use spectrum::{class_members, dual_class, dual_filling, spectrum_h, DualPair, UniversalClass};
