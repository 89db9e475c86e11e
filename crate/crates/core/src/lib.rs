//! Outcome (P/N) and Sprague–Grundy sequences of finite subtraction games,
//! certified eventual-period detection, and a harness that checks closed-form
//! period formulas against brute-force ground truth.
//!
//! The crate is organised bottom-up:
//!
//! * [`set`] – the move set of a game.
//! * [`game`] – sequence kernels (bit-parallel outcome kernel, Grundy values,
//!   optimal moves).
//! * [`periodicity`] – window certificates, minimal period detection and the
//!   `PREFIX(BLOCK)` rendering.
//! * [`lab`] – period predictors for the known families and the verification
//!   harness.
//! * [`family`] – the `1,4,5k` family mini-language.
//! * [`tables`] – the published period tables as data.

pub mod error;
pub mod family;
pub mod game;
pub mod lab;
pub mod periodicity;
pub mod set;
pub mod tables;

pub use error::{Error, Result};
pub use family::FamilyExpression;
pub use game::{best_move, grundy_sequence, mex, outcome_sequence, GrundySequence, OutcomeSequence};
pub use lab::{
    redundant_elements, special_case_scan, verify_family, verify_prediction, verify_predictions, Family, FamilyQuery, FormulaPrediction,
    Parameters, ScanOutcome, ScanRecord, SelectorSpec, Status, VerificationRecord,
};
pub use periodicity::{
    detect_period, find_grundy_period, find_period, format_linear_period, verify_certificate,
    HorizonPolicy, PeriodReport, PeriodicityCertificate, Symbols, DEFAULT_HORIZON_CAP,
};
pub use set::SubtractionSet;
