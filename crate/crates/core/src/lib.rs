//! Phased-burst error channels over finite fields.
//!
//! A phased burst hits an n x m array column-wise: every column of the error
//! array lies in a large set E2, and all but at most w columns lie in a small
//! set E1. This crate models such channels as adversarial error sets,
//! computes the associated rate bounds (sphere-packing and
//! Gilbert-Varshamov style), builds generalized concatenated codes with
//! certified correction guarantees, and verifies everything against
//! brute-force oracles at small scale.

pub mod bounds;
pub mod channel;
pub mod code;
mod error;
pub mod error_set;
pub mod field;
pub mod gcc;
pub mod oracle;
pub mod profile;

pub use bounds::{ChannelShape, ComparisonReport, RatePoint, SweepMode};
pub use channel::PbeChannel;
pub use code::{CodeChain, LinearCode};
pub use error::{Error, Result};
pub use error_set::ErrorSet;
pub use field::{FieldElement, FieldSpec, FqMatrix, FqVector};
pub use gcc::{GccCode, GccSpec, PbecCertificate};
pub use oracle::OracleBudget;
pub use profile::AdmissibilityProfile;
