//! Threshold graphs and their adjacency spectra.
//!
//! The crate is split in three layers:
//!
//! * [`threshold`]: creation sequences, nested split graph forms, dense
//!   adjacency matrices, recognition, enumeration and weight realizations.
//! * [`spectral`]: a symmetric eigensolver, Sturm counting, equitable
//!   partition quotients and spectrum assembly from trivial multiplicities.
//! * [`verifier`]: executable checks of the structural lemmas and of the
//!   eigenvalue-free interval around the trivial eigenvalues, plus
//!   exhaustive scans.
//!
//! [`report`] holds the CSV/JSON/plain writers shared by the CLI.

pub mod error;
pub mod report;
pub mod spectral;
pub mod threshold;
pub mod verifier;

pub use error::{Error, Result};
pub use spectral::{Spectrum, SpectrumSource, TrivialMults};
pub use threshold::{ClassTag, CreationSequence, DenseGraph, NsgForm, Symbol, WeightRealization};
