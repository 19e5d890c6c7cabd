//! Numerical layer: symmetric eigenvalues, Sturm counts, quotient
//! matrices and spectrum assembly.

mod eigen;
mod quotient;
mod spectrum;

pub use eigen::{count_eigs_leq, symmetric_eigenvalues, Matrix, Tridiagonal, SYMMETRY_TOL};
pub use quotient::{quotient_matrix, QuotientPair};
pub use spectrum::{trivial_multiplicities, Spectrum, SpectrumSource, TrivialMults, CLASSIFY_EPS};
