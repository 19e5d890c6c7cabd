use serde::Serialize;

use super::eigen::{symmetric_eigenvalues, Matrix};
use super::quotient::quotient_matrix;
use crate::error::Result;
use crate::threshold::{DenseGraph, NsgForm};

/// Gap between "zero" and "positive" (and between `-1` and "below `-1`")
/// when classifying computed eigenvalues.
pub const CLASSIFY_EPS: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSource {
    Dense,
    QuotientAssembled,
}

/// Adjacency eigenvalues `λ_1 ≥ … ≥ λ_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub source: SpectrumSource,
    /// Absolute accuracy expected of each value.
    pub tolerance: f64,
}

fn solver_tolerance(mat: &Matrix) -> f64 {
    1e-10 * (mat.max_abs() * mat.dim() as f64).max(1.0)
}

impl Spectrum {
    /// Eigenvalues of the full adjacency matrix.
    pub fn dense(g: &DenseGraph) -> Result<Self> {
        let a = g.adjacency_matrix();
        Ok(Self {
            values: symmetric_eigenvalues(&a)?,
            source: SpectrumSource::Dense,
            tolerance: solver_tolerance(&a),
        })
    }

    /// Quotient eigenvalues together with `Σ(m_i-1) + isolated` zeros and
    /// `Σ(n_i-1)` copies of `-1`.
    ///
    /// When `m_h = 1` the additional `-1` is an eigenvalue of the quotient
    /// itself, so it is not padded.
    pub fn assemble(form: &NsgForm) -> Result<Self> {
        let zeros = form.m().iter().map(|m| m - 1).sum::<usize>() + form.isolated();
        let minus_ones = form.n().iter().map(|n| n - 1).sum::<usize>();
        let (mut values, tolerance) = if form.h() == 0 {
            (Vec::new(), 0.0)
        } else {
            let q = quotient_matrix(form)?;
            (symmetric_eigenvalues(&q.symmetrized)?, solver_tolerance(&q.symmetrized))
        };
        values.extend(std::iter::repeat_n(0.0, zeros));
        values.extend(std::iter::repeat_n(-1.0, minus_ones));
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(Self { values, source: SpectrumSource::QuotientAssembled, tolerance })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Number of values within `tol` of `target`.
    pub fn count_near(&self, target: f64, tol: f64) -> usize {
        self.values.iter().filter(|v| (*v - target).abs() < tol).count()
    }

    /// `(η₊, η₋)`: the smallest eigenvalue above [`CLASSIFY_EPS`] and the
    /// largest one below `-1 - CLASSIFY_EPS`.
    pub fn eta_extremes(&self) -> (Option<f64>, Option<f64>) {
        let eta_plus = self.values.iter().copied().filter(|&v| v > CLASSIFY_EPS).reduce(f64::min);
        let eta_minus = self
            .values
            .iter()
            .copied()
            .filter(|&v| v < -1.0 - CLASSIFY_EPS)
            .reduce(f64::max);
        (eta_plus, eta_minus)
    }

    /// Largest pairwise difference after sorting; `None` on length mismatch.
    pub fn max_sorted_distance(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }
}

/// Multiplicities of the trivial eigenvalues `0` and `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrivialMults {
    pub mult0: usize,
    pub multm1: usize,
}

impl TrivialMults {
    /// `mul(0) = Σ(m_i - 1) + isolated`,
    /// `mul(-1) = Σ(n_i - 1) + [m_h = 1]`.
    pub fn of(form: &NsgForm) -> Self {
        let mult0 = form.m().iter().map(|m| m - 1).sum::<usize>() + form.isolated();
        let multm1 = match form.m().last() {
            None => 0,
            Some(&mh) => form.n().iter().map(|n| n - 1).sum::<usize>() + usize::from(mh == 1),
        };
        Self { mult0, multm1 }
    }

    pub fn total(&self) -> usize {
        self.mult0 + self.multm1
    }
}

/// See [`TrivialMults::of`].
pub fn trivial_multiplicities(form: &NsgForm) -> TrivialMults {
    TrivialMults::of(form)
}
