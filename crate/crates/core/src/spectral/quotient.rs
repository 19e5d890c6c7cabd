use super::eigen::Matrix;
use crate::error::{Error, Result};
use crate::threshold::NsgForm;

/// Divisor matrix of the equitable partition `{V_1..V_h, U_1..U_h}` and its
/// symmetrization `D^{1/2} B D^{-1/2}` (`D` = diagonal of cell sizes).
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientPair {
    pub raw: Matrix,
    pub symmetrized: Matrix,
    /// `n_1..n_h` followed by `m_1..m_h`.
    pub cell_sizes: Vec<usize>,
}

/// Builds the `2h × 2h` quotient, cells ordered `V_1..V_h, U_1..U_h`.
///
/// Isolated vertices are not part of the partition; callers add their zero
/// eigenvalues separately.
pub fn quotient_matrix(form: &NsgForm) -> Result<QuotientPair> {
    let h = form.h();
    if h == 0 {
        return Err(Error::EmptyNsg);
    }
    let (m, n) = (form.m(), form.n());
    let cell_sizes: Vec<usize> = n.iter().chain(m).copied().collect();
    let raw = Matrix::from_fn(2 * h, |r, c| {
        let entry = match (r < h, c < h) {
            // V_i to V_j: V_1..V_h is a clique.
            (true, true) => {
                let (i, j) = (r, c);
                if i == j { n[j] - 1 } else { n[j] }
            }
            // V_i to U_j: U_j sees V_1..V_j.
            (true, false) => {
                let (i, j) = (r, c - h);
                if j >= i { m[j] } else { 0 }
            }
            (false, true) => {
                let (i, j) = (r - h, c);
                if j <= i { n[j] } else { 0 }
            }
            (false, false) => 0,
        };
        entry as f64
    });
    let symmetrized = Matrix::from_fn(2 * h, |r, c| {
        raw.get(r, c) * (cell_sizes[r] as f64 / cell_sizes[c] as f64).sqrt()
    });
    Ok(QuotientPair { raw, symmetrized, cell_sizes })
}
