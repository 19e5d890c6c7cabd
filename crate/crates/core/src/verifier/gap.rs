use serde::Serialize;

use super::{GAP_HIGH, GAP_LOW};
use crate::error::Result;
use crate::spectral::{Spectrum, SpectrumSource, Tridiagonal, TrivialMults};
use crate::threshold::{CreationSequence, DenseGraph, NsgForm};

/// Half-width of the window kept clear inside `(-1, 0)`.
pub const SUBGAP_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// Eigenvalue-free interval check for one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapReport {
    pub graph: CreationSequence,
    pub order: usize,
    /// Eigenvalues in `(GAP_LOW, GAP_HIGH]`, by Sturm counting.
    pub count_in_interval: usize,
    /// `mul(0) + mul(-1)` from the closed-form multiplicities.
    pub expected_trivial: usize,
    /// Signed distance from the non-trivial eigenvalues to the interval:
    /// positive when all lie outside. `None` when there are none.
    pub min_nontrivial_distance: Option<f64>,
    /// Eigenvalues in `[-1 + 1e-6, -1e-6]`, by Sturm counting.
    pub subgap_count: usize,
    pub eta_plus: Option<f64>,
    pub eta_minus: Option<f64>,
    pub verdict: Verdict,
}

/// Counts eigenvalues of `A(G)` in the interval and compares against the
/// trivial multiplicities. Both `-1` and `0` lie strictly inside.
pub fn check_gap(form: &NsgForm) -> Result<GapReport> {
    let graph = form.to_creation();
    let dense = DenseGraph::from_creation(&graph);
    let tri = Tridiagonal::from_symmetric(&dense.adjacency_matrix())?;
    let count_in_interval = tri.count_leq(GAP_HIGH) - tri.count_leq(GAP_LOW);
    let subgap_count = tri.count_leq(-SUBGAP_MARGIN) - tri.count_leq(-1.0 + SUBGAP_MARGIN);
    let mults = TrivialMults::of(form);

    let values = tri.eigenvalues()?;
    let nontrivial = remove_trivial(values.clone(), mults);
    let min_nontrivial_distance = nontrivial
        .iter()
        .map(|&v| (v - GAP_HIGH).max(GAP_LOW - v))
        .reduce(f64::min);
    let spectrum = Spectrum { values, source: SpectrumSource::Dense, tolerance: 0.0 };
    let (eta_plus, eta_minus) = spectrum.eta_extremes();

    Ok(GapReport {
        order: graph.order(),
        graph,
        count_in_interval,
        expected_trivial: mults.total(),
        min_nontrivial_distance,
        subgap_count,
        eta_plus,
        eta_minus,
        verdict: Verdict::from_bool(count_in_interval == mults.total()),
    })
}

/// Drops the `mult0` values nearest `0` and the `multm1` values nearest `-1`.
fn remove_trivial(mut values: Vec<f64>, mults: TrivialMults) -> Vec<f64> {
    for (target, k) in [(0.0, mults.mult0), (-1.0, mults.multm1)] {
        for _ in 0..k {
            let nearest = values
                .iter()
                .enumerate()
                .min_by(|a, b| (a.1 - target).abs().total_cmp(&(b.1 - target).abs()))
                .map(|(i, _)| i);
            if let Some(i) = nearest {
                values.remove(i);
            }
        }
    }
    values
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nsg_3_2() {
        let r = check_gap(&NsgForm::new(vec![3], vec![2], 0).unwrap()).unwrap();
        assert_eq!((r.count_in_interval, r.expected_trivial), (3, 3));
        assert!(r.verdict.passed());
        let want = (3.0 - GAP_HIGH).min(GAP_LOW + 2.0);
        assert!((r.min_nontrivial_distance.unwrap() - want).abs() < 1e-12);
        assert!((r.min_nontrivial_distance.unwrap() - 0.7929).abs() < 1e-4);
        assert_eq!(r.subgap_count, 0);
    }

    #[test]
    fn k2_and_single_vertex() {
        let r = check_gap(&NsgForm::new(vec![1], vec![1], 0).unwrap()).unwrap();
        assert_eq!((r.count_in_interval, r.expected_trivial), (1, 1));
        assert!(r.verdict.passed());
        let r = check_gap(&NsgForm::new(vec![], vec![], 1).unwrap()).unwrap();
        assert_eq!((r.count_in_interval, r.expected_trivial), (1, 1));
        assert_eq!(r.min_nontrivial_distance, None);
    }

    #[test]
    fn remove_trivial_takes_nearest() {
        let mults = TrivialMults { mult0: 1, multm1: 1 };
        let rest = remove_trivial(vec![2.0, 1e-15, -0.3, -1.0 + 1e-14, -2.0], mults);
        assert_eq!(rest, [2.0, -0.3, -2.0]);
    }
}
