use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::Spectrum;
use crate::threshold::{ClassTag, CreationSequence, DenseGraph, NsgForm};

/// Slack allowed on each interlacing inequality.
pub const INTERLACING_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlacingReport {
    pub parent: CreationSequence,
    pub child: CreationSequence,
    pub parent_spectrum: Vec<f64>,
    pub child_spectrum: Vec<f64>,
    /// First index `i` (0-based) where `λ_i ≥ μ_i ≥ λ_{i+1}` fails.
    pub witness: Option<usize>,
}

impl InterlacingReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks `λ_i + tol ≥ μ_i` and `μ_i + tol ≥ λ_{i+1}` for descending
/// spectra with `child.len() + 1 == parent.len()`.
pub fn interlacing_violation(parent: &[f64], child: &[f64], tol: f64) -> Option<usize> {
    assert_eq!(parent.len(), child.len() + 1, "child must have one eigenvalue fewer");
    child
        .iter()
        .enumerate()
        .position(|(i, &mu)| parent[i] + tol < mu || mu + tol < parent[i + 1])
}

/// Deletes one vertex of `class` and compares dense spectra.
pub fn check_interlacing(form: &NsgForm, class: ClassTag) -> Result<InterlacingReport> {
    let range = form
        .class_range(class)
        .filter(|r| !r.is_empty())
        .ok_or_else(|| Error::EmptyClass(class.to_string()))?;
    check_interlacing_vertex(&form.to_creation(), range.start)
}

/// Deletes vertex `vertex` of the graph built from `seq`.
pub fn check_interlacing_vertex(seq: &CreationSequence, vertex: usize) -> Result<InterlacingReport> {
    let child = seq.delete_vertex(vertex).ok_or(Error::OrderTooSmall(seq.order()))?;
    let parent_spectrum = Spectrum::dense(&DenseGraph::from_creation(seq))?.values;
    let child_spectrum = Spectrum::dense(&DenseGraph::from_creation(&child))?.values;
    let witness = interlacing_violation(&parent_spectrum, &child_spectrum, INTERLACING_TOL);
    Ok(InterlacingReport { parent: seq.clone(), child, parent_spectrum, child_spectrum, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn nsg_3_2_minus_v1_is_a_star() {
        let f = NsgForm::new(vec![3], vec![2], 0).unwrap();
        let r = check_interlacing(&f, ClassTag::V(1)).unwrap();
        assert!(r.passed());
        let s3 = 3f64.sqrt();
        for (got, want) in r.child_spectrum.iter().zip([s3, 0.0, 0.0, -s3]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn k2() {
        let f = NsgForm::new(vec![1], vec![1], 0).unwrap();
        let r = check_interlacing(&f, ClassTag::V(1)).unwrap();
        assert!(r.passed());
        assert_eq!(r.child_spectrum, [0.0]);
    }

    #[test]
    fn errors_and_negative_case() {
        let f = NsgForm::new(vec![3], vec![2], 0).unwrap();
        assert!(matches!(check_interlacing(&f, ClassTag::U(2)), Err(Error::EmptyClass(_))));
        assert!(matches!(check_interlacing(&f, ClassTag::Isolated), Err(Error::EmptyClass(_))));
        assert_eq!(interlacing_violation(&[1.0, -1.0], &[1.5], 1e-7), Some(0));
        assert_eq!(interlacing_violation(&[1.0, -1.0], &[-1.5], 1e-7), Some(0));
        assert_eq!(interlacing_violation(&[1.0, -1.0], &[0.0], 1e-7), None);
    }

    fn form_and_class() -> impl Strategy<Value = (NsgForm, ClassTag)> {
        (2usize..=14)
            .prop_flat_map(|n| (Just(n), 0u64..(1u64 << (n - 1))))
            .prop_flat_map(|(n, k)| {
                let f = NsgForm::from_creation(&CreationSequence::from_index(n, k));
                let mut classes: Vec<ClassTag> = (1..=f.h()).flat_map(|i| [ClassTag::U(i), ClassTag::V(i)]).collect();
                if f.isolated() > 0 {
                    classes.push(ClassTag::Isolated);
                }
                (Just(f), prop::sample::select(classes))
            })
    }

    proptest! {
        #[test]
        fn random_deletions_interlace((f, class) in form_and_class()) {
            let r = check_interlacing(&f, class).unwrap();
            prop_assert!(r.passed(), "{:?}", r);
        }
    }
}
