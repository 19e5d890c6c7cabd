use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::{Spectrum, TrivialMults};
use crate::threshold::{ClassTag, DenseGraph, NsgForm};

/// Which multiplicity relation a deletion realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    /// `mul(0,G) = mul(0,H) + 1`, `mul(-1,G) = mul(-1,H)`.
    CaseI,
    /// `mul(0,G) = mul(0,H)`, `mul(-1,G) = mul(-1,H) + 1`.
    CaseII,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub parent: NsgForm,
    pub deleted_class: ClassTag,
    pub child: NsgForm,
    pub case_tag: CaseTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reduction {
    Step(ReductionStep),
    AntiRegular,
}

/// Picks the vertex whose deletion drops exactly one trivial multiplicity.
///
/// * all `n_i = 1`, `m_1..m_{h-1} = 1` and `m_h ≥ 3`: a vertex of `U_h`;
/// * some `n_k ≥ 2` (smallest such `k`): a vertex of `V_k`;
/// * otherwise some `m_j ≥ 2` with `j < h` (smallest `j`): a vertex of `U_j`.
pub fn reducing_vertex(form: &NsgForm) -> Result<Reduction> {
    if form.order() < 2 {
        return Err(Error::OrderTooSmall(form.order()));
    }
    if !form.is_connected() {
        return Err(Error::Disconnected);
    }
    if form.is_anti_regular() {
        return Ok(Reduction::AntiRegular);
    }
    let h = form.h();
    let (m, n) = (form.m(), form.n());
    let (deleted_class, case_tag) = if n.iter().all(|&x| x == 1) && m[..h - 1].iter().all(|&x| x == 1) {
        debug_assert!(m[h - 1] >= 3);
        (ClassTag::U(h), CaseTag::CaseI)
    } else if let Some(k) = n.iter().position(|&x| x >= 2) {
        (ClassTag::V(k + 1), CaseTag::CaseII)
    } else {
        let j = m[..h - 1].iter().position(|&x| x >= 2).expect("some m_j >= 2 with j < h");
        (ClassTag::U(j + 1), CaseTag::CaseI)
    };
    let child = form.delete_from(deleted_class)?;
    Ok(Reduction::Step(ReductionStep { parent: form.clone(), deleted_class, child, case_tag }))
}

/// Exact integer check of the step's multiplicity relation, plus the
/// structural facts the relation rests on.
pub fn check_reduction(step: &ReductionStep) -> bool {
    let g = TrivialMults::of(&step.parent);
    let h = TrivialMults::of(&step.child);
    let relation = match step.case_tag {
        CaseTag::CaseI => g.mult0 == h.mult0 + 1 && g.multm1 == h.multm1,
        CaseTag::CaseII => g.mult0 == h.mult0 && g.multm1 == h.multm1 + 1,
    };
    let child_ok = step
        .parent
        .delete_from(step.deleted_class)
        .is_ok_and(|c| c == step.child);
    relation && child_ok && step.child.order() + 1 == step.parent.order()
}

/// A full reduction from a connected graph down to an anti-regular one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReductionChain {
    pub steps: Vec<ReductionStep>,
    pub terminal: NsgForm,
}

/// Result of walking a chain: per-step checks and η monotonicity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainCheck {
    pub steps_ok: bool,
    /// `η₊(G) ≥ η₊(H) - tol` and `η₋(G) ≤ η₋(H) + tol` wherever defined.
    pub monotone: bool,
    /// `(η₊, η₋)` of the parent of every step, then of the terminal graph.
    pub etas: Vec<(Option<f64>, Option<f64>)>,
}

pub const MONOTONE_TOL: f64 = 1e-8;

/// Iterates [`reducing_vertex`] until an anti-regular graph is reached.
/// Each step removes one vertex, so the chain has fewer than `order` steps.
pub fn reduction_chain(form: &NsgForm) -> Result<ReductionChain> {
    let mut steps = Vec::new();
    let mut current = form.clone();
    loop {
        match reducing_vertex(&current)? {
            Reduction::AntiRegular => return Ok(ReductionChain { steps, terminal: current }),
            Reduction::Step(step) => {
                current = step.child.clone();
                steps.push(step);
            }
        }
    }
}

pub fn check_chain(chain: &ReductionChain) -> Result<ChainCheck> {
    let mut etas = Vec::with_capacity(chain.steps.len() + 1);
    for form in chain.steps.iter().map(|s| &s.parent).chain(std::iter::once(&chain.terminal)) {
        let g = DenseGraph::from_creation(&form.to_creation());
        etas.push(Spectrum::dense(&g)?.eta_extremes());
    }
    let monotone = etas.windows(2).all(|w| {
        let ((gp, gm), (hp, hm)) = (w[0], w[1]);
        let plus = match (gp, hp) {
            (Some(g), Some(h)) => g >= h - MONOTONE_TOL,
            _ => true,
        };
        let minus = match (gm, hm) {
            (Some(g), Some(h)) => g <= h + MONOTONE_TOL,
            _ => true,
        };
        plus && minus
    });
    Ok(ChainCheck { steps_ok: chain.steps.iter().all(check_reduction), monotone, etas })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(m: &[usize], n: &[usize]) -> NsgForm {
        NsgForm::new(m.to_vec(), n.to_vec(), 0).unwrap()
    }

    fn step(f: &NsgForm) -> ReductionStep {
        match reducing_vertex(f).unwrap() {
            Reduction::Step(s) => s,
            Reduction::AntiRegular => panic!("{f} reported anti-regular"),
        }
    }

    #[test]
    fn selection_examples() {
        let s = step(&form(&[1, 3], &[1, 1]));
        assert_eq!((s.deleted_class, s.case_tag), (ClassTag::U(2), CaseTag::CaseI));
        assert_eq!(s.child, form(&[1, 2], &[1, 1]));
        assert!(check_reduction(&s));
        assert_eq!(TrivialMults::of(&s.parent), TrivialMults { mult0: 2, multm1: 0 });
        assert_eq!(TrivialMults::of(&s.child), TrivialMults { mult0: 1, multm1: 0 });

        let s = step(&form(&[3], &[2]));
        assert_eq!((s.deleted_class, s.case_tag), (ClassTag::V(1), CaseTag::CaseII));
        assert_eq!(s.child, form(&[3], &[1]));
        assert!(check_reduction(&s));

        assert_eq!(reducing_vertex(&form(&[1, 2], &[1, 1])).unwrap(), Reduction::AntiRegular);
        assert_eq!(reducing_vertex(&form(&[1], &[1])).unwrap(), Reduction::AntiRegular);

        let s = step(&form(&[2, 1], &[1, 1]));
        assert_eq!((s.deleted_class, s.case_tag), (ClassTag::U(1), CaseTag::CaseI));
        assert!(check_reduction(&s));
    }

    #[test]
    fn corrupted_steps_fail() {
        let mut s = step(&form(&[3], &[2]));
        s.case_tag = CaseTag::CaseI;
        assert!(!check_reduction(&s));
        let mut s = step(&form(&[1, 3], &[1, 1]));
        s.child = form(&[1, 3], &[1, 2]);
        assert!(!check_reduction(&s));
    }

    #[test]
    fn errors() {
        let disc = NsgForm::new(vec![1], vec![1], 1).unwrap();
        assert_eq!(reducing_vertex(&disc), Err(Error::Disconnected));
        let single = NsgForm::new(vec![], vec![], 1).unwrap();
        assert_eq!(reducing_vertex(&single), Err(Error::OrderTooSmall(1)));
    }

    #[test]
    fn chain_from_nsg_3_2() {
        let chain = reduction_chain(&form(&[3], &[2])).unwrap();
        // (3;2) -> (3;1) -> (2;1) = A_3.
        assert_eq!(chain.steps.len(), 2);
        assert_eq!(chain.terminal, form(&[2], &[1]));
        let check = check_chain(&chain).unwrap();
        assert!(check.steps_ok && check.monotone);
    }
}
