use serde::Serialize;

use super::sequence::{CreationSequence, Symbol};

/// Integer weights and threshold with `u ~ v ⇔ w(u) + w(v) > S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightRealization {
    pub threshold: i64,
    pub weights: Vec<i64>,
}

impl WeightRealization {
    /// `w(v_i) = +i` for a dominating symbol and `-i` for an isolated one
    /// (1-based positions), with `S = 0`.
    ///
    /// For `j < i` the sign of `w(v_i) + w(v_j)` is the sign of `w(v_i)`
    /// because `|w(v_i)| > |w(v_j)|`, which is exactly the creation rule.
    pub fn from_creation(seq: &CreationSequence) -> Self {
        let weights = seq
            .symbols()
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let w = i as i64 + 1;
                match s {
                    Symbol::Dominating => w,
                    Symbol::Isolated => -w,
                }
            })
            .collect();
        Self { threshold: 0, weights }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.weights[u] + self.weights[v] > self.threshold
    }
}
