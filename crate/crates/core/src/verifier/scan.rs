use rayon::prelude::*;
use serde::Serialize;

use super::gap::{check_gap, GapReport};
use crate::error::{Error, Result};
use crate::spectral::Spectrum;
use crate::threshold::{enumerated_at, enumeration_count, CreationSequence, DenseGraph, NsgForm};

/// Graphs handled per work unit; units are merged in index order.
const CHUNK: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub order_cap: usize,
    pub workers: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self { order_cap: 22, workers: 1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanKind {
    Gap,
    Conjecture,
}

/// An extreme value of η₊ or η₋ and the first graph attaining it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extremal {
    pub value: f64,
    pub sequence: CreationSequence,
}

/// Summary of a scan over all connected threshold graphs of one order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub order: usize,
    pub graphs_checked: u64,
    /// Graphs whose interval count differs from the trivial multiplicities
    /// (gap scans only).
    pub failures: Vec<GapReport>,
    /// Graphs with an eigenvalue in `[-1 + 1e-6, -1e-6]` (gap scans only).
    pub subgap_violations: u64,
    /// Smallest non-trivial distance to the interval over all graphs (gap
    /// scans only).
    pub min_nontrivial_distance: Option<f64>,
    /// Smallest η₊.
    pub extremal_eta_plus: Option<Extremal>,
    /// Largest η₋ among graphs where it is defined.
    pub extremal_eta_minus: Option<Extremal>,
    pub anti_regular: CreationSequence,
    /// Both extremal graphs are the anti-regular graph (a missing η₋
    /// extremum counts as agreement).
    pub conjecture_holds: bool,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        match self.kind {
            ScanKind::Gap => self.failures.is_empty() && self.subgap_violations == 0,
            ScanKind::Conjecture => self.conjecture_holds,
        }
    }
}

#[derive(Default)]
struct Partial {
    checked: u64,
    failures: Vec<GapReport>,
    subgap_violations: u64,
    min_distance: Option<f64>,
    best_plus: Option<(f64, u64)>,
    best_minus: Option<(f64, u64)>,
}

struct GraphSummary {
    gap: Option<GapReport>,
    eta_plus: Option<f64>,
    eta_minus: Option<f64>,
}

fn keep_better(slot: &mut Option<(f64, u64)>, cand: Option<(f64, u64)>, better: impl Fn(f64, f64) -> bool) {
    if let Some((v, i)) = cand {
        match slot {
            Some((best, _)) if !better(v, *best) => {}
            _ => *slot = Some((v, i)),
        }
    }
}

impl Partial {
    fn add(&mut self, index: u64, s: GraphSummary) {
        self.checked += 1;
        if let Some(gap) = s.gap {
            if gap.subgap_count > 0 {
                self.subgap_violations += 1;
            }
            if let Some(d) = gap.min_nontrivial_distance {
                self.min_distance = Some(self.min_distance.map_or(d, |m| m.min(d)));
            }
            if !gap.verdict.passed() {
                self.failures.push(gap);
            }
        }
        keep_better(&mut self.best_plus, s.eta_plus.map(|v| (v, index)), |a, b| a < b);
        keep_better(&mut self.best_minus, s.eta_minus.map(|v| (v, index)), |a, b| a > b);
    }

    /// `other` covers indices after `self`; ties keep the earlier graph.
    fn merge(mut self, other: Partial) -> Partial {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.subgap_violations += other.subgap_violations;
        if let Some(d) = other.min_distance {
            self.min_distance = Some(self.min_distance.map_or(d, |m| m.min(d)));
        }
        keep_better(&mut self.best_plus, other.best_plus, |a, b| a < b);
        keep_better(&mut self.best_minus, other.best_minus, |a, b| a > b);
        self
    }
}

fn validate(order: usize, cfg: &ScanConfig) -> Result<()> {
    if order < 2 {
        return Err(Error::OrderTooSmall(order));
    }
    if order > cfg.order_cap || order > 64 {
        return Err(Error::OrderCapExceeded { order, cap: cfg.order_cap.min(64) });
    }
    Ok(())
}

fn run_parallel<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    Ok(pool.install(job))
}

fn scan(order: usize, cfg: &ScanConfig, kind: ScanKind) -> Result<ScanReport> {
    validate(order, cfg)?;
    let count = enumeration_count(order, true);
    let chunks = count.div_ceil(CHUNK);
    let summarize = |k: u64| -> Result<GraphSummary> {
        let seq = enumerated_at(order, true, k);
        match kind {
            ScanKind::Gap => {
                let gap = check_gap(&NsgForm::from_creation(&seq))?;
                Ok(GraphSummary { eta_plus: gap.eta_plus, eta_minus: gap.eta_minus, gap: Some(gap) })
            }
            ScanKind::Conjecture => {
                let (eta_plus, eta_minus) = Spectrum::dense(&DenseGraph::from_creation(&seq))?.eta_extremes();
                Ok(GraphSummary { gap: None, eta_plus, eta_minus })
            }
        }
    };
    let partials: Vec<Result<Partial>> = run_parallel(cfg.workers, || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut p = Partial::default();
                for k in c * CHUNK..((c + 1) * CHUNK).min(count) {
                    p.add(k, summarize(k)?);
                }
                Ok(p)
            })
            .collect()
    })?;
    let mut total = Partial::default();
    for p in partials {
        total = total.merge(p?);
    }

    let anti_regular = NsgForm::anti_regular(order)?.to_creation();
    let extremal = |best: Option<(f64, u64)>| {
        best.map(|(value, k)| Extremal { value, sequence: enumerated_at(order, true, k) })
    };
    let extremal_eta_plus = extremal(total.best_plus);
    let extremal_eta_minus = extremal(total.best_minus);
    let conjecture_holds = extremal_eta_plus.as_ref().is_some_and(|e| e.sequence == anti_regular)
        && extremal_eta_minus.as_ref().is_none_or(|e| e.sequence == anti_regular);
    Ok(ScanReport {
        kind,
        order,
        graphs_checked: total.checked,
        failures: total.failures,
        subgap_violations: total.subgap_violations,
        min_nontrivial_distance: total.min_distance,
        extremal_eta_plus,
        extremal_eta_minus,
        anti_regular,
        conjecture_holds,
    })
}

/// Runs [`check_gap`] over every connected threshold graph of `order`.
pub fn scan_gap(order: usize, cfg: &ScanConfig) -> Result<ScanReport> {
    scan(order, cfg, ScanKind::Gap)
}

/// Locates the connected graphs of `order` minimizing η₊ and maximizing
/// η₋ and compares them with the anti-regular graph.
pub fn scan_conjecture(order: usize, cfg: &ScanConfig) -> Result<ScanReport> {
    scan(order, cfg, ScanKind::Conjecture)
}

/// Every per-graph [`GapReport`] of a gap scan, in enumeration order.
pub fn scan_gap_detailed(order: usize, cfg: &ScanConfig) -> Result<Vec<GapReport>> {
    validate(order, cfg)?;
    let count = enumeration_count(order, true);
    run_parallel(cfg.workers, || {
        (0..count)
            .into_par_iter()
            .map(|k| check_gap(&NsgForm::from_creation(&enumerated_at(order, true, k))))
            .collect()
    })?
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_scan_counts() {
        let cfg = ScanConfig::default();
        for (order, expect) in [(2, 1), (6, 16), (10, 256)] {
            let r = scan_gap(order, &cfg).unwrap();
            assert_eq!(r.graphs_checked, expect);
            assert!(r.failures.is_empty());
            assert!(r.passed());
        }
    }

    #[test]
    fn conjecture_small_orders() {
        let cfg = ScanConfig::default();
        let r = scan_conjecture(4, &cfg).unwrap();
        assert_eq!(r.extremal_eta_plus.unwrap().sequence.to_string(), "0101");
        assert_eq!(r.extremal_eta_minus.unwrap().sequence.to_string(), "0101");
        let r = scan_conjecture(5, &cfg).unwrap();
        assert_eq!(r.graphs_checked, 8);
        assert_eq!(r.extremal_eta_plus.as_ref().unwrap().sequence.to_string(), "00101");
        assert_eq!(r.extremal_eta_minus.as_ref().unwrap().sequence.to_string(), "00101");
        assert!(r.conjecture_holds);
        let r = scan_conjecture(2, &cfg).unwrap();
        assert_eq!(r.graphs_checked, 1);
        assert!(r.conjecture_holds);
        assert_eq!(r.extremal_eta_minus, None);
    }

    #[test]
    fn worker_count_does_not_change_reports() {
        let one = scan_gap(12, &ScanConfig { workers: 1, ..Default::default() }).unwrap();
        let four = scan_gap(12, &ScanConfig { workers: 4, ..Default::default() }).unwrap();
        assert_eq!(one, four);
        let detailed = scan_gap_detailed(8, &ScanConfig { workers: 3, ..Default::default() }).unwrap();
        assert_eq!(detailed.len(), 64);
        assert!(detailed.windows(2).all(|w| w[0].graph < w[1].graph));
    }

    #[test]
    fn order_limits() {
        let cfg = ScanConfig { order_cap: 8, workers: 1 };
        assert_eq!(scan_gap(9, &cfg), Err(Error::OrderCapExceeded { order: 9, cap: 8 }));
        assert_eq!(scan_conjecture(1, &cfg), Err(Error::OrderTooSmall(1)));
    }
}
