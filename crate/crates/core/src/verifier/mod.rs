//! Theorem layer: executable checks of the interlacing, multiplicity and
//! vertex-deletion lemmas, the anti-regular bounds and the eigenvalue-free
//! interval, with exhaustive scans.

mod bounds;
mod gap;
mod interlace;
mod reduction;
mod scan;

pub use bounds::{check_antiregular_bounds, AntiRegularBounds};
pub use gap::{check_gap, GapReport, Verdict, SUBGAP_MARGIN};
pub use interlace::{
    check_interlacing, check_interlacing_vertex, interlacing_violation, InterlacingReport, INTERLACING_TOL,
};
pub use reduction::{
    check_chain, check_reduction, reducing_vertex, reduction_chain, CaseTag, ChainCheck, Reduction,
    ReductionChain, ReductionStep, MONOTONE_TOL,
};
pub use scan::{scan_conjecture, scan_gap, scan_gap_detailed, Extremal, ScanConfig, ScanKind, ScanReport};

/// Lower end of the eigenvalue-free interval, `(-1 - √2) / 2`.
pub const GAP_LOW: f64 = (-1.0 - std::f64::consts::SQRT_2) / 2.0;
/// Upper end of the eigenvalue-free interval, `(-1 + √2) / 2`.
pub const GAP_HIGH: f64 = (-1.0 + std::f64::consts::SQRT_2) / 2.0;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints() {
        assert!((GAP_LOW - -1.2071067811865476).abs() < 1e-15);
        assert!((GAP_HIGH - 0.20710678118654757).abs() < 1e-15);
        assert!(GAP_LOW < -1.0 && GAP_HIGH > 0.0);
    }
}
