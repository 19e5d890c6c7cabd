use serde::Serialize;

use super::{GAP_HIGH, GAP_LOW};
use crate::error::Result;
use crate::spectral::Spectrum;
use crate::threshold::NsgForm;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AntiRegularBounds {
    pub order: usize,
    /// Absent for orders with no eigenvalue below `-1` (the bound is then
    /// vacuous).
    pub eta_minus: Option<f64>,
    pub eta_plus: Option<f64>,
    pub passed: bool,
}

impl AntiRegularBounds {
    /// Distance of `η₋` below the lower end, `None` if vacuous.
    pub fn minus_margin(&self) -> Option<f64> {
        self.eta_minus.map(|e| GAP_LOW - e)
    }

    pub fn plus_margin(&self) -> Option<f64> {
        self.eta_plus.map(|e| e - GAP_HIGH)
    }
}

/// `η₋(A_n) < (-1-√2)/2` (when defined) and `η₊(A_n) > (-1+√2)/2`, using
/// the quotient-assembled spectrum.
pub fn check_antiregular_bounds(order: usize) -> Result<AntiRegularBounds> {
    let form = NsgForm::anti_regular(order)?;
    let (eta_plus, eta_minus) = Spectrum::assemble(&form)?.eta_extremes();
    let minus_ok = eta_minus.is_none_or(|e| e < GAP_LOW);
    let plus_ok = eta_plus.is_some_and(|e| e > GAP_HIGH);
    Ok(AntiRegularBounds { order, eta_minus, eta_plus, passed: minus_ok && plus_ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn small_orders() {
        let a4 = check_antiregular_bounds(4).unwrap();
        assert!(a4.passed);
        assert!((a4.eta_plus.unwrap() - 0.311107817465980).abs() < 1e-9);
        assert!((a4.eta_minus.unwrap() + 1.481194304092014).abs() < 1e-9);

        let a3 = check_antiregular_bounds(3).unwrap();
        let s2 = 2f64.sqrt();
        assert!(a3.passed);
        assert!((a3.eta_plus.unwrap() - s2).abs() < 1e-12);
        assert!((a3.eta_minus.unwrap() + s2).abs() < 1e-12);

        let a2 = check_antiregular_bounds(2).unwrap();
        assert!(a2.passed);
        assert_eq!(a2.eta_minus, None);
        assert!((a2.eta_plus.unwrap() - 1.0).abs() < 1e-12);

        assert_eq!(check_antiregular_bounds(1), Err(Error::OrderTooSmall(1)));
    }
}
