//! Rank-based distance of an IT2TrFN to the crisp unit.

use crate::error::{Error, Result};
use crate::fuzzy::It2TrFn;

/// Attitude parameter λ ∈ [0, 1] weighting the support spreads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankParams {
    lambda: f64,
}

impl RankParams {
    pub fn new(lambda: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidParams(format!(
                "lambda must lie in [0, 1], got {lambda}"
            )));
        }
        Ok(RankParams { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

impl Default for RankParams {
    fn default() -> Self {
        RankParams { lambda: 0.5 }
    }
}

/// Signed rank-based distance `R_d(v, 1)`.
///
/// With upper `(u1..u4; hu)` and lower `(l1..l4; hl)`:
///
/// ```text
/// R_d = 1 − l4 − λ(l1 − u1 + u4 − l4)
///       − [hu·(λ(l2 − l1 − u2 + u1) − (l4 − l3 − l2 + l1)) − hl·(u4 − u3 − l4 + l3)] / (2·hu·hl)
/// ```
///
/// Every bracketed term is a difference of matching upper/lower spreads, so
/// crisp inputs reduce to `1 − c`.
pub fn rank_to_one(v: &It2TrFn, params: RankParams) -> Result<f64> {
    let [u1, u2, u3, u4] = v.upper().endpoints();
    let [l1, l2, l3, l4] = v.lower().endpoints();
    let hu = v.upper().height();
    let hl = v.lower().height();
    if hu * hl == 0.0 {
        return Err(Error::ZeroHeight);
    }
    let lambda = params.lambda;
    let spread = hu * (lambda * (l2 - l1 - u2 + u1) - (l4 - l3 - l2 + l1)) - hl * (u4 - u3 - l4 + l3);
    Ok(1.0 - l4 - lambda * (l1 - u1 + u4 - l4) - spread / (2.0 * hu * hl))
}

/// `|R_d(a, 1) − R_d(b, 1)|`.
pub fn distance(a: &It2TrFn, b: &It2TrFn, params: RankParams) -> Result<f64> {
    Ok((rank_to_one(a, params)? - rank_to_one(b, params)?).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crisp_values() {
        let p = RankParams::default();
        assert_eq!(rank_to_one(&It2TrFn::ONE, p).unwrap(), 0.0);
        for c in [0.0, 0.3, 2.5] {
            let r = rank_to_one(&It2TrFn::crisp_const(c), p).unwrap();
            assert!((r - (1.0 - c)).abs() < 1e-12);
            let d = distance(&It2TrFn::ONE, &It2TrFn::crisp_const(c), p).unwrap();
            assert!((d - (c - 1.0).abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn weighted_cell_value() {
        // A1/C1 of the printed weighted matrix, frozen from a straight-line
        // scalar evaluation (hand-checked term by term).
        let v = It2TrFn::from_arrays([0.70, 1.30, 1.30, 2.00, 1.0], [0.88, 1.30, 1.30, 1.94, 0.9])
            .unwrap();
        let r = rank_to_one(&v, RankParams::default()).unwrap();
        assert!((r - (-0.857_777_777_777_8)).abs() < 1e-9, "{r}");
    }

    #[test]
    fn distance_basics() {
        let p = RankParams::new(0.3).unwrap();
        let a = It2TrFn::from_arrays([0.1, 0.4, 0.5, 0.9, 1.0], [0.2, 0.4, 0.5, 0.7, 0.6]).unwrap();
        let b = It2TrFn::from_arrays([1.0, 1.2, 1.4, 2.0, 0.9], [1.1, 1.2, 1.4, 1.6, 0.9]).unwrap();
        assert_eq!(distance(&a, &a, p).unwrap(), 0.0);
        assert_eq!(distance(&a, &b, p).unwrap(), distance(&b, &a, p).unwrap());
    }

    #[test]
    fn lambda_validated() {
        assert!(RankParams::new(1.5).is_err());
        assert!(RankParams::new(-0.1).is_err());
        assert!(RankParams::new(f64::NAN).is_err());
        assert!(RankParams::new(0.0).is_ok());
        assert!(RankParams::new(1.0).is_ok());
    }
}
