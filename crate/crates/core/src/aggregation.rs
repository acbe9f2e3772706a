//! Group aggregation of expert judgements and the geometric Bonferroni mean.

use crate::error::{Error, Result};
use crate::fuzzy::It2TrFn;
use crate::matrix::Matrix;

/// Per-expert criterion weight vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpertWeightSet {
    pub experts: Vec<String>,
    pub weights: Vec<Vec<It2TrFn>>,
}

/// Per-expert rating matrices (alternatives × criteria).
#[derive(Debug, Clone, PartialEq)]
pub struct ExpertRatingSet {
    pub experts: Vec<String>,
    pub ratings: Vec<Matrix<It2TrFn>>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BonferroniParams {
    r: f64,
    s: f64,
}

impl BonferroniParams {
    pub fn new(r: f64, s: f64) -> Result<Self> {
        if !(r.is_finite() && s.is_finite()) || r < 0.0 || s < 0.0 {
            return Err(Error::InvalidParams(format!(
                "Bonferroni parameters must be non-negative, got r = {r}, s = {s}"
            )));
        }
        if r + s <= 0.0 {
            return Err(Error::InvalidParams("Bonferroni parameters need r + s > 0".into()));
        }
        Ok(BonferroniParams { r, s })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn s(&self) -> f64 {
        self.s
    }
}

impl Default for BonferroniParams {
    fn default() -> Self {
        BonferroniParams { r: 1.0, s: 1.0 }
    }
}

fn expert_name(experts: &[String], k: usize) -> String {
    experts
        .get(k)
        .cloned()
        .unwrap_or_else(|| format!("expert #{}", k + 1))
}

fn mean(values: impl Iterator<Item = It2TrFn>, k: usize) -> It2TrFn {
    let sum = values
        .reduce(|acc, v| acc.add(&v))
        .expect("at least one expert");
    sum.scale(1.0 / k as f64).expect("1/k is positive")
}

/// Averages the experts' weight vectors component-wise.
pub fn average_weights(ws: &ExpertWeightSet) -> Result<Vec<It2TrFn>> {
    let k = ws.weights.len();
    if k == 0 {
        return Err(Error::EmptyInput);
    }
    if !ws.experts.is_empty() && ws.experts.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "{} expert names for {k} weight vectors",
            ws.experts.len()
        )));
    }
    let q = ws.weights[0].len();
    if q == 0 {
        return Err(Error::DimensionMismatch("weight vectors are empty".into()));
    }
    for (e, w) in ws.weights.iter().enumerate() {
        if w.len() != q {
            return Err(Error::DimensionMismatch(format!(
                "{} gives {} weights, expected {q}",
                expert_name(&ws.experts, e),
                w.len()
            )));
        }
    }
    Ok((0..q)
        .map(|j| mean(ws.weights.iter().map(|w| w[j]), k))
        .collect())
}

/// Averages the experts' rating matrices cell-wise.
pub fn average_ratings(rs: &ExpertRatingSet) -> Result<Matrix<It2TrFn>> {
    let k = rs.ratings.len();
    if k == 0 {
        return Err(Error::EmptyInput);
    }
    if !rs.experts.is_empty() && rs.experts.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "{} expert names for {k} rating matrices",
            rs.experts.len()
        )));
    }
    let (p, q) = rs.ratings[0].dim();
    if p == 0 || q == 0 {
        return Err(Error::DimensionMismatch("rating matrix is empty".into()));
    }
    for (e, m) in rs.ratings.iter().enumerate() {
        if m.dim() != (p, q) {
            return Err(Error::DimensionMismatch(format!(
                "{} rating matrix is {}x{}, expected {p}x{q}",
                expert_name(&rs.experts, e),
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(Matrix::from_fn(p, q, |i, j| {
        mean(rs.ratings.iter().map(|m| *m.get(i, j)), k)
    }))
}

fn check_non_negative(values: &[It2TrFn]) -> Result<()> {
    for v in values {
        if let Some(&m) = v.endpoints().iter().find(|&&x| x < 0.0) {
            return Err(Error::NegativeOperand { value: m });
        }
    }
    Ok(())
}

fn min_heights(values: &[It2TrFn]) -> (f64, f64) {
    values.iter().fold((f64::INFINITY, f64::INFINITY), |(u, l), v| {
        (u.min(v.upper().height()), l.min(v.lower().height()))
    })
}

/// Geometric Bonferroni mean of `n ≥ 2` non-negative values.
///
/// Each of the eight endpoint positions is aggregated independently as
/// `1/(r+s) · ∏_{i≠j} (r·x_i + s·x_j)^(1/(n(n−1)))`; heights are the
/// minimum over the inputs.
pub fn tit2fgbm(values: &[It2TrFn], params: BonferroniParams) -> Result<It2TrFn> {
    let n = values.len();
    if n < 2 {
        return Err(Error::TooFewValues { need: 2, got: n });
    }
    check_non_negative(values)?;
    let (r, s) = (params.r, params.s);
    let exponent = 1.0 / (n * (n - 1)) as f64;
    let points: Vec<[f64; 8]> = values.iter().map(It2TrFn::endpoints).collect();
    let mut out = [0.0; 8];
    for (e, slot) in out.iter_mut().enumerate() {
        let mut prod = 1.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    prod *= (r * points[i][e] + s * points[j][e]).powf(exponent);
                }
            }
        }
        *slot = prod / (r + s);
    }
    let (hu, hl) = min_heights(values);
    Ok(It2TrFn::from_endpoints(out, hu, hl))
}

/// Endpoint-wise geometric mean; heights are the minimum over the inputs.
pub fn geometric_mean(values: &[It2TrFn]) -> Result<It2TrFn> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    check_non_negative(values)?;
    let exponent = 1.0 / values.len() as f64;
    let mut out = [1.0; 8];
    for v in values {
        for (slot, x) in out.iter_mut().zip(v.endpoints()) {
            *slot *= x.powf(exponent);
        }
    }
    let (hu, hl) = min_heights(values);
    Ok(It2TrFn::from_endpoints(out, hu, hl))
}
