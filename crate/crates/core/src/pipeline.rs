//! MABAC steps after aggregation: normalization, weighting, border
//! approximation area, crisp distances, classification and ranking.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::aggregation::{geometric_mean, tit2fgbm, BonferroniParams};
use crate::error::{Error, Result, Stage};
use crate::fuzzy::{It2TrFn, TOLERANCE};
use crate::matrix::Matrix;
use crate::rank::{rank_to_one, RankParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Benefit,
    Cost,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub name: String,
    pub sense: Sense,
}

impl CriterionSpec {
    pub fn benefit(name: impl Into<String>) -> Self {
        CriterionSpec { name: name.into(), sense: Sense::Benefit }
    }

    pub fn cost(name: impl Into<String>) -> Self {
        CriterionSpec { name: name.into(), sense: Sense::Cost }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NormalizedMatrix(pub Matrix<It2TrFn>);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightedMatrix(pub Matrix<It2TrFn>);

/// One border approximation area per criterion; the comparison matrix is
/// this vector repeated on every row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BaaVector(pub Vec<It2TrFn>);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrispMatrices {
    /// `|R_d(v_ij, 1)|`
    pub q: Matrix<f64>,
    /// `|R_d(g_j, 1)|`
    pub g: Vec<f64>,
    /// `q_ij − g_j`
    pub delta: Matrix<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Area {
    /// Upper approximation area, `d − g > 0`.
    #[serde(rename = "UAA")]
    Upper,
    #[serde(rename = "BAA")]
    Border,
    #[serde(rename = "LAA")]
    Lower,
}

impl fmt::Display for Area {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Area::Upper => "G+",
            Area::Border => "G",
            Area::Lower => "G-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingResult {
    pub classification: Matrix<Area>,
    pub scores: Vec<f64>,
    /// Alternative indices by decreasing score.
    pub order: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BaaOperator {
    Bonferroni(BonferroniParams),
    GeometricMean,
}

impl Default for BaaOperator {
    fn default() -> Self {
        BaaOperator::Bonferroni(BonferroniParams::default())
    }
}

fn criterion_label(specs: Option<&[CriterionSpec]>, j: usize) -> String {
    match specs.and_then(|s| s.get(j)) {
        Some(c) => format!("criterion {}", c.name),
        None => format!("criterion #{}", j + 1),
    }
}

/// `(min_i upper a1, max_i upper a4)` over column `j`.
pub fn column_range(avg: &Matrix<It2TrFn>, j: usize) -> Result<(f64, f64)> {
    if avg.rows() == 0 {
        return Err(Error::EmptyInput);
    }
    if j >= avg.cols() {
        return Err(Error::DimensionMismatch(format!(
            "column {} requested from a matrix with {} columns",
            j + 1,
            avg.cols()
        )));
    }
    let (lo, hi) = avg.column(j).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        let [a1, _, _, a4] = v.upper().endpoints();
        (lo.min(a1), hi.max(a4))
    });
    if (hi - lo).abs() < TOLERANCE {
        return Err(Error::DegenerateRange {
            column: format!("#{}", j + 1),
            value: lo,
        });
    }
    Ok((lo, hi))
}

/// Linear rescaling of every column against its upper-trapezoid range.
/// Lower trapezoids share the upper-derived range and are not clipped.
pub fn normalize(avg: &Matrix<It2TrFn>, specs: &[CriterionSpec]) -> Result<NormalizedMatrix> {
    let (p, q) = avg.dim();
    if specs.len() != q {
        return Err(Error::DimensionMismatch(format!(
            "{} criteria for a matrix with {q} columns",
            specs.len()
        ))
        .at(Stage::Normalize, None));
    }
    let mut ranges = Vec::with_capacity(q);
    for (j, spec) in specs.iter().enumerate() {
        let range = column_range(avg, j).map_err(|e| match e {
            Error::DegenerateRange { value, .. } => Error::DegenerateRange {
                column: spec.name.clone(),
                value,
            },
            e => e,
        });
        ranges.push(range.map_err(|e| e.at(Stage::Normalize, criterion_label(Some(specs), j)))?);
    }
    Ok(NormalizedMatrix(Matrix::from_fn(p, q, |i, j| {
        let (lo, hi) = ranges[j];
        let width = hi - lo;
        let v = avg.get(i, j);
        let [u1, u2, u3, u4, l1, l2, l3, l4] = v.endpoints();
        let e = match specs[j].sense {
            Sense::Benefit => [u1, u2, u3, u4, l1, l2, l3, l4].map(|x| (x - lo) / width),
            Sense::Cost => [u4, u3, u2, u1, l4, l3, l2, l1].map(|x| (hi - x) / width),
        };
        It2TrFn::from_endpoints(e, v.upper().height(), v.lower().height())
    })))
}

/// `v_ij = w_j ⊗ (n_ij ⊕ 1)`.
pub fn weight(norm: &NormalizedMatrix, weights: &[It2TrFn]) -> Result<WeightedMatrix> {
    let m = &norm.0;
    if weights.len() != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights for {} criteria",
            weights.len(),
            m.cols()
        ))
        .at(Stage::Weight, None));
    }
    let out = Matrix::try_from_fn(m.rows(), m.cols(), |i, j| {
        weights[j].mul(&m.get(i, j).add(&It2TrFn::ONE)).map_err(|e| {
            e.at(
                Stage::Weight,
                format!("alternative #{}, {}", i + 1, criterion_label(None, j)),
            )
        })
    })?;
    Ok(WeightedMatrix(out))
}

/// Border approximation area of every column.
pub fn baa(weighted: &WeightedMatrix, op: BaaOperator) -> Result<BaaVector> {
    let m = &weighted.0;
    let mut out = Vec::with_capacity(m.cols());
    for j in 0..m.cols() {
        let column: Vec<It2TrFn> = m.column(j).copied().collect();
        let g = match op {
            BaaOperator::Bonferroni(params) => tit2fgbm(&column, params),
            BaaOperator::GeometricMean => geometric_mean(&column),
        };
        out.push(g.map_err(|e| e.at(Stage::BorderArea, criterion_label(None, j)))?);
    }
    Ok(BaaVector(out))
}

pub fn crisp_matrices(
    weighted: &WeightedMatrix,
    baa: &BaaVector,
    params: RankParams,
) -> Result<CrispMatrices> {
    let m = &weighted.0;
    if baa.0.len() != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{} border areas for {} criteria",
            baa.0.len(),
            m.cols()
        ))
        .at(Stage::Distances, None));
    }
    let q = Matrix::try_from_fn(m.rows(), m.cols(), |i, j| {
        rank_to_one(m.get(i, j), params).map(f64::abs).map_err(|e| {
            e.at(
                Stage::Distances,
                format!("alternative #{}, {}", i + 1, criterion_label(None, j)),
            )
        })
    })?;
    let g = baa
        .0
        .iter()
        .enumerate()
        .map(|(j, v)| {
            rank_to_one(v, params)
                .map(f64::abs)
                .map_err(|e| e.at(Stage::Distances, format!("border area of {}", criterion_label(None, j))))
        })
        .collect::<Result<Vec<_>>>()?;
    let delta = Matrix::from_fn(q.rows(), q.cols(), |i, j| q.get(i, j) - g[j]);
    Ok(CrispMatrices { q, g, delta })
}

pub fn classify(delta: f64) -> Area {
    if delta.abs() < TOLERANCE {
        Area::Border
    } else if delta > 0.0 {
        Area::Upper
    } else {
        Area::Lower
    }
}

/// Area membership per cell, row sums of `delta` as scores, and the order
/// of alternatives by decreasing score (ties keep declaration order).
pub fn classify_and_score(cm: &CrispMatrices) -> RankingResult {
    let classification = cm.delta.map(|&d| classify(d));
    let scores: Vec<f64> = cm.delta.iter_rows().map(|row| row.iter().sum()).collect();
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));
    RankingResult {
        classification,
        scores,
        order,
    }
}

/// Settings for steps 3–7.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PipelineConfig {
    pub rank: RankParams,
    pub baa: BaaOperator,
}

/// Every intermediate of steps 3–7.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub normalized: NormalizedMatrix,
    pub weighted: WeightedMatrix,
    pub baa: BaaVector,
    pub crisp: CrispMatrices,
    pub ranking: RankingResult,
}

/// Runs normalization through ranking on an aggregated decision matrix.
pub fn evaluate(
    decisions: &Matrix<It2TrFn>,
    weights: &[It2TrFn],
    specs: &[CriterionSpec],
    config: PipelineConfig,
) -> Result<Evaluation> {
    let normalized = normalize(decisions, specs)?;
    let weighted = weight(&normalized, weights)?;
    let baa = baa(&weighted, config.baa)?;
    let crisp = crisp_matrices(&weighted, &baa, config.rank)?;
    let ranking = classify_and_score(&crisp);
    Ok(Evaluation {
        normalized,
        weighted,
        baa,
        crisp,
        ranking,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linguistic::builtin_rating_scale;

    fn v(u: [f64; 4], l: [f64; 4]) -> It2TrFn {
        It2TrFn::from_arrays([u[0], u[1], u[2], u[3], 1.0], [l[0], l[1], l[2], l[3], 0.9]).unwrap()
    }

    fn col(vals: Vec<It2TrFn>) -> Matrix<It2TrFn> {
        Matrix::from_rows(vals.into_iter().map(|x| vec![x]).collect()).unwrap()
    }

    #[test]
    fn ranges() {
        let m = col(vec![
            v([5.67, 7.67, 7.67, 9.33], [6.67, 7.67, 7.67, 8.5]),
            v([6.33, 8.33, 8.33, 9.67], [7.33, 8.33, 8.33, 9.0]),
            v([6.33, 8.0, 8.0, 9.0], [7.17, 8.0, 8.0, 8.5]),
        ]);
        assert_eq!(column_range(&m, 0).unwrap(), (5.67, 9.67));
        let f = builtin_rating_scale().resolve("F").unwrap();
        assert_eq!(column_range(&col(vec![f]), 0).unwrap(), (3.0, 7.0));
        let c = col(vec![It2TrFn::crisp_const(2.0), It2TrFn::crisp_const(2.0)]);
        assert!(matches!(column_range(&c, 0), Err(Error::DegenerateRange { .. })));
    }

    #[test]
    fn normalize_benefit_and_cost() {
        let vg = builtin_rating_scale().resolve("VG").unwrap();
        let lo = v([5.0, 7.0, 7.0, 8.67], [6.0, 7.0, 7.0, 7.83]);
        let n = normalize(&col(vec![lo, vg]), &[CriterionSpec::benefit("C2")]).unwrap();
        let u = n.0.get(1, 0).upper().endpoints();
        assert!((u[0] - 0.8).abs() < 1e-12);
        assert_eq!(&u[1..], &[1.0, 1.0, 1.0]);
        assert_eq!(n.0.get(0, 0).upper().endpoints()[0], 0.0);

        let f = builtin_rating_scale().resolve("F").unwrap();
        let n = normalize(&col(vec![f]), &[CriterionSpec::cost("C")]).unwrap();
        assert_eq!(n.0.get(0, 0).upper().endpoints(), [0.0, 0.5, 0.5, 1.0]);
        // lower (4,5,5,6) reflected against the upper range (3,7)
        assert_eq!(n.0.get(0, 0).lower().endpoints(), [0.25, 0.5, 0.5, 0.75]);
        assert_eq!(n.0.get(0, 0).lower().height(), 0.9);
    }

    #[test]
    fn degenerate_column_names_criterion() {
        let c = col(vec![It2TrFn::crisp_const(2.0), It2TrFn::crisp_const(2.0)]);
        let e = normalize(&c, &[CriterionSpec::benefit("Speed")]).unwrap_err();
        assert_eq!(e.stage(), Some(Stage::Normalize));
        assert!(e.to_string().contains("Speed"), "{e}");
    }

    #[test]
    fn weighting() {
        let n = NormalizedMatrix(col(vec![
            v([0.8, 1.0, 1.0, 1.0], [0.9, 1.0, 1.0, 1.0]),
            v([0.0, 0.4, 0.4, 0.7], [0.2, 0.4, 0.4, 0.6]),
        ]));
        let w = v([0.9, 1.0, 1.0, 1.0], [0.95, 1.0, 1.0, 1.0]);
        let out = weight(&n, &[w]).unwrap();
        let u = out.0.get(0, 0).upper().endpoints();
        assert!((u[0] - 1.62).abs() < 1e-12);
        assert_eq!(&u[1..], &[2.0, 2.0, 2.0]);

        let zero = weight(&n, &[It2TrFn::ZERO]).unwrap();
        assert!(zero.0.column(0).all(|x| x.endpoints() == [0.0; 8]));
        assert!(matches!(
            weight(&n, &[w, w]).unwrap_err().root(),
            Error::DimensionMismatch(_)
        ));
    }

    #[test]
    fn border_area_and_crisp() {
        let a = v([0.70, 1.30, 1.30, 1.85], [0.98, 1.30, 1.30, 1.57]);
        let w = WeightedMatrix(col(vec![a, a, a]));
        let g = baa(&w, BaaOperator::default()).unwrap();
        assert!(g.0[0].max_abs_diff(&a) < 1e-9);
        let cm = crisp_matrices(&w, &g, RankParams::default()).unwrap();
        for i in 0..3 {
            assert!(cm.delta.get(i, 0).abs() < 1e-9);
        }
        let r = classify_and_score(&cm);
        assert!(r.classification.column(0).all(|&c| c == Area::Border));

        let one = WeightedMatrix(col(vec![It2TrFn::ONE, a]));
        let cm = crisp_matrices(&one, &BaaVector(vec![a]), RankParams::default()).unwrap();
        assert_eq!(*cm.q.get(0, 0), 0.0);

        let single = WeightedMatrix(col(vec![a]));
        let e = baa(&single, BaaOperator::default()).unwrap_err();
        assert_eq!(e.root(), &Error::TooFewValues { need: 2, got: 1 });
        assert!(baa(&single, BaaOperator::GeometricMean).is_ok());
    }

    #[test]
    fn scoring_and_ties() {
        let delta = Matrix::from_rows(vec![
            vec![0.0, 0.0],
            vec![0.0, 0.0],
            vec![0.0, 0.0],
        ])
        .unwrap();
        let cm = CrispMatrices {
            q: delta.clone(),
            g: vec![0.0, 0.0],
            delta,
        };
        let r = classify_and_score(&cm);
        assert_eq!(r.order, vec![0, 1, 2]);
        assert_eq!(r.scores, vec![0.0; 3]);

        let row = [0.15, 0.59, 0.52, -0.07, 0.19];
        let delta = Matrix::from_rows(vec![row.to_vec(), vec![0.0; 5]]).unwrap();
        let cm = CrispMatrices { q: delta.clone(), g: vec![0.0; 5], delta };
        let r = classify_and_score(&cm);
        assert!((r.scores[0] - 1.38).abs() < 1e-12);
        assert_eq!(r.order, vec![0, 1]);
        assert_eq!(*r.classification.get(0, 3), Area::Lower);
        assert_eq!(*r.classification.get(0, 0), Area::Upper);
        assert_eq!(classify(5e-10), Area::Border);
    }
}
