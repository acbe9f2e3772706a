//! Decision problem files and end-to-end execution.
//!
//! A problem is a TOML document; see `docs/problem-format.md` for the
//! grammar. Parsing resolves every linguistic term and checks every
//! dimension, so [`run`] only fails on numerical grounds.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::aggregation::{average_ratings, average_weights, BonferroniParams, ExpertRatingSet, ExpertWeightSet};
use crate::error::{Error, Result, Stage};
use crate::fuzzy::{It2TrFn, Trapezoid};
use crate::linguistic::{builtin_rating_scale, builtin_weight_scale, LinguisticScale, ScaleFile};
use crate::matrix::Matrix;
use crate::pipeline::{
    evaluate, Area, BaaOperator, BaaVector, CriterionSpec, NormalizedMatrix, PipelineConfig, Sense,
    WeightedMatrix,
};
use crate::rank::RankParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaaKind {
    #[default]
    Bonferroni,
    Geomean,
}

impl fmt::Display for BaaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaaKind::Bonferroni => "bonferroni",
            BaaKind::Geomean => "geomean",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub lambda: f64,
    pub r: f64,
    pub s: f64,
    pub baa: BaaKind,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            lambda: 0.5,
            r: 1.0,
            s: 1.0,
            baa: BaaKind::Bonferroni,
        }
    }
}

impl Params {
    pub fn validate(&self) -> Result<PipelineConfig> {
        let rank = RankParams::new(self.lambda)?;
        let bonferroni = BonferroniParams::new(self.r, self.s)?;
        let baa = match self.baa {
            BaaKind::Bonferroni => BaaOperator::Bonferroni(bonferroni),
            BaaKind::Geomean => BaaOperator::GeometricMean,
        };
        Ok(PipelineConfig { rank, baa })
    }
}

/// A validated group decision problem.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem {
    pub title: Option<String>,
    pub alternatives: Vec<String>,
    pub criteria: Vec<CriterionSpec>,
    pub experts: Vec<String>,
    pub weight_scale: LinguisticScale,
    pub rating_scale: LinguisticScale,
    /// One weight vector per expert, in `experts` order.
    pub expert_weights: Vec<Vec<It2TrFn>>,
    /// One alternatives × criteria matrix per expert.
    pub expert_ratings: Vec<Matrix<It2TrFn>>,
    pub params: Params,
}

// --- file shape -----------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    title: Option<String>,
    alternatives: Vec<String>,
    experts: Vec<String>,
    criteria: Vec<CriterionEntry>,
    #[serde(default)]
    params: ParamsEntry,
    weight_scale: Option<ScaleRef>,
    rating_scale: Option<ScaleRef>,
    weights: BTreeMap<String, Spanned<Vec<Judgement>>>,
    ratings: BTreeMap<String, BTreeMap<String, Spanned<Vec<Judgement>>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CriterionEntry {
    name: String,
    #[serde(default)]
    #[allow(dead_code)]
    description: Option<String>,
    #[serde(default = "benefit")]
    sense: Sense,
}

fn benefit() -> Sense {
    Sense::Benefit
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsEntry {
    lambda: Option<f64>,
    r: Option<f64>,
    s: Option<f64>,
    baa: Option<BaaKind>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ScaleRef {
    Builtin(String),
    Inline(ScaleFile),
}

/// A single rating: a linguistic term or an inline `[[upper], [lower]]`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Judgement {
    Term(String),
    Value([[f64; 5]; 2]),
}

// --- parsing --------------------------------------------------------------

struct Source<'a> {
    text: &'a str,
}

impl Source<'_> {
    fn position(&self, span: Range<usize>) -> String {
        let before = &self.text[..span.start.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.len() - before.rfind('\n').map_or(0, |p| p + 1) + 1;
        format!("line {line}, column {column}")
    }
}

fn parse_error(e: Error, cell: impl Into<Option<String>>) -> Error {
    e.at(Stage::Parse, cell)
}

fn invalid(msg: impl Into<String>) -> Error {
    parse_error(Error::InvalidParams(msg.into()), None)
}

fn unique(kind: &str, names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(invalid(format!("at least one {kind} is required")));
    }
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(invalid(format!("duplicate {kind} name {n:?}")));
        }
    }
    Ok(())
}

fn load_scale(r: Option<ScaleRef>, default: fn() -> LinguisticScale) -> Result<LinguisticScale> {
    match r {
        None => Ok(default()),
        Some(ScaleRef::Builtin(name)) => match name.as_str() {
            "builtin:weights" => Ok(builtin_weight_scale()),
            "builtin:ratings" => Ok(builtin_rating_scale()),
            other => Err(invalid(format!(
                "unknown builtin scale {other:?} (expected \"builtin:weights\" or \"builtin:ratings\")"
            ))),
        },
        Some(ScaleRef::Inline(file)) => LinguisticScale::try_from(file).map_err(|e| parse_error(e, None)),
    }
}

fn resolve(scale: &LinguisticScale, j: &Judgement) -> Result<It2TrFn> {
    match j {
        Judgement::Term(t) => scale.resolve(t),
        Judgement::Value([u, l]) => {
            let upper = Trapezoid::try_from(*u)?;
            let lower = Trapezoid::try_from(*l)?;
            It2TrFn::new(upper, lower)
        }
    }
}

fn check_keys<'a>(
    kind: &str,
    where_: &str,
    declared: &[String],
    present: impl Iterator<Item = &'a String>,
) -> Result<()> {
    let declared_set: HashSet<&str> = declared.iter().map(String::as_str).collect();
    let present: Vec<&String> = present.collect();
    for k in &present {
        if !declared_set.contains(k.as_str()) {
            return Err(invalid(format!("{where_}: undeclared {kind} {k:?}")));
        }
    }
    for d in declared {
        if !present.contains(&d) {
            return Err(parse_error(
                Error::DimensionMismatch(format!("{where_}: missing {kind} {d:?}")),
                None,
            ));
        }
    }
    Ok(())
}

/// Parses and validates a problem document.
pub fn parse_problem(source: &str) -> Result<DecisionProblem> {
    let src = Source { text: source };
    let file: ProblemFile = toml::from_str(source).map_err(|e| parse_error(Error::Syntax(e.to_string()), None))?;

    unique("alternative", &file.alternatives)?;
    unique("expert", &file.experts)?;
    let criteria: Vec<CriterionSpec> = file
        .criteria
        .into_iter()
        .map(|c| CriterionSpec { name: c.name, sense: c.sense })
        .collect();
    let names: Vec<String> = criteria.iter().map(|c| c.name.clone()).collect();
    unique("criterion", &names)?;
    let q = criteria.len();

    let defaults = Params::default();
    let params = Params {
        lambda: file.params.lambda.unwrap_or(defaults.lambda),
        r: file.params.r.unwrap_or(defaults.r),
        s: file.params.s.unwrap_or(defaults.s),
        baa: file.params.baa.unwrap_or(defaults.baa),
    };
    params.validate().map_err(|e| parse_error(e, None))?;

    let weight_scale = load_scale(file.weight_scale, builtin_weight_scale)?;
    let rating_scale = load_scale(file.rating_scale, builtin_rating_scale)?;

    check_keys("expert", "[weights]", &file.experts, file.weights.keys())?;
    let mut expert_weights = Vec::with_capacity(file.experts.len());
    for expert in &file.experts {
        let row = &file.weights[expert];
        let at = format!("expert {expert} ({})", src.position(row.span()));
        let values = row.get_ref();
        if values.len() != q {
            return Err(parse_error(
                Error::DimensionMismatch(format!("{} weights for {q} criteria", values.len())),
                at,
            ));
        }
        let resolved = values
            .iter()
            .zip(&criteria)
            .map(|(j, c)| {
                resolve(&weight_scale, j).map_err(|e| {
                    parse_error(e, format!("expert {expert}, criterion {} ({})", c.name, src.position(row.span())))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        expert_weights.push(resolved);
    }

    check_keys("expert", "[ratings]", &file.experts, file.ratings.keys())?;
    let mut expert_ratings = Vec::with_capacity(file.experts.len());
    for expert in &file.experts {
        let table = &file.ratings[expert];
        check_keys("alternative", &format!("[ratings.{expert}]"), &file.alternatives, table.keys())?;
        let mut rows = Vec::with_capacity(file.alternatives.len());
        for alt in &file.alternatives {
            let row = &table[alt];
            let pos = src.position(row.span());
            let values = row.get_ref();
            if values.len() != q {
                return Err(parse_error(
                    Error::DimensionMismatch(format!("{} ratings for {q} criteria", values.len())),
                    format!("expert {expert}, alternative {alt} ({pos})"),
                ));
            }
            let resolved = values
                .iter()
                .zip(&criteria)
                .map(|(j, c)| {
                    resolve(&rating_scale, j).map_err(|e| {
                        parse_error(e, format!("expert {expert}, alternative {alt}, criterion {} ({pos})", c.name))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(resolved);
        }
        expert_ratings.push(Matrix::from_rows(rows).expect("rows checked above"));
    }

    Ok(DecisionProblem {
        title: file.title,
        alternatives: file.alternatives,
        criteria,
        experts: file.experts,
        weight_scale,
        rating_scale,
        expert_weights,
        expert_ratings,
        params,
    })
}

// --- execution ------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineTrace {
    pub alternatives: Vec<String>,
    pub criteria: Vec<CriterionSpec>,
    pub params: Params,
    pub aggregated_weights: Vec<It2TrFn>,
    pub aggregated_decisions: Matrix<It2TrFn>,
    pub normalized: NormalizedMatrix,
    pub weighted: WeightedMatrix,
    pub baa: BaaVector,
    pub q: Matrix<f64>,
    pub g: Vec<f64>,
    pub delta: Matrix<f64>,
    pub classification: Matrix<Area>,
    pub scores: Vec<f64>,
    /// Alternative indices, best first.
    pub order: Vec<usize>,
}

impl PipelineTrace {
    /// Alternative names, best first.
    pub fn ranking(&self) -> Vec<&str> {
        self.order.iter().map(|&i| self.alternatives[i].as_str()).collect()
    }

    /// 1-based rank of every alternative in declaration order.
    pub fn ranks(&self) -> Vec<usize> {
        let mut r = vec![0; self.order.len()];
        for (pos, &i) in self.order.iter().enumerate() {
            r[i] = pos + 1;
        }
        r
    }
}

fn label_stage(e: Error, p: &DecisionProblem) -> Error {
    // Replace positional cell labels with declared names.
    match e {
        Error::InStage { stage, cell, source } => {
            let cell = cell.map(|c| {
                let mut c = c;
                for (i, a) in p.alternatives.iter().enumerate().rev() {
                    c = c.replace(&format!("alternative #{}", i + 1), &format!("alternative {a}"));
                }
                for (j, k) in p.criteria.iter().enumerate().rev() {
                    c = c.replace(&format!("criterion #{}", j + 1), &format!("criterion {}", k.name));
                }
                c
            });
            Error::InStage { stage, cell, source }
        }
        e => e,
    }
}

/// Runs all seven steps on a validated problem.
pub fn run(problem: &DecisionProblem) -> Result<PipelineTrace> {
    let config = problem.params.validate()?;
    let aggregated_weights = average_weights(&ExpertWeightSet {
        experts: problem.experts.clone(),
        weights: problem.expert_weights.clone(),
    })
    .map_err(|e| e.at(Stage::AggregateWeights, None))?;
    let aggregated_decisions = average_ratings(&ExpertRatingSet {
        experts: problem.experts.clone(),
        ratings: problem.expert_ratings.clone(),
    })
    .map_err(|e| e.at(Stage::AggregateRatings, None))?;
    let ev = evaluate(&aggregated_decisions, &aggregated_weights, &problem.criteria, config)
        .map_err(|e| label_stage(e, problem))?;
    Ok(PipelineTrace {
        alternatives: problem.alternatives.clone(),
        criteria: problem.criteria.clone(),
        params: problem.params,
        aggregated_weights,
        aggregated_decisions,
        normalized: ev.normalized,
        weighted: ev.weighted,
        baa: ev.baa,
        q: ev.crisp.q,
        g: ev.crisp.g,
        delta: ev.crisp.delta,
        classification: ev.ranking.classification,
        scores: ev.ranking.scores,
        order: ev.ranking.order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"
alternatives = ["X", "Y"]
experts = ["E1", "E2"]

[[criteria]]
name = "Price"
sense = "cost"

[[criteria]]
name = "Quality"

[weights]
E1 = ["H", "VH"]
E2 = ["MH", [[0.5, 0.6, 0.7, 0.8, 1.0], [0.55, 0.6, 0.7, 0.75, 0.9]]]

[ratings.E1]
X = ["G", "F"]
Y = ["P", "VG"]

[ratings.E2]
X = ["VG", "MG"]
Y = ["MP", "G"]
"#;

    #[test]
    fn parses_small_problem() {
        let p = parse_problem(SMALL).unwrap();
        assert_eq!(p.alternatives, vec!["X", "Y"]);
        assert_eq!(p.criteria[0].sense, Sense::Cost);
        assert_eq!(p.criteria[1].sense, Sense::Benefit);
        assert_eq!(p.params, Params::default());
        assert_eq!(p.expert_weights[1][1].upper().endpoints(), [0.5, 0.6, 0.7, 0.8]);
        let t = run(&p).unwrap();
        // Y is cheaper and better
        assert_eq!(t.ranking(), vec!["Y", "X"]);
        assert_eq!(t.ranks(), vec![2, 1]);
    }

    #[test]
    fn row_length_mismatch_names_expert_and_row() {
        let src = SMALL.replace("Y = [\"MP\", \"G\"]", "Y = [\"MP\"]");
        let e = parse_problem(&src).unwrap_err();
        assert!(matches!(e.root(), Error::DimensionMismatch(_)));
        let msg = e.to_string();
        assert!(msg.contains("expert E2") && msg.contains("alternative Y"), "{msg}");
        assert!(msg.contains("line 22"), "{msg}");
        assert!(e.is_validation());
    }

    #[test]
    fn unknown_term_reports_cell() {
        let src = SMALL.replace("\"P\", \"VG\"", "\"P\", \"XX\"");
        let e = parse_problem(&src).unwrap_err();
        assert!(matches!(e.root(), Error::UnknownTerm { .. }));
        assert!(e.to_string().contains("criterion Quality"), "{e}");
    }

    #[test]
    fn bad_params() {
        let src = format!("{SMALL}\n[params]\nlambda = 1.5\n");
        let e = parse_problem(&src).unwrap_err();
        assert!(matches!(e.root(), Error::InvalidParams(_)), "{e}");
        let src = format!("{SMALL}\n[params]\nr = 0.0\ns = 0.0\n");
        assert!(matches!(parse_problem(&src).unwrap_err().root(), Error::InvalidParams(_)));
    }

    #[test]
    fn syntax_and_structure_errors() {
        assert!(matches!(parse_problem("alternatives = [").unwrap_err().root(), Error::Syntax(_)));
        let src = SMALL.replace("experts = [\"E1\", \"E2\"]", "experts = [\"E1\", \"E1\"]");
        assert!(parse_problem(&src).is_err());
        let src = SMALL.replace("[ratings.E2]", "[ratings.E3]");
        assert!(parse_problem(&src).is_err());
        let src = SMALL.replace("alternatives = [\"X\", \"Y\"]", "alternatives = []");
        assert!(parse_problem(&src).is_err());
    }

    #[test]
    fn invalid_inline_value() {
        let src = SMALL.replace("[0.5, 0.6, 0.7, 0.8, 1.0]", "[0.9, 0.6, 0.7, 0.8, 1.0]");
        let e = parse_problem(&src).unwrap_err();
        assert!(matches!(e.root(), Error::EndpointOrder { .. }), "{e}");
    }

    #[test]
    fn degenerate_column_is_a_computation_error() {
        let src = SMALL
            .replace("Y = [\"P\", \"VG\"]", "Y = [\"G\", \"VG\"]")
            .replace("X = [\"VG\", \"MG\"]", "X = [\"G\", \"MG\"]")
            .replace("Y = [\"MP\", \"G\"]", "Y = [\"G\", \"G\"]");
        let src = src.replace("\"G\"", "[[5,5,5,5,1],[5,5,5,5,1]]");
        let p = parse_problem(&src).unwrap();
        let e = run(&p).unwrap_err();
        assert_eq!(e.stage(), Some(Stage::Normalize));
        assert!(!e.is_validation());
        assert!(e.to_string().contains("Price"), "{e}");
    }
}
