//! Text and machine-readable rendering of a [`PipelineTrace`].

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fuzzy::It2TrFn;
use crate::matrix::Matrix;
use crate::problem::PipelineTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// Individually printable parts of a trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    Weights,
    Decisions,
    Normalized,
    Weighted,
    Baa,
    Q,
    G,
    Scores,
}

impl Section {
    pub const ALL: [Section; 8] = [
        Section::Weights,
        Section::Decisions,
        Section::Normalized,
        Section::Weighted,
        Section::Baa,
        Section::Q,
        Section::G,
        Section::Scores,
    ];

    pub fn title(self) -> &'static str {
        match self {
            Section::Weights => "Aggregated weights (cf. Table 4)",
            Section::Decisions => "Aggregated decision matrix (cf. Table 6)",
            Section::Normalized => "Normalized decision matrix (Step 3)",
            Section::Weighted => "Weighted decision matrix (cf. Table 7)",
            Section::Baa => "Border approximation area (cf. Table 8)",
            Section::Q => "Distance matrix Q (cf. Table 9)",
            Section::G => "Border distances G (cf. Table 10)",
            Section::Scores => "Scores and ranking (cf. Table 11)",
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            Section::Weights => "weights",
            Section::Decisions => "decisions",
            Section::Normalized => "normalized",
            Section::Weighted => "weighted",
            Section::Baa => "baa",
            Section::Q => "q",
            Section::G => "g",
            Section::Scores => "scores",
        }
    }
}

impl FromStr for Section {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Section::ALL
            .into_iter()
            .find(|sec| sec.key() == s)
            .ok_or_else(|| {
                let keys: Vec<_> = Section::ALL.iter().map(|s| s.key()).collect();
                Error::InvalidParams(format!("unknown table {s:?}; expected one of {}", keys.join(", ")))
            })
    }
}

pub fn render(trace: &PipelineTrace, format: Format) -> String {
    match format {
        Format::Text => render_text(trace),
        Format::Machine => render_machine(trace),
    }
}

/// Full trace as pretty JSON with every value at round-trip precision.
pub fn render_machine(trace: &PipelineTrace) -> String {
    let mut s = serde_json::to_string_pretty(trace).expect("trace serializes");
    s.push('\n');
    s
}

pub fn parse_machine(src: &str) -> Result<PipelineTrace> {
    serde_json::from_str(src).map_err(|e| Error::Syntax(e.to_string()))
}

pub fn render_text(trace: &PipelineTrace) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "Parameters: lambda = {}, r = {}, s = {}, BAA operator = {}",
        trace.params.lambda, trace.params.r, trace.params.s, trace.params.baa
    )
    .unwrap();
    for sec in Section::ALL {
        out.push('\n');
        out.push_str(&render_section_text(trace, sec));
    }
    out
}

pub fn render_section(trace: &PipelineTrace, section: Section, format: Format) -> String {
    match format {
        Format::Text => render_section_text(trace, section),
        Format::Machine => {
            let value = match section {
                Section::Weights => serde_json::to_value(&trace.aggregated_weights),
                Section::Decisions => serde_json::to_value(&trace.aggregated_decisions),
                Section::Normalized => serde_json::to_value(&trace.normalized),
                Section::Weighted => serde_json::to_value(&trace.weighted),
                Section::Baa => serde_json::to_value(&trace.baa),
                Section::Q => serde_json::to_value(&trace.q),
                Section::G => serde_json::to_value(&trace.g),
                Section::Scores => serde_json::to_value(serde_json::json!({
                    "delta": trace.delta,
                    "classification": trace.classification,
                    "scores": trace.scores,
                    "order": trace.order,
                })),
            }
            .expect("section serializes");
            let mut s = serde_json::to_string_pretty(&value).expect("json value serializes");
            s.push('\n');
            s
        }
    }
}

fn heading(title: &str) -> String {
    format!("{title}\n{}\n", "=".repeat(title.chars().count()))
}

fn render_section_text(trace: &PipelineTrace, section: Section) -> String {
    let mut out = heading(section.title());
    let crit: Vec<&str> = trace.criteria.iter().map(|c| c.name.as_str()).collect();
    match section {
        Section::Weights => {
            let rows: Vec<Vec<String>> = crit
                .iter()
                .zip(&trace.aggregated_weights)
                .map(|(c, w)| vec![c.to_string(), fuzzy(w)])
                .collect();
            out.push_str(&table(&["", "weight"], &rows, Align::Left));
        }
        Section::Decisions => out.push_str(&fuzzy_blocks(trace, &trace.aggregated_decisions)),
        Section::Normalized => out.push_str(&fuzzy_blocks(trace, &trace.normalized.0)),
        Section::Weighted => out.push_str(&fuzzy_blocks(trace, &trace.weighted.0)),
        Section::Baa => {
            let rows: Vec<Vec<String>> = crit
                .iter()
                .zip(&trace.baa.0)
                .map(|(c, g)| vec![c.to_string(), fuzzy(g)])
                .collect();
            out.push_str(&table(&["", "border area"], &rows, Align::Left));
        }
        Section::Q => out.push_str(&crisp_grid(trace, &trace.q)),
        Section::G => {
            let mut header = vec![""];
            header.extend(&crit);
            let row: Vec<String> = std::iter::once("G".to_string())
                .chain(trace.g.iter().map(|v| format!("{v:.2}")))
                .collect();
            out.push_str(&table(&header, &[row], Align::Right));
        }
        Section::Scores => {
            let mut header = vec![""];
            header.extend(&crit);
            header.extend(["S(A)", "Rank"]);
            let ranks = trace.ranks();
            let rows: Vec<Vec<String>> = trace
                .alternatives
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    let mut row = vec![a.clone()];
                    for j in 0..crit.len() {
                        row.push(format!(
                            "{:.2} {}",
                            trace.delta.get(i, j),
                            trace.classification.get(i, j)
                        ));
                    }
                    row.push(format!("{:.2}", trace.scores[i]));
                    row.push(ranks[i].to_string());
                    row
                })
                .collect();
            out.push_str(&table(&header, &rows, Align::Right));
            writeln!(out, "\nRanking: {}", trace.ranking().join(" > ")).unwrap();
        }
    }
    out
}

fn fuzzy(v: &It2TrFn) -> String {
    format!("{v:.2}")
}

fn fuzzy_blocks(trace: &PipelineTrace, m: &Matrix<It2TrFn>) -> String {
    let mut out = String::new();
    for (j, c) in trace.criteria.iter().enumerate() {
        if j > 0 {
            out.push('\n');
        }
        writeln!(out, "{}", c.name).unwrap();
        let rows: Vec<Vec<String>> = trace
            .alternatives
            .iter()
            .enumerate()
            .map(|(i, a)| vec![a.clone(), fuzzy(m.get(i, j))])
            .collect();
        out.push_str(&table(&[], &rows, Align::Left));
    }
    out
}

fn crisp_grid(trace: &PipelineTrace, m: &Matrix<f64>) -> String {
    let mut header = vec![""];
    header.extend(trace.criteria.iter().map(|c| c.name.as_str()));
    let rows: Vec<Vec<String>> = trace
        .alternatives
        .iter()
        .enumerate()
        .map(|(i, a)| {
            std::iter::once(a.clone())
                .chain(m.row(i).iter().map(|v| format!("{v:.2}")))
                .collect()
        })
        .collect();
    table(&header, &rows, Align::Right)
}

#[derive(Clone, Copy)]
enum Align {
    Left,
    Right,
}

/// First column is always left-aligned; `align` applies to the rest.
fn table(header: &[&str], rows: &[Vec<String>], align: Align) -> String {
    let ncols = rows.iter().map(Vec::len).chain([header.len()]).max().unwrap_or(0);
    let mut widths = vec![0; ncols];
    for (k, h) in header.iter().enumerate() {
        widths[k] = widths[k].max(h.chars().count());
    }
    for row in rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (k, cell) in cells.enumerate() {
            match (k, align) {
                (0, _) => write!(s, "{cell:<w$}", w = widths[k]).unwrap(),
                (_, Align::Left) => write!(s, "  {cell:<w$}", w = widths[k]).unwrap(),
                (_, Align::Right) => write!(s, "  {cell:>w$}", w = widths[k]).unwrap(),
            }
        }
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = String::new();
    if !header.is_empty() {
        out.push_str(&line(&mut header.iter().copied()));
    }
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    out
}
