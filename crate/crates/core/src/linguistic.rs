//! Linguistic rating scales: ordered term → fuzzy number maps.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::{It2TrFn, Level};

#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticScale {
    name: String,
    entries: IndexMap<String, It2TrFn>,
}

/// A correction applied to a printed value of a builtin scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Repair {
    pub term: &'static str,
    pub level: Level,
    pub endpoint: &'static str,
    pub printed: f64,
    pub repaired: f64,
}

/// Lower `a4` of L, ML, M and MH in the weight scale were printed without
/// the leading decimal point; taken literally they would exceed the upper
/// support and leave the [0, 1] universe.
pub const WEIGHT_SCALE_REPAIRS: [Repair; 4] = [
    Repair { term: "L", level: Level::Lower, endpoint: "a4", printed: 2.0, repaired: 0.2 },
    Repair { term: "ML", level: Level::Lower, endpoint: "a4", printed: 4.0, repaired: 0.4 },
    Repair { term: "M", level: Level::Lower, endpoint: "a4", printed: 6.0, repaired: 0.6 },
    Repair { term: "MH", level: Level::Lower, endpoint: "a4", printed: 8.0, repaired: 0.8 },
];

type Row = (&'static str, [f64; 5], [f64; 5]);

const WEIGHT_TERMS: [Row; 7] = [
    ("VL", [0.0, 0.0, 0.0, 0.1, 1.0], [0.0, 0.0, 0.0, 0.05, 0.9]),
    ("L", [0.0, 0.1, 0.1, 0.3, 1.0], [0.05, 0.1, 0.1, 0.2, 0.9]),
    ("ML", [0.1, 0.3, 0.3, 0.5, 1.0], [0.2, 0.3, 0.3, 0.4, 0.9]),
    ("M", [0.3, 0.5, 0.5, 0.7, 1.0], [0.4, 0.5, 0.5, 0.6, 0.9]),
    ("MH", [0.5, 0.7, 0.7, 0.9, 1.0], [0.6, 0.7, 0.7, 0.8, 0.9]),
    ("H", [0.7, 0.9, 0.9, 1.0, 1.0], [0.8, 0.9, 0.9, 0.95, 0.9]),
    ("VH", [0.9, 1.0, 1.0, 1.0, 1.0], [0.95, 1.0, 1.0, 1.0, 0.9]),
];

const RATING_TERMS: [Row; 7] = [
    ("VP", [0.0, 0.0, 0.0, 1.0, 1.0], [0.0, 0.0, 0.0, 0.5, 0.9]),
    ("P", [0.0, 1.0, 1.0, 3.0, 1.0], [0.5, 1.0, 1.0, 2.0, 0.9]),
    ("MP", [1.0, 3.0, 3.0, 5.0, 1.0], [2.0, 3.0, 3.0, 4.0, 0.9]),
    ("F", [3.0, 5.0, 5.0, 7.0, 1.0], [4.0, 5.0, 5.0, 6.0, 0.9]),
    ("MG", [5.0, 7.0, 7.0, 9.0, 1.0], [6.0, 7.0, 7.0, 8.0, 0.9]),
    ("G", [7.0, 9.0, 9.0, 10.0, 1.0], [8.0, 9.0, 9.0, 9.5, 0.9]),
    ("VG", [9.0, 10.0, 10.0, 10.0, 1.0], [9.5, 10.0, 10.0, 10.0, 0.9]),
];

fn from_rows(name: &str, rows: &[Row]) -> LinguisticScale {
    let entries = rows
        .iter()
        .map(|(t, u, l)| {
            let v = It2TrFn::from_arrays(*u, *l).expect("builtin scale entry is valid");
            (t.to_string(), v)
        })
        .collect();
    LinguisticScale {
        name: name.to_string(),
        entries,
    }
}

/// Seven-term scale on [0, 1] for criterion importance (VL … VH).
pub fn builtin_weight_scale() -> LinguisticScale {
    from_rows("weights", &WEIGHT_TERMS)
}

/// Seven-term scale on [0, 10] for rating alternatives (VP … VG).
pub fn builtin_rating_scale() -> LinguisticScale {
    from_rows("ratings", &RATING_TERMS)
}

impl LinguisticScale {
    pub fn new(
        name: impl Into<String>,
        entries: impl IntoIterator<Item = (String, It2TrFn)>,
    ) -> Result<Self> {
        let name = name.into();
        let mut map = IndexMap::new();
        for (term, v) in entries {
            if map.contains_key(&term) {
                return Err(Error::DuplicateTerm { scale: name, term });
            }
            map.insert(term, v);
        }
        Ok(LinguisticScale { name, entries: map })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &It2TrFn)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn resolve(&self, term: &str) -> Result<It2TrFn> {
        self.entries
            .get(term)
            .copied()
            .ok_or_else(|| Error::UnknownTerm {
                scale: self.name.clone(),
                term: term.to_string(),
                available: self.entries.keys().cloned().collect(),
            })
    }

    /// Consecutive terms whose upper `a4` decreases, as `(earlier, later)` pairs.
    pub fn monotonicity_violations(&self) -> Vec<(String, String)> {
        let items: Vec<_> = self.entries.iter().collect();
        items
            .windows(2)
            .filter(|w| w[1].1.upper().endpoints()[3] < w[0].1.upper().endpoints()[3])
            .map(|w| (w[0].0.clone(), w[1].0.clone()))
            .collect()
    }

    /// Parses the scale file format.
    pub fn from_toml(src: &str) -> Result<Self> {
        let file: ScaleFile = toml::from_str(src).map_err(|e| Error::Syntax(e.to_string()))?;
        file.try_into()
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(&ScaleFile::from(self)).expect("scale serializes")
    }
}

/// On-disk shape of a scale.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct ScaleFile {
    pub name: String,
    pub terms: Vec<ScaleEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct ScaleEntry {
    pub term: String,
    pub upper: [f64; 5],
    pub lower: [f64; 5],
}

impl TryFrom<ScaleFile> for LinguisticScale {
    type Error = Error;

    fn try_from(file: ScaleFile) -> Result<Self> {
        if file.terms.is_empty() {
            return Err(Error::InvalidParams(format!("scale {:?} has no terms", file.name)));
        }
        let mut entries = Vec::with_capacity(file.terms.len());
        for e in file.terms {
            let v = It2TrFn::from_arrays(e.upper, e.lower).map_err(|err| {
                Error::InvalidParams(format!("scale {:?}, term {:?}: {err}", file.name, e.term))
            })?;
            entries.push((e.term, v));
        }
        LinguisticScale::new(file.name, entries)
    }
}

impl From<&LinguisticScale> for ScaleFile {
    fn from(s: &LinguisticScale) -> Self {
        ScaleFile {
            name: s.name.clone(),
            terms: s
                .entries
                .iter()
                .map(|(t, v)| ScaleEntry {
                    term: t.clone(),
                    upper: (*v.upper()).into(),
                    lower: (*v.lower()).into(),
                })
                .collect(),
        }
    }
}
