//! Interval type-2 trapezoidal fuzzy numbers.
//!
//! An [`It2TrFn`] is a pair of generalized trapezoids: the upper membership
//! function bounds the footprint of uncertainty from above, the lower one from
//! below. All arithmetic is endpoint-wise on both trapezoids with heights
//! combined by `min`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used by invariant checks.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Upper,
    Lower,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Upper => "upper",
            Level::Lower => "lower",
        })
    }
}

const ENDPOINT_NAMES: [&str; 4] = ["a1", "a2", "a3", "a4"];

/// A generalized trapezoid `(a1, a2, a3, a4; h)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 5]", into = "[f64; 5]")]
pub struct Trapezoid {
    a: [f64; 4],
    h: f64,
}

impl Trapezoid {
    pub fn new(a1: f64, a2: f64, a3: f64, a4: f64, h: f64) -> Result<Self> {
        Self::checked([a1, a2, a3, a4], h, Level::Upper)
    }

    pub(crate) fn checked(a: [f64; 4], h: f64, level: Level) -> Result<Self> {
        for (k, v) in a.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    level,
                    field: ENDPOINT_NAMES[k],
                });
            }
        }
        if !h.is_finite() {
            return Err(Error::NonFinite { level, field: "h" });
        }
        for k in 1..4 {
            if a[k - 1] > a[k] + TOLERANCE {
                return Err(Error::EndpointOrder {
                    level,
                    field: ENDPOINT_NAMES[k],
                    detail: format!(
                        "{} = {} < {} = {}",
                        ENDPOINT_NAMES[k],
                        a[k],
                        ENDPOINT_NAMES[k - 1],
                        a[k - 1]
                    ),
                });
            }
        }
        if !(h > 0.0 && h <= 1.0 + TOLERANCE) {
            return Err(Error::HeightOutOfRange { level, value: h });
        }
        Ok(Trapezoid { a, h })
    }

    /// Builds without validation; callers guarantee the invariants hold.
    pub(crate) const fn raw(a: [f64; 4], h: f64) -> Self {
        Trapezoid { a, h }
    }

    pub fn endpoints(&self) -> [f64; 4] {
        self.a
    }

    pub fn height(&self) -> f64 {
        self.h
    }

    /// Piecewise-linear membership value at `x`.
    pub fn membership(&self, x: f64) -> f64 {
        let [a1, a2, a3, a4] = self.a;
        if x < a1 || x > a4 {
            0.0
        } else if x < a2 {
            (x - a1) * self.h / (a2 - a1)
        } else if x <= a3 {
            self.h
        } else {
            (a4 - x) * self.h / (a4 - a3)
        }
    }

    fn zip_with(&self, other: &Trapezoid, f: impl Fn(f64, f64) -> f64) -> Trapezoid {
        let a = std::array::from_fn(|k| f(self.a[k], other.a[k]));
        Trapezoid::raw(a, self.h.min(other.h))
    }

    fn map(&self, f: impl Fn(f64) -> f64) -> Trapezoid {
        Trapezoid::raw(self.a.map(f), self.h)
    }
}

impl TryFrom<[f64; 5]> for Trapezoid {
    type Error = Error;

    fn try_from(v: [f64; 5]) -> Result<Self> {
        Trapezoid::new(v[0], v[1], v[2], v[3], v[4])
    }
}

impl From<Trapezoid> for [f64; 5] {
    fn from(t: Trapezoid) -> Self {
        [t.a[0], t.a[1], t.a[2], t.a[3], t.h]
    }
}

impl fmt::Display for Trapezoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = f.precision().unwrap_or(2);
        let [a1, a2, a3, a4] = self.a;
        write!(
            f,
            "({a1:.p$}, {a2:.p$}, {a3:.p$}, {a4:.p$}; {:.p$})",
            self.h
        )
    }
}

/// Interval type-2 trapezoidal fuzzy number `[upper, lower]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[Trapezoid; 2]", into = "[Trapezoid; 2]")]
pub struct It2TrFn {
    upper: Trapezoid,
    lower: Trapezoid,
}

impl It2TrFn {
    /// The crisp unit `[(1,1,1,1;1), (1,1,1,1;1)]`.
    pub const ONE: It2TrFn = It2TrFn::crisp_const(1.0);
    pub const ZERO: It2TrFn = It2TrFn::crisp_const(0.0);

    /// Validates each trapezoid and the height ordering. Containment of the
    /// lower trapezoid inside the upper one is not checked; see
    /// [`It2TrFn::fou_violations`].
    pub fn new(upper: Trapezoid, lower: Trapezoid) -> Result<Self> {
        // Re-check with the right level label.
        let upper = Trapezoid::checked(upper.a, upper.h, Level::Upper)?;
        let lower = Trapezoid::checked(lower.a, lower.h, Level::Lower)?;
        if lower.h > upper.h + TOLERANCE {
            return Err(Error::HeightOrder {
                upper: upper.h,
                lower: lower.h,
            });
        }
        Ok(It2TrFn { upper, lower })
    }

    /// Like [`It2TrFn::new`] but also rejects a lower trapezoid whose support
    /// leaves the upper support.
    pub fn new_contained(upper: Trapezoid, lower: Trapezoid) -> Result<Self> {
        let v = Self::new(upper, lower)?;
        match v.fou_violations().into_iter().next() {
            Some(field) => Err(Error::EndpointOrder {
                level: Level::Lower,
                field,
                detail: format!("lower {field} lies outside the upper support"),
            }),
            None => Ok(v),
        }
    }

    /// Convenience constructor from two `(a1, a2, a3, a4, h)` tuples.
    pub fn from_arrays(upper: [f64; 5], lower: [f64; 5]) -> Result<Self> {
        let upper = Trapezoid::checked([upper[0], upper[1], upper[2], upper[3]], upper[4], Level::Upper)?;
        let lower = Trapezoid::checked([lower[0], lower[1], lower[2], lower[3]], lower[4], Level::Lower)?;
        Self::new(upper, lower)
    }

    pub const fn crisp_const(c: f64) -> Self {
        It2TrFn {
            upper: Trapezoid::raw([c, c, c, c], 1.0),
            lower: Trapezoid::raw([c, c, c, c], 1.0),
        }
    }

    pub fn upper(&self) -> &Trapezoid {
        &self.upper
    }

    pub fn lower(&self) -> &Trapezoid {
        &self.lower
    }

    pub fn level(&self, level: Level) -> &Trapezoid {
        match level {
            Level::Upper => &self.upper,
            Level::Lower => &self.lower,
        }
    }

    /// All eight endpoints, upper first.
    pub fn endpoints(&self) -> [f64; 8] {
        let [u1, u2, u3, u4] = self.upper.a;
        let [l1, l2, l3, l4] = self.lower.a;
        [u1, u2, u3, u4, l1, l2, l3, l4]
    }

    pub(crate) fn from_endpoints(e: [f64; 8], hu: f64, hl: f64) -> Self {
        It2TrFn {
            upper: Trapezoid::raw([e[0], e[1], e[2], e[3]], hu),
            lower: Trapezoid::raw([e[4], e[5], e[6], e[7]], hl),
        }
    }

    pub fn umf_at(&self, x: f64) -> f64 {
        self.upper.membership(x)
    }

    pub fn lmf_at(&self, x: f64) -> f64 {
        self.lower.membership(x)
    }

    /// Lower endpoints that fall outside the upper support `[a1, a4]`.
    pub fn fou_violations(&self) -> Vec<&'static str> {
        let [u1, .., u4] = self.upper.a;
        let mut out = Vec::new();
        for (k, &v) in self.lower.a.iter().enumerate() {
            if v < u1 - TOLERANCE || v > u4 + TOLERANCE {
                out.push(ENDPOINT_NAMES[k]);
            }
        }
        out
    }

    pub fn is_non_negative(&self) -> bool {
        self.endpoints().iter().all(|&v| v >= 0.0)
    }

    fn min_endpoint(&self) -> f64 {
        self.endpoints().into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn add(&self, other: &It2TrFn) -> It2TrFn {
        It2TrFn {
            upper: self.upper.zip_with(&other.upper, |x, y| x + y),
            lower: self.lower.zip_with(&other.lower, |x, y| x + y),
        }
    }

    pub fn scale(&self, k: f64) -> Result<It2TrFn> {
        if k < 0.0 || !k.is_finite() {
            return Err(Error::NegativeScalar(k));
        }
        Ok(It2TrFn {
            upper: self.upper.map(|x| x * k),
            lower: self.lower.map(|x| x * k),
        })
    }

    /// Endpoint-wise product; both operands must be non-negative.
    pub fn mul(&self, other: &It2TrFn) -> Result<It2TrFn> {
        for v in [self, other] {
            let m = v.min_endpoint();
            if m < 0.0 {
                return Err(Error::NegativeOperand { value: m });
            }
        }
        Ok(It2TrFn {
            upper: self.upper.zip_with(&other.upper, |x, y| x * y),
            lower: self.lower.zip_with(&other.lower, |x, y| x * y),
        })
    }

    /// Largest absolute endpoint/height difference to `other`.
    pub fn max_abs_diff(&self, other: &It2TrFn) -> f64 {
        let a = self.endpoints();
        let b = other.endpoints();
        let mut d = (self.upper.h - other.upper.h)
            .abs()
            .max((self.lower.h - other.lower.h).abs());
        for k in 0..8 {
            d = d.max((a[k] - b[k]).abs());
        }
        d
    }
}

impl TryFrom<[Trapezoid; 2]> for It2TrFn {
    type Error = Error;

    fn try_from([upper, lower]: [Trapezoid; 2]) -> Result<Self> {
        It2TrFn::new(upper, lower)
    }
}

impl From<It2TrFn> for [Trapezoid; 2] {
    fn from(v: It2TrFn) -> Self {
        [v.upper, v.lower]
    }
}

impl fmt::Display for It2TrFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = f.precision().unwrap_or(2);
        write!(f, "[{:.p$}, {:.p$}]", self.upper, self.lower)
    }
}
