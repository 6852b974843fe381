//! Carrier points shared by every calculus.

use core::fmt;

/// A point of some calculus carrier.
///
/// Which variants are valid depends on the calculus: certainty factors and
/// the possibility/likelihood calculi use `Scalar`, bipolar possibility uses
/// `Pair` (rejection degree, possibility degree), interval probability uses
/// `Interval`, and the two latter adjoin `Bottom` as an explicit least
/// element representing contradictory evidence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CalcValue {
    /// A scalar belief value.
    Scalar(f64),
    /// Bipolar pair `(rejection, possibility)` with `rejection <= possibility`.
    Pair(f64, f64),
    /// Non-empty closed subinterval of the probability range.
    Interval { lo: f64, hi: f64 },
    /// Adjoined least element: contradictory evidence.
    Bottom,
}

impl CalcValue {
    /// Convenience constructor for intervals.
    pub fn interval(lo: f64, hi: f64) -> Self {
        CalcValue::Interval { lo, hi }
    }

    /// The scalar payload, if this is a scalar.
    pub fn as_scalar(&self) -> Option<f64> {
        match self {
            CalcValue::Scalar(x) => Some(*x),
            _ => None,
        }
    }

    /// True when this is the adjoined contradiction element.
    pub fn is_bottom(&self) -> bool {
        matches!(self, CalcValue::Bottom)
    }

    /// Bitwise equality — used where determinism demands exact comparison
    /// (canonical output, replay checks), never for order semantics.
    pub fn bits_eq(&self, other: &CalcValue) -> bool {
        match (self, other) {
            (CalcValue::Scalar(a), CalcValue::Scalar(b)) => a.to_bits() == b.to_bits(),
            (CalcValue::Pair(a, b), CalcValue::Pair(c, d)) => {
                a.to_bits() == c.to_bits() && b.to_bits() == d.to_bits()
            }
            (CalcValue::Interval { lo: a, hi: b }, CalcValue::Interval { lo: c, hi: d }) => {
                a.to_bits() == c.to_bits() && b.to_bits() == d.to_bits()
            }
            (CalcValue::Bottom, CalcValue::Bottom) => true,
            _ => false,
        }
    }
}

impl fmt::Display for CalcValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CalcValue::Scalar(x) => write!(f, "{x}"),
            CalcValue::Pair(r, p) => write!(f, "({r}, {p})"),
            CalcValue::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
            CalcValue::Bottom => write!(f, "bottom"),
        }
    }
}
