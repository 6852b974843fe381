//! The six bundled calculi.
//!
//! | id      | carrier                  | tensor            | unit    | top     | bottom  | hom            |
//! |---------|--------------------------|-------------------|---------|---------|---------|----------------|
//! | `CF`    | scalars in `[-1, 1]`     | `(x+y)/(1+xy)`    | `0`     | `1`     | `-1`    | `(b-a)/(1-ab)` |
//! | `PT`    | scalars in `[0, 1]`      | `min`             | `1`     | `1`     | `0`     | Gödel          |
//! | `PTMAX` | scalars in `[0, 1]`      | `max`             | `0`     | `1`     | `0`     | —              |
//! | `PTB`   | pairs `(r, p)`, `r <= p` | `(max r, min p)`  | `(0,1)` | `(0,1)` | contradiction | —       |
//! | `IP`    | intervals in `[0, 1]`    | intersection      | `[0,1]` | `[0,1]` | contradiction | —       |
//! | `LR`    | positive reals           | `*`               | `1`     | —       | —       | `b/a`          |
//!
//! `CF` fuses signed confirmation scores with the relativistic-velocity
//! rule; `PT` is necessity-style possibility (fusion can only restrict);
//! `PTMAX` is its dual accumulation-of-support reading; `PTB` tracks a
//! rejection/possibility pair whose halves may collide into an explicit
//! contradiction element; `IP` does the same with probability intervals
//! under containment; `LR` multiplies likelihood ratios and is compared on
//! a log scale.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::calculus::{CalcRef, Calculus, Carrier, Flags};
use crate::error::Error;
use crate::value::CalcValue;

/// Identifier for a bundled calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InstanceId {
    Cf,
    Pt,
    Ptmax,
    Ptb,
    Ip,
    Lr,
}

impl InstanceId {
    /// All bundled calculi, in canonical order.
    pub const ALL: [InstanceId; 6] = [
        InstanceId::Cf,
        InstanceId::Pt,
        InstanceId::Ptmax,
        InstanceId::Ptb,
        InstanceId::Ip,
        InstanceId::Lr,
    ];

    /// Canonical identifier string.
    pub fn name(self) -> &'static str {
        match self {
            InstanceId::Cf => "CF",
            InstanceId::Pt => "PT",
            InstanceId::Ptmax => "PTMAX",
            InstanceId::Ptb => "PTB",
            InstanceId::Ip => "IP",
            InstanceId::Lr => "LR",
        }
    }

    /// Construct the calculus with the given comparison tolerance.
    pub fn build(self, eps: f64) -> CalcRef {
        match self {
            InstanceId::Cf => Arc::new(Cf { eps }),
            InstanceId::Pt => Arc::new(Pt { eps }),
            InstanceId::Ptmax => Arc::new(Ptmax { eps }),
            InstanceId::Ptb => Arc::new(Ptb { eps }),
            InstanceId::Ip => Arc::new(Ip { eps }),
            InstanceId::Lr => Arc::new(Lr { eps }),
        }
    }
}

impl fmt::Display for InstanceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InstanceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        for id in Self::ALL {
            if s.eq_ignore_ascii_case(id.name()) {
                return Ok(id);
            }
        }
        Err(Error::UnknownCalculus { id: String::from(s) })
    }
}

fn expect_scalar(id: &str, lo: f64, hi: f64, v: &CalcValue) -> Result<f64, Error> {
    match v {
        CalcValue::Scalar(x) if x.is_finite() && *x >= lo && *x <= hi => Ok(*x),
        CalcValue::Scalar(x) => Err(Error::InvalidValue {
            calculus: String::from(id),
            detail: alloc::format!("scalar {x} outside [{lo}, {hi}]"),
        }),
        other => Err(Error::InvalidValue {
            calculus: String::from(id),
            detail: alloc::format!("expected a scalar in [{lo}, {hi}], got {other}"),
        }),
    }
}

/// Signed confirmation scores on `[-1, 1]`.
///
/// Fusion is the relativistic addition `(x + y) / (1 + xy)`, with declared
/// behaviour at the poles: full confirmation absorbs anything short of full
/// refutation (and symmetrically), while the two poles together cancel to
/// the neutral `0`.
struct Cf {
    eps: f64,
}

impl Calculus for Cf {
    fn id(&self) -> &str {
        "CF"
    }

    fn carrier(&self) -> Carrier {
        Carrier::Scalar { lo: -1.0, hi: 1.0 }
    }

    fn flags(&self) -> Flags {
        Flags { has_top: true, complete: true, closed: true, total_order: true }
    }

    fn eps(&self) -> f64 {
        self.eps
    }

    fn validate(&self, v: &CalcValue) -> Result<(), Error> {
        expect_scalar(self.id(), -1.0, 1.0, v).map(|_| ())
    }

    fn leq_margin(&self, a: &CalcValue, b: &CalcValue) -> f64 {
        match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => y - x,
            _ => f64::NEG_INFINITY,
        }
    }

    fn tensor_raw(&self, a: &CalcValue, b: &CalcValue) -> CalcValue {
        let (x, y) = match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => (*x, *y),
            _ => return CalcValue::Scalar(f64::NAN),
        };
        // Pole cases are declared, not derived from the formula (which is
        // 0/0 at opposite poles).
        if (x == 1.0 && y == -1.0) || (x == -1.0 && y == 1.0) {
            return CalcValue::Scalar(0.0);
        }
        if x == 1.0 || y == 1.0 {
            return CalcValue::Scalar(1.0);
        }
        if x == -1.0 || y == -1.0 {
            return CalcValue::Scalar(-1.0);
        }
        CalcValue::Scalar(((x + y) / (1.0 + x * y)).clamp(-1.0, 1.0))
    }

    fn unit(&self) -> CalcValue {
        CalcValue::Scalar(0.0)
    }

    fn hom_raw(&self, a: &CalcValue, b: &CalcValue) -> Option<CalcValue> {
        let (x, y) = match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => (*x, *y),
            _ => return None,
        };
        // Both diagonal poles give 0/0 in the closed form; the residual
        // there is the whole carrier's maximum.
        if (x == 1.0 && y == 1.0) || (x == -1.0 && y == -1.0) {
            return Some(CalcValue::Scalar(1.0));
        }
        Some(CalcValue::Scalar(((y - x) / (1.0 - x * y)).clamp(-1.0, 1.0)))
    }

    fn top(&self) -> Option<CalcValue> {
        Some(CalcValue::Scalar(1.0))
    }

    fn bottom(&self) -> Option<CalcValue> {
        Some(CalcValue::Scalar(-1.0))
    }

    fn join_raw(&self, vs: &[CalcValue]) -> Option<CalcValue> {
        scalar_max(vs)
    }

    fn meet_raw(&self, vs: &[CalcValue]) -> Option<CalcValue> {
        scalar_min(vs)
    }
}

fn scalar_max(vs: &[CalcValue]) -> Option<CalcValue> {
    let mut best = f64::NEG_INFINITY;
    for v in vs {
        match v {
            CalcValue::Scalar(x) => best = best.max(*x),
            _ => return None,
        }
    }
    vs.first().map(|_| CalcValue::Scalar(best))
}

fn scalar_min(vs: &[CalcValue]) -> Option<CalcValue> {
    let mut best = f64::INFINITY;
    for v in vs {
        match v {
            CalcValue::Scalar(x) => best = best.min(*x),
            _ => return None,
        }
    }
    vs.first().map(|_| CalcValue::Scalar(best))
}

/// Possibility degrees on `[0, 1]` under `min`: fused evidence can only
/// restrict what remains possible. Closed, with the Gödel residual.
struct Pt {
    eps: f64,
}

impl Calculus for Pt {
    fn id(&self) -> &str {
        "PT"
    }

    fn carrier(&self) -> Carrier {
        Carrier::Scalar { lo: 0.0, hi: 1.0 }
    }

    fn flags(&self) -> Flags {
        Flags { has_top: true, complete: true, closed: true, total_order: true }
    }

    fn eps(&self) -> f64 {
        self.eps
    }

    fn validate(&self, v: &CalcValue) -> Result<(), Error> {
        expect_scalar(self.id(), 0.0, 1.0, v).map(|_| ())
    }

    fn leq_margin(&self, a: &CalcValue, b: &CalcValue) -> f64 {
        match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => y - x,
            _ => f64::NEG_INFINITY,
        }
    }

    fn tensor_raw(&self, a: &CalcValue, b: &CalcValue) -> CalcValue {
        match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => CalcValue::Scalar(x.min(*y)),
            _ => CalcValue::Scalar(f64::NAN),
        }
    }

    fn unit(&self) -> CalcValue {
        CalcValue::Scalar(1.0)
    }

    fn hom_raw(&self, a: &CalcValue, b: &CalcValue) -> Option<CalcValue> {
        let (x, y) = match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => (*x, *y),
            _ => return None,
        };
        if x <= y + self.eps {
            Some(CalcValue::Scalar(1.0))
        } else {
            Some(CalcValue::Scalar(y))
        }
    }

    fn top(&self) -> Option<CalcValue> {
        Some(CalcValue::Scalar(1.0))
    }

    fn bottom(&self) -> Option<CalcValue> {
        Some(CalcValue::Scalar(0.0))
    }

    fn join_raw(&self, vs: &[CalcValue]) -> Option<CalcValue> {
        scalar_max(vs)
    }

    fn meet_raw(&self, vs: &[CalcValue]) -> Option<CalcValue> {
        scalar_min(vs)
    }
}

/// Accumulated support on `[0, 1]` under `max`: fused evidence can only
/// raise the recorded degree. The unit is `0`, which is also the least
/// element — the unit sits at the bottom rather than the top, and no
/// residual is declared.
struct Ptmax {
    eps: f64,
}

impl Calculus for Ptmax {
    fn id(&self) -> &str {
        "PTMAX"
    }

    fn carrier(&self) -> Carrier {
        Carrier::Scalar { lo: 0.0, hi: 1.0 }
    }

    fn flags(&self) -> Flags {
        Flags { has_top: true, complete: true, closed: false, total_order: true }
    }

    fn eps(&self) -> f64 {
        self.eps
    }

    fn validate(&self, v: &CalcValue) -> Result<(), Error> {
        expect_scalar(self.id(), 0.0, 1.0, v).map(|_| ())
    }

    fn leq_margin(&self, a: &CalcValue, b: &CalcValue) -> f64 {
        match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => y - x,
            _ => f64::NEG_INFINITY,
        }
    }

    fn tensor_raw(&self, a: &CalcValue, b: &CalcValue) -> CalcValue {
        match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => CalcValue::Scalar(x.max(*y)),
            _ => CalcValue::Scalar(f64::NAN),
        }
    }

    fn unit(&self) -> CalcValue {
        CalcValue::Scalar(0.0)
    }

    fn top(&self) -> Option<CalcValue> {
        Some(CalcValue::Scalar(1.0))
    }

    fn bottom(&self) -> Option<CalcValue> {
        Some(CalcValue::Scalar(0.0))
    }

    fn join_raw(&self, vs: &[CalcValue]) -> Option<CalcValue> {
        scalar_max(vs)
    }

    fn meet_raw(&self, vs: &[CalcValue]) -> Option<CalcValue> {
        scalar_min(vs)
    }
}

/// Rejection/possibility pairs `(r, p)`, `0 <= r <= p <= 1`, plus an
/// explicit contradiction element.
///
/// `r` is the degree to which the hypothesis is rejected, `p` the degree to
/// which it remains possible. Fusion takes the strongest rejection and the
/// tightest possibility; when those cross, the result is the contradiction
/// element, which is the least element and absorbs further fusion.
struct Ptb {
    eps: f64,
}

impl Ptb {
    fn components(v: &CalcValue) -> Option<(f64, f64)> {
        match v {
            CalcValue::Pair(r, p) => Some((*r, *p)),
            _ => None,
        }
    }
}

impl Calculus for Ptb {
    fn id(&self) -> &str {
        "PTB"
    }

    fn carrier(&self) -> Carrier {
        Carrier::Pair { lo: 0.0, hi: 1.0 }
    }

    fn flags(&self) -> Flags {
        Flags { has_top: true, complete: true, closed: false, total_order: false }
    }

    fn eps(&self) -> f64 {
        self.eps
    }

    fn validate(&self, v: &CalcValue) -> Result<(), Error> {
        match v {
            CalcValue::Bottom => Ok(()),
            CalcValue::Pair(r, p) => {
                if !(r.is_finite() && p.is_finite()) || *r < 0.0 || *p > 1.0 || *p < 0.0 || *r > 1.0
                {
                    return Err(Error::InvalidValue {
                        calculus: String::from(self.id()),
                        detail: alloc::format!("components of {v} outside [0, 1]"),
                    });
                }
                // Fusion may leave the rejection a hair above the
                // possibility without crossing the contradiction
                // threshold, so membership is tolerant to eps.
                if *r > *p + self.eps {
                    return Err(Error::InvalidValue {
                        calculus: String::from(self.id()),
                        detail: alloc::format!("rejection exceeds possibility in {v}"),
                    });
                }
                Ok(())
            }
            other => Err(Error::InvalidValue {
                calculus: String::from(self.id()),
                detail: alloc::format!("expected a rejection/possibility pair, got {other}"),
            }),
        }
    }

    fn leq_margin(&self, a: &CalcValue, b: &CalcValue) -> f64 {
        match (a, b) {
            (CalcValue::Bottom, _) => f64::INFINITY,
            (_, CalcValue::Bottom) => f64::NEG_INFINITY,
            (CalcValue::Pair(ar, ap), CalcValue::Pair(br, bp)) => (ar - br).min(bp - ap),
            _ => f64::NEG_INFINITY,
        }
    }

    fn tensor_raw(&self, a: &CalcValue, b: &CalcValue) -> CalcValue {
        let (ar, ap) = match Self::components(a) {
            Some(c) => c,
            None => return CalcValue::Bottom,
        };
        let (br, bp) = match Self::components(b) {
            Some(c) => c,
            None => return CalcValue::Bottom,
        };
        let (r, p) = (ar.max(br), ap.min(bp));
        if r > p + self.eps {
            CalcValue::Bottom
        } else {
            CalcValue::Pair(r, p)
        }
    }

    fn unit(&self) -> CalcValue {
        CalcValue::Pair(0.0, 1.0)
    }

    fn top(&self) -> Option<CalcValue> {
        Some(CalcValue::Pair(0.0, 1.0))
    }

    fn bottom(&self) -> Option<CalcValue> {
        Some(CalcValue::Bottom)
    }

    fn join_raw(&self, vs: &[CalcValue]) -> Option<CalcValue> {
        let mut acc: Option<(f64, f64)> = None;
        for v in vs {
            match v {
                CalcValue::Bottom => continue,
                CalcValue::Pair(r, p) => {
                    acc = Some(match acc {
                        None => (*r, *p),
                        Some((jr, jp)) => (jr.min(*r), jp.max(*p)),
                    });
                }
                _ => return None,
            }
        }
        match acc {
            Some((r, p)) => Some(CalcValue::Pair(r, p)),
            None => vs.first().map(|_| CalcValue::Bottom),
        }
    }

    fn meet_raw(&self, vs: &[CalcValue]) -> Option<CalcValue> {
        let mut acc: Option<(f64, f64)> = None;
        for v in vs {
            match v {
                CalcValue::Bottom => return Some(CalcValue::Bottom),
                CalcValue::Pair(r, p) => {
                    acc = Some(match acc {
                        None => (*r, *p),
                        Some((mr, mp)) => (mr.max(*r), mp.min(*p)),
                    });
                }
                _ => return None,
            }
        }
        match acc {
            Some((r, p)) if r <= p + self.eps => Some(CalcValue::Pair(r, p)),
            Some(_) => Some(CalcValue::Bottom),
            None => None,
        }
    }
}

/// Probability intervals `[lo, hi]` inside `[0, 1]` under containment:
/// tighter intervals carry more information and sit lower. Fusion is
/// intersection, with an explicit contradiction element for empty overlap.
struct Ip {
    eps: f64,
}

impl Ip {
    fn endpoints(v: &CalcValue) -> Option<(f64, f64)> {
        match v {
            CalcValue::Interval { lo, hi } => Some((*lo, *hi)),
            _ => None,
        }
    }
}

impl Calculus for Ip {
    fn id(&self) -> &str {
        "IP"
    }

    fn carrier(&self) -> Carrier {
        Carrier::Interval { lo: 0.0, hi: 1.0 }
    }

    fn flags(&self) -> Flags {
        Flags { has_top: true, complete: true, closed: false, total_order: false }
    }

    fn eps(&self) -> f64 {
        self.eps
    }

    fn validate(&self, v: &CalcValue) -> Result<(), Error> {
        match v {
            CalcValue::Bottom => Ok(()),
            CalcValue::Interval { lo, hi } => {
                if !(lo.is_finite() && hi.is_finite())
                    || *lo < 0.0
                    || *hi > 1.0
                    || *hi < 0.0
                    || *lo > 1.0
                {
                    return Err(Error::InvalidValue {
                        calculus: String::from(self.id()),
                        detail: alloc::format!("endpoints of {v} outside [0, 1]"),
                    });
                }
                if *lo > *hi + self.eps {
                    return Err(Error::InvalidValue {
                        calculus: String::from(self.id()),
                        detail: alloc::format!("empty interval {v}"),
                    });
                }
                Ok(())
            }
            other => Err(Error::InvalidValue {
                calculus: String::from(self.id()),
                detail: alloc::format!("expected a probability interval, got {other}"),
            }),
        }
    }

    fn leq_margin(&self, a: &CalcValue, b: &CalcValue) -> f64 {
        match (a, b) {
            (CalcValue::Bottom, _) => f64::INFINITY,
            (_, CalcValue::Bottom) => f64::NEG_INFINITY,
            (CalcValue::Interval { lo: alo, hi: ahi }, CalcValue::Interval { lo: blo, hi: bhi }) => {
                (alo - blo).min(bhi - ahi)
            }
            _ => f64::NEG_INFINITY,
        }
    }

    fn tensor_raw(&self, a: &CalcValue, b: &CalcValue) -> CalcValue {
        let (alo, ahi) = match Self::endpoints(a) {
            Some(e) => e,
            None => return CalcValue::Bottom,
        };
        let (blo, bhi) = match Self::endpoints(b) {
            Some(e) => e,
            None => return CalcValue::Bottom,
        };
        let (lo, hi) = (alo.max(blo), ahi.min(bhi));
        if lo > hi + self.eps {
            CalcValue::Bottom
        } else {
            CalcValue::interval(lo, hi)
        }
    }

    fn unit(&self) -> CalcValue {
        CalcValue::interval(0.0, 1.0)
    }

    fn top(&self) -> Option<CalcValue> {
        Some(CalcValue::interval(0.0, 1.0))
    }

    fn bottom(&self) -> Option<CalcValue> {
        Some(CalcValue::Bottom)
    }

    fn join_raw(&self, vs: &[CalcValue]) -> Option<CalcValue> {
        let mut acc: Option<(f64, f64)> = None;
        for v in vs {
            match v {
                CalcValue::Bottom => continue,
                CalcValue::Interval { lo, hi } => {
                    acc = Some(match acc {
                        None => (*lo, *hi),
                        Some((jlo, jhi)) => (jlo.min(*lo), jhi.max(*hi)),
                    });
                }
                _ => return None,
            }
        }
        match acc {
            Some((lo, hi)) => Some(CalcValue::interval(lo, hi)),
            None => vs.first().map(|_| CalcValue::Bottom),
        }
    }

    fn meet_raw(&self, vs: &[CalcValue]) -> Option<CalcValue> {
        let mut acc: Option<(f64, f64)> = None;
        for v in vs {
            match v {
                CalcValue::Bottom => return Some(CalcValue::Bottom),
                CalcValue::Interval { lo, hi } => {
                    acc = Some(match acc {
                        None => (*lo, *hi),
                        Some((mlo, mhi)) => (mlo.max(*lo), mhi.min(*hi)),
                    });
                }
                _ => return None,
            }
        }
        match acc {
            Some((lo, hi)) if lo <= hi + self.eps => Some(CalcValue::interval(lo, hi)),
            Some(_) => Some(CalcValue::Bottom),
            None => None,
        }
    }
}

/// Positive likelihood ratios under multiplication, ordered numerically
/// and compared on a log scale (the tolerance is relative, so `1e6` and
/// `1e6 + 0.1` compare the same way as `1` and `1 + 1e-7`). No top, no
/// bottom, not complete; the residual is the quotient.
struct Lr {
    eps: f64,
}

impl Calculus for Lr {
    fn id(&self) -> &str {
        "LR"
    }

    fn carrier(&self) -> Carrier {
        Carrier::ScalarLog
    }

    fn flags(&self) -> Flags {
        Flags { has_top: false, complete: false, closed: true, total_order: true }
    }

    fn eps(&self) -> f64 {
        self.eps
    }

    fn validate(&self, v: &CalcValue) -> Result<(), Error> {
        match v {
            CalcValue::Scalar(x) if x.is_finite() && *x > 0.0 => Ok(()),
            CalcValue::Scalar(x) => Err(Error::InvalidValue {
                calculus: String::from(self.id()),
                detail: alloc::format!("scalar must be positive and finite, got {x}"),
            }),
            other => Err(Error::InvalidValue {
                calculus: String::from(self.id()),
                detail: alloc::format!("expected a positive scalar, got {other}"),
            }),
        }
    }

    fn leq_margin(&self, a: &CalcValue, b: &CalcValue) -> f64 {
        match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => libm::log(*y) - libm::log(*x),
            _ => f64::NEG_INFINITY,
        }
    }

    fn tensor_raw(&self, a: &CalcValue, b: &CalcValue) -> CalcValue {
        match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => CalcValue::Scalar(x * y),
            _ => CalcValue::Scalar(f64::NAN),
        }
    }

    fn unit(&self) -> CalcValue {
        CalcValue::Scalar(1.0)
    }

    fn hom_raw(&self, a: &CalcValue, b: &CalcValue) -> Option<CalcValue> {
        match (a, b) {
            (CalcValue::Scalar(x), CalcValue::Scalar(y)) => Some(CalcValue::Scalar(y / x)),
            _ => None,
        }
    }
}

/// Build every bundled calculus at the given tolerance.
pub fn all_instances(eps: f64) -> Vec<(InstanceId, CalcRef)> {
    InstanceId::ALL.iter().map(|id| (*id, id.build(eps))).collect()
}
