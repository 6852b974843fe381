//! The calculus descriptor trait and the generic operations over it.
//!
//! A calculus is a symmetric monoidal poset: a carrier with a partial order
//! `leq`, a commutative monotone `tensor` (evidence fusion), and a `unit`.
//! Optional structure is declared, never assumed: a top element, a bottom
//! element, completeness (arbitrary joins/meets), and an internal hom
//! satisfying the adjunction `tensor(z, a) <= b  <=>  z <= hom(a, b)`.
//!
//! The trait exposes *raw* operations with validity preconditions; the
//! module-level functions ([`leq`], [`tensor`], [`fuse_all`], [`hom`],
//! [`hom_by_sup`], [`join`], [`meet`]) validate their inputs and are the
//! intended entry points.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Error;
use crate::tolerance::Tolerance;
use crate::value::CalcValue;

/// Declared structural properties of a calculus.
///
/// Flags record what the calculus *claims*; the axiom checker measures how
/// the claims hold up under sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flags {
    /// A greatest element is declared.
    pub has_top: bool,
    /// Arbitrary joins and meets exist (complete lattice).
    pub complete: bool,
    /// An internal hom adjoint to the tensor is declared.
    pub closed: bool,
    /// The order is total.
    pub total_order: bool,
}

/// Shape of a carrier, used by samplers and grid searches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Carrier {
    /// Scalars in the closed range `[lo, hi]`.
    Scalar { lo: f64, hi: f64 },
    /// Strictly positive scalars, unbounded; sampled and compared on a log
    /// scale. Carries no declared bounds, so bounded grid searches do not
    /// apply.
    ScalarLog,
    /// Ordered pairs `(r, p)` with `lo <= r <= p <= hi`, plus `Bottom`.
    Pair { lo: f64, hi: f64 },
    /// Closed subintervals of `[lo, hi]`, plus `Bottom`.
    Interval { lo: f64, hi: f64 },
}

/// A calculus descriptor.
///
/// Raw operations require already-validated inputs; use the module-level
/// functions for checked access. `leq_margin` is the single order
/// primitive: it returns a signed margin `m` with `leq <=> m >= -eps`,
/// which also powers the robust (margin-aware) law checks.
pub trait Calculus: Send + Sync {
    /// Stable identifier (`"CF"`, `"PT"`, `"PTMAX"`, `"PTB"`, `"IP"`, `"LR"`, ...).
    fn id(&self) -> &str;

    /// Carrier shape for samplers and grids.
    fn carrier(&self) -> Carrier;

    /// Declared structural flags.
    fn flags(&self) -> Flags;

    /// Comparison tolerance baked into this instance (used by the tensor's
    /// contradiction threshold and the convenience predicates).
    fn eps(&self) -> f64;

    /// Validate carrier membership, naming the offending component.
    fn validate(&self, v: &CalcValue) -> Result<(), Error>;

    /// Signed order margin: positive when `a` is strictly below `b`,
    /// negative when it is not, `+inf`/`-inf` around `Bottom`. For
    /// incomparable pairs the margin is negative (a failed `leq`).
    fn leq_margin(&self, a: &CalcValue, b: &CalcValue) -> f64;

    /// Fusion of two valid values. Total: contradictions map to `Bottom`
    /// where that element exists.
    fn tensor_raw(&self, a: &CalcValue, b: &CalcValue) -> CalcValue;

    /// Neutral element of the tensor.
    fn unit(&self) -> CalcValue;

    /// Declared internal hom, if the calculus is closed.
    fn hom_raw(&self, _a: &CalcValue, _b: &CalcValue) -> Option<CalcValue> {
        None
    }

    /// Declared greatest element.
    fn top(&self) -> Option<CalcValue> {
        None
    }

    /// Declared least element.
    fn bottom(&self) -> Option<CalcValue> {
        None
    }

    /// Join of a non-empty finite set, if the calculus is complete.
    fn join_raw(&self, _vs: &[CalcValue]) -> Option<CalcValue> {
        None
    }

    /// Meet of a non-empty finite set, if the calculus is complete.
    fn meet_raw(&self, _vs: &[CalcValue]) -> Option<CalcValue> {
        None
    }

    /// Order predicate on valid values: `leq_margin >= -eps`.
    fn leq_raw(&self, a: &CalcValue, b: &CalcValue) -> bool {
        self.leq_margin(a, b) >= -self.eps()
    }

    /// Equality up to `eps` (both directions of `leq_raw`).
    fn value_eq(&self, a: &CalcValue, b: &CalcValue) -> bool {
        self.leq_margin(a, b) >= -self.eps() && self.leq_margin(b, a) >= -self.eps()
    }
}

/// Shared handle to a calculus instance.
pub type CalcRef = Arc<dyn Calculus>;

fn validated<'a>(
    c: &dyn Calculus,
    vs: &'a [(&'a str, &'a CalcValue)],
) -> Result<(), Error> {
    for (role, v) in vs {
        c.validate(v).map_err(|e| match e {
            Error::InvalidValue { calculus, detail } => Error::InvalidValue {
                calculus,
                detail: alloc::format!("{role}: {detail}"),
            },
            other => other,
        })?;
    }
    Ok(())
}

/// Checked order predicate.
pub fn leq(c: &dyn Calculus, a: &CalcValue, b: &CalcValue) -> Result<bool, Error> {
    validated(c, &[("left operand", a), ("right operand", b)])?;
    Ok(c.leq_raw(a, b))
}

/// Checked fusion of two values; the result is validated before returning,
/// so numeric escapes (e.g. overflow on unbounded carriers) surface as
/// `InvalidValue` instead of propagating silently.
pub fn tensor(c: &dyn Calculus, a: &CalcValue, b: &CalcValue) -> Result<CalcValue, Error> {
    validated(c, &[("left operand", a), ("right operand", b)])?;
    let out = c.tensor_raw(a, b);
    c.validate(&out).map_err(|e| match e {
        Error::InvalidValue { calculus, detail } => Error::InvalidValue {
            calculus,
            detail: alloc::format!("fusion result: {detail}"),
        },
        other => other,
    })?;
    Ok(out)
}

/// Fold of the tensor over a non-empty list. On the associative interior
/// the result is permutation-invariant within `eps`; the fold is performed
/// left to right for determinism.
pub fn fuse_all(c: &dyn Calculus, vs: &[CalcValue]) -> Result<CalcValue, Error> {
    let (first, rest) = vs.split_first().ok_or(Error::EmptyInput)?;
    c.validate(first)?;
    let mut acc = *first;
    for v in rest {
        acc = tensor(c, &acc, v)?;
    }
    Ok(acc)
}

/// Checked internal hom.
///
/// Uses the declared hom when the calculus is closed. When it is not but
/// the carrier is a bounded scalar range of a complete calculus, falls back
/// to [`hom_by_sup`] with the default [`Tolerance`]; otherwise errors with
/// `HomUnavailable`.
pub fn hom(c: &dyn Calculus, a: &CalcValue, b: &CalcValue) -> Result<CalcValue, Error> {
    validated(c, &[("antecedent", a), ("consequent", b)])?;
    if let Some(h) = c.hom_raw(a, b) {
        return Ok(h);
    }
    let scalar = matches!(c.carrier(), Carrier::Scalar { .. });
    if c.flags().complete && scalar {
        return hom_by_sup(c, a, b, &Tolerance::default());
    }
    Err(Error::HomUnavailable {
        calculus: String::from(c.id()),
        detail: String::from("no declared hom, and the sup fallback needs a complete calculus with a bounded scalar carrier"),
    })
}

/// Grid points for supremum and witness searches over a carrier.
///
/// Scalar carriers get `grid_resolution + 1` evenly spaced points including
/// both endpoints. The positive log carrier gets log-spaced points over the
/// documented span `[1e-9, 1e9]`. Pair and interval carriers get a product
/// lattice with about `grid_resolution` valid points in total (per-axis
/// resolution is the square root of the budget); the contradiction element
/// is *not* a candidate — it is the declared fallback for empty searches.
pub fn search_grid(c: &dyn Calculus, grid_resolution: u32) -> Result<Vec<CalcValue>, Error> {
    let n = grid_resolution.max(2);
    match c.carrier() {
        Carrier::Scalar { lo, hi } => {
            let step = (hi - lo) / n as f64;
            Ok((0..=n).map(|i| CalcValue::Scalar(lo + step * i as f64)).collect())
        }
        Carrier::ScalarLog => {
            // Log-spaced span for the unbounded positive axis; wide enough
            // that quotients of sampled values stay well inside.
            let (llo, lhi) = (libm::log(1e-9), libm::log(1e9));
            let step = (lhi - llo) / n as f64;
            Ok((0..=n)
                .map(|i| CalcValue::Scalar(libm::exp(llo + step * i as f64)))
                .collect())
        }
        Carrier::Pair { lo, hi } => {
            let per_axis = per_axis_resolution(n);
            let step = (hi - lo) / per_axis as f64;
            let mut grid = Vec::new();
            for i in 0..=per_axis {
                for j in i..=per_axis {
                    grid.push(CalcValue::Pair(lo + step * i as f64, lo + step * j as f64));
                }
            }
            Ok(grid)
        }
        Carrier::Interval { lo, hi } => {
            let per_axis = per_axis_resolution(n);
            let step = (hi - lo) / per_axis as f64;
            let mut grid = Vec::new();
            for i in 0..=per_axis {
                for j in i..=per_axis {
                    grid.push(CalcValue::interval(lo + step * i as f64, lo + step * j as f64));
                }
            }
            Ok(grid)
        }
    }
}

fn per_axis_resolution(budget: u32) -> u32 {
    let r = libm::sqrt(budget as f64) as u32;
    r.max(2)
}

/// Grid-search approximation of the internal hom: the supremum of
/// `{ z in grid | tensor(z, a) <= b }`.
///
/// Membership uses the exact order margin (no `eps` slack) so the result
/// stays within one grid step of the true hom on closed calculi. An empty
/// candidate set returns the declared bottom, or `NoWitness` without one.
/// Requires a carrier with declared bounds (scalar, pair, or interval).
pub fn hom_by_sup(
    c: &dyn Calculus,
    a: &CalcValue,
    b: &CalcValue,
    t: &Tolerance,
) -> Result<CalcValue, Error> {
    validated(c, &[("antecedent", a), ("consequent", b)])?;
    if matches!(c.carrier(), Carrier::ScalarLog) {
        return Err(Error::HomUnavailable {
            calculus: String::from(c.id()),
            detail: String::from("carrier declares no bounds; grid search does not apply"),
        });
    }
    let grid = search_grid(c, t.grid_resolution)?;
    let candidates: Vec<CalcValue> = grid
        .into_iter()
        .filter(|z| c.leq_margin(&c.tensor_raw(z, a), b) >= 0.0)
        .collect();
    if candidates.is_empty() {
        return c.bottom().ok_or(Error::NoWitness { calculus: String::from(c.id()) });
    }
    if let Some(j) = c.join_raw(&candidates) {
        return Ok(j);
    }
    // Total orders without a declared join: plain maximum scan.
    let mut best = candidates[0];
    for z in &candidates[1..] {
        if c.leq_raw(&best, z) {
            best = *z;
        }
    }
    Ok(best)
}

/// Join (least upper bound) of a non-empty finite set of a complete calculus.
pub fn join(c: &dyn Calculus, vs: &[CalcValue]) -> Result<CalcValue, Error> {
    if vs.is_empty() {
        return Err(Error::EmptyInput);
    }
    for v in vs {
        c.validate(v)?;
    }
    if !c.flags().complete {
        return Err(Error::NotComplete { calculus: String::from(c.id()) });
    }
    c.join_raw(vs).ok_or(Error::NotComplete { calculus: String::from(c.id()) })
}

/// Meet (greatest lower bound) of a non-empty finite set of a complete calculus.
pub fn meet(c: &dyn Calculus, vs: &[CalcValue]) -> Result<CalcValue, Error> {
    if vs.is_empty() {
        return Err(Error::EmptyInput);
    }
    for v in vs {
        c.validate(v)?;
    }
    if !c.flags().complete {
        return Err(Error::NotComplete { calculus: String::from(c.id()) });
    }
    c.meet_raw(vs).ok_or(Error::NotComplete { calculus: String::from(c.id()) })
}
