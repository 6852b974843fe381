//! Changes of calculi: maps between carriers, their classification, and
//! composition.
//!
//! A map `F: V -> W` is classified by sampled verification of five laws:
//!
//! * monotone: `x <= y  =>  F(x) <= F(y)`
//! * lax: `F(x) (x) F(y) <= F(x (x) y)` — fusing across the map cannot
//!   create certainty
//! * oplax: `F(x (x) y) <= F(x) (x) F(y)` — fusing across the map cannot
//!   lose certainty
//! * lax unit: `1_W <= F(1_V)`
//! * oplax unit: `F(1_V) <= 1_W`
//!
//! **Conservative** = monotone + lax + lax unit. **Liberal** = monotone +
//! oplax + oplax unit. **Balanced** = all five (a genuine symmetric
//! monoidal map). A map that is not monotone is not order-respecting at
//! all and classifies as **neither** regardless of the tensor laws.
//!
//! Verdicts are sampled and seeded like axiom checks: one-sided, with
//! replayable counterexamples attached.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::calculus::CalcRef;
use crate::error::Error;
use crate::instances::InstanceId;
use crate::sampler::sample_tuples;
use crate::tolerance::{Region, Tolerance};
use crate::value::CalcValue;

/// A named map between two calculi.
#[derive(Clone)]
pub struct CalculusMap {
    name: String,
    source: CalcRef,
    target: CalcRef,
    apply: Arc<dyn Fn(&CalcValue) -> CalcValue + Send + Sync>,
}

impl fmt::Debug for CalculusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CalculusMap")
            .field("name", &self.name)
            .field("source", &self.source.id())
            .field("target", &self.target.id())
            .finish_non_exhaustive()
    }
}

impl CalculusMap {
    pub fn new(
        name: impl Into<String>,
        source: CalcRef,
        target: CalcRef,
        apply: Arc<dyn Fn(&CalcValue) -> CalcValue + Send + Sync>,
    ) -> Self {
        CalculusMap { name: name.into(), source, target, apply }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &CalcRef {
        &self.source
    }

    pub fn target(&self) -> &CalcRef {
        &self.target
    }

    /// Apply without validation; callers must pass a valid source value.
    pub fn apply_raw(&self, v: &CalcValue) -> CalcValue {
        (self.apply)(v)
    }

    /// Apply with validation on both sides: the input must lie in the
    /// source carrier and the image must land in the target carrier.
    pub fn apply(&self, v: &CalcValue) -> Result<CalcValue, Error> {
        self.source.validate(v)?;
        let out = (self.apply)(v);
        self.target.validate(&out)?;
        Ok(out)
    }
}

/// The identity map on a calculus, named `identity:<ID>`.
pub fn identity(c: CalcRef) -> CalculusMap {
    let name = alloc::format!("identity:{}", c.id());
    CalculusMap::new(name, c.clone(), c, Arc::new(|v: &CalcValue| *v))
}

/// Reading a rejection/possibility pair as the probability interval with
/// those endpoints: `(r, p) -> [r, p]`, contradiction to contradiction.
pub fn ptb_to_ip(eps: f64) -> CalculusMap {
    CalculusMap::new(
        "ptb_to_ip",
        InstanceId::Ptb.build(eps),
        InstanceId::Ip.build(eps),
        Arc::new(|v: &CalcValue| match v {
            CalcValue::Pair(r, p) => CalcValue::interval(*r, *p),
            _ => CalcValue::Bottom,
        }),
    )
}

/// Inverse reading: `[lo, hi] -> (lo, hi)`, contradiction to contradiction.
pub fn ip_to_ptb(eps: f64) -> CalculusMap {
    CalculusMap::new(
        "ip_to_ptb",
        InstanceId::Ip.build(eps),
        InstanceId::Ptb.build(eps),
        Arc::new(|v: &CalcValue| match v {
            CalcValue::Interval { lo, hi } => CalcValue::Pair(*lo, *hi),
            _ => CalcValue::Bottom,
        }),
    )
}

/// Possibility degrees recentered as signed confirmation: `x -> 2x - 1`.
pub fn pt_to_cf(eps: f64) -> CalculusMap {
    CalculusMap::new(
        "pt_to_cf",
        InstanceId::Pt.build(eps),
        InstanceId::Cf.build(eps),
        Arc::new(|v: &CalcValue| match v {
            CalcValue::Scalar(x) => CalcValue::Scalar((2.0 * x - 1.0).clamp(-1.0, 1.0)),
            other => *other,
        }),
    )
}

/// Possibility minus non-rejectedness: `(r, p) -> p - (1 - r)`. The
/// contradiction element goes to total disbelief `-1` — an extension, since
/// the signed carrier has no contradiction element of its own.
pub fn ptb_to_cf(eps: f64) -> CalculusMap {
    CalculusMap::new(
        "ptb_to_cf",
        InstanceId::Ptb.build(eps),
        InstanceId::Cf.build(eps),
        Arc::new(|v: &CalcValue| match v {
            CalcValue::Pair(r, p) => CalcValue::Scalar((p - (1.0 - r)).clamp(-1.0, 1.0)),
            _ => CalcValue::Scalar(-1.0),
        }),
    )
}

/// Stable names of the non-identity built-in maps.
pub const BUILTIN_MAPS: [&str; 4] = ["ptb_to_ip", "ip_to_ptb", "pt_to_cf", "ptb_to_cf"];

/// Look up a built-in map by its stable name. Identity maps are spelled
/// `identity:<CALCULUS>`.
pub fn builtin(name: &str, eps: f64) -> Result<CalculusMap, Error> {
    if let Some(id) = name.strip_prefix("identity:") {
        let id: InstanceId = id.parse()?;
        return Ok(identity(id.build(eps)));
    }
    match name {
        "ptb_to_ip" => Ok(ptb_to_ip(eps)),
        "ip_to_ptb" => Ok(ip_to_ptb(eps)),
        "pt_to_cf" => Ok(pt_to_cf(eps)),
        "ptb_to_cf" => Ok(ptb_to_cf(eps)),
        _ => Err(Error::UnknownMap { name: String::from(name) }),
    }
}

/// Pointwise composition: apply `f`, then `g`. Requires `f`'s target and
/// `g`'s source to be the same calculus.
pub fn compose(f: &CalculusMap, g: &CalculusMap) -> Result<CalculusMap, Error> {
    if f.target.id() != g.source.id() {
        return Err(Error::MismatchedCalculi {
            expected: String::from(f.target.id()),
            found: String::from(g.source.id()),
        });
    }
    let (fa, ga) = (f.apply.clone(), g.apply.clone());
    Ok(CalculusMap::new(
        alloc::format!("{}∘{}", g.name, f.name),
        f.source.clone(),
        g.target.clone(),
        Arc::new(move |v: &CalcValue| ga(&fa(v))),
    ))
}

/// Verdict for one map law: sampled, one-sided, with a replayable
/// counterexample when it fails.
#[derive(Debug, Clone, PartialEq)]
pub struct MapLawVerdict {
    pub law: &'static str,
    pub holds: bool,
    /// For binary laws: `[x, y, lhs, rhs]` with `x, y` in the source and
    /// `lhs !<= rhs` in the target. For unit laws: `[lhs, rhs]`.
    pub counterexample: Option<Vec<CalcValue>>,
}

impl MapLawVerdict {
    fn holds(law: &'static str) -> Self {
        MapLawVerdict { law, holds: true, counterexample: None }
    }

    fn fails(law: &'static str, cx: Vec<CalcValue>) -> Self {
        MapLawVerdict { law, holds: false, counterexample: Some(cx) }
    }
}

/// Overall character of a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapSummary {
    Conservative,
    Liberal,
    Balanced,
    Neither,
}

impl MapSummary {
    pub fn name(self) -> &'static str {
        match self {
            MapSummary::Conservative => "conservative",
            MapSummary::Liberal => "liberal",
            MapSummary::Balanced => "balanced",
            MapSummary::Neither => "neither",
        }
    }
}

impl fmt::Display for MapSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classification of a map: the five law verdicts and the derived summary.
#[derive(Debug, Clone, PartialEq)]
pub struct MapClassification {
    pub map: String,
    pub monotone: MapLawVerdict,
    pub lax: MapLawVerdict,
    pub oplax: MapLawVerdict,
    pub lax_unit: MapLawVerdict,
    pub oplax_unit: MapLawVerdict,
    pub summary: MapSummary,
    pub sampler: Tolerance,
}

impl MapClassification {
    /// Conservative or balanced: safe to transport enrichments along.
    pub fn is_conservative(&self) -> bool {
        matches!(self.summary, MapSummary::Conservative | MapSummary::Balanced)
    }
}

fn derive_summary(
    monotone: &MapLawVerdict,
    lax: &MapLawVerdict,
    oplax: &MapLawVerdict,
    lax_unit: &MapLawVerdict,
    oplax_unit: &MapLawVerdict,
) -> MapSummary {
    if !monotone.holds {
        return MapSummary::Neither;
    }
    let conservative = lax.holds && lax_unit.holds;
    let liberal = oplax.holds && oplax_unit.holds;
    match (conservative, liberal) {
        (true, true) => MapSummary::Balanced,
        (true, false) => MapSummary::Conservative,
        (false, true) => MapSummary::Liberal,
        (false, false) => MapSummary::Neither,
    }
}

const CLASSIFY_LANE: u64 = 20;

/// Classify a map by sampling its source carrier (full region, so poles,
/// units, and the contradiction element are always exercised).
pub fn classify(f: &CalculusMap, t: &Tolerance) -> MapClassification {
    let (src, dst) = (f.source.as_ref(), f.target.as_ref());
    let eps = dst.eps();
    let mut monotone = MapLawVerdict::holds("monotone");
    let mut lax = MapLawVerdict::holds("lax");
    let mut oplax = MapLawVerdict::holds("oplax");

    for tuple in sample_tuples(src, Region::Full, t, 2, CLASSIFY_LANE) {
        let (x, y) = (tuple[0], tuple[1]);
        let (fx, fy) = (f.apply_raw(&x), f.apply_raw(&y));

        // Monotonicity, strict premise so source-side tolerance noise
        // cannot manufacture a counterexample.
        if monotone.holds
            && src.leq_margin(&x, &y) >= src.eps()
            && dst.leq_margin(&fx, &fy) < -eps
        {
            monotone = MapLawVerdict::fails("monotone", alloc::vec![x, y, fx, fy]);
        }

        let f_fused = f.apply_raw(&src.tensor_raw(&x, &y));
        let fused_f = dst.tensor_raw(&fx, &fy);
        if lax.holds && dst.leq_margin(&fused_f, &f_fused) < -eps {
            lax = MapLawVerdict::fails("lax", alloc::vec![x, y, fused_f, f_fused]);
        }
        if oplax.holds && dst.leq_margin(&f_fused, &fused_f) < -eps {
            oplax = MapLawVerdict::fails("oplax", alloc::vec![x, y, f_fused, fused_f]);
        }
        if !monotone.holds && !lax.holds && !oplax.holds {
            break;
        }
    }

    let f_unit = f.apply_raw(&src.unit());
    let w_unit = dst.unit();
    let lax_unit = if dst.leq_margin(&w_unit, &f_unit) >= -eps {
        MapLawVerdict::holds("lax_unit")
    } else {
        MapLawVerdict::fails("lax_unit", alloc::vec![w_unit, f_unit])
    };
    let oplax_unit = if dst.leq_margin(&f_unit, &w_unit) >= -eps {
        MapLawVerdict::holds("oplax_unit")
    } else {
        MapLawVerdict::fails("oplax_unit", alloc::vec![f_unit, w_unit])
    };

    let summary = derive_summary(&monotone, &lax, &oplax, &lax_unit, &oplax_unit);
    MapClassification {
        map: f.name.clone(),
        monotone,
        lax,
        oplax,
        lax_unit,
        oplax_unit,
        summary,
        sampler: *t,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance { sample_count: 2_000, ..Tolerance::default() }
    }

    #[test]
    fn builtin_registry_round_trips() {
        for name in BUILTIN_MAPS {
            let m = builtin(name, 1e-9).unwrap();
            assert_eq!(m.name(), name);
        }
        let id = builtin("identity:PT", 1e-9).unwrap();
        assert_eq!(id.source().id(), "PT");
        assert_eq!(id.target().id(), "PT");
        assert!(matches!(builtin("nope", 1e-9), Err(Error::UnknownMap { .. })));
        assert!(matches!(builtin("identity:QQ", 1e-9), Err(Error::UnknownCalculus { .. })));
    }

    #[test]
    fn pt_to_cf_worked_examples() {
        let f = pt_to_cf(1e-9);
        assert_eq!(f.apply(&CalcValue::Scalar(1.0)).unwrap(), CalcValue::Scalar(1.0));
        assert_eq!(f.apply(&CalcValue::Scalar(0.5)).unwrap(), CalcValue::Scalar(0.0));
        assert_eq!(f.apply(&CalcValue::Scalar(0.0)).unwrap(), CalcValue::Scalar(-1.0));
        assert!(f.apply(&CalcValue::Scalar(1.5)).is_err());
    }

    #[test]
    fn ptb_to_cf_worked_examples() {
        let f = ptb_to_cf(1e-9);
        assert_eq!(f.apply(&CalcValue::Pair(0.0, 1.0)).unwrap(), CalcValue::Scalar(0.0));
        assert_eq!(f.apply(&CalcValue::Pair(1.0, 1.0)).unwrap(), CalcValue::Scalar(1.0));
        assert_eq!(f.apply(&CalcValue::Pair(0.0, 0.0)).unwrap(), CalcValue::Scalar(-1.0));
        assert_eq!(f.apply(&CalcValue::Pair(0.5, 0.5)).unwrap(), CalcValue::Scalar(0.0));
        assert_eq!(f.apply(&CalcValue::Bottom).unwrap(), CalcValue::Scalar(-1.0));
    }

    #[test]
    fn interval_reading_round_trips() {
        let fwd = ptb_to_ip(1e-9);
        let back = ip_to_ptb(1e-9);
        assert_eq!(
            fwd.apply(&CalcValue::Pair(0.2, 0.7)).unwrap(),
            CalcValue::interval(0.2, 0.7)
        );
        assert_eq!(
            back.apply(&CalcValue::interval(0.2, 0.7)).unwrap(),
            CalcValue::Pair(0.2, 0.7)
        );
        assert_eq!(fwd.apply(&CalcValue::Bottom).unwrap(), CalcValue::Bottom);
        // Degenerate pair round-trips exactly.
        let rt = back.apply(&fwd.apply(&CalcValue::Pair(0.3, 0.3)).unwrap()).unwrap();
        assert!(rt.bits_eq(&CalcValue::Pair(0.3, 0.3)));
    }

    #[test]
    fn composition_worked_examples() {
        let g = compose(&ip_to_ptb(1e-9), &ptb_to_cf(1e-9)).unwrap();
        assert_eq!(g.apply(&CalcValue::interval(0.0, 1.0)).unwrap(), CalcValue::Scalar(0.0));
        assert_eq!(g.source().id(), "IP");
        assert_eq!(g.target().id(), "CF");

        // Composing with the identity changes nothing pointwise.
        let f = pt_to_cf(1e-9);
        let fid = compose(&f, &identity(InstanceId::Cf.build(1e-9))).unwrap();
        for x in [0.0, 0.25, 0.5, 0.9, 1.0] {
            let v = CalcValue::Scalar(x);
            assert!(fid.apply(&v).unwrap().bits_eq(&f.apply(&v).unwrap()));
        }

        let err = compose(&pt_to_cf(1e-9), &ptb_to_cf(1e-9)).unwrap_err();
        assert!(matches!(err, Error::MismatchedCalculi { .. }));
    }

    #[test]
    fn identity_and_interval_reading_classify_balanced() {
        let t = tol();
        assert_eq!(classify(&identity(InstanceId::Pt.build(1e-9)), &t).summary, MapSummary::Balanced);
        assert_eq!(classify(&ptb_to_ip(1e-9), &t).summary, MapSummary::Balanced);
        assert_eq!(classify(&ip_to_ptb(1e-9), &t).summary, MapSummary::Balanced);
    }

    #[test]
    fn pt_to_cf_classification() {
        let c = classify(&pt_to_cf(1e-9), &tol());
        assert!(c.monotone.holds);
        assert!(!c.lax.holds, "recentering is not lax");
        assert!(c.lax_unit.holds);
        assert!(!c.oplax.holds, "recentering is not oplax either");
        assert!(!c.oplax_unit.holds, "full possibility maps above the signed unit");
        assert_eq!(c.summary, MapSummary::Neither);
        // The stored lax counterexample replays: fusing the images exceeds
        // the image of the fusion.
        let cx = c.lax.counterexample.unwrap();
        let cf = InstanceId::Cf.build(1e-9);
        assert!(cf.leq_margin(&cx[2], &cx[3]) < -1e-9);
    }

    #[test]
    fn ptb_to_cf_classification() {
        let c = classify(&ptb_to_cf(1e-9), &tol());
        assert!(!c.monotone.holds, "score collapses the partial order");
        assert_eq!(c.summary, MapSummary::Neither);
        assert!(c.lax_unit.holds && c.oplax_unit.holds);
        // Monotonicity counterexample replays in both calculi.
        let cx = c.monotone.counterexample.unwrap();
        let ptb = InstanceId::Ptb.build(1e-9);
        let cf = InstanceId::Cf.build(1e-9);
        assert!(ptb.leq_margin(&cx[0], &cx[1]) >= 1e-9);
        assert!(cf.leq_margin(&cx[2], &cx[3]) < -1e-9);
    }

    #[test]
    fn images_stay_in_the_target_carrier() {
        let t = Tolerance { sample_count: 5_000, ..Tolerance::default() };
        for name in BUILTIN_MAPS {
            let f = builtin(name, 1e-9).unwrap();
            for tuple in sample_tuples(f.source().as_ref(), Region::Full, &t, 1, 33) {
                f.apply(&tuple[0]).unwrap_or_else(|e| panic!("{name}: {e}"));
            }
        }
    }
}
