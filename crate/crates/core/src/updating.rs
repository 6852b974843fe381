//! Evidence updating on hypothesis graphs, generalizing Bayesian
//! conditioning to any closed calculus.
//!
//! Given a graph containing an evidence object `E`, every degree is
//! replaced by
//!
//! ```text
//! updated(H, H') = hom( homs(H, H') (x) homs(H', E),  homs(H, E) )
//! ```
//!
//! which asks: how much of the direct support for `E` from `H` is left
//! once the route through `H'` is accounted for? In the likelihood-ratio
//! calculus this is exactly Bayes' rule on odds; in possibility theory it
//! is the Gödel conditional; in the signed-confirmation calculus it is
//! subtraction of evidence weights in the hyperbolic reparameterization.
//! Independent oracles for those three readings live alongside the
//! updater so results can be cross-checked.
//!
//! Updating requires a *closed* calculus (a declared hom); rejection/
//! possibility pairs and probability intervals are not closed, and
//! [`v_update`] refuses them rather than substituting a searched hom.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::hypotheses::{EnrichmentReport, HypothesisGraph};
use crate::value::CalcValue;

/// How one updated degree was computed: the three inputs and the output.
/// Replaying `hom(prior (x) to_evidence, from_evidence)` reproduces
/// `updated` bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct ProvenanceRecord {
    pub from: String,
    pub to: String,
    /// `homs(from, to)` before updating.
    pub prior: CalcValue,
    /// `homs(to, evidence)`.
    pub to_evidence: CalcValue,
    /// `homs(from, evidence)`.
    pub from_evidence: CalcValue,
    pub updated: CalcValue,
}

/// Outcome of [`v_update`]: the updated graph, a provenance record per
/// ordered pair in row-major order, and a fresh enrichment validation of
/// the result — updated graphs are revalidated, never assumed valid.
#[derive(Debug, Clone)]
pub struct UpdateResult {
    pub graph: HypothesisGraph,
    pub evidence: String,
    pub provenance: Vec<ProvenanceRecord>,
    pub validation: EnrichmentReport,
}

/// Update every degree of `g` against the evidence object.
pub fn v_update(g: &HypothesisGraph, evidence: &str) -> Result<UpdateResult, Error> {
    let c = g.calculus().clone();
    if !c.flags().closed {
        return Err(Error::NotClosed { calculus: String::from(c.id()) });
    }
    let e = g.index_of(evidence)?;
    let n = g.object_count();
    let mut homs = Vec::with_capacity(n * n);
    let mut provenance = Vec::with_capacity(n * n);
    for from in 0..n {
        let from_evidence = g.hom_by_index(from, e);
        for to in 0..n {
            let prior = g.hom_by_index(from, to);
            let to_evidence = g.hom_by_index(to, e);
            let fused = c.tensor_raw(&prior, &to_evidence);
            let updated = c.hom_raw(&fused, &from_evidence).ok_or_else(|| {
                Error::HomUnavailable {
                    calculus: String::from(c.id()),
                    detail: String::from("calculus flagged closed but declared no hom"),
                }
            })?;
            provenance.push(ProvenanceRecord {
                from: g.objects()[from].clone(),
                to: g.objects()[to].clone(),
                prior,
                to_evidence,
                from_evidence,
                updated,
            });
            homs.push(updated);
        }
    }
    let graph = HypothesisGraph::from_table(c, g.mode(), g.objects().to_vec(), homs)?;
    let validation = graph.validate_enrichment();
    Ok(UpdateResult { graph, evidence: String::from(evidence), provenance, validation })
}

/// Read off priors relative to a reference hypothesis: `p(H) = homs(R, H)`
/// for every object in graph order. On an enriched graph the reference's
/// own entry is the unit.
pub fn normalize(g: &HypothesisGraph, reference: &str) -> Result<Vec<(String, CalcValue)>, Error> {
    let r = g.index_of(reference)?;
    Ok(g.objects()
        .iter()
        .enumerate()
        .map(|(i, id)| (id.clone(), g.hom_by_index(r, i)))
        .collect())
}

fn finite_positive(label: &str, id: &str, x: f64) -> Result<(), Error> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::NonPositiveInput {
            detail: alloc::format!("{label} for {id:?} must be positive and finite, got {x}"),
        });
    }
    Ok(())
}

/// Posterior odds by direct multiplication: for every ordered pair of
/// hypotheses the oracle returns
///
/// ```text
/// (prior(H) * likelihood(H)) / (prior(H') * likelihood(H'))
/// ```
///
/// Priors must be positive and finite; likelihoods must lie in `(0, 1]`.
/// Every prior needs a likelihood. This is the independent check for
/// [`v_update`] on likelihood-ratio graphs built from the same numbers.
pub fn bayes_oracle(
    priors: &[(&str, f64)],
    likelihoods: &[(&str, f64)],
) -> Result<BTreeMap<(String, String), f64>, Error> {
    let mut likelihood = BTreeMap::new();
    for (id, l) in likelihoods {
        finite_positive("likelihood", id, *l)?;
        if *l > 1.0 {
            return Err(Error::NonPositiveInput {
                detail: alloc::format!("likelihood for {id:?} must lie in (0, 1], got {l}"),
            });
        }
        likelihood.insert(*id, *l);
    }
    let mut weight = Vec::with_capacity(priors.len());
    for (id, p) in priors {
        finite_positive("prior", id, *p)?;
        if weight.iter().any(|(seen, _)| seen == id) {
            return Err(Error::PreconditionUnmet {
                hypothesis: String::from("distinct hypothesis ids"),
                detail: alloc::format!("{id:?} appears twice"),
            });
        }
        let l = likelihood
            .get(id)
            .ok_or_else(|| Error::UnknownObject { id: String::from(*id) })?;
        weight.push((*id, p * l));
    }
    let mut odds = BTreeMap::new();
    for (a, wa) in &weight {
        for (b, wb) in &weight {
            odds.insert((String::from(*a), String::from(*b)), wa / wb);
        }
    }
    Ok(odds)
}

/// The possibilistic conditional evaluated directly: for every ordered
/// pair, with `a = homs(H, H')`, `b = homs(H', E)`, `c = homs(H, E)`, the
/// oracle returns `1` when `min(a, b) <= c` (plain comparison) and `c`
/// otherwise. Agrees with [`v_update`] whenever `min(a, b)` is not within
/// tolerance of `c`.
pub fn possibilistic_oracle(
    g: &HypothesisGraph,
    evidence: &str,
) -> Result<BTreeMap<(String, String), CalcValue>, Error> {
    if g.calculus().id() != "PT" {
        return Err(Error::CalculusMismatch {
            expected: String::from("PT"),
            found: String::from(g.calculus().id()),
        });
    }
    let e = g.index_of(evidence)?;
    let scalar = |v: CalcValue| v.as_scalar().expect("possibility degrees are scalars");
    let mut out = BTreeMap::new();
    for (i, from) in g.objects().iter().enumerate() {
        let c = scalar(g.hom_by_index(i, e));
        for (j, to) in g.objects().iter().enumerate() {
            let a = scalar(g.hom_by_index(i, j));
            let b = scalar(g.hom_by_index(j, e));
            let updated = if a.min(b) <= c { 1.0 } else { c };
            out.insert((from.clone(), to.clone()), CalcValue::Scalar(updated));
        }
    }
    Ok(out)
}

/// The signed-confirmation update computed in evidence weights: each
/// degree `v` in the open interval `(-1, 1)` has weight `atanh(v)`, the
/// updated weight is
///
/// ```text
/// e(H, E) - (e(H, H') + e(H', E))
/// ```
///
/// and the oracle returns its `tanh`. Degrees at `-1` or `1` have infinite
/// weight and are rejected as boundary values.
pub fn cf_evidence_oracle(
    g: &HypothesisGraph,
    evidence: &str,
) -> Result<BTreeMap<(String, String), CalcValue>, Error> {
    if g.calculus().id() != "CF" {
        return Err(Error::CalculusMismatch {
            expected: String::from("CF"),
            found: String::from(g.calculus().id()),
        });
    }
    let e = g.index_of(evidence)?;
    let weight = |from: usize, to: usize| -> Result<f64, Error> {
        let v = g.hom_by_index(from, to).as_scalar().expect("confirmation degrees are scalars");
        if v <= -1.0 || v >= 1.0 {
            return Err(Error::BoundaryValue {
                detail: alloc::format!(
                    "degree ({:?}, {:?}) = {v} has infinite evidence weight",
                    g.objects()[from],
                    g.objects()[to]
                ),
            });
        }
        Ok(libm::atanh(v))
    };
    let mut out = BTreeMap::new();
    for (i, from) in g.objects().iter().enumerate() {
        let direct = weight(i, e)?;
        for (j, to) in g.objects().iter().enumerate() {
            let routed = weight(i, j)? + weight(j, e)?;
            out.insert(
                (from.clone(), to.clone()),
                CalcValue::Scalar(libm::tanh(direct - routed)),
            );
        }
    }
    Ok(out)
}
