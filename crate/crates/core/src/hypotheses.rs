//! Hypothesis graphs: finite sets of hypotheses with a degree of
//! entailment between every ordered pair, drawn from one calculus.
//!
//! A graph is *enriched* when its degrees respect the calculus:
//!
//! * identity: the self-degree `homs(H, H)` must dominate the unit
//!   (lax mode) or equal it within tolerance (strict mode);
//! * composition: chaining through an intermediate hypothesis can only
//!   lose certainty — `homs(H', H'') (x) homs(H, H') <= homs(H, H'')` in
//!   lax mode, equality within tolerance in strict mode.
//!
//! [`HypothesisGraph::validate_enrichment`] checks both laws exhaustively
//! and reports every violation; violations are report content, not errors,
//! so invalid graphs can be inspected, repaired, or transported anyway.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::calculus::{fuse_all, CalcRef};
use crate::error::Error;
use crate::maps::{classify, CalculusMap, MapClassification};
use crate::tolerance::Tolerance;
use crate::value::CalcValue;

/// Upper bound on graph size; enrichment validation is cubic in the number
/// of objects, so graphs are kept small enough to check exhaustively.
pub const MAX_OBJECTS: usize = 256;

/// How strictly the enrichment laws are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Inequalities: self-degrees dominate the unit, composition is lax.
    Lax,
    /// Equalities within tolerance.
    Strict,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Lax => "lax",
            Mode::Strict => "strict",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "lax" => Ok(Mode::Lax),
            "strict" => Ok(Mode::Strict),
            _ => Err(Error::InvalidGraph {
                detail: alloc::format!("unknown mode {s:?}; expected \"lax\" or \"strict\""),
            }),
        }
    }
}

/// An immutable hypothesis graph: ordered object ids and a total table of
/// degrees, one per ordered pair, stored row-major.
#[derive(Clone)]
pub struct HypothesisGraph {
    calculus: CalcRef,
    mode: Mode,
    objects: Vec<String>,
    homs: Vec<CalcValue>,
}

impl fmt::Debug for HypothesisGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HypothesisGraph")
            .field("calculus", &self.calculus.id())
            .field("mode", &self.mode)
            .field("objects", &self.objects)
            .field("homs", &self.homs)
            .finish()
    }
}

fn checked_objects(objects: Vec<String>) -> Result<Vec<String>, Error> {
    if objects.is_empty() {
        return Err(Error::InvalidGraph { detail: String::from("graph has no objects") });
    }
    if objects.len() > MAX_OBJECTS {
        return Err(Error::InvalidGraph {
            detail: alloc::format!("{} objects exceed the limit of {MAX_OBJECTS}", objects.len()),
        });
    }
    for (i, a) in objects.iter().enumerate() {
        if a.is_empty() {
            return Err(Error::InvalidGraph { detail: String::from("empty object id") });
        }
        if objects[..i].contains(a) {
            return Err(Error::InvalidGraph { detail: alloc::format!("duplicate object id {a:?}") });
        }
    }
    Ok(objects)
}

impl HypothesisGraph {
    /// Build from a row-major table of `objects.len()^2` degrees.
    pub fn from_table(
        calculus: CalcRef,
        mode: Mode,
        objects: Vec<String>,
        homs: Vec<CalcValue>,
    ) -> Result<Self, Error> {
        let objects = checked_objects(objects)?;
        let n = objects.len();
        if homs.len() != n * n {
            return Err(Error::InvalidGraph {
                detail: alloc::format!("expected {} degrees for {n} objects, got {}", n * n, homs.len()),
            });
        }
        for v in &homs {
            calculus.validate(v)?;
        }
        Ok(HypothesisGraph { calculus, mode, objects, homs })
    }

    /// Build from `(from, to, value)` entries; every ordered pair must
    /// appear exactly once.
    pub fn from_entries(
        calculus: CalcRef,
        mode: Mode,
        objects: &[&str],
        entries: &[(&str, &str, CalcValue)],
    ) -> Result<Self, Error> {
        let objects: Vec<String> = objects.iter().map(|s| String::from(*s)).collect();
        let objects = checked_objects(objects)?;
        let n = objects.len();
        let index = |id: &str| -> Result<usize, Error> {
            objects
                .iter()
                .position(|o| o == id)
                .ok_or_else(|| Error::UnknownObject { id: String::from(id) })
        };
        let mut homs = alloc::vec![None; n * n];
        for (from, to, value) in entries {
            let slot = &mut homs[index(from)? * n + index(to)?];
            if slot.is_some() {
                return Err(Error::InvalidGraph {
                    detail: alloc::format!("duplicate degree for ({from:?}, {to:?})"),
                });
            }
            *slot = Some(*value);
        }
        let mut table = Vec::with_capacity(n * n);
        for (k, slot) in homs.into_iter().enumerate() {
            match slot {
                Some(v) => table.push(v),
                None => {
                    return Err(Error::InvalidGraph {
                        detail: alloc::format!(
                            "missing degree for ({:?}, {:?})",
                            objects[k / n],
                            objects[k % n]
                        ),
                    })
                }
            }
        }
        Self::from_table(calculus, mode, objects, table)
    }

    pub fn calculus(&self) -> &CalcRef {
        &self.calculus
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn index_of(&self, id: &str) -> Result<usize, Error> {
        self.objects
            .iter()
            .position(|o| o == id)
            .ok_or_else(|| Error::UnknownObject { id: String::from(id) })
    }

    pub fn hom_by_index(&self, from: usize, to: usize) -> CalcValue {
        self.homs[from * self.objects.len() + to]
    }

    pub fn hom(&self, from: &str, to: &str) -> Result<CalcValue, Error> {
        Ok(self.hom_by_index(self.index_of(from)?, self.index_of(to)?))
    }

    /// All degrees as `(from, to, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &str, CalcValue)> + '_ {
        let n = self.objects.len();
        self.homs.iter().enumerate().map(move |(k, v)| {
            (self.objects[k / n].as_str(), self.objects[k % n].as_str(), *v)
        })
    }

    /// Check both enrichment laws exhaustively and report every violation,
    /// identities by object order and compositions by lexicographic
    /// `(from, via, to)` index order.
    pub fn validate_enrichment(&self) -> EnrichmentReport {
        let c = self.calculus.as_ref();
        let unit = c.unit();
        let strict = self.mode == Mode::Strict;
        let mut identity_violations = Vec::new();
        for (i, object) in self.objects.iter().enumerate() {
            let found = self.hom_by_index(i, i);
            let ok = if strict {
                c.value_eq(&found, &unit)
            } else {
                c.leq_margin(&unit, &found) >= -c.eps()
            };
            if !ok {
                identity_violations
                    .push(IdentityViolation { object: object.clone(), found, unit });
            }
        }

        let mut composition_violations = Vec::new();
        let n = self.objects.len();
        for i in 0..n {
            for j in 0..n {
                let first_leg = self.hom_by_index(i, j);
                for k in 0..n {
                    let fused = c.tensor_raw(&self.hom_by_index(j, k), &first_leg);
                    let declared = self.hom_by_index(i, k);
                    let ok = if strict {
                        c.value_eq(&fused, &declared)
                    } else {
                        c.leq_margin(&fused, &declared) >= -c.eps()
                    };
                    if !ok {
                        composition_violations.push(CompositionViolation {
                            from: self.objects[i].clone(),
                            via: self.objects[j].clone(),
                            to: self.objects[k].clone(),
                            fused,
                            declared,
                        });
                    }
                }
            }
        }

        EnrichmentReport { mode: self.mode, identity_violations, composition_violations }
    }

    /// Fuse the degrees along a path of at least two hypotheses with
    /// distinct consecutive entries.
    ///
    /// On a strict-valid graph the result telescopes: it equals
    /// `homs(first, last)` within tolerance.
    pub fn fuse_evidence_path(&self, path: &[&str]) -> Result<CalcValue, Error> {
        if path.len() < 2 {
            return Err(Error::PreconditionUnmet {
                hypothesis: String::from("path length"),
                detail: alloc::format!("need at least two hypotheses, got {}", path.len()),
            });
        }
        let mut legs = Vec::with_capacity(path.len() - 1);
        for pair in path.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::PreconditionUnmet {
                    hypothesis: String::from("distinct consecutive hypotheses"),
                    detail: alloc::format!("{:?} repeats", pair[0]),
                });
            }
            legs.push(self.hom(pair[0], pair[1])?);
        }
        fuse_all(self.calculus.as_ref(), &legs)
    }
}

/// A self-degree that fails the identity law.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityViolation {
    pub object: String,
    pub found: CalcValue,
    pub unit: CalcValue,
}

/// An ordered triple that fails the composition law: `fused` is the tensor
/// of the two legs, `declared` the direct degree it must not exceed (lax)
/// or must equal (strict).
#[derive(Debug, Clone, PartialEq)]
pub struct CompositionViolation {
    pub from: String,
    pub via: String,
    pub to: String,
    pub fused: CalcValue,
    pub declared: CalcValue,
}

/// Outcome of exhaustive enrichment validation.
#[derive(Debug, Clone, PartialEq)]
pub struct EnrichmentReport {
    pub mode: Mode,
    pub identity_violations: Vec<IdentityViolation>,
    pub composition_violations: Vec<CompositionViolation>,
}

impl EnrichmentReport {
    pub fn is_valid(&self) -> bool {
        self.identity_violations.is_empty() && self.composition_violations.is_empty()
    }
}

/// Options for [`transport`].
#[derive(Debug, Clone, Copy, Default)]
pub struct TransportOptions {
    /// Permit maps that did not classify conservative; the transported
    /// graph is still revalidated, so any damage shows up in the report.
    pub allow_liberal: bool,
}

/// Result of transporting a graph along a map: the new graph, the
/// classification that justified (or was overridden to permit) the move,
/// and a fresh validation of the result.
#[derive(Debug, Clone)]
pub struct TransportResult {
    pub graph: HypothesisGraph,
    pub classification: MapClassification,
    pub validation: EnrichmentReport,
}

/// Transport a graph along a map by applying it to every degree.
///
/// Conservative (or balanced) maps preserve lax enrichment, so the move is
/// allowed outright; anything else needs
/// [`TransportOptions::allow_liberal`]. The result is revalidated either
/// way — transported validity is checked, never assumed.
pub fn transport(
    g: &HypothesisGraph,
    f: &CalculusMap,
    t: &Tolerance,
    options: TransportOptions,
) -> Result<TransportResult, Error> {
    if f.source().id() != g.calculus.id() {
        return Err(Error::MismatchedCalculi {
            expected: String::from(f.source().id()),
            found: String::from(g.calculus.id()),
        });
    }
    let classification = classify(f, t);
    if !classification.is_conservative() && !options.allow_liberal {
        return Err(Error::NotConservative {
            map: String::from(f.name()),
            detail: alloc::format!(
                "classified {}; pass the liberal-transport override to force it",
                classification.summary
            ),
        });
    }
    let mut homs = Vec::with_capacity(g.homs.len());
    for v in &g.homs {
        homs.push(f.apply(v)?);
    }
    let graph = HypothesisGraph {
        calculus: Arc::clone(f.target()),
        mode: g.mode,
        objects: g.objects.clone(),
        homs,
    };
    let validation = graph.validate_enrichment();
    Ok(TransportResult { graph, classification, validation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::InstanceId;
    use crate::maps;

    fn s(x: f64) -> CalcValue {
        CalcValue::Scalar(x)
    }

    fn lr_priors_graph() -> HypothesisGraph {
        // Ratios of priors {A: 0.2, B: 0.8}: homs(X, Y) = p(Y) / p(X).
        HypothesisGraph::from_entries(
            InstanceId::Lr.build(1e-9),
            Mode::Strict,
            &["A", "B"],
            &[
                ("A", "A", s(1.0)),
                ("A", "B", s(4.0)),
                ("B", "A", s(0.25)),
                ("B", "B", s(1.0)),
            ],
        )
        .unwrap()
    }

    fn lax_pt_graph() -> HypothesisGraph {
        HypothesisGraph::from_entries(
            InstanceId::Pt.build(1e-9),
            Mode::Lax,
            &["A", "B", "C"],
            &[
                ("A", "A", s(1.0)),
                ("A", "B", s(0.9)),
                ("A", "C", s(0.5)),
                ("B", "A", s(1.0)),
                ("B", "B", s(1.0)),
                ("B", "C", s(0.8)),
                ("C", "A", s(1.0)),
                ("C", "B", s(1.0)),
                ("C", "C", s(1.0)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_malformed_graphs() {
        let pt = InstanceId::Pt.build(1e-9);
        let dup = HypothesisGraph::from_table(
            pt.clone(),
            Mode::Lax,
            alloc::vec![String::from("A"), String::from("A")],
            alloc::vec![s(1.0); 4],
        );
        assert!(matches!(dup, Err(Error::InvalidGraph { .. })));

        let short = HypothesisGraph::from_table(
            pt.clone(),
            Mode::Lax,
            alloc::vec![String::from("A"), String::from("B")],
            alloc::vec![s(1.0); 3],
        );
        assert!(matches!(short, Err(Error::InvalidGraph { .. })));

        let out_of_carrier = HypothesisGraph::from_entries(
            pt.clone(),
            Mode::Lax,
            &["A"],
            &[("A", "A", s(1.5))],
        );
        assert!(matches!(out_of_carrier, Err(Error::InvalidValue { .. })));

        let missing = HypothesisGraph::from_entries(
            pt.clone(),
            Mode::Lax,
            &["A", "B"],
            &[("A", "A", s(1.0)), ("A", "B", s(1.0)), ("B", "B", s(1.0))],
        );
        assert!(matches!(missing, Err(Error::InvalidGraph { .. })));

        let stranger = HypothesisGraph::from_entries(
            pt,
            Mode::Lax,
            &["A"],
            &[("A", "Z", s(1.0))],
        );
        assert!(matches!(stranger, Err(Error::UnknownObject { .. })));
    }

    #[test]
    fn prior_ratio_graph_is_strict_valid() {
        let report = lr_priors_graph().validate_enrichment();
        assert!(report.is_valid(), "{report:?}");
    }

    #[test]
    fn strict_ratio_graphs_have_reciprocal_opposites() {
        let g = lr_priors_graph();
        let c = g.calculus().clone();
        for a in ["A", "B"] {
            for b in ["A", "B"] {
                let forward = g.hom(a, b).unwrap().as_scalar().unwrap();
                let backward = g.hom(b, a).unwrap().as_scalar().unwrap();
                assert!((forward * backward - 1.0).abs() < 1e-12);
                let fused = c.tensor_raw(&g.hom(a, b).unwrap(), &g.hom(b, a).unwrap());
                assert!(c.value_eq(&fused, &c.unit()));
            }
        }
    }

    #[test]
    fn constant_unit_graph_is_strict_valid_everywhere() {
        for (_, c) in crate::instances::all_instances(1e-9) {
            let unit = c.unit();
            let g = HypothesisGraph::from_table(
                c,
                Mode::Strict,
                alloc::vec![String::from("A"), String::from("B"), String::from("C")],
                alloc::vec![unit; 9],
            )
            .unwrap();
            assert!(g.validate_enrichment().is_valid());
        }
    }

    #[test]
    fn lax_violation_is_located_at_the_offending_triple() {
        let report = lax_pt_graph().validate_enrichment();
        assert!(report.identity_violations.is_empty());
        assert_eq!(report.composition_violations.len(), 1);
        let v = &report.composition_violations[0];
        assert_eq!((v.from.as_str(), v.via.as_str(), v.to.as_str()), ("A", "B", "C"));
        // Chaining A -> B -> C supports 0.8, but the direct degree is 0.5.
        assert_eq!(v.fused, s(0.8));
        assert_eq!(v.declared, s(0.5));
    }

    #[test]
    fn strict_mode_flags_inequalities_lax_mode_tolerates() {
        let g = HypothesisGraph::from_entries(
            InstanceId::Pt.build(1e-9),
            Mode::Strict,
            &["A", "B"],
            &[
                ("A", "A", s(1.0)),
                ("A", "B", s(0.9)),
                ("B", "A", s(0.3)),
                ("B", "B", s(1.0)),
            ],
        )
        .unwrap();
        let strict_report = g.validate_enrichment();
        // min(0.3, 0.9) = 0.3 < 1.0 = homs(A, A): fails as an equality.
        assert!(!strict_report.is_valid());
        assert!(strict_report
            .composition_violations
            .iter()
            .any(|v| (v.from.as_str(), v.via.as_str(), v.to.as_str()) == ("A", "B", "A")));

        let relaxed = HypothesisGraph::from_table(
            g.calculus().clone(),
            Mode::Lax,
            g.objects().to_vec(),
            g.entries().map(|(_, _, v)| v).collect(),
        )
        .unwrap();
        assert!(relaxed.validate_enrichment().is_valid());
    }

    #[test]
    fn evidence_paths_telescope_on_strict_graphs() {
        // Ratios of priors {A: 0.2, B: 0.4, C: 0.4} over three objects.
        let p = [("A", 0.2), ("B", 0.4), ("C", 0.4)];
        let mut entries = Vec::new();
        for (a, pa) in p {
            for (b, pb) in p {
                entries.push((a, b, s(pb / pa)));
            }
        }
        let g = HypothesisGraph::from_entries(
            InstanceId::Lr.build(1e-9),
            Mode::Strict,
            &["A", "B", "C"],
            &entries,
        )
        .unwrap();
        assert!(g.validate_enrichment().is_valid());

        let fused = g.fuse_evidence_path(&["A", "B", "C"]).unwrap();
        assert!((fused.as_scalar().unwrap() - 2.0).abs() < 1e-12);
        assert!(g.calculus().value_eq(&fused, &g.hom("A", "C").unwrap()));

        // Round trips telescope to the unit.
        let round = g.fuse_evidence_path(&["A", "C", "B", "A"]).unwrap();
        assert!(g.calculus().value_eq(&round, &g.calculus().unit()));
    }

    #[test]
    fn evidence_path_preconditions() {
        let g = lr_priors_graph();
        assert!(matches!(
            g.fuse_evidence_path(&["A"]),
            Err(Error::PreconditionUnmet { .. })
        ));
        assert!(matches!(
            g.fuse_evidence_path(&["A", "A"]),
            Err(Error::PreconditionUnmet { .. })
        ));
        assert!(matches!(
            g.fuse_evidence_path(&["A", "Z"]),
            Err(Error::UnknownObject { .. })
        ));
    }

    #[test]
    fn transport_along_a_balanced_map_preserves_lax_validity() {
        let ptb = InstanceId::Ptb.build(1e-9);
        let pair = |r, p| CalcValue::Pair(r, p);
        let g = HypothesisGraph::from_entries(
            ptb,
            Mode::Lax,
            &["A", "B"],
            &[
                ("A", "A", pair(0.0, 1.0)),
                ("A", "B", pair(0.1, 0.8)),
                ("B", "A", pair(0.0, 0.9)),
                ("B", "B", pair(0.0, 1.0)),
            ],
        )
        .unwrap();
        assert!(g.validate_enrichment().is_valid());

        let t = Tolerance { sample_count: 2_000, ..Tolerance::default() };
        let moved =
            transport(&g, &maps::ptb_to_ip(1e-9), &t, TransportOptions::default()).unwrap();
        assert_eq!(moved.graph.calculus().id(), "IP");
        assert!(moved.validation.is_valid());
        assert_eq!(moved.graph.hom("A", "B").unwrap(), CalcValue::interval(0.1, 0.8));
    }

    #[test]
    fn transport_gates_non_conservative_maps() {
        let g = lax_pt_graph();
        let t = Tolerance { sample_count: 2_000, ..Tolerance::default() };
        let f = maps::pt_to_cf(1e-9);

        let refused = transport(&g, &f, &t, TransportOptions::default());
        assert!(matches!(refused, Err(Error::NotConservative { .. })));

        let forced = transport(&g, &f, &t, TransportOptions { allow_liberal: true }).unwrap();
        assert_eq!(forced.graph.calculus().id(), "CF");
        assert_eq!(forced.graph.hom("A", "B").unwrap(), s(0.8));

        let mismatched = transport(&g, &maps::ptb_to_ip(1e-9), &t, TransportOptions::default());
        assert!(matches!(mismatched, Err(Error::MismatchedCalculi { .. })));
    }
}
