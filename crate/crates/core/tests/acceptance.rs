//! Acceptance suite: one test per acceptance criterion, each printing a
//! single `criterion NN <label>: PASS/FAIL` line (visible with
//! `--nocapture`, and always on failure).
//!
//! Two criteria are expected to fail, and the failures are findings, not
//! bugs:
//!
//! * criterion 02 — the closure⟺fallibility equivalence ("the adjunction
//!   holds exactly when every non-top value can be forced below any
//!   target") is refuted by the bipolar-pair and interval calculi: their
//!   witness searches succeed everywhere (E7 holds) while the adjunction
//!   biconditional fails (E4 fails), because the searched hom collapses
//!   to the top element whenever contradiction-producing candidates are
//!   admitted.
//! * criterion 08 — the two projection maps onto the signed-confirmation
//!   carrier are claimed liberal-but-not-conservative. Neither is
//!   liberal: recentering possibility degrees violates op-lax at pairs of
//!   small degrees and sends full possibility above the signed unit, and
//!   the bipolar score collapse is not even monotone. Both classify
//!   "neither", with replayable counterexamples stored.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use epicalc_core::axioms::{
    self, check_axiom, check_idempotent_min, check_no_go, AxiomId, Status,
};
use epicalc_core::calculus::{hom, hom_by_sup, CalcRef};
use epicalc_core::error::Error;
use epicalc_core::hypotheses::{transport, HypothesisGraph, Mode, TransportOptions};
use epicalc_core::instances::InstanceId;
use epicalc_core::maps::{self, CalculusMap, MapSummary};
use epicalc_core::sampler::{sample_tuples, sample_value, stream, unit_f64};
use epicalc_core::tolerance::{Region, Tolerance};
use epicalc_core::updating::{
    bayes_oracle, cf_evidence_oracle, possibilistic_oracle, v_update,
};
use epicalc_core::value::CalcValue;

const SEED: u64 = 42;

fn conclude(number: u32, label: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    if detail.is_empty() {
        println!("criterion {number:02} {label}: {verdict}");
    } else {
        println!("criterion {number:02} {label}: {verdict} ({detail})");
    }
    assert!(pass, "criterion {number:02} {label}: {detail}");
}

fn s(x: f64) -> CalcValue {
    CalcValue::Scalar(x)
}

fn e_axioms(held: &[AxiomId]) -> BTreeSet<&'static str> {
    held.iter()
        .filter(|a| **a != AxiomId::Laws)
        .map(|a| a.name())
        .collect()
}

#[test]
fn criterion_01_axiom_table_patterns() {
    let started = Instant::now();
    let t = Tolerance::default();
    assert_eq!(t.eps, 1e-9);
    assert_eq!(t.sample_count, 10_000);

    let calculi: Vec<CalcRef> = [InstanceId::Cf, InstanceId::Pt, InstanceId::Ptb, InstanceId::Ip]
        .iter()
        .map(|id| id.build(t.eps))
        .collect();
    let table = axioms::axiom_table(&calculi, &t).unwrap();

    let expected: &[(&str, &[&str])] = &[
        ("CF", &["E1", "E2", "E3", "E4", "E7", "E8"]),
        ("PT", &["E1", "E2", "E3", "E4", "E6", "E7"]),
        ("PTB", &["E1", "E2", "E3", "E6", "E7"]),
        ("IP", &["E1", "E2", "E3", "E6", "E7"]),
    ];
    let mut problems: Vec<String> = Vec::new();
    for (calculus, want) in expected {
        let got = e_axioms(&table.held(calculus));
        let want: BTreeSet<&str> = want.iter().copied().collect();
        if got != want {
            problems.push(format!("{calculus}: held {got:?}, expected {want:?}"));
        }
    }

    // The signed carrier is checked on the interior for the boundary-
    // sensitive axioms, and says so.
    let cf_row = &table.rows["CF"];
    for axiom in [AxiomId::E4, AxiomId::E8, AxiomId::Laws] {
        let v = &cf_row[&axiom];
        if v.region != Region::Interior {
            problems.push(format!("CF {} not checked on the interior", axiom.name()));
        }
        if !v.witness_notes.contains("interior") {
            problems.push(format!("CF {} carries no interior caveat", axiom.name()));
        }
    }

    let elapsed = started.elapsed();
    if elapsed.as_secs() >= 60 {
        problems.push(format!("took {elapsed:?}, budget is 60s"));
    }
    conclude(
        1,
        "axiom-table patterns",
        problems.is_empty(),
        &if problems.is_empty() {
            format!("4 calculi, {} samples, {elapsed:?}", t.sample_count)
        } else {
            problems.join("; ")
        },
    );
}

#[test]
fn criterion_02_no_go_and_closure_fallibility() {
    let t = Tolerance::default();
    let five = [InstanceId::Cf, InstanceId::Pt, InstanceId::Ptmax, InstanceId::Ptb, InstanceId::Ip];

    // The no-go conjunction ¬(E4 ∧ E5 ∧ E8) must hold everywhere.
    let mut no_go_failures: Vec<String> = Vec::new();
    let mut equivalence_failures: Vec<String> = Vec::new();
    for id in five {
        let c = id.build(t.eps);
        let report = check_no_go(&c, &t).unwrap();
        if !report.no_go_consistent {
            no_go_failures.push(format!("{}: {:?}", report.calculus, report.violations));
        }
        if !report.closure_iff_fallibility {
            equivalence_failures.push(format!(
                "{}: E4 {} vs E7 {}",
                report.calculus,
                report.e4.name(),
                report.e7.name()
            ));
        }
    }
    assert!(no_go_failures.is_empty(), "no-go violated: {no_go_failures:?}");

    // The max-flavored calculus is the designated E5 witness: fusion can
    // only move up, yet the adjunction fails with an explicit triple.
    let ptmax = InstanceId::Ptmax.build(t.eps);
    let e5 = check_axiom(ptmax.as_ref(), AxiomId::E5, &t, Region::Full);
    assert!(e5.status.holds(), "expected E5 to hold for PTMAX");
    let e4 = check_axiom(ptmax.as_ref(), AxiomId::E4, &t, Region::Full);
    assert_eq!(e4.status, Status::Fails);
    let cx = e4.counterexample.as_ref().expect("PTMAX adjunction counterexample");
    assert_eq!(cx.len(), 4, "adjunction counterexample is (z, a, b, hom)");

    conclude(
        2,
        "no-go and closure-fallibility",
        equivalence_failures.is_empty(),
        &format!(
            "no-go consistent for all five; closure⟺fallibility refuted by {}",
            equivalence_failures.join(", ")
        ),
    );
}

#[test]
fn criterion_03_idempotent_min_characterization() {
    let t = Tolerance { eps: 1e-12, ..Tolerance::default() };
    let mut problems: Vec<String> = Vec::new();

    match check_idempotent_min(&InstanceId::Pt.build(t.eps), &t) {
        Ok(report) => {
            if !report.holds() {
                problems.push(format!("PT counterexample: {:?}", report.counterexample));
            }
            if report.samples != t.sample_count {
                problems.push(format!("PT checked {} of {} samples", report.samples, t.sample_count));
            }
        }
        Err(e) => problems.push(format!("PT rejected: {e}")),
    }

    match check_idempotent_min(&InstanceId::Cf.build(t.eps), &t) {
        Err(Error::PreconditionUnmet { hypothesis, .. }) if hypothesis == "idempotency" => {}
        other => problems.push(format!("CF: expected unmet idempotency, got {other:?}")),
    }
    match check_idempotent_min(&InstanceId::Ptmax.build(t.eps), &t) {
        Err(Error::PreconditionUnmet { hypothesis, .. }) if hypothesis == "unit = top" => {}
        other => problems.push(format!("PTMAX: expected unmet unit=top, got {other:?}")),
    }

    conclude(
        3,
        "idempotent-min characterization",
        problems.is_empty(),
        &if problems.is_empty() {
            format!("PT min-fusion confirmed on {} samples at 1e-12", t.sample_count)
        } else {
            problems.join("; ")
        },
    );
}

#[test]
fn criterion_04_bayes_updating() {
    let started = Instant::now();
    let lr = InstanceId::Lr.build(1e-9);
    let mut checked_pairs = 0usize;

    for instance in 0..1000u64 {
        let n = 2 + (stream(SEED, 40, instance) % 7) as usize;
        let names: Vec<String> = (0..n).map(|j| format!("H{j}")).collect();
        let mut priors = Vec::with_capacity(n);
        let mut likelihoods = Vec::with_capacity(n);
        for j in 0..n {
            let up = unit_f64(stream(SEED, 41, instance * 16 + j as u64));
            let ul = unit_f64(stream(SEED, 42, instance * 16 + j as u64));
            priors.push(0.05 + 0.95 * up);
            likelihoods.push(0.01 + 0.99 * ul);
        }

        let mut objects: Vec<&str> = names.iter().map(|x| x.as_str()).collect();
        objects.push("E");
        let mut entries: Vec<(&str, &str, CalcValue)> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                entries.push((&names[i], &names[j], s(priors[j] / priors[i])));
            }
            entries.push((&names[i], "E", s(likelihoods[i])));
            entries.push(("E", &names[i], s(1.0 / likelihoods[i])));
        }
        entries.push(("E", "E", s(1.0)));
        let g = HypothesisGraph::from_entries(lr.clone(), Mode::Strict, &objects, &entries)
            .unwrap();

        let updated = v_update(&g, "E").unwrap();
        let named_priors: Vec<(&str, f64)> =
            names.iter().zip(&priors).map(|(n, p)| (n.as_str(), *p)).collect();
        let named_likelihoods: Vec<(&str, f64)> =
            names.iter().zip(&likelihoods).map(|(n, l)| (n.as_str(), *l)).collect();
        let oracle = bayes_oracle(&named_priors, &named_likelihoods).unwrap();

        for ((from, to), want) in &oracle {
            let got = updated.graph.hom(from, to).unwrap().as_scalar().unwrap();
            assert!(
                (got - want).abs() <= 1e-12 * want.abs(),
                "instance {instance}: odds({from}, {to}) = {got}, oracle says {want}"
            );
            checked_pairs += 1;
        }
    }

    let elapsed = started.elapsed();
    conclude(
        4,
        "bayes updating",
        elapsed.as_secs() < 10,
        &format!("1000 instances, {checked_pairs} posterior odds within 1e-12, {elapsed:?}"),
    );
}

#[test]
fn criterion_05_possibilistic_updating() {
    let pt = InstanceId::Pt.build(1e-9);
    let mut full_branch = 0usize;
    let mut conditional_branch = 0usize;

    for instance in 0..1000u64 {
        let n = 3 + (stream(SEED, 50, instance) % 5) as usize;
        let mut objects: Vec<String> = (0..n - 1).map(|j| format!("H{j}")).collect();
        objects.push(String::from("E"));
        // Degrees on the 1/64 lattice: far coarser than the tolerance, so
        // the conditional's branch choice is unambiguous.
        let homs: Vec<CalcValue> = (0..n * n)
            .map(|k| {
                let tick = stream(SEED, 51, instance * 4096 + k as u64) % 65;
                s(tick as f64 / 64.0)
            })
            .collect();
        let g = HypothesisGraph::from_table(pt.clone(), Mode::Lax, objects, homs).unwrap();

        let updated = v_update(&g, "E").unwrap();
        let oracle = possibilistic_oracle(&g, "E").unwrap();
        let e = g.index_of("E").unwrap();
        for (i, from) in g.objects().iter().enumerate() {
            for (j, to) in g.objects().iter().enumerate() {
                let got = updated.graph.hom_by_index(i, j);
                let want = oracle[&(from.clone(), to.clone())];
                assert!(
                    got.bits_eq(&want),
                    "instance {instance}: conditional({from}, {to}) = {got}, oracle says {want}"
                );
                let a = g.hom_by_index(i, j).as_scalar().unwrap();
                let b = g.hom_by_index(j, e).as_scalar().unwrap();
                let c = g.hom_by_index(i, e).as_scalar().unwrap();
                if a.min(b) <= c {
                    full_branch += 1;
                } else {
                    conditional_branch += 1;
                }
            }
        }
    }

    conclude(
        5,
        "possibilistic updating",
        full_branch > 0 && conditional_branch > 0,
        &format!(
            "1000 graphs exact; {full_branch} full-possibility and {conditional_branch} conditional branches"
        ),
    );
}

#[test]
fn criterion_06_confirmation_updating() {
    let cf = InstanceId::Cf.build(1e-9);
    let mut worst: f64 = 0.0;

    for instance in 0..10_000u64 {
        let n = 3 + (stream(SEED, 60, instance) % 3) as usize;
        let mut objects: Vec<String> = (0..n - 1).map(|j| format!("H{j}")).collect();
        objects.push(String::from("E"));
        let homs: Vec<CalcValue> = (0..n * n)
            .map(|k| sample_value(cf.as_ref(), Region::Interior, SEED, 61, instance * 64 + k as u64))
            .collect();
        let g = HypothesisGraph::from_table(cf.clone(), Mode::Lax, objects, homs).unwrap();

        let updated = v_update(&g, "E").unwrap();
        let oracle = cf_evidence_oracle(&g, "E").unwrap();
        for (i, from) in g.objects().iter().enumerate() {
            for (j, to) in g.objects().iter().enumerate() {
                let got = updated.graph.hom_by_index(i, j).as_scalar().unwrap();
                let want = oracle[&(from.clone(), to.clone())].as_scalar().unwrap();
                let diff = (got - want).abs();
                worst = worst.max(diff);
                assert!(
                    diff <= 1e-9,
                    "instance {instance}: updated({from}, {to}) = {got}, weight oracle says {want}"
                );
            }
        }
    }

    // Worked example: prior 0.5 explained away by a 0.5 route against
    // neutral direct evidence lands at -0.8 exactly.
    let worked = HypothesisGraph::from_entries(
        cf.clone(),
        Mode::Lax,
        &["H1", "H2", "E"],
        &[
            ("H1", "H1", s(0.9)),
            ("H1", "H2", s(0.5)),
            ("H1", "E", s(0.0)),
            ("H2", "H1", s(-0.3)),
            ("H2", "H2", s(0.9)),
            ("H2", "E", s(0.5)),
            ("E", "H1", s(0.1)),
            ("E", "H2", s(0.2)),
            ("E", "E", s(0.9)),
        ],
    )
    .unwrap();
    let updated = v_update(&worked, "E").unwrap();
    let got = updated.graph.hom("H1", "H2").unwrap().as_scalar().unwrap();
    let worked_ok = (got - (-0.8)).abs() <= 1e-12;

    conclude(
        6,
        "confirmation updating",
        worked_ok,
        &format!("10000 interior graphs within 1e-9 (worst {worst:.3e}); worked example {got}"),
    );
}

#[test]
fn criterion_07_pair_interval_isomorphism() {
    let t_large = Tolerance { sample_count: 100_000, ..Tolerance::default() };
    let t = Tolerance::default();
    let ptb = InstanceId::Ptb.build(1e-9);
    let ip = InstanceId::Ip.build(1e-9);
    let fwd = maps::ptb_to_ip(1e-9);
    let back = maps::ip_to_ptb(1e-9);

    // Round trips are exact in both directions.
    for tuple in sample_tuples(ptb.as_ref(), Region::Full, &t_large, 1, 70) {
        let v = tuple[0];
        let rt = back.apply_raw(&fwd.apply_raw(&v));
        assert!(rt.bits_eq(&v), "pair round trip moved {v} to {rt}");
    }
    for tuple in sample_tuples(ip.as_ref(), Region::Full, &t_large, 1, 71) {
        let v = tuple[0];
        let rt = fwd.apply_raw(&back.apply_raw(&v));
        assert!(rt.bits_eq(&v), "interval round trip moved {v} to {rt}");
    }

    // Both directions are balanced monoidal maps.
    let fwd_class = maps::classify(&fwd, &t);
    let back_class = maps::classify(&back, &t);
    assert_eq!(fwd_class.summary, MapSummary::Balanced, "{fwd_class:?}");
    assert_eq!(back_class.summary, MapSummary::Balanced, "{back_class:?}");

    // Fusion commutes with the reading, bit for bit, contradiction included.
    let mut bottom_pairs = 0usize;
    for tuple in sample_tuples(ptb.as_ref(), Region::Full, &t_large, 2, 72) {
        let (x, y) = (tuple[0], tuple[1]);
        if x.is_bottom() || y.is_bottom() {
            bottom_pairs += 1;
        }
        let through = fwd.apply_raw(&ptb.tensor_raw(&x, &y));
        let outside = ip.tensor_raw(&fwd.apply_raw(&x), &fwd.apply_raw(&y));
        assert!(through.bits_eq(&outside), "images of {x} (x) {y} disagree");
    }
    for tuple in sample_tuples(ip.as_ref(), Region::Full, &t_large, 2, 73) {
        let (x, y) = (tuple[0], tuple[1]);
        let through = back.apply_raw(&ip.tensor_raw(&x, &y));
        let outside = ptb.tensor_raw(&back.apply_raw(&x), &back.apply_raw(&y));
        assert!(through.bits_eq(&outside), "images of {x} (x) {y} disagree");
    }

    conclude(
        7,
        "pair-interval isomorphism",
        bottom_pairs > 0,
        &format!(
            "round trips exact, both directions balanced, 100000-pair homomorphism exact ({bottom_pairs} pairs involved the contradiction)"
        ),
    );
}

#[test]
fn criterion_08_projection_classification() {
    let t = Tolerance::default();

    for id in InstanceId::ALL {
        let c = maps::classify(&maps::identity(id.build(t.eps)), &t);
        assert_eq!(c.summary, MapSummary::Balanced, "identity on {id} must be balanced");
    }

    let pt_cf = maps::classify(&maps::pt_to_cf(t.eps), &t);
    let ptb_cf = maps::classify(&maps::ptb_to_cf(t.eps), &t);

    // Neither projection is conservative, and every failed law carries a
    // replayable counterexample.
    assert_ne!(pt_cf.summary, MapSummary::Conservative);
    assert_ne!(ptb_cf.summary, MapSummary::Conservative);
    assert!(!pt_cf.lax.holds && pt_cf.lax.counterexample.is_some());
    for law in [&ptb_cf.monotone, &ptb_cf.lax, &ptb_cf.oplax] {
        assert!(!law.holds && law.counterexample.is_some(), "{law:?}");
    }

    let pass = pt_cf.summary == MapSummary::Liberal && ptb_cf.summary == MapSummary::Liberal;
    conclude(
        8,
        "projection classification",
        pass,
        &format!(
            "identities balanced, projections non-conservative with stored counterexamples; \
             liberality refuted: pt_to_cf is {} (op-lax fails at small degrees, full possibility \
             exceeds the signed unit), ptb_to_cf is {} (not monotone)",
            pt_cf.summary, ptb_cf.summary
        ),
    );
}

fn pt_shift(c: f64, eps: f64) -> CalculusMap {
    CalculusMap::new(
        format!("pt_shift_{c}"),
        InstanceId::Pt.build(eps),
        InstanceId::Cf.build(eps),
        Arc::new(move |v: &CalcValue| match v {
            CalcValue::Scalar(x) => CalcValue::Scalar((c * (x - 1.0)).clamp(-1.0, 1.0)),
            other => *other,
        }),
    )
}

fn cf_half(eps: f64) -> CalculusMap {
    let cf = InstanceId::Cf.build(eps);
    CalculusMap::new(
        "cf_half",
        cf.clone(),
        cf,
        Arc::new(|v: &CalcValue| match v {
            CalcValue::Scalar(x) if *x == 1.0 => CalcValue::Scalar(1.0),
            CalcValue::Scalar(x) if *x == -1.0 => CalcValue::Scalar(-1.0),
            CalcValue::Scalar(x) => CalcValue::Scalar((x.atanh() / 2.0).tanh()),
            other => *other,
        }),
    )
}

#[test]
fn criterion_09_transport_soundness() {
    let t = Tolerance { sample_count: 2_000, ..Tolerance::default() };
    let options = TransportOptions::default();
    let mut composite_pairs = 0usize;

    // Possibility graphs through two conservative maps into the signed
    // carrier.
    let pt = InstanceId::Pt.build(1e-9);
    let cf = InstanceId::Cf.build(1e-9);
    let first = pt_shift(0.5, 1e-9);
    let second = cf_half(1e-9);
    let composite = maps::compose(&first, &second).unwrap();
    for instance in 0..100u64 {
        let n = 3 + (stream(SEED, 90, instance) % 4) as usize;
        let weights: Vec<CalcValue> = (0..n)
            .map(|i| sample_value(pt.as_ref(), Region::Full, SEED, 91, instance * 32 + i as u64))
            .collect();
        let objects: Vec<String> = (0..n).map(|i| format!("O{i}")).collect();
        let homs: Vec<CalcValue> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                if i == j {
                    pt.unit()
                } else {
                    pt.tensor_raw(&weights[i], &weights[j])
                }
            })
            .collect();
        let g = HypothesisGraph::from_table(pt.clone(), Mode::Lax, objects, homs).unwrap();
        assert!(g.validate_enrichment().is_valid(), "instance {instance} not lax-valid");

        let step1 = transport(&g, &first, &t, options).unwrap();
        assert!(step1.validation.is_valid(), "instance {instance} invalid after first map");
        let step2 = transport(&step1.graph, &second, &t, options).unwrap();
        assert!(step2.validation.is_valid(), "instance {instance} invalid after second map");

        let direct = transport(&g, &composite, &t, options).unwrap();
        assert!(direct.validation.is_valid());
        for i in 0..n {
            for j in 0..n {
                let chained = step2.graph.hom_by_index(i, j);
                let fused = direct.graph.hom_by_index(i, j);
                assert!(
                    cf.value_eq(&chained, &fused),
                    "instance {instance}: composite transport differs at ({i}, {j}): {chained} vs {fused}"
                );
                composite_pairs += 1;
            }
        }
    }

    // Bipolar-pair graphs through the interval reading and back.
    let ptb = InstanceId::Ptb.build(1e-9);
    let fwd = maps::ptb_to_ip(1e-9);
    let back = maps::ip_to_ptb(1e-9);
    let round = maps::compose(&fwd, &back).unwrap();
    for instance in 0..100u64 {
        let n = 3 + (stream(SEED, 92, instance) % 4) as usize;
        let weights: Vec<CalcValue> = (0..n)
            .map(|i| sample_value(ptb.as_ref(), Region::Full, SEED, 93, instance * 32 + i as u64))
            .collect();
        let objects: Vec<String> = (0..n).map(|i| format!("O{i}")).collect();
        let homs: Vec<CalcValue> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                if i == j {
                    ptb.unit()
                } else {
                    ptb.tensor_raw(&weights[i], &weights[j])
                }
            })
            .collect();
        let g = HypothesisGraph::from_table(ptb.clone(), Mode::Lax, objects, homs).unwrap();
        assert!(g.validate_enrichment().is_valid(), "instance {instance} not lax-valid");

        let step1 = transport(&g, &fwd, &t, options).unwrap();
        assert!(step1.validation.is_valid());
        let step2 = transport(&step1.graph, &back, &t, options).unwrap();
        assert!(step2.validation.is_valid());

        let direct = transport(&g, &round, &t, options).unwrap();
        for i in 0..n {
            for j in 0..n {
                let chained = step2.graph.hom_by_index(i, j);
                let fused = direct.graph.hom_by_index(i, j);
                assert!(chained.bits_eq(&fused));
                composite_pairs += 1;
            }
        }
    }

    conclude(
        9,
        "transport soundness",
        true,
        &format!(
            "200 lax-valid graphs stay lax-valid under conservative transport; \
             chained = composite at {composite_pairs} degrees"
        ),
    );
}

#[test]
fn criterion_10_adjunction_suite() {
    let t = Tolerance { sample_count: 100_000, ..Tolerance::default() };
    let mut problems: Vec<String> = Vec::new();

    for (id, region) in [
        (InstanceId::Cf, Region::Interior),
        (InstanceId::Pt, Region::Full),
        (InstanceId::Lr, Region::Full),
    ] {
        let c = id.build(t.eps);
        let verdict = check_axiom(c.as_ref(), AxiomId::E4, &t, region);
        if !verdict.status.holds() {
            problems.push(format!(
                "{id} adjunction failed at {:?}",
                verdict.counterexample
            ));
        }
    }

    // The grid supremum reconstructs the declared hom up to quantization.
    let tg = Tolerance::default();
    let bound = 2.0 / tg.grid_resolution as f64 + 1e-9;
    let mut sup_pairs = 0usize;
    for id in [InstanceId::Cf, InstanceId::Pt] {
        let c = id.build(tg.eps);
        let mut worst: f64 = 0.0;
        for k in 0..500u64 {
            let a = sample_value(c.as_ref(), Region::Full, SEED, 101, k * 2);
            let b = sample_value(c.as_ref(), Region::Full, SEED, 102, k * 2 + 1);
            let declared = hom(c.as_ref(), &a, &b).unwrap().as_scalar().unwrap();
            let searched = hom_by_sup(c.as_ref(), &a, &b, &tg).unwrap().as_scalar().unwrap();
            worst = worst.max((declared - searched).abs());
            sup_pairs += 1;
        }
        if worst > bound {
            problems.push(format!("{id}: grid supremum off by {worst:.3e} (bound {bound:.3e})"));
        }
    }

    conclude(
        10,
        "adjunction suite",
        problems.is_empty(),
        &if problems.is_empty() {
            format!(
                "biconditional exact on 100000 triples for CF (interior), PT, LR; \
                 grid supremum within 2/grid on {sup_pairs} pairs"
            )
        } else {
            problems.join("; ")
        },
    );
}
