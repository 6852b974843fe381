//! Sampled checking of the epistemic axioms and the order/monoidal laws.
//!
//! Each axiom has one checking procedure. A verdict is a pure function of
//! (calculus, axiom, tolerance, region): samples are drawn from
//! index-addressable streams, so re-running reproduces the verdict
//! bit-for-bit, and any parallel schedule would agree with the sequential
//! one.
//!
//! The axioms:
//!
//! * **E1** — *optimism*: a greatest element is declared and every sampled
//!   value sits below it.
//! * **E2** — *completeness*: arbitrary joins exist. Only the declared flag
//!   plus finite join/meet soundness is machine-checkable, so the positive
//!   verdict is [`Status::HoldsStructural`].
//! * **E3** — *no certainty from nothing*: if fused evidence reaches the
//!   unit, one of the inputs already had.
//! * **E4** — *closure*: the residual (declared, or grid supremum) is
//!   adjoint to fusion.
//! * **E5** — *strong conservativity*: fusing never moves a value down.
//! * **E6** — *idempotency*: fusing a value with itself is a no-op.
//! * **E7** — *fallibilism*: below any target there is always further
//!   evidence that takes you there (witness searched on the grid).
//! * **E8** — *cancellativity*: common factors can be cancelled from an
//!   inequality.
//! * **LAWS** — the posetal/monoidal substrate: reflexivity, transitivity,
//!   antisymmetry up to tolerance, bitwise commutativity, associativity
//!   and unitality up to tolerance, and monotonicity of fusion.
//!
//! A `FAILS` verdict always carries a counterexample that re-evaluates to
//! a violation through the public operations; a sampled `HOLDS` is only
//! ever "no counterexample at this effort", never a proof.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::calculus::{hom_by_sup, search_grid, CalcRef, Calculus, Carrier};
use crate::error::Error;
use crate::sampler::sample_tuples;
use crate::tolerance::{Region, Tolerance};
use crate::value::CalcValue;

/// The checkable axioms, plus the law suite for the underlying structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
    E7,
    E8,
    Laws,
}

impl AxiomId {
    /// Every axiom, in table order.
    pub const ALL: [AxiomId; 9] = [
        AxiomId::E1,
        AxiomId::E2,
        AxiomId::E3,
        AxiomId::E4,
        AxiomId::E5,
        AxiomId::E6,
        AxiomId::E7,
        AxiomId::E8,
        AxiomId::Laws,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::E1 => "E1",
            AxiomId::E2 => "E2",
            AxiomId::E3 => "E3",
            AxiomId::E4 => "E4",
            AxiomId::E5 => "E5",
            AxiomId::E6 => "E6",
            AxiomId::E7 => "E7",
            AxiomId::E8 => "E8",
            AxiomId::Laws => "LAWS",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        for a in Self::ALL {
            if s.eq_ignore_ascii_case(a.name()) {
                return Ok(a);
            }
        }
        Err(Error::UnknownAxiom { id: String::from(s) })
    }
}

/// Outcome of one axiom check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    /// No counterexample at this sampling effort.
    HoldsSampled,
    /// Declared structure is present and finite samples are consistent with
    /// it; the quantifier itself (arbitrary subsets) is not machine-checkable.
    HoldsStructural,
    /// A replayable counterexample was found.
    Fails,
    /// The axiom does not make sense for this calculus (e.g. no residual
    /// and no bounded carrier to search).
    NotApplicable,
}

impl Status {
    /// Whether this verdict counts as the axiom holding.
    pub fn holds(self) -> bool {
        matches!(self, Status::HoldsSampled | Status::HoldsStructural)
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::HoldsSampled => "HOLDS_SAMPLED",
            Status::HoldsStructural => "HOLDS_STRUCTURAL",
            Status::Fails => "FAILS",
            Status::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Verdict for one (calculus, axiom) cell.
///
/// `status == Fails` if and only if `counterexample` is present, and the
/// counterexample re-evaluates to a violation through the public
/// operations. The tolerance and region that produced the verdict ride
/// along so it can be reproduced.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomVerdict {
    pub axiom: AxiomId,
    pub status: Status,
    pub counterexample: Option<Vec<CalcValue>>,
    pub witness_notes: String,
    pub sampler: Tolerance,
    pub region: Region,
}

impl AxiomVerdict {
    fn holds(axiom: AxiomId, status: Status, notes: String, t: &Tolerance, region: Region) -> Self {
        AxiomVerdict { axiom, status, counterexample: None, witness_notes: notes, sampler: *t, region }
    }

    fn fails(
        axiom: AxiomId,
        cx: Vec<CalcValue>,
        notes: String,
        t: &Tolerance,
        region: Region,
    ) -> Self {
        AxiomVerdict {
            axiom,
            status: Status::Fails,
            counterexample: Some(cx),
            witness_notes: notes,
            sampler: *t,
            region,
        }
    }
}

/// The region each axiom is checked on by default.
///
/// Signed scalar carriers (the confirmation calculus) get the interior for
/// E4, E8, and the law suite: the declared pole conventions deliberately
/// break residuation and cancellation *at* the poles, and float
/// granularity near them swamps an absolute tolerance. The verdicts carry
/// the caveat in their notes.
pub fn default_region(c: &dyn Calculus, axiom: AxiomId) -> Region {
    let signed = matches!(c.carrier(), Carrier::Scalar { lo, .. } if lo < 0.0);
    match axiom {
        AxiomId::E4 | AxiomId::E8 | AxiomId::Laws if signed => Region::Interior,
        _ => Region::Full,
    }
}

fn interior_caveat(region: Region) -> &'static str {
    match region {
        Region::Interior => {
            " (interior region: poles excluded with a relative standoff, \
             where declared pole conventions override the closed forms)"
        }
        Region::Full => "",
    }
}

/// Check one axiom. Deterministic in all arguments.
pub fn check_axiom(c: &dyn Calculus, axiom: AxiomId, t: &Tolerance, region: Region) -> AxiomVerdict {
    match axiom {
        AxiomId::E1 => check_e1(c, t, region),
        AxiomId::E2 => check_e2(c, t, region),
        AxiomId::E3 => check_e3(c, t, region),
        AxiomId::E4 => check_e4(c, t, region),
        AxiomId::E5 => check_e5(c, t, region),
        AxiomId::E6 => check_e6(c, t, region),
        AxiomId::E7 => check_e7(c, t, region),
        AxiomId::E8 => check_e8(c, t, region),
        AxiomId::Laws => check_laws(c, t, region),
    }
}

/// Search for a value that fusion pushes above itself, demonstrating that
/// no sampled bound can be greatest.
fn unbounded_witness(c: &dyn Calculus, t: &Tolerance, region: Region) -> Option<Vec<CalcValue>> {
    for tuple in sample_tuples(c, region, t, 1, lane(AxiomId::E1)) {
        let x = tuple[0];
        let xx = c.tensor_raw(&x, &x);
        if c.validate(&xx).is_ok() && c.leq_margin(&xx, &x) < -c.eps() {
            return Some(alloc::vec![x, xx]);
        }
    }
    None
}

fn check_e1(c: &dyn Calculus, t: &Tolerance, region: Region) -> AxiomVerdict {
    let eps = c.eps();
    match c.top() {
        Some(top) => {
            for tuple in sample_tuples(c, region, t, 1, lane(AxiomId::E1)) {
                let x = tuple[0];
                if c.leq_margin(&x, &top) < -eps {
                    return AxiomVerdict::fails(
                        AxiomId::E1,
                        alloc::vec![x, top],
                        String::from("sampled value escapes above the declared greatest element"),
                        t,
                        region,
                    );
                }
            }
            AxiomVerdict::holds(
                AxiomId::E1,
                Status::HoldsSampled,
                String::from("greatest element declared; every sampled value sits below it"),
                t,
                region,
            )
        }
        None => {
            let cx = unbounded_witness(c, t, region)
                .unwrap_or_else(|| alloc::vec![c.unit()]);
            AxiomVerdict::fails(
                AxiomId::E1,
                cx,
                String::from(
                    "no greatest element declared; self-fusion escapes above the fused value, so no sampled value can bound the carrier",
                ),
                t,
                region,
            )
        }
    }
}

fn check_e2(c: &dyn Calculus, t: &Tolerance, region: Region) -> AxiomVerdict {
    let eps = c.eps();
    if !c.flags().complete {
        let cx = unbounded_witness(c, t, region).unwrap_or_else(|| alloc::vec![c.unit()]);
        return AxiomVerdict::fails(
            AxiomId::E2,
            cx,
            String::from("completeness not declared; the witness chain has no sampled upper bound"),
            t,
            region,
        );
    }
    // Finite soundness: joins are least upper bounds and meets greatest
    // lower bounds among the sample, and both respect declared extremes.
    for tuple in sample_tuples(c, region, t, 5, lane(AxiomId::E2)) {
        let (set, candidate) = (&tuple[..4], &tuple[4]);
        let join = match c.join_raw(set) {
            Some(j) => j,
            None => {
                return AxiomVerdict::fails(
                    AxiomId::E2,
                    tuple.clone(),
                    String::from("declared complete but a finite join is unavailable"),
                    t,
                    region,
                )
            }
        };
        let meet = match c.meet_raw(set) {
            Some(m) => m,
            None => {
                return AxiomVerdict::fails(
                    AxiomId::E2,
                    tuple.clone(),
                    String::from("declared complete but a finite meet is unavailable"),
                    t,
                    region,
                )
            }
        };
        let mut bad = c.validate(&join).is_err() || c.validate(&meet).is_err();
        for v in set {
            bad |= c.leq_margin(v, &join) < -eps || c.leq_margin(&meet, v) < -eps;
        }
        // Leastness/greatestness against the independent candidate.
        if set.iter().all(|v| c.leq_margin(v, candidate) >= 0.0) {
            bad |= c.leq_margin(&join, candidate) < -eps;
        }
        if set.iter().all(|v| c.leq_margin(candidate, v) >= 0.0) {
            bad |= c.leq_margin(candidate, &meet) < -eps;
        }
        if bad {
            let mut cx = tuple.clone();
            cx.push(join);
            cx.push(meet);
            return AxiomVerdict::fails(
                AxiomId::E2,
                cx,
                String::from(
                    "finite join/meet violates the bound laws (set, candidate, join, meet)",
                ),
                t,
                region,
            );
        }
    }
    AxiomVerdict::holds(
        AxiomId::E2,
        Status::HoldsStructural,
        String::from(
            "completeness declared; finite joins and meets behave as least/greatest bounds on the sample (arbitrary subsets are not machine-checkable)",
        ),
        t,
        region,
    )
}

fn check_e3(c: &dyn Calculus, t: &Tolerance, region: Region) -> AxiomVerdict {
    let eps = c.eps();
    let unit = c.unit();
    for tuple in sample_tuples(c, region, t, 2, lane(AxiomId::E3)) {
        let (a, b) = (tuple[0], tuple[1]);
        let fused = c.tensor_raw(&a, &b);
        let premise = c.leq_margin(&unit, &fused) >= -eps;
        let a_below = c.leq_margin(&unit, &a) < -eps;
        let b_below = c.leq_margin(&unit, &b) < -eps;
        if premise && a_below && b_below {
            return AxiomVerdict::fails(
                AxiomId::E3,
                alloc::vec![a, b, fused],
                String::from(
                    "fusion reaches the unit although neither input does (a, b, fused)",
                ),
                t,
                region,
            );
        }
    }
    AxiomVerdict::holds(
        AxiomId::E3,
        Status::HoldsSampled,
        String::from("whenever fused evidence reaches the unit, some input already had"),
        t,
        region,
    )
}

/// The residual used by E4: declared when the calculus is closed,
/// otherwise the grid supremum on bounded carriers.
fn residual(c: &dyn Calculus, a: &CalcValue, b: &CalcValue, t: &Tolerance) -> Option<CalcValue> {
    if let Some(h) = c.hom_raw(a, b) {
        return Some(h);
    }
    if matches!(c.carrier(), Carrier::ScalarLog) {
        return None;
    }
    hom_by_sup(c, a, b, t).ok()
}

fn check_e4(c: &dyn Calculus, t: &Tolerance, region: Region) -> AxiomVerdict {
    let eps = c.eps();
    let declared = c.flags().closed;
    for tuple in sample_tuples(c, region, t, 3, lane(AxiomId::E4)) {
        let (z, a, b) = (tuple[0], tuple[1], tuple[2]);
        let h = match residual(c, &a, &b, t) {
            Some(h) => h,
            None => {
                return AxiomVerdict::holds(
                    AxiomId::E4,
                    Status::NotApplicable,
                    String::from("no declared residual and no bounded carrier to search"),
                    t,
                    region,
                )
            }
        };
        let lhs = c.leq_margin(&c.tensor_raw(&z, &a), &b) >= -eps;
        let rhs = c.leq_margin(&z, &h) >= -eps;
        if lhs != rhs {
            return AxiomVerdict::fails(
                AxiomId::E4,
                alloc::vec![z, a, b, h],
                alloc::format!(
                    "adjunction broken by (z, a, b, residual): fusing-then-comparing and comparing-to-the-residual disagree{}{}",
                    if declared { "" } else { "; residual approximated by grid supremum" },
                    interior_caveat(region),
                ),
                t,
                region,
            );
        }
    }
    AxiomVerdict::holds(
        AxiomId::E4,
        Status::HoldsSampled,
        alloc::format!(
            "residual is adjoint to fusion on every sampled triple{}{}",
            if declared { "" } else { " (grid supremum)" },
            interior_caveat(region),
        ),
        t,
        region,
    )
}

fn check_e5(c: &dyn Calculus, t: &Tolerance, region: Region) -> AxiomVerdict {
    let eps = c.eps();
    for tuple in sample_tuples(c, region, t, 2, lane(AxiomId::E5)) {
        let (x, y) = (tuple[0], tuple[1]);
        let fused = c.tensor_raw(&x, &y);
        if c.leq_margin(&x, &fused) < -eps {
            return AxiomVerdict::fails(
                AxiomId::E5,
                alloc::vec![x, y, fused],
                String::from("fusion moved the value down (x, y, fused)"),
                t,
                region,
            );
        }
    }
    AxiomVerdict::holds(
        AxiomId::E5,
        Status::HoldsSampled,
        String::from("fusion never moves a sampled value down"),
        t,
        region,
    )
}

fn check_e6(c: &dyn Calculus, t: &Tolerance, region: Region) -> AxiomVerdict {
    for tuple in sample_tuples(c, region, t, 1, lane(AxiomId::E6)) {
        let x = tuple[0];
        let xx = c.tensor_raw(&x, &x);
        if !c.value_eq(&xx, &x) {
            return AxiomVerdict::fails(
                AxiomId::E6,
                alloc::vec![x, xx],
                String::from("self-fusion is not a no-op (x, fused)"),
                t,
                region,
            );
        }
    }
    AxiomVerdict::holds(
        AxiomId::E6,
        Status::HoldsSampled,
        String::from("self-fusion is a no-op within tolerance on every sample"),
        t,
        region,
    )
}

fn check_e7(c: &dyn Calculus, t: &Tolerance, region: Region) -> AxiomVerdict {
    let eps = c.eps();
    let grid = match search_grid(c, t.grid_resolution) {
        Ok(g) => g,
        Err(_) => {
            return AxiomVerdict::holds(
                AxiomId::E7,
                Status::NotApplicable,
                String::from("carrier has no searchable grid"),
                t,
                region,
            )
        }
    };
    let top = c.top();
    for tuple in sample_tuples(c, region, t, 2, lane(AxiomId::E7)) {
        let (x, y) = (tuple[0], tuple[1]);
        if let Some(top) = &top {
            if c.value_eq(&x, top) {
                continue;
            }
        }
        let found = grid.iter().any(|z| c.leq_margin(&c.tensor_raw(&x, z), &y) >= -eps);
        if !found {
            return AxiomVerdict::fails(
                AxiomId::E7,
                alloc::vec![x, y],
                alloc::format!(
                    "no further evidence takes x at or below y at grid resolution {} (resolution-bounded search)",
                    t.grid_resolution
                ),
                t,
                region,
            );
        }
    }
    AxiomVerdict::holds(
        AxiomId::E7,
        Status::HoldsSampled,
        String::from(
            "for every sampled pair (x not greatest), some grid evidence fuses x to or below the target",
        ),
        t,
        region,
    )
}

fn check_e8(c: &dyn Calculus, t: &Tolerance, region: Region) -> AxiomVerdict {
    let eps = c.eps();
    for tuple in sample_tuples(c, region, t, 3, lane(AxiomId::E8)) {
        let (a, b, x) = (tuple[0], tuple[1], tuple[2]);
        let ax = c.tensor_raw(&a, &x);
        let bx = c.tensor_raw(&b, &x);
        let premise = c.leq_margin(&ax, &bx) >= -eps;
        let conclusion_fails = c.leq_margin(&a, &b) < -eps;
        if premise && conclusion_fails {
            return AxiomVerdict::fails(
                AxiomId::E8,
                alloc::vec![a, b, x, ax, bx],
                alloc::format!(
                    "common factor cannot be cancelled (a, b, x, a*x, b*x){}",
                    interior_caveat(region)
                ),
                t,
                region,
            );
        }
    }
    AxiomVerdict::holds(
        AxiomId::E8,
        Status::HoldsSampled,
        alloc::format!(
            "fused inequalities cancel on every sampled triple{}",
            interior_caveat(region)
        ),
        t,
        region,
    )
}

fn check_laws(c: &dyn Calculus, t: &Tolerance, region: Region) -> AxiomVerdict {
    let eps = c.eps();
    let unit = c.unit();
    let fail = |cx: Vec<CalcValue>, notes: String| -> AxiomVerdict {
        AxiomVerdict::fails(AxiomId::Laws, cx, notes, t, region)
    };
    for tuple in sample_tuples(c, region, t, 3, lane(AxiomId::Laws)) {
        let (a, b, x) = (tuple[0], tuple[1], tuple[2]);
        // Reflexivity.
        if c.leq_margin(&a, &a) < -eps {
            return fail(alloc::vec![a], String::from("order is not reflexive"));
        }
        // Transitivity: clean premises (margin >= 0) so tolerance noise
        // does not stack into a spurious failure.
        if c.leq_margin(&a, &b) >= 0.0
            && c.leq_margin(&b, &x) >= 0.0
            && c.leq_margin(&a, &x) < -eps
        {
            return fail(alloc::vec![a, b, x], String::from("order is not transitive (a <= b <= x)"));
        }
        // Antisymmetry up to tolerance.
        if c.leq_margin(&a, &b) >= -eps && c.leq_margin(&b, &a) >= -eps && !c.value_eq(&a, &b) {
            return fail(alloc::vec![a, b], String::from("mutual order without value equality"));
        }
        // Commutativity, bitwise.
        let ab = c.tensor_raw(&a, &b);
        let ba = c.tensor_raw(&b, &a);
        if !ab.bits_eq(&ba) {
            return fail(alloc::vec![a, b, ab, ba], String::from("fusion is not commutative bit-for-bit"));
        }
        // Associativity within tolerance.
        let left = c.tensor_raw(&ab, &x);
        let right = c.tensor_raw(&a, &c.tensor_raw(&b, &x));
        if !c.value_eq(&left, &right) {
            return fail(
                alloc::vec![a, b, x, left, right],
                alloc::format!("fusion is not associative within tolerance{}", interior_caveat(region)),
            );
        }
        // Unitality within tolerance.
        let au = c.tensor_raw(&a, &unit);
        if !c.value_eq(&au, &a) {
            return fail(alloc::vec![a, au], String::from("unit is not neutral within tolerance"));
        }
        // Monotonicity, with a strict premise so boundary noise cannot
        // manufacture a counterexample.
        if c.leq_margin(&a, &b) >= eps {
            let ax = c.tensor_raw(&a, &x);
            let bx = c.tensor_raw(&b, &x);
            if c.leq_margin(&ax, &bx) < -eps {
                return fail(
                    alloc::vec![a, b, x, ax, bx],
                    String::from("fusion is not monotone (a <= b but a*x !<= b*x)"),
                );
            }
        }
    }
    AxiomVerdict::holds(
        AxiomId::Laws,
        Status::HoldsSampled,
        alloc::format!(
            "order and monoidal laws hold on every sampled triple{}",
            interior_caveat(region)
        ),
        t,
        region,
    )
}

fn lane(axiom: AxiomId) -> u64 {
    match axiom {
        AxiomId::E1 => 1,
        AxiomId::E2 => 2,
        AxiomId::E3 => 3,
        AxiomId::E4 => 4,
        AxiomId::E5 => 5,
        AxiomId::E6 => 6,
        AxiomId::E7 => 7,
        AxiomId::E8 => 8,
        AxiomId::Laws => 9,
    }
}

/// Full verdict table for a set of calculi.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomTable {
    /// Calculus id → axiom → verdict. Covers every requested pair.
    pub rows: BTreeMap<String, BTreeMap<AxiomId, AxiomVerdict>>,
}

impl AxiomTable {
    /// The set of axioms a calculus satisfies (holding verdicts only).
    pub fn held(&self, calculus: &str) -> Vec<AxiomId> {
        self.rows
            .get(calculus)
            .map(|row| {
                row.iter().filter(|(_, v)| v.status.holds()).map(|(a, _)| *a).collect()
            })
            .unwrap_or_default()
    }
}

/// Check every axiom for every calculus, at each axiom's default region.
pub fn axiom_table(cs: &[CalcRef], t: &Tolerance) -> Result<AxiomTable, Error> {
    if cs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut rows = BTreeMap::new();
    for c in cs {
        let mut row = BTreeMap::new();
        for axiom in AxiomId::ALL {
            let region = default_region(c.as_ref(), axiom);
            row.insert(axiom, check_axiom(c.as_ref(), axiom, t, region));
        }
        rows.insert(String::from(c.id()), row);
    }
    Ok(AxiomTable { rows })
}

/// Joint report for the two structural theorems on complete calculi: the
/// incompatibility of closure, strong conservativity, and cancellativity;
/// and the equivalence of closure with fallibilism.
#[derive(Debug, Clone, PartialEq)]
pub struct NoGoReport {
    pub calculus: String,
    pub e4: Status,
    pub e5: Status,
    pub e7: Status,
    pub e8: Status,
    /// ¬(E4 ∧ E5 ∧ E8) on holding verdicts.
    pub no_go_consistent: bool,
    /// E4 ⟺ E7 on holding verdicts.
    pub closure_iff_fallibility: bool,
    /// Which conjunct broke, when one did.
    pub violations: Vec<String>,
}

impl NoGoReport {
    pub fn consistent(&self) -> bool {
        self.no_go_consistent && self.closure_iff_fallibility
    }
}

/// Evaluate both structural theorems against computed verdicts.
///
/// Requires a complete calculus — the theorems quantify over complete
/// ones — and errors with the failed hypothesis otherwise.
pub fn check_no_go(c: &CalcRef, t: &Tolerance) -> Result<NoGoReport, Error> {
    if !c.flags().complete {
        return Err(Error::PreconditionUnmet {
            hypothesis: String::from("complete"),
            detail: alloc::format!("{} does not declare completeness", c.id()),
        });
    }
    let verdict = |axiom| {
        check_axiom(c.as_ref(), axiom, t, default_region(c.as_ref(), axiom)).status
    };
    let (e4, e5, e7, e8) = (
        verdict(AxiomId::E4),
        verdict(AxiomId::E5),
        verdict(AxiomId::E7),
        verdict(AxiomId::E8),
    );
    let no_go_consistent = !(e4.holds() && e5.holds() && e8.holds());
    let closure_iff_fallibility = e4.holds() == e7.holds();
    let mut violations = Vec::new();
    if !no_go_consistent {
        violations.push(alloc::format!(
            "{}: closure, strong conservativity, and cancellativity all hold together (E4 {e4}, E5 {e5}, E8 {e8})",
            c.id()
        ));
    }
    if !closure_iff_fallibility {
        violations.push(alloc::format!(
            "{}: closure and fallibilism disagree (E4 {e4}, E7 {e7})",
            c.id()
        ));
    }
    Ok(NoGoReport {
        calculus: String::from(c.id()),
        e4,
        e5,
        e7,
        e8,
        no_go_consistent,
        closure_iff_fallibility,
        violations,
    })
}

/// Report for the idempotency theorem: on a totally ordered calculus whose
/// unit is the greatest element and whose fusion is idempotent, fusion must
/// be the order minimum.
#[derive(Debug, Clone, PartialEq)]
pub struct IdempotentMinReport {
    pub calculus: String,
    pub samples: u32,
    pub counterexample: Option<Vec<CalcValue>>,
}

impl IdempotentMinReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Check that fusion is the order minimum, under the theorem's hypotheses:
/// total order, unit = top, and idempotency. A failed hypothesis is an
/// error naming it; a counterexample to the conclusion is reported.
pub fn check_idempotent_min(c: &CalcRef, t: &Tolerance) -> Result<IdempotentMinReport, Error> {
    if !c.flags().total_order {
        return Err(Error::PreconditionUnmet {
            hypothesis: String::from("total order"),
            detail: alloc::format!("{} does not declare a total order", c.id()),
        });
    }
    let e6 = check_axiom(c.as_ref(), AxiomId::E6, t, default_region(c.as_ref(), AxiomId::E6));
    if !e6.status.holds() {
        let detail = match &e6.counterexample {
            Some(cx) if cx.len() == 2 => alloc::format!(
                "{}: self-fusion moves {} to {}",
                c.id(),
                cx[0],
                cx[1]
            ),
            _ => alloc::format!("{}: idempotency does not hold", c.id()),
        };
        return Err(Error::PreconditionUnmet { hypothesis: String::from("idempotency"), detail });
    }
    let top = c.top().ok_or_else(|| Error::PreconditionUnmet {
        hypothesis: String::from("unit = top"),
        detail: alloc::format!("{} declares no greatest element", c.id()),
    })?;
    if !c.value_eq(&c.unit(), &top) {
        return Err(Error::PreconditionUnmet {
            hypothesis: String::from("unit = top"),
            detail: alloc::format!("{}: unit {} differs from top {}", c.id(), c.unit(), top),
        });
    }
    let eps = c.eps();
    let mut samples = 0u32;
    for tuple in sample_tuples(c.as_ref(), Region::Full, t, 2, 10) {
        let (x, y) = (tuple[0], tuple[1]);
        samples += 1;
        let fused = c.tensor_raw(&x, &y);
        let min = if c.leq_margin(&x, &y) >= -eps { x } else { y };
        if !c.value_eq(&fused, &min) {
            return Ok(IdempotentMinReport {
                calculus: String::from(c.id()),
                samples,
                counterexample: Some(alloc::vec![x, y, fused, min]),
            });
        }
    }
    Ok(IdempotentMinReport { calculus: String::from(c.id()), samples, counterexample: None })
}
