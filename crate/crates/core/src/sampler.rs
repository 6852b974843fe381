//! Deterministic, index-addressable sampling of carrier values.
//!
//! Reproducibility is part of the contract: every sampled value is a pure
//! function of `(seed, lane, index)`, so verdicts never depend on call
//! order, thread scheduling, or how many samples some other check consumed.
//! Lanes separate independent uses (one per axiom, per calculus) so adding
//! a check never shifts another check's stream.
//!
//! Tuple streams lead with a deterministic prefix: the cross product of the
//! calculus's special points (poles, units, midpoints, the contradiction
//! element where present), capped at [`MAX_SPECIAL_TUPLES`]. Degenerate
//! counterexamples live on that lattice, so they are found on every run,
//! not only when the pseudo-random tail happens to land near them. The
//! interior region skips the prefix and keeps a relative standoff from the
//! carrier boundary, where float granularity makes eps-accurate law checks
//! meaningless.

use alloc::string::String;
use alloc::vec::Vec;

use crate::calculus::{Calculus, Carrier};
use crate::tolerance::{Region, Tolerance};
use crate::value::CalcValue;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
const LANE_SALT: u64 = 0xD1B5_4A32_D192_ED03;

/// Cap on the special-point cross product at the head of a tuple stream.
pub const MAX_SPECIAL_TUPLES: usize = 4096;

/// Relative standoff from the carrier boundary in the interior region.
pub const INTERIOR_STANDOFF: f64 = 1e-6;

/// 64-bit finalizer (splitmix64 increment + avalanche). Zero is not a
/// fixed point.
pub fn mix64(z: u64) -> u64 {
    let mut z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The `index`-th word of lane `lane` under `seed`. Pure and
/// order-independent; changing any argument decorrelates the output.
pub fn stream(seed: u64, lane: u64, index: u64) -> u64 {
    let base = mix64(seed ^ mix64(lane.wrapping_mul(GOLDEN) ^ LANE_SALT));
    mix64(base ^ index.wrapping_mul(GOLDEN))
}

/// Map a word to the unit interval `[0, 1)` with full 53-bit resolution.
pub fn unit_f64(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn uniform(seed: u64, lane: u64, index: u64) -> f64 {
    unit_f64(stream(seed, lane, index))
}

/// Special points of a calculus: the values where declared conventions
/// (poles, units, contradiction) override the closed-form operations.
/// Deduplicated; the unit always leads, so unit-law witnesses sit at the
/// head of every prefix.
pub fn special_points(c: &dyn Calculus) -> Vec<CalcValue> {
    let s = CalcValue::Scalar;
    let raw = match c.carrier() {
        Carrier::Scalar { lo, hi } if lo < 0.0 => {
            alloc::vec![c.unit(), s(hi), s(lo), s(0.5), s(-0.5)]
        }
        Carrier::Scalar { lo, hi } => {
            alloc::vec![c.unit(), s(hi), s(lo), s(0.5)]
        }
        Carrier::ScalarLog => alloc::vec![c.unit(), s(0.25), s(4.0)],
        Carrier::Pair { lo, hi } => alloc::vec![
            c.unit(),
            CalcValue::Pair(lo, lo),
            CalcValue::Pair(hi, hi),
            CalcValue::Pair(0.5, 0.5),
            CalcValue::Pair(lo, 0.5),
            CalcValue::Pair(0.5, hi),
            CalcValue::Bottom,
        ],
        Carrier::Interval { lo, hi } => alloc::vec![
            c.unit(),
            CalcValue::interval(lo, lo),
            CalcValue::interval(hi, hi),
            CalcValue::interval(0.5, 0.5),
            CalcValue::interval(lo, 0.5),
            CalcValue::interval(0.5, hi),
            CalcValue::Bottom,
        ],
    };
    let mut out: Vec<CalcValue> = Vec::with_capacity(raw.len());
    for v in raw {
        if !out.iter().any(|w| w.bits_eq(&v)) {
            out.push(v);
        }
    }
    out
}

/// Draw one carrier value. Each `(lane, index)` pair is an independent
/// draw; pair-shaped carriers consume two words per draw internally.
pub fn sample_value(
    c: &dyn Calculus,
    region: Region,
    seed: u64,
    lane: u64,
    index: u64,
) -> CalcValue {
    let u0 = uniform(seed, lane, index.wrapping_mul(2));
    let u1 = uniform(seed, lane, index.wrapping_mul(2).wrapping_add(1));
    match c.carrier() {
        Carrier::Scalar { lo, hi } => {
            let (lo, hi) = shrink(lo, hi, region);
            CalcValue::Scalar(lo + (hi - lo) * u0)
        }
        Carrier::ScalarLog => {
            // Log-uniform over [1e-3, 1e3]: symmetric around the unit, and
            // products of a few draws stay far from overflow.
            let (llo, lhi) = (libm::log(1e-3), libm::log(1e3));
            CalcValue::Scalar(libm::exp(llo + (lhi - llo) * u0))
        }
        Carrier::Pair { lo, hi } => {
            let (lo, hi) = shrink(lo, hi, region);
            let (a, b) = (lo + (hi - lo) * u0, lo + (hi - lo) * u1);
            CalcValue::Pair(a.min(b), a.max(b))
        }
        Carrier::Interval { lo, hi } => {
            let (lo, hi) = shrink(lo, hi, region);
            let (a, b) = (lo + (hi - lo) * u0, lo + (hi - lo) * u1);
            CalcValue::interval(a.min(b), a.max(b))
        }
    }
}

fn shrink(lo: f64, hi: f64, region: Region) -> (f64, f64) {
    match region {
        Region::Full => (lo, hi),
        Region::Interior => {
            let d = (hi - lo) * INTERIOR_STANDOFF;
            (lo + d, hi - d)
        }
    }
}

/// Deterministic stream of `k`-tuples for law checking.
///
/// In the full region the stream opens with the special-point cross
/// product (mixed-radix enumeration, capped at [`MAX_SPECIAL_TUPLES`]) and
/// fills the rest of the budget pseudo-randomly. The interior region is
/// purely pseudo-random with the boundary standoff. The total length is
/// `t.sample_count` (or the prefix length, if larger).
pub fn sample_tuples(
    c: &dyn Calculus,
    region: Region,
    t: &Tolerance,
    k: usize,
    lane: u64,
) -> Vec<Vec<CalcValue>> {
    let budget = t.sample_count as usize;
    let mut out: Vec<Vec<CalcValue>> = Vec::with_capacity(budget);
    if region == Region::Full {
        let specials = special_points(c);
        let m = specials.len();
        if m > 0 {
            let mut total: usize = 1;
            for _ in 0..k {
                total = total.saturating_mul(m);
                if total > MAX_SPECIAL_TUPLES {
                    total = MAX_SPECIAL_TUPLES;
                    break;
                }
            }
            for i in 0..total.min(MAX_SPECIAL_TUPLES) {
                let mut tuple = Vec::with_capacity(k);
                let mut rest = i;
                for _ in 0..k {
                    tuple.push(specials[rest % m]);
                    rest /= m;
                }
                out.push(tuple);
            }
        }
    }
    let mut i = out.len() as u64;
    while out.len() < budget {
        let mut tuple = Vec::with_capacity(k);
        for j in 0..k {
            tuple.push(sample_value(c, region, t.seed, lane, i * k as u64 + j as u64));
        }
        out.push(tuple);
        i += 1;
    }
    out
}

/// Human-readable description of a tuple stream, recorded in verdicts so a
/// reported witness can be traced back to its draw.
pub fn describe(region: Region, t: &Tolerance, k: usize, lane: u64) -> String {
    alloc::format!(
        "{region} region, {}-tuples, seed {}, lane {lane}, {} samples{}",
        k,
        t.seed,
        t.sample_count,
        match region {
            Region::Full => ", special-point prefix",
            Region::Interior => "",
        }
    )
}
