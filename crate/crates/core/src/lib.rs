//! Epistemic uncertainty calculi as symmetric monoidal posets.
//!
//! An *epistemic calculus* is a carrier of belief values together with a
//! partial order (`leq`, "is less certain than"), a commutative monotone
//! fusion operator (`tensor`), and a neutral element (`unit`). Optional
//! structure — a top element, arbitrary joins, an internal hom adjoint to
//! fusion — separates the classical uncertainty formalisms from each other.
//!
//! # Core concepts
//!
//! - [`CalcValue`]: a point of some carrier — a scalar, an ordered pair, a
//!   closed subinterval of `[0,1]`, or the adjoined contradiction `Bottom`.
//! - [`Calculus`]: the descriptor trait; [`instances`] bundles six concrete
//!   calculi (certainty factors, possibility theory in min and max flavors,
//!   bipolar possibility, interval probability, likelihood ratios).
//! - [`axioms`]: seeded, deterministic sampling checks for the axioms
//!   E1–E8 plus the order/monoid law suite, an axiom table, and the
//!   no-go/uniqueness cross-checks.
//! - [`maps`]: monotone maps between calculi and their classification as
//!   conservative (lax), liberal (op-lax), balanced, or neither.
//! - [`hypotheses`]: finite hypothesis graphs enriched in a calculus, with
//!   exhaustive validation, transport along maps, and evidence-path fusion.
//! - [`updating`]: the generalized belief update — on likelihood ratios it
//!   is Bayes' rule, on possibility theory it is possibilistic
//!   conditioning — plus independent oracles for each special case.
//!
//! # Example
//!
//! ```
//! use epicalc_core::{instances::InstanceId, value::CalcValue, calculus};
//!
//! let cf = InstanceId::Cf.build(1e-9);
//! let fused = calculus::tensor(
//!     cf.as_ref(),
//!     &CalcValue::Scalar(0.5),
//!     &CalcValue::Scalar(0.5),
//! )
//! .unwrap();
//! assert_eq!(fused, CalcValue::Scalar(0.8));
//! ```
//!
//! The crate is `no_std` (with `alloc`); all IO, serialization, and the
//! command-line surface live in the companion crate `epicalc-cli`.
//! Everything here is pure and deterministic: samples are derived from a
//! seed by index, so any evaluation order produces the same verdicts.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod axioms;
pub mod calculus;
pub mod error;
pub mod hypotheses;
pub mod instances;
pub mod maps;
pub mod sampler;
pub mod tolerance;
pub mod updating;
pub mod value;

pub use calculus::{Calculus, Carrier, Flags};
pub use error::Error;
pub use tolerance::{Region, Tolerance};
pub use value::CalcValue;
