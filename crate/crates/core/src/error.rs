//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in calculus operations, axiom checks,
/// map classification, graph handling, and updating.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A value is outside the calculus carrier; `detail` names the
    /// offending component.
    InvalidValue { calculus: String, detail: String },
    /// An aggregate operation received no values.
    EmptyInput,
    /// The calculus declares no internal hom and no fallback applies.
    HomUnavailable { calculus: String, detail: String },
    /// The calculus does not declare completeness (joins/meets unavailable).
    NotComplete { calculus: String },
    /// Grid search found no candidate and the calculus declares no bottom.
    NoWitness { calculus: String },
    /// Two structures refer to different calculi.
    MismatchedCalculi { expected: String, found: String },
    /// Transport requires a conservative map and the classification failed.
    NotConservative { map: String, detail: String },
    /// Updating requires a closed calculus (declared internal hom).
    NotClosed { calculus: String },
    /// A graph object id is not present in the graph.
    UnknownObject { id: String },
    /// An oracle input must be strictly positive (and finite).
    NonPositiveInput { detail: String },
    /// An oracle was handed a graph over the wrong calculus.
    CalculusMismatch { expected: String, found: String },
    /// Evidence-coordinate computations require values strictly inside the
    /// open interval; a boundary value was found.
    BoundaryValue { detail: String },
    /// A theorem-shaped check was invoked on a calculus that fails one of
    /// its hypotheses; names the failed hypothesis.
    PreconditionUnmet { hypothesis: String, detail: String },
    /// Unrecognized calculus id.
    UnknownCalculus { id: String },
    /// Unrecognized axiom id.
    UnknownAxiom { id: String },
    /// Unrecognized built-in map name.
    UnknownMap { name: String },
    /// A hypothesis-graph construction problem (duplicate, missing, or
    /// ill-typed hom entries; too many objects; bad path).
    InvalidGraph { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidValue { calculus, detail } => {
                write!(f, "invalid {calculus} value: {detail}")
            }
            Error::EmptyInput => write!(f, "empty input: at least one value is required"),
            Error::HomUnavailable { calculus, detail } => {
                write!(f, "no internal hom available for {calculus}: {detail}")
            }
            Error::NotComplete { calculus } => {
                write!(f, "{calculus} does not declare completeness; joins and meets are unavailable")
            }
            Error::NoWitness { calculus } => {
                write!(f, "grid search over {calculus} found no candidate and no bottom is declared")
            }
            Error::MismatchedCalculi { expected, found } => {
                write!(f, "mismatched calculi: expected {expected}, found {found}")
            }
            Error::NotConservative { map, detail } => {
                write!(f, "map {map} is not conservative: {detail}")
            }
            Error::NotClosed { calculus } => {
                write!(f, "{calculus} is not closed (no internal hom); updating is undefined")
            }
            Error::UnknownObject { id } => write!(f, "unknown object: {id}"),
            Error::NonPositiveInput { detail } => {
                write!(f, "inputs must be strictly positive: {detail}")
            }
            Error::CalculusMismatch { expected, found } => {
                write!(f, "oracle expects a {expected} graph, found {found}")
            }
            Error::BoundaryValue { detail } => {
                write!(f, "boundary value outside the open interior: {detail}")
            }
            Error::PreconditionUnmet { hypothesis, detail } => {
                write!(f, "hypothesis not satisfied ({hypothesis}): {detail}")
            }
            Error::UnknownCalculus { id } => write!(f, "unknown calculus id: {id}"),
            Error::UnknownAxiom { id } => write!(f, "unknown axiom id: {id}"),
            Error::UnknownMap { name } => write!(f, "unknown built-in map: {name}"),
            Error::InvalidGraph { detail } => write!(f, "invalid hypothesis graph: {detail}"),
        }
    }
}

impl core::error::Error for Error {}
