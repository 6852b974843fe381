//! Numeric tolerances and sampling configuration.

use core::fmt;

/// Default comparison tolerance used across the crate.
pub const DEFAULT_EPS: f64 = 1e-9;
/// Default grid resolution for supremum and witness searches.
pub const DEFAULT_GRID: u32 = 1024;
/// Default number of pseudo-random samples per check.
pub const DEFAULT_SAMPLES: u32 = 10_000;
/// Default stream seed.
pub const DEFAULT_SEED: u64 = 42;

/// Sampling and comparison configuration for checks.
///
/// Identical `Tolerance` plus identical inputs yields identical results —
/// samples are derived from `seed` by index, never from shared mutable
/// state, so the contract survives any evaluation order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Absolute comparison tolerance. Order comparisons treat `|a - b| <= eps`
    /// as equality (the likelihood-ratio calculus compares on a log scale,
    /// making `eps` relative there).
    pub eps: f64,
    /// Points per scalar axis in supremum/witness grids. Pair and interval
    /// carriers use a product grid with roughly this many points in total.
    pub grid_resolution: u32,
    /// Total samples per check. On the full region a deterministic
    /// special-point enumeration forms the prefix and pseudo-random draws
    /// fill the remainder.
    pub sample_count: u32,
    /// Seed for the index-derived sample streams.
    pub seed: u64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps: DEFAULT_EPS,
            grid_resolution: DEFAULT_GRID,
            sample_count: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

impl Tolerance {
    /// Same configuration with a different `eps`.
    pub fn with_eps(self, eps: f64) -> Self {
        Tolerance { eps, ..self }
    }

    /// Same configuration with a different sample count.
    pub fn with_samples(self, sample_count: u32) -> Self {
        Tolerance { sample_count, ..self }
    }

    /// Same configuration with a different seed.
    pub fn with_seed(self, seed: u64) -> Self {
        Tolerance { seed, ..self }
    }
}

/// Which part of the carrier a sampled check draws from.
///
/// `Full` includes declared boundary and special points (unit, top, bottom,
/// the contradiction element); `Interior` keeps a small standoff from the
/// carrier boundary. The distinction matters for certainty factors, whose
/// declared extreme-value extension breaks some laws exactly at the boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Full,
    Interior,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Full => write!(f, "full"),
            Region::Interior => write!(f, "interior"),
        }
    }
}
