//! The three objective formulations scored directly on a coverage vector.
//!
//! | kind             | sense    | value                                        |
//! |------------------|----------|----------------------------------------------|
//! | `CoverageMax`    | maximize | `Σψ − ρ·a`                                   |
//! | `VectorDistance` | minimize | `Σ(k − ψ)² + ρ·a`                            |
//! | `BalancingIndex` | maximize | `(Σψ)³ / (k m² Σψ²) − ρ·a` (first term 0 if Σψ = 0) |
//!
//! `ψ` are the capped counts `min(ξ, k)` and `a` the number of active sensors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::CoverageVector;

/// Values closer than this compare as a tie.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ObjectiveKind {
    /// Linear coverage maximization (the ILP).
    CoverageMax,
    /// Squared distance to `(k, .., k)` (the IQP).
    VectorDistance,
    /// Balancing-index maximization (the INLP).
    BalancingIndex,
}

impl ObjectiveKind {
    pub const ALL: [ObjectiveKind; 3] = [Self::CoverageMax, Self::VectorDistance, Self::BalancingIndex];

    pub fn sense(self) -> Sense {
        match self {
            Self::CoverageMax | Self::BalancingIndex => Sense::Maximize,
            Self::VectorDistance => Sense::Minimize,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::CoverageMax => "ilp",
            Self::VectorDistance => "iqp",
            Self::BalancingIndex => "inlp",
        }
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for ObjectiveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ilp" | "coverage-max" => Ok(Self::CoverageMax),
            "iqp" | "vector-distance" => Ok(Self::VectorDistance),
            "inlp" | "balancing-index" => Ok(Self::BalancingIndex),
            other => Err(Error::UnknownSolver(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveSpec {
    kind: ObjectiveKind,
    k: u32,
    rho: f64,
}

impl ObjectiveSpec {
    pub fn new(kind: ObjectiveKind, k: u32, rho: f64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if !(rho > 0.0 && rho <= 1.0) {
            return Err(Error::InvalidRho(rho));
        }
        Ok(Self { kind, k, rho })
    }

    pub fn kind(&self) -> ObjectiveKind {
        self.kind
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn sense(&self) -> Sense {
        self.kind.sense()
    }

    pub fn with_kind(&self, kind: ObjectiveKind) -> Self {
        Self { kind, ..*self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveValue {
    pub value: f64,
    pub sense: Sense,
}

/// `(Σψ)³ / (k m² Σψ²)` from the sums; 0 when nothing is covered.
pub(crate) fn balancing_term(total: f64, sum_sq: f64, k: f64, m: f64) -> f64 {
    if total == 0.0 {
        0.0
    } else {
        total * total * total / (k * m * m * sum_sq)
    }
}

/// Objective value of a coverage vector with `active_count` sensors switched on.
pub fn evaluate(spec: &ObjectiveSpec, coverage: &CoverageVector, active_count: usize) -> Result<ObjectiveValue> {
    if coverage.k() != spec.k {
        return Err(Error::KMismatch {
            spec: spec.k,
            coverage: coverage.k(),
        });
    }
    let penalty = spec.rho * active_count as f64;
    let value = match spec.kind {
        ObjectiveKind::CoverageMax => coverage.total() as f64 - penalty,
        ObjectiveKind::VectorDistance => {
            let k = u64::from(spec.k);
            let dist: u64 = coverage
                .capped()
                .iter()
                .map(|&c| {
                    let d = k - u64::from(c);
                    d * d
                })
                .sum();
            dist as f64 + penalty
        }
        ObjectiveKind::BalancingIndex => {
            if coverage.target_count() == 0 {
                return Err(Error::EmptyTargets);
            }
            balancing_term(
                coverage.total() as f64,
                coverage.sum_of_squares() as f64,
                f64::from(spec.k),
                coverage.target_count() as f64,
            ) - penalty
        }
    };
    Ok(ObjectiveValue {
        value,
        sense: spec.sense(),
    })
}

/// True when `a` beats `b` by more than [`TIE_TOLERANCE`].
pub fn is_better(a: &ObjectiveValue, b: &ObjectiveValue) -> Result<bool> {
    if a.sense != b.sense {
        return Err(Error::MixedSenses);
    }
    Ok(beats(a.sense, a.value, b.value))
}

#[inline]
pub(crate) fn beats(sense: Sense, a: f64, b: f64) -> bool {
    match sense {
        Sense::Maximize => a > b + TIE_TOLERANCE,
        Sense::Minimize => a < b - TIE_TOLERANCE,
    }
}

/// `1 / (2n)`: switching every sensor on costs half a unit of coverage, so
/// saving sensors never outweighs covering one more target.
pub fn default_rho(sensor_count: usize) -> Result<f64> {
    if sensor_count == 0 {
        return Err(Error::NoSensors);
    }
    Ok(1.0 / (2.0 * sensor_count as f64))
}
