use thiserror::Error;

use crate::linear_series::{AmplenessClass, FactorizationType};

/// Which degree regime an operation expects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `g + 3 <= d <= 2g`, very ample.
    Low,
    /// `d >= 2g + 1`.
    High,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Regime::Low => f.write_str("low degree (g+3 <= d <= 2g, very ample)"),
            Regime::High => f.write_str("high degree (d >= 2g+1)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 2, got g={0}")]
    GenusTooSmall(i64),

    #[error("normalized degree b={b} outside [0, g+1] for g={g}")]
    NormalizedDegreeOutOfRange { g: i64, b: i64 },

    #[error("scroll invariant e must be nonnegative, got e={0}")]
    NegativeScrollInvariant(i64),

    #[error("divisor class with C0-coefficient a={0} is outside the supported range a >= -1")]
    UnsupportedDivisorClass(i64),

    #[error("twist index j={0} must be nonnegative")]
    NegativeTwistIndex(i64),

    #[error("{ft} is not base point free; the complete series defines no morphism")]
    NotBasePointFree { ft: FactorizationType },

    #[error("{ft} is the trivial bundle, which is not ample")]
    NotAmple { ft: FactorizationType },

    #[error("{ft} is not very ample ({class})")]
    NotVeryAmple {
        ft: FactorizationType,
        class: AmplenessClass,
    },

    #[error("g={g}, d={d} is outside the {expected} regime")]
    WrongRegime { g: i64, d: i64, expected: Regime },

    #[error("inconsistent resolution data: {0}")]
    InconsistentResolution(String),

    #[error("diagram contains entries that are not exact integers")]
    IncompleteDiagram,

    #[error("diagram has r={found}, expected r={expected}")]
    DiagramShape { expected: i64, found: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
