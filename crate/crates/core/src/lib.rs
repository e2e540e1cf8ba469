//! Exact invariants of complete linear series on hyperelliptic curves.
//!
//! A line bundle `L` on a hyperelliptic curve of genus `g` factors uniquely as
//! `A^m ⊗ B`, with `A` the `g¹₂` and `B` normalized of degree `b`. Everything
//! here is a closed-form function of `(g, m, b)`: Riemann–Roch, ampleness,
//! the scroll model, graded Betti diagrams, Hartshorne–Rao dimensions and
//! regularity. All counts are arbitrary-precision integers.

// Bounds are written as they appear in the formulas (`i >= p + 1`).
#![allow(clippy::int_plus_one)]

pub mod betti;
pub mod binomial;
pub mod error;
pub mod high;
pub mod linear_series;
pub mod low;
pub mod poly;
pub mod scroll;

pub use betti::{BettiDiagram, BettiEntry};
pub use binomial::binomial;
pub use error::{Error, Regime, Result};
pub use high::{
    betti_high, hilbert_numerator, hilbert_numerator_check, np_report_high, rnc_obstruction_h1,
    secant_obstruction, ObstructionKind, SecantObstruction,
};
pub use linear_series::{
    ampleness_class, canonical_type, is_base_point_free, is_nonspecial, is_very_ample,
    morphism_profile, normalized_h0, riemann_roch, AmplenessClass, FactorizationType,
    MorphismProfile, NonEmbeddingCase,
};
pub use low::{
    betti_low, count_distinct_betti, enumerate_types, invert_from_resolution, low_invariants,
    n_nu_p_report, oracle_rao, rao_dimension, rao_profile, regularity, table_rows,
    LowDegreeInvariants, NuPReport, RaoProfile, TableRow,
};
pub use poly::IntPoly;
pub use scroll::{
    cohomology_scroll, h0_p1, h1_p1, scroll_model, CohomologyPair, DivisorClass, P1Twist,
    ScrollModel,
};
