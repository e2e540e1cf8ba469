//! Factorization types `(m, b)` and the classification of complete linear
//! series they determine: Riemann–Roch, base point freeness, very ampleness
//! and the morphism of a base-point-free but not very ample series.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::scroll::{self, h0_p1, h1_p1, CohomologyPair, P1Twist, ScrollModel};

/// A line bundle `A^m ⊗ B` on a hyperelliptic curve of genus `g`, where `A`
/// is the `g¹₂` and `B` is normalized of degree `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorizationType {
    g: i64,
    m: i64,
    b: i64,
}

impl FactorizationType {
    pub fn new(g: i64, m: i64, b: i64) -> Result<Self> {
        if g < 2 {
            return Err(Error::GenusTooSmall(g));
        }
        if !(0..=g + 1).contains(&b) {
            return Err(Error::NormalizedDegreeOutOfRange { g, b });
        }
        Ok(FactorizationType { g, m, b })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `d = 2m + b`.
    pub fn degree(&self) -> i64 {
        2 * self.m + self.b
    }

    /// `r = d - g`, the dimension of the target of a non-special embedding.
    pub fn r(&self) -> i64 {
        self.degree() - self.g
    }

    pub fn scroll(&self) -> ScrollModel {
        scroll::scroll_model(self.g, self.m, self.b).expect("validated on construction")
    }
}

impl fmt::Display for FactorizationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m,b)=({},{}) on g={}", self.m, self.b, self.g)
    }
}

/// The three ways a base-point-free line bundle can fail to be very ample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NonEmbeddingCase {
    /// `A^m` with `1 <= m <= g`.
    Alpha,
    /// `2 <= b <= g` and `m + b = g + 1`.
    Beta,
    /// Normalized of degree `g + 1`.
    Gamma,
}

impl fmt::Display for NonEmbeddingCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NonEmbeddingCase::Alpha => "Alpha",
            NonEmbeddingCase::Beta => "Beta",
            NonEmbeddingCase::Gamma => "Gamma",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AmplenessClass {
    NotBasePointFree,
    /// `O_C`: base point free but not ample; its complete series maps to a point.
    Trivial,
    BasePointFreeOnly(NonEmbeddingCase),
    VeryAmple,
}

impl fmt::Display for AmplenessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmplenessClass::NotBasePointFree => f.write_str("not base point free"),
            AmplenessClass::Trivial => f.write_str("trivial bundle: base point free, not ample"),
            AmplenessClass::BasePointFreeOnly(case) => {
                write!(f, "{case}: base point free, not very ample")
            }
            AmplenessClass::VeryAmple => f.write_str("very ample"),
        }
    }
}

/// The morphism `C -> P^r` defined by a base-point-free complete series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MorphismProfile {
    Embedding,
    /// The double cover followed by the Veronese embedding onto a rational normal curve.
    DoubleCoverOfRNC {
        degree: i64,
    },
    /// Birational onto the image, contracting the `b` points of `B` to one point.
    BirationalCollapsingB {
        points_collapsed: i64,
        target_dim: i64,
    },
    /// A `fold`-sheeted cover of the line.
    MultiCover {
        fold: i64,
    },
}

impl MorphismProfile {
    pub fn birational(&self) -> bool {
        matches!(
            self,
            MorphismProfile::Embedding | MorphismProfile::BirationalCollapsingB { .. }
        )
    }
}

impl fmt::Display for MorphismProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismProfile::Embedding => f.write_str("embedding"),
            MorphismProfile::DoubleCoverOfRNC { degree } => {
                write!(f, "double cover of a rational normal curve of degree {degree}")
            }
            MorphismProfile::BirationalCollapsingB {
                points_collapsed,
                target_dim,
            } => write!(
                f,
                "birational onto its image in P^{target_dim}, collapsing {points_collapsed} points to one"
            ),
            MorphismProfile::MultiCover { fold } => write!(f, "{fold}-fold cover of P^1"),
        }
    }
}

/// `h^i(C, L) = h^i(P¹, O(m)) + h^i(P¹, O(m + b - g - 1))`.
pub fn riemann_roch(ft: &FactorizationType) -> CohomologyPair {
    let first = P1Twist(ft.m);
    let second = P1Twist(ft.m + ft.b - ft.g - 1);
    CohomologyPair {
        h0: h0_p1(first) + h0_p1(second),
        h1: h1_p1(first) + h1_p1(second),
    }
}

pub fn is_nonspecial(ft: &FactorizationType) -> bool {
    ft.m + ft.b >= ft.g
}

pub fn is_base_point_free(ft: &FactorizationType) -> bool {
    let (g, m, b) = (ft.g, ft.m, ft.b);
    (b == 0 && m >= 0) || ((1..=g + 1).contains(&b) && m + b >= g + 1)
}

pub fn is_very_ample(ft: &FactorizationType) -> bool {
    let (g, m, b) = (ft.g, ft.m, ft.b);
    match b {
        0 => m >= g + 1,
        1 => m >= g,
        _ => b <= g + 1 && m + b >= g + 2,
    }
}

/// `h⁰` of a normalized line bundle of degree `b`.
pub fn normalized_h0(g: i64, b: i64) -> Result<BigUint> {
    if !(0..=g + 1).contains(&b) {
        return Err(Error::NormalizedDegreeOutOfRange { g, b });
    }
    Ok(BigUint::from(if b == g + 1 { 2u32 } else { 1u32 }))
}

pub fn ampleness_class(ft: &FactorizationType) -> AmplenessClass {
    if !is_base_point_free(ft) {
        return AmplenessClass::NotBasePointFree;
    }
    if is_very_ample(ft) {
        return AmplenessClass::VeryAmple;
    }
    let (g, m, b) = (ft.g, ft.m, ft.b);
    if (m, b) == (0, 0) {
        return AmplenessClass::Trivial;
    }
    let alpha = b == 0 && (1..=g).contains(&m);
    let beta = (2..=g).contains(&b) && m + b == g + 1;
    let gamma = m == 0 && b == g + 1;
    let case = match (alpha, beta, gamma) {
        (true, false, false) => NonEmbeddingCase::Alpha,
        (false, true, false) => NonEmbeddingCase::Beta,
        (false, false, true) => NonEmbeddingCase::Gamma,
        _ => unreachable!("non-embedding cases must partition the region; got {ft}"),
    };
    AmplenessClass::BasePointFreeOnly(case)
}

pub fn morphism_profile(ft: &FactorizationType) -> Result<MorphismProfile> {
    match ampleness_class(ft) {
        AmplenessClass::NotBasePointFree => Err(Error::NotBasePointFree { ft: *ft }),
        AmplenessClass::Trivial => Err(Error::NotAmple { ft: *ft }),
        AmplenessClass::VeryAmple => Ok(MorphismProfile::Embedding),
        AmplenessClass::BasePointFreeOnly(NonEmbeddingCase::Alpha) => {
            Ok(MorphismProfile::DoubleCoverOfRNC { degree: ft.m })
        }
        AmplenessClass::BasePointFreeOnly(NonEmbeddingCase::Beta) => {
            Ok(MorphismProfile::BirationalCollapsingB {
                points_collapsed: ft.b,
                target_dim: ft.degree() - ft.g,
            })
        }
        AmplenessClass::BasePointFreeOnly(NonEmbeddingCase::Gamma) => {
            Ok(MorphismProfile::MultiCover { fold: ft.g + 1 })
        }
    }
}

/// The canonical bundle `ω = A^{g-1}`.
pub fn canonical_type(g: i64) -> Result<FactorizationType> {
    FactorizationType::new(g, g - 1, 0)
}
