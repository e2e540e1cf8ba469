//! Line bundle cohomology on the projective line and on Hirzebruch surfaces,
//! and the scroll model `F_e` that carries a hyperelliptic curve.
//!
//! On `F_e = P(O ⊕ O(-e))` with minimal section `C₀` and fiber `f`, a class
//! `a C₀ + c f` with `a >= 0` pushes forward to `⊕_{k=0}^{a} O_{P¹}(c - k e)`
//! with no higher direct image, so its `h⁰` and `h¹` are sums of `P¹` terms.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// The line bundle `O(n)` on the projective line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct P1Twist(pub i64);

impl P1Twist {
    pub fn h0(self) -> BigUint {
        h0_p1(self)
    }

    pub fn h1(self) -> BigUint {
        h1_p1(self)
    }
}

impl From<i64> for P1Twist {
    fn from(n: i64) -> Self {
        P1Twist(n)
    }
}

/// `h⁰(P¹, O(n)) = max(n + 1, 0)`.
pub fn h0_p1(t: P1Twist) -> BigUint {
    // n + 1 overflows only at i64::MAX; widen first
    let v = i128::from(t.0) + 1;
    if v > 0 {
        BigUint::from(v as u128)
    } else {
        BigUint::zero()
    }
}

/// `h¹(P¹, O(n)) = max(-n - 1, 0)`.
pub fn h1_p1(t: P1Twist) -> BigUint {
    let v = -i128::from(t.0) - 1;
    if v > 0 {
        BigUint::from(v as u128)
    } else {
        BigUint::zero()
    }
}

/// The class `a C₀ + c f` on a Hirzebruch surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub a: i64,
    pub c: i64,
}

impl DivisorClass {
    pub const fn new(a: i64, c: i64) -> Self {
        DivisorClass { a, c }
    }

    /// Intersection number on `F_e` with `C₀² = -e`, `C₀·f = 1`, `f² = 0`.
    pub fn intersect(&self, other: &DivisorClass, e: i64) -> i64 {
        -e * self.a * other.a + self.a * other.c + self.c * other.a
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.c < 0 { '-' } else { '+' };
        write!(f, "{}C0 {sign} {}f", self.a, self.c.unsigned_abs())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyPair {
    pub h0: BigUint,
    pub h1: BigUint,
}

impl CohomologyPair {
    pub fn new(h0: impl Into<BigUint>, h1: impl Into<BigUint>) -> Self {
        CohomologyPair {
            h0: h0.into(),
            h1: h1.into(),
        }
    }
}

/// The rational normal scroll containing the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScrollModel {
    pub e: i64,
    pub curve_class: DivisorClass,
    pub hyperplane_class: DivisorClass,
    pub g: i64,
    pub b: i64,
}

impl ScrollModel {
    /// `hyperplane · curve`, which is the degree `2m + b` of the line bundle.
    pub fn embedded_degree(&self) -> i64 {
        self.hyperplane_class.intersect(&self.curve_class, self.e)
    }
}

/// Scroll model for a line bundle of factorization type `(m, b)` on a curve of genus `g`:
/// `e = g + 1 - b`, `C ~ 2C₀ + (2g + 2 - b)f`, hyperplane `C₀ + m f`.
pub fn scroll_model(g: i64, m: i64, b: i64) -> Result<ScrollModel> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    if !(0..=g + 1).contains(&b) {
        return Err(Error::NormalizedDegreeOutOfRange { g, b });
    }
    Ok(ScrollModel {
        e: g + 1 - b,
        curve_class: DivisorClass::new(2, 2 * g + 2 - b),
        hyperplane_class: DivisorClass::new(1, m),
        g,
        b,
    })
}

/// `(h⁰, h¹)` of `O(a C₀ + c f)` on `F_e`, for `a >= -1`.
pub fn cohomology_scroll(e: i64, class: DivisorClass) -> Result<CohomologyPair> {
    if e < 0 {
        return Err(Error::NegativeScrollInvariant(e));
    }
    match class.a {
        a if a <= -2 => Err(Error::UnsupportedDivisorClass(a)),
        -1 => Ok(CohomologyPair::new(0u32, 0u32)),
        a => {
            let mut h0 = BigUint::zero();
            let mut h1 = BigUint::zero();
            for k in 0..=a {
                let t = P1Twist(class.c - k * e);
                h0 += h0_p1(t);
                h1 += h1_p1(t);
            }
            Ok(CohomologyPair { h0, h1 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn pair(h0: u32, h1: u32) -> CohomologyPair {
        CohomologyPair::new(h0, h1)
    }

    #[test]
    fn p1_values() {
        assert_eq!(h0_p1(P1Twist(3)), BigUint::from(4u32));
        assert_eq!(h0_p1(P1Twist(0)), BigUint::from(1u32));
        assert_eq!(h0_p1(P1Twist(-2)), BigUint::zero());
        assert_eq!(h1_p1(P1Twist(-2)), BigUint::from(1u32));
        assert_eq!(h1_p1(P1Twist(0)), BigUint::zero());
        for g in 2..30 {
            assert_eq!(h1_p1(P1Twist(-g - 1)), BigUint::from(g as u64));
        }
    }

    #[test]
    fn p1_extremes_do_not_overflow() {
        assert_eq!(
            h0_p1(P1Twist(i64::MAX)),
            BigUint::from(i64::MAX as u64) + 1u32
        );
        assert_eq!(h1_p1(P1Twist(i64::MIN)), BigUint::from(i64::MAX as u64));
    }

    #[test]
    fn scroll_model_examples() {
        let s = scroll_model(10, 3, 9).unwrap();
        assert_eq!(s.e, 2);
        assert_eq!(s.curve_class, DivisorClass::new(2, 13));
        assert_eq!(s.hyperplane_class, DivisorClass::new(1, 3));

        let s = scroll_model(2, 3, 1).unwrap();
        assert_eq!(
            (s.e, s.curve_class, s.hyperplane_class),
            (2, DivisorClass::new(2, 5), DivisorClass::new(1, 3))
        );

        let s = scroll_model(10, 0, 11).unwrap();
        assert_eq!(
            (s.e, s.curve_class, s.hyperplane_class),
            (0, DivisorClass::new(2, 11), DivisorClass::new(1, 0))
        );
    }

    #[test]
    fn scroll_model_rejects() {
        assert_eq!(scroll_model(1, 0, 0), Err(Error::GenusTooSmall(1)));
        assert_eq!(
            scroll_model(5, 0, 7),
            Err(Error::NormalizedDegreeOutOfRange { g: 5, b: 7 })
        );
        assert_eq!(
            scroll_model(5, 0, -1),
            Err(Error::NormalizedDegreeOutOfRange { g: 5, b: -1 })
        );
    }

    #[test]
    fn scroll_cohomology_examples() {
        assert_eq!(
            cohomology_scroll(2, DivisorClass::new(1, 3)).unwrap(),
            pair(6, 0)
        );
        assert_eq!(
            cohomology_scroll(5, DivisorClass::new(0, 0)).unwrap(),
            pair(1, 0)
        );
        assert_eq!(
            cohomology_scroll(3, DivisorClass::new(-1, 7)).unwrap(),
            pair(0, 0)
        );
        assert_eq!(
            cohomology_scroll(1, DivisorClass::new(0, -2)).unwrap(),
            pair(0, 1)
        );
    }

    #[test]
    fn scroll_cohomology_rejects() {
        assert_eq!(
            cohomology_scroll(1, DivisorClass::new(-2, 0)),
            Err(Error::UnsupportedDivisorClass(-2))
        );
        assert_eq!(
            cohomology_scroll(-1, DivisorClass::new(0, 0)),
            Err(Error::NegativeScrollInvariant(-1))
        );
    }

    proptest! {
        #[test]
        fn p1_euler_characteristic(n in -10_000i64..10_000) {
            let chi = BigInt::from(h0_p1(P1Twist(n))) - BigInt::from(h1_p1(P1Twist(n)));
            prop_assert_eq!(chi, BigInt::from(n + 1));
        }

        #[test]
        fn a_equal_one_splits(e in 0i64..40, c in -80i64..80) {
            let got = cohomology_scroll(e, DivisorClass::new(1, c)).unwrap();
            prop_assert_eq!(got.h0, h0_p1(P1Twist(c)) + h0_p1(P1Twist(c - e)));
            prop_assert_eq!(got.h1, h1_p1(P1Twist(c)) + h1_p1(P1Twist(c - e)));
        }

        #[test]
        fn scroll_degree_and_e(
            (g, b) in (2i64..60).prop_flat_map(|g| (Just(g), 0..=g + 1)),
            m in -10i64..130,
        ) {
            let s = scroll_model(g, m, b).unwrap();
            prop_assert_eq!(s.e + s.b, g + 1);
            prop_assert_eq!(s.embedded_degree(), 2 * m + b);
        }
    }
}
