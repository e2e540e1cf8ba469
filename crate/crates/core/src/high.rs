//! Curves of degree `d = 2g + 1 + p >= 2g + 1`: the full Betti diagram,
//! property `N_p`, and the secant-plane obstructions to `N_{p+1}`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::betti::{BettiDiagram, BettiEntry};
use crate::binomial::binomial;
use crate::error::{Error, Regime, Result};
use crate::linear_series::{ampleness_class, is_very_ample, FactorizationType};
use crate::poly::IntPoly;
use crate::scroll::{h1_p1, P1Twist};

fn check_high(g: i64, d: i64) -> Result<i64> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    if d < 2 * g + 1 {
        return Err(Error::WrongRegime {
            g,
            d,
            expected: Regime::High,
        });
    }
    Ok(d - 2 * g - 1)
}

/// Betti diagram of a curve of genus `g` embedded in degree `d >= 2g + 1`.
///
/// The curve is 3-regular, so only rows 1 and 2 are populated, and the
/// resolution stops at `F_{r-1}`.
pub fn betti_high(g: i64, d: i64) -> Result<BettiDiagram> {
    let p = check_high(g, d)?;
    let r = d - g;
    let c = |n: i64, k: i64| BigInt::from(binomial(n, k));

    let row2: Vec<BigInt> = (0..=r)
        .map(|i| {
            if i >= p + 1 && i <= r - 1 {
                BigInt::from(i - p) * c(r - 1, i)
            } else {
                BigInt::zero()
            }
        })
        .collect();

    // quadrics through a 2-normal curve: h⁰(O(2)) - h⁰(O_C(2)) = C(r-1, 2) + p
    let quadrics = binomial(r + 2, 2) - BigUint::from((2 * d - g + 1) as u64);
    debug_assert_eq!(quadrics, binomial(r - 1, 2) + BigUint::from(p as u64));

    let mut diagram = BettiDiagram::new(r);
    diagram.set(1, 1, BettiEntry::Known(quadrics));
    for i in 1..=r - 2 {
        let next = &row2[i as usize] - BigInt::from(g) * c(r - 1, i)
            + BigInt::from(r - 1) * c(r - 1, i + 1)
            - c(r - 1, i + 2);
        let next = next
            .to_biguint()
            .expect("linear strand Betti numbers are nonnegative");
        diagram.set(i + 1, 1, BettiEntry::Known(next));
    }
    for (i, v) in row2.iter().enumerate().skip(1) {
        let v = v.to_biguint().expect("quadratic strand is nonnegative");
        diagram.set(i as i64, 2, BettiEntry::Known(v));
    }
    Ok(diagram)
}

/// Numerator of the Hilbert series of `R/I` over `(1-λ)^{r+1}`:
/// `1 + Σ (-1)^i β_{i,j} λ^{i+j}`.
pub fn hilbert_numerator(diagram: &BettiDiagram) -> Result<IntPoly> {
    let mut num = IntPoly::one();
    for (i, j, entry) in diagram.iter() {
        let n = entry.as_known().ok_or(Error::IncompleteDiagram)?;
        let mut c = BigInt::from(n.clone());
        if i % 2 == 1 {
            c = -c;
        }
        num.add_term((i + j) as usize, &c);
    }
    Ok(num)
}

/// Whether the diagram's Hilbert numerator equals
/// `(gλ² + (g+p)λ + 1)(1-λ)^{r-1}` with `r = g + p + 1`.
pub fn hilbert_numerator_check(diagram: &BettiDiagram, g: i64, p: i64) -> Result<bool> {
    if !diagram.is_fully_known() {
        return Err(Error::IncompleteDiagram);
    }
    let r = g + p + 1;
    if diagram.r() != r {
        return Err(Error::DiagramShape {
            expected: r,
            found: diagram.r(),
        });
    }
    let h_vector =
        IntPoly::from_coeffs(vec![BigInt::from(1), BigInt::from(g + p), BigInt::from(g)]);
    let expected = &h_vector * &IntPoly::one_minus_lambda_pow((r - 1) as u32);
    Ok(hilbert_numerator(diagram)? == expected)
}

/// `(p, p + 1)`: property `N_p` holds and `N_{p+1}` fails.
pub fn np_report_high(g: i64, d: i64) -> Result<(i64, i64)> {
    let p = check_high(g, d)?;
    Ok((p, p + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    /// A divisor in `|L ⊗ ω⁻¹|` spans a `(p+3)`-secant `(p+1)`-plane.
    SecantPlaneFromDual,
    /// `Γ = C ∩ C₀` lies on the rational normal curve `C₀` and spans its plane.
    GammaOnMinimalSection,
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObstructionKind::SecantPlaneFromDual => "SecantPlaneFromDual",
            ObstructionKind::GammaOnMinimalSection => "GammaOnMinimalSection",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SecantObstruction {
    pub kind: ObstructionKind,
    pub secancy: i64,
    pub plane_dim: i64,
    pub gamma_length: Option<i64>,
    pub note: String,
}

impl SecantObstruction {
    /// For `Γ` of length `ℓ = 2n + t` on a rational normal curve of degree `n`,
    /// the count `C(n, 2-t) · h¹(O(-2))` showing `β_{p+1,1} != 0`; `None` for
    /// the dual-divisor case, which needs no count.
    pub fn certificate(&self) -> Option<BigUint> {
        let ell = self.gamma_length?;
        let n = self.plane_dim;
        let i = 2 - (ell - 2 * n);
        Some(rnc_obstruction_h1(n, ell, i, 2).expect("certificate parameters are in range"))
    }
}

impl fmt::Display for SecantObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-secant {}-plane", self.secancy, self.plane_dim)?;
        if self.secancy == 3 && self.plane_dim == 1 {
            f.write_str(" (trisecant line)")?;
        }
        Ok(())
    }
}

pub fn secant_obstruction(ft: &FactorizationType) -> Result<SecantObstruction> {
    let (g, m) = (ft.g(), ft.m());
    if !is_very_ample(ft) {
        return Err(Error::NotVeryAmple {
            ft: *ft,
            class: ampleness_class(ft),
        });
    }
    let p = check_high(g, ft.degree())?;
    if m >= g - 1 {
        Ok(SecantObstruction {
            kind: ObstructionKind::SecantPlaneFromDual,
            secancy: p + 3,
            plane_dim: p + 1,
            gamma_length: None,
            note: format!(
                "L ⊗ ω⁻¹ = A^{} ⊗ B has sections; any divisor in it spans a {}-secant {}-plane, so N_{} fails",
                m - g + 1,
                p + 3,
                p + 1,
                p + 1
            ),
        })
    } else {
        let plane_dim = p + g - m;
        let secancy = plane_dim + (g + 1 - m);
        debug_assert_eq!(secancy, ft.b());
        Ok(SecantObstruction {
            kind: ObstructionKind::GammaOnMinimalSection,
            secancy,
            plane_dim,
            gamma_length: Some(ft.b()),
            note: format!(
                "Γ = C ∩ C0 has length {} on a rational normal curve of degree {plane_dim}; it obstructs N_{}",
                ft.b(),
                p + 1
            ),
        })
    }
}

/// `C(n, i) · h¹(P¹, O(-i + n j - ℓ))` for a length-`ℓ` subscheme of a
/// rational normal curve of degree `n`.
pub fn rnc_obstruction_h1(n: i64, ell: i64, i: i64, j: i64) -> Result<BigUint> {
    if n < 1 || j < 2 || !(0..=n).contains(&i) || ell < 0 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 1, j >= 2, 0 <= i <= n, ell >= 0; got n={n}, ell={ell}, i={i}, j={j}"
        )));
    }
    Ok(binomial(n, i) * h1_p1(P1Twist(-i + n * j - ell)))
}
