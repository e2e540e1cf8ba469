//! Very ample line bundles of degree `g + 3 <= d <= 2g`.
//!
//! Here the factorization type pins down the Hartshorne–Rao module, the
//! regularity and the shape of the resolution. Entries of the Betti diagram
//! without a closed form are reported as [`BettiEntry::Unknown`].

use num_bigint::BigUint;
use num_integer::Integer;

use crate::betti::{BettiDiagram, BettiEntry};
use crate::binomial::binomial;
use crate::error::{Error, Regime, Result};
use crate::linear_series::{ampleness_class, is_very_ample, FactorizationType};
use crate::scroll::{cohomology_scroll, h0_p1, DivisorClass, P1Twist};

/// The integers `(ν, τ, p)` attached to a low-degree embedding.
///
/// `ν = ⌈(b-1)/(m+b-g-1)⌉`, `τ = ⌊(2g+1-b)/m⌋`, `p = (m+b-g-1)ν - b + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LowDegreeInvariants {
    pub nu: i64,
    pub tau: i64,
    pub p: i64,
}

impl LowDegreeInvariants {
    /// Evaluates the three formulas without checking the degree regime.
    /// Returns `None` when a denominator is not positive.
    pub fn evaluate(ft: &FactorizationType) -> Option<Self> {
        let (g, m, b) = (ft.g(), ft.m(), ft.b());
        let slope = m + b - g - 1;
        if slope < 1 || m < 1 {
            return None;
        }
        let nu = Integer::div_ceil(&(b - 1), &slope);
        let tau = Integer::div_floor(&(2 * g + 1 - b), &m);
        let p = slope * nu - b + 1;
        Some(LowDegreeInvariants { nu, tau, p })
    }
}

fn check_low(ft: &FactorizationType) -> Result<()> {
    let (g, d) = (ft.g(), ft.degree());
    if d > 2 * g {
        return Err(Error::WrongRegime {
            g,
            d,
            expected: Regime::Low,
        });
    }
    if !is_very_ample(ft) {
        return Err(Error::NotVeryAmple {
            ft: *ft,
            class: ampleness_class(ft),
        });
    }
    Ok(())
}

pub fn low_invariants(ft: &FactorizationType) -> Result<LowDegreeInvariants> {
    check_low(ft)?;
    let inv = LowDegreeInvariants::evaluate(ft)
        .expect("very ample of low degree has m >= 1, m+b-g-1 >= 1");
    debug_assert!(inv.nu >= 3 && inv.tau >= 2 && inv.p >= 0);
    Ok(inv)
}

/// `γ_j = h¹(P^r, I_C(j))`, zero for `j <= 1` and otherwise
/// `Σ_{k=0}^{j-2} h⁰(P¹, O(k(g+1-b) + 2g - b - jm))`.
pub fn rao_dimension(ft: &FactorizationType, j: i64) -> Result<BigUint> {
    check_low(ft)?;
    if j < 0 {
        return Err(Error::NegativeTwistIndex(j));
    }
    let (g, m, b) = (ft.g(), ft.m(), ft.b());
    Ok((0..=j - 2)
        .map(|k| h0_p1(P1Twist(k * (g + 1 - b) + 2 * g - b - j * m)))
        .sum())
}

/// `γ_j` computed on the scroll instead: `h¹(F_e, O((j-2)C₀ + (jm+b-2g-2)f))`.
pub fn oracle_rao(ft: &FactorizationType, j: i64) -> Result<BigUint> {
    check_low(ft)?;
    if j < 2 {
        return Err(Error::InvalidArgument(format!(
            "the scroll computation needs j >= 2, got {j}"
        )));
    }
    let (g, m, b) = (ft.g(), ft.m(), ft.b());
    let class = DivisorClass::new(j - 2, j * m + b - 2 * g - 2);
    Ok(cohomology_scroll(g + 1 - b, class)?.h1)
}

/// `γ_1, ..., γ_{j_max}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaoProfile {
    pub gamma: Vec<(i64, BigUint)>,
}

pub fn rao_profile(ft: &FactorizationType, j_max: i64) -> Result<RaoProfile> {
    let gamma = (1..=j_max)
        .map(|j| rao_dimension(ft, j).map(|v| (j, v)))
        .collect::<Result<_>>()?;
    Ok(RaoProfile { gamma })
}

/// Castelnuovo–Mumford regularity `ν + 1`.
pub fn regularity(ft: &FactorizationType) -> Result<i64> {
    Ok(low_invariants(ft)?.nu + 1)
}

pub fn betti_low(ft: &FactorizationType) -> Result<BettiDiagram> {
    let LowDegreeInvariants { nu, tau, p } = low_invariants(ft)?;
    let r = ft.r();
    let mut diagram = BettiDiagram::new(r);

    // linear strand agrees with the scroll's
    for i in 1..=r {
        diagram.set(
            i,
            1,
            BettiEntry::Known(BigUint::from(i as u64) * binomial(r, i + 1)),
        );
    }
    // rows 2..τ-1 vanish; rows τ..ν-1 are undetermined
    for j in tau.max(2)..nu {
        for i in 1..=r {
            diagram.set(i, j, BettiEntry::Unknown);
        }
    }
    for i in 1..=r {
        let entry = if i == r {
            BettiEntry::Known(BigUint::from((2 * ft.g() + 1 - ft.degree()) as u64))
        } else if i <= p {
            BettiEntry::known(0u32)
        } else if i == p + 1 {
            BettiEntry::Positive
        } else {
            BettiEntry::Unknown
        };
        diagram.set(i, nu, entry);
    }
    Ok(diagram)
}

/// `N_{ν,p}` holds and `N_{ν,p+1}` fails; `p_holds` is `None` when `p = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NuPReport {
    pub nu: i64,
    pub p_holds: Option<i64>,
    pub p_fails: i64,
}

pub fn n_nu_p_report(ft: &FactorizationType) -> Result<NuPReport> {
    let LowDegreeInvariants { nu, p, .. } = low_invariants(ft)?;
    Ok(NuPReport {
        nu,
        p_holds: (p > 0).then_some(p),
        p_fails: p + 1,
    })
}

/// Recovers `(m, b)` from `(g, d, ν, p)`:
/// `m = d-g-1 - (2g+1+p-d)/(ν-2)`, `b = 2g+2-d + 2(2g+1+p-d)/(ν-2)`.
pub fn invert_from_resolution(g: i64, d: i64, nu: i64, p: i64) -> Result<FactorizationType> {
    let bad = |why: String| Error::InconsistentResolution(why);
    if nu < 3 {
        return Err(bad(format!("ν={nu} must be at least 3")));
    }
    let excess = 2 * g + 1 + p - d;
    let (q, rem) = excess.div_rem(&(nu - 2));
    if rem != 0 {
        return Err(bad(format!(
            "(2g+1+p-d)={excess} is not divisible by ν-2={}",
            nu - 2
        )));
    }
    let m = d - g - 1 - q;
    let b = 2 * g + 2 - d + 2 * q;
    let ft = FactorizationType::new(g, m, b).map_err(|e| bad(e.to_string()))?;
    let forward = low_invariants(&ft).map_err(|e| bad(e.to_string()))?;
    if (forward.nu, forward.p) != (nu, p) {
        return Err(bad(format!(
            "(m,b)=({m},{b}) gives ν={}, p={}",
            forward.nu, forward.p
        )));
    }
    Ok(ft)
}

/// Very ample factorization types of degree `d`, by decreasing `m`.
pub fn enumerate_types(g: i64, d: i64) -> Result<Vec<FactorizationType>> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    let mut out = Vec::new();
    for b in 0..=g + 1 {
        if (d - b).is_odd() {
            continue;
        }
        let ft = FactorizationType::new(g, (d - b) / 2, b)?;
        if is_very_ample(&ft) {
            out.push(ft);
        }
    }
    Ok(out)
}

/// Number of distinct Betti diagrams (equivalently, factorization types) in degree `g+3 <= d <= 2g`.
pub fn count_distinct_betti(g: i64, d: i64) -> Result<i64> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    if !(g + 3..=2 * g).contains(&d) {
        return Err(Error::WrongRegime {
            g,
            d,
            expected: Regime::Low,
        });
    }
    let (k, odd) = d.div_rem(&2);
    Ok(if odd == 0 {
        k - Integer::div_ceil(&(g + 1), &2)
    } else {
        k - Integer::div_ceil(&g, &2)
    })
}

/// One line of the low-degree summary table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub ft: FactorizationType,
    pub invariants: LowDegreeInvariants,
    /// `γ_2, ..., γ_{j_max}`.
    pub gamma: Vec<BigUint>,
}

pub fn table_rows(g: i64, d_min: i64, d_max: i64, j_max: i64) -> Result<Vec<TableRow>> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    if !(g + 3 <= d_min && d_min <= d_max && d_max <= 2 * g) {
        return Err(Error::InvalidArgument(format!(
            "need g+3 <= d_min <= d_max <= 2g, got g={g}, d_min={d_min}, d_max={d_max}"
        )));
    }
    if j_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "j_max={j_max} must be at least 2"
        )));
    }
    let mut rows = Vec::new();
    for d in d_min..=d_max {
        for ft in enumerate_types(g, d)? {
            let invariants = low_invariants(&ft)?;
            let gamma = (2..=j_max)
                .map(|j| rao_dimension(&ft, j))
                .collect::<Result<_>>()?;
            rows.push(TableRow {
                ft,
                invariants,
                gamma,
            });
        }
    }
    Ok(rows)
}
