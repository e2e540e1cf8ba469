//! One function per subcommand, each producing its output record.

use hyperell::{
    ampleness_class, betti_high, betti_low, count_distinct_betti, enumerate_types,
    hilbert_numerator_check, invert_from_resolution, is_nonspecial, is_very_ample, low_invariants,
    morphism_profile, n_nu_p_report, np_report_high, oracle_rao, rao_dimension, regularity,
    riemann_roch, secant_obstruction, table_rows, AmplenessClass, Error, FactorizationType,
    MorphismProfile, Result,
};

use std::fmt::Write as _;

use crate::records::*;
use crate::table::render_table;

/// A command's machine-readable record together with its human rendering.
#[derive(Debug, Clone)]
pub struct Report<R> {
    pub record: R,
    pub text: String,
}

fn ensure_very_ample(ft: &FactorizationType) -> Result<()> {
    if is_very_ample(ft) {
        Ok(())
    } else {
        Err(Error::NotVeryAmple {
            ft: *ft,
            class: ampleness_class(ft),
        })
    }
}

fn ampleness_record(class: AmplenessClass) -> AmplenessRecord {
    let (tag, case) = match class {
        AmplenessClass::NotBasePointFree => ("NotBasePointFree", None),
        AmplenessClass::Trivial => ("Trivial", None),
        AmplenessClass::BasePointFreeOnly(case) => ("BasePointFreeOnly", Some(case.to_string())),
        AmplenessClass::VeryAmple => ("VeryAmple", None),
    };
    AmplenessRecord {
        tag: tag.to_string(),
        case,
    }
}

fn morphism_record(profile: MorphismProfile) -> MorphismRecord {
    let mut rec = MorphismRecord {
        tag: String::new(),
        degree: None,
        points_collapsed: None,
        target_dim: None,
        fold: None,
        birational: profile.birational(),
    };
    match profile {
        MorphismProfile::Embedding => rec.tag = "Embedding".into(),
        MorphismProfile::DoubleCoverOfRNC { degree } => {
            rec.tag = "DoubleCoverOfRNC".into();
            rec.degree = Some(degree);
        }
        MorphismProfile::BirationalCollapsingB {
            points_collapsed,
            target_dim,
        } => {
            rec.tag = "BirationalCollapsingB".into();
            rec.points_collapsed = Some(points_collapsed);
            rec.target_dim = Some(target_dim);
        }
        MorphismProfile::MultiCover { fold } => {
            rec.tag = "MultiCover".into();
            rec.fold = Some(fold);
        }
    }
    rec
}

pub fn classify(g: i64, m: i64, b: i64) -> Result<Report<ClassifyRecord>> {
    let ft = FactorizationType::new(g, m, b)?;
    let scroll = ft.scroll();
    let rr = riemann_roch(&ft);
    let class = ampleness_class(&ft);
    let morphism = morphism_profile(&ft).ok();
    let nonspecial = is_nonspecial(&ft);
    let canonical = (m, b) == (g - 1, 0);

    let mut text = String::new();
    writeln!(text, "{ft}, d={}, r={}", ft.degree(), ft.r()).unwrap();
    writeln!(text, "h=({},{})", rr.h0, rr.h1).unwrap();
    writeln!(
        text,
        "{}{}",
        if nonspecial { "nonspecial" } else { "special" },
        if canonical { ", canonical" } else { "" }
    )
    .unwrap();
    writeln!(text, "ampleness: {class}").unwrap();
    match morphism {
        Some(p) => writeln!(text, "morphism: {p}").unwrap(),
        None => writeln!(text, "morphism: none").unwrap(),
    }
    writeln!(
        text,
        "scroll: F_{}, curve {}, hyperplane {}",
        scroll.e, scroll.curve_class, scroll.hyperplane_class
    )
    .unwrap();

    let record = ClassifyRecord {
        command: "classify".into(),
        g,
        m,
        b,
        d: ft.degree(),
        riemann_roch: rr.into(),
        nonspecial,
        canonical,
        ampleness: ampleness_record(class),
        morphism: morphism.map(morphism_record),
        scroll: ScrollRecord {
            e: scroll.e,
            curve_class: scroll.curve_class.into(),
            hyperplane_class: scroll.hyperplane_class.into(),
            g: scroll.g,
            b: scroll.b,
        },
    };
    Ok(Report { record, text })
}

pub fn betti(g: i64, m: i64, b: i64) -> Result<Report<BettiRecord>> {
    let ft = FactorizationType::new(g, m, b)?;
    ensure_very_ample(&ft)?;
    let d = ft.degree();
    let mut text = String::new();
    writeln!(text, "{ft}, d={d}, r={}", ft.r()).unwrap();

    let record = if d > 2 * g {
        let diagram = betti_high(g, d)?;
        let (p, fails) = np_report_high(g, d)?;
        let check = hilbert_numerator_check(&diagram, g, p)?;
        writeln!(text, "regime: high, p={p}").unwrap();
        write!(text, "{diagram}").unwrap();
        writeln!(text, "N_{p} holds, N_{fails} fails").unwrap();
        writeln!(text, "hilbert_numerator_check = {check}").unwrap();
        BettiRecord {
            command: "betti".into(),
            g,
            m,
            b,
            d,
            regime: "high".into(),
            nu: None,
            tau: None,
            p,
            diagram: DiagramRecord::from(&diagram),
            property: NpRecord {
                nu: None,
                p_holds: Some(p),
                p_fails: fails,
            },
            hilbert_numerator_check: Some(check),
        }
    } else {
        let inv = low_invariants(&ft)?;
        let report = n_nu_p_report(&ft)?;
        let diagram = betti_low(&ft)?;
        writeln!(
            text,
            "regime: low, nu={}, tau={}, p={}",
            inv.nu, inv.tau, inv.p
        )
        .unwrap();
        write!(text, "{diagram}").unwrap();
        match report.p_holds {
            Some(p) => writeln!(
                text,
                "N_{{{},{p}}} holds, N_{{{},{}}} fails",
                report.nu, report.nu, report.p_fails
            )
            .unwrap(),
            None => writeln!(text, "N_{{{},{}}} fails", report.nu, report.p_fails).unwrap(),
        }
        BettiRecord {
            command: "betti".into(),
            g,
            m,
            b,
            d,
            regime: "low".into(),
            nu: Some(inv.nu),
            tau: Some(inv.tau),
            p: inv.p,
            diagram: DiagramRecord::from(&diagram),
            property: NpRecord {
                nu: Some(report.nu),
                p_holds: report.p_holds,
                p_fails: report.p_fails,
            },
            hilbert_numerator_check: None,
        }
    };
    Ok(Report { record, text })
}

pub fn rao(g: i64, m: i64, b: i64, j_max: i64) -> Result<Report<RaoRecord>> {
    let ft = FactorizationType::new(g, m, b)?;
    ensure_very_ample(&ft)?;
    let inv = low_invariants(&ft)?;
    let reg = regularity(&ft)?;
    let mut gamma = Vec::new();
    let mut oracle_agrees = true;
    for j in 1..=j_max {
        let v = rao_dimension(&ft, j)?;
        if j >= 2 {
            oracle_agrees &= oracle_rao(&ft, j)? == v;
        }
        gamma.push((j, Count(v)));
    }

    let mut text = String::new();
    writeln!(text, "{ft}, d={}", ft.degree()).unwrap();
    writeln!(
        text,
        "nu={}, tau={}, p={}, reg={reg}",
        inv.nu, inv.tau, inv.p
    )
    .unwrap();
    let values: Vec<String> = gamma.iter().map(|(_, v)| v.0.to_string()).collect();
    writeln!(text, "gamma_1..gamma_{j_max}: {}", values.join(",")).unwrap();
    writeln!(text, "oracle agrees: {oracle_agrees}").unwrap();

    let record = RaoRecord {
        command: "rao".into(),
        g,
        m,
        b,
        d: ft.degree(),
        nu: inv.nu,
        tau: inv.tau,
        p: inv.p,
        regularity: reg,
        gamma,
        oracle_agrees,
    };
    Ok(Report { record, text })
}

pub fn enumerate(g: i64, d: i64) -> Result<Report<EnumerateRecord>> {
    let low = (g + 3..=2 * g).contains(&d);
    let types: Vec<TypeRecord> = enumerate_types(g, d)?
        .iter()
        .map(|ft| {
            let inv = if low { low_invariants(ft).ok() } else { None };
            TypeRecord {
                m: ft.m(),
                b: ft.b(),
                nu: inv.map(|i| i.nu),
                tau: inv.map(|i| i.tau),
                p: inv.map(|i| i.p),
            }
        })
        .collect();
    let count = if low {
        Some(count_distinct_betti(g, d)?)
    } else {
        None
    };

    let mut text = String::new();
    writeln!(text, "g={g}, d={d}: {} very ample type(s)", types.len()).unwrap();
    for t in &types {
        write!(text, "({},{})", t.m, t.b).unwrap();
        if let (Some(nu), Some(tau), Some(p)) = (t.nu, t.tau, t.p) {
            write!(text, " nu={nu} tau={tau} p={p}").unwrap();
        }
        writeln!(text).unwrap();
    }
    if let Some(c) = count {
        writeln!(text, "distinct Betti diagrams: {c}").unwrap();
    }

    let record = EnumerateRecord {
        command: "enumerate".into(),
        g,
        d,
        types,
        count_distinct_betti: count,
    };
    Ok(Report { record, text })
}

pub fn table(g: i64, d_min: i64, d_max: i64, j_max: i64) -> Result<Report<TableRecord>> {
    let rows = table_rows(g, d_min, d_max, j_max)?
        .into_iter()
        .map(|row| TableRowRecord {
            d: row.ft.degree(),
            m: row.ft.m(),
            b: row.ft.b(),
            nu: row.invariants.nu,
            p: row.invariants.p,
            tau: row.invariants.tau,
            gamma: row.gamma.into_iter().map(Count).collect(),
        })
        .collect();
    let record = TableRecord {
        command: "table".into(),
        g,
        d_min,
        d_max,
        j_max,
        rows,
    };
    let text = render_table(&record);
    Ok(Report { record, text })
}

pub fn invert(g: i64, d: i64, nu: i64, p: i64) -> Result<Report<InvertRecord>> {
    let ft = invert_from_resolution(g, d, nu, p)?;
    let text = format!(
        "g={g}, d={d}, nu={nu}, p={p} -> (m,b)=({},{})\n",
        ft.m(),
        ft.b()
    );
    let record = InvertRecord {
        command: "invert".into(),
        g,
        d,
        nu,
        p,
        m: ft.m(),
        b: ft.b(),
    };
    Ok(Report { record, text })
}

pub fn obstruction(g: i64, m: i64, b: i64) -> Result<Report<ObstructionRecord>> {
    let ft = FactorizationType::new(g, m, b)?;
    let o = secant_obstruction(&ft)?;
    let p = ft.degree() - 2 * g - 1;
    let certificate = o.certificate();

    let mut text = String::new();
    writeln!(text, "{ft}, d={}, p={p}", ft.degree()).unwrap();
    writeln!(text, "{}: {o}", o.kind).unwrap();
    if let Some(len) = o.gamma_length {
        writeln!(text, "gamma length: {len}").unwrap();
    }
    if let Some(c) = &certificate {
        writeln!(text, "certificate: {c}").unwrap();
    }
    writeln!(text, "{}", o.note).unwrap();

    let record = ObstructionRecord {
        command: "obstruction".into(),
        g,
        m,
        b,
        d: ft.degree(),
        p,
        kind: o.kind.to_string(),
        secancy: o.secancy,
        plane_dim: o.plane_dim,
        gamma_length: o.gamma_length,
        certificate: certificate.map(Count),
        note: o.note,
    };
    Ok(Report { record, text })
}
