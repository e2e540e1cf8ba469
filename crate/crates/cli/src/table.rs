//! Plain-text rendering of the low-degree summary table.

use crate::records::TableRecord;

/// Renders one row per factorization type, grouped by degree with a rule
/// between groups; the degree is printed only on the first row of its group.
pub fn render_table(table: &TableRecord) -> String {
    let mut header: Vec<String> = ["d", "(m,b)", "nu", "p", "tau"].map(String::from).to_vec();
    header.extend((2..=table.j_max).map(|j| format!("g{j}")));

    let mut body: Vec<(i64, Vec<String>)> = Vec::new();
    let mut last_d = None;
    for row in &table.rows {
        let d = if last_d == Some(row.d) {
            String::new()
        } else {
            row.d.to_string()
        };
        last_d = Some(row.d);
        let mut cells = vec![
            d,
            format!("({},{})", row.m, row.b),
            row.nu.to_string(),
            row.p.to_string(),
            row.tau.to_string(),
        ];
        cells.extend(row.gamma.iter().map(|c| c.0.to_string()));
        body.push((row.d, cells));
    }

    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for (_, cells) in &body {
        for (w, c) in widths.iter_mut().zip(cells) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        padded.join(" | ") + "\n"
    };
    let rule = widths
        .iter()
        .map(|&w| "-".repeat(w))
        .collect::<Vec<_>>()
        .join("-+-")
        + "\n";

    let mut out = line(&header);
    let mut prev = None;
    for (d, cells) in &body {
        if prev != Some(*d) {
            out.push_str(&rule);
            prev = Some(*d);
        }
        out.push_str(&line(cells));
    }
    out
}
