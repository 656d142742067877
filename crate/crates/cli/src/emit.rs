//! Table and report emitters: Markdown, CSV and JSON.

use graded_lie_core::enumerate::{BiorbitalRow, BiorbitalTable};
use graded_lie_core::kac;
use graded_lie_core::quiver::MultiSegment;
use graded_lie_core::rootsys::AffineDiagram;
use graded_lie_core::ClassificationReport;
use std::fmt::Write as _;

/// Formats a doubled index as an integer or a half (`3` or `7/2`).
pub fn fmt_half(x: i64) -> String {
    if x % 2 == 0 {
        format!("{}", x / 2)
    } else {
        format!("{x}/2")
    }
}

/// Formats a multi-segment as a sum of intervals, e.g. `[0,2] + [1,1]^2`.
pub fn fmt_multisegment(s: &MultiSegment) -> String {
    if s.entries.is_empty() {
        return "0".to_string();
    }
    s.entries
        .iter()
        .map(|&(a, b, c)| {
            let base = format!("[{},{}]", fmt_half(a), fmt_half(b));
            if c > 1 {
                format!("{base}^{c}")
            } else {
                base
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Formats an integer vector as `(a,b,c)`.
pub fn fmt_vec(v: &[i64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn fmt_orbit(orbit: &[Option<i64>]) -> String {
    format!(
        "({})",
        orbit
            .iter()
            .map(|v| match v {
                Some(x) => x.to_string(),
                None => "-".to_string(),
            })
            .collect::<Vec<_>>()
            .join(",")
    )
}

/// Label vector of a row's arithmetic family, with `k` at the deleted node.
fn fmt_family_coords(row: &BiorbitalRow) -> String {
    format!(
        "({})",
        row.orbit
            .iter()
            .enumerate()
            .map(|(i, v)| if i == row.beta {
                "k".to_string()
            } else {
                v.unwrap_or(0).to_string()
            })
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn fmt_chi(row: &BiorbitalRow) -> &'static str {
    match row.chi_trivial {
        Some(true) => "1",
        Some(false) => "!=1",
        None => "-",
    }
}

fn fmt_mspec(table: &BiorbitalTable, row: &BiorbitalRow) -> String {
    let mut parts: Vec<String> = Vec::new();
    for sp in &row.sporadic {
        parts.push(format!("m={}", sp.m));
    }
    let t = table.twist;
    let fam = if t == 1 {
        format!("m={}+{}k (k>=2)", row.family.base, row.family.step)
    } else {
        format!("m={}*({}+{}k) (k>=2)", t, row.family.base, row.family.step)
    };
    parts.push(fam);
    parts.join("; ")
}

fn fmt_kac_col(row: &BiorbitalRow) -> String {
    let mut parts: Vec<String> = Vec::new();
    for sp in &row.sporadic {
        parts.push(format!("m={}: {}", sp.m, fmt_vec(&sp.coords)));
    }
    parts.push(fmt_family_coords(row));
    parts.join("; ")
}

/// Renders one bi-orbital table as Markdown.
pub fn table_md(table: &BiorbitalTable) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# Bi-orbital supercuspidal data: {} (twist {})",
        table.diagram, table.twist
    );
    out.push('\n');
    out.push_str("| beta | L | O_L | # | chi | m | Kac |\n");
    out.push_str("|------|---|-----|---|-----|---|-----|\n");
    for row in &table.rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            row.beta,
            row.levi_name,
            fmt_orbit(&row.orbit),
            row.count,
            fmt_chi(row),
            fmt_mspec(table, row),
            fmt_kac_col(row),
        );
    }
    if !table.warnings.is_empty() {
        out.push('\n');
        for w in &table.warnings {
            let _ = writeln!(out, "> warning: {w}");
        }
    }
    out
}

/// Renders one bi-orbital table as flat CSV.
pub fn table_csv(table: &BiorbitalTable) -> String {
    let mut out = String::new();
    out.push_str("diagram,twist,beta,levi,orbit,count,chi,family_base,family_step,sporadic\n");
    for row in &table.rows {
        let sporadic = row
            .sporadic
            .iter()
            .map(|sp| format!("m={}:{}", sp.m, fmt_vec(&sp.coords)))
            .collect::<Vec<_>>()
            .join(";");
        let _ = writeln!(
            out,
            "{},{},{},\"{}\",\"{}\",{},{},{},{},\"{}\"",
            table.diagram,
            table.twist,
            row.beta,
            row.levi_name,
            fmt_orbit(&row.orbit),
            row.count,
            fmt_chi(row),
            row.family.base,
            row.family.step,
            sporadic,
        );
    }
    out
}

/// Renders one bi-orbital table as pretty JSON (newline-terminated).
pub fn table_json(table: &BiorbitalTable) -> String {
    let mut s = serde_json::to_string_pretty(table).expect("table serialization");
    s.push('\n');
    s
}

/// Appends the explicit small-`k` members of each arithmetic family.
pub fn expansion_md(diag: &AffineDiagram, table: &BiorbitalTable, kmax: i64) -> String {
    let mut out = String::new();
    if kmax < 2 {
        return out;
    }
    let _ = writeln!(out, "\n## Family members up to k = {kmax}\n");
    out.push_str("| beta | k | m | Kac (normalized) | dims ok |\n");
    out.push_str("|------|---|---|------------------|---------|\n");
    for row in &table.rows {
        for k in 2..=kmax {
            let mut raw: Vec<i64> = row.orbit.iter().map(|v| v.unwrap_or(0)).collect();
            raw[row.beta] = k;
            let norm = kac::normalize(diag, &raw);
            let gd = kac::graded_dims(diag, &norm);
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                row.beta,
                k,
                gd.order,
                fmt_vec(&norm),
                gd.is_biorbital(),
            );
        }
    }
    out
}

/// Renders a classification report as human-readable text.
pub fn report_text(report: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "exists: {}", report.exists);
    let _ = writeln!(out, "order: {}", report.order);
    let _ = writeln!(out, "r (dim g1 - dim g0): {}", report.r);
    if let Some(label) = &report.label {
        let _ = writeln!(out, "label: {label}");
    }
    if let Some(rank) = report.rank_info {
        let _ = writeln!(out, "rank (dim of Cartan subspace): {rank}");
    }
    if let Some(support) = &report.support {
        let _ = writeln!(out, "support: {support:?}");
    }
    if let Some(w) = &report.weyl_group {
        let _ = writeln!(out, "weyl group: {w:?}");
    }
    for c in &report.character_conditions {
        let _ = writeln!(out, "condition: {c}");
    }
    for m in &report.matches {
        let _ = writeln!(
            out,
            "match: {} params={:?} segments={} epsilon={} systems={:?}",
            m.pattern,
            m.params,
            fmt_multisegment(&m.segments),
            m.epsilon,
            m.systems,
        );
    }
    out
}

/// Renders a classification report as pretty JSON (newline-terminated).
pub fn report_json(report: &ClassificationReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization");
    s.push('\n');
    s
}
