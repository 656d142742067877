//! Command-line front end for the cyclic-grading toolkit: table emission and
//! golden-file checks, grading and classification reports, and the
//! brute-force graded-Jordan matrix oracle.

pub mod emit;
pub mod oracle;

use anyhow::{anyhow, Context, Result};
use graded_lie_core::cuspdata::CuspidalTable;
use graded_lie_core::enumerate::{biorbital_table_with, BiorbitalTable};
use graded_lie_core::rootsys::AffineDiagram;
use std::path::PathBuf;

/// The seven diagrams carrying bi-orbital tables, in canonical order.
pub const DIAGRAMS: [&str; 7] = ["G2", "3D4", "F4", "2E6", "E6", "E7", "E8"];

/// Golden Markdown tables, embedded at compile time.
pub const GOLDEN_TABLES: [(&str, &str); 7] = [
    ("G2", include_str!("../golden/G2.md")),
    ("3D4", include_str!("../golden/3D4.md")),
    ("F4", include_str!("../golden/F4.md")),
    ("2E6", include_str!("../golden/2E6.md")),
    ("E6", include_str!("../golden/E6.md")),
    ("E7", include_str!("../golden/E7.md")),
    ("E8", include_str!("../golden/E8.md")),
];

/// SHA-256 of the embedded cuspidal-pair table, pinning the data file against
/// silent edits (the bundled `data/cuspidal.json` must stay identical).
pub const CUSPIDAL_JSON_SHA256: &str =
    "b90ebf26e30ab40a93eee9cb5f53acde748d3f97d71ed655832e48793fda663a";

/// Looks up an affine diagram by display name.
pub fn diagram(name: &str) -> Result<AffineDiagram> {
    AffineDiagram::by_name(name).map_err(|e| anyhow!(e))
}

/// Loads the cuspidal-pair table: `$ATLAS_DATA_DIR/cuspidal.json` when the
/// environment variable is set, the built-in table otherwise.
pub fn cuspidal_table() -> Result<CuspidalTable> {
    match std::env::var_os("ATLAS_DATA_DIR") {
        Some(dir) => {
            let path = PathBuf::from(dir).join("cuspidal.json");
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            CuspidalTable::from_json(&text).map_err(|e| anyhow!(e))
        }
        None => Ok(CuspidalTable::builtin()),
    }
}

/// Enumerates the bi-orbital table of one named diagram.
pub fn table_for(name: &str, cusp: &CuspidalTable) -> Result<BiorbitalTable> {
    Ok(biorbital_table_with(&diagram(name)?, cusp))
}

/// Renders the Markdown tables of all seven diagrams.
pub fn render_all_tables(cusp: &CuspidalTable) -> Result<Vec<(String, String)>> {
    DIAGRAMS
        .iter()
        .map(|name| Ok((name.to_string(), emit::table_md(&table_for(name, cusp)?))))
        .collect()
}

/// Compares freshly regenerated tables against the embedded golden files.
/// Returns the list of human-readable mismatch descriptions (empty = pass).
pub fn check_tables(cusp: &CuspidalTable) -> Result<Vec<String>> {
    let mut mismatches = Vec::new();
    for (name, golden) in GOLDEN_TABLES {
        let fresh = emit::table_md(&table_for(name, cusp)?);
        if fresh != golden {
            mismatches.push(diff_summary(name, golden, &fresh));
        }
    }
    Ok(mismatches)
}

fn diff_summary(name: &str, golden: &str, fresh: &str) -> String {
    for (i, (g, f)) in golden.lines().zip(fresh.lines()).enumerate() {
        if g != f {
            return format!(
                "{name}: first difference at line {}:\n  golden: {g}\n  fresh:  {f}",
                i + 1
            );
        }
    }
    format!(
        "{name}: line counts differ (golden {}, fresh {})",
        golden.lines().count(),
        fresh.lines().count()
    )
}

/// Parses a comma-separated list of integers.
pub fn parse_i64_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| anyhow!("bad integer {t:?}: {e}")))
        .collect()
}
