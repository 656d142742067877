//! Static tables of cuspidal pairs on simple factors.
//!
//! A *cuspidal pair* on a simple Lie algebra is a nilpotent orbit together
//! with a cuspidal local system on it. The classification is finite and rigid:
//!
//! * `SL_{n+1}`: the regular orbit, one system per primitive character of the
//!   order-`n+1` center (`φ(n+1)` systems);
//! * `Sp_{2n}`: one pair iff `2n = a(a+1)`, on Jordan blocks `(2, 4, …, 2a)`;
//! * `Spin_N`: one pair iff `N` is a square, on blocks `(1, 3, …, 2a−1)`;
//! * `G₂, F₄, E₆, E₇, E₈`: a single orbit each, with 1, 1, 2, 1, 1 systems.
//!
//! The data ships as a versioned JSON table embedded in the crate (and
//! overridable by the command-line front end). Each row stores the orbit as
//! Jordan blocks (classical) and/or as the weight function `ρ` — half the
//! weighted Dynkin diagram — plus one fundamental-weight exponent vector per
//! local system, whose restriction to the center is the system's central
//! character. Loading validates every row: `ρ` values lie in `{0,1}`, and for
//! classical rows `ρ` is recomputed from the blocks via the standard
//! weighted-diagram dictionary and compared.

use crate::rootsys::{CartanType, ComponentChar, LeviComponent, Series};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

/// One cuspidal-pair row: a factor, its orbit, and its local systems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalDatum {
    /// Factor type name, e.g. `"C3"`, `"E6"`.
    pub factor: String,
    /// Jordan blocks of the orbit for classical factors.
    pub blocks: Option<Vec<i64>>,
    /// Weight function `ρ` on Bourbaki-ordered nodes (empty when no pair).
    pub rho: Vec<i64>,
    /// One fundamental-weight exponent vector per cuspidal local system.
    pub chars: Vec<Vec<i64>>,
    /// Human-readable central-character description.
    pub char_note: String,
    /// Provenance note for the row.
    pub provenance: String,
}

impl CuspidalDatum {
    /// Number of cuspidal local systems on the orbit.
    pub fn count(&self) -> usize {
        self.chars.len()
    }

    /// The factor as a parsed Cartan type.
    pub fn cartan_type(&self) -> Result<CartanType, String> {
        CartanType::parse(&self.factor)
    }

    /// The local systems as center-character components.
    pub fn component_chars(&self) -> Vec<ComponentChar> {
        self.chars
            .iter()
            .map(|e| ComponentChar { exponents: e.clone() })
            .collect()
    }

    /// Transports the stored `ρ` onto ambient display nodes through a
    /// pseudo-Levi component (`nodes[i]` = display node playing Bourbaki node
    /// `i+1`), returning `(display node, ρ value)` pairs.
    pub fn rho_on_component(&self, comp: &LeviComponent) -> Result<Vec<(usize, i64)>, String> {
        if comp.nodes.len() != self.rho.len() {
            return Err(format!(
                "component rank {} does not match stored rho length {}",
                comp.nodes.len(),
                self.rho.len()
            ));
        }
        Ok(comp.nodes.iter().copied().zip(self.rho.iter().copied()).collect())
    }
}

/// The full cuspidal-pair table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CuspidalTable {
    /// Schema version.
    pub version: u32,
    /// Free-form schema comment.
    #[serde(default)]
    pub comment: String,
    /// All rows.
    pub rows: Vec<CuspidalDatum>,
}

/// The JSON table embedded at build time.
pub const BUILTIN_JSON: &str = include_str!("../data/cuspidal.json");

impl CuspidalTable {
    /// Parses and validates a table from JSON.
    pub fn from_json(s: &str) -> Result<Self, String> {
        let table: CuspidalTable =
            serde_json::from_str(s).map_err(|e| format!("cuspidal table parse error: {e}"))?;
        table.validate()?;
        Ok(table)
    }

    /// The embedded table.
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_JSON).expect("embedded cuspidal table is valid")
    }

    /// All rows for a factor. Distinguishes "no data shipped" (error) from
    /// "verified zero cuspidal pairs" (an empty row list).
    pub fn pairs_for(&self, factor: &CartanType) -> Result<Vec<&CuspidalDatum>, String> {
        let name = format!("{factor}");
        let hits: Vec<&CuspidalDatum> = self
            .rows
            .iter()
            .filter(|r| r.factor == name && !r.chars.is_empty())
            .collect();
        if hits.is_empty() {
            // Accept explicit verified-empty rows.
            if self.rows.iter().any(|r| r.factor == name) {
                return Ok(Vec::new());
            }
            return Err(format!("no cuspidal data shipped for factor {name}"));
        }
        Ok(hits)
    }

    fn validate(&self) -> Result<(), String> {
        for row in &self.rows {
            let ct = row.cartan_type()?;
            if row.chars.is_empty() {
                if !row.rho.is_empty() {
                    return Err(format!("{}: empty row must have empty rho", row.factor));
                }
                continue;
            }
            if row.rho.len() != ct.rank {
                return Err(format!("{}: rho length != rank", row.factor));
            }
            if row.rho.iter().any(|&x| x != 0 && x != 1) {
                return Err(format!("{}: rho values must be 0 or 1", row.factor));
            }
            for ch in &row.chars {
                if ch.len() != ct.rank {
                    return Err(format!("{}: character length != rank", row.factor));
                }
            }
            if let Some(blocks) = &row.blocks {
                check_block_pattern(&ct, blocks)?;
                let expect = rho_of_partition(&ct, blocks)?;
                if expect != row.rho {
                    return Err(format!(
                        "{}: stored rho {:?} disagrees with weighted diagram {:?} of blocks {:?}",
                        row.factor, row.rho, expect, blocks
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Checks the rigid block patterns of cuspidal orbits on classical factors.
fn check_block_pattern(ct: &CartanType, blocks: &[i64]) -> Result<(), String> {
    let sum: i64 = blocks.iter().sum();
    let ok = match ct.series {
        Series::A => blocks.len() == 1 && sum == ct.rank as i64 + 1,
        Series::C => {
            let a = blocks.len() as i64;
            sum == 2 * ct.rank as i64
                && blocks.iter().enumerate().all(|(i, &b)| b == 2 * (i as i64 + 1))
                && sum == a * (a + 1)
        }
        Series::B | Series::D => {
            let n = if ct.series == Series::B {
                2 * ct.rank as i64 + 1
            } else {
                2 * ct.rank as i64
            };
            sum == n && blocks.iter().enumerate().all(|(i, &b)| b == 2 * i as i64 + 1)
        }
        _ => return Err(format!("{ct}: blocks given for exceptional factor")),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("{ct}: blocks {blocks:?} violate the cuspidal pattern"))
    }
}

/// Half the weighted Dynkin diagram of a classical nilpotent orbit: the
/// standard dictionary from Jordan blocks to simple-root labels, divided by 2
/// (the orbit must be even).
pub fn rho_of_partition(ct: &CartanType, blocks: &[i64]) -> Result<Vec<i64>, String> {
    let mut h: Vec<i64> = Vec::new();
    for &b in blocks {
        for j in 0..b {
            h.push(b - 1 - 2 * j);
        }
    }
    h.sort_unstable_by(|a, b| b.cmp(a));
    let n = ct.rank;
    let labels: Vec<i64> = match ct.series {
        Series::A => {
            // h has n+1 entries; labels are consecutive differences.
            (0..n).map(|i| h[i] - h[i + 1]).collect()
        }
        Series::B | Series::C | Series::D => {
            // Keep the n largest eigenvalues as coordinates.
            let mut out: Vec<i64> = (0..n - 1).map(|i| h[i] - h[i + 1]).collect();
            out.push(match ct.series {
                Series::B => h[n - 1],
                Series::C => 2 * h[n - 1],
                _ => h[n - 2] + h[n - 1],
            });
            out
        }
        _ => return Err("weighted-diagram dictionary is for classical types".to_string()),
    };
    if labels.iter().any(|&x| x % 2 != 0) {
        return Err(format!("orbit {:?} is not even", blocks));
    }
    Ok(labels.iter().map(|&x| x / 2).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series;
    use alloc::vec;

    #[test]
    fn builtin_table_loads_and_validates() {
        let t = CuspidalTable::builtin();
        assert_eq!(t.version, 1);
        assert!(t.rows.len() > 20);
    }

    #[test]
    fn weighted_diagram_dictionary() {
        let c3 = CartanType::new(Series::C, 3).unwrap();
        assert_eq!(rho_of_partition(&c3, &[2, 4]).unwrap(), vec![1, 0, 1]);
        let b4 = CartanType::new(Series::B, 4).unwrap();
        assert_eq!(rho_of_partition(&b4, &[1, 3, 5]).unwrap(), vec![1, 0, 1, 0]);
        let d8 = CartanType::new(Series::D, 8).unwrap();
        assert_eq!(
            rho_of_partition(&d8, &[1, 3, 5, 7]).unwrap(),
            vec![1, 0, 1, 0, 0, 1, 0, 0]
        );
        // Regular orbits have rho identically 1.
        let a3 = CartanType::new(Series::A, 3).unwrap();
        assert_eq!(rho_of_partition(&a3, &[4]).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn lookup_distinguishes_empty_from_missing() {
        let t = CuspidalTable::builtin();
        let sp6 = CartanType::new(Series::C, 3).unwrap();
        assert_eq!(t.pairs_for(&sp6).unwrap().len(), 1);
        // Verified empty: shipped row with no systems.
        let sp8 = CartanType::new(Series::C, 4).unwrap();
        assert_eq!(t.pairs_for(&sp8).unwrap().len(), 0);
        // Not shipped at all: an error, not an empty list.
        let b12 = CartanType::new(Series::B, 12).unwrap();
        assert!(t.pairs_for(&b12).is_err());
    }

    #[test]
    fn counts_follow_euler_phi_for_special_linear_factors() {
        let t = CuspidalTable::builtin();
        for (rank, phi) in [(1usize, 1usize), (2, 2), (3, 2), (4, 4), (5, 2), (6, 6), (7, 4), (8, 6)]
        {
            let a = CartanType::new(Series::A, rank).unwrap();
            let rows = t.pairs_for(&a).unwrap();
            assert_eq!(rows.len(), 1);
            assert_eq!(rows[0].count(), phi, "A{rank}");
            assert!(rows[0].rho.iter().all(|&x| x == 1));
        }
    }
}
