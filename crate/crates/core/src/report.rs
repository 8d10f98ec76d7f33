//! Report payloads emitted by the engine: JSON with exact values serialized
//! as strings, or a human-readable aligned table.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dirichlet::{DirichletCharacter, Parity};
use crate::exact::{Cyclotomic, CycloPoly};
use crate::kmodel::CofiberReport;

/// One row of an order-of-vanishing table at `s = 1 - n`. Absent columns
/// are not applicable for the mode that produced the row; when both orders
/// are present, `matches` records their exact equality.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub n: u32,
    pub s: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gross_dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analytic_ord: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_value: Option<Cyclotomic>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RankRow {
    pub n: u32,
    pub s: i64,
    pub rank: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Signature {
    pub r1: u64,
    pub r2: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RanksReport {
    pub r1: u64,
    pub r2: u64,
    pub n_max: u32,
    pub rows: Vec<RankRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterInfo {
    pub index: u64,
    pub character: DirichletCharacter,
    pub conductor: u64,
    pub parity: Parity,
    pub is_primitive: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharactersReport {
    pub modulus: u64,
    /// `(residue, order)` pairs; characters are indexed by exponent tuples
    /// over this basis, first generator varying fastest.
    pub generator_basis: Vec<(u64, u64)>,
    pub indexing: String,
    pub characters: Vec<CharacterInfo>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GrossReport {
    pub modulus: u64,
    pub char_index: u64,
    pub generator_basis: Vec<(u64, u64)>,
    pub indexing: String,
    pub conductor: u64,
    pub parity: Parity,
    pub value_order: u64,
    pub n_max: u32,
    pub rows: Vec<ReportRow>,
    pub all_match: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaRow {
    pub n: u32,
    pub s: i64,
    pub rank: u64,
    pub gross_dim: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaReport {
    pub modulus: u64,
    pub signature: Signature,
    pub n_max: u32,
    pub rows: Vec<ZetaRow>,
    pub all_match: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerEntry {
    pub inertia: Vec<usize>,
    pub frob: usize,
    pub fixed_dim: u64,
    pub factor: CycloPoly,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArtinReport {
    pub group_size: usize,
    pub embedding_size: usize,
    pub signature: Signature,
    pub representation_degree: u64,
    pub n_max: u32,
    pub rows: Vec<ReportRow>,
    pub cofiber: CofiberReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<Vec<EulerEntry>>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CategoryStat {
    pub checks: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n_upto: u64,
    pub degree_upto: u32,
    pub total_checks: u64,
    pub total_failures: u64,
    pub categories: BTreeMap<String, CategoryStat>,
    /// First failures in deterministic order (capped).
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Any report the engine can emit, tagged by mode.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Report {
    Ranks(RanksReport),
    Characters(CharactersReport),
    Gross(GrossReport),
    Zeta(ZetaReport),
    Artin(ArtinReport),
    Verify(VerifyReport),
}

impl Report {
    /// True when nothing in the report signals a mismatch or failure.
    pub fn success(&self) -> bool {
        match self {
            Report::Ranks(_) | Report::Characters(_) => true,
            Report::Gross(r) => r.all_match,
            Report::Zeta(r) => r.all_match,
            Report::Artin(r) => r.cofiber.pass,
            Report::Verify(r) => r.passed,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize cleanly");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        match self {
            Report::Ranks(r) => {
                let mut rows = vec![vec![
                    "n".to_string(),
                    "s".to_string(),
                    "rank".to_string(),
                ]];
                for row in &r.rows {
                    rows.push(vec![
                        row.n.to_string(),
                        row.s.to_string(),
                        row.rank.to_string(),
                    ]);
                }
                format!(
                    "odd K-group ranks for signature (r1, r2) = ({}, {})\n{}",
                    r.r1,
                    r.r2,
                    align(&rows)
                )
            }
            Report::Characters(r) => {
                let mut rows = vec![vec![
                    "index".to_string(),
                    "order".to_string(),
                    "conductor".to_string(),
                    "parity".to_string(),
                    "primitive".to_string(),
                ]];
                for c in &r.characters {
                    rows.push(vec![
                        c.index.to_string(),
                        c.character.value_order().to_string(),
                        c.conductor.to_string(),
                        parity_str(c.parity).into(),
                        yes_no(c.is_primitive).into(),
                    ]);
                }
                format!(
                    "characters mod {} over basis {:?} (first generator fastest)\n{}",
                    r.modulus, r.generator_basis, align(&rows)
                )
            }
            Report::Gross(r) => {
                let mut rows = vec![vec![
                    "n".to_string(),
                    "s".to_string(),
                    "gross".to_string(),
                    "analytic".to_string(),
                    "L(s)".to_string(),
                    "match".to_string(),
                ]];
                for row in &r.rows {
                    rows.push(vec![
                        row.n.to_string(),
                        row.s.to_string(),
                        opt(row.gross_dim),
                        opt(row.analytic_ord),
                        row.l_value
                            .as_ref()
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| "-".into()),
                        row.matches.map(yes_no).unwrap_or("-").to_string(),
                    ]);
                }
                format!(
                    "character {} mod {} (conductor {}, {}, order {}): orders at s = 1 - n\n{}overall: {}\n",
                    r.char_index,
                    r.modulus,
                    r.conductor,
                    parity_str(r.parity),
                    r.value_order,
                    align(&rows),
                    if r.all_match { "all rows match" } else { "MISMATCH" },
                )
            }
            Report::Zeta(r) => {
                let mut rows = vec![vec![
                    "n".to_string(),
                    "s".to_string(),
                    "rank".to_string(),
                    "gross".to_string(),
                    "match".to_string(),
                ]];
                for row in &r.rows {
                    rows.push(vec![
                        row.n.to_string(),
                        row.s.to_string(),
                        row.rank.to_string(),
                        row.gross_dim.to_string(),
                        yes_no(row.matches).into(),
                    ]);
                }
                format!(
                    "cyclotomic field of modulus {}: signature ({}, {})\n{}overall: {}\n",
                    r.modulus,
                    r.signature.r1,
                    r.signature.r2,
                    align(&rows),
                    if r.all_match { "all rows match" } else { "MISMATCH" },
                )
            }
            Report::Artin(r) => {
                let mut rows = vec![vec![
                    "n".to_string(),
                    "s".to_string(),
                    "gross".to_string(),
                ]];
                for row in &r.rows {
                    rows.push(vec![
                        row.n.to_string(),
                        row.s.to_string(),
                        opt(row.gross_dim),
                    ]);
                }
                let mut out = format!(
                    "group of size {}, {} embeddings, signature ({}, {}), degree-{} coefficients\n{}",
                    r.group_size,
                    r.embedding_size,
                    r.signature.r1,
                    r.signature.r2,
                    r.representation_degree,
                    align(&rows)
                );
                if let Some(entries) = &r.euler {
                    out.push_str("euler factors:\n");
                    for e in entries {
                        out.push_str(&format!(
                            "  inertia {:?}, frob {}: dim V^I = {}, {}\n",
                            e.inertia, e.frob, e.fixed_dim, e.factor
                        ));
                    }
                }
                out.push_str(&format!(
                    "cofiber bookkeeping: {}\n",
                    if r.cofiber.pass { "pass" } else { "FAIL" }
                ));
                out
            }
            Report::Verify(r) => {
                let mut rows = vec![vec![
                    "category".to_string(),
                    "checks".to_string(),
                    "failures".to_string(),
                ]];
                for (name, stat) in &r.categories {
                    rows.push(vec![
                        name.clone(),
                        stat.checks.to_string(),
                        stat.failures.to_string(),
                    ]);
                }
                let mut out = format!(
                    "verification sweep: moduli up to {}, n up to {}\n{}",
                    r.n_upto,
                    r.degree_upto,
                    align(&rows)
                );
                for f in &r.failures {
                    out.push_str(&format!("  failure: {f}\n"));
                }
                out.push_str(&format!(
                    "total: {} checks, {} failures -> {}\n",
                    r.total_checks,
                    r.total_failures,
                    if r.passed { "PASS" } else { "FAIL" }
                ));
                out
            }
        }
    }
}

fn opt(v: Option<u64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn parity_str(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

/// Left-align cells into fixed-width columns.
fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            out.push_str(&format!("{:<width$}  ", cell, width = widths[i]));
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn success_reflects_failures() {
        let mut verify = VerifyReport {
            n_upto: 4,
            degree_upto: 2,
            total_checks: 10,
            total_failures: 0,
            categories: BTreeMap::new(),
            failures: vec![],
            passed: true,
        };
        assert!(Report::Verify(verify.clone()).success());
        verify.passed = false;
        verify.total_failures = 1;
        verify.failures.push("[orthogonality] synthetic".into());
        let report = Report::Verify(verify);
        assert!(!report.success());
        assert!(report.to_table().contains("FAIL"));
    }

    #[test]
    fn gross_success_follows_match_flags() {
        let base = GrossReport {
            modulus: 4,
            char_index: 1,
            generator_basis: vec![(3, 2)],
            indexing: String::new(),
            conductor: 4,
            parity: Parity::Odd,
            value_order: 2,
            n_max: 1,
            rows: vec![ReportRow {
                n: 1,
                s: 0,
                gross_dim: Some(0),
                analytic_ord: Some(0),
                l_value: None,
                matches: Some(true),
            }],
            all_match: true,
        };
        assert!(Report::Gross(base.clone()).success());
        let mut bad = base;
        bad.all_match = false;
        bad.rows[0].matches = Some(false);
        assert!(!Report::Gross(bad).success());
    }

    #[test]
    fn json_rendering_is_tagged_by_mode() {
        let report = Report::Ranks(RanksReport {
            r1: 1,
            r2: 0,
            n_max: 1,
            rows: vec![RankRow { n: 1, s: 0, rank: 0 }],
        });
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["mode"], "ranks");
        assert_eq!(json["rows"][0]["rank"], 0);
    }
}
