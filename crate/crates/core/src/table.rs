//! Side-by-side comparison of tabulated values and exhaustive search.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::formulas::ar_formula;
use crate::graph::catalog;
use crate::search::{max_colors_no_rainbow, SearchBudget, MAX_SEARCH_N};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryStatus {
    Match,
    Mismatch,
    BudgetExhausted,
    UnsupportedDomain,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationEntry {
    pub pattern: String,
    pub n: usize,
    pub formula_value: Option<u64>,
    /// `AR` from the search; a candidate only when the budget ran out.
    pub search_value: Option<usize>,
    pub status: EntryStatus,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    #[serde(rename = "match")]
    pub matched: usize,
    pub mismatch: usize,
    pub budget_exhausted: usize,
    pub unsupported_domain: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub n_max: usize,
    pub budget: SearchBudget,
    pub entries: Vec<VerificationEntry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn has_mismatch(&self) -> bool {
        self.summary.mismatch > 0
    }

    pub fn entry(&self, pattern: &str, n: usize) -> Option<&VerificationEntry> {
        self.entries.iter().find(|e| e.pattern == pattern && e.n == n)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// Human-readable table.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<8} {:>2} {:>8} {:>8} {:<17} {:>12}",
            "graph", "n", "formula", "search", "status", "nodes"
        );
        for e in &self.entries {
            let show = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            let _ = write!(
                out,
                "{:<8} {:>2} {:>8} {:>8} {:<17} {:>12}",
                e.pattern,
                e.n,
                show(e.formula_value.map(|v| v.to_string())),
                show(e.search_value.map(|v| v.to_string())),
                serde_json::to_value(e.status)
                    .ok()
                    .and_then(|v| v.as_str().map(String::from))
                    .unwrap_or_default(),
                e.nodes,
            );
            if let Some(ms) = e.elapsed_ms {
                let _ = write!(out, " {ms:>10.1} ms");
            }
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "match {}, mismatch {}, budget-exhausted {}, unsupported-domain {}",
            s.matched, s.mismatch, s.budget_exhausted, s.unsupported_domain
        );
        out
    }
}

/// Runs the search for every catalog pattern `P` and every
/// `|V(P)| <= n <= n_max`, comparing with [`ar_formula`].
pub fn verify_table(n_max: usize, budget: &SearchBudget, timings: bool) -> Result<VerificationReport> {
    if !(2..=MAX_SEARCH_N).contains(&n_max) {
        return Err(invalid(format!("n-max must be between 2 and {MAX_SEARCH_N}, got {n_max}")));
    }
    let mut entries = Vec::new();
    let mut summary = Summary::default();
    for pattern in catalog() {
        for n in pattern.num_vertices()..=n_max {
            let formula = match ar_formula(pattern, n as u64) {
                Ok(v) => Some(v.value),
                Err(Error::UnsupportedDomain(_)) => None,
                Err(e) => return Err(e),
            };
            let entry = match formula {
                None => VerificationEntry {
                    pattern: pattern.name().to_string(),
                    n,
                    formula_value: None,
                    search_value: None,
                    status: EntryStatus::UnsupportedDomain,
                    nodes: 0,
                    elapsed_ms: None,
                },
                Some(expected) => {
                    let result = max_colors_no_rainbow(n, pattern, budget)?;
                    let found = result.anti_ramsey();
                    let status = if !result.is_complete() {
                        EntryStatus::BudgetExhausted
                    } else if found as u64 == expected {
                        EntryStatus::Match
                    } else {
                        EntryStatus::Mismatch
                    };
                    VerificationEntry {
                        pattern: pattern.name().to_string(),
                        n,
                        formula_value: Some(expected),
                        search_value: Some(found),
                        status,
                        nodes: result.nodes_explored,
                        elapsed_ms: timings.then_some(result.elapsed.as_secs_f64() * 1e3),
                    }
                }
            };
            match entry.status {
                EntryStatus::Match => summary.matched += 1,
                EntryStatus::Mismatch => summary.mismatch += 1,
                EntryStatus::BudgetExhausted => summary.budget_exhausted += 1,
                EntryStatus::UnsupportedDomain => summary.unsupported_domain += 1,
            }
            entries.push(entry);
        }
    }
    Ok(VerificationReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        n_max,
        budget: budget.clone(),
        entries,
        summary,
    })
}
