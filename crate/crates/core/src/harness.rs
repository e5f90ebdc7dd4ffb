//! Per-modulus analysis, range sweeps and audits, with CSV/JSON encoding.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::factorize;
use crate::connectivity::{ConnectivityReport, DEFAULT_EXHAUSTIVE_BUDGET};
use crate::error::{Result, ZdgError};
use crate::formulas::{predict_edge_connectivity, predict_min_degree, predict_vertex_connectivity};
use crate::zdg::build_explicit;

pub const CSV_HEADER: &str =
    "n,factorization,vertices,edges,delta,kappa_e,kappa,pred_delta,pred_kappa_e,pred_kappa,tags,match,skip_reason";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Oracle {
    /// Max-flow algorithms.
    #[default]
    Flow,
    /// Subset enumeration under [`DEFAULT_EXHAUSTIVE_BUDGET`].
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SkipReason {
    NoZeroDivisors,
    ResourceLimit,
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SkipReason::NoZeroDivisors => "NoZeroDivisors",
            SkipReason::ResourceLimit => "ResourceLimit",
        })
    }
}

/// One row of a sweep: computed versus predicted connectivity for `n`.
///
/// Field order and names are the CSV columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditFinding {
    pub n: u64,
    pub factorization: String,
    pub vertices: Option<u64>,
    pub edges: Option<u64>,
    pub delta: Option<u64>,
    pub kappa_e: Option<u64>,
    pub kappa: Option<u64>,
    pub pred_delta: Option<u64>,
    pub pred_kappa_e: Option<u64>,
    pub pred_kappa: Option<u64>,
    /// `delta;kappa_e;kappa` predictor tags.
    pub tags: Option<String>,
    #[serde(rename = "match")]
    pub is_match: bool,
    pub skip_reason: Option<SkipReason>,
}

impl AuditFinding {
    fn empty(n: u64, factorization: String) -> Self {
        Self {
            n,
            factorization,
            vertices: None,
            edges: None,
            delta: None,
            kappa_e: None,
            kappa: None,
            pred_delta: None,
            pred_kappa_e: None,
            pred_kappa: None,
            tags: None,
            is_match: false,
            skip_reason: None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        self.skip_reason.is_some()
    }

    /// All three computed values are present and mutually equal.
    pub fn computed_equal(&self) -> bool {
        matches!((self.delta, self.kappa_e, self.kappa), (Some(d), Some(e), Some(k)) if d == e && e == k)
    }
}

/// Analyzes one modulus. Degenerate inputs become skip rows, never errors.
pub fn analyze(n: u64, oracle: Oracle) -> AuditFinding {
    let fac = match factorize(n) {
        Ok(f) => f,
        Err(_) => {
            // n = 0 (Z itself is a domain) or n beyond the 64-bit range
            let mut row = AuditFinding::empty(n, String::new());
            row.skip_reason = Some(if n == 0 {
                SkipReason::NoZeroDivisors
            } else {
                SkipReason::ResourceLimit
            });
            return row;
        }
    };
    let mut row = AuditFinding::empty(n, fac.to_string());
    if !fac.is_composite() {
        row.skip_reason = Some(SkipReason::NoZeroDivisors);
        return row;
    }
    let (pd, pe, pk) = match (
        predict_min_degree(&fac),
        predict_edge_connectivity(&fac),
        predict_vertex_connectivity(&fac),
    ) {
        (Ok(d), Ok(e), Ok(k)) => (d, e, k),
        _ => unreachable!("composite n always has predictions"),
    };
    row.pred_delta = Some(pd.value);
    row.pred_kappa_e = Some(pe.value);
    row.pred_kappa = Some(pk.value);
    row.tags = Some(format!("{};{};{}", pd.tag, pe.tag, pk.tag));

    let graph = match build_explicit(n) {
        Ok(g) => g,
        Err(ZdgError::ResourceLimit(_)) => {
            row.skip_reason = Some(SkipReason::ResourceLimit);
            return row;
        }
        Err(_) => {
            row.skip_reason = Some(SkipReason::NoZeroDivisors);
            return row;
        }
    };
    row.vertices = Some(graph.num_vertices() as u64);
    row.edges = Some(graph.num_edges() as u64);
    let report = match oracle {
        Oracle::Flow => ConnectivityReport::compute(&graph),
        Oracle::Exhaustive => {
            match ConnectivityReport::compute_exhaustive(&graph, DEFAULT_EXHAUSTIVE_BUDGET) {
                Ok(r) => r,
                Err(_) => {
                    row.skip_reason = Some(SkipReason::ResourceLimit);
                    return row;
                }
            }
        }
    };
    row.delta = Some(report.delta as u64);
    row.kappa_e = Some(report.kappa_e as u64);
    row.kappa = Some(report.kappa as u64);
    row.is_match = row.delta == row.pred_delta
        && row.kappa_e == row.pred_kappa_e
        && row.kappa == row.pred_kappa;
    row
}

pub fn check_range(from: u64, to: u64) -> Result<()> {
    if from == 0 || from > to {
        return Err(ZdgError::Usage(format!(
            "invalid range {from}..{to}: need 1 <= from <= to"
        )));
    }
    Ok(())
}

/// One row per `n` in `from..=to`, ascending, computed on `jobs` workers.
/// Output does not depend on `jobs`.
pub fn sweep(from: u64, to: u64, jobs: usize, oracle: Oracle) -> Result<Vec<AuditFinding>> {
    check_range(from, to)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| ZdgError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(|| {
        (from..=to)
            .into_par_iter()
            .map(|n| analyze(n, oracle))
            .collect()
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditSummary {
    /// Composite values that were fully analyzed.
    pub checked: usize,
    pub mismatches: usize,
    /// Mismatching and skipped rows, ascending by `n`.
    pub reported: Vec<AuditFinding>,
}

impl AuditSummary {
    pub fn from_rows(rows: Vec<AuditFinding>) -> Self {
        let checked = rows.iter().filter(|r| !r.is_skipped()).count();
        let mismatches = rows
            .iter()
            .filter(|r| !r.is_skipped() && !r.is_match)
            .count();
        let reported = rows
            .into_iter()
            .filter(|r| r.is_skipped() || !r.is_match)
            .collect();
        Self {
            checked,
            mismatches,
            reported,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.mismatches == 0 {
            0
        } else {
            2
        }
    }
}

impl fmt::Display for AuditSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "checked {} composite values, {} mismatches",
            self.checked, self.mismatches
        )
    }
}

pub fn audit(from: u64, to: u64, jobs: usize, oracle: Oracle) -> Result<AuditSummary> {
    Ok(AuditSummary::from_rows(sweep(from, to, jobs, oracle)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Writes rows as CSV (header always present) or as a JSON array.
pub fn write_rows<W: Write>(out: W, rows: &[AuditFinding], format: Format) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            w.write_record(CSV_HEADER.split(','))?;
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            out.write_all(b"\n")
        }
    }
}

pub fn rows_to_string(rows: &[AuditFinding], format: Format) -> String {
    let mut buf = Vec::new();
    write_rows(&mut buf, rows, format).expect("writing to memory");
    String::from_utf8(buf).expect("csv/json output is utf-8")
}
