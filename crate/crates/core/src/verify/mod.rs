//! Independent checks: exact longest monochromatic paths, exhaustive maximum
//! special sets, and certificate validation.

mod paths;
mod special;

use serde::Serialize;
use thiserror::Error;

pub use paths::{longest_path_dag, longest_path_exact};
pub use special::{brute_force_max_special, MAX_BRUTE_FORCE_VERTICES};

use crate::colouring::{Certificate, EdgeColouring};
use crate::graph::OrientedGraph;

/// Default vertex cap of the subset dynamic programme.
pub const DEFAULT_EXACT_CAP: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DagDp,
    ExactSubsetDp,
    /// Cyclic class too large for exact search; the length is the trivial
    /// bound `|V| − 1`.
    Unverified,
}

/// A monochromatic directed path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub colour: u8,
    /// Number of edges.
    pub length: usize,
}

impl PathWitness {
    /// Whether consecutive vertices are joined by edges of `colour`, with no
    /// vertex repeated.
    pub fn is_valid(&self, g: &OrientedGraph, col: &EdgeColouring) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.length + 1 == self.vertices.len().max(1)
            && self.vertices.iter().all(|&v| v < g.vertex_count() && seen.insert(v))
            && self
                .vertices
                .windows(2)
                .all(|w| col.colour_of(g, w[0], w[1]) == Some(self.colour))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub colour: u8,
    pub method: Method,
    /// Exact longest path length, or the trivial bound when unverified.
    pub length: usize,
    /// Empty when unverified.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub classes: Vec<ClassReport>,
}

impl VerificationReport {
    /// Largest (possibly bounded rather than exact) length over all classes.
    pub fn longest(&self) -> usize {
        self.classes.iter().map(|c| c.length).max().unwrap_or(0)
    }

    pub fn fully_exact(&self) -> bool {
        self.classes.iter().all(|c| c.method != Method::Unverified)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("witness for colour {colour} is not a monochromatic path: {vertices:?}")]
    InvalidWitness { colour: u8, vertices: Vec<usize> },
}

/// Longest path in each colour class.
///
/// Acyclic classes use the topological-order programme. Cyclic classes with
/// at most `exact_cap` non-isolated vertices use the subset programme; larger
/// ones are reported as unverified. Every witness is re-checked against `g`
/// and `col` before the report is returned.
pub fn longest_mono_paths(
    g: &OrientedGraph,
    col: &EdgeColouring,
    exact_cap: usize,
) -> Result<VerificationReport, VerifyError> {
    let mut classes = Vec::with_capacity(col.colour_count() as usize);
    for colour in 0..col.colour_count() {
        let class = col.class(g, colour);
        let (method, witness) = match longest_path_dag(&class) {
            Ok(path) => (Method::DagDp, Some(path)),
            Err(_) => match longest_path_exact(&class, exact_cap) {
                Some(path) => (Method::ExactSubsetDp, Some(path)),
                None => (Method::Unverified, None),
            },
        };
        let report = match witness {
            Some(vertices) => {
                let w = PathWitness {
                    length: vertices.len().saturating_sub(1),
                    vertices,
                    colour,
                };
                if !w.is_valid(g, col) {
                    return Err(VerifyError::InvalidWitness {
                        colour,
                        vertices: w.vertices,
                    });
                }
                ClassReport {
                    colour,
                    method,
                    length: w.length,
                    witness: w.vertices,
                }
            }
            None => ClassReport {
                colour,
                method,
                length: g.vertex_count().saturating_sub(1),
                witness: Vec::new(),
            },
        };
        classes.push(report);
    }
    Ok(VerificationReport { classes })
}

/// Outcome of [`verify_certificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub report: VerificationReport,
    pub longest: usize,
    pub edge_bound: u64,
    /// `longest ≤ edge_bound`.
    pub ok: bool,
    /// `longest ≤ 169·n`.
    pub within_169n: bool,
}

pub fn verify_certificate(
    g: &OrientedGraph,
    col: &EdgeColouring,
    cert: &Certificate,
    exact_cap: usize,
) -> Result<CertificateCheck, VerifyError> {
    let report = longest_mono_paths(g, col, exact_cap)?;
    let longest = report.longest();
    Ok(CertificateCheck {
        longest,
        edge_bound: cert.edge_bound,
        ok: longest as u64 <= cert.edge_bound,
        within_169n: longest as u64 <= 169 * cert.n,
        report,
    })
}
