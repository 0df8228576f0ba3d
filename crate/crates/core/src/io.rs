//! Text formats.
//!
//! Graph files: `#` lines are comments; the first other line is `N M`,
//! followed by `M` lines `u v` for the edges `u → v`. Colouring files hold one
//! line `u v c` per edge. Output is always LF-terminated, in canonical edge
//! order.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::colouring::{Certificate, EdgeColouring};
use crate::graph::{Edge, GraphError, OrientedGraph};
use crate::verify::{CertificateCheck, Method, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("missing \"N M\" header line")]
    MissingHeader,
    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("line {line}: edge ({u}, {v}) is not in the graph")]
    UnknownEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge ({u}, {v}) is coloured twice")]
    RepeatedEdge { line: usize, u: usize, v: usize },
    #[error("edge ({u}, {v}) has no colour")]
    MissingEdge { u: usize, v: usize },
}

impl ParseError {
    /// Short machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "ParseError",
            ParseError::MissingHeader => "ParseError",
            ParseError::EdgeCountMismatch { .. } => "EdgeCountMismatch",
            ParseError::Graph { source, .. } => match source {
                GraphError::SelfLoop { .. } => "SelfLoop",
                GraphError::BidirectedPair { .. } => "BidirectedPair",
                GraphError::DuplicateEdge { .. } => "DuplicateEdge",
                GraphError::VertexOutOfRange { .. } | GraphError::NotAVertex { .. } => {
                    "VertexOutOfRange"
                }
            },
            ParseError::UnknownEdge { .. } => "UnknownEdge",
            ParseError::RepeatedEdge { .. } => "RepeatedEdge",
            ParseError::MissingEdge { .. } => "MissingEdge",
        }
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn numbers<const K: usize>(line: usize, text: &str) -> Result<[usize; K], ParseError> {
    let mut out = [0usize; K];
    let mut fields = 0;
    let mut offset = 0;
    for token in text.split_whitespace() {
        let column = text[offset..].find(token).map_or(1, |p| offset + p + 1);
        offset = column - 1 + token.len();
        if fields == K {
            return Err(ParseError::Syntax {
                line,
                column,
                message: format!("expected {K} fields, found more"),
            });
        }
        out[fields] = token.parse().map_err(|_| ParseError::Syntax {
            line,
            column,
            message: format!("{token:?} is not a non-negative integer"),
        })?;
        fields += 1;
    }
    if fields < K {
        return Err(ParseError::Syntax {
            line,
            column: text.len() + 1,
            message: format!("expected {K} fields, found {fields}"),
        });
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<OrientedGraph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let [n, m] = numbers::<2>(header_line, header)?;
    let mut edges: Vec<Edge> = Vec::with_capacity(m);
    let mut at: Vec<usize> = Vec::with_capacity(m);
    for (line, text) in lines {
        let [u, v] = numbers::<2>(line, text)?;
        edges.push((u, v));
        at.push(line);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    OrientedGraph::new(n, &edges).map_err(|source| ParseError::Graph {
        line: source.edge_index().map_or(header_line, |i| at[i]),
        source,
    })
}

/// Graph file text, with each `comments` entry written as a `# ` line.
pub fn write_graph(g: &OrientedGraph, comments: &[String]) -> String {
    let mut s = String::with_capacity(16 * (g.edge_count() + 2));
    for c in comments {
        let _ = writeln!(s, "# {c}");
    }
    let _ = writeln!(s, "{} {}", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_colouring(g: &OrientedGraph, col: &EdgeColouring) -> String {
    let mut s = String::with_capacity(16 * g.edge_count());
    for (&(u, v), c) in g.edges().iter().zip(col.colours()) {
        let _ = writeln!(s, "{u} {v} {c}");
    }
    s
}

/// Reads a colouring of `g`. Lines may come in any order but every edge of
/// `g` must appear exactly once. The colour count is `max(2, largest + 1)`.
pub fn parse_colouring(text: &str, g: &OrientedGraph) -> Result<EdgeColouring, ParseError> {
    let mut colours: Vec<Option<u8>> = vec![None; g.edge_count()];
    for (line, body) in content_lines(text) {
        let [u, v, c] = numbers::<3>(line, body)?;
        let c = u8::try_from(c).map_err(|_| ParseError::Syntax {
            line,
            column: 1,
            message: format!("colour {c} is above 255"),
        })?;
        let i = g
            .edge_index(u, v)
            .ok_or(ParseError::UnknownEdge { line, u, v })?;
        if colours[i].replace(c).is_some() {
            return Err(ParseError::RepeatedEdge { line, u, v });
        }
    }
    let colours: Vec<u8> = colours
        .iter()
        .zip(g.edges())
        .map(|(c, &(u, v))| c.ok_or(ParseError::MissingEdge { u, v }))
        .collect::<Result<_, _>>()?;
    let count = colours.iter().copied().max().map_or(2, |m| (m + 1).max(2));
    Ok(EdgeColouring::new(g, count, colours).expect("colours fit the count"))
}

pub fn certificate_json(cert: &Certificate) -> String {
    let mut s = serde_json::to_string(cert).expect("serialisable");
    s.push('\n');
    s
}

pub fn parse_certificate(text: &str) -> Result<Certificate, serde_json::Error> {
    serde_json::from_str(text)
}

/// One line of the verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub colour: u8,
    pub method: Method,
    pub length: usize,
    pub witness: Vec<usize>,
    pub certificate_bound: Option<u64>,
    pub ok: bool,
}

/// Per-colour report records. A class is `ok` when it is not unverified and,
/// given a certificate, its length is within the certificate's edge bound.
pub fn report_records(report: &VerificationReport, certificate: Option<&Certificate>) -> Vec<ReportRecord> {
    report
        .classes
        .iter()
        .map(|c| {
            let bound = certificate.map(|cert| cert.edge_bound);
            let within = bound.is_none_or(|b| c.length as u64 <= b);
            ReportRecord {
                colour: c.colour,
                method: c.method,
                length: c.length,
                witness: c.witness.clone(),
                certificate_bound: bound,
                ok: within && (c.method != Method::Unverified || bound.is_some()),
            }
        })
        .collect()
}

/// JSON array of [`ReportRecord`]s, one record per line.
pub fn report_json(records: &[ReportRecord]) -> String {
    let mut s = String::from("[\n");
    for (i, r) in records.iter().enumerate() {
        s.push_str("  ");
        s.push_str(&serde_json::to_string(r).expect("serialisable"));
        if i + 1 < records.len() {
            s.push(',');
        }
        s.push('\n');
    }
    s.push_str("]\n");
    s
}

pub const STATS_HEADER: &str = "seed,N,M,l,remainder,cert_edges,red_longest,blue_longest,ratio";

/// One row of the batch statistics table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatsRow {
    pub seed: u64,
    pub vertices: usize,
    pub edges: usize,
    pub parts: u64,
    pub remainder: u64,
    pub cert_edges: u64,
    pub red_longest: usize,
    pub blue_longest: usize,
    /// `169·n`.
    pub limit: u64,
}

impl StatsRow {
    pub fn from_check(seed: u64, g: &OrientedGraph, cert: &Certificate, check: &CertificateCheck) -> Self {
        let len = |c: u8| check.report.classes.get(c as usize).map_or(0, |r| r.length);
        Self {
            seed,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            parts: cert.l,
            remainder: cert.remainder,
            cert_edges: cert.edge_bound,
            red_longest: len(0),
            blue_longest: len(1),
            limit: 169 * cert.n,
        }
    }

    /// CSV line without the trailing newline; the ratio has six decimals.
    pub fn to_csv(&self) -> String {
        let ratio = self.red_longest.max(self.blue_longest) as f64 / self.limit as f64;
        format!(
            "{},{},{},{},{},{},{},{},{:.6}",
            self.seed,
            self.vertices,
            self.edges,
            self.parts,
            self.remainder,
            self.cert_edges,
            self.red_longest,
            self.blue_longest,
            ratio
        )
    }
}
