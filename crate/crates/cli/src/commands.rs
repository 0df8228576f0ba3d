use std::fs;
use std::io::Write as _;
use std::ops::RangeInclusive;

use dipaths::colouring::adversarial_colouring;
use dipaths::extraction::{
    find_special_set, lemma2_target, stage_schedule, AugmentationTrace, DensityParams,
    ScheduleSummary,
};
use dipaths::generate::{generate, GenSpec, GraphKind};
use dipaths::io::{
    certificate_json, parse_certificate, parse_colouring, parse_graph, report_json,
    report_records, write_colouring, write_graph, StatsRow, STATS_HEADER,
};
use dipaths::verify::{longest_mono_paths, verify_certificate};
use dipaths::{OrientedGraph, VertexSet};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;

/// Whether the run succeeded, or completed with a negative verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Failed,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Ok
        } else {
            Outcome::Failed
        }
    }
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    let res = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(path)
    };
    res.map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Writes to `path`, or to stdout when `path` is `None` or `-`.
pub fn emit(path: Option<&str>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) if p != "-" => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_owned(),
            source,
        }),
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

pub fn load_graph(path: &str) -> Result<OrientedGraph, CliError> {
    parse_graph(&read_text(path)?).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

pub fn build_spec(
    kind: GraphKind,
    vertices: usize,
    edges: Option<usize>,
    cycle_length: Option<usize>,
    seed: Option<u64>,
) -> Result<GenSpec, CliError> {
    let mut spec = GenSpec::new(kind, vertices);
    spec.edge_count = edges;
    spec.cycle_length = cycle_length;
    match seed {
        Some(s) => spec.seed = s,
        None if kind.is_random() => {
            return Err(CliError::Usage(format!("--seed is required for kind {kind}")))
        }
        None => {}
    }
    Ok(spec)
}

pub fn generate_text(spec: &GenSpec) -> Result<String, CliError> {
    let g = generate(spec)?;
    Ok(write_graph(&g, &[spec.describe()]))
}

pub struct ColourOutput {
    pub colouring: String,
    pub certificate: String,
    pub within_169n: bool,
}

pub fn colour(g: &OrientedGraph, n: usize) -> Result<ColourOutput, CliError> {
    let out = adversarial_colouring(g, n)?;
    Ok(ColourOutput {
        colouring: write_colouring(g, &out.colouring),
        certificate: certificate_json(&out.certificate),
        within_169n: out.certificate.within_169n,
    })
}

#[derive(Serialize)]
struct Extraction<'a> {
    k: usize,
    eps: String,
    size: usize,
    members: &'a VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a AugmentationTrace>,
}

pub fn parse_eps(token: &str) -> Result<BigRational, CliError> {
    token
        .parse::<BigRational>()
        .map_err(|_| CliError::Usage(format!("eps must be a rational p/q, got {token:?}")))
}

pub fn extract(
    g: &OrientedGraph,
    k: usize,
    eps: Option<BigRational>,
    with_trace: bool,
) -> Result<String, CliError> {
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    // n does not influence the search; 2^k is the value it pairs with
    let n = 1usize << k.min(usize::BITS as usize - 1);
    let params = match eps {
        Some(e) if e < BigRational::from_integer(0.into()) => {
            return Err(CliError::Usage(format!("eps must be non-negative, got {e}")))
        }
        Some(e) => DensityParams::new(n, e),
        None => DensityParams::from_graph(g, n),
    };
    let (set, trace) = find_special_set(g, k, &params);
    let record = Extraction {
        k,
        eps: params.eps.to_string(),
        size: set.len(),
        members: set.members(),
        trace: with_trace.then_some(&trace),
    };
    Ok(serde_json::to_string_pretty(&record).expect("serialisable") + "\n")
}

#[derive(Serialize)]
struct StageTarget {
    stage: usize,
    vertices: usize,
    eps: String,
    target: Option<f64>,
}

#[derive(Serialize)]
struct Bounds {
    schedule: ScheduleSummary,
    targets: Vec<StageTarget>,
}

/// Stage schedule plus the special-set size target at the start of each stage.
pub fn bounds(n: usize, vertices: usize) -> Result<String, CliError> {
    let schedule = stage_schedule(vertices, n)?;
    let targets = schedule
        .epsilons
        .iter()
        .enumerate()
        .map(|(i, eps)| {
            let v = vertices >> i;
            StageTarget {
                stage: i,
                vertices: v,
                eps: eps.to_string(),
                target: lemma2_target(v, eps).ok(),
            }
        })
        .collect();
    let record = Bounds {
        schedule: schedule.summary(),
        targets,
    };
    Ok(serde_json::to_string_pretty(&record).expect("serialisable") + "\n")
}

pub struct VerifyOutput {
    pub report: String,
    pub ok: bool,
}

pub fn verify(
    g: &OrientedGraph,
    colouring_path: &str,
    certificate_path: Option<&str>,
    cap: usize,
) -> Result<VerifyOutput, CliError> {
    let col = parse_colouring(&read_text(colouring_path)?, g).map_err(|source| CliError::Parse {
        path: colouring_path.to_owned(),
        source,
    })?;
    let cert = match certificate_path {
        Some(p) => Some(parse_certificate(&read_text(p)?).map_err(|source| {
            CliError::Certificate {
                path: p.to_owned(),
                source,
            }
        })?),
        None => None,
    };
    let report = match &cert {
        Some(c) => verify_certificate(g, &col, c, cap)?.report,
        None => longest_mono_paths(g, &col, cap)?,
    };
    let records = report_records(&report, cert.as_ref());
    let ok = records.iter().all(|r| r.ok);
    Ok(VerifyOutput {
        report: report_json(&records),
        ok,
    })
}

/// Parses `a..b` (half-open) or `a..=b` (inclusive).
pub fn parse_seeds(token: &str) -> Result<RangeInclusive<u64>, CliError> {
    let bad = || CliError::Usage(format!("seed range must be a..b or a..=b, got {token:?}"));
    let (a, rest) = token.split_once("..").ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let range = match rest.strip_prefix('=') {
        Some(b) => a..=b.trim().parse().map_err(|_| bad())?,
        None => {
            let b: u64 = rest.trim().parse().map_err(|_| bad())?;
            if b <= a {
                return Err(bad());
            }
            a..=b - 1
        }
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

pub struct StatsConfig {
    pub kind: GraphKind,
    pub vertices: usize,
    pub edges: Option<usize>,
    pub n: usize,
    pub seeds: RangeInclusive<u64>,
    pub workers: usize,
    pub cap: usize,
}

fn stats_row(cfg: &StatsConfig, seed: u64) -> Result<StatsRow, CliError> {
    let spec = build_spec(cfg.kind, cfg.vertices, cfg.edges, None, Some(seed))?;
    let g = generate(&spec)?;
    let out = adversarial_colouring(&g, cfg.n)?;
    let check = verify_certificate(&g, &out.colouring, &out.certificate, cfg.cap)?;
    Ok(StatsRow::from_check(seed, &g, &out.certificate, &check))
}

/// CSV over all seeds, rows in seed order. The outcome fails when any row
/// exceeds its certificate.
pub fn stats(cfg: &StatsConfig) -> Result<(String, Outcome), CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", cfg.workers)))?;
    let seeds: Vec<u64> = cfg.seeds.clone().collect();
    let rows: Vec<StatsRow> = pool.install(|| {
        seeds
            .par_iter()
            .map(|&s| stats_row(cfg, s))
            .collect::<Result<_, _>>()
    })?;
    let mut csv = String::from(STATS_HEADER);
    csv.push('\n');
    let mut ok = true;
    for row in &rows {
        ok &= row.red_longest.max(row.blue_longest) as u64 <= row.cert_edges;
        csv.push_str(&row.to_csv());
        csv.push('\n');
    }
    Ok((csv, Outcome::from_bool(ok)))
}

pub fn colour_outcome(out: &ColourOutput) -> Outcome {
    Outcome::from_bool(out.within_169n)
}

pub fn verify_outcome(out: &VerifyOutput) -> Outcome {
    Outcome::from_bool(out.ok)
}
