use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use super::augment::{find_special_set, BoundsError, DensityParams};
use super::greedy::greedy_acyclic_order;
use super::stages::{stage_schedule, ScheduleSummary};
use crate::arith::{ceil_log2, edge_budget, floor_log2};
use crate::graph::{OrientedGraph, SpecialSet, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("{edges} edges exceed the budget n² log₂ n = {budget} for n = {n}")]
    TooManyEdges { edges: usize, budget: u64, n: usize },
    #[error("path-length parameter n = {n} is below 2")]
    InvalidN { n: usize },
}

impl From<BoundsError> for PartitionError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::InvalidN { n } => PartitionError::InvalidN { n },
            BoundsError::EpsOutOfRange { .. } => unreachable!("schedules do not evaluate eps"),
        }
    }
}

/// Ordered special parts `U_1..U_l` and a remainder `W′` covering the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialPartition {
    pub n: usize,
    /// Component bound `⌈log₂ n⌉` shared by every part.
    pub k: usize,
    pub parts: Vec<SpecialSet>,
    pub remainder: VertexSet,
}

impl SpecialPartition {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// `part_of[v]`: index of the part holding `v`, or `None` for the remainder.
    pub fn part_index(&self, vertex_count: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; vertex_count];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p.members() {
                owner[v] = Some(i);
            }
        }
        owner
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartSource {
    /// Returned by the special-set finder.
    Finder,
    /// Finder result too small; greedy acyclic set cut to `k` used instead.
    GreedyFallback,
    /// Carved from the post-stage remainder.
    Remainder,
}

/// Per-stage accounting.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageRecord {
    pub stage: usize,
    pub start_vertices: usize,
    pub end_vertices: usize,
    pub parts: usize,
    pub min_part_size: usize,
    /// `⌈(N / 2^{i-1}) / min_part_size⌉`.
    pub count_bound: usize,
    /// Whether every part met its size target.
    pub targets_met: bool,
    /// `⌈80 log₂(α_i)/α_i · n/√(log₂ n)⌉`.
    pub coefficient_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionReport {
    pub schedule: ScheduleSummary,
    pub stages: Vec<StageRecord>,
    pub sources: Vec<PartSource>,
    pub edge_budget: u64,
}

pub fn special_partition(g: &OrientedGraph, n: usize) -> Result<SpecialPartition, PartitionError> {
    special_partition_with_report(g, n).map(|(p, _)| p)
}

/// Removes special sets stage by stage, then carves acyclic sets of at most
/// `⌈log₂ n⌉` vertices from what is left until at most `n` vertices remain.
///
/// Inside a stage each extraction works on the subgraph of the vertices still
/// present, with `eps = ⌊n² log₂ n⌋ / (remaining)²`.
pub fn special_partition_with_report(
    g: &OrientedGraph,
    n: usize,
) -> Result<(SpecialPartition, PartitionReport), PartitionError> {
    if n < 2 {
        return Err(PartitionError::InvalidN { n });
    }
    let budget = edge_budget(n);
    if g.edge_count() as u64 > budget {
        return Err(PartitionError::TooManyEdges {
            edges: g.edge_count(),
            budget,
            n,
        });
    }
    let k = ceil_log2(n).max(1);
    let total = g.vertex_count();
    let schedule = stage_schedule(total, n)?;

    let mut pool = g.all_vertices();
    let mut parts = Vec::new();
    let mut sources = Vec::new();
    let mut stages = Vec::new();

    for stage in 1..=schedule.stage_count {
        let start = pool.len();
        let mut record = StageRecord {
            stage,
            start_vertices: start,
            end_vertices: start,
            parts: 0,
            min_part_size: usize::MAX,
            count_bound: 0,
            targets_met: true,
            coefficient_bound: schedule.stage_part_bound(stage).ceil() as usize,
        };
        while !pool.is_empty() && schedule.stage_continues(stage, pool.len()) {
            let (sub, relabel) = g.induced_subgraph(&pool).expect("pool is a vertex subset");
            let remaining = pool.len();
            let eps = BigRational::new(
                BigInt::from(budget),
                BigInt::from(remaining) * BigInt::from(remaining),
            );
            let (found, trace) = find_special_set(&sub, k, &DensityParams::new(n, eps));
            let floor = floor_log2(remaining).max(1);
            let (local, source) = if found.len() >= floor {
                (found.members().clone(), PartSource::Finder)
            } else {
                let mut order = greedy_acyclic_order(&sub);
                order.truncate(k);
                let greedy: VertexSet = order.into_iter().collect();
                if greedy.len() > found.len() {
                    (greedy, PartSource::GreedyFallback)
                } else {
                    (found.members().clone(), PartSource::Finder)
                }
            };
            if let Some(target) = trace.target {
                record.targets_met &= local.len() >= target;
            }
            let part = relabel.lift(&local);
            record.parts += 1;
            record.min_part_size = record.min_part_size.min(part.len());
            pool = pool.difference(&part);
            parts.push(SpecialSet::new_unchecked(part, k));
            sources.push(source);
        }
        record.end_vertices = pool.len();
        if record.parts > 0 {
            let removed_cap = total.div_ceil(1 << (stage - 1));
            record.count_bound = removed_cap.div_ceil(record.min_part_size);
        } else {
            record.min_part_size = 0;
        }
        stages.push(record);
    }

    while pool.len() > n {
        let (sub, relabel) = g.induced_subgraph(&pool).expect("pool is a vertex subset");
        let mut order = greedy_acyclic_order(&sub);
        order.truncate(k);
        let part = relabel.lift(&order.into_iter().collect());
        pool = pool.difference(&part);
        parts.push(SpecialSet::new_unchecked(part, k));
        sources.push(PartSource::Remainder);
    }

    let partition = SpecialPartition {
        n,
        k,
        parts,
        remainder: pool,
    };
    let report = PartitionReport {
        schedule: schedule.summary(),
        stages,
        sources,
        edge_budget: budget,
    };
    Ok((partition, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GenSpec, GraphKind};

    fn check(g: &OrientedGraph, p: &SpecialPartition) {
        let mut seen = vec![0u8; g.vertex_count()];
        for part in &p.parts {
            assert!(!part.is_empty());
            assert_eq!(part.k(), p.k);
            assert!(g.is_k_special(part.members(), p.k).unwrap());
            for &v in part.members() {
                seen[v] += 1;
            }
        }
        for &v in &p.remainder {
            seen[v] += 1;
        }
        assert!(seen.iter().all(|&c| c == 1));
        assert!(p.remainder.len() <= p.n);
    }

    #[test]
    fn edgeless_graph() {
        let g = OrientedGraph::empty(100);
        let (p, report) = special_partition_with_report(&g, 4).unwrap();
        check(&g, &p);
        // α = 100 / (4·√2) ≈ 17.7: stages at 17.7 and 8.8, then 4.4 ≤ 8
        assert_eq!(report.schedule.stage_count, 2);
        assert_eq!(p.k, 2);
    }

    #[test]
    fn tournament_with_n_24() {
        let g = generate(&GenSpec::new(GraphKind::Tournament, 64).seed(11)).unwrap();
        let p = special_partition(&g, 24).unwrap();
        assert_eq!(p.k, 5);
        check(&g, &p);
        assert!(special_partition(&g, 16).is_err());
    }

    #[test]
    fn directed_path() {
        let g = generate(&GenSpec::new(GraphKind::Dipath, 50)).unwrap();
        // 49 edges > 32 = 4² log₂ 4
        assert!(special_partition(&g, 4).is_err());
        let p = special_partition(&g, 5).unwrap();
        check(&g, &p);
    }

    #[test]
    fn sparse_graph_runs_stages() {
        let g = generate(&GenSpec::new(GraphKind::OrientedGnm, 300).edges(32).seed(2)).unwrap();
        let (p, report) = special_partition_with_report(&g, 4).unwrap();
        check(&g, &p);
        assert!(report.schedule.stage_count >= 1);
        for s in &report.stages {
            assert!(s.parts <= s.count_bound || s.parts == 0);
            assert!(s.end_vertices << s.stage < 300);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let g = OrientedGraph::empty(3);
        assert_eq!(special_partition(&g, 1), Err(PartitionError::InvalidN { n: 1 }));
        let t = generate(&GenSpec::new(GraphKind::Tournament, 4).seed(0)).unwrap();
        // 6 edges > 4 = 2² log₂ 2
        assert!(matches!(
            special_partition(&t, 2),
            Err(PartitionError::TooManyEdges { edges: 6, budget: 4, n: 2 })
        ));
    }
}
