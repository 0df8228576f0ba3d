use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use super::greedy::{component_bounded_prefix, greedy_acyclic_order};
use crate::arith::{ceil_rational, rational_to_f64};
use crate::graph::{OrientedGraph, SpecialSet, VertexSet};

/// Density parameter of a special-set search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityParams {
    /// Path-length parameter of the colouring theorem.
    pub n: usize,
    /// Edge density: the graph has at most `eps · N²` edges.
    pub eps: BigRational,
}

impl DensityParams {
    pub fn new(n: usize, eps: BigRational) -> Self {
        Self { n, eps }
    }

    /// `eps = M / N²` of `g` itself (zero for an empty graph).
    pub fn from_graph(g: &OrientedGraph, n: usize) -> Self {
        let v = g.vertex_count();
        let eps = if v == 0 {
            BigRational::zero()
        } else {
            BigRational::new(BigInt::from(g.edge_count()), BigInt::from(v) * BigInt::from(v))
        };
        Self { n, eps }
    }

    /// Whether the size guarantee's hypothesis `eps > 1/N` holds.
    pub fn guarantee_applies(&self, vertex_count: usize) -> bool {
        vertex_count > 0
            && self.eps > BigRational::new(BigInt::one(), BigInt::from(vertex_count))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("eps = {eps} is outside the open interval (0, 1)")]
    EpsOutOfRange { eps: String },
    #[error("path-length parameter n = {n} is below 2")]
    InvalidN { n: usize },
}

/// Guaranteed special-set size `log₂ N / (20 · eps · log₂(1/eps))`.
pub fn lemma2_target(vertex_count: usize, eps: &BigRational) -> Result<f64, BoundsError> {
    if !eps.is_positive() || *eps >= BigRational::one() {
        return Err(BoundsError::EpsOutOfRange {
            eps: eps.to_string(),
        });
    }
    let e = rational_to_f64(eps);
    Ok((vertex_count as f64).log2() / (20.0 * e * (1.0 / e).log2()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RoundStatus {
    Grew,
    NoProgress,
}

/// Audit record of one augmentation round.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundRecord {
    pub u_before: usize,
    /// Size of every padded signature, `min(⌈10·eps·|U|⌉, |U|)`.
    pub signature_size: usize,
    /// Vertices outside `U` with at most `signature_size` neighbours in `U`.
    pub candidates: usize,
    /// Size of the largest signature class.
    pub class_size: usize,
    pub added: usize,
    pub u_after: usize,
    pub status: RoundStatus,
    /// The removed signature `S`.
    #[serde(skip)]
    pub signature: Vec<usize>,
    /// The inserted acyclic set `W″`.
    #[serde(skip)]
    pub inserted: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmented {
    pub set: SpecialSet,
    pub record: RoundRecord,
}

/// Signals that a round could not enlarge `U`; ends the iteration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("augmentation made no progress from |U| = {}", record.u_before)]
pub struct NoProgress {
    pub record: RoundRecord,
}

/// One swap `U ← (U ∖ S) ∪ W″`.
///
/// Candidates are the vertices outside `U` with at most
/// `t = min(⌈10·eps·|U|⌉, |U|)` neighbours in `U`. Each gets the signature
/// formed by its neighbours in `U`, padded with the smallest remaining members
/// of `U` up to exactly `t`. Within the largest signature class (smallest
/// signature on ties) a greedy acyclic set is taken and cut to its first `k`
/// vertices. No inserted vertex touches `U ∖ S`, so the result stays
/// `k`-special.
pub fn augment_special_set_round(
    g_clean: &OrientedGraph,
    u: &SpecialSet,
    params: &DensityParams,
) -> Result<Augmented, NoProgress> {
    let n = g_clean.vertex_count();
    let k = u.k();
    let members = u.members();
    let mut in_u = vec![false; n];
    for &v in members {
        in_u[v] = true;
    }

    let raw = &params.eps * BigRational::from_integer(BigInt::from(10 * members.len()));
    let t = ceil_rational(&raw).min(members.len());

    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut candidates = 0usize;
    for w in g_clean.vertices().filter(|&w| !in_u[w]) {
        let mut nbrs: Vec<usize> = g_clean
            .out_neighbours(w)
            .iter()
            .chain(g_clean.in_neighbours(w))
            .copied()
            .filter(|&x| in_u[x])
            .collect();
        if nbrs.len() > t {
            continue;
        }
        candidates += 1;
        nbrs.sort_unstable();
        let missing = t - nbrs.len();
        let padding: Vec<usize> = members
            .iter()
            .copied()
            .filter(|x| nbrs.binary_search(x).is_err())
            .take(missing)
            .collect();
        debug_assert_eq!(padding.len(), missing);
        nbrs.extend(padding);
        nbrs.sort_unstable();
        classes.entry(nbrs).or_default().push(w);
    }

    let mut best: Option<(&Vec<usize>, &Vec<usize>)> = None;
    for (sig, class) in &classes {
        if best.as_ref().is_none_or(|(_, b)| class.len() > b.len()) {
            best = Some((sig, class));
        }
    }

    let mut record = RoundRecord {
        u_before: members.len(),
        signature_size: t,
        candidates,
        class_size: 0,
        added: 0,
        u_after: members.len(),
        status: RoundStatus::NoProgress,
        signature: Vec::new(),
        inserted: Vec::new(),
    };
    let Some((signature, class)) = best else {
        return Err(NoProgress { record });
    };

    let class_set: VertexSet = class.iter().copied().collect();
    let (sub, relabel) = g_clean
        .induced_subgraph(&class_set)
        .expect("class vertices belong to the graph");
    let mut inserted: Vec<usize> = greedy_acyclic_order(&sub)
        .into_iter()
        .map(|i| relabel.original(i))
        .collect();
    inserted.truncate(k);

    let signature_set: VertexSet = signature.iter().copied().collect();
    let grown = members
        .difference(&signature_set)
        .union(&inserted.iter().copied().collect());

    record.class_size = class.len();
    record.added = inserted.len();
    record.signature = signature.clone();
    record.inserted = inserted;
    if grown.len() <= members.len() {
        return Err(NoProgress { record });
    }
    record.u_after = grown.len();
    record.status = RoundStatus::Grew;
    Ok(Augmented {
        set: SpecialSet::new_unchecked(grown, k),
        record,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Termination {
    /// `eps ≥ 1/8`: greedy extraction without augmentation.
    DenseShortcut,
    TargetReached,
    NoProgress,
}

/// Full record of one [`find_special_set`] call.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AugmentationTrace {
    pub vertex_count: usize,
    /// Vertices dropped for having underlying degree at least `4·eps·N`.
    pub cleaned: usize,
    /// `⌈log₂ N / (20·eps·log₂(1/eps))⌉` when defined.
    pub target: Option<usize>,
    pub guarantee_applies: bool,
    pub rounds: Vec<RoundRecord>,
    pub termination: Termination,
}

/// Builds a large `k`-special set of `g`.
///
/// With `eps ≥ 1/8` this is the greedy acyclic sequence, filtered so every
/// component keeps at most `k` vertices. Otherwise vertices of underlying
/// degree at least `4·eps·N` are set aside and [`augment_special_set_round`]
/// is iterated from `U = ∅` until the size target is met or a round stalls.
/// With `eps = 0` (no edges) there is no target and no cleaning.
pub fn find_special_set(
    g: &OrientedGraph,
    k: usize,
    params: &DensityParams,
) -> (SpecialSet, AugmentationTrace) {
    assert!(k >= 1, "component bound must be positive");
    let n = g.vertex_count();
    let mut trace = AugmentationTrace {
        vertex_count: n,
        cleaned: 0,
        target: None,
        guarantee_applies: params.guarantee_applies(n),
        rounds: Vec::new(),
        termination: Termination::NoProgress,
    };

    if params.eps >= BigRational::new(BigInt::one(), BigInt::from(8)) {
        let order = greedy_acyclic_order(g);
        trace.termination = Termination::DenseShortcut;
        let set = component_bounded_prefix(g, &order, k);
        return (SpecialSet::new_unchecked(set, k), trace);
    }

    let keep: VertexSet = if params.eps.is_zero() {
        g.all_vertices()
    } else {
        let limit = &params.eps * BigRational::from_integer(BigInt::from(4 * n));
        g.vertices()
            .filter(|&v| BigRational::from_integer(BigInt::from(g.degree(v))) < limit)
            .collect()
    };
    trace.cleaned = n - keep.len();
    trace.target = lemma2_target(n, &params.eps)
        .ok()
        .filter(|t| t.is_finite())
        .map(|t| t.ceil().max(0.0) as usize);

    let (clean, relabel) = g.induced_subgraph(&keep).expect("subset of g");
    let mut u = SpecialSet::empty(k);
    loop {
        if trace.target.is_some_and(|t| u.len() >= t) {
            trace.termination = Termination::TargetReached;
            break;
        }
        match augment_special_set_round(&clean, &u, params) {
            Ok(step) => {
                u = step.set;
                trace.rounds.push(lift_record(step.record, &relabel));
            }
            Err(stall) => {
                trace.rounds.push(lift_record(stall.record, &relabel));
                trace.termination = Termination::NoProgress;
                break;
            }
        }
    }
    let lifted = relabel.lift(u.members());
    (SpecialSet::new_unchecked(lifted, k), trace)
}

fn lift_record(mut r: RoundRecord, relabel: &crate::graph::Relabel) -> RoundRecord {
    for v in r.signature.iter_mut().chain(r.inserted.iter_mut()) {
        *v = relabel.original(*v);
    }
    r
}

/// `eps` as a double, for reporting.
pub fn eps_f64(params: &DensityParams) -> f64 {
    rational_to_f64(&params.eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GenSpec, GraphKind};

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn two_triangles() -> OrientedGraph {
        generate(&GenSpec::new(GraphKind::DisjointCycles, 6)).unwrap()
    }

    #[test]
    fn target_formula() {
        assert_eq!(lemma2_target(1 << 20, &ratio(1, 4)).unwrap(), 2.0);
        let t = lemma2_target(1 << 10, &ratio(1, 8)).unwrap();
        assert!((t - 4.0 / 3.0).abs() < 1e-12);
        assert!(lemma2_target(16, &ratio(1, 1)).is_err());
        assert!(lemma2_target(16, &ratio(0, 1)).is_err());
    }

    #[test]
    fn first_round_on_edgeless_graph() {
        let g = OrientedGraph::empty(8);
        let params = DensityParams::new(4, ratio(1, 16));
        let step = augment_special_set_round(&g, &SpecialSet::empty(3), &params).unwrap();
        assert_eq!(step.set.members().as_slice(), &[0, 1, 2]);
        assert_eq!(step.record.candidates, 8);
        assert_eq!(step.record.class_size, 8);
        assert_eq!(step.record.signature_size, 0);
    }

    #[test]
    fn round_on_two_triangles_reaches_four() {
        let g = two_triangles();
        let params = DensityParams::new(4, ratio(1, 100));
        let u = SpecialSet::new(&g, [0, 1].into_iter().collect(), 2).unwrap();
        let step = augment_special_set_round(&g, &u, &params).unwrap();
        // t = ⌈10·|U|/100⌉ = 1; vertex 2 touches both of U so only 3,4,5 qualify
        assert_eq!(step.record.signature_size, 1);
        assert_eq!(step.record.candidates, 3);
        assert_eq!(step.set.len(), 3);
        assert!(g.is_k_special(step.set.members(), 2).unwrap());
        let again = augment_special_set_round(&g, &step.set, &params);
        match again {
            Ok(s) => assert!(g.is_k_special(s.set.members(), 2).unwrap()),
            Err(stall) => assert_eq!(stall.record.status, RoundStatus::NoProgress),
        }
    }

    #[test]
    fn zero_threshold_round_on_two_triangles() {
        let g = two_triangles();
        let params = DensityParams::new(4, ratio(0, 1));
        let u = SpecialSet::new(&g, [0, 1].into_iter().collect(), 2).unwrap();
        let step = augment_special_set_round(&g, &u, &params).unwrap();
        assert_eq!(step.set.members().as_slice(), &[0, 1, 3, 5]);
        assert!(g.is_k_special(step.set.members(), 2).unwrap());
    }

    #[test]
    fn finder_on_edgeless_graph_takes_everything() {
        let g = OrientedGraph::empty(16);
        let (s, trace) = find_special_set(&g, 4, &DensityParams::from_graph(&g, 4));
        assert_eq!(s.len(), 16);
        assert_eq!(trace.termination, Termination::NoProgress);
        let sizes: Vec<usize> = trace.rounds.iter().map(|r| r.u_after).collect();
        assert_eq!(sizes, vec![4, 8, 12, 16, 16]);
    }

    #[test]
    fn finder_on_two_triangles() {
        let g = two_triangles();
        let (s, trace) = find_special_set(&g, 2, &DensityParams::new(4, ratio(6, 36)));
        // 6/36 ≥ 1/8 takes the greedy route
        assert_eq!(trace.termination, Termination::DenseShortcut);
        assert_eq!(s.len(), 4);
        assert!(g.is_k_special(s.members(), 2).unwrap());
    }

    #[test]
    fn dense_tournament_shortcut() {
        let g = generate(&GenSpec::new(GraphKind::Tournament, 64).seed(3)).unwrap();
        let (s, trace) = find_special_set(&g, 6, &DensityParams::new(6, ratio(1, 2)));
        assert_eq!(trace.termination, Termination::DenseShortcut);
        assert!(s.len() >= 6);
        assert!(g.is_k_special(s.members(), 6).unwrap());
    }

    #[test]
    fn sparse_finder_records_rounds() {
        let g = generate(&GenSpec::new(GraphKind::OrientedGnm, 120).edges(150).seed(5)).unwrap();
        let params = DensityParams::from_graph(&g, 8);
        assert!(params.guarantee_applies(120));
        let (s, trace) = find_special_set(&g, 3, &params);
        assert!(g.is_k_special(s.members(), 3).unwrap());
        for r in &trace.rounds {
            if r.status == RoundStatus::Grew {
                assert!(r.u_after > r.u_before);
            }
        }
        assert_eq!(trace.rounds.last().map(|r| r.u_after).unwrap_or(0), s.len());
    }
}
