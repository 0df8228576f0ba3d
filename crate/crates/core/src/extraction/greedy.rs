use crate::graph::{OrientedGraph, VertexSet};

/// Greedy acyclic subset, returned in selection order.
///
/// Repeatedly picks a vertex of minimum out-degree among the survivors
/// (smallest id on ties) and discards it together with its out-neighbours.
/// Each pick has no edge towards any later pick, so the picks form an acyclic
/// set. In an oriented graph on `m` survivors the minimum out-degree is at most
/// `(m-1)/2`, which gives at least `⌊log₂ m⌋ + 1` picks.
pub fn greedy_acyclic_order(g: &OrientedGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut outdeg: Vec<usize> = g.vertices().map(|v| g.out_neighbours(v).len()).collect();
    let mut remaining = n;
    let mut picks = Vec::new();

    let kill = |x: usize, alive: &mut Vec<bool>, outdeg: &mut Vec<usize>| {
        alive[x] = false;
        for &p in g.in_neighbours(x) {
            if alive[p] {
                outdeg[p] -= 1;
            }
        }
    };

    while remaining > 0 {
        let v = g
            .vertices()
            .filter(|&v| alive[v])
            .min_by_key(|&v| (outdeg[v], v))
            .expect("a vertex survives");
        picks.push(v);
        kill(v, &mut alive, &mut outdeg);
        remaining -= 1;
        for &w in g.out_neighbours(v) {
            if alive[w] {
                kill(w, &mut alive, &mut outdeg);
                remaining -= 1;
            }
        }
    }
    picks
}

/// The vertex set of [`greedy_acyclic_order`].
pub fn greedy_acyclic_subset(g: &OrientedGraph) -> VertexSet {
    greedy_acyclic_order(g).into_iter().collect()
}

/// Keeps vertices of `ordered` (an acyclic sequence) in order, skipping any
/// vertex whose addition would create an underlying component with more than
/// `k` vertices. The first `k` vertices are always kept.
pub(crate) fn component_bounded_prefix(g: &OrientedGraph, ordered: &[usize], k: usize) -> VertexSet {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut size = vec![1usize; n];
    let mut member = vec![false; n];
    let mut kept = Vec::new();

    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    for &v in ordered {
        let mut roots: Vec<usize> = g
            .out_neighbours(v)
            .iter()
            .chain(g.in_neighbours(v))
            .filter(|&&w| member[w])
            .map(|&w| find(&mut parent, w))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        let merged: usize = 1 + roots.iter().map(|&r| size[r]).sum::<usize>();
        if merged > k {
            continue;
        }
        member[v] = true;
        kept.push(v);
        for r in roots {
            parent[r] = v;
            size[v] += size[r];
        }
    }
    kept.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::floor_log2;
    use crate::generate::{generate, GenSpec, GraphKind};
    use proptest::prelude::*;

    #[test]
    fn three_cycle_gives_two_vertices() {
        let c = OrientedGraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        // all out-degrees 1: pick 0, drop 1; then pick 2
        assert_eq!(greedy_acyclic_order(&c), vec![0, 2]);
    }

    #[test]
    fn transitive_tournament_keeps_everything() {
        let t = generate(&GenSpec::new(GraphKind::Transitive, 8)).unwrap();
        // each step takes the current sink
        assert_eq!(greedy_acyclic_order(&t), vec![7, 6, 5, 4, 3, 2, 1, 0]);
    }

    #[test]
    fn edgeless_and_empty() {
        assert_eq!(greedy_acyclic_subset(&OrientedGraph::empty(5)).len(), 5);
        assert!(greedy_acyclic_subset(&OrientedGraph::empty(0)).is_empty());
    }

    #[test]
    fn bounded_prefix_respects_components() {
        let p = generate(&GenSpec::new(GraphKind::Dipath, 6)).unwrap();
        let kept = component_bounded_prefix(&p, &[0, 1, 2, 3, 4, 5], 2);
        assert_eq!(kept.as_slice(), &[0, 1, 3, 4]);
        assert!(p.is_k_special(&kept, 2).unwrap());
    }

    proptest! {
        #[test]
        fn greedy_is_acyclic_and_large(n in 1usize..60, density in 0.0f64..1.0, seed: u64) {
            let m = (density * crate::generate::pair_count(n) as f64) as usize;
            let g = generate(&GenSpec::new(GraphKind::OrientedGnm, n).edges(m).seed(seed)).unwrap();
            let s = greedy_acyclic_subset(&g);
            let (sub, _) = g.induced_subgraph(&s).unwrap();
            prop_assert!(sub.is_acyclic());
            prop_assert!(s.len() >= floor_log2(n) + 1);
        }
    }
}
