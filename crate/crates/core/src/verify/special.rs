use crate::graph::OrientedGraph;

pub const MAX_BRUTE_FORCE_VERTICES: usize = 20;

/// Largest `k`-special subset size, by exhaustive search.
///
/// Subsets are grown vertex by vertex. A set that fails to be `k`-special has
/// no `k`-special superset (cycles persist and components only merge), so
/// such branches are cut. Works on bitmasks and does not share code with
/// [`OrientedGraph::is_k_special`].
pub fn brute_force_max_special(g: &OrientedGraph, k: usize) -> Option<usize> {
    let n = g.vertex_count();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return None;
    }
    let out: Vec<u32> = g
        .vertices()
        .map(|v| g.out_neighbours(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let und: Vec<u32> = g
        .vertices()
        .map(|v| g.in_neighbours(v).iter().fold(out[v], |m, &w| m | 1 << w))
        .collect();
    let mut search = Search {
        n,
        k,
        out,
        und,
        best: 0,
    };
    search.grow(0, 0, 0);
    Some(search.best)
}

struct Search {
    n: usize,
    k: usize,
    out: Vec<u32>,
    und: Vec<u32>,
    best: usize,
}

impl Search {
    fn grow(&mut self, next: usize, set: u32, size: usize) {
        self.best = self.best.max(size);
        if next == self.n || size + (self.n - next) <= self.best {
            return;
        }
        let with = set | 1 << next;
        if self.still_special(with, next) {
            self.grow(next + 1, with, size + 1);
        }
        self.grow(next + 1, set, size);
    }

    // `set` minus `v` is k-special; check the component of `v`.
    fn still_special(&self, set: u32, v: usize) -> bool {
        let mut comp = 1u32 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.und[x] & set & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        if comp.count_ones() as usize > self.k {
            return false;
        }
        // a new cycle must pass through v: look for a directed route back to v
        let mut seen = 0u32;
        let mut frontier = self.out[v] & set;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            if x == v {
                return false;
            }
            if seen & 1 << x != 0 {
                continue;
            }
            seen |= 1 << x;
            frontier |= self.out[x] & set & !seen;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GenSpec, GraphKind};
    use crate::graph::VertexSet;

    /// Plain enumeration over all 2^N subsets using the library predicate.
    fn naive(g: &OrientedGraph, k: usize) -> usize {
        (0u32..1 << g.vertex_count())
            .filter(|&mask| {
                let s: VertexSet = g.vertices().filter(|&v| mask & 1 << v != 0).collect();
                g.is_k_special(&s, k).unwrap()
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn examples() {
        let t = generate(&GenSpec::new(GraphKind::DisjointCycles, 6)).unwrap();
        assert_eq!(brute_force_max_special(&t, 2), Some(4));
        assert_eq!(brute_force_max_special(&OrientedGraph::empty(5), 1), Some(5));
        let p = generate(&GenSpec::new(GraphKind::Dipath, 6)).unwrap();
        assert_eq!(brute_force_max_special(&p, 2), Some(4));
        assert_eq!(brute_force_max_special(&OrientedGraph::empty(21), 1), None);
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        for seed in 0..60u64 {
            let n = 1 + seed as usize % 9;
            let m = (seed as usize * 5) % (crate::generate::pair_count(n) + 1);
            let g = generate(&GenSpec::new(GraphKind::OrientedGnm, n).edges(m).seed(seed)).unwrap();
            for k in 1..=3 {
                assert_eq!(brute_force_max_special(&g, k), Some(naive(&g, k)), "seed {seed} k {k}");
            }
        }
    }
}
