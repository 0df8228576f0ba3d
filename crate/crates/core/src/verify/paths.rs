use crate::graph::{CyclicError, OrientedGraph};

/// Vertices of a longest directed path of an acyclic graph.
///
/// Dynamic programming over the reversed topological order computes the
/// longest path starting at each vertex. The witness starts at the smallest
/// vertex attaining the maximum and always steps to the smallest successor
/// that keeps the path optimal, which makes it the lexicographically smallest
/// longest path. An edgeless graph yields `[0]`, an empty one `[]`.
pub fn longest_path_dag(g: &OrientedGraph) -> Result<Vec<usize>, CyclicError> {
    let order = g.topological_order()?;
    let n = g.vertex_count();
    let mut from = vec![0usize; n];
    let mut next = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        // out-lists are sorted, so the first strict improvement is the smallest id
        for &w in g.out_neighbours(v) {
            if next[v] == usize::MAX || from[w] + 1 > from[v] {
                from[v] = from[w] + 1;
                next[v] = w;
            }
        }
    }
    let Some(start) = (0..n).max_by_key(|&v| (from[v], std::cmp::Reverse(v))) else {
        return Ok(Vec::new());
    };
    let mut path = vec![start];
    let mut v = start;
    while next[v] != usize::MAX {
        v = next[v];
        path.push(v);
    }
    Ok(path)
}

/// Exact longest simple path of any oriented graph by dynamic programming
/// over vertex subsets.
///
/// Only vertices incident to an edge take part; returns `None` when there are
/// more than `cap` of them. `cap` is clamped to 30.
pub fn longest_path_exact(g: &OrientedGraph, cap: usize) -> Option<Vec<usize>> {
    let active: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    if active.len() > cap.min(30) {
        return None;
    }
    if active.is_empty() {
        return Some(if g.vertex_count() > 0 { vec![0] } else { Vec::new() });
    }
    let a = active.len();
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in active.iter().enumerate() {
        local[v] = i;
    }
    let out: Vec<u32> = active
        .iter()
        .map(|&v| g.out_neighbours(v).iter().fold(0u32, |m, &w| m | 1 << local[w]))
        .collect();
    let inc: Vec<u32> = active
        .iter()
        .map(|&v| g.in_neighbours(v).iter().fold(0u32, |m, &w| m | 1 << local[w]))
        .collect();

    // ends[mask]: vertices at which some simple path covering exactly `mask` ends
    let mut ends = vec![0u32; 1usize << a];
    for v in 0..a {
        ends[1 << v] = 1 << v;
    }
    let mut best_mask = 1usize;
    for mask in 1usize..1 << a {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        if mask.count_ones() > best_mask.count_ones() {
            best_mask = mask;
        }
        let mut bits = e;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut ext = out[v] & !(mask as u32);
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }

    let mut mask = best_mask;
    let mut v = ends[mask].trailing_zeros() as usize;
    let mut rev = vec![v];
    while mask.count_ones() > 1 {
        let rest = mask & !(1 << v);
        let candidates = ends[rest] & inc[v];
        let u = candidates.trailing_zeros() as usize;
        debug_assert!(candidates != 0);
        rev.push(u);
        mask = rest;
        v = u;
    }
    rev.reverse();
    Some(rev.into_iter().map(|i| active[i]).collect())
}
