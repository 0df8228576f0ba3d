use super::{ColouringError, EdgeColouring};
use crate::arith::ceil_root;
use crate::graph::{OrientedGraph, Relabel, SpecialSet};

/// Result of [`digit_block_colouring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockColouring {
    pub colouring: EdgeColouring,
    /// `b = ⌈m^{1/c}⌉` (at least 1): no monochromatic path has more than `b`
    /// vertices.
    pub vertex_bound: usize,
}

/// Colours an acyclic graph with `c` colours so that every monochromatic path
/// has at most `⌈m^{1/c}⌉` vertices.
///
/// Vertices are numbered along the topological order and each number is
/// written with `c` digits in base `b`. An edge gets the position (0 = most
/// significant) of the first digit where its endpoints differ. Along a path of
/// colour `d`, digits before `d` stay fixed and digit `d` strictly increases,
/// so the path has at most `b` vertices.
///
/// For `c = 2` the numbering splits into consecutive blocks of `b` vertices:
/// edges inside a block get colour 1 and edges between blocks colour 0.
pub fn digit_block_colouring(g: &OrientedGraph, c: usize) -> Result<BlockColouring, ColouringError> {
    if !(2..=255).contains(&c) {
        return Err(ColouringError::InvalidColourCount(c));
    }
    let order = g.topological_order()?;
    let m = g.vertex_count();
    let b = ceil_root(m, c as u32);

    let mut digits = vec![0usize; m * c];
    for (index, &v) in order.iter().enumerate() {
        let mut x = index;
        for d in (0..c).rev() {
            digits[v * c + d] = x % b;
            x /= b;
        }
    }
    let colours = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            (0..c)
                .find(|&d| digits[u * c + d] != digits[v * c + d])
                .expect("distinct positions differ in some digit") as u8
        })
        .collect();
    Ok(BlockColouring {
        colouring: EdgeColouring {
            colour_count: c as u8,
            colours,
        },
        vertex_bound: b,
    })
}

/// A colouring of the edges inside one special set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetColouring {
    /// The subgraph induced by the set, relabelled by `relabel`.
    pub subgraph: OrientedGraph,
    pub relabel: Relabel,
    /// Colouring of `subgraph`'s edges.
    pub colouring: EdgeColouring,
    /// Largest block bound over the set's components (1 if there are none).
    pub vertex_bound: usize,
}

impl SetColouring {
    /// Edges in original ids with their colours.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), u8)> + '_ {
        self.subgraph
            .edges()
            .iter()
            .zip(self.colouring.colours())
            .map(|(&(a, b), &col)| ((self.relabel.original(a), self.relabel.original(b)), col))
    }
}

/// Applies [`digit_block_colouring`] to each underlying component of `s`.
/// Components share no edges, so the per-component bound holds for all of `s`.
pub fn special_set_colouring(
    g: &OrientedGraph,
    s: &SpecialSet,
    c: usize,
) -> Result<SetColouring, ColouringError> {
    if !g.is_k_special(s.members(), s.k())? {
        return Err(ColouringError::NotSpecial { k: s.k() });
    }
    let (sub, relabel) = g.induced_subgraph(s.members())?;
    let mut colours = vec![u8::MAX; sub.edge_count()];
    let mut vertex_bound = 1;
    for component in sub.underlying_components(&sub.all_vertices())? {
        let (piece, local) = sub.induced_subgraph(&component)?;
        let block = digit_block_colouring(&piece, c)?;
        vertex_bound = vertex_bound.max(block.vertex_bound);
        for (&(a, b), &col) in piece.edges().iter().zip(block.colouring.colours()) {
            let i = sub
                .edge_index(local.original(a), local.original(b))
                .expect("component edge lies in the set");
            colours[i] = col;
        }
    }
    debug_assert!(colours.iter().all(|&col| col != u8::MAX));
    let colouring = EdgeColouring::new(&sub, c as u8, colours)?;
    Ok(SetColouring {
        subgraph: sub,
        relabel,
        colouring,
        vertex_bound,
    })
}
