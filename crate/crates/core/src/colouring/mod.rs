//! Edge colourings that keep monochromatic directed paths short.
//!
//! Colour `0` is red and colour `1` is blue wherever two colours are used.

mod adversarial;
mod block;
mod certificate;

use thiserror::Error;

pub use adversarial::{adversarial_colouring, AdversarialColouring};
pub use block::{digit_block_colouring, special_set_colouring, BlockColouring, SetColouring};
pub use certificate::{certificate_bound, Certificate};
pub use crate::extraction::lemma2_target;

use crate::extraction::PartitionError;
use crate::graph::{CyclicError, GraphError, OrientedGraph};

pub const RED: u8 = 0;
pub const BLUE: u8 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("input is not acyclic: {0}")]
    CyclicInput(#[from] CyclicError),
    #[error("vertex set is not {k}-special")]
    NotSpecial { k: usize },
    #[error("colour count {0} is outside 2..=255")]
    InvalidColourCount(usize),
    #[error("colouring has {got} entries for {expected} edges")]
    NotTotal { expected: usize, got: usize },
    #[error("colour {colour} is not below the colour count {colour_count}")]
    ColourOutOfRange { colour: u8, colour_count: u8 },
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A total assignment of colours `0..colour_count` to the edges of one graph,
/// stored in that graph's canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    colour_count: u8,
    colours: Vec<u8>,
}

impl EdgeColouring {
    /// Checks totality against `g` and the range of every colour.
    pub fn new(g: &OrientedGraph, colour_count: u8, colours: Vec<u8>) -> Result<Self, ColouringError> {
        if colours.len() != g.edge_count() {
            return Err(ColouringError::NotTotal {
                expected: g.edge_count(),
                got: colours.len(),
            });
        }
        if let Some(&colour) = colours.iter().find(|&&c| c >= colour_count) {
            return Err(ColouringError::ColourOutOfRange {
                colour,
                colour_count,
            });
        }
        Ok(Self {
            colour_count,
            colours,
        })
    }

    /// Every edge of `g` gets `colour`.
    pub fn uniform(g: &OrientedGraph, colour_count: u8, colour: u8) -> Self {
        assert!(colour < colour_count);
        Self {
            colour_count,
            colours: vec![colour; g.edge_count()],
        }
    }

    pub fn colour_count(&self) -> u8 {
        self.colour_count
    }

    /// Colours in canonical edge order.
    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    pub fn colour_of(&self, g: &OrientedGraph, u: usize, v: usize) -> Option<u8> {
        g.edge_index(u, v).map(|i| self.colours[i])
    }

    /// The spanning subgraph formed by the edges of colour `c`.
    pub fn class(&self, g: &OrientedGraph, c: u8) -> OrientedGraph {
        let edges = g
            .edges()
            .iter()
            .zip(&self.colours)
            .filter(|&(_, &col)| col == c)
            .map(|(&e, _)| e)
            .collect();
        OrientedGraph::from_sorted_unchecked(g.vertex_count(), edges)
    }

    /// Flips edge `i` to `colour`. Intended for building test fixtures.
    pub fn set(&mut self, i: usize, colour: u8) {
        assert!(colour < self.colour_count);
        self.colours[i] = colour;
    }
}
