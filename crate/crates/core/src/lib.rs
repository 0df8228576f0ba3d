//! Two-colourings of sparse oriented graphs without long monochromatic
//! directed paths.
//!
//! Any oriented graph with at most `n² log₂ n` edges can be red/blue coloured
//! so that every monochromatic directed path has at most `169·n` edges. This
//! crate builds such a colouring together with a certificate of the bound, and
//! ships the independent checks needed to confirm it:
//!
//! * [`graph`]: oriented graphs, induced subgraphs, topological orders and
//!   the `k`-special predicate (acyclic sets with small components);
//! * [`extraction`]: greedy acyclic sets, augmentation of special sets and the
//!   staged partition into special parts plus a remainder of at most `n`
//!   vertices;
//! * [`colouring`]: block colourings of acyclic graphs, with any number of
//!   colours, and the full red/blue construction with its [`Certificate`];
//! * [`verify`]: exact longest monochromatic paths and exhaustive maximum
//!   special sets;
//! * [`generate`]: seeded, byte-reproducible instance generators;
//! * [`io`]: the text and JSON formats read and written by the CLI.
//!
//! ```
//! use dipaths::generate::{generate, GenSpec, GraphKind};
//! use dipaths::colouring::adversarial_colouring;
//! use dipaths::verify::{verify_certificate, DEFAULT_EXACT_CAP};
//!
//! let g = generate(&GenSpec::new(GraphKind::Tournament, 40).seed(7)).unwrap();
//! let out = adversarial_colouring(&g, 16).unwrap();
//! let check = verify_certificate(&g, &out.colouring, &out.certificate, DEFAULT_EXACT_CAP).unwrap();
//! assert!(check.ok && check.within_169n);
//! ```
//!
//! A longer guide lives in the `book/` directory of the repository.
//!
//! [`Certificate`]: colouring::Certificate

pub mod arith;
pub mod colouring;
pub mod extraction;
pub mod generate;
pub mod graph;
pub mod io;
pub mod verify;

pub use graph::{OrientedGraph, SpecialSet, VertexSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/extraction.md")]
    mod extraction {}
    #[doc = include_str!("../../../book/src/colouring.md")]
    mod colouring {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
