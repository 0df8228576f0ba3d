use super::{
    certificate_bound, special_set_colouring, Certificate, ColouringError, EdgeColouring, BLUE,
    RED,
};
use crate::extraction::{special_partition_with_report, PartitionReport, SpecialPartition};
use crate::graph::OrientedGraph;

/// Output of [`adversarial_colouring`].
#[derive(Debug, Clone)]
pub struct AdversarialColouring {
    pub colouring: EdgeColouring,
    pub partition: SpecialPartition,
    pub certificate: Certificate,
    pub report: PartitionReport,
}

/// Red/blue colouring of a graph with at most `n² log₂ n` edges in which no
/// monochromatic directed path is longer than the certificate's edge bound.
///
/// * inside a part: the two-colour digit block colouring of its components;
/// * between parts `U_i → U_j`: red if `i < j`, blue if `i > j`;
/// * into the remainder `W′` from a part: red; out of `W′` into a part: blue;
/// * inside `W′`: red if the tail has the smaller id, blue otherwise.
///
/// Both colour classes are acyclic. Red edges respect the order "parts by
/// index (each in its own topological order), then `W′` by increasing id";
/// blue edges respect "`W′` by decreasing id, then parts by decreasing index".
pub fn adversarial_colouring(g: &OrientedGraph, n: usize) -> Result<AdversarialColouring, ColouringError> {
    let (partition, report) = special_partition_with_report(g, n)?;
    let owner = partition.part_index(g.vertex_count());

    let mut colours = vec![u8::MAX; g.edge_count()];
    let mut b = 1usize;
    for part in &partition.parts {
        let sc = special_set_colouring(g, part, 2)?;
        b = b.max(sc.vertex_bound);
        for ((u, v), col) in sc.edges() {
            let i = g.edge_index(u, v).expect("part edge lies in g");
            colours[i] = col;
        }
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        colours[i] = match (owner[u], owner[v]) {
            (Some(pu), Some(pv)) if pu == pv => continue,
            (Some(pu), Some(pv)) => {
                if pu < pv {
                    RED
                } else {
                    BLUE
                }
            }
            (Some(_), None) => RED,
            (None, Some(_)) => BLUE,
            (None, None) => {
                if u < v {
                    RED
                } else {
                    BLUE
                }
            }
        };
    }

    let colouring = EdgeColouring::new(g, 2, colours)?;
    let certificate = certificate_bound(&partition, b);
    Ok(AdversarialColouring {
        colouring,
        partition,
        certificate,
        report,
    })
}
