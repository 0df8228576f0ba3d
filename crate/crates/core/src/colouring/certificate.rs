use serde::{Deserialize, Serialize};

use crate::extraction::SpecialPartition;

/// Arithmetic witness for the path bound of an adversarial colouring.
///
/// A monochromatic path meets the parts in increasing (red) or decreasing
/// (blue) order, takes at most `b` vertices from each part and at most
/// `|W′|` from the remainder, so it has at most `l·b + |W′|` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: u64,
    pub k: u64,
    /// Number of special parts.
    pub l: u64,
    /// Most vertices a monochromatic path can take inside one part.
    pub b: u64,
    /// `|W′|`.
    pub remainder: u64,
    pub vertex_bound: u64,
    /// `vertex_bound − 1`, floored at 0.
    pub edge_bound: u64,
    pub within_169n: bool,
}

impl Certificate {
    pub fn from_counts(n: u64, k: u64, l: u64, b: u64, remainder: u64) -> Self {
        let vertex_bound = l * b + remainder;
        let edge_bound = vertex_bound.saturating_sub(1);
        Self {
            n,
            k,
            l,
            b,
            remainder,
            vertex_bound,
            edge_bound,
            within_169n: edge_bound <= 169 * n,
        }
    }
}

pub fn certificate_bound(partition: &SpecialPartition, per_part_bound: usize) -> Certificate {
    assert!(per_part_bound >= 1, "per-part bound must be positive");
    Certificate::from_counts(
        partition.n as u64,
        partition.k as u64,
        partition.parts.len() as u64,
        per_part_bound as u64,
        partition.remainder.len() as u64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let c = Certificate::from_counts(7, 3, 10, 4, 7);
        assert_eq!(c.vertex_bound, 47);
        assert_eq!(c.edge_bound, 46);
        assert!(c.within_169n);

        let c = Certificate::from_counts(5, 3, 0, 1, 5);
        assert_eq!(c.edge_bound, 4);

        let empty = Certificate::from_counts(2, 1, 0, 1, 0);
        assert_eq!((empty.vertex_bound, empty.edge_bound), (0, 0));
    }

    #[test]
    fn json_keys() {
        let c = Certificate::from_counts(2, 1, 1, 2, 1);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"k":1,"l":1,"b":2,"remainder":1,"vertex_bound":3,"edge_bound":2,"within_169n":true}"#
        );
    }
}
