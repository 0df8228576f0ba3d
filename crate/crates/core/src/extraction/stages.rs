//! Stage bookkeeping for the repeated removal of special sets.
//!
//! With `N = α · n · √(log₂ n)` vertices, stage `i` runs until fewer than
//! `α_i · n · √(log₂ n) = N / 2^i` vertices remain, where `α_i = α / 2^i`, and
//! the density used in that stage is `ε_i = 1/α_i²`. Stages stop at the first
//! `I` with `α_I ≤ 8`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::augment::BoundsError;
use crate::arith::{exact_rational, rational_to_f64};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageSchedule {
    pub n: usize,
    pub vertex_count: usize,
    /// `N / (n √(log₂ n))`, rounded once to a double and then carried exactly.
    pub alpha: BigRational,
    /// `α_0..=α_I`; empty when `α ≤ 8`.
    pub alphas: Vec<BigRational>,
    /// `ε_i = 1/α_i²`, aligned with `alphas`.
    pub epsilons: Vec<BigRational>,
    /// `I`, the number of stages.
    pub stage_count: usize,
}

/// The schedule for a graph on `vertex_count` vertices.
pub fn stage_schedule(vertex_count: usize, n: usize) -> Result<StageSchedule, BoundsError> {
    if n < 2 {
        return Err(BoundsError::InvalidN { n });
    }
    let nf = n as f64;
    let alpha = exact_rational(vertex_count as f64 / (nf * nf.log2().sqrt()));
    Ok(StageSchedule::from_alpha(alpha, n, vertex_count))
}

impl StageSchedule {
    pub fn from_alpha(alpha: BigRational, n: usize, vertex_count: usize) -> Self {
        let eight = BigRational::from_integer(BigInt::from(8));
        let mut alphas = Vec::new();
        if alpha > eight {
            let mut a = alpha.clone();
            loop {
                let done = a <= eight;
                alphas.push(a.clone());
                if done {
                    break;
                }
                a /= BigRational::from_integer(BigInt::from(2));
            }
        }
        let epsilons = alphas.iter().map(|a| (a * a).recip()).collect();
        let stage_count = alphas.len().saturating_sub(1);
        Self {
            n,
            vertex_count,
            alpha,
            alphas,
            epsilons,
            stage_count,
        }
    }

    /// Exclusive vertex-count threshold ending stage `i`: the stage runs while
    /// `remaining · 2^i ≥ N`.
    pub fn stage_continues(&self, stage: usize, remaining: usize) -> bool {
        (remaining as u128) << stage >= self.vertex_count as u128
    }

    /// `80 log₂(α_i) / α_i`, the part count of stage `i` in units of
    /// `n / √(log₂ n)`.
    pub fn stage_coefficient(&self, i: usize) -> f64 {
        let a = rational_to_f64(&self.alphas[i]);
        80.0 * a.log2() / a
    }

    /// `Σ_{0 ≤ i ≤ I} 80 log₂(α_i) / α_i` (zero for an empty schedule).
    pub fn total_coefficient(&self) -> f64 {
        (0..self.alphas.len()).map(|i| self.stage_coefficient(i)).sum()
    }

    /// Upper bound on stage `i`'s part count when each removed part meets the
    /// size target `α_i² log₂ n / (40 log₂ α_i)`.
    pub fn stage_part_bound(&self, i: usize) -> f64 {
        let nf = self.n as f64;
        self.stage_coefficient(i) * nf / nf.log2().sqrt()
    }

    /// The part count expressed directly as removed vertices over part size:
    /// `α_{i-1} n √L / (α_i² L / (40 log₂ α_i))` with `L = log₂ n`.
    pub fn stage_part_ratio(&self, i: usize) -> f64 {
        assert!(i >= 1);
        let nf = self.n as f64;
        let l = nf.log2();
        let prev = rational_to_f64(&self.alphas[i - 1]);
        let a = rational_to_f64(&self.alphas[i]);
        prev * nf * l.sqrt() / (a * a * l / (40.0 * a.log2()))
    }

    /// `Σ_{2 ≤ j ≤ I+2} 80 j / 2^j`, the dyadic majorant of
    /// [`total_coefficient`](Self::total_coefficient).
    pub fn dyadic_majorant(&self) -> BigRational {
        (2..=self.stage_count + 2)
            .map(|j| dyadic(80 * j as i64, j as u32))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn summary(&self) -> ScheduleSummary {
        ScheduleSummary {
            n: self.n,
            vertices: self.vertex_count,
            alpha: rational_to_f64(&self.alpha),
            stage_count: self.stage_count,
            alphas: self.alphas.iter().map(rational_to_f64).collect(),
            epsilons: self.epsilons.iter().map(rational_to_f64).collect(),
            stage_coefficients: (0..self.alphas.len()).map(|i| self.stage_coefficient(i)).collect(),
            total_coefficient: self.total_coefficient(),
        }
    }
}

/// JSON view of a [`StageSchedule`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScheduleSummary {
    pub n: usize,
    pub vertices: usize,
    pub alpha: f64,
    pub stage_count: usize,
    pub alphas: Vec<f64>,
    pub epsilons: Vec<f64>,
    pub stage_coefficients: Vec<f64>,
    pub total_coefficient: f64,
}

fn dyadic(numer: i64, exp: u32) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::one() << exp)
}

/// `40 · Σ_{0 ≤ i ≤ K} (i+1) / 2^i`.
pub fn geometric_partial_sum(k: usize) -> BigRational {
    (0..=k)
        .map(|i| dyadic(40 * (i as i64 + 1), i as u32))
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// `40 · Σ_{i > K} (i+1) / 2^i = 40 (K+3) / 2^K`.
pub fn geometric_tail(k: usize) -> BigRational {
    dyadic(40 * (k as i64 + 3), k as u32)
}
