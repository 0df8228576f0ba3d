//! Extraction of acyclic and special vertex sets, and the staged partition of
//! a graph into special parts plus a small remainder.

mod augment;
mod greedy;
mod partition;
mod stages;

pub use augment::{
    augment_special_set_round, eps_f64, find_special_set, lemma2_target, AugmentationTrace,
    Augmented, BoundsError, DensityParams, NoProgress, RoundRecord, RoundStatus, Termination,
};
pub use greedy::{greedy_acyclic_order, greedy_acyclic_subset};
pub use partition::{
    special_partition, special_partition_with_report, PartSource, PartitionError,
    PartitionReport, SpecialPartition, StageRecord,
};
pub use stages::{
    geometric_partial_sum, geometric_tail, stage_schedule, ScheduleSummary, StageSchedule,
};
