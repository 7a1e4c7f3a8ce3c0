//! Supremal controllable sublanguages and two-level coordination synthesis.

mod coordinator;
mod optimality;
mod pipeline;
mod supc;

pub use coordinator::{
    build_coordinator, build_group_alphabet, complete_plan, CoordinatorSpec, Extension, ExtensionReason, PlanRequest,
};
pub use optimality::{verify_optimality, HighLevelRoute, OptimalityReport, Tier, SAFE_ONLY_CAVEAT};
pub use pipeline::{
    check_inclusion_lemma, check_two_level_decomposability, sup_two_cc, synthesize_two_level, GroupResult, Safety,
    SynthesisOptions, SynthesisResult,
};
pub use supc::{closed_loop, sup_c};
