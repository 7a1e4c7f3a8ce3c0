//! Deterministic generators and the language operations built on them.

mod alphabet;
mod generator;
mod ops;

pub use alphabet::{ev, Alphabet, Event, Word};
pub use generator::{Generator, StateId};
pub use ops::{
    enumerate_bounded, intersection, inverse_project, is_sublanguage, language_equal, language_includes, project,
    project_minimal, sync2, sync_product, union, Inclusion, InclusionMode,
};

pub(crate) use generator::explore;
pub(crate) use ops::{closure_by, silent_closure};
