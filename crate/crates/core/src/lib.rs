//! Two-level coordination control for prefix-closed specifications over
//! modular discrete-event plants, and its use for decentralized supervisory
//! control with supervisors that communicate through group coordinators.
//!
//! The crate is organized bottom-up:
//!
//! * [`automata`]: deterministic generators, synchronous product, natural
//!   projection, language comparison.
//! * [`verify`]: decision procedures (controllability, observer, local
//!   control consistency, decomposability, conditional controllability,
//!   coobservability).
//! * [`synthesis`]: supremal controllable sublanguages, coordinator
//!   construction and the two-level synthesis pipeline.
//! * [`decentralized`]: translation of a decentralized control problem into
//!   the coordination setting, agent grouping and end-to-end solving.
//! * [`io`]: text formats for automata, problems and reports.

pub mod automata;
pub mod cli;
pub mod decentralized;
mod error;
pub mod io;
pub mod synthesis;
pub mod verify;

pub use error::{Error, Result};
