//! Decision procedures with replayable counterexamples.
//!
//! Every check returns a [`Verdict`]. When a property fails, the verdict
//! carries a [`Counterexample`] whose word is shortest among all violations
//! the check explores, ties broken lexicographically by event name.

mod conditional;
mod controllability;
mod coobservability;
mod decomposability;
mod observer;
mod shared;

use std::fmt;

use crate::automata::{Alphabet, Event, Word};
use crate::error::{Error, Result};

pub use conditional::{is_conditionally_controllable, is_two_level_conditionally_controllable};
pub use controllability::is_controllable;
pub use coobservability::{coobservability_verifier_size, is_coobservable, DEFAULT_MAX_AGENTS};
pub use decomposability::is_decomposable;
pub use observer::{is_lcc, is_observer};
pub use shared::{check_shared_consistency, SharedCheck};

/// Which property a counterexample refutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    Controllability,
    Observer,
    Lcc,
    Occ,
    Decomposability,
    Coobservability,
    CondControllabilityItem1,
    CondControllabilityItem2,
    LanguageEquality,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Controllability => "controllability",
            CheckKind::Observer => "observer",
            CheckKind::Lcc => "lcc",
            CheckKind::Occ => "occ",
            CheckKind::Decomposability => "decomposability",
            CheckKind::Coobservability => "coobservability",
            CheckKind::CondControllabilityItem1 => "cond-controllability-item1",
            CheckKind::CondControllabilityItem2 => "cond-controllability-item2",
            CheckKind::LanguageEquality => "language-equality",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Witness of a failed check.
///
/// * controllability: `word` is `s·u` with `u = event` uncontrollable.
/// * observer / lcc / occ: `word` is `s`, `event` the observable event that
///   `P(s)` can be extended by but `s` cannot locally reach.
/// * decomposability: `word` belongs to the composition, not to the spec.
/// * coobservability: `word` is `s`, `event` the illegal continuation, and
///   `lookalikes` lists, for each agent able to disable `event`, a word the
///   agent cannot tell apart from `s` after which `event` is legal.
/// * conditional controllability: `word` as for controllability; `agent`
///   (item 2) and `group` identify the failing instance.
/// * language equality: `word` is a shortest word in exactly one of the
///   compared languages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub kind: CheckKind,
    pub word: Word,
    pub event: Option<Event>,
    pub agent: Option<usize>,
    pub group: Option<usize>,
    pub lookalikes: Vec<(usize, Word)>,
}

impl Counterexample {
    pub fn new(kind: CheckKind, word: Word) -> Self {
        Counterexample {
            kind,
            word,
            event: None,
            agent: None,
            group: None,
            lookalikes: Vec::new(),
        }
    }

    pub fn with_event(mut self, e: Event) -> Self {
        self.event = Some(e);
        self
    }

    pub fn with_agent(mut self, agent: usize) -> Self {
        self.agent = Some(agent);
        self
    }

    pub fn with_group(mut self, group: usize) -> Self {
        self.group = Some(group);
        self
    }
}

/// Outcome of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            counterexample: None,
        }
    }

    pub fn fail(cx: Counterexample) -> Self {
        Verdict {
            holds: false,
            counterexample: Some(cx),
        }
    }

    /// Rewrites the counterexample, if any.
    pub(crate) fn map_cx(self, f: impl FnOnce(Counterexample) -> Counterexample) -> Self {
        Verdict {
            holds: self.holds,
            counterexample: self.counterexample.map(f),
        }
    }
}

/// Observation and control capabilities of one agent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgentAlphabet {
    pub observable: Alphabet,
    pub controllable: Alphabet,
}

impl AgentAlphabet {
    pub fn new(observable: Alphabet, controllable: Alphabet) -> Self {
        AgentAlphabet {
            observable,
            controllable,
        }
    }
}

/// Partition of agents into groups with their coordinator alphabets.
///
/// Group coordinator alphabets already contain the high-level alphabet
/// (the two coordinator levels are merged into the group coordinators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupingPlan {
    pub groups: Vec<Vec<usize>>,
    pub group_alphabets: Vec<Alphabet>,
    pub high_level: Alphabet,
}

impl GroupingPlan {
    /// Checks the plan against the agents' (or subsystems') alphabets:
    /// groups partition the indices, every group alphabet contains the
    /// high-level one and the group's internally shared events, and the
    /// high-level alphabet contains every event shared between groups.
    pub fn validate(&self, alphabets: &[Alphabet]) -> Result<()> {
        let n = alphabets.len();
        let mut seen = vec![false; n];
        for g in &self.groups {
            if g.is_empty() {
                return Err(Error::input("empty group in grouping plan"));
            }
            for &i in g {
                if i >= n {
                    return Err(Error::input(format!("group member {} out of range", i + 1)));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::input(format!("agent {} is in two groups", i + 1)));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::input(format!("agent {} is in no group", i + 1)));
        }
        if self.group_alphabets.len() != self.groups.len() {
            return Err(Error::input(format!(
                "{} groups but {} group coordinator alphabets",
                self.groups.len(),
                self.group_alphabets.len()
            )));
        }
        for (j, (g, ak)) in self.groups.iter().zip(&self.group_alphabets).enumerate() {
            if !self.high_level.is_subset(ak) {
                return Err(Error::input(format!(
                    "group {} coordinator alphabet lacks high-level events {}",
                    j + 1,
                    self.high_level.difference(ak)
                )));
            }
            let members: Vec<Alphabet> = g.iter().map(|&i| alphabets[i].clone()).collect();
            let shared = Alphabet::pairwise_shared(&members);
            if !shared.is_subset(ak) {
                return Err(Error::input(format!(
                    "group {} coordinator alphabet lacks shared events {}",
                    j + 1,
                    shared.difference(ak)
                )));
            }
        }
        let inter = self.inter_group_shared(alphabets);
        if !inter.is_subset(&self.high_level) {
            return Err(Error::input(format!(
                "high-level alphabet lacks inter-group events {}",
                inter.difference(&self.high_level)
            )));
        }
        Ok(())
    }

    /// Union of the alphabets of a group's members.
    pub fn group_union(&self, j: usize, alphabets: &[Alphabet]) -> Alphabet {
        Alphabet::union_all(self.groups[j].iter().map(|&i| &alphabets[i]))
    }

    /// Events shared between members of different groups.
    pub fn inter_group_shared(&self, alphabets: &[Alphabet]) -> Alphabet {
        let unions: Vec<Alphabet> = (0..self.groups.len()).map(|j| self.group_union(j, alphabets)).collect();
        Alphabet::pairwise_shared(&unions)
    }

    /// Group index of every agent.
    pub fn group_of(&self) -> Vec<usize> {
        let n = self.groups.iter().map(|g| g.len()).sum();
        let mut out = vec![0; n];
        for (j, g) in self.groups.iter().enumerate() {
            for &i in g {
                out[i] = j;
            }
        }
        out
    }
}
