use super::AgentAlphabet;
use crate::automata::Event;

/// Result of [`check_shared_consistency`]; `violation` holds the first
/// `(i, j, e)` (0-based agents) with `e` observed by `i`, controlled by `j`
/// but not by `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharedCheck {
    pub holds: bool,
    pub violation: Option<(usize, usize, Event)>,
}

/// Checks `Σ_{o,i} ∩ Σ_{c,j} ⊆ Σ_{c,i}` for all agents `i`, `j`.
pub fn check_shared_consistency(agents: &[AgentAlphabet]) -> SharedCheck {
    for (i, a) in agents.iter().enumerate() {
        for (j, b) in agents.iter().enumerate() {
            let bad = a.observable.intersection(&b.controllable).difference(&a.controllable);
            if let Some(e) = bad.iter().next() {
                return SharedCheck {
                    holds: false,
                    violation: Some((i, j, e.clone())),
                };
            }
        }
    }
    SharedCheck {
        holds: true,
        violation: None,
    }
}
