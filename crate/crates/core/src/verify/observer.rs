//! Observer property and local control consistency of natural projections.
//!
//! Both checks run on the pair automaton `H` whose states are `(q, X)`: `q`
//! is the plant state after a word `s` and `X` the set of plant states
//! consistent with the projection `P(s)` (the state of the determinized
//! projection). It suffices to check one observable step at every reachable
//! pair: if each observable continuation of `P(s)` can be realized locally
//! from `q`, an induction over the continuation gives the full property.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::controllability::path_to;
use super::{CheckKind, Counterexample, Verdict};
use crate::automata::{closure_by, silent_closure, Alphabet, Event, Generator, StateId, Word};
use crate::error::{Error, Result};

type Pair = (StateId, BTreeSet<StateId>);

/// Breadth-first traversal of the pair automaton; `check` is called on each
/// reachable pair in shortlex order of the word reaching it and may return
/// the offending event.
fn search_pairs(
    plant: &Generator,
    onto: &Alphabet,
    mut check: impl FnMut(StateId, &BTreeSet<StateId>) -> Option<Event>,
) -> Option<(Word, Event)> {
    let q0 = plant.initial()?;
    let start: Pair = (q0, silent_closure(plant, [q0], onto));
    let mut parent: BTreeMap<Pair, Option<(Pair, Event)>> = BTreeMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(pair) = queue.pop_front() {
        if let Some(e) = check(pair.0, &pair.1) {
            let w = path_to(&parent, pair);
            return Some((w, e));
        }
        let (q, set) = &pair;
        for (e, d) in plant.transitions_from(*q) {
            let next_set = if onto.contains(e) {
                let targets = set.iter().filter_map(|&x| plant.step(x, e));
                silent_closure(plant, targets, onto)
            } else {
                set.clone()
            };
            let next = (d, next_set);
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((pair.clone(), e.clone())));
                queue.push_back(next);
            }
        }
    }
    None
}

fn require_subset(onto: &Alphabet, plant: &Generator) -> Result<()> {
    if onto.is_subset(plant.alphabet()) {
        Ok(())
    } else {
        Err(Error::input(format!(
            "projection alphabet contains events {} outside the plant alphabet",
            onto.difference(plant.alphabet())
        )))
    }
}

fn enabled_somewhere<'a>(plant: &Generator, states: impl IntoIterator<Item = &'a StateId>, e: &Event) -> bool {
    states.into_iter().any(|&x| plant.enables(x, e))
}

/// Whether the natural projection onto `onto` is an `L(plant)`-observer.
///
/// Counterexample: word `s` and event `σ` such that `P(s)σ ∈ P(L)` but no
/// continuation of `s` by non-`onto` events enables `σ`.
pub fn is_observer(plant: &Generator, onto: &Alphabet) -> Result<Verdict> {
    require_subset(onto, plant)?;
    let found = search_pairs(plant, onto, |q, set| {
        let local = silent_closure(plant, [q], onto);
        onto.iter()
            .find(|e| enabled_somewhere(plant, set, e) && !enabled_somewhere(plant, &local, e))
            .cloned()
    });
    Ok(match found {
        None => Verdict::pass(),
        Some((w, e)) => Verdict::fail(Counterexample::new(CheckKind::Observer, w).with_event(e)),
    })
}

/// Local control consistency of the projection onto `onto`.
///
/// Default mode: for every reachable pair and every uncontrollable `σ ∈
/// onto` enabled after `P(s)`, if some silent path from `q` reaches a state
/// enabling `σ`, then some silent path made only of uncontrollable events
/// does.
///
/// `strict_occ` checks the universal variant instead: no silent path that
/// contains a controllable event may reach a state enabling such a `σ`.
pub fn is_lcc(plant: &Generator, onto: &Alphabet, uncontrollable: &Alphabet, strict_occ: bool) -> Result<Verdict> {
    require_subset(onto, plant)?;
    let silent = |e: &Event| !onto.contains(e);
    let silent_unc = |e: &Event| !onto.contains(e) && uncontrollable.contains(e);
    let found = search_pairs(plant, onto, |q, set| {
        let candidates = onto
            .iter()
            .filter(|e| uncontrollable.contains(e) && enabled_somewhere(plant, set, e));
        let all = closure_by(plant, [q], silent);
        if strict_occ {
            // States reachable by a silent path with at least one
            // controllable event.
            let after_ctrl = all.iter().flat_map(|&r| {
                plant
                    .transitions_from(r)
                    .filter(|(e, _)| silent(e) && !uncontrollable.contains(e))
                    .map(|(_, d)| d)
                    .collect::<Vec<_>>()
            });
            let tainted = closure_by(plant, after_ctrl, silent);
            candidates
                .into_iter()
                .find(|e| enabled_somewhere(plant, &tainted, e))
                .cloned()
        } else {
            let unc_only = closure_by(plant, [q], silent_unc);
            candidates
                .into_iter()
                .find(|e| enabled_somewhere(plant, &all, e) && !enabled_somewhere(plant, &unc_only, e))
                .cloned()
        }
    });
    let kind = if strict_occ { CheckKind::Occ } else { CheckKind::Lcc };
    Ok(match found {
        None => Verdict::pass(),
        Some((w, e)) => Verdict::fail(Counterexample::new(kind, w).with_event(e)),
    })
}
