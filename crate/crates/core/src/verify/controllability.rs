use std::collections::{BTreeMap, VecDeque};

use super::{CheckKind, Counterexample, Verdict};
use crate::automata::{Alphabet, Event, Generator, StateId, Word};

type Pair = (StateId, StateId);

/// Controllability of `L(spec)` with respect to `L(plant)` and the
/// uncontrollable events: `K·A_u ∩ L ⊆ K`.
///
/// Only words of `K ∩ L` are examined; the witness is a shortest `s·u` with
/// `s ∈ K ∩ L`, `s·u ∈ L \ K`.
pub fn is_controllable(spec: &Generator, plant: &Generator, uncontrollable: &Alphabet) -> Verdict {
    let (Some(k0), Some(l0)) = (spec.initial(), plant.initial()) else {
        return Verdict::pass();
    };
    let alphabet = spec.alphabet().union(plant.alphabet());
    let mut parent: BTreeMap<Pair, Option<(Pair, Event)>> = BTreeMap::new();
    parent.insert((k0, l0), None);
    let mut queue = VecDeque::from([(k0, l0)]);
    while let Some((qk, ql)) = queue.pop_front() {
        for u in uncontrollable {
            if plant.enables(ql, u) && !spec.enables(qk, u) {
                let mut w = path_to(&parent, (qk, ql));
                w.push(u.clone());
                return Verdict::fail(Counterexample::new(CheckKind::Controllability, w).with_event(u.clone()));
            }
        }
        for e in &alphabet {
            if let (Some(nk), Some(nl)) = (spec.step(qk, e), plant.step(ql, e)) {
                if let std::collections::btree_map::Entry::Vacant(slot) = parent.entry((nk, nl)) {
                    slot.insert(Some(((qk, ql), e.clone())));
                    queue.push_back((nk, nl));
                }
            }
        }
    }
    Verdict::pass()
}

pub(crate) fn path_to<K: Ord + Clone>(parent: &BTreeMap<K, Option<(K, Event)>>, at: K) -> Word {
    let mut events = Vec::new();
    let mut at = &at;
    while let Some(Some((prev, e))) = parent.get(at) {
        events.push(e.clone());
        at = prev;
    }
    events.reverse();
    Word::from(events)
}
