//! Language operations on generators.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::alphabet::{Alphabet, Event, Word};
use super::generator::{explore, Generator, StateId};
use crate::error::{Error, Result};

/// Synchronous product: the result accepts `s` over the union alphabet iff
/// every part accepts the projection of `s` onto its own alphabet.
pub fn sync_product(parts: &[&Generator]) -> Result<Generator> {
    if parts.is_empty() {
        return Err(Error::input("sync_product needs at least one part"));
    }
    let alphabet = Alphabet::union_all(parts.iter().map(|g| g.alphabet()));
    let init: Option<Vec<StateId>> = parts.iter().map(|g| g.initial()).collect();
    let (g, _) = explore(alphabet.clone(), init, |qs| {
        alphabet
            .iter()
            .filter_map(|e| {
                let next: Option<Vec<StateId>> = parts
                    .iter()
                    .zip(qs)
                    .map(|(g, &q)| {
                        if g.alphabet().contains(e) {
                            g.step(q, e)
                        } else {
                            Some(q)
                        }
                    })
                    .collect();
                next.map(|n| (e.clone(), n))
            })
            .collect()
    });
    Ok(g)
}

/// Convenience wrapper for two operands.
pub fn sync2(a: &Generator, b: &Generator) -> Generator {
    sync_product(&[a, b]).expect("two parts")
}

/// Language intersection. A word is accepted iff both operands accept it;
/// an event outside an operand's alphabet is rejected by that operand.
pub fn intersection(a: &Generator, b: &Generator) -> Generator {
    let alphabet = a.alphabet().union(b.alphabet());
    let init = a.initial().zip(b.initial());
    let (g, _) = explore(alphabet.clone(), init, |&(p, q)| {
        alphabet
            .iter()
            .filter_map(|e| Some((e.clone(), (a.step(p, e)?, b.step(q, e)?))))
            .collect()
    });
    g
}

/// Language union of two prefix-closed languages.
pub fn union(a: &Generator, b: &Generator) -> Generator {
    let alphabet = a.alphabet().union(b.alphabet());
    let init = match (a.initial(), b.initial()) {
        (None, None) => None,
        pair => Some(pair),
    };
    let (g, _) = explore(alphabet.clone(), init, |&(p, q)| {
        alphabet
            .iter()
            .filter_map(|e| {
                let np = p.and_then(|p| a.step(p, e));
                let nq = q.and_then(|q| b.step(q, e));
                (np.is_some() || nq.is_some()).then(|| (e.clone(), (np, nq)))
            })
            .collect()
    });
    g
}

/// Closure of `states` under transitions on events outside `observable`.
pub(crate) fn silent_closure(
    g: &Generator,
    states: impl IntoIterator<Item = StateId>,
    observable: &Alphabet,
) -> BTreeSet<StateId> {
    closure_by(g, states, |e| !observable.contains(e))
}

pub(crate) fn closure_by(
    g: &Generator,
    states: impl IntoIterator<Item = StateId>,
    allowed: impl Fn(&Event) -> bool,
) -> BTreeSet<StateId> {
    let mut seen: BTreeSet<StateId> = BTreeSet::new();
    let mut stack: Vec<StateId> = Vec::new();
    for q in states {
        if seen.insert(q) {
            stack.push(q);
        }
    }
    while let Some(q) = stack.pop() {
        for (e, d) in g.transitions_from(q) {
            if allowed(e) && seen.insert(d) {
                stack.push(d);
            }
        }
    }
    seen
}

/// Natural projection onto `onto` by subset construction, treating every
/// other event as silent. Events of `onto` that `g` does not declare are
/// ignored, so the result is over `onto ∩ g.alphabet()`.
pub fn project(g: &Generator, onto: &Alphabet) -> Generator {
    let extra = onto.difference(g.alphabet());
    if !extra.is_empty() {
        log::warn!("project: ignoring events {extra} not in the generator alphabet");
    }
    let observable = onto.intersection(g.alphabet());
    let init = g.initial().map(|q0| silent_closure(g, [q0], &observable));
    let (p, _) = explore(observable.clone(), init, |set| {
        observable
            .iter()
            .filter_map(|e| {
                let targets: Vec<StateId> = set.iter().filter_map(|&q| g.step(q, e)).collect();
                (!targets.is_empty()).then(|| (e.clone(), silent_closure(g, targets, &observable)))
            })
            .collect()
    });
    p
}

/// Projection followed by state minimization.
pub fn project_minimal(g: &Generator, onto: &Alphabet) -> Generator {
    project(g, onto).minimize()
}

/// Inverse projection into `ambient`: self-loops on every event of
/// `ambient` that `g` does not declare.
pub fn inverse_project(g: &Generator, ambient: &Alphabet) -> Result<Generator> {
    if !g.alphabet().is_subset(ambient) {
        return Err(Error::input(format!(
            "inverse_project: alphabet {{{}}} is not contained in {{{}}}",
            g.alphabet(),
            ambient
        )));
    }
    let extra = ambient.difference(g.alphabet());
    let (lifted, _) = explore(ambient.clone(), g.initial(), |&q| {
        let mut out: Vec<(Event, StateId)> = g.transitions_from(q).map(|(e, d)| (e.clone(), d)).collect();
        out.extend(extra.iter().map(|e| (e.clone(), q)));
        out.sort();
        out
    });
    Ok(lifted)
}

/// Comparison mode for [`language_includes`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InclusionMode {
    /// `L(b) ⊆ L(a)`
    Subset,
    /// `L(a) = L(b)`
    Equal,
}

/// Result of a language comparison: on failure, a shortest distinguishing
/// word (ties broken lexicographically by event name).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    pub holds: bool,
    pub witness: Option<Word>,
}

/// Tests `L(b) ⊆ L(a)` or `L(a) = L(b)`.
pub fn language_includes(a: &Generator, b: &Generator, mode: InclusionMode) -> Inclusion {
    let alphabet = a.alphabet().union(b.alphabet());
    type Pair = (Option<StateId>, Option<StateId>);
    let violates = |&(qa, qb): &Pair| match mode {
        InclusionMode::Subset => qb.is_some() && qa.is_none(),
        InclusionMode::Equal => qa.is_some() != qb.is_some(),
    };
    let start: Pair = (a.initial(), b.initial());
    if start == (None, None) {
        return Inclusion {
            holds: true,
            witness: None,
        };
    }
    let mut parent: BTreeMap<Pair, Option<(Pair, Event)>> = BTreeMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some(pair) = queue.pop_front() {
        if violates(&pair) {
            return Inclusion {
                holds: false,
                witness: Some(trace_back(&parent, pair)),
            };
        }
        let (qa, qb) = pair;
        // A dead side cannot lead to a shorter violation.
        if qa.is_none() || qb.is_none() {
            continue;
        }
        for e in &alphabet {
            let next = (qa.and_then(|q| a.step(q, e)), qb.and_then(|q| b.step(q, e)));
            if next == (None, None) || parent.contains_key(&next) {
                continue;
            }
            parent.insert(next, Some((pair, e.clone())));
            queue.push_back(next);
        }
    }
    Inclusion {
        holds: true,
        witness: None,
    }
}

fn trace_back<K: Ord + Copy>(parent: &BTreeMap<K, Option<(K, Event)>>, mut at: K) -> Word {
    let mut events = Vec::new();
    while let Some(Some((prev, e))) = parent.get(&at) {
        events.push(e.clone());
        at = *prev;
    }
    events.reverse();
    Word::from(events)
}

pub fn language_equal(a: &Generator, b: &Generator) -> bool {
    language_includes(a, b, InclusionMode::Equal).holds
}

/// `L(sub) ⊆ L(sup)`.
pub fn is_sublanguage(sub: &Generator, sup: &Generator) -> bool {
    language_includes(sup, sub, InclusionMode::Subset).holds
}

/// All words of length at most `maxlen`, ordered by length then
/// lexicographically.
pub fn enumerate_bounded(g: &Generator, maxlen: usize) -> Vec<Word> {
    let Some(q0) = g.initial() else {
        return Vec::new();
    };
    let mut out = vec![Word::empty()];
    let mut level = vec![(Word::empty(), q0)];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for (w, q) in &level {
            for (e, d) in g.transitions_from(*q) {
                next.push((w.then(e), d));
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        level = next;
    }
    out
}
