//! Deterministic generators of prefix-closed languages.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use super::alphabet::{Alphabet, Event, Word};
use crate::error::{Error, Result};

pub type StateId = usize;

/// A deterministic finite generator. Every state is reachable from the
/// initial state and every state is accepting, so the generated language is
/// prefix-closed. A generator without states represents the empty language.
///
/// Values are always kept in canonical form: states are numbered in
/// breadth-first discovery order from the initial state, exploring events in
/// name order. Two generators with the same transition structure therefore
/// compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Generator {
    alphabet: Alphabet,
    delta: Vec<BTreeMap<Event, StateId>>,
}

impl Generator {
    /// Builds a generator from raw parts, validating determinism and event
    /// membership, then trims and renumbers it.
    pub fn from_transitions<I>(
        alphabet: Alphabet,
        num_states: usize,
        initial: Option<StateId>,
        transitions: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (StateId, Event, StateId)>,
    {
        let mut delta = vec![BTreeMap::new(); num_states];
        for (src, e, dst) in transitions {
            if src >= num_states || dst >= num_states {
                return Err(Error::input(format!(
                    "transition {src} {e} {dst} references a state outside 0..{num_states}"
                )));
            }
            if !alphabet.contains(&e) {
                return Err(Error::input(format!("event {e} is not in the alphabet")));
            }
            if delta[src].insert(e.clone(), dst).is_some() {
                return Err(Error::input(format!(
                    "nondeterministic: state {src} has two transitions on {e}"
                )));
            }
        }
        match initial {
            Some(q) if q >= num_states => Err(Error::input(format!("initial state {q} outside 0..{num_states}"))),
            _ => Ok(Self::canonical_from(alphabet, &delta, initial)),
        }
    }

    /// The empty language over `alphabet`.
    pub fn empty(alphabet: Alphabet) -> Self {
        Generator {
            alphabet,
            delta: Vec::new(),
        }
    }

    /// The language {ε} over `alphabet`.
    pub fn epsilon(alphabet: Alphabet) -> Self {
        Generator {
            alphabet,
            delta: vec![BTreeMap::new()],
        }
    }

    /// One state with a self-loop on every event: the language `alphabet*`.
    pub fn universal(alphabet: Alphabet) -> Self {
        let loops = alphabet.iter().map(|e| (e.clone(), 0)).collect();
        Generator {
            alphabet,
            delta: vec![loops],
        }
    }

    /// Prefix closure of a finite set of words, as a prefix tree.
    pub fn from_words<'a, I>(alphabet: Alphabet, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut delta: Vec<BTreeMap<Event, StateId>> = vec![BTreeMap::new()];
        for w in words {
            let mut q = 0;
            for e in w {
                if !alphabet.contains(e) {
                    return Err(Error::input(format!("event {e} is not in the alphabet")));
                }
                q = match delta[q].get(e) {
                    Some(&next) => next,
                    None => {
                        delta.push(BTreeMap::new());
                        let next = delta.len() - 1;
                        delta[q].insert(e.clone(), next);
                        next
                    }
                };
            }
        }
        Ok(Self::canonical_from(alphabet, &delta, Some(0)))
    }

    fn canonical_from(alphabet: Alphabet, delta: &[BTreeMap<Event, StateId>], initial: Option<StateId>) -> Self {
        let (g, _) = explore(alphabet, initial, |&q| {
            delta[q].iter().map(|(e, &d)| (e.clone(), d)).collect()
        });
        g
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().map(BTreeMap::len).sum()
    }

    /// Initial state; `None` for the empty language.
    pub fn initial(&self) -> Option<StateId> {
        if self.delta.is_empty() {
            None
        } else {
            Some(0)
        }
    }

    pub fn is_empty_language(&self) -> bool {
        self.delta.is_empty()
    }

    pub fn step(&self, q: StateId, e: &Event) -> Option<StateId> {
        self.delta[q].get(e).copied()
    }

    /// Outgoing transitions of `q` in event-name order.
    pub fn transitions_from(&self, q: StateId) -> impl Iterator<Item = (&Event, StateId)> {
        self.delta[q].iter().map(|(e, &d)| (e, d))
    }

    pub fn enables(&self, q: StateId, e: &Event) -> bool {
        self.delta[q].contains_key(e)
    }

    /// All transitions as `(src, event, dst)`, sorted by source then event.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, &Event, StateId)> {
        self.delta
            .iter()
            .enumerate()
            .flat_map(|(q, m)| m.iter().map(move |(e, &d)| (q, e, d)))
    }

    /// State reached by `w`, if `w` is in the language.
    pub fn run(&self, w: &Word) -> Option<StateId> {
        let mut q = self.initial()?;
        for e in w {
            q = self.step(q, e)?;
        }
        Some(q)
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run(w).is_some()
    }

    /// Same language over a larger alphabet declaration, without self-loops:
    /// the added events are simply never enabled.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self> {
        if !self.alphabet.is_subset(&alphabet) {
            return Err(Error::input("with_alphabet: new alphabet must contain the current one"));
        }
        Ok(Generator {
            alphabet,
            delta: self.delta.clone(),
        })
    }

    /// Reachable part. Generators are always stored trimmed, so this only
    /// re-establishes canonical numbering; it exists for symmetry with
    /// externally built raw automata.
    pub fn trim(&self) -> Generator {
        Self::canonical_from(self.alphabet.clone(), &self.delta, self.initial())
    }

    /// Whether the transition graph has a cycle, i.e. the language is infinite.
    pub fn has_cycle(&self) -> bool {
        // Kahn's algorithm on the reachable graph.
        let n = self.num_states();
        let mut indeg = vec![0usize; n];
        for (_, _, d) in self.transitions() {
            indeg[d] += 1;
        }
        let mut queue: VecDeque<StateId> = (0..n).filter(|&q| indeg[q] == 0).collect();
        let mut seen = 0;
        while let Some(q) = queue.pop_front() {
            seen += 1;
            for (_, d) in self.transitions_from(q) {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    queue.push_back(d);
                }
            }
        }
        seen < n
    }

    /// Nerode-minimal equivalent generator (partition refinement; every
    /// state accepting, undefined transitions go to an implicit sink).
    pub fn minimize(&self) -> Generator {
        let n = self.num_states();
        if n == 0 {
            return self.clone();
        }
        let events: Vec<&Event> = self.alphabet.iter().collect();
        let mut class = vec![0usize; n];
        let mut num_classes = 1;
        loop {
            let mut sigs: BTreeMap<(usize, Vec<Option<usize>>), usize> = BTreeMap::new();
            let mut next = vec![0usize; n];
            for q in 0..n {
                let sig: Vec<Option<usize>> = events.iter().map(|e| self.step(q, e).map(|d| class[d])).collect();
                let len = sigs.len();
                next[q] = *sigs.entry((class[q], sig)).or_insert(len);
            }
            let count = sigs.len();
            class = next;
            if count == num_classes {
                break;
            }
            num_classes = count;
        }
        let mut delta = vec![BTreeMap::new(); num_classes];
        for (q, e, d) in self.transitions() {
            delta[class[q]].insert(e.clone(), class[d]);
        }
        Self::canonical_from(self.alphabet.clone(), &delta, Some(class[0]))
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Generator over {:?}, {} states", self.alphabet, self.num_states())?;
        for (q, e, d) in self.transitions() {
            writeln!(f, "  {q} {e} {d}")?;
        }
        Ok(())
    }
}

/// Breadth-first construction of a generator from an implicit automaton.
///
/// `succ` must return successors in event-name order. States are numbered in
/// discovery order, which makes the result canonical. Returns the generator
/// and the key of every state, indexed by state id.
pub(crate) fn explore<K, F>(alphabet: Alphabet, init: Option<K>, mut succ: F) -> (Generator, Vec<K>)
where
    K: Ord + Clone,
    F: FnMut(&K) -> Vec<(Event, K)>,
{
    let Some(init) = init else {
        return (Generator::empty(alphabet), Vec::new());
    };
    let mut index: BTreeMap<K, StateId> = BTreeMap::new();
    let mut keys = vec![init.clone()];
    index.insert(init, 0);
    let mut delta: Vec<BTreeMap<Event, StateId>> = Vec::new();
    let mut head = 0;
    while head < keys.len() {
        let key = keys[head].clone();
        let mut out = BTreeMap::new();
        for (e, next) in succ(&key) {
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = keys.len();
                    index.insert(next.clone(), id);
                    keys.push(next);
                    id
                }
            };
            out.insert(e, id);
        }
        delta.push(out);
        head += 1;
    }
    (Generator { alphabet, delta }, keys)
}
