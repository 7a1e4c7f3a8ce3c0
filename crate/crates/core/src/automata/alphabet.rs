//! Events, alphabets and words.

use std::cmp::Ordering;
use std::collections::btree_set;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::Error;

/// A named event. Events compare and order by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Event(Arc<str>);

impl Event {
    /// Creates an event, rejecting names that are not nonempty identifiers
    /// made of ASCII letters, digits and underscores.
    pub fn new(name: &str) -> Result<Self, Error> {
        if is_identifier(name) {
            Ok(Event(Arc::from(name)))
        } else {
            Err(Error::input(format!("invalid event name {name:?}")))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

fn is_identifier(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl FromStr for Event {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Event::new(s)
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Shorthand for building an event from a literal.
///
/// Panics on an invalid name; meant for tests and hand-written fixtures.
#[track_caller]
pub fn ev(name: &str) -> Event {
    Event::new(name).expect("valid event name")
}

/// A finite set of events, iterated in name order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet(BTreeSet<Event>);

impl Alphabet {
    pub fn new() -> Self {
        Alphabet(BTreeSet::new())
    }

    /// Builds an alphabet from literal names. Panics on an invalid name.
    #[track_caller]
    pub fn of(names: &[&str]) -> Self {
        names.iter().map(|n| ev(n)).collect()
    }

    /// Parses a whitespace-separated or comma-separated list of event names.
    pub fn parse_list(text: &str) -> Result<Self, Error> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(Event::new)
            .collect()
    }

    pub fn contains(&self, e: &Event) -> bool {
        self.0.contains(e)
    }

    pub fn insert(&mut self, e: Event) -> bool {
        self.0.insert(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, Event> {
        self.0.iter()
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &Alphabet) -> Alphabet {
        Alphabet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &Alphabet) -> Alphabet {
        Alphabet(self.0.difference(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &Alphabet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Alphabet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Union of a family of alphabets.
    pub fn union_all<'a, I: IntoIterator<Item = &'a Alphabet>>(parts: I) -> Alphabet {
        let mut out = Alphabet::new();
        for p in parts {
            out.0.extend(p.0.iter().cloned());
        }
        out
    }

    /// Events occurring in at least two of the given alphabets.
    pub fn pairwise_shared(parts: &[Alphabet]) -> Alphabet {
        let mut out = Alphabet::new();
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                out.0.extend(a.0.intersection(&b.0).cloned());
            }
        }
        out
    }
}

impl FromIterator<Event> for Alphabet {
    fn from_iter<T: IntoIterator<Item = Event>>(iter: T) -> Self {
        Alphabet(iter.into_iter().collect())
    }
}

impl Extend<Event> for Alphabet {
    fn extend<T: IntoIterator<Item = Event>>(&mut self, iter: T) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a Alphabet {
    type Item = &'a Event;
    type IntoIter = btree_set::Iter<'a, Event>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// A finite sequence of events; the empty word is ε.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Event>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses space-separated event names. Panics on an invalid name.
    #[track_caller]
    pub fn of(text: &str) -> Self {
        Word(text.split_whitespace().map(ev).collect())
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        text.split_whitespace()
            .map(Event::new)
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn events(&self) -> &[Event] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, e: Event) {
        self.0.push(e)
    }

    pub fn pop(&mut self) -> Option<Event> {
        self.0.pop()
    }

    pub fn last(&self) -> Option<&Event> {
        self.0.last()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Event> {
        self.0.iter()
    }

    /// Returns this word followed by `e`.
    pub fn then(&self, e: &Event) -> Word {
        let mut w = self.clone();
        w.push(e.clone());
        w
    }

    /// Natural projection: erases every event outside `onto`.
    pub fn project(&self, onto: &Alphabet) -> Word {
        Word(self.0.iter().filter(|e| onto.contains(e)).cloned().collect())
    }

    /// Length-then-lexicographic comparison by event name.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// Words are ordered shortlex.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shortlex_cmp(other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Event> for Word {
    fn from_iter<T: IntoIterator<Item = Event>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl From<Vec<Event>> for Word {
    fn from(v: Vec<Event>) -> Self {
        Word(v)
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Event;
    type IntoIter = std::slice::Iter<'a, Event>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "\"{self}\"")
        }
    }
}
