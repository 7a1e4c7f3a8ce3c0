use std::fmt::Write as _;

use crate::automata::{Alphabet, Event, Generator, StateId};
use crate::error::{Error, Result};

/// Contents of an automaton file: the generator and its controllable events.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    pub generator: Generator,
    pub controllable: Alphabet,
}

impl Automaton {
    pub fn new(generator: Generator, controllable: Alphabet) -> Self {
        let controllable = controllable.intersection(generator.alphabet());
        Automaton {
            generator,
            controllable,
        }
    }

    /// Events of the alphabet not declared controllable.
    pub fn uncontrollable(&self) -> Alphabet {
        self.generator.alphabet().difference(&self.controllable)
    }
}

struct Lines<'a> {
    file: &'a str,
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    fn new(file: &'a str, text: &'a str) -> Self {
        Lines {
            file,
            inner: text.lines().enumerate().peekable(),
        }
    }

    fn err(&self, line: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            file: self.file.to_string(),
            line,
            message: message.into(),
        }
    }

    /// Next line that is neither blank nor a comment, 1-based.
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                return Some((i + 1, line));
            }
        }
        None
    }

    fn header(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let last = self.inner.peek().map_or(0, |(i, _)| *i + 1);
        let (n, line) = self
            .next_content()
            .ok_or_else(|| self.err(last, format!("missing `{key}:` header")))?;
        match line.split_once(':') {
            Some((k, v)) if k.trim() == key => Ok((n, v.trim())),
            _ => Err(self.err(n, format!("expected `{key}:` header"))),
        }
    }
}

fn events(lines: &Lines<'_>, n: usize, text: &str) -> Result<Alphabet> {
    Alphabet::parse_list(text).map_err(|e| lines.err(n, e.to_string()))
}

/// Parses an automaton file. `file` names the source in diagnostics.
///
/// The generator is trimmed and renumbered, so unreachable states vanish.
pub fn parse_automaton(file: &str, text: &str) -> Result<Automaton> {
    let mut lines = Lines::new(file, text);
    let (n, v) = lines.header("alphabet")?;
    let alphabet = events(&lines, n, v)?;
    let (n, v) = lines.header("controllable")?;
    let controllable = events(&lines, n, v)?;
    if !controllable.is_subset(&alphabet) {
        return Err(lines.err(
            n,
            format!(
                "controllable events {} not in the alphabet",
                controllable.difference(&alphabet)
            ),
        ));
    }
    let (n, v) = lines.header("states")?;
    let states: usize = v.parse().map_err(|_| lines.err(n, format!("bad state count {v:?}")))?;
    let (n, v) = lines.header("initial")?;
    let initial: Option<StateId> = if v.is_empty() {
        None
    } else {
        let q: StateId = v
            .parse()
            .map_err(|_| lines.err(n, format!("bad initial state {v:?}")))?;
        if q >= states {
            return Err(lines.err(n, format!("initial state {q} out of range 0..{states}")));
        }
        Some(q)
    };
    if initial.is_none() && states > 0 {
        return Err(lines.err(n, "missing initial state"));
    }
    let (n, v) = lines.header("trans")?;
    if !v.is_empty() {
        return Err(lines.err(n, "unexpected text after `trans:`"));
    }

    let mut seen = std::collections::BTreeSet::new();
    let mut triples = Vec::new();
    while let Some((n, line)) = lines.next_content() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [src, e, dst] = parts[..] else {
            return Err(lines.err(n, "expected `src event dst`"));
        };
        let state = |s: &str| -> Result<StateId> {
            let q: StateId = s.parse().map_err(|_| lines.err(n, format!("bad state {s:?}")))?;
            if q >= states {
                return Err(lines.err(n, format!("state {q} out of range 0..{states}")));
            }
            Ok(q)
        };
        let (src, dst) = (state(src)?, state(dst)?);
        let e = Event::new(e).map_err(|err| lines.err(n, err.to_string()))?;
        if !alphabet.contains(&e) {
            return Err(lines.err(n, format!("undeclared event {e}")));
        }
        if !seen.insert((src, e.clone())) {
            return Err(lines.err(n, format!("second transition from state {src} on {e}")));
        }
        triples.push((src, e, dst));
    }
    let generator = Generator::from_transitions(alphabet, states, initial, triples)?;
    Ok(Automaton {
        generator,
        controllable,
    })
}

fn header(out: &mut String, key: &str, value: &str) {
    if value.is_empty() {
        let _ = writeln!(out, "{key}:");
    } else {
        let _ = writeln!(out, "{key}: {value}");
    }
}

/// Serializes in the canonical layout: fixed header order, transitions
/// sorted by source state then event name, LF line endings.
pub fn write_automaton(a: &Automaton) -> String {
    let g = &a.generator;
    let mut out = String::new();
    header(&mut out, "alphabet", &g.alphabet().to_string());
    header(&mut out, "controllable", &a.controllable.to_string());
    header(&mut out, "states", &g.num_states().to_string());
    header(
        &mut out,
        "initial",
        &g.initial().map(|q| q.to_string()).unwrap_or_default(),
    );
    out.push_str("trans:\n");
    for (q, e, d) in g.transitions() {
        let _ = writeln!(out, "{q} {e} {d}");
    }
    out
}
