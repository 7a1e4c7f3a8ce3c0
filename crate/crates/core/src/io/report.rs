use std::collections::BTreeMap;
use std::fmt;

use crate::automata::Alphabet;
use crate::error::{Error, Result};
use crate::verify::Verdict;

/// Flat key-value report, serialized as sorted `key=value` lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: BTreeMap<String, String>,
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        let key = key.into();
        debug_assert!(!key.contains('=') && !key.contains('\n'));
        self.entries.insert(key, value.to_string().replace('\n', " "));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn set_alphabet(&mut self, key: impl Into<String>, a: &Alphabet) {
        self.set(key, a);
    }

    /// Records `prefix.holds` (or `holds` for an empty prefix) and, on
    /// failure, the witness fields `witness.kind`, `witness.s`,
    /// `witness.event`, `witness.agent`, `witness.group` and
    /// `witness.lookalike.<i>`. Agent and group numbers are 1-based.
    pub fn set_verdict(&mut self, prefix: &str, v: &Verdict) {
        self.set(join(prefix, "holds"), v.holds);
        let Some(cx) = &v.counterexample else {
            return;
        };
        let w = join(prefix, "witness");
        self.set(format!("{w}.kind"), cx.kind);
        self.set(format!("{w}.s"), &cx.word);
        if let Some(e) = &cx.event {
            self.set(format!("{w}.event"), e);
        }
        if let Some(a) = cx.agent {
            self.set(format!("{w}.agent"), a + 1);
        }
        if let Some(g) = cx.group {
            self.set(format!("{w}.group"), g + 1);
        }
        for (i, word) in &cx.lookalikes {
            self.set(format!("{w}.lookalike.{}", i + 1), word);
        }
    }

    pub fn parse(text: &str) -> Result<Report> {
        let mut r = Report::new();
        for (i, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(Error::Parse {
                    file: "report".into(),
                    line: i + 1,
                    message: "expected key=value".into(),
                });
            };
            r.entries.insert(k.to_string(), v.to_string());
        }
        Ok(r)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}
