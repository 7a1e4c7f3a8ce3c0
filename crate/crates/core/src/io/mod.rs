//! Text formats: automata, problem descriptions and reports.

mod automaton;
mod problem;
mod report;

use std::path::Path;

pub use automaton::{parse_automaton, write_automaton, Automaton};
pub use problem::{load_problem, parse_alphabet_list, parse_groups, parse_problem, ProblemFile};
pub use report::Report;

use crate::error::{Error, Result};

pub(crate) fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        context: format!("reading {}", path.display()),
        source,
    })
}

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        context: format!("writing {}", path.display()),
        source,
    })
}

/// Reads and parses an automaton file.
pub fn load_automaton(path: &Path) -> Result<Automaton> {
    parse_automaton(&path.display().to_string(), &read_file(path)?)
}

/// Writes an automaton file.
pub fn save_automaton(path: &Path, a: &Automaton) -> Result<()> {
    write_file(path, &write_automaton(a))
}
