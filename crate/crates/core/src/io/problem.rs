use std::path::{Path, PathBuf};

use super::{parse_automaton, read_file};
use crate::automata::Alphabet;
use crate::decentralized::DecentralizedProblem;
use crate::error::{Error, Result};
use crate::verify::AgentAlphabet;

/// A parsed problem file; automaton paths are resolved against the file's
/// directory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub plant: PathBuf,
    pub spec: PathBuf,
    pub agents: Vec<AgentAlphabet>,
    /// 0-based groups.
    pub groups: Option<Vec<Vec<usize>>>,
    pub coord: Vec<Alphabet>,
    pub highcoord: Option<Alphabet>,
}

/// Parses `groups:` syntax: 1-based agent lists separated by `;`, members
/// by `,`.
pub fn parse_groups(text: &str) -> std::result::Result<Vec<Vec<usize>>, String> {
    text.split(';')
        .map(|g| {
            g.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| match s.parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(i - 1),
                    _ => Err(format!("bad agent index {s:?}")),
                })
                .collect::<std::result::Result<Vec<_>, _>>()
        })
        .collect()
}

/// Parses alphabets separated by `;`, events by `,` or spaces.
pub fn parse_alphabet_list(text: &str) -> Result<Vec<Alphabet>> {
    text.split(';').map(Alphabet::parse_list).collect()
}

pub fn parse_problem(file: &str, text: &str, base: &Path) -> Result<ProblemFile> {
    let err = |line: usize, message: String| Error::Parse {
        file: file.to_string(),
        line,
        message,
    };
    let mut plant = None;
    let mut spec = None;
    let mut agents: Vec<(Option<Alphabet>, Option<Alphabet>)> = Vec::new();
    let mut groups = None;
    let mut coord = Vec::new();
    let mut highcoord = None;
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line == "agent" {
            agents.push((None, None));
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(err(n, format!("expected `key: value`, got {line:?}")));
        };
        let value = value.trim();
        let list = || Alphabet::parse_list(value).map_err(|e| err(n, e.to_string()));
        match key.trim() {
            "plant" => plant = Some(base.join(value)),
            "spec" => spec = Some(base.join(value)),
            "obs" | "ctrl" => {
                let Some(agent) = agents.last_mut() else {
                    return Err(err(n, format!("`{}:` outside an `agent` block", key.trim())));
                };
                let slot = if key.trim() == "obs" {
                    &mut agent.0
                } else {
                    &mut agent.1
                };
                if slot.replace(list()?).is_some() {
                    return Err(err(n, format!("repeated `{}:` in agent block", key.trim())));
                }
            }
            "groups" => groups = Some(parse_groups(value).map_err(|m| err(n, m))?),
            "coord" => coord.push(list()?),
            "highcoord" => highcoord = Some(list()?),
            other => return Err(err(n, format!("unknown key {other:?}"))),
        }
    }
    let last = text.lines().count();
    let agents = agents
        .into_iter()
        .enumerate()
        .map(|(i, (obs, ctrl))| match obs {
            Some(o) => Ok(AgentAlphabet::new(o, ctrl.unwrap_or_default())),
            None => Err(err(last, format!("agent {} has no `obs:` line", i + 1))),
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(g) = &groups {
        if !coord.is_empty() && coord.len() != g.len() {
            return Err(err(
                last,
                format!("{} groups but {} `coord:` lines", g.len(), coord.len()),
            ));
        }
    }
    Ok(ProblemFile {
        plant: plant.ok_or_else(|| err(last, "missing `plant:`".into()))?,
        spec: spec.ok_or_else(|| err(last, "missing `spec:`".into()))?,
        agents,
        groups,
        coord,
        highcoord,
    })
}

/// Reads a problem file and the automata it names.
pub fn load_problem(path: &Path) -> Result<DecentralizedProblem> {
    let text = read_file(path)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let pf = parse_problem(&path.display().to_string(), &text, base)?;
    let plant = parse_automaton(&pf.plant.display().to_string(), &read_file(&pf.plant)?)?;
    let spec = parse_automaton(&pf.spec.display().to_string(), &read_file(&pf.spec)?)?;
    Ok(DecentralizedProblem {
        controllable: plant.controllable,
        plant: plant.generator,
        spec: spec.generator,
        agents: pf.agents,
        groups: pf.groups,
        coordinator_alphabets: (!pf.coord.is_empty()).then_some(pf.coord),
        high_level: pf.highcoord,
    })
}
