//! C&P coobservability by a verifier product.
//!
//! For every event `σ` some agent controls, the verifier explores tuples
//! `(q_K, q_L, q_1, …, q_c)`: the real word `s` in the spec and the plant,
//! and one lookalike word per agent controlling `σ`, tracked in the spec.
//! A joint move on `e` extends `s` and every lookalike whose agent observes
//! `e`; a private move extends one lookalike by an event its agent does not
//! observe. The spec fails to be coobservable iff some reachable tuple has
//! `σ` enabled in the plant, disabled in the spec, and enabled after every
//! lookalike.

use std::collections::{HashMap, VecDeque};

use super::{CheckKind, Counterexample, Verdict};
use crate::automata::{is_sublanguage, Alphabet, Event, Generator, StateId, Word};
use crate::error::{Error, Result};
use crate::verify::AgentAlphabet;

/// Default bound on the number of agents accepted by [`is_coobservable`].
pub const DEFAULT_MAX_AGENTS: usize = 6;

#[derive(Clone)]
enum Move {
    Joint(Event),
    Private(usize, Event),
}

struct Search<'a> {
    spec: &'a Generator,
    plant: &'a Generator,
    agents: &'a [AgentAlphabet],
    sigma: &'a Event,
    controllers: Vec<usize>,
}

struct Found {
    s: Word,
    lookalikes: Vec<(usize, Word)>,
}

impl Search<'_> {
    fn violates(&self, key: &[StateId]) -> bool {
        self.plant.enables(key[1], self.sigma)
            && !self.spec.enables(key[0], self.sigma)
            && key[2..].iter().all(|&q| self.spec.enables(q, self.sigma))
    }

    fn successors(&self, key: &[StateId]) -> Vec<(u8, Move, Vec<StateId>)> {
        let mut out = Vec::new();
        for (e, nk) in self.spec.transitions_from(key[0]) {
            let Some(nl) = self.plant.step(key[1], e) else {
                continue;
            };
            let mut next = vec![nk, nl];
            let mut alive = true;
            for (j, &i) in self.controllers.iter().enumerate() {
                let q = key[2 + j];
                if self.agents[i].observable.contains(e) {
                    match self.spec.step(q, e) {
                        Some(d) => next.push(d),
                        None => {
                            alive = false;
                            break;
                        }
                    }
                } else {
                    next.push(q);
                }
            }
            if alive {
                out.push((1, Move::Joint(e.clone()), next));
            }
        }
        for (j, &i) in self.controllers.iter().enumerate() {
            for (e, d) in self.spec.transitions_from(key[2 + j]) {
                if !self.agents[i].observable.contains(e) {
                    let mut next = key.to_vec();
                    next[2 + j] = d;
                    out.push((0, Move::Private(j, e.clone()), next));
                }
            }
        }
        out
    }

    /// 0-1 BFS where only joint moves cost, so the first violating tuple
    /// popped has a shortest real word. With `stop_early` unset the whole
    /// reachable verifier is explored; returns the number of tuples seen.
    fn run(&self, stop_early: bool) -> (usize, Option<Found>) {
        let (Some(k0), Some(l0)) = (self.spec.initial(), self.plant.initial()) else {
            return (0, None);
        };
        let mut start = vec![k0, l0];
        start.extend(self.controllers.iter().map(|_| k0));
        let mut dist: HashMap<Vec<StateId>, usize> = HashMap::new();
        let mut parent: HashMap<Vec<StateId>, (Vec<StateId>, Move)> = HashMap::new();
        let mut done: HashMap<Vec<StateId>, ()> = HashMap::new();
        dist.insert(start.clone(), 0);
        let mut queue = VecDeque::from([start]);
        while let Some(key) = queue.pop_front() {
            if done.insert(key.clone(), ()).is_some() {
                continue;
            }
            if stop_early && self.violates(&key) {
                return (dist.len(), Some(self.reconstruct(&parent, key)));
            }
            let d = dist[&key];
            for (w, mv, next) in self.successors(&key) {
                let nd = d + w as usize;
                if dist.get(&next).is_none_or(|&old| nd < old) {
                    dist.insert(next.clone(), nd);
                    parent.insert(next.clone(), (key.clone(), mv));
                    if w == 0 {
                        queue.push_front(next);
                    } else {
                        queue.push_back(next);
                    }
                }
            }
        }
        (dist.len(), None)
    }

    fn reconstruct(&self, parent: &HashMap<Vec<StateId>, (Vec<StateId>, Move)>, mut at: Vec<StateId>) -> Found {
        let mut moves = Vec::new();
        while let Some((prev, mv)) = parent.get(&at) {
            moves.push(mv.clone());
            at = prev.clone();
        }
        moves.reverse();
        let mut s = Word::empty();
        let mut looks = vec![Word::empty(); self.controllers.len()];
        for mv in moves {
            match mv {
                Move::Joint(e) => {
                    for (j, &i) in self.controllers.iter().enumerate() {
                        if self.agents[i].observable.contains(&e) {
                            looks[j].push(e.clone());
                        }
                    }
                    s.push(e);
                }
                Move::Private(j, e) => looks[j].push(e),
            }
        }
        Found {
            s,
            lookalikes: self.controllers.iter().copied().zip(looks).collect(),
        }
    }
}

fn controllers_of(agents: &[AgentAlphabet], e: &Event) -> Vec<usize> {
    (0..agents.len())
        .filter(|&i| agents[i].controllable.contains(e))
        .collect()
}

fn precheck(spec: &Generator, plant: &Generator, agents: &[AgentAlphabet], max_agents: usize) -> Result<()> {
    if agents.len() > max_agents {
        return Err(Error::TooManyAgents {
            agents: agents.len(),
            limit: max_agents,
        });
    }
    if !is_sublanguage(spec, plant) {
        return Err(Error::input("coobservability requires L(spec) ⊆ L(plant)"));
    }
    Ok(())
}

/// C&P coobservability of `L(spec)` with respect to `L(plant)` and the
/// agents: every controllable exit `sσ ∈ L \ K` is disabled by some agent
/// controlling `σ` for which no word it confuses with `s` continues by `σ`
/// inside `K`. The controllable events are those of some agent.
///
/// The counterexample names the first controlling agent in `agent` and
/// lists one lookalike per controlling agent.
pub fn is_coobservable(
    spec: &Generator,
    plant: &Generator,
    agents: &[AgentAlphabet],
    max_agents: usize,
) -> Result<Verdict> {
    precheck(spec, plant, agents, max_agents)?;
    let controllable = Alphabet::union_all(agents.iter().map(|a| &a.controllable));
    let mut best: Option<(Event, Found)> = None;
    for sigma in &controllable {
        let search = Search {
            spec,
            plant,
            agents,
            sigma,
            controllers: controllers_of(agents, sigma),
        };
        if let (_, Some(found)) = search.run(true) {
            let better = best.as_ref().is_none_or(|(_, b)| found.s.shortlex_cmp(&b.s).is_lt());
            if better {
                best = Some((sigma.clone(), found));
            }
        }
    }
    Ok(match best {
        None => Verdict::pass(),
        Some((sigma, found)) => {
            let mut cx = Counterexample::new(CheckKind::Coobservability, found.s).with_event(sigma);
            cx.agent = found.lookalikes.first().map(|(i, _)| *i);
            cx.lookalikes = found.lookalikes;
            Verdict::fail(cx)
        }
    })
}

/// Total number of reachable verifier tuples over all controllable events.
/// Any violation has a real word and lookalikes no longer than this.
pub fn coobservability_verifier_size(
    spec: &Generator,
    plant: &Generator,
    agents: &[AgentAlphabet],
    max_agents: usize,
) -> Result<usize> {
    precheck(spec, plant, agents, max_agents)?;
    let controllable = Alphabet::union_all(agents.iter().map(|a| &a.controllable));
    Ok(controllable
        .iter()
        .map(|sigma| {
            Search {
                spec,
                plant,
                agents,
                sigma,
                controllers: controllers_of(agents, sigma),
            }
            .run(false)
            .0
        })
        .sum())
}
