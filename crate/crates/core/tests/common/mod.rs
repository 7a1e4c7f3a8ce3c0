#![allow(dead_code)]

use std::collections::BTreeSet;

use coordctl::automata::{enumerate_bounded, intersection, sync2, Alphabet, Event, Generator, Word};
use coordctl::verify::AgentAlphabet;
use rand::seq::SliceRandom;

use rand_chacha::ChaCha8Rng;

pub use rand::{Rng, SeedableRng};
pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn lang(alpha: &[&str], words: &[&str]) -> Generator {
    let ws: Vec<Word> = words.iter().map(|w| Word::of(w)).collect();
    Generator::from_words(Alphabet::of(alpha), &ws).unwrap()
}

pub fn words(g: &Generator, maxlen: usize) -> BTreeSet<Word> {
    enumerate_bounded(g, maxlen).into_iter().collect()
}

pub fn fixture(rel: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(rel)
}

/// The four-agent example: two independent subsystems observed by agent
/// pairs, sharing only `b` through the observation alphabets.
pub struct Example {
    pub plant: Generator,
    pub spec: Generator,
    pub controllable: Alphabet,
    pub agents: Vec<AgentAlphabet>,
    pub groups: Vec<Vec<usize>>,
    pub coord: Vec<Alphabet>,
    pub high: Alphabet,
}

impl Example {
    pub fn uncontrollable(&self) -> Alphabet {
        self.plant.alphabet().difference(&self.controllable)
    }
}

pub fn example() -> Example {
    let g1 = lang(&["a", "u", "u1", "u2"], &["a u1", "u u2"]);
    let right = ["v", "v1", "v2", "b", "b1", "b2"];
    let g2 = lang(&right, &["v b1", "v b2", "v1 v2 b", "v2 v1 b"]);
    let k2 = lang(&right, &["v b1", "v b2", "v1 v2 b", "v2 v1"]);
    let agent = |o: &[&str], c: &[&str]| AgentAlphabet::new(Alphabet::of(o), Alphabet::of(c));
    Example {
        plant: sync2(&g1, &g2),
        spec: sync2(&g1, &k2),
        controllable: Alphabet::of(&["a", "b1", "b2", "v", "v1", "v2"]),
        agents: vec![
            agent(&["a", "b", "u1", "u"], &["a", "b"]),
            agent(&["a", "b", "u2", "u"], &["a", "b"]),
            agent(&["v", "b", "v1", "b1"], &["v", "v1", "b1"]),
            agent(&["v", "b", "v2", "b2"], &["v", "v2", "b2"]),
        ],
        groups: vec![vec![0, 1], vec![2, 3]],
        coord: vec![Alphabet::of(&["a", "u", "b"]), Alphabet::of(&["v1", "b2", "v", "b"])],
        high: Alphabet::of(&["b"]),
    }
}

/// Agents as the coordination side sees them: control restricted to the
/// plant's controllable events.
pub fn normalized_agents(ex: &Example) -> Vec<AgentAlphabet> {
    ex.agents
        .iter()
        .map(|a| AgentAlphabet::new(a.observable.clone(), a.controllable.intersection(&ex.controllable)))
        .collect()
}

pub fn alphabet_of(names: &[String]) -> Alphabet {
    names.iter().map(|n| Event::new(n).unwrap()).collect()
}

pub fn event_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{}", (b'a' + i as u8) as char)).collect()
}

/// Random deterministic generator with up to `states` states. With
/// `acyclic`, edges only go to higher-numbered states.
pub fn random_generator(rng: &mut Rng8, alphabet: &Alphabet, states: usize, density: f64, acyclic: bool) -> Generator {
    let mut triples = Vec::new();
    for q in 0..states {
        for e in alphabet {
            if !rng.gen_bool(density) {
                continue;
            }
            let d = if acyclic {
                if q + 1 >= states {
                    continue;
                }
                rng.gen_range(q + 1..states)
            } else {
                rng.gen_range(0..states)
            };
            triples.push((q, e.clone(), d));
        }
    }
    Generator::from_transitions(alphabet.clone(), states, Some(0), triples).unwrap()
}

/// Prefix closure of a few random words.
pub fn random_finite(rng: &mut Rng8, alphabet: &Alphabet, count: usize, maxlen: usize) -> Generator {
    let events: Vec<Event> = alphabet.iter().cloned().collect();
    let ws: Vec<Word> = (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=maxlen);
            (0..len).map(|_| events.choose(rng).unwrap().clone()).collect()
        })
        .collect();
    Generator::from_words(alphabet.clone(), &ws).unwrap()
}

pub fn random_subset(rng: &mut Rng8, alphabet: &Alphabet, p: f64) -> Alphabet {
    alphabet.iter().filter(|_| rng.gen_bool(p)).cloned().collect()
}

/// All prefix-closed subsets of a finite prefix-closed word set.
pub fn prefix_closed_subsets(ws: &[Word]) -> Vec<BTreeSet<Word>> {
    assert!(ws.len() <= 16, "oracle instance too large");
    let mut out = Vec::new();
    for mask in 0u32..(1 << ws.len()) {
        let set: BTreeSet<Word> = (0..ws.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| ws[i].clone())
            .collect();
        let closed = set.iter().all(|w| {
            let mut p = w.clone();
            p.pop().is_none() || set.contains(&p)
        });
        if closed {
            out.push(set);
        }
    }
    out
}

/// `S·A_u ∩ L ⊆ S` checked word by word.
pub fn controllable_set(set: &BTreeSet<Word>, plant: &Generator, unc: &Alphabet) -> bool {
    set.iter().all(|s| {
        unc.iter()
            .all(|u| !plant.accepts(&s.then(u)) || set.contains(&s.then(u)))
    })
}

/// Supremal controllable sublanguage of a finite spec by enumerating all
/// prefix-closed sublanguages.
pub fn brute_sup_c(spec: &Generator, plant: &Generator, unc: &Alphabet) -> BTreeSet<Word> {
    let ws: Vec<Word> = enumerate_bounded(&intersection(spec, plant), 64);
    let mut sup = BTreeSet::new();
    for set in prefix_closed_subsets(&ws) {
        if controllable_set(&set, plant, unc) {
            sup.extend(set);
        }
    }
    sup
}

/// Definition-level coobservability over words of length at most `bound`.
pub fn brute_coobservable(spec: &Generator, plant: &Generator, agents: &[AgentAlphabet], bound: usize) -> bool {
    let ks = enumerate_bounded(spec, bound);
    let ctrl = Alphabet::union_all(agents.iter().map(|a| &a.controllable));
    for s in &ks {
        for sigma in &ctrl {
            let exit = s.then(sigma);
            if !plant.accepts(&exit) || spec.accepts(&exit) {
                continue;
            }
            let disabled = agents.iter().any(|a| {
                a.controllable.contains(sigma)
                    && !ks
                        .iter()
                        .any(|t| t.project(&a.observable) == s.project(&a.observable) && spec.accepts(&t.then(sigma)))
            });
            if !disabled {
                return false;
            }
        }
    }
    true
}

/// Definition-level observer check for a finite language.
pub fn brute_observer(plant: &Generator, onto: &Alphabet, bound: usize) -> bool {
    let ls = enumerate_bounded(plant, bound);
    let projected: BTreeSet<Word> = ls.iter().map(|w| w.project(onto)).collect();
    ls.iter().all(|s| {
        let ps = s.project(onto);
        projected
            .iter()
            .filter(|t| t.len() >= ps.len() && t.events()[..ps.len()] == *ps.events())
            .all(|t| {
                ls.iter()
                    .any(|w| w.len() >= s.len() && w.events()[..s.len()] == *s.events() && w.project(onto) == *t)
            })
    })
}

/// A small modular synthesis problem: plants over overlapping alphabets, a
/// spec inside their product and a grouping of the plants.
pub struct PipelineInstance {
    pub plants: Vec<Generator>,
    pub plant: Generator,
    pub spec: Generator,
    pub groups: Vec<Vec<usize>>,
    pub uncontrollable: Alphabet,
}

pub fn random_pipeline_instance(rng: &mut Rng8) -> PipelineInstance {
    let n = rng.gen_range(2..=4);
    let pool = alphabet_of(&event_names(2 * n));
    let events: Vec<Event> = pool.iter().cloned().collect();
    let plants: Vec<Generator> = (0..n)
        .map(|_| {
            let k = rng.gen_range(2..=3);
            let alpha: Alphabet = events.choose_multiple(rng, k).cloned().collect();
            let states = rng.gen_range(2..=3);
            random_generator(rng, &alpha, states, 0.6, false)
        })
        .collect();
    let plant = coordctl::automata::sync_product(&plants.iter().collect::<Vec<_>>()).unwrap();
    let states = rng.gen_range(2..=4);
    let restriction = random_generator(rng, plant.alphabet(), states, 0.7, false);
    let spec = intersection(&restriction, &plant);
    let groups = if n == 2 || rng.gen_bool(0.2) {
        (0..n).map(|i| vec![i]).collect()
    } else {
        let cut = rng.gen_range(1..n);
        vec![(0..cut).collect(), (cut..n).collect()]
    };
    let uncontrollable = random_subset(rng, plant.alphabet(), 0.35);
    PipelineInstance {
        plants,
        plant,
        spec,
        groups,
        uncontrollable,
    }
}

/// Random decentralized problem with every plant event observed by some
/// agent.
pub fn random_decentralized(rng: &mut Rng8) -> coordctl::decentralized::DecentralizedProblem {
    let m = rng.gen_range(3..=5);
    let sigma = alphabet_of(&event_names(m));
    let events: Vec<Event> = sigma.iter().cloned().collect();
    let states = rng.gen_range(2..=4);
    let plant = random_generator(rng, &sigma, states, 0.6, false);
    let states = rng.gen_range(2..=4);
    let spec = intersection(&random_generator(rng, &sigma, states, 0.7, false), &plant);
    let mut controllable = random_subset(rng, &sigma, 0.6);
    if controllable.is_empty() {
        controllable.insert(events.choose(rng).unwrap().clone());
    }
    let n = rng.gen_range(2..=4);
    let mut obs: Vec<Alphabet> = (0..n).map(|_| random_subset(rng, &sigma, 0.5)).collect();
    for e in &events {
        if !obs.iter().any(|o| o.contains(e)) {
            obs[rng.gen_range(0..n)].insert(e.clone());
        }
    }
    let agents = obs
        .into_iter()
        .map(|o| {
            let ctrl = if rng.gen_bool(0.5) {
                o.intersection(&controllable)
            } else {
                random_subset(rng, &controllable, 0.5)
            };
            AgentAlphabet::new(o, ctrl)
        })
        .collect();
    coordctl::decentralized::DecentralizedProblem {
        plant,
        spec,
        controllable,
        agents,
        groups: None,
        coordinator_alphabets: None,
        high_level: None,
    }
}
