//! Decentralized control with communicating supervisors.
//!
//! A global plant observed and actuated by agents is turned into a modular
//! coordination problem: agent `i` becomes the subsystem `P_i(L)` over its
//! observation alphabet, agents are grouped, and each group coordinator
//! forwards the events of its alphabet to group members that do not observe
//! them.

mod grouping;

use std::time::Instant;

pub use grouping::group_agents;

use crate::automata::{language_equal, project, sync_product, Alphabet, Generator};
use crate::error::{Error, Result};
use crate::synthesis::{
    complete_plan, synthesize_two_level, CoordinatorSpec, Extension, PlanRequest, SynthesisOptions, SynthesisResult,
};
use crate::verify::{
    check_shared_consistency, is_controllable, is_coobservable, AgentAlphabet, GroupingPlan, SharedCheck, Verdict,
    DEFAULT_MAX_AGENTS,
};

/// Input of [`solve`].
#[derive(Clone, Debug)]
pub struct DecentralizedProblem {
    pub plant: Generator,
    pub spec: Generator,
    /// Controllable events of the plant; the rest are uncontrollable.
    pub controllable: Alphabet,
    pub agents: Vec<AgentAlphabet>,
    /// 0-based agent groups; computed by [`group_agents`] when absent.
    pub groups: Option<Vec<Vec<usize>>>,
    /// Coordinator alphabet per group, used as given.
    pub coordinator_alphabets: Option<Vec<Alphabet>>,
    pub high_level: Option<Alphabet>,
}

/// Whether a supervisor may disable events it only learns about from its
/// coordinator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CommunicatedControl {
    /// Communicated controllable events are also actuated by the receiver.
    #[default]
    Actuate,
    /// Communication only adds observations.
    ObserveOnly,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub communicated_control: CommunicatedControl,
    pub ensure_observer: bool,
    pub strict_occ: bool,
    /// Stop grouping at this many groups instead of at zero shared events.
    pub target_groups: Option<usize>,
    pub max_agents_verifier: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            communicated_control: CommunicatedControl::Actuate,
            ensure_observer: false,
            strict_occ: false,
            target_groups: None,
            max_agents_verifier: DEFAULT_MAX_AGENTS,
        }
    }
}

/// The coordination view of a decentralized problem.
#[derive(Clone, Debug)]
pub struct Translation {
    /// `P_i(L)` over `A_i = Σ_{o,i}`.
    pub plants: Vec<Generator>,
    /// The spec over the plant alphabet.
    pub spec: Generator,
    /// Agents with control sets restricted to plant-controllable events.
    pub agents: Vec<AgentAlphabet>,
    /// `A_u`: events no agent both observes and controls.
    pub uncontrollable: Alphabet,
    pub shared: SharedCheck,
}

/// Builds the modular plant `‖_i P_i(L)` and the coordination alphabets.
pub fn translate(problem: &DecentralizedProblem) -> Result<Translation> {
    let sigma = problem.plant.alphabet();
    if problem.agents.is_empty() {
        return Err(Error::input("problem has no agents"));
    }
    if !problem.controllable.is_subset(sigma) {
        return Err(Error::input(format!(
            "controllable events {} not in the plant alphabet",
            problem.controllable.difference(sigma)
        )));
    }
    for (i, a) in problem.agents.iter().enumerate() {
        let extra = a.observable.union(&a.controllable).difference(sigma);
        if !extra.is_empty() {
            return Err(Error::input(format!(
                "agent {} uses events {extra} outside the plant alphabet",
                i + 1
            )));
        }
    }
    let observed = Alphabet::union_all(problem.agents.iter().map(|a| &a.observable));
    if !sigma.is_subset(&observed) {
        return Err(Error::input(format!(
            "plant events {} are observed by no agent",
            sigma.difference(&observed)
        )));
    }
    if !problem.spec.alphabet().is_subset(sigma) {
        return Err(Error::input(format!(
            "spec events {} not in the plant alphabet",
            problem.spec.alphabet().difference(sigma)
        )));
    }
    let spec = problem.spec.with_alphabet(sigma.clone())?;
    if !crate::automata::is_sublanguage(&spec, &problem.plant) {
        return Err(Error::input("spec language is not contained in the plant language"));
    }

    let agents: Vec<AgentAlphabet> = problem
        .agents
        .iter()
        .map(|a| AgentAlphabet::new(a.observable.clone(), a.controllable.intersection(&problem.controllable)))
        .collect();
    let shared = check_shared_consistency(&agents);
    if let Some((i, j, e)) = &shared.violation {
        log::warn!(
            "agent {} observes {e} controlled by agent {} but cannot control it; coobservability of the result is not guaranteed by the shared-event condition",
            i + 1,
            j + 1
        );
    }
    let actuated_by: Vec<Alphabet> = agents
        .iter()
        .map(|a| a.observable.intersection(&a.controllable))
        .collect();
    let actuated = Alphabet::union_all(&actuated_by);
    let plants = agents.iter().map(|a| project(&problem.plant, &a.observable)).collect();
    Ok(Translation {
        plants,
        spec,
        uncontrollable: sigma.difference(&actuated),
        agents,
        shared,
    })
}

/// Events each agent receives from its group coordinator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommunicationMap {
    /// `A_{k_j} \ Σ_{o,i}` per agent.
    pub receive: Vec<Alphabet>,
    /// Group of each agent.
    pub group_of: Vec<usize>,
    pub coordinator_alphabets: Vec<Alphabet>,
}

pub fn communication_map(plan: &GroupingPlan, agents: &[AgentAlphabet]) -> CommunicationMap {
    let group_of = plan.group_of();
    let receive = agents
        .iter()
        .enumerate()
        .map(|(i, a)| plan.group_alphabets[group_of[i]].difference(&a.observable))
        .collect();
    CommunicationMap {
        receive,
        group_of,
        coordinator_alphabets: plan.group_alphabets.clone(),
    }
}

/// Capabilities of the agents once coordinators forward events.
pub fn enriched_agents(
    agents: &[AgentAlphabet],
    comm: &CommunicationMap,
    actuated: &Alphabet,
    mode: CommunicatedControl,
) -> Vec<AgentAlphabet> {
    agents
        .iter()
        .zip(&comm.receive)
        .map(|(a, recv)| {
            let observable = a.observable.union(recv);
            let mut controllable = a.controllable.intersection(&observable);
            if mode == CommunicatedControl::Actuate {
                controllable = controllable.union(&recv.intersection(actuated));
            }
            AgentAlphabet::new(observable, controllable)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub translation: Translation,
    pub plan: GroupingPlan,
    pub coordinators: Vec<CoordinatorSpec>,
    pub communication: CommunicationMap,
    pub enriched: Vec<AgentAlphabet>,
    pub synthesis: SynthesisResult,
    /// `supC_{i+k_j}` per agent, in agent order.
    pub supervisors: Vec<Generator>,
    /// Controllability of the global result w.r.t. the original plant.
    pub controllable: Verdict,
    pub coobservable: Verdict,
    /// Whether `L = ‖_i P_i(L)`; otherwise the modular plant over-approximates.
    pub plant_separable: bool,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

/// Note recorded when the modular plant strictly over-approximates `L`.
pub const OVERAPPROXIMATION_NOTE: &str =
    "plant differs from the composition of its projections; supervisors are synthesized for the larger plant, so permissiveness may be lost again";

/// Translates, groups, builds coordinators, synthesizes and verifies.
pub fn solve(problem: &DecentralizedProblem, options: SolveOptions) -> Result<Solution> {
    let started = Instant::now();
    let tr = translate(problem).map_err(|e| e.in_stage("translate"))?;
    let groups = match &problem.groups {
        Some(g) => g.clone(),
        None => group_agents(&tr.agents, options.target_groups),
    };
    let request = PlanRequest {
        groups,
        high_level: problem.high_level.clone(),
        group_alphabets: problem.coordinator_alphabets.clone(),
        ensure_observer: options.ensure_observer,
    };
    let (plan, provenance) = complete_plan(&tr.spec, &tr.plants, &request).map_err(|e| e.in_stage("alphabets"))?;
    let synthesis = synthesize_two_level(
        &tr.plants,
        &tr.spec,
        &plan,
        &tr.uncontrollable,
        SynthesisOptions {
            strict_occ: options.strict_occ,
        },
    )
    .map_err(|e| e.in_stage("synthesis"))?;

    let coordinators = synthesis
        .groups
        .iter()
        .zip(provenance)
        .enumerate()
        .map(|(j, (g, provenance)): (usize, (_, Vec<Extension>))| CoordinatorSpec {
            group: j,
            alphabet: g.alphabet.clone(),
            coordinator: g.coordinator.clone(),
            provenance,
        })
        .collect();
    let communication = communication_map(&plan, &tr.agents);
    let actuated = problem.plant.alphabet().difference(&tr.uncontrollable);
    let enriched = enriched_agents(&tr.agents, &communication, &actuated, options.communicated_control);

    let sigma_u = problem.plant.alphabet().difference(&problem.controllable);
    let controllable = is_controllable(&synthesis.global, &problem.plant, &sigma_u);
    let coobservable = is_coobservable(
        &synthesis.global,
        &problem.plant,
        &enriched,
        options.max_agents_verifier,
    )
    .map_err(|e| e.in_stage("verify"))?;

    let supervisors = (0..tr.agents.len())
        .map(|i| synthesis.local(i).cloned().expect("every agent is in a group"))
        .collect();
    let modular = sync_product(&tr.plants.iter().collect::<Vec<_>>())?;
    let plant_separable = language_equal(&modular, &problem.plant);
    let mut notes = Vec::new();
    if plan.groups.len() == 1 {
        notes.push("single group: centralized coordination".to_string());
    }
    if !plant_separable {
        notes.push(OVERAPPROXIMATION_NOTE.to_string());
    }
    if let Some(c) = synthesis.optimality.caveat() {
        notes.push(c.to_string());
    }
    Ok(Solution {
        translation: tr,
        plan,
        coordinators,
        communication,
        enriched,
        synthesis,
        supervisors,
        controllable,
        coobservable,
        plant_separable,
        notes,
        elapsed_ms: started.elapsed().as_millis(),
    })
}
