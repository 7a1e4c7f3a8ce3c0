use rayon::prelude::*;

use super::coordinator::{build_coordinator, pick_event};
use super::optimality::{verify_optimality, OptimalityReport, Tier};
use super::supc::{closed_loop, sup_c};
use crate::automata::{
    is_sublanguage, language_includes, project, sync2, sync_product, Alphabet, Generator, InclusionMode,
};
use crate::error::{Error, Result};
use crate::verify::{is_controllable, is_decomposable, GroupingPlan, Verdict};

/// Knobs of [`synthesize_two_level`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SynthesisOptions {
    /// Check the strict variant instead of local control consistency in the
    /// optimality conditions.
    pub strict_occ: bool,
}

/// Per-group part of a synthesis result.
#[derive(Clone, Debug)]
pub struct GroupResult {
    pub alphabet: Alphabet,
    /// `G_{k_j}`.
    pub coordinator: Generator,
    /// `supC_{k_j}`.
    pub sup_coordinator: Generator,
    /// Agents (plant indices) of the group.
    pub members: Vec<usize>,
    /// `supC_{i+k_j}` for each member, in `members` order.
    pub locals: Vec<Generator>,
}

/// Safety facts recorded for every synthesis run.
#[derive(Clone, Debug)]
pub struct Safety {
    pub within_spec: bool,
    /// Controllability of the global result w.r.t. `‖_i L(G_i)`.
    pub controllable: Verdict,
}

#[derive(Clone, Debug)]
pub struct SynthesisResult {
    pub plan: GroupingPlan,
    pub groups: Vec<GroupResult>,
    /// `‖_j ‖_{i∈I_j} supC_{i+k_j}`.
    pub global: Generator,
    pub safety: Safety,
    pub optimality: OptimalityReport,
}

impl SynthesisResult {
    /// `supC_{i+k_j}` of agent `i`.
    pub fn local(&self, agent: usize) -> Option<&Generator> {
        self.groups.iter().find_map(|g| {
            let pos = g.members.iter().position(|&m| m == agent)?;
            Some(&g.locals[pos])
        })
    }

    /// `‖_j ‖_{i∈I_j} L(S_i / G_i ‖ (S_{k_j} / G_{k_j}))` with the computed
    /// supervisors.
    pub fn closed_loop_composition(&self, plants: &[Generator]) -> Result<Generator> {
        let mut loops = Vec::new();
        for g in &self.groups {
            let coord_loop = closed_loop(&g.sup_coordinator, &g.coordinator);
            for (&i, sup) in g.members.iter().zip(&g.locals) {
                loops.push(closed_loop(sup, &sync2(&plants[i], &coord_loop)));
            }
        }
        sync_product(&loops.iter().collect::<Vec<_>>())
    }
}

fn not_decomposable(stage: String, verdict: Verdict, alpha: &Alphabet, pool: &Alphabet) -> Error {
    let witness = verdict.counterexample.map(|cx| cx.word).unwrap_or_default();
    let suggestion = pick_event(&witness, alpha, pool);
    Error::NotDecomposable {
        stage,
        witness,
        suggestion,
    }
}

/// Checks two-level conditional decomposability of `spec` (already over the
/// plants' union alphabet) with merged coordinator alphabets.
pub fn check_two_level_decomposability(spec: &Generator, plants: &[Generator], plan: &GroupingPlan) -> Result<()> {
    let alphabets: Vec<Alphabet> = plants.iter().map(|g| g.alphabet().clone()).collect();
    let unions: Vec<Alphabet> = (0..plan.groups.len())
        .map(|j| plan.group_union(j, &alphabets))
        .collect();
    let top: Vec<Alphabet> = unions.iter().map(|u| u.union(&plan.high_level)).collect();
    let verdict = is_decomposable(spec, &top)?;
    if !verdict.holds {
        return Err(not_decomposable(
            "high-level".into(),
            verdict,
            &plan.high_level,
            spec.alphabet(),
        ));
    }
    for (j, members) in plan.groups.iter().enumerate() {
        let ak = &plan.group_alphabets[j];
        let group_spec = project(spec, &top[j]);
        let pieces: Vec<Alphabet> = members.iter().map(|&i| alphabets[i].union(ak)).collect();
        let verdict = is_decomposable(&group_spec, &pieces)?;
        if !verdict.holds {
            return Err(not_decomposable(
                format!("group {}", j + 1),
                verdict,
                ak,
                group_spec.alphabet(),
            ));
        }
    }
    Ok(())
}

fn synthesize_group(
    spec: &Generator,
    plants: &[Generator],
    members: &[usize],
    ak: &Alphabet,
    uncontrollable: &Alphabet,
) -> Result<GroupResult> {
    let coordinator = build_coordinator(plants, ak)?;
    let sup_coordinator = sup_c(&project(spec, ak), &coordinator, &ak.intersection(uncontrollable));
    let locals = members
        .par_iter()
        .map(|&i| {
            let local = plants[i].alphabet().union(ak);
            sup_c(
                &project(spec, &local),
                &sync2(&plants[i], &sup_coordinator),
                &local.intersection(uncontrollable),
            )
        })
        .collect();
    Ok(GroupResult {
        alphabet: ak.clone(),
        coordinator,
        sup_coordinator,
        members: members.to_vec(),
        locals,
    })
}

/// Two-level coordination synthesis:
/// `supC_{k_j} = supC(P_{k_j}(K), L(G_{k_j}), A_{k_j,u})`,
/// `supC_{i+k_j} = supC(P_{i+k_j}(K), L(G_i) ‖ supC_{k_j}, A_{i+k_j,u})`,
/// composed into the global result. Groups run in parallel.
///
/// Fails with [`Error::NotDecomposable`] unless the spec is two-level
/// conditionally decomposable for the plan.
pub fn synthesize_two_level(
    plants: &[Generator],
    spec: &Generator,
    plan: &GroupingPlan,
    uncontrollable: &Alphabet,
    options: SynthesisOptions,
) -> Result<SynthesisResult> {
    if plants.is_empty() {
        return Err(Error::input("synthesis needs at least one plant"));
    }
    let alphabets: Vec<Alphabet> = plants.iter().map(|g| g.alphabet().clone()).collect();
    plan.validate(&alphabets)?;
    let all = Alphabet::union_all(&alphabets);
    if !spec.alphabet().is_subset(&all) {
        return Err(Error::input(format!(
            "spec events {} occur in no plant",
            spec.alphabet().difference(&all)
        )));
    }
    let spec = spec.with_alphabet(all.clone())?;
    check_two_level_decomposability(&spec, plants, plan)?;

    let groups: Vec<GroupResult> = plan
        .groups
        .par_iter()
        .zip(plan.group_alphabets.par_iter())
        .map(|(members, ak)| synthesize_group(&spec, plants, members, ak, uncontrollable))
        .collect::<Result<_>>()?;

    let locals: Vec<&Generator> = groups.iter().flat_map(|g| g.locals.iter()).collect();
    let global = sync_product(&locals)?.with_alphabet(all)?;
    let plant = sync_product(&plants.iter().collect::<Vec<_>>())?;
    let safety = Safety {
        within_spec: is_sublanguage(&global, &spec),
        controllable: is_controllable(&global, &plant, uncontrollable),
    };
    if !safety.within_spec || !safety.controllable.holds {
        log::error!("synthesis produced an unsafe result; this is a bug");
    }
    let mut result = SynthesisResult {
        plan: plan.clone(),
        groups,
        global,
        safety,
        optimality: OptimalityReport::unchecked(),
    };
    result.optimality = verify_optimality(&result, plants, plan, uncontrollable, options.strict_occ)?;
    Ok(result)
}

/// The global result of [`synthesize_two_level`] and whether it is known
/// to be the supremal two-level conditionally controllable sublanguage.
pub fn sup_two_cc(
    plants: &[Generator],
    spec: &Generator,
    plan: &GroupingPlan,
    uncontrollable: &Alphabet,
) -> Result<(Generator, bool)> {
    let r = synthesize_two_level(plants, spec, plan, uncontrollable, SynthesisOptions::default())?;
    let optimal = r.optimality.tier != Tier::SafeOnly;
    Ok((r.global, optimal))
}

/// `P_{k_j}(supC_{i+k_j}) ⊆ supC_{k_j}` for every group and member.
pub fn check_inclusion_lemma(result: &SynthesisResult) -> bool {
    result.groups.iter().all(|g| {
        g.locals.iter().all(|local| {
            let p = project(local, &g.alphabet);
            language_includes(&g.sup_coordinator, &p, InclusionMode::Subset).holds
        })
    })
}
