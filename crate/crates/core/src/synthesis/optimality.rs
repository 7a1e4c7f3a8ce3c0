//! Sufficient conditions under which the composed local supervisors are
//! the supremal two-level conditionally controllable sublanguage.
//!
//! Every tier shares the high-level hypothesis `H_k`: for each group the
//! projection `P_k` from `A_{k_j}` is an `L_{k_j}`-observer and control
//! consistent. `H_k` is only used to make `P_k(M_j)` controllable w.r.t.
//! `P_k(L_{k_j})` (where `M_j = ‖_{i∈I_j} supC_{i+k_j}`), so that
//! conclusion is accepted directly when the observer route fails. With a
//! single group the hypothesis is vacuous.

use super::pipeline::SynthesisResult;
use crate::automata::{
    intersection, inverse_project, language_includes, project, sync_product, Alphabet, Generator, InclusionMode,
};
use crate::error::Result;
use crate::verify::{is_controllable, is_lcc, is_observer, CheckKind, Counterexample, GroupingPlan, Verdict};

/// Strongest guarantee established for a synthesis result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tier {
    OptimalThm3,
    OptimalCor1,
    OptimalLcc,
    SafeOnly,
}

impl Tier {
    pub fn as_str(self) -> &'static str {
        match self {
            Tier::OptimalThm3 => "OPTIMAL_THM3",
            Tier::OptimalCor1 => "OPTIMAL_COR1",
            Tier::OptimalLcc => "OPTIMAL_LCC",
            Tier::SafeOnly => "SAFE_ONLY",
        }
    }
}

impl std::fmt::Display for Tier {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the high-level hypothesis was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HighLevelRoute {
    /// One group: nothing to check.
    SingleGroup,
    /// Observer and control consistency of `P_k` on every `L_{k_j}`.
    Observer,
    /// Direct controllability of `P_k(M_j)` for some group.
    ProjectedControllability,
    Failed,
}

impl HighLevelRoute {
    pub fn as_str(self) -> &'static str {
        match self {
            HighLevelRoute::SingleGroup => "single-group",
            HighLevelRoute::Observer => "observer",
            HighLevelRoute::ProjectedControllability => "projected-controllability",
            HighLevelRoute::Failed => "failed",
        }
    }
}

/// Wording attached to results without an optimality guarantee.
pub const SAFE_ONLY_CAVEAT: &str =
    "result is contained in the specification and controllable, but may be smaller than the supremal two-level conditionally controllable sublanguage";

/// Verdicts of all tiers; `tier` is the first that holds.
#[derive(Clone, Debug)]
pub struct OptimalityReport {
    pub tier: Tier,
    pub thm3: Verdict,
    pub cor1: Verdict,
    pub lcc: Verdict,
    pub high_level: Verdict,
    pub high_level_route: HighLevelRoute,
    pub strict_occ: bool,
}

impl OptimalityReport {
    pub(crate) fn unchecked() -> Self {
        OptimalityReport {
            tier: Tier::SafeOnly,
            thm3: Verdict::pass(),
            cor1: Verdict::pass(),
            lcc: Verdict::pass(),
            high_level: Verdict::pass(),
            high_level_route: HighLevelRoute::SingleGroup,
            strict_occ: false,
        }
    }

    pub fn caveat(&self) -> Option<&'static str> {
        (self.tier == Tier::SafeOnly).then_some(SAFE_ONLY_CAVEAT)
    }
}

fn first_failure(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    verdicts.into_iter().find(|v| !v.holds).unwrap_or_else(Verdict::pass)
}

fn consistency(plant: &Generator, onto: &Alphabet, uncontrollable: &Alphabet, strict_occ: bool) -> Result<Verdict> {
    let obs = is_observer(plant, onto)?;
    if !obs.holds {
        return Ok(obs);
    }
    is_lcc(plant, onto, uncontrollable, strict_occ)
}

fn high_level(
    result: &SynthesisResult,
    plan: &GroupingPlan,
    uncontrollable: &Alphabet,
    strict_occ: bool,
) -> Result<(Verdict, HighLevelRoute)> {
    if plan.groups.len() <= 1 {
        return Ok((Verdict::pass(), HighLevelRoute::SingleGroup));
    }
    let ak = &plan.high_level;
    let mut route = HighLevelRoute::Observer;
    for (j, g) in result.groups.iter().enumerate() {
        let via_observer = consistency(
            &g.coordinator,
            ak,
            &uncontrollable.intersection(&g.alphabet),
            strict_occ,
        )?;
        if via_observer.holds {
            continue;
        }
        let mj = sync_product(&g.locals.iter().collect::<Vec<_>>())?;
        let direct = is_controllable(
            &project(&mj, ak),
            &project(&g.coordinator, ak),
            &ak.intersection(uncontrollable),
        );
        if !direct.holds {
            return Ok((via_observer.map_cx(|cx| cx.with_group(j)), HighLevelRoute::Failed));
        }
        route = HighLevelRoute::ProjectedControllability;
    }
    Ok((Verdict::pass(), route))
}

/// Evaluates every optimality tier for a synthesis result.
///
/// * `OPTIMAL_THM3`: `∩_{i∈I_j} P_{k_j}(supC_{i+k_j})` controllable w.r.t.
///   `L(G_{k_j})` for every group;
/// * `OPTIMAL_COR1`: `P_{k_j}(supC_{i+k_j}) = supC_{k_j}` for all `i`, `j`;
/// * `OPTIMAL_LCC`: `P_{k_j}` is an observer and control consistent for
///   `(P_i)^{-1} L(G_i)` over `A_i ∪ A_{k_j}`;
///
/// each together with the high-level hypothesis.
pub fn verify_optimality(
    result: &SynthesisResult,
    plants: &[Generator],
    plan: &GroupingPlan,
    uncontrollable: &Alphabet,
    strict_occ: bool,
) -> Result<OptimalityReport> {
    let (hk, route) = high_level(result, plan, uncontrollable, strict_occ)?;

    let mut thm3 = Vec::new();
    let mut cor1 = Vec::new();
    let mut lcc = Vec::new();
    for (j, g) in result.groups.iter().enumerate() {
        let ak = &g.alphabet;
        let aku = ak.intersection(uncontrollable);
        let projected: Vec<Generator> = g.locals.iter().map(|l| project(l, ak)).collect();
        let meet = projected
            .iter()
            .skip(1)
            .fold(projected[0].clone(), |acc, p| intersection(&acc, p));
        thm3.push(is_controllable(&meet, &g.coordinator, &aku).map_cx(|cx| cx.with_group(j)));

        for ((&i, p), local) in g.members.iter().zip(&projected).zip(&g.locals) {
            let eq = language_includes(&g.sup_coordinator, p, InclusionMode::Equal);
            cor1.push(match eq.witness {
                None => Verdict::pass(),
                Some(w) => Verdict::fail(
                    Counterexample::new(CheckKind::LanguageEquality, w)
                        .with_group(j)
                        .with_agent(i),
                ),
            });
            let lifted = inverse_project(&plants[i], local.alphabet())?;
            let unc = local.alphabet().intersection(uncontrollable);
            lcc.push(consistency(&lifted, ak, &unc, strict_occ)?.map_cx(|cx| cx.with_group(j).with_agent(i)));
        }
    }
    let with_hk = |v: Verdict| if v.holds { hk.clone() } else { v };
    let thm3 = with_hk(first_failure(thm3));
    let cor1 = with_hk(first_failure(cor1));
    let lcc = with_hk(first_failure(lcc));
    let tier = if thm3.holds {
        Tier::OptimalThm3
    } else if cor1.holds {
        Tier::OptimalCor1
    } else if lcc.holds {
        Tier::OptimalLcc
    } else {
        Tier::SafeOnly
    };
    Ok(OptimalityReport {
        tier,
        thm3,
        cor1,
        lcc,
        high_level: hk,
        high_level_route: route,
        strict_occ,
    })
}
