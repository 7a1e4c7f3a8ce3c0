use std::fmt;

use crate::automata::{project, sync_product, Alphabet, Event, Generator, Word};
use crate::error::Result;
use crate::verify::{is_decomposable, is_observer, GroupingPlan};

/// Why an event was added to a coordinator alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionReason {
    /// Needed for (conditional) decomposability; `witness` is the shortest
    /// word of the composition outside the specification.
    Decomposability,
    /// Needed for the observer property of the projection of plant `plant`
    /// (0-based); `witness` is the offending word.
    Observer { plant: usize },
}

/// One greedy alphabet extension step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub event: Event,
    pub reason: ExtensionReason,
    pub witness: Word,
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            ExtensionReason::Decomposability => write!(f, "{} decomposability \"{}\"", self.event, self.witness),
            ExtensionReason::Observer { plant } => {
                write!(f, "{} observer{} \"{}\"", self.event, plant + 1, self.witness)
            }
        }
    }
}

/// A group coordinator: its alphabet, generator and how the alphabet was
/// obtained.
#[derive(Clone, Debug)]
pub struct CoordinatorSpec {
    pub group: usize,
    pub alphabet: Alphabet,
    pub coordinator: Generator,
    pub provenance: Vec<Extension>,
}

/// Coordinator over `alphabet`: `‖_i P(G_i)` over all plants.
pub fn build_coordinator(plants: &[Generator], alphabet: &Alphabet) -> Result<Generator> {
    let projections: Vec<Generator> = plants
        .iter()
        .map(|g| project(g, &g.alphabet().intersection(alphabet)))
        .collect();
    let refs: Vec<&Generator> = projections.iter().collect();
    let g = if refs.is_empty() {
        Generator::epsilon(Alphabet::new())
    } else {
        sync_product(&refs)?
    };
    g.with_alphabet(g.alphabet().union(alphabet))
}

/// Picks the event added for a witness: the smallest event of the word not
/// yet in `alpha`, else the smallest event of `pool` not yet in `alpha`.
pub(crate) fn pick_event(witness: &Word, alpha: &Alphabet, pool: &Alphabet) -> Option<Event> {
    let in_word: Alphabet = witness.iter().filter(|e| !alpha.contains(e)).cloned().collect();
    in_word
        .iter()
        .next()
        .cloned()
        .or_else(|| pool.difference(alpha).iter().next().cloned())
}

/// Grows `alpha` until `spec` is decomposable into the pieces
/// `base_r ∪ alpha`.
pub(crate) fn extend_for_decomposability(
    spec: &Generator,
    bases: &[Alphabet],
    alpha: &mut Alphabet,
    provenance: &mut Vec<Extension>,
) -> Result<()> {
    loop {
        let pieces: Vec<Alphabet> = bases.iter().map(|b| b.union(alpha)).collect();
        let verdict = is_decomposable(spec, &pieces)?;
        let Some(cx) = verdict.counterexample else {
            return Ok(());
        };
        let Some(e) = pick_event(&cx.word, alpha, spec.alphabet()) else {
            // Unreachable: decomposability holds once alpha covers the spec.
            return Ok(());
        };
        log::info!(
            "adding {e} to coordinator alphabet (decomposability witness \"{}\")",
            cx.word
        );
        alpha.insert(e.clone());
        provenance.push(Extension {
            event: e,
            reason: ExtensionReason::Decomposability,
            witness: cx.word,
        });
    }
}

/// Group coordinator alphabet: the smallest greedy extension of `seed`
/// making `spec` (the group part of the specification) conditionally
/// decomposable with respect to the group plants' alphabets and the result.
/// With `ensure_observer`, events are also added until the projection of
/// every group plant onto the result is an observer.
pub fn build_group_alphabet(
    spec: &Generator,
    group_plants: &[&Generator],
    seed: &Alphabet,
    ensure_observer: bool,
) -> Result<(Alphabet, Vec<Extension>)> {
    let mut alpha = seed.clone();
    let mut provenance = Vec::new();
    let bases: Vec<Alphabet> = group_plants.iter().map(|g| g.alphabet().clone()).collect();
    loop {
        extend_for_decomposability(spec, &bases, &mut alpha, &mut provenance)?;
        if !ensure_observer {
            break;
        }
        let mut grown = false;
        for (i, g) in group_plants.iter().enumerate() {
            let verdict = is_observer(g, &alpha.intersection(g.alphabet()))?;
            if let Some(cx) = verdict.counterexample {
                if let Some(e) = pick_event(&cx.word, &alpha, g.alphabet()) {
                    alpha.insert(e.clone());
                    provenance.push(Extension {
                        event: e,
                        reason: ExtensionReason::Observer { plant: i },
                        witness: cx.word,
                    });
                    grown = true;
                    break;
                }
            }
        }
        if !grown {
            break;
        }
    }
    Ok((alpha, provenance))
}

/// Alphabet choices left open by a caller of [`complete_plan`].
#[derive(Clone, Debug, Default)]
pub struct PlanRequest {
    pub groups: Vec<Vec<usize>>,
    pub high_level: Option<Alphabet>,
    pub group_alphabets: Option<Vec<Alphabet>>,
    pub ensure_observer: bool,
}

/// Fills in the coordinator alphabets of a grouping.
///
/// A missing high-level alphabet starts from the events shared between
/// groups and is extended until `K = ‖_r P_{I_r+k}(K)`. Missing group
/// alphabets start from the in-group shared events plus the high-level
/// alphabet and are extended by [`build_group_alphabet`] on `P_{I_j+k}(K)`.
/// Supplied alphabets are used unchanged. Returns the plan and, per group,
/// the provenance of its extensions; high-level extensions come first in
/// every group's list.
pub fn complete_plan(
    spec: &Generator,
    plants: &[Generator],
    request: &PlanRequest,
) -> Result<(GroupingPlan, Vec<Vec<Extension>>)> {
    let alphabets: Vec<Alphabet> = plants.iter().map(|g| g.alphabet().clone()).collect();
    let mut plan = GroupingPlan {
        groups: request.groups.clone(),
        group_alphabets: vec![Alphabet::new(); request.groups.len()],
        high_level: Alphabet::new(),
    };
    let unions: Vec<Alphabet> = (0..plan.groups.len())
        .map(|j| plan.group_union(j, &alphabets))
        .collect();
    let mut high_provenance = Vec::new();
    plan.high_level = match &request.high_level {
        Some(a) => a.clone(),
        None => {
            let mut ak = Alphabet::pairwise_shared(&unions);
            extend_for_decomposability(spec, &unions, &mut ak, &mut high_provenance)?;
            ak
        }
    };
    let mut provenance = Vec::new();
    for (j, members) in plan.groups.iter().enumerate() {
        let mut steps = high_provenance.clone();
        let alpha = match &request.group_alphabets {
            Some(given) => given.get(j).cloned().unwrap_or_default(),
            None => {
                let member_alphabets: Vec<Alphabet> = members.iter().map(|&i| alphabets[i].clone()).collect();
                let seed = Alphabet::pairwise_shared(&member_alphabets).union(&plan.high_level);
                let group_spec = project(spec, &unions[j].union(&plan.high_level));
                let group_plants: Vec<&Generator> = members.iter().map(|&i| &plants[i]).collect();
                let (alpha, ext) = build_group_alphabet(&group_spec, &group_plants, &seed, request.ensure_observer)?;
                steps.extend(ext);
                alpha
            }
        };
        plan.group_alphabets[j] = alpha;
        provenance.push(steps);
    }
    plan.validate(&alphabets)?;
    Ok((plan, provenance))
}
