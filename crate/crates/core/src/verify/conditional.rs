use super::{is_controllable, CheckKind, GroupingPlan, Verdict};
use crate::automata::{project, sync2, Alphabet, Generator};
use crate::error::{Error, Result};

/// Items (1) and (2) for one coordinator and the plants it serves.
fn check_items(
    spec: &Generator,
    plants: &[(usize, &Generator)],
    coordinator: &Generator,
    coord_alphabet: &Alphabet,
    uncontrollable: &Alphabet,
) -> Verdict {
    let pk = project(spec, coord_alphabet);
    let item1 = is_controllable(&pk, coordinator, &coord_alphabet.intersection(uncontrollable));
    if !item1.holds {
        return item1.map_cx(|mut cx| {
            cx.kind = CheckKind::CondControllabilityItem1;
            cx
        });
    }
    for &(i, g) in plants {
        let local = g.alphabet().union(coord_alphabet);
        let pik = project(spec, &local);
        let plant = sync2(g, &pk);
        let item2 = is_controllable(&pik, &plant, &local.intersection(uncontrollable));
        if !item2.holds {
            return item2.map_cx(|mut cx| {
                cx.kind = CheckKind::CondControllabilityItem2;
                cx.with_agent(i)
            });
        }
    }
    Verdict::pass()
}

/// Conditional controllability of `spec` for `plants` and a coordinator
/// over `coord_alphabet`:
/// (1) `P_k(K)` is controllable w.r.t. `L(G_k)` and `A_k ∩ A_u`;
/// (2) each `P_{i+k}(K)` is controllable w.r.t. `L(G_i) ‖ P_k(K)` and
/// `(A_i ∪ A_k) ∩ A_u`.
pub fn is_conditionally_controllable(
    spec: &Generator,
    plants: &[Generator],
    coordinator: &Generator,
    coord_alphabet: &Alphabet,
    uncontrollable: &Alphabet,
) -> Result<Verdict> {
    if coordinator.alphabet() != coord_alphabet {
        return Err(Error::input(format!(
            "coordinator alphabet {{{}}} differs from {{{}}}",
            coordinator.alphabet(),
            coord_alphabet
        )));
    }
    let indexed: Vec<(usize, &Generator)> = plants.iter().enumerate().collect();
    Ok(check_items(spec, &indexed, coordinator, coord_alphabet, uncontrollable))
}

/// Two-level conditional controllability: items (1) and (2) for each group
/// `j` with coordinator `coordinators[j]` over `plan.group_alphabets[j]`.
pub fn is_two_level_conditionally_controllable(
    spec: &Generator,
    plants: &[Generator],
    plan: &GroupingPlan,
    coordinators: &[Generator],
    uncontrollable: &Alphabet,
) -> Result<Verdict> {
    let alphabets: Vec<Alphabet> = plants.iter().map(|g| g.alphabet().clone()).collect();
    plan.validate(&alphabets)?;
    if coordinators.len() != plan.groups.len() {
        return Err(Error::input(format!(
            "{} groups but {} coordinators",
            plan.groups.len(),
            coordinators.len()
        )));
    }
    for (j, (members, ak)) in plan.groups.iter().zip(&plan.group_alphabets).enumerate() {
        let group: Vec<(usize, &Generator)> = members.iter().map(|&i| (i, &plants[i])).collect();
        let coordinator = &coordinators[j];
        let verdict = if coordinator.alphabet() == ak {
            check_items(spec, &group, coordinator, ak, uncontrollable)
        } else {
            return Err(Error::input(format!(
                "coordinator {} alphabet {{{}}} differs from {{{}}}",
                j + 1,
                coordinator.alphabet(),
                ak
            )));
        };
        if !verdict.holds {
            return Ok(verdict.map_cx(|cx| cx.with_group(j)));
        }
    }
    Ok(Verdict::pass())
}
