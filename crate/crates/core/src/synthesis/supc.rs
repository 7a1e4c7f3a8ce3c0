use std::collections::{BTreeMap, BTreeSet};

use crate::automata::{explore, sync2, Alphabet, Generator, StateId};

/// Supremal controllable sublanguage of `L(spec) ∩ L(plant)` with respect
/// to `L(plant)` and `uncontrollable`.
///
/// Works on the product of spec and plant: a pair is bad if the plant
/// enables an uncontrollable event the spec does not, or if an
/// uncontrollable transition leads to a bad pair. Good pairs reachable
/// through good pairs form the result, over the union alphabet.
pub fn sup_c(spec: &Generator, plant: &Generator, uncontrollable: &Alphabet) -> Generator {
    let alphabet = spec.alphabet().union(plant.alphabet());
    let init = spec.initial().zip(plant.initial());
    let step = |&(k, l): &(StateId, StateId)| {
        alphabet
            .iter()
            .filter_map(|e| Some((e.clone(), (spec.step(k, e)?, plant.step(l, e)?))))
            .collect::<Vec<_>>()
    };
    let (product, keys) = explore(alphabet.clone(), init, step);

    let mut bad: BTreeSet<StateId> = BTreeSet::new();
    for (q, &(k, l)) in keys.iter().enumerate() {
        let exits = uncontrollable
            .iter()
            .any(|u| plant.enables(l, u) && !spec.enables(k, u));
        if exits {
            bad.insert(q);
        }
    }
    // Backward closure along uncontrollable transitions.
    let mut preds: BTreeMap<StateId, Vec<StateId>> = BTreeMap::new();
    for (q, e, d) in product.transitions() {
        if uncontrollable.contains(e) {
            preds.entry(d).or_default().push(q);
        }
    }
    let mut stack: Vec<StateId> = bad.iter().copied().collect();
    while let Some(q) = stack.pop() {
        for &p in preds.get(&q).into_iter().flatten() {
            if bad.insert(p) {
                stack.push(p);
            }
        }
    }

    let init = product.initial().filter(|q| !bad.contains(q));
    let (result, _) = explore(alphabet, init, |&q| {
        product
            .transitions_from(q)
            .filter(|(_, d)| !bad.contains(d))
            .map(|(e, d)| (e.clone(), d))
            .collect()
    });
    result
}

/// Closed-loop language of a prefix-closed supervisor realization acting
/// on `plant`: the synchronous product of the two.
pub fn closed_loop(supervisor: &Generator, plant: &Generator) -> Generator {
    sync2(supervisor, plant)
}
