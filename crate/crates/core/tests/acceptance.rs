//! Acceptance criteria 1-9. Each criterion prints one PASS/FAIL line; the
//! single test fails if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::*;
use coordctl::automata::{
    enumerate_bounded, intersection, is_sublanguage, language_equal, project, sync2, sync_product, union, Alphabet,
    Generator, Word,
};
use coordctl::decentralized::{solve, translate, SolveOptions};
use coordctl::synthesis::{
    build_group_alphabet, check_inclusion_lemma, complete_plan, sup_c, synthesize_two_level, PlanRequest,
    SynthesisOptions, SynthesisResult, Tier,
};
use coordctl::verify::{
    check_shared_consistency, coobservability_verifier_size, is_controllable, is_coobservable, is_decomposable, is_lcc,
    is_observer, is_two_level_conditionally_controllable, AgentAlphabet, GroupingPlan,
};

const C1_LIMIT: Duration = Duration::from_secs(1);
const C2_LIMIT: Duration = Duration::from_secs(5);
const C3_INSTANCES: usize = 200;
const C4_INSTANCES: usize = 100;
const C5_INSTANCES: usize = 100;
const C6_INSTANCES: usize = 50;
const C7_INSTANCES: usize = 20;
const C8_INSTANCES: usize = 50;
const C8_SAFE_ONLY: usize = 3;
const C8_MAX_DRAWS: usize = 20_000;

/// Collects failed checks of one criterion.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn run_criterion(n: usize, title: &str, f: fn(&mut Checks)) -> bool {
    let mut checks = Checks::default();
    let started = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| f(&mut checks)));
    if let Err(p) = outcome {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        checks.failures.push(format!("panicked: {msg}"));
    }
    let pass = checks.failures.is_empty();
    let mut detail = checks.notes.join("; ");
    if !pass {
        let shown: Vec<&String> = checks.failures.iter().take(5).collect();
        detail = format!("{} failure(s): {:?}; {detail}", checks.failures.len(), shown);
    }
    println!(
        "criterion {n}: {} {title} ({:.2}s) {detail}",
        if pass { "PASS" } else { "FAIL" },
        started.elapsed().as_secs_f64()
    );
    pass
}

fn c1_example_facts(c: &mut Checks) {
    let started = Instant::now();
    let ex = example();
    let agents = normalized_agents(&ex);
    let unc = ex.uncontrollable();

    let v = is_controllable(&ex.spec, &ex.plant, &unc);
    c.check(!v.holds, "K must not be controllable");
    if let Some(cx) = &v.counterexample {
        let s = &cx.word;
        c.check(
            s.last().map(|e| e.name()) == Some("b"),
            format!("witness {s} must end in b"),
        );
        c.check(
            s.project(&Alphabet::of(&["v1", "v2"])) == Word::of("v2 v1"),
            format!("witness {s} projects to v2 v1"),
        );
        c.check(ex.plant.accepts(s) && !ex.spec.accepts(s), "witness is in L but not K");
        c.note(format!("controllability witness {s}"));
    }

    c.check(
        is_coobservable(&ex.spec, &ex.plant, &agents, 6).unwrap().holds,
        "K must be coobservable",
    );

    let n = sup_c(&ex.spec, &ex.plant, &unc);
    c.check(n.accepts(&Word::of("v1 v2")), "v1 v2 in N");
    c.check(n.accepts(&Word::of("v2")), "v2 in N");
    c.check(!n.accepts(&Word::of("v2 v1")), "v2 v1 not in N");
    let v = is_coobservable(&n, &ex.plant, &agents, 6).unwrap();
    c.check(!v.holds, "N must not be coobservable");
    if let Some(cx) = &v.counterexample {
        let sigma = cx.event.clone().unwrap();
        let exit = cx.word.then(&sigma);
        c.check(
            cx.word == Word::of("v2") && sigma.name() == "v1",
            format!("witness s={} σ={sigma}", cx.word),
        );
        c.check(
            n.accepts(&cx.word) && ex.plant.accepts(&exit) && !n.accepts(&exit),
            "s·σ in L minus N",
        );
        let controllers: Vec<usize> = (0..agents.len())
            .filter(|&i| agents[i].controllable.contains(&sigma))
            .collect();
        c.check(
            cx.lookalikes.iter().map(|(i, _)| *i).collect::<Vec<_>>() == controllers,
            "one lookalike per controller of σ",
        );
        for (i, t) in &cx.lookalikes {
            let obs = &agents[*i].observable;
            c.check(
                t.project(obs) == cx.word.project(obs),
                format!("lookalike {t} of agent {}", i + 1),
            );
            c.check(n.accepts(&t.then(&sigma)), format!("lookalike {t}·{sigma} in N"));
        }
        c.note(format!(
            "coobservability witness s={} σ={sigma} lookalikes={:?}",
            cx.word, cx.lookalikes
        ));
    }
    let t = started.elapsed();
    c.check(t < C1_LIMIT, format!("runtime {t:?} over {C1_LIMIT:?}"));
}

fn c2_example_pipeline(c: &mut Checks) {
    let started = Instant::now();
    let ex = example();
    let problem = coordctl::decentralized::DecentralizedProblem {
        plant: ex.plant.clone(),
        spec: ex.spec.clone(),
        controllable: ex.controllable.clone(),
        agents: ex.agents.clone(),
        groups: Some(ex.groups.clone()),
        coordinator_alphabets: Some(ex.coord.clone()),
        high_level: None,
    };
    let tr = translate(&problem).unwrap();
    let request = PlanRequest {
        groups: ex.groups.clone(),
        high_level: None,
        group_alphabets: Some(ex.coord.clone()),
        ensure_observer: false,
    };
    let (plan, provenance) = complete_plan(&tr.spec, &tr.plants, &request).unwrap();
    c.check(plan.high_level == ex.high, format!("A_k = {}", plan.high_level));
    c.check(provenance.iter().all(Vec::is_empty), "A_k needs no extension");

    let alphabets: Vec<Alphabet> = tr.plants.iter().map(|g| g.alphabet().clone()).collect();
    let top = |j: usize| plan.group_union(j, &alphabets).union(&plan.high_level);
    let g1_spec = project(&tr.spec, &top(0));
    let (a1, ext) = build_group_alphabet(&g1_spec, &[&tr.plants[0], &tr.plants[1]], &ex.coord[0], false).unwrap();
    c.check(a1 == ex.coord[0] && ext.is_empty(), "A_k1 passes unchanged");
    let g2_spec = project(&tr.spec, &top(1));
    let pieces = vec![alphabets[2].union(&ex.coord[1]), alphabets[3].union(&ex.coord[1])];
    c.check(
        is_decomposable(&g2_spec, &pieces).unwrap().holds,
        "P_{3+4+k}(K) decomposable with A_k2",
    );

    let r = synthesize_two_level(
        &tr.plants,
        &tr.spec,
        &plan,
        &tr.uncontrollable,
        SynthesisOptions::default(),
    )
    .unwrap();
    let g2 = &r.groups[1];
    let expected: Vec<Word> = ["", "v", "v1", "v b2", "v1 b"].iter().map(|w| Word::of(w)).collect();
    c.check(
        enumerate_bounded(&g2.coordinator, 3) == expected,
        "L_k2 words up to length 3",
    );
    c.check(language_equal(&g2.sup_coordinator, &g2.coordinator), "supC_k2 = L_k2");
    let a3k = alphabets[2].union(&ex.coord[1]);
    c.check(
        language_equal(&g2.locals[0], &project(&tr.spec, &a3k)),
        "supC_{3+k2} = P_{3+k2}(K)",
    );
    let s4 = &g2.locals[1];
    let late_v1 = enumerate_bounded(s4, 10).into_iter().find(|w| {
        let pos = |name: &str| w.iter().position(|e| e.name() == name);
        matches!((pos("v2"), pos("v1")), (Some(i), Some(j)) if i < j)
    });
    c.check(
        late_v1.is_none(),
        format!("supC_{{4+k2}} allows v1 after v2: {late_v1:?}"),
    );
    c.check(
        !s4.has_cycle(),
        "supC_{4+k2} is finite, so the bounded check is exhaustive",
    );

    let sol = solve(&problem, SolveOptions::default()).unwrap();
    c.check(
        is_controllable(&sol.synthesis.global, &ex.plant, &ex.uncontrollable()).holds,
        "global controllable",
    );
    c.check(sol.coobservable.holds, "global coobservable for the enriched agents");
    c.check(sol.synthesis.optimality.tier != Tier::SafeOnly, "tier not SAFE_ONLY");
    c.note(format!("tier {}", sol.synthesis.optimality.tier.as_str()));
    let t = started.elapsed();
    c.check(t < C2_LIMIT, format!("runtime {t:?} over {C2_LIMIT:?}"));
}

fn c3_supc_oracle(c: &mut Checks) {
    let mut rng = rng(3);
    let mut done = 0;
    while done < C3_INSTANCES {
        let k = rng.gen_range(2..=4);
        let alpha = alphabet_of(&event_names(k));
        let count = rng.gen_range(1..=4);
        let spec = random_finite(&mut rng, &alpha, count, 3);
        if enumerate_bounded(&spec, 16).len() > 8 {
            continue;
        }
        let states = rng.gen_range(1..=4);
        let plant = random_generator(&mut rng, &alpha, states, 0.6, false);
        let mut unc = random_subset(&mut rng, &alpha, 0.4);
        while unc.len() > 2 {
            let first = unc.iter().next().unwrap().clone();
            unc = unc.difference(&Alphabet::from_iter([first]));
        }
        done += 1;
        let got = words(&sup_c(&spec, &plant, &unc), 16);
        let want = brute_sup_c(&spec, &plant, &unc);
        c.check(
            got == want,
            format!("instance {done}: sup_c {got:?} vs oracle {want:?}"),
        );
    }
    c.note(format!("{done} instances"));
}

fn c4_lemmas(c: &mut Checks) {
    let mut rng = rng(4);
    let pool = alphabet_of(&event_names(4));

    // Product of nested projections.
    for i in 0..C4_INSTANCES {
        let states = rng.gen_range(1..=4);
        let g = random_generator(&mut rng, &pool, states, 0.5, false);
        let b1 = random_subset(&mut rng, &pool, 0.6);
        let b2 = random_subset(&mut rng, &b1, 0.5);
        let lhs = sync2(&project(&g, &b1), &project(&g, &b2));
        c.check(
            language_equal(&lhs, &project(&g, &b1)),
            format!("nested projections #{i}"),
        );
    }

    // Projection distributes over products when shared events are kept.
    for i in 0..C4_INSTANCES {
        let n = rng.gen_range(2..=3);
        let big = alphabet_of(&event_names(5));
        let parts: Vec<Generator> = (0..n)
            .map(|_| {
                let a = random_subset(&mut rng, &big, 0.5);
                let states = rng.gen_range(1..=3);
                random_generator(&mut rng, &a, states, 0.6, false)
            })
            .collect();
        let alphas: Vec<Alphabet> = parts.iter().map(|g| g.alphabet().clone()).collect();
        let ak = Alphabet::pairwise_shared(&alphas).union(&random_subset(&mut rng, &big, 0.3));
        let lhs = project(&sync_product(&parts.iter().collect::<Vec<_>>()).unwrap(), &ak);
        let projected: Vec<Generator> = parts.iter().map(|g| project(g, &ak)).collect();
        let rhs = sync_product(&projected.iter().collect::<Vec<_>>()).unwrap();
        c.check(language_equal(&lhs, &rhs), format!("projection over product #{i}"));
    }

    // Products of controllable pairs are controllable.
    for i in 0..C4_INSTANCES {
        let n = rng.gen_range(2..=3);
        let big = alphabet_of(&event_names(5));
        let unc = random_subset(&mut rng, &big, 0.4);
        let mut ks = Vec::new();
        let mut ls = Vec::new();
        for _ in 0..n {
            let a = random_subset(&mut rng, &big, 0.6);
            let states = rng.gen_range(1..=3);
            let l = random_generator(&mut rng, &a, states, 0.6, false);
            let au = a.intersection(&unc);
            let states = rng.gen_range(1..=3);
            let k = sup_c(&random_generator(&mut rng, &a, states, 0.7, false), &l, &au);
            c.check(
                is_controllable(&k, &l, &au).holds,
                format!("product controllability premise #{i}"),
            );
            ks.push(k);
            ls.push(l);
        }
        let k = sync_product(&ks.iter().collect::<Vec<_>>()).unwrap();
        let l = sync_product(&ls.iter().collect::<Vec<_>>()).unwrap();
        c.check(
            is_controllable(&k, &l, &unc).holds,
            format!("product controllability #{i}"),
        );
    }

    // Transitivity of controllability along K ⊆ L ⊆ M.
    for i in 0..C4_INSTANCES {
        let states = rng.gen_range(1..=4);
        let m = random_generator(&mut rng, &pool, states, 0.6, false);
        let unc = random_subset(&mut rng, &pool, 0.4);
        let states = rng.gen_range(1..=4);
        let l = sup_c(&random_generator(&mut rng, &pool, states, 0.7, false), &m, &unc);
        let states = rng.gen_range(1..=4);
        let k = sup_c(&random_generator(&mut rng, &pool, states, 0.7, false), &l, &unc);
        let premises = is_controllable(&k, &l, &unc).holds && is_controllable(&l, &m, &unc).holds;
        c.check(
            premises && is_controllable(&k, &m, &unc).holds,
            format!("transitivity #{i}"),
        );
    }

    // Inclusion on every pipeline run.
    let mut runs = 0;
    while runs < C4_INSTANCES {
        let inst = random_pipeline_instance(&mut rng);
        let Some((plan, r)) = run_pipeline(&inst) else { continue };
        runs += 1;
        c.check(check_inclusion_lemma(&r), format!("inclusion (library) run {runs}"));
        for g in &r.groups {
            for local in &g.locals {
                let p = project(local, &g.alphabet);
                c.check(is_sublanguage(&p, &g.sup_coordinator), format!("inclusion run {runs}"));
            }
        }
        let _ = plan;
    }

    // Projection preserves controllability under observer and strict LCC.
    let mut qualified = 0;
    let mut attempts = 0;
    while qualified < C4_INSTANCES && attempts < 20_000 {
        attempts += 1;
        let states = rng.gen_range(2..=4);
        let l = random_generator(&mut rng, &pool, states, 0.5, false);
        let ao = random_subset(&mut rng, &pool, 0.5);
        let unc = random_subset(&mut rng, &pool, 0.4);
        if !is_observer(&l, &ao).unwrap().holds || !is_lcc(&l, &ao, &unc, true).unwrap().holds {
            continue;
        }
        qualified += 1;
        let states = rng.gen_range(1..=4);
        let k = sup_c(&random_generator(&mut rng, &pool, states, 0.7, false), &l, &unc);
        let v = is_controllable(&project(&k, &ao), &project(&l, &ao), &unc.intersection(&ao));
        c.check(v.holds, format!("projected controllability #{qualified}"));
    }
    c.check(
        qualified == C4_INSTANCES,
        format!("only {qualified} projected-controllability instances met the hypotheses"),
    );
    c.note(format!(
        "6 suites x {C4_INSTANCES}; observer and strict LCC met in {qualified}/{attempts} draws"
    ));
}

fn c5_coobservability_oracle(c: &mut Checks) {
    let mut rng = rng(5);
    let mut violations = 0;
    for i in 0..C5_INSTANCES {
        let k = rng.gen_range(2..=4);
        let alpha = alphabet_of(&event_names(k));
        let states = rng.gen_range(2..=4);
        let plant = random_generator(&mut rng, &alpha, states, 0.7, true);
        // Spec: the plant with some transitions removed.
        let kept: Vec<_> = plant
            .transitions()
            .filter(|_| rng.gen_bool(0.7))
            .map(|(q, e, d)| (q, e.clone(), d))
            .collect();
        let spec = Generator::from_transitions(alpha.clone(), plant.num_states(), plant.initial(), kept).unwrap();
        let n = rng.gen_range(1..=3);
        let agents: Vec<AgentAlphabet> = (0..n)
            .map(|_| {
                AgentAlphabet::new(
                    random_subset(&mut rng, &alpha, 0.5),
                    random_subset(&mut rng, &alpha, 0.4),
                )
            })
            .collect();
        let verdict = is_coobservable(&spec, &plant, &agents, 6).unwrap();
        let bound = coobservability_verifier_size(&spec, &plant, &agents, 6).unwrap();
        let oracle = brute_coobservable(&spec, &plant, &agents, bound);
        if !verdict.holds {
            violations += 1;
        }
        c.check(
            verdict.holds == oracle,
            format!("instance {i}: verifier {} oracle {oracle}", verdict.holds),
        );
    }
    c.note(format!("{C5_INSTANCES} instances, {violations} not coobservable"));
}

/// Completes the plan greedily and synthesizes; `None` if the greedy
/// extension or synthesis rejects the instance.
fn run_pipeline(inst: &PipelineInstance) -> Option<(GroupingPlan, SynthesisResult)> {
    let request = PlanRequest {
        groups: inst.groups.clone(),
        ..PlanRequest::default()
    };
    let (plan, _) = complete_plan(&inst.spec, &inst.plants, &request).ok()?;
    let r = run_with_plan(inst, &inst.spec, &plan)?;
    Some((plan, r))
}

fn run_with_plan(inst: &PipelineInstance, spec: &Generator, plan: &GroupingPlan) -> Option<SynthesisResult> {
    synthesize_two_level(
        &inst.plants,
        spec,
        plan,
        &inst.uncontrollable,
        SynthesisOptions::default(),
    )
    .ok()
}

fn two_level_cc(inst: &PipelineInstance, spec: &Generator, plan: &GroupingPlan, r: &SynthesisResult) -> bool {
    let coords: Vec<Generator> = r.groups.iter().map(|g| g.coordinator.clone()).collect();
    let spec = spec.with_alphabet(inst.plant.alphabet().clone()).unwrap();
    is_two_level_conditionally_controllable(&spec, &inst.plants, plan, &coords, &inst.uncontrollable)
        .unwrap()
        .holds
}

fn c6_closed_loops(c: &mut Checks) {
    let mut rng = rng(6);
    let mut done = 0;
    let mut exact = 0;
    let mut tiers = std::collections::BTreeMap::new();
    while done < C6_INSTANCES {
        let inst = random_pipeline_instance(&mut rng);
        let Some((plan, r)) = run_pipeline(&inst) else { continue };
        done += 1;
        *tiers.entry(r.optimality.tier.as_str()).or_insert(0) += 1;
        let composed = r.closed_loop_composition(&inst.plants).unwrap();
        c.check(
            language_equal(&composed, &r.global),
            format!("instance {done}: closed loops differ from global"),
        );
        // The global result is itself a candidate spec; when it passes the
        // two-level definition the pipeline must reproduce it exactly.
        for (label, spec) in [("spec", inst.spec.clone()), ("global", r.global.clone())] {
            if !two_level_cc(&inst, &spec, &plan, &r) {
                continue;
            }
            let Some(again) = run_with_plan(&inst, &spec, &plan) else {
                continue;
            };
            exact += 1;
            let composed = again.closed_loop_composition(&inst.plants).unwrap();
            c.check(
                language_equal(&composed, &spec) && language_equal(&again.global, &spec),
                format!("instance {done}: {label} passes the definition but is not reproduced"),
            );
        }
    }
    c.check(exact > 0, "no instance exercised the exact case");
    c.note(format!("{done} instances, {exact} exact-match cases, tiers {tiers:?}"));
}

fn c7_union_closure(c: &mut Checks) {
    let mut rng = rng(7);
    let mut done = 0;
    let mut premise_failures = 0;
    let mut draws = 0;
    while done < C7_INSTANCES && draws < 2000 {
        draws += 1;
        let inst = random_pipeline_instance(&mut rng);
        let Some((plan, r)) = run_pipeline(&inst) else { continue };
        let restrict = |rng: &mut Rng8| {
            let states = rng.gen_range(2..=4);
            intersection(
                &inst.spec,
                &random_generator(rng, inst.plant.alphabet(), states, 0.7, false),
            )
        };
        let (ka, kb) = (restrict(&mut rng), restrict(&mut rng));
        let (Some(ra), Some(rb)) = (run_with_plan(&inst, &ka, &plan), run_with_plan(&inst, &kb, &plan)) else {
            continue;
        };
        let outputs = [&r.global, &ra.global, &rb.global];
        if !outputs.iter().all(|m| two_level_cc(&inst, m, &plan, &r)) {
            premise_failures += 1;
            continue;
        }
        done += 1;
        for (x, y) in [(1, 2), (0, 1), (0, 2)] {
            let u = union(outputs[x], outputs[y]);
            c.check(
                two_level_cc(&inst, &u, &plan, &r),
                format!("instance {done}: union of outputs {x},{y}"),
            );
        }
    }
    c.check(done == C7_INSTANCES, format!("only {done} instances"));
    c.note(format!(
        "{done} instances, {premise_failures} skipped with a non-2CC pipeline output"
    ));
}

fn c8_decentralized_safety(c: &mut Checks) {
    let mut rng = rng(8);
    let mut done = 0;
    let mut safe_only = 0;
    let mut errors = 0;
    let mut draws = 0;
    // SAFE_ONLY outcomes are rare in random draws, so keep sampling until
    // some of them have been checked as well.
    while (done < C8_INSTANCES || safe_only < C8_SAFE_ONLY) && draws < C8_MAX_DRAWS {
        draws += 1;
        let problem = random_decentralized(&mut rng);
        let agents: Vec<AgentAlphabet> = problem
            .agents
            .iter()
            .map(|a| AgentAlphabet::new(a.observable.clone(), a.controllable.intersection(&problem.controllable)))
            .collect();
        if !check_shared_consistency(&agents).holds {
            continue;
        }
        done += 1;
        let sol = match solve(&problem, SolveOptions::default()) {
            Ok(s) => s,
            Err(e) => {
                errors += 1;
                c.check(false, format!("instance {done}: {e}"));
                continue;
            }
        };
        if sol.synthesis.optimality.tier == Tier::SafeOnly {
            safe_only += 1;
        }
        let global = &sol.synthesis.global;
        c.check(
            is_sublanguage(global, &problem.spec),
            format!("instance {done}: not within K"),
        );
        let unc = problem.plant.alphabet().difference(&problem.controllable);
        c.check(
            is_controllable(global, &problem.plant, &unc).holds,
            format!("instance {done}: not controllable"),
        );
        c.check(
            sol.controllable.holds,
            format!("instance {done}: solve reports uncontrollable"),
        );
        let co = is_coobservable(global, &problem.plant, &sol.enriched, 6).unwrap();
        c.check(
            co.holds,
            format!("instance {done}: not coobservable: {:?}", co.counterexample),
        );
    }
    c.check(done >= C8_INSTANCES, format!("only {done} instances"));
    c.check(
        safe_only >= C8_SAFE_ONLY,
        format!("only {safe_only} SAFE_ONLY instances"),
    );
    c.note(format!("{done} instances, {safe_only} SAFE_ONLY, {errors} errors"));
}

fn c9_cli_determinism(c: &mut Checks) {
    let problem = fixture("four_agents/problem.prob");
    let run = |dir: &std::path::Path| {
        Command::new(env!("CARGO_BIN_EXE_coordctl"))
            .args(["solve", "decentralized", "--problem"])
            .arg(&problem)
            .arg("-o")
            .arg(dir)
            .output()
            .unwrap()
    };
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let (oa, ob) = (run(a.path()), run(b.path()));
    c.check(oa.status.code() == Some(0), format!("exit {:?}", oa.status.code()));
    c.check(oa.status.code() == ob.status.code(), "exit codes differ");
    c.check(oa.stdout == ob.stdout, "stdout differs");
    let mut names: Vec<String> = std::fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    for name in &names {
        let fa = std::fs::read(a.path().join(name)).unwrap();
        let fb = std::fs::read(b.path().join(name)).map_err(|e| e.to_string());
        c.check(fb.as_deref() == Ok(&fa[..]), format!("{name} differs"));
    }
    c.check(names.len() == 6, format!("outputs {names:?}"));
    c.note(format!("{} files compared", names.len()));
}

type Criterion = (&'static str, fn(&mut Checks));

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        ("example facts", c1_example_facts),
        ("example pipeline", c2_example_pipeline),
        ("supC oracle", c3_supc_oracle),
        ("lemma suites", c4_lemmas),
        ("coobservability oracle", c5_coobservability_oracle),
        ("closed-loop composition", c6_closed_loops),
        ("union closure", c7_union_closure),
        ("decentralized safety", c8_decentralized_safety),
        ("CLI determinism", c9_cli_determinism),
    ];
    let results: Vec<bool> = criteria
        .iter()
        .enumerate()
        .map(|(i, (title, f))| run_criterion(i + 1, title, *f))
        .collect();
    let failed: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| i + 1)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
