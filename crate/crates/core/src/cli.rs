//! Command-line front end. `run` returns the process exit code: 0 when the
//! property holds or synthesis reached an optimality tier, 1 when a property
//! fails or only safety is guaranteed, 2 on bad input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::automata::{enumerate_bounded, project, project_minimal, sync_product, Alphabet, Generator};
use crate::decentralized::{solve, translate, CommunicatedControl, DecentralizedProblem, Solution, SolveOptions};
use crate::error::{Error, Result};
use crate::io::{
    load_automaton, load_problem, parse_alphabet_list, parse_groups, save_automaton, write_automaton, write_file,
    Automaton, Report,
};
use crate::synthesis::{build_coordinator, sup_c, synthesize_two_level, SynthesisOptions, SynthesisResult, Tier};
use crate::verify::{
    check_shared_consistency, is_controllable, is_coobservable, is_decomposable, is_lcc, is_observer,
    is_two_level_conditionally_controllable, AgentAlphabet, GroupingPlan, Verdict, DEFAULT_MAX_AGENTS,
};

#[derive(Parser, Debug)]
#[command(
    name = "coordctl",
    version,
    about = "Coordination control and decentralized supervisor synthesis"
)]
struct Cli {
    /// Log progress to stderr (repeat for more detail).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Synchronous product of automata.
    Product {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Natural projection onto a sub-alphabet.
    Project {
        input: PathBuf,
        #[arg(long, value_parser = alphabet)]
        onto: Alphabet,
        /// Minimize the result.
        #[arg(long)]
        minimal: bool,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Supremal controllable sublanguage.
    Supc {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        plant: PathBuf,
        /// Defaults to the plant's uncontrollable events.
        #[arg(long, value_parser = alphabet)]
        unctrl: Option<Alphabet>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Lists the words of length at most `--maxlen` in shortlex order.
    Enumerate {
        input: PathBuf,
        #[arg(long)]
        maxlen: usize,
    },
    /// Property checks.
    Check {
        #[command(subcommand)]
        check: Check,
    },
    /// Synthesis pipelines.
    Synth {
        #[command(subcommand)]
        synth: Synth,
    },
    /// Problem solvers.
    Solve {
        #[command(subcommand)]
        solve: Solve,
    },
}

#[derive(Args, Debug)]
struct ReportArg {
    /// Also write the report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Check {
    Controllable {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        plant: PathBuf,
        #[arg(long, value_parser = alphabet)]
        unctrl: Option<Alphabet>,
        #[command(flatten)]
        out: ReportArg,
    },
    Observer {
        #[arg(long)]
        plant: PathBuf,
        #[arg(long, value_parser = alphabet)]
        onto: Alphabet,
        #[command(flatten)]
        out: ReportArg,
    },
    Lcc {
        #[arg(long)]
        plant: PathBuf,
        #[arg(long, value_parser = alphabet)]
        onto: Alphabet,
        #[arg(long, value_parser = alphabet)]
        unctrl: Option<Alphabet>,
        #[arg(long)]
        strict_occ: bool,
        #[command(flatten)]
        out: ReportArg,
    },
    /// Decomposability of the spec with respect to alphabets such as "a,b;b,c".
    Cd {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        pieces: String,
        #[command(flatten)]
        out: ReportArg,
    },
    /// Coobservability of the problem's spec (or `--spec`) for its agents.
    Coobservable {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_AGENTS)]
        max_agents_verifier: usize,
        #[command(flatten)]
        out: ReportArg,
    },
    /// Two-level conditional controllability of the problem's spec (or `--spec`).
    Cc2 {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        spec: Option<PathBuf>,
        #[command(flatten)]
        out: ReportArg,
    },
    /// Consistency of shared events among the problem's agents.
    Shared {
        #[arg(long)]
        problem: PathBuf,
        #[command(flatten)]
        out: ReportArg,
    },
}

#[derive(Subcommand, Debug)]
enum Synth {
    TwoLevel {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        plants: Vec<PathBuf>,
        /// 1-based plant indices, e.g. "1,2;3,4".
        #[arg(long)]
        groups: String,
        /// Group coordinator alphabets, e.g. "a,u,b;v,b".
        #[arg(long)]
        coord: String,
        #[arg(long, value_parser = alphabet)]
        highcoord: Alphabet,
        /// Defaults to the union of the plants' uncontrollable events.
        #[arg(long, value_parser = alphabet)]
        unctrl: Option<Alphabet>,
        #[arg(long)]
        strict_occ: bool,
        /// Output directory for supervisors.
        #[arg(short)]
        o: Option<PathBuf>,
        #[command(flatten)]
        out: ReportArg,
    },
}

#[derive(Subcommand, Debug)]
enum Solve {
    Decentralized {
        #[arg(long)]
        problem: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
        /// Communicated events are observed but not actuated by the receiver.
        #[arg(long)]
        observe_only: bool,
        #[arg(long)]
        ensure_observer: bool,
        #[arg(long)]
        strict_occ: bool,
        #[arg(long)]
        target_groups: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_AGENTS)]
        max_agents_verifier: usize,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        out: ReportArg,
    },
}

fn alphabet(s: &str) -> std::result::Result<Alphabet, String> {
    Alphabet::parse_list(s).map_err(|e| e.to_string())
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Log level implied by the `-v` count, for the binary's logger.
pub fn log_level(argv: &[String]) -> log::LevelFilter {
    match Cli::try_parse_from(argv).map(|c| c.verbose).unwrap_or(0) {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    }
}

fn emit_automaton(g: Generator, controllable: Alphabet, o: Option<&Path>) -> Result<()> {
    let a = Automaton::new(g, controllable);
    match o {
        Some(path) => save_automaton(path, &a),
        None => {
            print!("{}", write_automaton(&a));
            Ok(())
        }
    }
}

fn emit_report(r: &Report, path: Option<&Path>) -> Result<()> {
    print!("{r}");
    match path {
        Some(p) => write_file(p, &r.to_string()),
        None => Ok(()),
    }
}

fn verdict_report(v: &Verdict, out: &ReportArg) -> Result<i32> {
    let mut r = Report::new();
    r.set_verdict("", v);
    emit_report(&r, out.report.as_deref())?;
    Ok(if v.holds { 0 } else { 1 })
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Product { inputs, o } => {
            let autos = inputs.iter().map(|p| load_automaton(p)).collect::<Result<Vec<_>>>()?;
            let g = sync_product(&autos.iter().map(|a| &a.generator).collect::<Vec<_>>())?;
            let ctrl = Alphabet::union_all(autos.iter().map(|a| &a.controllable));
            emit_automaton(g, ctrl, o.as_deref())?;
            Ok(0)
        }
        Command::Project {
            input,
            onto,
            minimal,
            o,
        } => {
            let a = load_automaton(&input)?;
            if !onto.is_subset(a.generator.alphabet()) {
                return Err(Error::input(format!(
                    "--onto {onto} is not a subset of {}",
                    a.generator.alphabet()
                )));
            }
            let g = if minimal {
                project_minimal(&a.generator, &onto)
            } else {
                project(&a.generator, &onto)
            };
            emit_automaton(g, a.controllable, o.as_deref())?;
            Ok(0)
        }
        Command::Supc { spec, plant, unctrl, o } => {
            let k = load_automaton(&spec)?;
            let l = load_automaton(&plant)?;
            let unc = unctrl.unwrap_or_else(|| l.uncontrollable());
            let g = sup_c(&k.generator, &l.generator, &unc);
            let ctrl = g.alphabet().difference(&unc);
            emit_automaton(g, ctrl, o.as_deref())?;
            Ok(0)
        }
        Command::Enumerate { input, maxlen } => {
            let a = load_automaton(&input)?;
            let mut text = String::new();
            for w in enumerate_bounded(&a.generator, maxlen) {
                let _ = writeln!(text, "{w}");
            }
            print!("{text}");
            Ok(0)
        }
        Command::Check { check } => run_check(check),
        Command::Synth {
            synth:
                Synth::TwoLevel {
                    spec,
                    plants,
                    groups,
                    coord,
                    highcoord,
                    unctrl,
                    strict_occ,
                    o,
                    out,
                },
        } => {
            let k = load_automaton(&spec)?;
            let autos = plants.iter().map(|p| load_automaton(p)).collect::<Result<Vec<_>>>()?;
            let unc = unctrl.unwrap_or_else(|| {
                autos
                    .iter()
                    .map(|a| a.uncontrollable())
                    .fold(Alphabet::new(), |u, a| u.union(&a))
            });
            let gens: Vec<Generator> = autos.into_iter().map(|a| a.generator).collect();
            let plan = GroupingPlan {
                groups: parse_groups(&groups).map_err(|m| Error::input(format!("--groups: {m}")))?,
                group_alphabets: parse_alphabet_list(&coord)?,
                high_level: highcoord,
            };
            let mut r = Report::new();
            let result = match synthesize_two_level(&gens, &k.generator, &plan, &unc, SynthesisOptions { strict_occ }) {
                Ok(res) => res,
                Err(e) => return not_decomposable(e, &mut r, out.report.as_deref()),
            };
            r.set("decomposable.holds", true);
            synthesis_fields(&mut r, &result);
            if let Some(dir) = &o {
                create_dir(dir)?;
                for i in 0..gens.len() {
                    let s = result.local(i).expect("every plant is in a group").clone();
                    let path = dir.join(format!("supervisor_{}.aut", i + 1));
                    let ctrl = s.alphabet().difference(&unc);
                    emit_automaton(s, ctrl, Some(&path))?;
                }
                let ctrl = result.global.alphabet().difference(&unc);
                emit_automaton(result.global.clone(), ctrl, Some(&dir.join("global.aut")))?;
                write_file(&dir.join("report.txt"), &r.to_string())?;
            }
            emit_report(&r, out.report.as_deref())?;
            Ok(tier_code(&result))
        }
        Command::Solve {
            solve:
                Solve::Decentralized {
                    problem,
                    o,
                    observe_only,
                    ensure_observer,
                    strict_occ,
                    target_groups,
                    max_agents_verifier,
                    timing,
                    out,
                },
        } => {
            let p = load_problem(&problem)?;
            let options = SolveOptions {
                communicated_control: if observe_only {
                    CommunicatedControl::ObserveOnly
                } else {
                    CommunicatedControl::Actuate
                },
                ensure_observer,
                strict_occ,
                target_groups,
                max_agents_verifier,
            };
            let mut r = Report::new();
            let sol = match solve(&p, options) {
                Ok(sol) => sol,
                Err(e) => return not_decomposable(e, &mut r, out.report.as_deref()),
            };
            solution_fields(&mut r, &sol, &p);
            if timing {
                r.set("timing.ms", sol.elapsed_ms);
            }
            if let Some(dir) = &o {
                create_dir(dir)?;
                let sigma_u = p.plant.alphabet().difference(&p.controllable);
                for (i, s) in sol.supervisors.iter().enumerate() {
                    let ctrl = sol.enriched[i].controllable.difference(&sigma_u);
                    let path = dir.join(format!("supervisor_{}.aut", i + 1));
                    emit_automaton(s.clone(), ctrl, Some(&path))?;
                }
                write_file(&dir.join("communication.txt"), &communication_text(&sol))?;
                write_file(&dir.join("report.txt"), &r.to_string())?;
            }
            emit_report(&r, out.report.as_deref())?;
            let ok = sol.controllable.holds && sol.coobservable.holds && sol.synthesis.safety.within_spec;
            Ok(if ok { tier_code(&sol.synthesis) } else { 1 })
        }
    }
}

fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|source| Error::Io {
        context: format!("creating {}", dir.display()),
        source,
    })
}

fn tier_code(r: &SynthesisResult) -> i32 {
    if r.optimality.tier == Tier::SafeOnly {
        1
    } else {
        0
    }
}

/// A failed decomposability precondition is a property failure (exit 1)
/// with a report; any other error is passed through.
fn not_decomposable(e: Error, r: &mut Report, path: Option<&Path>) -> Result<i32> {
    match e.root() {
        Error::NotDecomposable {
            stage,
            witness,
            suggestion,
        } => {
            r.set("decomposable.holds", false);
            r.set("decomposable.witness.stage", stage);
            r.set("decomposable.witness.s", witness);
            if let Some(ev) = suggestion {
                r.set("decomposable.witness.suggestion", ev);
            }
            emit_report(r, path)?;
            eprintln!("{e}");
            Ok(1)
        }
        _ => Err(e),
    }
}

fn synthesis_fields(r: &mut Report, res: &SynthesisResult) {
    let opt = &res.optimality;
    r.set("tier", opt.tier.as_str());
    r.set_verdict("optimality.thm3", &opt.thm3);
    r.set_verdict("optimality.cor1", &opt.cor1);
    r.set_verdict("optimality.lcc", &opt.lcc);
    r.set_verdict("optimality.high_level", &opt.high_level);
    r.set("optimality.high_level.route", opt.high_level_route.as_str());
    r.set("optimality.strict_occ", opt.strict_occ);
    r.set("safety.within_spec", res.safety.within_spec);
    r.set_verdict("safety.controllable", &res.safety.controllable);
    r.set_alphabet("plan.high_level", &res.plan.high_level);
    for (j, g) in res.groups.iter().enumerate() {
        let members: Vec<String> = g.members.iter().map(|i| (i + 1).to_string()).collect();
        r.set(format!("plan.group.{}.members", j + 1), members.join(","));
        r.set_alphabet(format!("plan.group.{}.alphabet", j + 1), &g.alphabet);
        r.set(
            format!("plan.group.{}.coordinator.states", j + 1),
            g.coordinator.num_states(),
        );
        r.set(
            format!("plan.group.{}.sup_coordinator.states", j + 1),
            g.sup_coordinator.num_states(),
        );
    }
    r.set("global.states", res.global.num_states());
    if let Some(c) = opt.caveat() {
        r.set("caveat", c);
    }
}

fn solution_fields(r: &mut Report, sol: &Solution, p: &DecentralizedProblem) {
    r.set("decomposable.holds", true);
    synthesis_fields(r, &sol.synthesis);
    r.set_verdict("controllable", &sol.controllable);
    r.set_verdict("coobservable", &sol.coobservable);
    r.set("shared.holds", sol.translation.shared.holds);
    if let Some((i, j, e)) = &sol.translation.shared.violation {
        r.set("shared.witness", format!("{} {} {e}", i + 1, j + 1));
    }
    r.set("plant_separable", sol.plant_separable);
    r.set_alphabet("uncontrollable", &sol.translation.uncontrollable);
    r.set("agents", p.agents.len());
    for c in &sol.coordinators {
        for (n, ext) in c.provenance.iter().enumerate() {
            r.set(format!("plan.group.{}.extension.{}", c.group + 1, n + 1), ext);
        }
    }
    for (i, a) in sol.enriched.iter().enumerate() {
        r.set_alphabet(format!("agent.{}.receive", i + 1), &sol.communication.receive[i]);
        r.set_alphabet(format!("agent.{}.obs", i + 1), &a.observable);
        r.set_alphabet(format!("agent.{}.ctrl", i + 1), &a.controllable);
        r.set(
            format!("agent.{}.supervisor.states", i + 1),
            sol.supervisors[i].num_states(),
        );
    }
    for (n, note) in sol.notes.iter().enumerate() {
        r.set(format!("note.{}", n + 1), note);
    }
}

fn communication_text(sol: &Solution) -> String {
    let mut text = String::new();
    for (i, recv) in sol.communication.receive.iter().enumerate() {
        let g = sol.communication.group_of[i];
        let line = format!(
            "agent {} group {} coord {} receives {}",
            i + 1,
            g + 1,
            sol.communication.coordinator_alphabets[g],
            recv
        );
        let _ = writeln!(text, "{}", line.trim_end());
    }
    text
}

fn problem_with_spec(problem: &Path, spec: Option<&Path>) -> Result<DecentralizedProblem> {
    let mut p = load_problem(problem)?;
    if let Some(s) = spec {
        p.spec = load_automaton(s)?.generator;
    }
    Ok(p)
}

fn run_check(check: Check) -> Result<i32> {
    match check {
        Check::Controllable {
            spec,
            plant,
            unctrl,
            out,
        } => {
            let k = load_automaton(&spec)?;
            let l = load_automaton(&plant)?;
            let unc = unctrl.unwrap_or_else(|| l.uncontrollable());
            verdict_report(&is_controllable(&k.generator, &l.generator, &unc), &out)
        }
        Check::Observer { plant, onto, out } => {
            let l = load_automaton(&plant)?;
            verdict_report(&is_observer(&l.generator, &onto)?, &out)
        }
        Check::Lcc {
            plant,
            onto,
            unctrl,
            strict_occ,
            out,
        } => {
            let l = load_automaton(&plant)?;
            let unc = unctrl.unwrap_or_else(|| l.uncontrollable());
            verdict_report(&is_lcc(&l.generator, &onto, &unc, strict_occ)?, &out)
        }
        Check::Cd { spec, pieces, out } => {
            let k = load_automaton(&spec)?;
            verdict_report(&is_decomposable(&k.generator, &parse_alphabet_list(&pieces)?)?, &out)
        }
        Check::Coobservable {
            problem,
            spec,
            max_agents_verifier,
            out,
        } => {
            let p = problem_with_spec(&problem, spec.as_deref())?;
            let agents: Vec<AgentAlphabet> = p
                .agents
                .iter()
                .map(|a| AgentAlphabet::new(a.observable.clone(), a.controllable.intersection(&p.controllable)))
                .collect();
            verdict_report(&is_coobservable(&p.spec, &p.plant, &agents, max_agents_verifier)?, &out)
        }
        Check::Cc2 { problem, spec, out } => {
            let p = problem_with_spec(&problem, spec.as_deref())?;
            let (Some(groups), Some(coord), Some(high)) =
                (p.groups.clone(), p.coordinator_alphabets.clone(), p.high_level.clone())
            else {
                return Err(Error::input(
                    "cc2 needs `groups:`, `coord:` and `highcoord:` in the problem file",
                ));
            };
            let tr = translate(&p)?;
            let plan = GroupingPlan {
                groups,
                group_alphabets: coord,
                high_level: high,
            };
            let coordinators = plan
                .group_alphabets
                .iter()
                .map(|a| build_coordinator(&tr.plants, a))
                .collect::<Result<Vec<_>>>()?;
            let v = is_two_level_conditionally_controllable(
                &tr.spec,
                &tr.plants,
                &plan,
                &coordinators,
                &tr.uncontrollable,
            )?;
            verdict_report(&v, &out)
        }
        Check::Shared { problem, out } => {
            let p = load_problem(&problem)?;
            let agents: Vec<AgentAlphabet> = p
                .agents
                .iter()
                .map(|a| AgentAlphabet::new(a.observable.clone(), a.controllable.intersection(&p.controllable)))
                .collect();
            let s = check_shared_consistency(&agents);
            let mut r = Report::new();
            r.set("holds", s.holds);
            if let Some((i, j, e)) = &s.violation {
                r.set("witness.agent", i + 1);
                r.set("witness.other", j + 1);
                r.set("witness.event", e);
            }
            emit_report(&r, out.report.as_deref())?;
            Ok(if s.holds { 0 } else { 1 })
        }
    }
}
