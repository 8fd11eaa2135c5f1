//! `cts`: decide whether a labeled DAG or a tuple of strings has a
//! topological sort spelling a word of a regular language.

mod bench;
mod gen;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use cts_core::dag::Instance;
use cts_core::lang::{literal_symbols, Alphabet, AutomatonJson, Dfa};
use cts_core::monoid::{classify, syntactic_monoid, transition_monoid};
use cts_core::solvers::{dispatch, GroupConfig, LanguageSpec, SolveError, SolveOptions};
use cts_core::Caps;

use report::RunReport;

#[derive(Parser)]
#[command(name = "cts", version, about = "Constrained topological sort and shuffle solver")]
struct Cli {
    /// Cap overrides such as `search_states=1000000,brute_vertices=30`;
    /// applied after `CTS_CAPS`.
    #[arg(long, global = true)]
    caps: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one instance against one language.
    Solve(SolveArgs),
    /// Classify a language by its transition monoid.
    Classify(LanguageArgs),
    /// Dump the transition monoid of a language.
    Monoid(LanguageArgs),
    /// Write generated hard instances and a manifest to a directory.
    GenHard(gen::GenArgs),
    /// Run every entry of a generated manifest and print a CSV table.
    Bench(bench::BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file: JSON, or the compact `strings: ab,ba` form.
    instance: PathBuf,
    /// Language specification file (JSON, or a bare regex).
    #[arg(long, conflicts_with = "regex", required_unless_present = "regex")]
    spec: Option<PathBuf>,
    /// Language as a regex.
    #[arg(long)]
    regex: Option<String>,
    /// Include the witness order and its word in the report.
    #[arg(long)]
    witness: bool,
    #[command(flatten)]
    solver: SolverFlags,
    /// Include the wall time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Clone, Default)]
pub(crate) struct SolverFlags {
    /// Force a solver instead of the automatic choice.
    #[arg(long)]
    solver: Option<String>,
    /// Insertion budget of the group solvers (default 2·|H|).
    #[arg(long)]
    insertions: Option<usize>,
    /// Budget from which a group "no" is reported as complete.
    #[arg(long)]
    trust: Option<usize>,
}

impl SolverFlags {
    pub(crate) fn options(&self, caps: Caps) -> SolveOptions {
        SolveOptions {
            solver: self.solver.clone(),
            caps,
            group: GroupConfig {
                insertions: self.insertions,
                trust: self.trust,
                richness: None,
            },
        }
    }
}

#[derive(Args)]
struct LanguageArgs {
    /// Language as a regex; its syntactic monoid is used.
    #[arg(long, conflicts_with = "automaton", required_unless_present = "automaton")]
    regex: Option<String>,
    /// Semiautomaton or DFA JSON file; its transition monoid is used.
    #[arg(long)]
    automaton: Option<PathBuf>,
    /// Alphabet for `--regex` (default: the letters of the regex).
    #[arg(long)]
    alphabet: Option<String>,
}

/// Failure with its exit status: 2 for input errors, 3 for caps.
pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub(crate) fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Failure {
        Failure {
            code: if e.is_cap() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

impl From<cts_core::monoid::MonoidError> for Failure {
    fn from(e: cts_core::monoid::MonoidError) -> Failure {
        SolveError::from(e).into()
    }
}

impl From<cts_core::lang::LangError> for Failure {
    fn from(e: cts_core::lang::LangError) -> Failure {
        SolveError::from(e).into()
    }
}

impl From<cts_core::dag::DagError> for Failure {
    fn from(e: cts_core::dag::DagError) -> Failure {
        SolveError::from(e).into()
    }
}

pub(crate) fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub(crate) fn load_instance(path: &Path) -> Result<Instance, Failure> {
    Ok(Instance::parse(&read(path)?)?)
}

pub(crate) fn load_spec(path: &Path) -> Result<LanguageSpec, Failure> {
    Ok(LanguageSpec::parse(&read(path)?)?)
}

fn caps(flag: Option<&str>) -> Result<Caps, Failure> {
    let mut caps = Caps::default();
    for text in [std::env::var("CTS_CAPS").ok().as_deref(), flag].into_iter().flatten() {
        caps = caps.with_overrides(text).map_err(|e| Failure::usage(e.to_string()))?;
    }
    Ok(caps)
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn cmd_solve(args: &SolveArgs, caps: Caps) -> Result<ExitCode, Failure> {
    let inst = load_instance(&args.instance)?;
    let (spec, spec_id) = match (&args.spec, &args.regex) {
        (Some(p), _) => (load_spec(p)?, stem(p)),
        (None, Some(r)) => (LanguageSpec::regex(r), r.clone()),
        (None, None) => return Err(Failure::usage("need --spec or --regex")),
    };
    let start = Instant::now();
    let result = dispatch(&inst, &spec, &args.solver.options(caps))?;
    let elapsed = start.elapsed();
    let report = RunReport::new(stem(&args.instance), spec_id, &inst, &result, args.witness)
        .with_time(args.timing.then_some(elapsed));
    print_json(&report);
    Ok(if result.decision { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

enum Language {
    Regex(Dfa),
    Automaton(cts_core::lang::Semiautomaton),
}

fn language(args: &LanguageArgs) -> Result<Language, Failure> {
    if let Some(r) = &args.regex {
        let alphabet = match &args.alphabet {
            Some(a) => Alphabet::try_from(a.as_str())?,
            None => Alphabet::new(literal_symbols(r))?,
        };
        return Ok(Language::Regex(Dfa::parse_regex(r, &alphabet)?));
    }
    let path = args.automaton.as_ref().ok_or_else(|| Failure::usage("need --regex or --automaton"))?;
    let j: AutomatonJson = serde_json::from_str(&read(path)?).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(Language::Automaton(j.semiautomaton()?))
}

fn cmd_classify(args: &LanguageArgs, caps: Caps) -> Result<ExitCode, Failure> {
    let report = match language(args)? {
        Language::Regex(d) => syntactic_monoid(&d, caps.monoid())?.classify(),
        Language::Automaton(sa) => classify(&sa, caps.monoid())?,
    };
    print_json(&report);
    Ok(ExitCode::SUCCESS)
}

fn cmd_monoid(args: &LanguageArgs, caps: Caps) -> Result<ExitCode, Failure> {
    let (m, alphabet) = match language(args)? {
        Language::Regex(d) => (syntactic_monoid(&d, caps.monoid())?, d.alphabet().clone()),
        Language::Automaton(sa) => (transition_monoid(&sa, caps.monoid())?, sa.alphabet.clone()),
    };
    print_json(&m.dump(&alphabet));
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let caps = caps(cli.caps.as_deref())?;
    match &cli.command {
        Command::Solve(a) => cmd_solve(a, caps),
        Command::Classify(a) => cmd_classify(a, caps),
        Command::Monoid(a) => cmd_monoid(a, caps),
        Command::GenHard(a) => gen::cmd_gen_hard(a, caps),
        Command::Bench(a) => bench::cmd_bench(a, caps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("cts: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
