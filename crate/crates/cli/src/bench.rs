use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Args;
use cts_core::solvers::dispatch;
use cts_core::Caps;
use rayon::prelude::*;

use crate::gen::{Entry, Manifest};
use crate::{load_instance, load_spec, read, Failure, SolverFlags};

#[derive(Args)]
pub struct BenchArgs {
    /// Directory holding `manifest.json`.
    dir: PathBuf,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Add a wall-time column.
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    solver: SolverFlags,
}

struct Row {
    id: String,
    expected: Option<bool>,
    outcome: Result<(bool, String, bool), String>,
    ms: f64,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run_entry(args: &BenchArgs, caps: &Caps, e: &Entry) -> Row {
    let start = Instant::now();
    let outcome = (|| -> Result<(bool, String, bool), Failure> {
        let inst = load_instance(&args.dir.join(&e.instance))?;
        let spec = load_spec(&args.dir.join(&e.spec))?;
        let r = dispatch(&inst, &spec, &args.solver.options(caps.clone()))?;
        Ok((r.decision, r.solver, r.complete))
    })()
    .map_err(|f| if f.code == 3 { "cap".to_string() } else { "error".to_string() });
    Row {
        id: e.id.clone(),
        expected: e.expected,
        outcome,
        ms: start.elapsed().as_secs_f64() * 1000.0,
    }
}

pub fn cmd_bench(args: &BenchArgs, caps: Caps) -> Result<ExitCode, Failure> {
    let path = args.dir.join("manifest.json");
    let entries: Vec<Entry> = if path.exists() {
        let m: Manifest = serde_json::from_str(&read(&path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        m.entries
    } else {
        let empty = std::fs::read_dir(&args.dir).map(|mut d| d.next().is_none()).unwrap_or(false);
        if !empty {
            return Err(Failure::usage(format!("{} not found", path.display())));
        }
        Vec::new()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| Failure::usage(e.to_string()))?;
    let rows: Vec<Row> = pool.install(|| entries.par_iter().map(|e| run_entry(args, &caps, e)).collect());
    let mut header = "id,expected,decision,agrees,solver,complete".to_string();
    if args.timing {
        header.push_str(",wall_ms");
    }
    println!("{header}");
    for r in rows {
        let expected = r.expected.map_or("", yes_no);
        let (decision, agrees, solver, complete) = match &r.outcome {
            Ok((d, s, c)) => (
                yes_no(*d).to_string(),
                r.expected.map_or("", |x| if x == *d { "true" } else { "false" }),
                s.clone(),
                c.to_string(),
            ),
            Err(kind) => (kind.clone(), "", String::new(), String::new()),
        };
        let mut line = format!("{},{expected},{decision},{agrees},{solver},{complete}", r.id);
        if args.timing {
            line.push_str(&format!(",{:.3}", r.ms));
        }
        println!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}
