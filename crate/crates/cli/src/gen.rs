use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, ValueEnum};
use cts_core::dag::{Instance, ShuffleInstance};
use cts_core::lang::{Alphabet, Dfa};
use cts_core::reductions::random::random_word;
use cts_core::reductions::{gen_tagged_shuffle, gen_unary3partition, shuffle_reduce, three_partition_exists, FilterSequence};
use cts_core::solvers::{solve_brute, LanguageSpec};
use cts_core::Caps;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Unary 3-partition encoded as strings a^e b^e against (a^B b^B)*.
    U3p,
    /// Random (a^B b^B)* questions reduced to (ab)*.
    AbFilter,
    /// Random (ab)* questions reduced to u*.
    UstarFilter,
    /// Random (ab)* questions reduced to (aa+bb)*.
    AabbFilter,
    /// Shuffle membership of w in the shuffle of U, tagged into (aA+bB)*.
    TaggedShuffle,
}

#[derive(Args)]
pub struct GenArgs {
    family: Family,
    /// Output directory (created if missing).
    #[arg(long)]
    out: PathBuf,
    /// Comma-separated numbers for u3p.
    #[arg(long, value_delimiter = ',')]
    numbers: Option<Vec<usize>>,
    /// Block length B (u3p target, ab-filter source).
    #[arg(long)]
    block: Option<usize>,
    /// Number of triples for random u3p instances.
    #[arg(long, default_value_t = 1)]
    triples: usize,
    /// The word u of ustar-filter.
    #[arg(long)]
    u: Option<String>,
    /// The word w of tagged-shuffle.
    #[arg(long)]
    w: Option<String>,
    /// Comma-separated words U of tagged-shuffle.
    #[arg(long, value_delimiter = ',')]
    words: Option<Vec<String>>,
    /// Emit the bare filter word for this source length (expected answer
    /// unknown).
    #[arg(long)]
    length: Option<usize>,
    /// Number of random instances.
    #[arg(long, default_value_t = 0)]
    source_instances: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Longest random source string.
    #[arg(long, default_value_t = 4)]
    max_len: usize,
}

#[derive(Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub instance: String,
    pub spec: String,
    pub expected: Option<bool>,
}

#[derive(Serialize, Deserialize)]
pub struct Manifest {
    pub family: Family,
    pub seed: u64,
    pub entries: Vec<Entry>,
}

struct Writer<'a> {
    dir: &'a Path,
    family: Family,
    entries: Vec<Entry>,
}

impl Writer<'_> {
    fn add(&mut self, inst: &Instance, target: &str, expected: Option<bool>) -> Result<(), Failure> {
        let name = serde_json::to_value(self.family).expect("serializable");
        let id = format!("{}-{:03}", name.as_str().expect("string"), self.entries.len());
        let instance = format!("{id}.instance.json");
        let spec = format!("{id}.spec.json");
        write_json(&self.dir.join(&instance), &inst.to_json())?;
        write_json(&self.dir.join(&spec), &LanguageSpec::regex(target).to_json())?;
        self.entries.push(Entry {
            id,
            instance,
            spec,
            expected,
        });
        Ok(())
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn strings(words: Vec<String>) -> Result<Instance, Failure> {
    let alphabet = Alphabet::new("ab".chars()).expect("valid");
    Ok(Instance::Strings(ShuffleInstance::new(alphabet, words)?))
}

/// Split `w` into up to `k` subsequences that interleave back to `w`.
fn scatter(rng: &mut ChaCha8Rng, w: &str, k: usize) -> Vec<String> {
    let mut out = vec![String::new(); k];
    for c in w.chars() {
        out[rng.gen_range(0..k)].push(c);
    }
    out
}

/// Whether `w` is an interleaving of `us`, by a memoized search over
/// positions.
fn in_shuffle(w: &[char], us: &[Vec<char>]) -> bool {
    fn go(w: &[char], us: &[Vec<char>], pos: &mut Vec<usize>, seen: &mut HashSet<Vec<usize>>) -> bool {
        let done: usize = pos.iter().sum();
        if done == w.len() {
            return us.iter().zip(pos.iter()).all(|(u, &p)| p == u.len());
        }
        if !seen.insert(pos.clone()) {
            return false;
        }
        for i in 0..us.len() {
            if us[i].get(pos[i]) == Some(&w[done]) {
                pos[i] += 1;
                let ok = go(w, us, pos, seen);
                pos[i] -= 1;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let total: usize = us.iter().map(Vec::len).sum();
    total == w.len() && go(w, us, &mut vec![0; us.len()], &mut HashSet::new())
}

fn random_u3p(rng: &mut ChaCha8Rng, m: usize, b: usize) -> Result<Vec<usize>, Failure> {
    let lo = b / 4 + 1;
    let hi = (b - 1) / 2;
    if m == 0 {
        return Ok(Vec::new());
    }
    for _ in 0..100_000 {
        let mut e: Vec<usize> = (0..3 * m - 1).map(|_| rng.gen_range(lo..=hi.max(lo))).collect();
        let sum: usize = e.iter().sum();
        if let Some(last) = (m * b).checked_sub(sum) {
            if 4 * last > b && 2 * last < b {
                e.push(last);
                return Ok(e);
            }
        }
    }
    Err(Failure::usage(format!("no valid numbers for {m} triples with B = {b}")))
}

pub fn cmd_gen_hard(args: &GenArgs, caps: Caps) -> Result<ExitCode, Failure> {
    std::fs::create_dir_all(&args.out).map_err(|e| Failure::usage(format!("{}: {e}", args.out.display())))?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut out = Writer {
        dir: &args.out,
        family: args.family,
        entries: Vec::new(),
    };
    match args.family {
        Family::U3p => {
            let b = args.block.unwrap_or(12);
            let mut lists = Vec::new();
            if let Some(n) = &args.numbers {
                lists.push(n.clone());
            }
            for _ in 0..args.source_instances {
                lists.push(random_u3p(&mut rng, args.triples, b)?);
            }
            if lists.is_empty() {
                return Err(Failure::usage("u3p needs --numbers or --source-instances"));
            }
            for e in lists {
                let (inst, target) = gen_unary3partition(&e, b).map_err(|e| Failure::usage(e.to_string()))?;
                out.add(&Instance::Strings(inst), &target, Some(three_partition_exists(&e, b)))?;
            }
        }
        Family::AbFilter | Family::UstarFilter | Family::AabbFilter => {
            let filter = match args.family {
                Family::AbFilter => FilterSequence::AbFromPower {
                    block: args.block.unwrap_or(2),
                },
                Family::UstarFilter => FilterSequence::UstarFromAb {
                    u: args.u.clone().ok_or_else(|| Failure::usage("ustar-filter needs --u"))?,
                },
                _ => FilterSequence::AabbFromAb,
            };
            let word = |n: usize| filter.word(n).map_err(|e| Failure::usage(e.to_string()));
            if let Some(n) = args.length {
                out.add(&strings(vec![word(n)?])?, &filter.target(), None)?;
            }
            let source_period = match &filter {
                FilterSequence::AbFromPower { block } => "a".repeat(*block) + &"b".repeat(*block),
                _ => "ab".to_string(),
            };
            for _ in 0..args.source_instances {
                let k = rng.gen_range(1..=3);
                let words = if rng.gen_bool(0.5) {
                    let reps = rng.gen_range(1..=(k * args.max_len / source_period.len()).max(1));
                    scatter(&mut rng, &source_period.repeat(reps), k)
                } else {
                    (0..k)
                        .map(|_| {
                            let len = rng.gen_range(0..=args.max_len);
                            random_word(&mut rng, &['a', 'b'], len)
                        })
                        .collect()
                };
                let source = strings(words)?;
                let total = source.dag().len();
                let expected = source_answer(&source, &filter.source(), &caps);
                let reduced = shuffle_reduce(&source, &word(total)?).map_err(|e| Failure::usage(e.to_string()))?;
                out.add(&reduced, &filter.target(), expected)?;
            }
        }
        Family::TaggedShuffle => {
            let mut cases: Vec<(String, Vec<String>)> = Vec::new();
            if let Some(w) = &args.w {
                cases.push((w.clone(), args.words.clone().unwrap_or_default()));
            }
            for _ in 0..args.source_instances {
                let k = rng.gen_range(1..=3);
                let us: Vec<String> = (0..k)
                    .map(|_| {
                        let len = rng.gen_range(0..=args.max_len);
                        random_word(&mut rng, &['a', 'b'], len)
                    })
                    .collect();
                let total: usize = us.iter().map(String::len).sum();
                let w = if rng.gen_bool(0.5) {
                    interleave(&mut rng, &us)
                } else {
                    random_word(&mut rng, &['a', 'b'], total)
                };
                cases.push((w, us));
            }
            if cases.is_empty() {
                return Err(Failure::usage("tagged-shuffle needs --w or --source-instances"));
            }
            for (w, us) in cases {
                let refs: Vec<&str> = us.iter().map(String::as_str).collect();
                let (inst, target) = gen_tagged_shuffle(&w, &refs).map_err(|e| Failure::usage(e.to_string()))?;
                let chars: Vec<Vec<char>> = us.iter().map(|u| u.chars().collect()).collect();
                let expected = in_shuffle(&w.chars().collect::<Vec<_>>(), &chars);
                out.add(&Instance::Strings(inst), &target, Some(expected))?;
            }
        }
    }
    let manifest = Manifest {
        family: args.family,
        seed: args.seed,
        entries: out.entries,
    };
    write_json(&args.out.join("manifest.json"), &manifest)?;
    println!("wrote {} instances to {}", manifest.entries.len(), args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn interleave(rng: &mut ChaCha8Rng, us: &[String]) -> String {
    let mut pos = vec![0; us.len()];
    let chars: Vec<Vec<char>> = us.iter().map(|u| u.chars().collect()).collect();
    let mut out = String::new();
    loop {
        let open: Vec<usize> = (0..us.len()).filter(|&i| pos[i] < chars[i].len()).collect();
        if open.is_empty() {
            return out;
        }
        let i = open[rng.gen_range(0..open.len())];
        out.push(chars[i][pos[i]]);
        pos[i] += 1;
    }
}

fn source_answer(inst: &Instance, regex: &str, caps: &Caps) -> Option<bool> {
    let d = Dfa::parse_regex(regex, inst.alphabet()).ok()?;
    solve_brute(inst, &d, caps).ok().map(|r| r.decision)
}
