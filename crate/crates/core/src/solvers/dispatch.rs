//! Choice of a solver for an (instance, language) pair.

use super::special::power_regex;
use super::{
    solve_ab_or_aa, solve_ab_star_btail, solve_aab, solve_apbp, solve_bounded_width, solve_brute, solve_brute_multi,
    solve_district_monomial, solve_group_csh, solve_kprime_or_power, solve_monomial, DistrictMonomial, GroupConfig,
    LanguageSpec, SolveError, SolveResult,
};
use crate::caps::Caps;
use crate::dag::{chain_partition, Instance};
use crate::lang::{Alphabet, Dfa, Regex, Semiautomaton};

/// Every solver name accepted by [`dispatch`].
pub const SOLVERS: &[&str] = &[
    "brute",
    "brute-multi",
    "bounded-width",
    "monomial",
    "union",
    "group",
    "district",
    "ab-or-aa",
    "kprime-or-power",
    "aab",
    "apbp",
    "ab-star-btail",
];

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Forced solver; `None` picks one.
    pub solver: Option<String>,
    pub caps: Caps,
    pub group: GroupConfig,
}

const AB_OR_AA: &str = "(ab)*+(a+b)*aa(a+b)*";
const AAB: &str = "(aa+b)*";
const APBP: &str = "(aa*bb*aa*bb*)*";
const BTAIL: &str = "(ab)*(ε+b(a+b)*)";
const MAX_POWER: usize = 8;

fn ab() -> Alphabet {
    Alphabet::new("ab".chars()).expect("valid")
}

/// The language as a DFA over `{a, b}` when both the language and the
/// instance stay within those letters.
fn ab_language(inst: &Instance, spec: &LanguageSpec) -> Result<Option<Dfa>, SolveError> {
    let g = inst.dag();
    let in_ab = |c: char| c == 'a' || c == 'b';
    if !g.single_letter_labels() || !(0..g.len()).all(|v| g.letter(v).is_some_and(in_ab)) {
        return Ok(None);
    }
    if !spec.letters().into_iter().all(in_ab) {
        return Ok(None);
    }
    if matches!(spec, LanguageSpec::Semiautomaton(..) | LanguageSpec::Dfa(_)) {
        return Ok(None);
    }
    Ok(Some(spec.to_dfa(&ab())?))
}

fn same(d: &Dfa, regex: &str) -> Result<bool, SolveError> {
    Ok(d.equivalent(&Dfa::parse_regex(regex, &ab())?)?)
}

/// Split a regex into `K′ + A*(a^i + b^i)A*`: the union branches
/// contained in the power language must together make up all of it.
fn kprime_split(spec: &LanguageSpec) -> Result<Option<(Dfa, usize)>, SolveError> {
    let LanguageSpec::Regex(text) = spec else { return Ok(None) };
    let alphabet = ab();
    let regex = Regex::parse(text, &alphabet)?;
    let branches: Vec<(Regex, Dfa)> = regex
        .branches()
        .into_iter()
        .map(|r| (r.clone(), Dfa::from_regex(r, &alphabet)))
        .collect();
    for i in 1..=MAX_POWER {
        let power = Dfa::parse_regex(&power_regex(i), &alphabet)?;
        let outside = power.complement();
        let mut inside = Vec::new();
        let mut rest = Vec::new();
        for (r, d) in &branches {
            if d.intersection(&outside)?.is_empty_language() {
                inside.push(d);
            } else {
                rest.push(r.clone());
            }
        }
        let Some(first) = inside.first() else { continue };
        let covered = inside[1..].iter().try_fold((*first).clone(), |acc, d| acc.union(d))?;
        if covered.equivalent(&power)? {
            let kprime = rest.into_iter().reduce(Regex::union).unwrap_or(Regex::Empty);
            return Ok(Some((Dfa::from_regex(&kprime, &alphabet).minimize(), i)));
        }
    }
    Ok(None)
}

/// Name of the solver [`dispatch`] would run.
pub fn choose_solver(inst: &Instance, spec: &LanguageSpec, caps: &Caps) -> Result<&'static str, SolveError> {
    let strings = inst.strings().is_some();
    Ok(match spec {
        LanguageSpec::Monomial(_) if inst.dag().single_letter_labels() => "monomial",
        LanguageSpec::Union(_) => "union",
        LanguageSpec::Group(_) if strings => "group",
        LanguageSpec::District(_) if strings => "district",
        LanguageSpec::Semiautomaton(..) => "brute-multi",
        LanguageSpec::Regex(_) | LanguageSpec::Dfa(_) => {
            if let Some(d) = ab_language(inst, spec)? {
                if same(&d, AB_OR_AA)? {
                    return Ok("ab-or-aa");
                }
                if strings && same(&d, AAB)? {
                    return Ok("aab");
                }
                if strings && same(&d, APBP)? {
                    return Ok("apbp");
                }
                if same(&d, BTAIL)? {
                    return Ok("ab-star-btail");
                }
                if kprime_split(spec)?.is_some() {
                    return Ok("kprime-or-power");
                }
            }
            let narrow = match inst.strings() {
                Some(s) => s.strings().iter().filter(|w| !w.is_empty()).count() <= caps.max_chains,
                None => chain_partition(inst.dag()).len() <= caps.max_chains,
            };
            if narrow {
                "bounded-width"
            } else {
                "brute"
            }
        }
        _ => "brute",
    })
}

fn mismatch(solver: &'static str, what: &str) -> SolveError {
    super::not_applicable(solver, what.to_string())
}

/// Decide whether some topological sort of the instance spells a word of
/// the language.
pub fn dispatch(inst: &Instance, spec: &LanguageSpec, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let name: &str = match &opts.solver {
        Some(s) => s.as_str(),
        None => choose_solver(inst, spec, &opts.caps)?,
    };
    let caps = &opts.caps;
    let g = inst.dag();
    let need_ab = |solver: &'static str, pattern: &str| -> Result<(), SolveError> {
        match ab_language(inst, spec)? {
            Some(d) if same(&d, pattern)? => Ok(()),
            _ => Err(mismatch(solver, &format!("language is not {pattern} over a, b"))),
        }
    };
    match name {
        "brute" => solve_brute(inst, &spec.to_dfa(inst.alphabet())?, caps),
        "brute-multi" => {
            let (sa, pairs) = match spec {
                LanguageSpec::Semiautomaton(sa, p) => (sa.clone(), p.clone()),
                other => Semiautomaton::from_dfa(&other.to_dfa(inst.alphabet())?),
            };
            solve_brute_multi(inst, &sa, &pairs, caps)
        }
        "bounded-width" => {
            let d = spec.to_dfa(inst.alphabet())?;
            let chains = chain_partition(g);
            solve_bounded_width(g, &d, &chains, d.num_states(), caps)
        }
        "monomial" => match spec {
            LanguageSpec::Monomial(m) => solve_monomial(g, m),
            _ => Err(mismatch("monomial", "language is not a monomial")),
        },
        "union" => match spec {
            LanguageSpec::Union(parts) => {
                let parts: Vec<(LanguageSpec, Option<String>)> = parts.iter().map(|p| (p.clone(), None)).collect();
                solve_union(inst, &parts, opts)
            }
            _ => Err(mismatch("union", "language is not a union")),
        },
        "group" => match (spec, inst.strings()) {
            (LanguageSpec::Group(gp), Some(s)) => solve_group_csh(s, gp, &opts.group, caps),
            _ => Err(mismatch("group", "needs a group language and a string instance")),
        },
        "district" => match (spec, inst.strings()) {
            (LanguageSpec::District(d), Some(s)) => solve_district_monomial(s, d, &opts.group, caps),
            (LanguageSpec::Group(gp), Some(s)) => {
                let d = DistrictMonomial::new(vec![gp.clone()], Vec::new())?;
                solve_district_monomial(s, &d, &opts.group, caps)
            }
            _ => Err(mismatch("district", "needs a district monomial and a string instance")),
        },
        "ab-or-aa" => {
            need_ab("ab-or-aa", AB_OR_AA)?;
            solve_ab_or_aa(g)
        }
        "ab-star-btail" => {
            need_ab("ab-star-btail", BTAIL)?;
            solve_ab_star_btail(g)
        }
        "aab" | "apbp" => {
            let (tag, pattern) = if name == "aab" { ("aab", AAB) } else { ("apbp", APBP) };
            need_ab(tag, pattern)?;
            let s = inst.strings().ok_or_else(|| mismatch(tag, "needs a string instance"))?;
            if tag == "aab" {
                solve_aab(s, caps)
            } else {
                solve_apbp(s, caps)
            }
        }
        "kprime-or-power" => match (ab_language(inst, spec)?, kprime_split(spec)?) {
            (Some(_), Some((kprime, i))) => solve_kprime_or_power(g, &kprime, i, caps),
            _ => Err(mismatch("kprime-or-power", "language is not K′ + A*(a^i + b^i)A* over a, b")),
        },
        other => Err(SolveError::Spec(format!(
            "unknown solver '{other}'; expected one of {}",
            SOLVERS.join(", ")
        ))),
    }
}

/// Try the parts in order, each with its own solver (or the automatic
/// choice); the first "yes" wins.
pub fn solve_union(
    inst: &Instance,
    parts: &[(LanguageSpec, Option<String>)],
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    let mut complete = true;
    for (spec, solver) in parts {
        let o = SolveOptions {
            solver: solver.clone(),
            ..opts.clone()
        };
        let r = dispatch(inst, spec, &o)?;
        if r.decision {
            let tag = format!("union/{}", r.solver);
            return Ok(r.with_solver(&tag));
        }
        complete &= r.complete;
    }
    Ok(SolveResult {
        complete,
        ..SolveResult::no("union")
    })
}
