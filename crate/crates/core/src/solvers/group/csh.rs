use serde::{Deserialize, Serialize};

use super::reach::{gamma_over_subalphabets, omega_estimate};
use super::segdp::{assemble, SegSpace, Slice, Step};
use super::GroupPresentation;
use crate::caps::Caps;
use crate::dag::{rare_frequent, Instance, LabeledDag, ShuffleInstance};
use crate::lang::LangError;
use crate::solvers::{solve_brute, Acceptor, SolveError, SolveResult};

/// Knobs of the group shuffle solver.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupConfig {
    /// Maximum number of frequent blocks inserted; defaults to `2·|H|`.
    pub insertions: Option<usize>,
    /// A "no" counts as complete once `insertions` reaches this value.
    pub trust: Option<usize>,
    /// Override of the rare/frequent threshold. Answers stay sound; a
    /// threshold below the default may force the witness fallback.
    pub richness: Option<usize>,
}

impl GroupConfig {
    pub(crate) fn budget(&self, gp: &GroupPresentation) -> usize {
        self.insertions.unwrap_or(2 * gp.order()).max(1)
    }

    pub(crate) fn threshold(&self, gp: &GroupPresentation) -> usize {
        let b = self.budget(gp);
        self.richness
            .unwrap_or_else(|| omega_estimate(gp) + (b - 1) * gamma_over_subalphabets(gp))
    }

    pub(crate) fn trusted(&self, gp: &GroupPresentation) -> bool {
        self.trust.is_some_and(|t| self.budget(gp) >= t)
    }
}

pub(crate) fn check_surjective(gp: &GroupPresentation) -> Result<(), SolveError> {
    if gp.is_surjective() {
        Ok(())
    } else {
        Err(SolveError::Precondition("the letters do not generate the group".into()))
    }
}

/// Shuffle membership for a group language.
///
/// Strings split into rare and frequent ones. The rare strings are
/// interleaved explicitly; the frequent ones enter as at most `B` inserted
/// group elements whose product must lie in the reachable set of their
/// Parikh image. A "yes" is realized and verified. A "no" is exact when
/// there are no frequent strings and otherwise carries `complete = false`
/// unless the budget reaches the configured trust level.
pub fn solve_group_csh(
    inst: &ShuffleInstance,
    gp: &GroupPresentation,
    cfg: &GroupConfig,
    caps: &Caps,
) -> Result<SolveResult, SolveError> {
    const TAG: &str = "group";
    check_symbols(inst, |c| gp.alphabet().contains(c))?;
    check_surjective(gp)?;
    let rf = rare_frequent(inst, cfg.threshold(gp));
    let (fdag, origin) = frequent_dag(inst, &rf.frequent_strings);
    let slices = [Slice::new(fdag, origin, gp)];
    let letter = |v: usize| inst.dag().letter(v).expect("single letters");
    let space = SegSpace {
        rare: rf.rare_strings.iter().map(|&s| string_vertices(inst, s)).collect(),
        letter: &letter,
        segments: std::slice::from_ref(gp),
        pivots: &[],
        slices: &slices,
        max_inserts: cfg.budget(gp),
    };
    match space.run(caps.search_states)? {
        None => Ok(SolveResult {
            complete: rf.frequent_strings.is_empty() || cfg.trusted(gp),
            ..SolveResult::no(TAG)
        }),
        Some(path) => finish(inst, gp, &path, &slices, caps, TAG),
    }
}

/// Build the witness for an accepted path. When the realization
/// precondition fails (only possible under a lowered threshold) the exact
/// search takes over; if that is out of reach too, the answer stays "yes"
/// without a witness.
pub(crate) fn finish<A: Acceptor>(
    inst: &ShuffleInstance,
    acc: &A,
    path: &[Step],
    slices: &[Slice],
    caps: &Caps,
    tag: &str,
) -> Result<SolveResult, SolveError> {
    match assemble(path, slices) {
        Ok(order) => SolveResult::yes(inst.dag(), order, acc, tag),
        Err(SolveError::Precondition(_)) => match solve_brute(&Instance::Strings(inst.clone()), acc, caps) {
            Ok(r) => Ok(r.with_solver(tag)),
            Err(e) if e.is_cap() => Ok(SolveResult {
                decision: true,
                witness: None,
                solver: tag.to_string(),
                complete: true,
            }),
            Err(e) => Err(e),
        },
        Err(e) => Err(e),
    }
}

pub(crate) fn check_symbols(inst: &ShuffleInstance, known: impl Fn(char) -> bool) -> Result<(), SolveError> {
    match inst.strings().iter().flat_map(|s| s.chars()).find(|&c| !known(c)) {
        Some(c) => Err(SolveError::Lang(LangError::UnknownSymbol(c))),
        None => Ok(()),
    }
}

pub(crate) fn string_vertices(inst: &ShuffleInstance, s: usize) -> Vec<usize> {
    (0..inst.strings()[s].chars().count()).map(|p| inst.vertex(s, p)).collect()
}

/// Disjoint union of the chosen strings with the map back to `inst`.
pub(crate) fn frequent_dag(inst: &ShuffleInstance, which: &[usize]) -> (LabeledDag, Vec<usize>) {
    let sub = inst.sub_instance(which);
    let origin = (0..sub.total_len())
        .map(|v| {
            let (s, p) = sub.locate(v);
            inst.vertex(which[s], p)
        })
        .collect();
    (sub.dag().clone(), origin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::new("ab".chars()).unwrap()
    }

    #[test]
    fn parity_ignores_order() {
        let gp = GroupPresentation::cyclic(2, ab(), vec![1, 0], &[1]).unwrap();
        let caps = Caps::default();
        let cfg = GroupConfig::default();
        for (strings, odd) in [(vec!["ab", "ba"], false), (vec!["aab", "a"], true), (vec![""], false)] {
            let inst = ShuffleInstance::new(ab(), strings.iter().map(|s| s.to_string()).collect()).unwrap();
            let r = solve_group_csh(&inst, &gp, &cfg, &caps).unwrap();
            assert_eq!(r.decision, odd, "{strings:?}");
        }
    }

    #[test]
    fn s3_examples() {
        let base = GroupPresentation::symmetric3(ab(), vec![2, 5], &[]).unwrap();
        let target = base.eval("abba").unwrap();
        let gp = base.with_accepting(&[target]);
        let inst = ShuffleInstance::from_strs(&["ab", "ba"]).unwrap();
        let r = solve_group_csh(&inst, &gp, &GroupConfig::default(), &Caps::default()).unwrap();
        assert!(r.decision && r.complete);
        assert!(r.witness.is_some());
        let not_e = base.with_accepting(&[2]);
        let empty = ShuffleInstance::new(ab(), Vec::new()).unwrap();
        assert!(!solve_group_csh(&empty, &not_e, &GroupConfig::default(), &Caps::default()).unwrap().decision);
    }

    #[test]
    fn non_surjective_is_refused() {
        let gp = GroupPresentation::cyclic(3, ab(), vec![0, 0], &[0]).unwrap();
        let inst = ShuffleInstance::from_strs(&["ab"]).unwrap();
        let err = solve_group_csh(&inst, &gp, &GroupConfig::default(), &Caps::default()).unwrap_err();
        assert!(matches!(err, SolveError::Precondition(_)));
    }
}
