use super::search::{find_path, Space};
use super::{check_labels, Acceptor, SolveError, SolveResult};
use crate::caps::Caps;
use crate::dag::{Instance, LabeledDag, ShuffleInstance};
use crate::lang::{Semiautomaton, StatePairSpec};

/// Semiautomaton read from several initial states at once; accepts when
/// every pair accepts.
pub struct MultiPair<'a> {
    pub sa: &'a Semiautomaton,
    pub spec: &'a StatePairSpec,
}

impl Acceptor for MultiPair<'_> {
    type State = Vec<usize>;

    fn start(&self) -> Vec<usize> {
        self.spec.pairs.iter().map(|p| p.0).collect()
    }

    fn step_word(&self, s: &Vec<usize>, word: &str) -> Vec<usize> {
        let idx = self.sa.alphabet.encode(word).expect("labels checked against the alphabet");
        s.iter()
            .map(|&q| idx.iter().fold(q, |q, &a| self.sa.delta[q][a]))
            .collect()
    }

    fn is_accepting(&self, s: &Vec<usize>) -> bool {
        s.iter().zip(&self.spec.pairs).all(|(&q, p)| p.1[q])
    }

    fn knows(&self, c: char) -> bool {
        self.sa.alphabet.contains(c)
    }
}

struct MaskSpace<'a, A: Acceptor> {
    g: &'a LabeledDag,
    acc: &'a A,
    preds: Vec<u64>,
    full: u64,
}

impl<A: Acceptor> Space for MaskSpace<'_, A> {
    type Node = (u64, A::State);
    type Step = usize;

    fn successors(&self, (mask, q): &Self::Node, out: &mut Vec<(usize, Self::Node)>) {
        for v in 0..self.g.len() {
            let bit = 1u64 << v;
            if mask & bit == 0 && self.preds[v] & !mask == 0 {
                out.push((v, (mask | bit, self.acc.step_word(q, self.g.label(v)))));
            }
        }
    }

    fn is_goal(&self, (mask, q): &Self::Node) -> bool {
        *mask == self.full && self.acc.is_accepting(q)
    }
}

struct StringSpace<'a, A: Acceptor> {
    inst: &'a ShuffleInstance,
    lens: Vec<u32>,
    acc: &'a A,
}

impl<A: Acceptor> Space for StringSpace<'_, A> {
    type Node = (Vec<u32>, A::State);
    type Step = usize;

    fn successors(&self, (pos, q): &Self::Node, out: &mut Vec<(usize, Self::Node)>) {
        for s in 0..pos.len() {
            if pos[s] < self.lens[s] {
                let v = self.inst.vertex(s, pos[s] as usize);
                let mut next = pos.clone();
                next[s] += 1;
                out.push((v, (next, self.acc.step_word(q, self.inst.dag().label(v)))));
            }
        }
    }

    fn is_goal(&self, (pos, q): &Self::Node) -> bool {
        *pos == self.lens && self.acc.is_accepting(q)
    }
}

fn brute_with<A: Acceptor>(inst: &Instance, acc: &A, caps: &Caps, tag: &str) -> Result<SolveResult, SolveError> {
    let g = inst.dag();
    check_labels(g, acc)?;
    let path = match inst {
        Instance::Strings(s) => {
            let space = StringSpace {
                inst: s,
                lens: s.strings().iter().map(|w| w.chars().count() as u32).collect(),
                acc,
            };
            find_path(&space, (vec![0; s.strings().len()], acc.start()), caps.search_states)?
        }
        Instance::Dag(g) => {
            if g.len() > caps.brute_vertices.min(64) {
                return Err(SolveError::CapExceeded {
                    what: "brute-force vertices",
                    limit: caps.brute_vertices.min(64),
                });
            }
            let preds = (0..g.len())
                .map(|v| g.pred(v).iter().fold(0u64, |m, &u| m | (1 << u)))
                .collect();
            let full = if g.len() == 64 { u64::MAX } else { (1u64 << g.len()) - 1 };
            let space = MaskSpace { g, acc, preds, full };
            find_path(&space, (0, acc.start()), caps.search_states)?
        }
    };
    match path {
        Some(order) => SolveResult::yes(g, order, acc, tag),
        None => Ok(SolveResult::no(tag)),
    }
}

/// Exhaustive search over down-sets (bitmask on general DAGs, per-string
/// positions on string tuples), memoized on (down-set, automaton state).
pub fn solve_brute<A: Acceptor>(inst: &Instance, acc: &A, caps: &Caps) -> Result<SolveResult, SolveError> {
    brute_with(inst, acc, caps, "brute")
}

/// Brute force against the intersection of several state pairs, tracking
/// one state per pair.
pub fn solve_brute_multi(
    inst: &Instance,
    sa: &Semiautomaton,
    spec: &StatePairSpec,
    caps: &Caps,
) -> Result<SolveResult, SolveError> {
    brute_with(inst, &MultiPair { sa, spec }, caps, "brute-multi")
}
