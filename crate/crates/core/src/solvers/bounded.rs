use super::search::{find_path, Space};
use super::{check_labels, Acceptor, SolveError, SolveResult};
use crate::caps::Caps;
use crate::dag::LabeledDag;

struct ChainSpace<'a, A: Acceptor> {
    g: &'a LabeledDag,
    acc: &'a A,
    chains: &'a [Vec<usize>],
    lens: Vec<u32>,
    // need[v][c]: how far chain c must have advanced before v is available
    need: Vec<Vec<u32>>,
}

impl<A: Acceptor> Space for ChainSpace<'_, A> {
    type Node = (Vec<u32>, A::State);
    type Step = usize;

    fn successors(&self, (pos, q): &Self::Node, out: &mut Vec<(usize, Self::Node)>) {
        for c in 0..self.chains.len() {
            if pos[c] == self.lens[c] {
                continue;
            }
            let v = self.chains[c][pos[c] as usize];
            if self.need[v].iter().zip(pos).all(|(n, p)| n <= p) {
                let mut next = pos.clone();
                next[c] += 1;
                out.push((v, (next, self.acc.step_word(q, self.g.label(v)))));
            }
        }
    }

    fn is_goal(&self, (pos, q): &Self::Node) -> bool {
        *pos == self.lens && self.acc.is_accepting(q)
    }
}

/// Dynamic program over configurations of a chain partition: one position
/// per chain plus the automaton state.
pub fn solve_bounded_width<A: Acceptor>(
    g: &LabeledDag,
    acc: &A,
    chains: &[Vec<usize>],
    automaton_states: usize,
    caps: &Caps,
) -> Result<SolveResult, SolveError> {
    check_labels(g, acc)?;
    let n = g.len();
    let mut chain_of = vec![usize::MAX; n];
    let mut index_of = vec![0u32; n];
    for (c, chain) in chains.iter().enumerate() {
        for (i, &v) in chain.iter().enumerate() {
            if v >= n || chain_of[v] != usize::MAX {
                return Err(SolveError::Precondition("chains must partition the vertices".into()));
            }
            chain_of[v] = c;
            index_of[v] = i as u32;
        }
        if chain.windows(2).any(|w| !g.reaches(w[0], w[1])) {
            return Err(SolveError::Precondition("chain is not totally ordered".into()));
        }
    }
    if chain_of.contains(&usize::MAX) {
        return Err(SolveError::Precondition("chains must cover every vertex".into()));
    }
    let product = chains
        .iter()
        .try_fold(automaton_states.max(1), |acc, ch| acc.checked_mul(ch.len() + 1))
        .unwrap_or(usize::MAX);
    if product > caps.bounded_width {
        return Err(SolveError::CapExceeded {
            what: "chain configurations",
            limit: caps.bounded_width,
        });
    }
    let need = (0..n)
        .map(|v| {
            let mut row = vec![0u32; chains.len()];
            for u in g.ancestors(v).ones() {
                let c = chain_of[u];
                row[c] = row[c].max(index_of[u] + 1);
            }
            row
        })
        .collect();
    let space = ChainSpace {
        g,
        acc,
        chains,
        lens: chains.iter().map(|c| c.len() as u32).collect(),
        need,
    };
    match find_path(&space, (vec![0; chains.len()], acc.start()), caps.search_states)? {
        Some(order) => SolveResult::yes(g, order, acc, "bounded-width"),
        None => Ok(SolveResult::no("bounded-width")),
    }
}
