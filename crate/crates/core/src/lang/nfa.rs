use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Alphabet, Dfa, Regex};

/// Nondeterministic automaton with ε-moves. Used only to build DFAs.
#[derive(Clone, Debug, Default)]
pub(crate) struct Nfa {
    pub eps: Vec<Vec<usize>>,
    pub trans: Vec<Vec<(usize, usize)>>,
    pub start: usize,
    pub finals: BTreeSet<usize>,
}

impl Nfa {
    pub fn add_state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.trans.push(Vec::new());
        self.eps.len() - 1
    }

    pub fn add_eps(&mut self, from: usize, to: usize) {
        self.eps[from].push(to);
    }

    pub fn add_trans(&mut self, from: usize, symbol: usize, to: usize) {
        self.trans[from].push((symbol, to));
    }

    /// Thompson construction.
    pub fn from_regex(r: &Regex, alphabet: &Alphabet) -> Nfa {
        let mut nfa = Nfa::default();
        let (s, f) = nfa.build(r, alphabet);
        nfa.start = s;
        nfa.finals.insert(f);
        nfa
    }

    fn build(&mut self, r: &Regex, alphabet: &Alphabet) -> (usize, usize) {
        match r {
            Regex::Empty => (self.add_state(), self.add_state()),
            Regex::Epsilon => {
                let s = self.add_state();
                let f = self.add_state();
                self.add_eps(s, f);
                (s, f)
            }
            Regex::Symbol(c) => {
                let s = self.add_state();
                let f = self.add_state();
                let i = alphabet.index(*c).expect("symbol checked at parse time");
                self.add_trans(s, i, f);
                (s, f)
            }
            Regex::Concat(a, b) => {
                let (s1, f1) = self.build(a, alphabet);
                let (s2, f2) = self.build(b, alphabet);
                self.add_eps(f1, s2);
                (s1, f2)
            }
            Regex::Union(a, b) => {
                let s = self.add_state();
                let (s1, f1) = self.build(a, alphabet);
                let (s2, f2) = self.build(b, alphabet);
                let f = self.add_state();
                self.add_eps(s, s1);
                self.add_eps(s, s2);
                self.add_eps(f1, f);
                self.add_eps(f2, f);
                (s, f)
            }
            Regex::Star(a) => {
                let s = self.add_state();
                let (s1, f1) = self.build(a, alphabet);
                let f = self.add_state();
                self.add_eps(s, s1);
                self.add_eps(s, f);
                self.add_eps(f1, s1);
                self.add_eps(f1, f);
                (s, f)
            }
        }
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &r in &self.eps[q] {
                if set.insert(r) {
                    stack.push(r);
                }
            }
        }
    }

    /// Subset construction. The empty subset becomes the sink, so the result
    /// is complete. Not minimized.
    pub fn determinize(&self, alphabet: &Alphabet) -> Dfa {
        let k = alphabet.len();
        let mut start = BTreeSet::from([self.start]);
        self.closure(&mut start);
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut sets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let mut row = vec![0; k];
            for (a, slot) in row.iter_mut().enumerate() {
                let mut next = BTreeSet::new();
                for &q in &sets[i] {
                    for &(sym, r) in &self.trans[q] {
                        if sym == a {
                            next.insert(r);
                        }
                    }
                }
                self.closure(&mut next);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = sets.len();
                        sets.push(next.clone());
                        index.insert(next, id);
                        queue.push_back(id);
                        id
                    }
                };
                *slot = id;
            }
            if delta.len() <= i {
                delta.resize(i + 1, Vec::new());
            }
            delta[i] = row;
        }
        let finals = sets
            .iter()
            .map(|s| s.iter().any(|q| self.finals.contains(q)))
            .collect();
        Dfa::from_parts(alphabet.clone(), delta, 0, finals)
    }
}
