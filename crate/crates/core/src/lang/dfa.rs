use std::collections::{HashMap, VecDeque};

use super::nfa::Nfa;
use super::{Alphabet, LangError, Regex};

/// Complete deterministic automaton. States are `0..num_states()`, every
/// state has a transition on every symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<Vec<usize>>,
    initial: usize,
    finals: Vec<bool>,
    names: Vec<String>,
}

impl Dfa {
    pub fn from_parts(
        alphabet: Alphabet,
        delta: Vec<Vec<usize>>,
        initial: usize,
        finals: Vec<bool>,
    ) -> Dfa {
        let names = (0..delta.len()).map(|i| format!("q{i}")).collect();
        Dfa {
            alphabet,
            delta,
            initial,
            finals,
            names,
        }
    }

    /// Like [`Dfa::from_parts`] but checks shape and keeps state names.
    pub fn with_names(
        alphabet: Alphabet,
        delta: Vec<Vec<usize>>,
        initial: usize,
        finals: Vec<bool>,
        names: Vec<String>,
    ) -> Result<Dfa, LangError> {
        let n = delta.len();
        if n == 0 || initial >= n || finals.len() != n || names.len() != n {
            return Err(LangError::Malformed("state count mismatch".into()));
        }
        for row in &delta {
            if row.len() != alphabet.len() {
                return Err(LangError::Incomplete);
            }
            if row.iter().any(|&t| t >= n) {
                return Err(LangError::Malformed("transition to unknown state".into()));
            }
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            finals,
            names,
        })
    }

    /// Minimal complete DFA of a regex: Thompson, subset construction, then
    /// partition refinement.
    pub fn from_regex(r: &Regex, alphabet: &Alphabet) -> Dfa {
        Nfa::from_regex(r, alphabet)
            .determinize(alphabet)
            .minimize()
    }

    pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<Dfa, LangError> {
        Ok(Dfa::from_regex(&Regex::parse(text, alphabet)?, alphabet))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> &[bool] {
        &self.finals
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn step(&self, q: usize, symbol: usize) -> usize {
        self.delta[q][symbol]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.delta
    }

    pub fn run_indices(&self, q: usize, word: &[usize]) -> usize {
        word.iter().fold(q, |q, &a| self.delta[q][a])
    }

    pub fn run(&self, q: usize, word: &str) -> Result<usize, LangError> {
        let mut q = q;
        for c in word.chars() {
            let a = self.alphabet.index(c).ok_or(LangError::UnknownSymbol(c))?;
            q = self.delta[q][a];
        }
        Ok(q)
    }

    pub fn accepts(&self, word: &str) -> Result<bool, LangError> {
        Ok(self.finals[self.run(self.initial, word)?])
    }

    pub fn with_initial(&self, q: usize) -> Dfa {
        let mut d = self.clone();
        d.initial = q;
        d
    }

    /// Minimal DFA for `u⁻¹L = {v : uv ∈ L}`.
    pub fn left_quotient(&self, u: &str) -> Result<Dfa, LangError> {
        let q = self.run(self.initial, u)?;
        Ok(self.with_initial(q).minimize())
    }

    /// Same language over `self.alphabet ∪ extra`; new symbols reject.
    pub fn widen(&self, extra: &Alphabet) -> Dfa {
        let alphabet = self.alphabet.union(extra);
        if alphabet == self.alphabet {
            return self.clone();
        }
        let sink = self.num_states();
        let row = |q: usize| -> Vec<usize> {
            alphabet
                .symbols()
                .iter()
                .map(|&c| match (q < sink, self.alphabet.index(c)) {
                    (true, Some(a)) => self.delta[q][a],
                    _ => sink,
                })
                .collect()
        };
        let delta = (0..=sink).map(row).collect();
        let mut finals = self.finals.clone();
        finals.push(false);
        Dfa::from_parts(alphabet, delta, self.initial, finals).minimize()
    }

    pub fn complement(&self) -> Dfa {
        let mut d = self.clone();
        d.finals.iter_mut().for_each(|f| *f = !*f);
        d
    }

    /// Reachable product automaton with finality combined by `op`.
    pub fn product(&self, other: &Dfa, op: impl Fn(bool, bool) -> bool) -> Result<Dfa, LangError> {
        if self.alphabet != other.alphabet {
            return Err(LangError::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        let mut index = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0usize);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let next = (self.delta[p][a], other.delta[q][a]);
                let id = *index.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    pairs.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
            i += 1;
        }
        let finals = pairs
            .iter()
            .map(|&(p, q)| op(self.finals[p], other.finals[q]))
            .collect();
        Ok(Dfa::from_parts(self.alphabet.clone(), delta, 0, finals).minimize())
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa, LangError> {
        self.product(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Dfa) -> Result<Dfa, LangError> {
        self.product(other, |a, b| a && b)
    }

    /// Shortest accepted word (in symbol order among equal lengths), if any.
    pub fn shortest_word(&self) -> Option<String> {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.num_states()];
        let mut seen = vec![false; self.num_states()];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            if self.finals[q] {
                let mut word = Vec::new();
                let mut cur = q;
                while let Some((p, a)) = prev[cur] {
                    word.push(a);
                    cur = p;
                }
                word.reverse();
                return Some(self.alphabet.decode(&word));
            }
            for (a, &r) in self.delta[q].iter().enumerate() {
                if !seen[r] {
                    seen[r] = true;
                    prev[r] = Some((q, a));
                    queue.push_back(r);
                }
            }
        }
        None
    }

    pub fn is_empty_language(&self) -> bool {
        self.shortest_word().is_none()
    }

    /// Some word in exactly one of the two languages, or `None` if equal.
    pub fn distinguishing_word(&self, other: &Dfa) -> Result<Option<String>, LangError> {
        Ok(self.product(other, |a, b| a != b)?.shortest_word())
    }

    pub fn equivalent(&self, other: &Dfa) -> Result<bool, LangError> {
        Ok(self.distinguishing_word(other)?.is_none())
    }

    /// Drop unreachable states, merge equivalent ones (Moore refinement) and
    /// renumber in breadth-first order from the initial state.
    pub fn minimize(&self) -> Dfa {
        let reach = self.reachable_order();
        let n = reach.len();
        let mut pos = vec![usize::MAX; self.num_states()];
        for (i, &q) in reach.iter().enumerate() {
            pos[q] = i;
        }
        let delta: Vec<Vec<usize>> = reach
            .iter()
            .map(|&q| self.delta[q].iter().map(|&r| pos[r]).collect())
            .collect();
        let finals: Vec<bool> = reach.iter().map(|&q| self.finals[q]).collect();

        let mut class: Vec<usize> = finals.iter().map(|&f| f as usize).collect();
        let mut count = 0;
        loop {
            let mut sig_index: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next = vec![0; n];
            for q in 0..n {
                let sig = (class[q], delta[q].iter().map(|&r| class[r]).collect());
                let len = sig_index.len();
                next[q] = *sig_index.entry(sig).or_insert(len);
            }
            let new_count = sig_index.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut qdelta = vec![Vec::new(); count];
        let mut qfinals = vec![false; count];
        for q in 0..n {
            qdelta[class[q]] = delta[q].iter().map(|&r| class[r]).collect();
            qfinals[class[q]] = finals[q];
        }
        Dfa::from_parts(self.alphabet.clone(), qdelta, class[0], qfinals).canonical()
    }

    fn reachable_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_states()];
        seen[self.initial] = true;
        let mut order = vec![self.initial];
        let mut i = 0;
        while i < order.len() {
            for &r in &self.delta[order[i]] {
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
            i += 1;
        }
        order
    }

    /// Renumber reachable states breadth-first, symbols in alphabet order.
    fn canonical(&self) -> Dfa {
        let order = self.reachable_order();
        let mut pos = vec![usize::MAX; self.num_states()];
        for (i, &q) in order.iter().enumerate() {
            pos[q] = i;
        }
        let delta = order
            .iter()
            .map(|&q| self.delta[q].iter().map(|&r| pos[r]).collect())
            .collect();
        let finals = order.iter().map(|&q| self.finals[q]).collect();
        Dfa::from_parts(self.alphabet.clone(), delta, 0, finals)
    }
}
