use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::lang::{Alphabet, Dfa};
use crate::solvers::{Acceptor, SolveError};

/// Finite group given by its multiplication table, a letter-to-element map
/// and a set of accepting elements. The language is the set of words whose
/// product is accepting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    alphabet: Alphabet,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    mu: Vec<usize>,
    accepting: Vec<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub table: Vec<Vec<usize>>,
    pub mu: BTreeMap<char, usize>,
    #[serde(default)]
    pub accepting: Vec<usize>,
    /// Symbol order; defaults to the sorted keys of `mu`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<String>,
}

impl GroupPresentation {
    pub fn new(
        alphabet: Alphabet,
        table: Vec<Vec<usize>>,
        mu: Vec<usize>,
        accepting: &[usize],
    ) -> Result<GroupPresentation, SolveError> {
        let h = table.len();
        let bad = |m: &str| SolveError::Spec(format!("group table: {m}"));
        if h == 0 || table.iter().any(|r| r.len() != h || r.iter().any(|&x| x >= h)) {
            return Err(bad("must be a square table of element indices"));
        }
        let identity = (0..h)
            .find(|&e| (0..h).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| bad("no identity element"))?;
        let mut inverse = vec![0; h];
        for x in 0..h {
            inverse[x] = (0..h)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| bad("element without inverse"))?;
        }
        for x in 0..h {
            for y in 0..h {
                for z in 0..h {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        if mu.len() != alphabet.len() || mu.iter().any(|&x| x >= h) {
            return Err(SolveError::Spec("mu must map every symbol to an element".into()));
        }
        let mut acc = vec![false; h];
        for &x in accepting {
            *acc.get_mut(x).ok_or_else(|| bad("accepting element out of range"))? = true;
        }
        Ok(GroupPresentation {
            alphabet,
            table,
            identity,
            inverse,
            mu,
            accepting: acc,
        })
    }

    pub fn from_json(j: &GroupJson) -> Result<GroupPresentation, SolveError> {
        let alphabet = match &j.alphabet {
            Some(a) => Alphabet::try_from(a.as_str())?,
            None => Alphabet::new(j.mu.keys().copied())?,
        };
        let mut mu = Vec::with_capacity(alphabet.len());
        for &c in alphabet.symbols() {
            mu.push(*j.mu.get(&c).ok_or_else(|| SolveError::Spec(format!("mu has no image for '{c}'")))?);
        }
        if j.mu.len() != alphabet.len() {
            return Err(SolveError::Spec("mu keys and alphabet differ".into()));
        }
        GroupPresentation::new(alphabet, j.table.clone(), mu, &j.accepting)
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            table: self.table.clone(),
            mu: self.alphabet.symbols().iter().copied().zip(self.mu.iter().copied()).collect(),
            accepting: (0..self.order()).filter(|&x| self.accepting[x]).collect(),
            alphabet: Some(self.alphabet.to_string()),
        }
    }

    /// Cyclic group of order `n` with the given generator images.
    pub fn cyclic(n: usize, alphabet: Alphabet, mu: Vec<usize>, accepting: &[usize]) -> Result<Self, SolveError> {
        let table = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        GroupPresentation::new(alphabet, table, mu, accepting)
    }

    /// Symmetric group on three points; elements are the permutations of
    /// `[0, 1, 2]` in lexicographic order, composed left to right.
    pub fn symmetric3(alphabet: Alphabet, mu: Vec<usize>, accepting: &[usize]) -> Result<Self, SolveError> {
        let perms = Self::s3_elements();
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|x| perms.iter().map(|y| index([y[x[0]], y[x[1]], y[x[2]]])).collect())
            .collect();
        GroupPresentation::new(alphabet, table, mu, accepting)
    }

    pub fn s3_elements() -> Vec<[usize; 3]> {
        vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn mu(&self, symbol: usize) -> usize {
        self.mu[symbol]
    }

    pub fn mu_of(&self, c: char) -> Option<usize> {
        self.alphabet.index(c).map(|i| self.mu[i])
    }

    pub fn is_accepting(&self, x: usize) -> bool {
        self.accepting[x]
    }

    pub fn accepting(&self) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.accepting[x]).collect()
    }

    pub fn with_accepting(&self, accepting: &[usize]) -> GroupPresentation {
        let mut g = self.clone();
        g.accepting = vec![false; self.order()];
        for &x in accepting {
            g.accepting[x] = true;
        }
        g
    }

    /// Image of a word; `None` if it uses a symbol outside the alphabet.
    pub fn eval(&self, word: &str) -> Option<usize> {
        word.chars()
            .try_fold(self.identity, |x, c| self.mu_of(c).map(|g| self.table[x][g]))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut cur = x;
        while cur != self.identity {
            cur = self.table[cur][x];
            k += 1;
        }
        k
    }

    /// Same table restricted to a subset of the letters.
    pub fn restrict(&self, letters: &[char]) -> GroupPresentation {
        let symbols: Vec<char> = self.alphabet.symbols().iter().copied().filter(|c| letters.contains(c)).collect();
        let mu = symbols.iter().map(|&c| self.mu_of(c).expect("subset")).collect();
        GroupPresentation {
            alphabet: Alphabet::new(symbols).expect("subset of a valid alphabet"),
            mu,
            ..self.clone()
        }
    }

    /// Shortest word (as symbol indices) for every element of the generated
    /// subgroup; `None` for the others.
    pub fn shortest_words(&self) -> Vec<Option<Vec<usize>>> {
        let mut out: Vec<Option<Vec<usize>>> = vec![None; self.order()];
        out[self.identity] = Some(Vec::new());
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for a in 0..self.alphabet.len() {
                let y = self.table[x][self.mu[a]];
                if out[y].is_none() {
                    let mut w = out[x].clone().expect("visited");
                    w.push(a);
                    out[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// Elements reachable as images of words.
    pub fn generated(&self) -> Vec<bool> {
        self.shortest_words().iter().map(Option::is_some).collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.generated().iter().all(|&b| b)
    }

    /// DFA over `alphabet`; symbols outside the group alphabet lead to a
    /// rejecting sink.
    pub fn to_dfa(&self, alphabet: &Alphabet) -> Dfa {
        let h = self.order();
        let sink = h;
        let mut delta = Vec::with_capacity(h + 1);
        for x in 0..h {
            delta.push(
                alphabet
                    .symbols()
                    .iter()
                    .map(|&c| self.mu_of(c).map_or(sink, |g| self.table[x][g]))
                    .collect(),
            );
        }
        delta.push(vec![sink; alphabet.len()]);
        let mut finals = self.accepting.clone();
        finals.push(false);
        Dfa::from_parts(alphabet.clone(), delta, self.identity, finals).minimize()
    }
}

impl Acceptor for GroupPresentation {
    type State = usize;

    fn start(&self) -> usize {
        self.identity
    }

    fn step_word(&self, s: &usize, word: &str) -> usize {
        word.chars()
            .fold(*s, |x, c| self.table[x][self.mu_of(c).expect("labels checked")])
    }

    fn is_accepting(&self, s: &usize) -> bool {
        self.accepting[*s]
    }

    fn knows(&self, c: char) -> bool {
        self.alphabet.contains(c)
    }
}
