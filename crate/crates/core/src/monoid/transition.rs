use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::MonoidError;
use crate::lang::{Dfa, Semiautomaton};

/// Caps for monoid construction.
#[derive(Clone, Copy, Debug)]
pub struct MonoidCaps {
    pub max_states: usize,
    pub max_elements: usize,
}

impl Default for MonoidCaps {
    fn default() -> Self {
        MonoidCaps {
            max_states: 12,
            max_elements: 100_000,
        }
    }
}

const TABLE_LIMIT: usize = 4096;

/// Transition monoid of a semiautomaton. Elements are state maps, sorted
/// lexicographically; `mul(x, y)` is "first x, then y", matching
/// concatenation of the words that induce them.
#[derive(Clone, Debug)]
pub struct TransitionMonoid {
    elements: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    table: Option<Vec<u32>>,
    generators: Vec<usize>,
    identity: usize,
    words: Vec<String>,
    omega: u64,
    idem: Vec<usize>,
}

#[derive(Serialize)]
pub struct MonoidDump {
    pub alphabet: String,
    pub elements: Vec<Vec<usize>>,
    pub words: Vec<String>,
    pub identity: usize,
    pub generators: std::collections::BTreeMap<String, usize>,
    pub omega: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl TransitionMonoid {
    pub fn of_semiautomaton(sa: &Semiautomaton, caps: MonoidCaps) -> Result<Self, MonoidError> {
        let n = sa.num_states();
        if n > caps.max_states {
            return Err(MonoidError::CapExceeded {
                what: "semiautomaton states",
                limit: caps.max_states,
            });
        }
        let k = sa.alphabet.len();
        let gens: Vec<Vec<usize>> = (0..k)
            .map(|a| (0..n).map(|q| sa.delta[q][a]).collect())
            .collect();
        let id: Vec<usize> = (0..n).collect();
        let mut found: Vec<(Vec<usize>, String)> = vec![(id.clone(), String::new())];
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (a, g) in gens.iter().enumerate() {
                let next: Vec<usize> = found[i].0.iter().map(|&q| g[q]).collect();
                if !seen.contains_key(&next) {
                    if found.len() >= caps.max_elements {
                        return Err(MonoidError::CapExceeded {
                            what: "monoid elements",
                            limit: caps.max_elements,
                        });
                    }
                    let mut w = found[i].1.clone();
                    w.push(sa.alphabet.symbol(a));
                    seen.insert(next.clone(), found.len());
                    found.push((next, w));
                    queue.push_back(found.len() - 1);
                }
            }
        }
        found.sort();
        let elements: Vec<Vec<usize>> = found.iter().map(|e| e.0.clone()).collect();
        let words = found.into_iter().map(|e| e.1).collect();
        let index: HashMap<Vec<usize>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let identity = index[&(0..n).collect::<Vec<_>>()];
        let generators = gens.iter().map(|g| index[g]).collect();
        let mut m = TransitionMonoid {
            elements,
            index,
            table: None,
            generators,
            identity,
            words,
            omega: 1,
            idem: Vec::new(),
        };
        let size = m.elements.len();
        if size <= TABLE_LIMIT {
            let mut t = vec![0u32; size * size];
            for x in 0..size {
                for y in 0..size {
                    t[x * size + y] = m.compose(x, y) as u32;
                }
            }
            m.table = Some(t);
        }
        m.compute_powers();
        Ok(m)
    }

    /// Syntactic monoid: transition monoid of the minimal DFA.
    pub fn syntactic(d: &Dfa, caps: MonoidCaps) -> Result<Self, MonoidError> {
        let (sa, _) = Semiautomaton::from_dfa(&d.minimize());
        Self::of_semiautomaton(&sa, caps)
    }

    fn compose(&self, x: usize, y: usize) -> usize {
        let (fx, fy) = (&self.elements[x], &self.elements[y]);
        let v: Vec<usize> = fx.iter().map(|&q| fy[q]).collect();
        self.index[&v]
    }

    fn compute_powers(&mut self) {
        let size = self.elements.len();
        let mut lcm: u64 = 1;
        let mut max_index: u64 = 1;
        let mut idem = vec![0; size];
        for x in 0..size {
            let mut pos: HashMap<usize, u64> = HashMap::new();
            let mut cur = x;
            let mut k = 1u64;
            let (start, period) = loop {
                if let Some(&i) = pos.get(&cur) {
                    break (i, k - i);
                }
                pos.insert(cur, k);
                cur = self.mul(cur, x);
                k += 1;
            };
            // x^m with m a multiple of the period inside [start, start + period)
            let m = start.div_ceil(period) * period;
            idem[x] = self.pow_naive(x, m);
            lcm = lcm / gcd(lcm, period) * period;
            max_index = max_index.max(start);
        }
        self.omega = max_index.div_ceil(lcm) * lcm;
        self.idem = idem;
    }

    fn pow_naive(&self, x: usize, m: u64) -> usize {
        let mut r = x;
        for _ in 1..m {
            r = self.mul(r, x);
        }
        r
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generator(&self, symbol: usize) -> usize {
        self.generators[symbol]
    }

    /// A shortest word inducing the element.
    pub fn word(&self, x: usize) -> &str {
        &self.words[x]
    }

    pub fn omega(&self) -> u64 {
        self.omega
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        match &self.table {
            Some(t) => t[x * self.elements.len() + y] as usize,
            None => self.compose(x, y),
        }
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut result = self.identity;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    /// `x^ω`, the idempotent power of `x`.
    pub fn omega_power(&self, x: usize) -> usize {
        self.idem[x]
    }

    pub fn is_permutation(&self, x: usize) -> bool {
        let f = &self.elements[x];
        let mut seen = vec![false; f.len()];
        f.iter().all(|&q| !std::mem::replace(&mut seen[q], true))
    }

    pub fn dump(&self, alphabet: &crate::lang::Alphabet) -> MonoidDump {
        let size = self.len();
        MonoidDump {
            alphabet: alphabet.to_string(),
            elements: self.elements.clone(),
            words: self.words.clone(),
            identity: self.identity,
            generators: alphabet
                .symbols()
                .iter()
                .enumerate()
                .map(|(i, c)| (c.to_string(), self.generators[i]))
                .collect(),
            omega: self.omega,
            table: (size <= 256).then(|| {
                (0..size)
                    .map(|x| (0..size).map(|y| self.mul(x, y)).collect())
                    .collect()
            }),
        }
    }
}
