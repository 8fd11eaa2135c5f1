use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Alphabet, Dfa, LangError};

/// Complete transition structure without initial or final states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semiautomaton {
    pub alphabet: Alphabet,
    pub delta: Vec<Vec<usize>>,
    pub names: Vec<String>,
}

/// A finite list of `(initial, finals)` pairs. The accepted language is the
/// intersection of the languages of the pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatePairSpec {
    pub pairs: Vec<(usize, Vec<bool>)>,
}

impl Semiautomaton {
    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn from_dfa(d: &Dfa) -> (Semiautomaton, StatePairSpec) {
        let sa = Semiautomaton {
            alphabet: d.alphabet().clone(),
            delta: d.table().to_vec(),
            names: d.names().to_vec(),
        };
        let spec = StatePairSpec {
            pairs: vec![(d.initial(), d.finals().to_vec())],
        };
        (sa, spec)
    }

    pub fn dfa(&self, initial: usize, finals: Vec<bool>) -> Dfa {
        Dfa::with_names(
            self.alphabet.clone(),
            self.delta.clone(),
            initial,
            finals,
            self.names.clone(),
        )
        .expect("semiautomaton shape checked on construction")
    }

    /// DFA for the intersection of all pairs.
    pub fn intersection_dfa(&self, spec: &StatePairSpec) -> Result<Dfa, LangError> {
        let mut it = spec.pairs.iter();
        let first = match it.next() {
            Some((q, f)) => self.dfa(*q, f.clone()).minimize(),
            None => return Ok(Dfa::from_parts(self.alphabet.clone(), vec![vec![0; self.alphabet.len()]], 0, vec![true])),
        };
        it.try_fold(first, |acc, (q, f)| acc.intersection(&self.dfa(*q, f.clone())))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairJson {
    pub initial: String,
    pub finals: Vec<String>,
}

/// JSON shape shared by semiautomata and DFAs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AutomatonJson {
    pub states: Vec<String>,
    pub alphabet: String,
    pub delta: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finals: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<PairJson>,
}

impl AutomatonJson {
    pub fn semiautomaton(&self) -> Result<Semiautomaton, LangError> {
        let alphabet = Alphabet::try_from(self.alphabet.as_str())?;
        let index: BTreeMap<&str, usize> = self
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        if index.len() != self.states.len() || self.states.is_empty() {
            return Err(LangError::Malformed("state names must be distinct and non-empty".into()));
        }
        let mut delta = Vec::with_capacity(self.states.len());
        for s in &self.states {
            let row = self.delta.get(s).ok_or(LangError::Incomplete)?;
            let mut out = Vec::with_capacity(alphabet.len());
            for &c in alphabet.symbols() {
                let t = row.get(&c.to_string()).ok_or(LangError::Incomplete)?;
                out.push(*index.get(t.as_str()).ok_or_else(|| {
                    LangError::Malformed(format!("unknown state '{t}'"))
                })?);
            }
            if row.len() != alphabet.len() {
                return Err(LangError::Malformed(format!("state '{s}' has transitions on unknown symbols")));
            }
            delta.push(out);
        }
        Ok(Semiautomaton {
            alphabet,
            delta,
            names: self.states.clone(),
        })
    }

    fn state(&self, name: &str) -> Result<usize, LangError> {
        self.states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| LangError::Malformed(format!("unknown state '{name}'")))
    }

    fn finals_vec(&self, names: &[String]) -> Result<Vec<bool>, LangError> {
        let mut f = vec![false; self.states.len()];
        for n in names {
            f[self.state(n)?] = true;
        }
        Ok(f)
    }

    /// Pairs from the `pairs` list, or the single `initial`/`finals` pair.
    pub fn pair_spec(&self) -> Result<StatePairSpec, LangError> {
        let mut pairs = Vec::new();
        for p in &self.pairs {
            pairs.push((self.state(&p.initial)?, self.finals_vec(&p.finals)?));
        }
        if pairs.is_empty() {
            let init = self
                .initial
                .as_ref()
                .ok_or_else(|| LangError::Malformed("missing initial state".into()))?;
            let finals = self.finals.clone().unwrap_or_default();
            pairs.push((self.state(init)?, self.finals_vec(&finals)?));
        }
        Ok(StatePairSpec { pairs })
    }

    pub fn dfa(&self) -> Result<Dfa, LangError> {
        let sa = self.semiautomaton()?;
        let spec = self.pair_spec()?;
        if spec.pairs.len() == 1 {
            let (q, f) = spec.pairs[0].clone();
            Ok(sa.dfa(q, f))
        } else {
            sa.intersection_dfa(&spec)
        }
    }

    pub fn from_dfa(d: &Dfa) -> AutomatonJson {
        let names = d.names();
        let mut delta = BTreeMap::new();
        for (q, row) in d.table().iter().enumerate() {
            let m = row
                .iter()
                .enumerate()
                .map(|(a, &r)| (d.alphabet().symbol(a).to_string(), names[r].clone()))
                .collect();
            delta.insert(names[q].clone(), m);
        }
        AutomatonJson {
            states: names.to_vec(),
            alphabet: d.alphabet().to_string(),
            delta,
            initial: Some(names[d.initial()].clone()),
            finals: Some(
                (0..d.num_states())
                    .filter(|&q| d.is_final(q))
                    .map(|q| names[q].clone())
                    .collect(),
            ),
            pairs: Vec::new(),
        }
    }
}
