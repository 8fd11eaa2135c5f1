use serde::Serialize;

use super::LabeledDag;
use crate::lang::{Alphabet, LangError};

/// Letter counts, one coordinate per alphabet symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParikhVector(pub Vec<usize>);

impl ParikhVector {
    pub fn zero(k: usize) -> Self {
        ParikhVector(vec![0; k])
    }

    pub fn of_word(alphabet: &Alphabet, word: &str) -> Result<Self, LangError> {
        let mut p = Self::zero(alphabet.len());
        for a in alphabet.encode(word)? {
            p.0[a] += 1;
        }
        Ok(p)
    }

    /// Sum over all vertex labels; this is the count vector of every
    /// topological sort.
    pub fn of_dag(g: &LabeledDag) -> Self {
        let mut p = Self::zero(g.alphabet().len());
        for l in g.labels() {
            for c in l.chars() {
                p.0[g.alphabet().index(c).expect("labels validated")] += 1;
            }
        }
        p
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add(&mut self, other: &ParikhVector) {
        for (x, y) in self.0.iter_mut().zip(&other.0) {
            *x += y;
        }
    }
}

pub fn parikh_image(g: &LabeledDag) -> ParikhVector {
    ParikhVector::of_dag(g)
}
