//! Seeded random instances for tests and benchmarks.

use rand::Rng;

use crate::dag::{LabeledDag, ShuffleInstance};
use crate::lang::Alphabet;

pub fn random_word<R: Rng>(rng: &mut R, letters: &[char], len: usize) -> String {
    (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect()
}

/// `count` strings of length at most `max_len` over `alphabet`.
pub fn random_strings<R: Rng>(rng: &mut R, alphabet: &Alphabet, count: usize, max_len: usize) -> ShuffleInstance {
    let strings = (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            random_word(rng, alphabet.symbols(), len)
        })
        .collect();
    ShuffleInstance::new(alphabet.clone(), strings).expect("letters from the alphabet")
}

/// DAG on `n` vertices with each forward edge `i → j` present with
/// probability `p`.
pub fn random_dag<R: Rng>(rng: &mut R, alphabet: &Alphabet, n: usize, p: f64) -> LabeledDag {
    let labels = (0..n).map(|_| random_word(rng, alphabet.symbols(), 1)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    LabeledDag::new(alphabet.clone(), labels, &edges).expect("forward edges are acyclic")
}
