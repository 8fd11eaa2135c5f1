use serde::Serialize;

use super::ShuffleInstance;

/// Split of letters and strings: a frequent letter occurs in at least
/// `R·k` frequent strings, a frequent string holds only frequent letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RareFrequent {
    pub rare_letters: Vec<char>,
    pub frequent_letters: Vec<char>,
    pub rare_strings: Vec<usize>,
    pub frequent_strings: Vec<usize>,
}

/// Fixpoint: while some frequent letter occurs in fewer than `r·k` frequent
/// strings (`k` the alphabet size), make it rare and move every string
/// containing it to the rare side. Letters are examined in alphabet order.
pub fn rare_frequent(inst: &ShuffleInstance, r: usize) -> RareFrequent {
    let alphabet = inst.alphabet().symbols();
    let threshold = r.saturating_mul(alphabet.len());
    let mut frequent_letter = vec![true; alphabet.len()];
    let mut frequent_string = vec![true; inst.strings().len()];
    loop {
        let mut changed = false;
        for (i, &c) in alphabet.iter().enumerate() {
            if !frequent_letter[i] {
                continue;
            }
            let holders: Vec<usize> = (0..inst.strings().len())
                .filter(|&s| frequent_string[s] && inst.strings()[s].contains(c))
                .collect();
            if holders.len() < threshold {
                frequent_letter[i] = false;
                for s in holders {
                    frequent_string[s] = false;
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let pick = |flags: &[bool], want: bool| -> Vec<usize> {
        (0..flags.len()).filter(|&i| flags[i] == want).collect()
    };
    RareFrequent {
        rare_letters: pick(&frequent_letter, false).into_iter().map(|i| alphabet[i]).collect(),
        frequent_letters: pick(&frequent_letter, true).into_iter().map(|i| alphabet[i]).collect(),
        rare_strings: pick(&frequent_string, false),
        frequent_strings: pick(&frequent_string, true),
    }
}
