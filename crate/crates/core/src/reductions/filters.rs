use serde::{Deserialize, Serialize};

use super::ReductionError;

/// `(b^B a^B ab)^{n/2B}` when `2B` divides `n`, else `a^{n+1}`. Interleaving
/// a word `v` of length `n` with it can reach `(ab)*` iff `v ∈ (a^B b^B)*`.
pub fn filter_ab_from_power(b: usize, n: usize) -> String {
    assert!(b >= 1, "block length must be positive");
    if n % (2 * b) == 0 {
        let block = format!("{}{}ab", "b".repeat(b), "a".repeat(b));
        block.repeat(n / (2 * b))
    } else {
        "a".repeat(n + 1)
    }
}

/// Filter from `(ab)*` to `u*` for a word `u` holding both `a` and `b`.
///
/// With `u = xy` cut at the first change of letter and `u' = yx`, even
/// lengths `2k` give `x (u' u'₋ₐ u' u'₋b u')^k y`, where `u'₋c` drops the
/// first `c` of `u'`. Odd lengths give `a^{n|u|+1}`, which no insertion of
/// `n` letters brings into `u*`.
pub fn filter_ustar_from_ab(u: &str, n: usize) -> Result<String, ReductionError> {
    let chars: Vec<char> = u.chars().collect();
    if !chars.contains(&'a') || !chars.contains(&'b') {
        return Err(ReductionError::Precondition(format!("'{u}' must contain both a and b")));
    }
    if n % 2 == 1 {
        return Ok("a".repeat(n * chars.len() + 1));
    }
    let cut = (1..chars.len()).find(|&i| chars[i] != chars[i - 1]).expect("two distinct letters");
    let (x, y) = chars.split_at(cut);
    let rotated: String = y.iter().chain(x).collect();
    let drop_first = |c: char| {
        let mut w = rotated.clone();
        w.remove(w.find(c).expect("letter present"));
        w
    };
    let block = format!("{r}{}{r}{}{r}", drop_first('a'), drop_first('b'), r = rotated);
    let x: String = x.iter().collect();
    let y: String = y.iter().collect();
    Ok(format!("{x}{}{y}", block.repeat(n / 2)))
}

/// Filter from `(ab)*` to `(aa+bb)*`: `(ab)^{n/2}` for even `n`, and for odd
/// `n` the word `(ab)^{n+1}`, whose interleavings all have odd length.
pub fn filter_aabb_from_ab(n: usize) -> String {
    if n % 2 == 0 {
        "ab".repeat(n / 2)
    } else {
        "ab".repeat(n + 1)
    }
}

/// A filter sequence together with its source and target languages.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FilterSequence {
    /// `(a^B b^B)*` to `(ab)*`.
    AbFromPower { block: usize },
    /// `(ab)*` to `u*`.
    UstarFromAb { u: String },
    /// `(ab)*` to `(aa+bb)*`.
    AabbFromAb,
}

impl FilterSequence {
    pub fn word(&self, n: usize) -> Result<String, ReductionError> {
        match self {
            FilterSequence::AbFromPower { block } => {
                if *block == 0 {
                    return Err(ReductionError::Precondition("block length must be positive".into()));
                }
                Ok(filter_ab_from_power(*block, n))
            }
            FilterSequence::UstarFromAb { u } => filter_ustar_from_ab(u, n),
            FilterSequence::AabbFromAb => Ok(filter_aabb_from_ab(n)),
        }
    }

    pub fn source(&self) -> String {
        match self {
            FilterSequence::AbFromPower { block } => format!("({}{})*", "a".repeat(*block), "b".repeat(*block)),
            _ => "(ab)*".to_string(),
        }
    }

    pub fn target(&self) -> String {
        match self {
            FilterSequence::AbFromPower { .. } => "(ab)*".to_string(),
            FilterSequence::UstarFromAb { u } => format!("({u})*"),
            FilterSequence::AabbFromAb => "(aa+bb)*".to_string(),
        }
    }
}
