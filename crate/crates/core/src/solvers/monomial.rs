use fixedbitset::FixedBitSet;

use super::{require_letters, SolveError, SolveResult};
use crate::dag::LabeledDag;
use crate::lang::{Alphabet, Dfa, Regex};

/// `A_0* a_1 A_1* … a_n A_n*` with subalphabets `gaps[i]` and pivot letters
/// `pivots[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub gaps: Vec<Vec<char>>,
    pub pivots: Vec<char>,
}

impl Monomial {
    pub fn new(gaps: Vec<Vec<char>>, pivots: Vec<char>) -> Result<Monomial, SolveError> {
        if gaps.len() != pivots.len() + 1 {
            return Err(SolveError::Spec(format!(
                "a monomial with {} pivots needs {} gaps, got {}",
                pivots.len(),
                pivots.len() + 1,
                gaps.len()
            )));
        }
        Ok(Monomial { gaps, pivots })
    }

    /// Parse gap strings like `["ab", "", "b"]` and pivots like `"ab"`.
    pub fn parse(gaps: &[&str], pivots: &str) -> Result<Monomial, SolveError> {
        Monomial::new(gaps.iter().map(|g| g.chars().collect()).collect(), pivots.chars().collect())
    }

    pub fn letters(&self) -> Vec<char> {
        let mut out: Vec<char> = Vec::new();
        for &c in self.gaps.iter().flatten().chain(&self.pivots) {
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    pub fn to_regex(&self) -> Regex {
        let gap = |g: &Vec<char>| {
            if g.is_empty() {
                Regex::Epsilon
            } else {
                Regex::star(Regex::any_of(g.iter().copied()))
            }
        };
        let mut r = gap(&self.gaps[0]);
        for (i, &p) in self.pivots.iter().enumerate() {
            r = Regex::concat(Regex::concat(r, Regex::Symbol(p)), gap(&self.gaps[i + 1]));
        }
        r
    }

    pub fn to_dfa(&self, alphabet: &Alphabet) -> Result<Dfa, SolveError> {
        let full = alphabet.union(&Alphabet::new(self.letters())?);
        Ok(Dfa::from_regex(&self.to_regex(), &full))
    }
}

struct Checker<'a> {
    g: &'a LabeledDag,
    m: &'a Monomial,
    pivots: Vec<usize>,
    is_pivot: Vec<bool>,
}

impl Checker<'_> {
    fn in_gap(&self, w: usize, j: usize) -> bool {
        !self.is_pivot[w] && self.m.gaps[j].contains(&self.g.letter(w).expect("letters checked"))
    }

    fn with_ancestors(&self, set: &mut FixedBitSet, w: usize, within: &FixedBitSet) {
        set.insert(w);
        let mut anc = self.g.ancestors(w).clone();
        anc.intersect_with(within);
        set.union_with(&anc);
    }

    /// Order of `within` spelling a word of the prefix with `j` pivots, the
    /// pivots being fixed to `self.pivots[..j]`.
    fn check(&self, within: &FixedBitSet, j: usize) -> Option<Vec<usize>> {
        if j == 0 {
            return within
                .ones()
                .all(|w| self.in_gap(w, 0))
                .then(|| self.g.topo_order_of(within));
        }
        let v = self.pivots[j - 1];
        if !within.contains(v) || self.pivots[..j - 1].iter().any(|&p| !within.contains(p)) {
            return None;
        }
        let mut below = self.g.descendants(v).clone();
        below.intersect_with(within);
        if !below.ones().all(|z| self.in_gap(z, j)) {
            return None;
        }
        let n = self.g.len();
        let mut prefix = FixedBitSet::with_capacity(n);
        for &p in &self.pivots[..j - 1] {
            self.with_ancestors(&mut prefix, p, within);
        }
        let mut strict = self.g.ancestors(v).clone();
        strict.intersect_with(within);
        prefix.union_with(&strict);
        for w in within.ones() {
            if w != v && !self.g.comparable(v, w) && !self.in_gap(w, j) {
                self.with_ancestors(&mut prefix, w, within);
            }
        }
        if prefix.contains(v) {
            return None;
        }
        let mut rest = within.clone();
        rest.difference_with(&prefix);
        rest.set(v, false);
        if !rest.ones().all(|w| self.in_gap(w, j)) {
            return None;
        }
        let mut order = self.check(&prefix, j - 1)?;
        order.push(v);
        order.extend(self.g.topo_order_of(&rest));
        Some(order)
    }
}

/// Monomial languages: every choice of pivot vertices is tried, and for a
/// fixed choice the graph is split around the last pivot and the prefix is
/// checked recursively.
pub fn solve_monomial(g: &LabeledDag, m: &Monomial) -> Result<SolveResult, SolveError> {
    require_letters(g, "monomial")?;
    let dfa = m.to_dfa(g.alphabet())?;
    let n = g.len();
    let k = m.pivots.len();
    if k > n {
        return Ok(SolveResult::no("monomial"));
    }
    let candidates: Vec<Vec<usize>> = m
        .pivots
        .iter()
        .map(|&p| (0..n).filter(|&v| g.letter(v) == Some(p)).collect())
        .collect();
    let all = {
        let mut s = FixedBitSet::with_capacity(n);
        s.insert_range(..);
        s
    };
    let mut tuple = Vec::with_capacity(k);
    fn go(
        g: &LabeledDag,
        m: &Monomial,
        candidates: &[Vec<usize>],
        tuple: &mut Vec<usize>,
        all: &FixedBitSet,
    ) -> Option<Vec<usize>> {
        if tuple.len() == candidates.len() {
            let mut is_pivot = vec![false; g.len()];
            for &p in tuple.iter() {
                is_pivot[p] = true;
            }
            let c = Checker {
                g,
                m,
                pivots: tuple.clone(),
                is_pivot,
            };
            return c.check(all, tuple.len());
        }
        for &v in &candidates[tuple.len()] {
            // an earlier pivot can never come after a later one
            if tuple.iter().any(|&u| u == v || g.reaches(v, u)) {
                continue;
            }
            tuple.push(v);
            if let Some(order) = go(g, m, candidates, tuple, all) {
                return Some(order);
            }
            tuple.pop();
        }
        None
    }
    match go(g, m, &candidates, &mut tuple, &all) {
        Some(order) => SolveResult::yes(g, order, &dfa, "monomial"),
        None => Ok(SolveResult::no("monomial")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_one() {
        let abc = Alphabet::new("abc".chars()).unwrap();
        let m = Monomial::parse(&["", "b", ""], "ac").unwrap();
        let g1 = LabeledDag::from_letters(&abc, "abbc", &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let g2 = LabeledDag::from_letters(&abc, "abbc", &[(0, 1), (2, 3)]).unwrap();
        let g3 = LabeledDag::from_letters(&abc, "acb", &[(0, 1), (1, 2)]).unwrap();
        assert!(solve_monomial(&g1, &m).unwrap().decision);
        assert!(solve_monomial(&g2, &m).unwrap().decision);
        assert!(!solve_monomial(&g3, &m).unwrap().decision);
    }

    #[test]
    fn arity_is_checked() {
        assert!(Monomial::parse(&["a"], "b").is_err());
    }
}
