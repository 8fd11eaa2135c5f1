use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::GroupPresentation;
use crate::dag::ParikhVector;

/// Exact set of images of the words with a given Parikh vector, computed on
/// a saturated copy of the vector. Each coordinate above its cap is reduced
/// modulo the order of the letter's image; the cap starts at
/// `|H| · ord(μ(a))` and doubles whenever adding one more period to a
/// reduced coordinate changes the set.
pub(crate) struct Saturated<'g> {
    gp: &'g GroupPresentation,
    memo: HashMap<Vec<usize>, FixedBitSet>,
    /// The reduced vector; same residues as the query.
    pub(crate) reduced: Vec<usize>,
}

impl<'g> Saturated<'g> {
    pub(crate) fn new(gp: &'g GroupPresentation, p: &[usize]) -> Saturated<'g> {
        assert_eq!(p.len(), gp.alphabet().len(), "Parikh vector over the group alphabet");
        let k = p.len();
        let ord: Vec<usize> = (0..k).map(|a| gp.element_order(gp.mu(a))).collect();
        let mut cap: Vec<usize> = ord.iter().map(|o| gp.order() * o).collect();
        let mut this = Saturated {
            gp,
            memo: HashMap::new(),
            reduced: Vec::new(),
        };
        loop {
            let reduced: Vec<usize> = (0..k)
                .map(|a| {
                    if p[a] <= cap[a] {
                        p[a]
                    } else {
                        cap[a] + (p[a] - cap[a]) % ord[a]
                    }
                })
                .collect();
            let base = this.set(&reduced);
            let mut stable = true;
            for a in 0..k {
                if reduced[a] == p[a] {
                    continue;
                }
                let mut bumped = reduced.clone();
                bumped[a] += ord[a];
                if this.set(&bumped) != base {
                    cap[a] *= 2;
                    stable = false;
                }
            }
            if stable {
                this.reduced = reduced;
                return this;
            }
        }
    }

    pub(crate) fn result(&mut self) -> FixedBitSet {
        let r = self.reduced.clone();
        self.set(&r)
    }

    fn set(&mut self, p: &[usize]) -> FixedBitSet {
        if let Some(s) = self.memo.get(p) {
            return s.clone();
        }
        let h = self.gp.order();
        let mut out = FixedBitSet::with_capacity(h);
        if p.iter().all(|&x| x == 0) {
            out.insert(self.gp.identity());
        } else {
            let mut q = p.to_vec();
            for a in 0..p.len() {
                if p[a] == 0 {
                    continue;
                }
                q[a] -= 1;
                let prev = self.set(&q);
                q[a] += 1;
                let g = self.gp.mu(a);
                for x in prev.ones() {
                    out.insert(self.gp.mul(x, g));
                }
            }
        }
        self.memo.insert(p.to_vec(), out.clone());
        out
    }

    /// Word (symbol indices) with Parikh vector `reduced` and image `target`.
    pub(crate) fn word(&mut self, target: usize) -> Option<Vec<usize>> {
        let mut p = self.reduced.clone();
        if !self.set(&p).contains(target) {
            return None;
        }
        let mut rev = Vec::with_capacity(p.iter().sum());
        let mut g = target;
        while p.iter().any(|&x| x > 0) {
            let a = (0..p.len())
                .find(|&a| {
                    if p[a] == 0 {
                        return false;
                    }
                    p[a] -= 1;
                    let before = self.gp.mul(g, self.gp.inv(self.gp.mu(a)));
                    let ok = self.set(&p).contains(before);
                    p[a] += 1;
                    ok
                })
                .expect("membership implies a last letter");
            p[a] -= 1;
            g = self.gp.mul(g, self.gp.inv(self.gp.mu(a)));
            rev.push(a);
        }
        rev.reverse();
        Some(rev)
    }
}

/// `{ μ(w) : PI(w) = p }`, as a sorted list of elements.
pub fn reachable_set(gp: &GroupPresentation, p: &ParikhVector) -> Vec<usize> {
    Saturated::new(gp, &p.0).result().ones().collect()
}

/// A word with Parikh vector `p` whose image is `target`, as symbol
/// indices of the group alphabet; `None` when no such word exists.
pub fn arrange(gp: &GroupPresentation, p: &ParikhVector, target: usize) -> Option<Vec<usize>> {
    let mut sat = Saturated::new(gp, &p.0);
    let mut word = sat.word(target)?;
    // the removed letters come back as whole periods, each of image e
    for a in 0..p.0.len() {
        word.extend(std::iter::repeat(a).take(p.0[a] - sat.reduced[a]));
    }
    Some(word)
}

/// Largest shortest-word length over the elements generated by the
/// letters.
pub fn gamma(gp: &GroupPresentation) -> usize {
    gp.shortest_words().iter().flatten().map(Vec::len).max().unwrap_or(0)
}

/// `gamma` maximized over the nonempty sub-alphabets, which bounds the
/// spelling cost inside any slice of frequent letters. Alphabets larger
/// than 12 letters fall back to the full alphabet.
pub(crate) fn gamma_over_subalphabets(gp: &GroupPresentation) -> usize {
    let symbols = gp.alphabet().symbols().to_vec();
    if symbols.len() > 12 {
        return gamma(gp);
    }
    (1u32..1 << symbols.len())
        .map(|mask| {
            let sub: Vec<char> = (0..symbols.len()).filter(|i| mask >> i & 1 == 1).map(|i| symbols[i]).collect();
            gamma(&gp.restrict(&sub))
        })
        .max()
        .unwrap_or(0)
}

/// Letter count beyond which the images of all arrangements stop growing:
/// the least multiple of the lcm of the generator orders that is at least
/// `|H| · ord(μ(a))` for every letter.
pub fn omega_estimate(gp: &GroupPresentation) -> usize {
    let orders: Vec<usize> = (0..gp.alphabet().len()).map(|a| gp.element_order(gp.mu(a))).collect();
    let l = orders.iter().fold(1, |acc, &o| lcm(acc, o));
    let t = orders.iter().map(|o| gp.order() * o).max().unwrap_or(1);
    t.div_ceil(l) * l
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}
