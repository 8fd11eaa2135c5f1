//! Dilworth decomposition by bipartite matching on the comparability
//! relation, and antichains with prescribed letter counts.

use std::collections::BTreeMap;

use super::LabeledDag;

/// Maximum matching between "left" copies `u` and "right" copies `v` of the
/// vertices with `u → v` in the transitive closure. Augmenting paths are
/// tried from the lowest vertex id, neighbours in increasing order.
fn closure_matching(g: &LabeledDag) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let n = g.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.descendants(u).ones().collect()).collect();
    bipartite_matching(&adj, n)
}

/// Kuhn's algorithm. Returns (left → right, right → left).
pub(crate) fn bipartite_matching(adj: &[Vec<usize>], right: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let mut match_l = vec![None; adj.len()];
    let mut match_r: Vec<Option<usize>> = vec![None; right];
    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_l: &mut [Option<usize>],
        match_r: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if match_r[v].is_none_or(|w| augment(w, adj, seen, match_l, match_r)) {
                match_l[u] = Some(v);
                match_r[v] = Some(u);
                return true;
            }
        }
        false
    }
    for u in 0..adj.len() {
        let mut seen = vec![false; right];
        augment(u, adj, &mut seen, &mut match_l, &mut match_r);
    }
    (match_l, match_r)
}

/// Minimum chain partition. Chains are listed in order along the DAG and
/// sorted by their first vertex.
pub fn chain_partition(g: &LabeledDag) -> Vec<Vec<usize>> {
    if let Some(paths) = g.path_components() {
        return paths;
    }
    let (match_l, match_r) = closure_matching(g);
    let mut chains = Vec::new();
    for v in 0..g.len() {
        if match_r[v].is_none() {
            let mut chain = vec![v];
            let mut cur = v;
            while let Some(w) = match_l[cur] {
                chain.push(w);
                cur = w;
            }
            chains.push(chain);
        }
    }
    chains
}

/// Width and a maximum antichain (König's theorem on the closure matching).
pub fn width_and_antichain(g: &LabeledDag) -> (usize, Vec<usize>) {
    let n = g.len();
    let (match_l, match_r) = closure_matching(g);
    // Alternating reachability from unmatched left vertices.
    let mut left_z = vec![false; n];
    let mut right_z = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&u| match_l[u].is_none()).collect();
    for &u in &stack {
        left_z[u] = true;
    }
    while let Some(u) = stack.pop() {
        for v in g.descendants(u).ones() {
            if match_l[u] != Some(v) && !right_z[v] {
                right_z[v] = true;
                if let Some(w) = match_r[v] {
                    if !left_z[w] {
                        left_z[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
    }
    let antichain: Vec<usize> = (0..n).filter(|&v| left_z[v] && !right_z[v]).collect();
    let matched = match_l.iter().filter(|m| m.is_some()).count();
    debug_assert_eq!(antichain.len(), n - matched);
    (n - matched, antichain)
}

pub fn width(g: &LabeledDag) -> usize {
    width_and_antichain(g).0
}

/// Antichain with at least `n` vertices of every letter in `letters`, made
/// of single-letter vertices. On disjoint unions of paths this is a
/// b-matching between letter slots and paths; otherwise an exhaustive
/// search with a counting bound.
pub fn rich_antichain(g: &LabeledDag, n: usize, letters: &[char]) -> Option<Vec<usize>> {
    if n == 0 || letters.is_empty() {
        return Some(Vec::new());
    }
    match g.path_components() {
        Some(paths) => rich_antichain_paths(g, &paths, n, letters),
        None => rich_antichain_search(g, n, letters),
    }
}

fn rich_antichain_paths(g: &LabeledDag, paths: &[Vec<usize>], n: usize, letters: &[char]) -> Option<Vec<usize>> {
    // slot (letter i, copy j) may take any path holding letter i
    let mut first: Vec<BTreeMap<char, usize>> = Vec::with_capacity(paths.len());
    for p in paths {
        let mut m = BTreeMap::new();
        for &v in p {
            if let Some(c) = g.letter(v) {
                m.entry(c).or_insert(v);
            }
        }
        first.push(m);
    }
    let mut adj = Vec::with_capacity(n * letters.len());
    for &c in letters {
        let row: Vec<usize> = (0..paths.len()).filter(|&p| first[p].contains_key(&c)).collect();
        if row.len() < n {
            return None;
        }
        for _ in 0..n {
            adj.push(row.clone());
        }
    }
    let (match_l, _) = bipartite_matching(&adj, paths.len());
    let mut out = Vec::with_capacity(adj.len());
    for (slot, m) in match_l.iter().enumerate() {
        let p = (*m)?;
        out.push(first[p][&letters[slot / n]]);
    }
    out.sort_unstable();
    Some(out)
}

fn rich_antichain_search(g: &LabeledDag, n: usize, letters: &[char]) -> Option<Vec<usize>> {
    let cands: Vec<(usize, usize)> = (0..g.len())
        .filter_map(|v| {
            let c = g.letter(v)?;
            letters.iter().position(|&l| l == c).map(|i| (v, i))
        })
        .collect();
    let mut remaining = vec![0usize; letters.len()];
    for &(_, i) in &cands {
        remaining[i] += 1;
    }
    let mut need = vec![n; letters.len()];
    let mut chosen = Vec::new();
    fn go(
        g: &LabeledDag,
        cands: &[(usize, usize)],
        k: usize,
        need: &mut [usize],
        remaining: &mut [usize],
        chosen: &mut Vec<usize>,
    ) -> bool {
        if need.iter().all(|&x| x == 0) {
            return true;
        }
        if k == cands.len() || need.iter().zip(remaining.iter()).any(|(n, r)| n > r) {
            return false;
        }
        let (v, i) = cands[k];
        remaining[i] -= 1;
        if need[i] > 0 && chosen.iter().all(|&u| !g.comparable(u, v)) {
            need[i] -= 1;
            chosen.push(v);
            if go(g, cands, k + 1, need, remaining, chosen) {
                return true;
            }
            chosen.pop();
            need[i] += 1;
        }
        let found = go(g, cands, k + 1, need, remaining, chosen);
        remaining[i] += 1;
        found
    }
    go(g, &cands, 0, &mut need, &mut remaining, &mut chosen).then_some(chosen)
}

#[cfg(test)]
pub(crate) fn rich_antichain_exhaustive(g: &LabeledDag, n: usize, letters: &[char]) -> Option<Vec<usize>> {
    rich_antichain_search(g, n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dag::ShuffleInstance;
    use crate::lang::Alphabet;

    #[test]
    fn width_examples() {
        let a = Alphabet::new("abc".chars()).unwrap();
        let g = LabeledDag::from_letters(&a, "abbc", &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let (w, anti) = width_and_antichain(&g);
        assert_eq!(w, 2);
        assert_eq!(anti, vec![1, 2]);
        assert_eq!(chain_partition(&g).len(), 2);
        let chain = LabeledDag::from_letters(&a, "abc", &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(width(&chain), 1);
    }

    #[test]
    fn rich_on_strings() {
        let s = ShuffleInstance::from_strs(&["ab", "ab", "ba", "b"]).unwrap();
        let c = rich_antichain(s.dag(), 2, &['a', 'b']).unwrap();
        assert_eq!(c.len(), 4);
        assert!(s.dag().is_antichain(&c));
        assert!(rich_antichain(s.dag(), 3, &['a', 'b']).is_none());
        let c = rich_antichain(s.dag(), 3, &['a']).unwrap();
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn matching_agrees_with_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let k = rng.gen_range(1..6);
            let strings: Vec<String> = (0..k)
                .map(|_| (0..rng.gen_range(1..4)).map(|_| if rng.gen_bool(0.5) { 'a' } else { 'b' }).collect())
                .collect();
            let s = ShuffleInstance::new(Alphabet::new("ab".chars()).unwrap(), strings.clone()).unwrap();
            for n in 1..3 {
                for letters in [&['a'][..], &['b'], &['a', 'b']] {
                    let fast = rich_antichain(s.dag(), n, letters);
                    let slow = rich_antichain_exhaustive(s.dag(), n, letters);
                    assert_eq!(fast.is_some(), slow.is_some(), "{strings:?} {n} {letters:?}");
                    if let Some(c) = fast {
                        assert!(s.dag().is_antichain(&c));
                    }
                }
            }
        }
    }
}
