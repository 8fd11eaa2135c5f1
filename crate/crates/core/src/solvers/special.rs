//! Solvers for specific languages over `{a, b}`.

use fixedbitset::FixedBitSet;

use super::{not_applicable, require_letters, solve_bounded_width, solve_brute, SolveError, SolveResult};
use crate::caps::Caps;
use crate::dag::{chain_partition, rich_antichain, width_and_antichain, Instance, LabeledDag, ShuffleInstance};
use crate::lang::{Alphabet, Dfa};

fn require_ab(g: &LabeledDag, solver: &'static str) -> Result<(), SolveError> {
    require_letters(g, solver)?;
    if let Some(&c) = g.alphabet().symbols().iter().find(|&&c| c != 'a' && c != 'b') {
        if g.labels().iter().any(|l| l.contains(c)) {
            return Err(not_applicable(solver, "labels must be a or b"));
        }
    }
    Ok(())
}

fn language(g: &LabeledDag, regex: &str) -> Dfa {
    let alphabet = g.alphabet().union(&Alphabet::new("ab".chars()).expect("valid"));
    Dfa::parse_regex(regex, &alphabet).expect("fixed regex")
}

/// Topological sort in which `block` appears contiguously and in the given
/// order. `block` is an antichain, or a chain with nothing in between.
fn contiguous_order(g: &LabeledDag, block: &[usize]) -> Vec<usize> {
    let n = g.len();
    let mut before = FixedBitSet::with_capacity(n);
    for &v in block {
        before.union_with(g.ancestors(v));
    }
    for &v in block {
        before.set(v, false);
    }
    let mut after = FixedBitSet::with_capacity(n);
    after.insert_range(..);
    after.difference_with(&before);
    for &v in block {
        after.set(v, false);
    }
    let mut order = g.topo_order_of(&before);
    order.extend_from_slice(block);
    order.extend(g.topo_order_of(&after));
    order
}

fn with_letter(g: &LabeledDag, c: char) -> Vec<usize> {
    (0..g.len()).filter(|&v| g.letter(v) == Some(c)).collect()
}

/// `(ab)* + A*aaA*`.
pub fn solve_ab_or_aa(g: &LabeledDag) -> Result<SolveResult, SolveError> {
    const TAG: &str = "ab-or-aa";
    require_ab(g, TAG)?;
    let k = language(g, "(ab)*+(a+b)*aa(a+b)*");
    let a_vertices = with_letter(g, 'a');
    let b_vertices = with_letter(g, 'b');
    for (i, &u) in a_vertices.iter().enumerate() {
        for &v in &a_vertices[i + 1..] {
            if !g.comparable(u, v) {
                return SolveResult::yes(g, contiguous_order(g, &[u, v]), &k, TAG);
            }
        }
    }
    for &u in &a_vertices {
        for &v in &a_vertices {
            if g.reaches(u, v) && !g.descendants(u).ones().any(|w| g.reaches(w, v)) {
                return SolveResult::yes(g, contiguous_order(g, &[u, v]), &k, TAG);
            }
        }
    }
    // No aa factor is possible: the sort must spell (ab)^m.
    let m = a_vertices.len();
    if b_vertices.len() != m {
        return Ok(SolveResult::no(TAG));
    }
    if m == 0 {
        return SolveResult::yes(g, Vec::new(), &k, TAG);
    }
    let mut chain = a_vertices.clone();
    chain.sort_by_key(|&v| g.ancestors(v).count_ones(..));
    let mut used = vec![false; g.len()];
    let mut slots = Vec::with_capacity(m);
    for w in chain.windows(2) {
        let between: Vec<usize> = b_vertices
            .iter()
            .copied()
            .filter(|&b| g.reaches(w[0], b) && g.reaches(b, w[1]))
            .collect();
        if between.len() != 1 {
            return Ok(SolveResult::no(TAG));
        }
        used[between[0]] = true;
        slots.push(between[0]);
    }
    let last: Vec<usize> = b_vertices.iter().copied().filter(|&b| !used[b]).collect();
    if last.len() != 1 || a_vertices.iter().any(|&a| g.reaches(last[0], a)) {
        return Ok(SolveResult::no(TAG));
    }
    slots.push(last[0]);
    let order = chain.iter().zip(&slots).flat_map(|(&a, &b)| [a, b]).collect();
    SolveResult::yes(g, order, &k, TAG)
}

pub(crate) fn power_regex(i: usize) -> String {
    let eps = |w: String| if w.is_empty() { "ε".to_string() } else { w };
    format!("(a+b)*({}+{})(a+b)*", eps("a".repeat(i)), eps("b".repeat(i)))
}

/// DFA of `K′ + A*(a^i + b^i)A*` over the alphabet of `kprime`.
pub fn kprime_or_power_dfa(kprime: &Dfa, i: usize) -> Result<Dfa, SolveError> {
    let power = Dfa::parse_regex(&power_regex(i), kprime.alphabet())?;
    Ok(kprime.union(&power)?)
}

/// `K′ + A*(a^i + b^i)A*`: wide graphs always contain `i` incomparable
/// vertices with the same letter; narrow ones go to the chain program.
pub fn solve_kprime_or_power(g: &LabeledDag, kprime: &Dfa, i: usize, caps: &Caps) -> Result<SolveResult, SolveError> {
    const TAG: &str = "kprime-or-power";
    require_ab(g, TAG)?;
    if !g.alphabet().is_subset_of(kprime.alphabet()) {
        return Err(not_applicable(TAG, "K′ must be over the instance alphabet"));
    }
    let k = kprime_or_power_dfa(kprime, i)?;
    let (w, antichain) = width_and_antichain(g);
    if w >= 2 * i {
        for c in ['a', 'b'] {
            let same: Vec<usize> = antichain.iter().copied().filter(|&v| g.letter(v) == Some(c)).collect();
            if same.len() >= i {
                return SolveResult::yes(g, contiguous_order(g, &same[..i]), &k, TAG);
            }
        }
        unreachable!("an antichain of size 2i over two letters has i equal letters");
    }
    Ok(solve_bounded_width(g, &k, &chain_partition(g), k.num_states(), caps)?.with_solver(TAG))
}

fn map_back(order: Vec<usize>, sub: &ShuffleInstance, origin: &[Vec<usize>]) -> Vec<usize> {
    order
        .into_iter()
        .map(|v| {
            let (s, p) = sub.locate(v);
            origin[s][p]
        })
        .collect()
}

fn string_vertices(inst: &ShuffleInstance, s: usize) -> Vec<usize> {
    (0..inst.strings()[s].chars().count()).map(|p| inst.vertex(s, p)).collect()
}

/// Solve a few strings with the chain program and translate the witness;
/// `origin[s][p]` is the original vertex of position `p` in sub-string `s`.
fn solve_small(
    inst: &ShuffleInstance,
    strings: Vec<String>,
    origin: Vec<Vec<usize>>,
    k: &Dfa,
    caps: &Caps,
    tag: &str,
    prefix: Vec<usize>,
) -> Result<SolveResult, SolveError> {
    let sub = ShuffleInstance::new(inst.alphabet().clone(), strings)?;
    let r = solve_bounded_width(sub.dag(), k, &chain_partition(sub.dag()), k.num_states(), caps)?;
    match r.witness {
        Some(order) => {
            let mut full = prefix;
            full.extend(map_back(order, &sub, &origin));
            SolveResult::yes(inst.dag(), full, k, tag)
        }
        None => Ok(SolveResult::no(tag)),
    }
}

fn a_blocks(s: &str) -> Vec<(usize, usize)> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == 'a' {
            let start = i;
            while i < chars.len() && chars[i] == 'a' {
                i += 1;
            }
            out.push((start, i - start));
        } else {
            i += 1;
        }
    }
    out
}

/// Number of odd a-blocks: the least number of a's the string can be
/// reduced to by deleting aa factors.
fn alternation(s: &str) -> usize {
    a_blocks(s).iter().filter(|b| b.1 % 2 == 1).count()
}

fn a_weight(s: &str) -> usize {
    s.chars().filter(|&c| c == 'a').count()
}

/// `(aa+b)*` on string tuples.
pub fn solve_aab(inst: &ShuffleInstance, caps: &Caps) -> Result<SolveResult, SolveError> {
    const TAG: &str = "aab";
    let g = inst.dag();
    require_ab(g, TAG)?;
    let k = language(g, "(aa+b)*");
    let strings = inst.strings();
    let total: usize = strings.iter().map(|s| a_weight(s)).sum();
    if total % 2 == 1 {
        return Ok(SolveResult::no(TAG));
    }
    let with_a: Vec<usize> = (0..strings.len()).filter(|&s| a_weight(&strings[s]) > 0).collect();
    if with_a.len() <= 2 {
        let prefix: Vec<usize> = (0..strings.len())
            .filter(|s| !with_a.contains(s))
            .flat_map(|s| string_vertices(inst, s))
            .collect();
        return solve_small(
            inst,
            with_a.iter().map(|&s| strings[s].clone()).collect(),
            with_a.iter().map(|&s| string_vertices(inst, s)).collect(),
            &k,
            caps,
            TAG,
            prefix,
        );
    }
    for &s in &with_a {
        if alternation(&strings[s]) > total - a_weight(&strings[s]) {
            return Ok(SolveResult::no(TAG));
        }
    }
    if let Some(order) = aab_greedy(inst, &with_a) {
        if let Ok(r) = SolveResult::yes(g, order, &k, TAG) {
            return Ok(r);
        }
    }
    // The construction should not fail; fall back to search rather than
    // report an unverified answer.
    let r = solve_brute(&Instance::Strings(inst.clone()), &k, caps)?;
    if !r.decision {
        return Err(SolveError::InvalidWitness(TAG.into()));
    }
    Ok(r.with_solver(TAG))
}

/// Reduce weights by deleting aa pairs, then repeatedly take a b if one is
/// available and otherwise one a from each of the two heaviest strings.
/// Deleted pairs are emitted as soon as their string reaches them.
fn aab_greedy(inst: &ShuffleInstance, with_a: &[usize]) -> Option<Vec<usize>> {
    let strings = inst.strings();
    let chars: Vec<Vec<char>> = strings.iter().map(|s| s.chars().collect()).collect();
    let top = *with_a.iter().max_by_key(|&&s| (alternation(&strings[s]), std::cmp::Reverse(s)))?;
    let n = alternation(&strings[top]);
    let mut removed: Vec<Vec<bool>> = chars.iter().map(|c| vec![false; c.len()]).collect();
    for &s in with_a {
        let w = a_weight(&strings[s]);
        let target = if s == top {
            n
        } else if w <= n + 1 {
            w
        } else {
            n + (w - n) % 2
        };
        let mut excess = w - target;
        for (start, len) in a_blocks(&strings[s]) {
            let mut keep = len;
            let mut at = start;
            while excess >= 2 && keep >= 2 {
                removed[s][at] = true;
                removed[s][at + 1] = true;
                at += 2;
                keep -= 2;
                excess -= 2;
            }
        }
        if excess != 0 {
            return None;
        }
    }
    let mut pos = vec![0usize; chars.len()];
    let mut kept_a: Vec<usize> = (0..chars.len())
        .map(|s| (0..chars[s].len()).filter(|&p| chars[s][p] == 'a' && !removed[s][p]).count())
        .collect();
    let mut order = Vec::with_capacity(inst.total_len());
    let flush = |s: usize, pos: &mut Vec<usize>, order: &mut Vec<usize>| {
        while pos[s] < chars[s].len() && removed[s][pos[s]] {
            order.push(inst.vertex(s, pos[s]));
            pos[s] += 1;
        }
    };
    for s in 0..chars.len() {
        flush(s, &mut pos, &mut order);
    }
    while order.len() < inst.total_len() {
        if let Some(s) = (0..chars.len()).find(|&s| pos[s] < chars[s].len() && chars[s][pos[s]] == 'b') {
            order.push(inst.vertex(s, pos[s]));
            pos[s] += 1;
            flush(s, &mut pos, &mut order);
            continue;
        }
        let mut heavy: Vec<usize> = (0..chars.len()).filter(|&s| kept_a[s] > 0).collect();
        heavy.sort_by_key(|&s| (std::cmp::Reverse(kept_a[s]), s));
        if heavy.len() < 2 {
            return None;
        }
        for &s in &heavy[..2] {
            order.push(inst.vertex(s, pos[s]));
            pos[s] += 1;
            kept_a[s] -= 1;
            flush(s, &mut pos, &mut order);
        }
    }
    Some(order)
}

/// `(a⁺b⁺a⁺b⁺)*` on string tuples.
pub fn solve_apbp(inst: &ShuffleInstance, caps: &Caps) -> Result<SolveResult, SolveError> {
    const TAG: &str = "apbp";
    let g = inst.dag();
    require_ab(g, TAG)?;
    let k = language(g, "(aa*bb*aa*bb*)*");
    if g.is_empty() {
        return SolveResult::yes(g, Vec::new(), &k, TAG);
    }
    let strings = inst.strings();
    let starts_a: Vec<usize> = (0..strings.len()).filter(|&s| strings[s].starts_with('a')).collect();
    let ends_b: Vec<usize> = (0..strings.len()).filter(|&s| strings[s].ends_with('b')).collect();
    if starts_a.is_empty() || ends_b.is_empty() {
        return Ok(SolveResult::no(TAG));
    }
    if rich_antichain(g, 3, &['a', 'b']).is_some() {
        if let Some(order) = apbp_rich(inst, &starts_a, &ends_b, &k) {
            return SolveResult::yes(g, order, &k, TAG);
        }
        let r = solve_brute(&Instance::Strings(inst.clone()), &k, caps)?;
        if !r.decision {
            return Err(SolveError::InvalidWitness(TAG.into()));
        }
        return Ok(r.with_solver(TAG));
    }
    let nonempty: Vec<usize> = (0..strings.len()).filter(|&s| !strings[s].is_empty()).collect();
    let holders = |c: char| -> Vec<usize> { nonempty.iter().copied().filter(|&s| strings[s].contains(c)).collect() };
    let (rare, other) = if holders('a').len() <= 2 {
        ('a', 'b')
    } else if holders('b').len() <= 2 {
        ('b', 'a')
    } else {
        // fewer than six non-empty strings: the chain program applies as is
        return solve_small(
            inst,
            nonempty.iter().map(|&s| strings[s].clone()).collect(),
            nonempty.iter().map(|&s| string_vertices(inst, s)).collect(),
            &k,
            caps,
            TAG,
            Vec::new(),
        );
    };
    let keep = holders(rare);
    let single: Vec<usize> = nonempty.iter().copied().filter(|s| !keep.contains(s)).collect();
    debug_assert!(single.iter().all(|&s| strings[s].chars().all(|c| c == other)));
    let mut sub_strings: Vec<String> = keep.iter().map(|&s| strings[s].clone()).collect();
    let mut origin: Vec<Vec<usize>> = keep.iter().map(|&s| string_vertices(inst, s)).collect();
    if !single.is_empty() {
        sub_strings.push(single.iter().map(|&s| strings[s].as_str()).collect());
        origin.push(single.iter().flat_map(|&s| string_vertices(inst, s)).collect());
    }
    solve_small(inst, sub_strings, origin, &k, caps, TAG, Vec::new())
}

/// Start with an a that begins a string, end with a b that ends a string,
/// and place two a's and two b's from four other strings in the middle in
/// whichever of the orders aabb or abab fixes the block count.
fn apbp_rich(inst: &ShuffleInstance, starts_a: &[usize], ends_b: &[usize], k: &Dfa) -> Option<Vec<usize>> {
    let strings = inst.strings();
    for &s1 in starts_a {
        for &s2 in ends_b {
            let others: Vec<usize> = (0..strings.len()).filter(|&s| s != s1 && s != s2).collect();
            let sub = inst.sub_instance(&others);
            let Some(c) = rich_antichain(sub.dag(), 2, &['a', 'b']) else {
                continue;
            };
            let chosen: Vec<(usize, usize)> = c
                .iter()
                .map(|&v| {
                    let (s, p) = sub.locate(v);
                    (others[s], p)
                })
                .collect();
            let first = inst.vertex(s1, 0);
            let last = inst.vertex(s2, strings[s2].chars().count() - 1);
            let mut before = Vec::new();
            let mut after = Vec::new();
            for s in 0..strings.len() {
                let len = strings[s].chars().count();
                let cut = chosen.iter().find(|c| c.0 == s).map(|c| c.1);
                for p in 0..len {
                    let v = inst.vertex(s, p);
                    if v == first || v == last {
                        continue;
                    }
                    match cut {
                        Some(q) if p == q => {}
                        Some(q) if p > q => after.push(v),
                        _ => before.push(v),
                    }
                }
            }
            let vertex = |c: char| -> Vec<usize> {
                chosen
                    .iter()
                    .filter(|x| strings[x.0].chars().nth(x.1) == Some(c))
                    .map(|x| inst.vertex(x.0, x.1))
                    .collect()
            };
            let (a, b) = (vertex('a'), vertex('b'));
            for middle in [[a[0], a[1], b[0], b[1]], [a[0], b[0], a[1], b[1]]] {
                let mut order = vec![first];
                order.extend(&before);
                order.extend(middle);
                order.extend(&after);
                order.push(last);
                if inst.dag().is_topological_sort(&order) && k.accepts(&inst.dag().spell(&order)).unwrap_or(false) {
                    return Some(order);
                }
            }
        }
    }
    None
}

/// `(ab)*(ε + bA*)`: greedy. Take a b whenever one is available (the rest
/// is then free); otherwise take an a that makes a b available.
pub fn solve_ab_star_btail(g: &LabeledDag) -> Result<SolveResult, SolveError> {
    const TAG: &str = "ab-star-btail";
    require_ab(g, TAG)?;
    let k = language(g, "(ab)*(ε+b(a+b)*)");
    let n = g.len();
    let mut indeg: Vec<usize> = (0..n).map(|v| g.pred(v).len()).collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let take = |v: usize, indeg: &mut Vec<usize>, placed: &mut Vec<bool>, order: &mut Vec<usize>| {
        placed[v] = true;
        order.push(v);
        for &w in g.succ(v) {
            indeg[w] -= 1;
        }
    };
    let available = |c: char, indeg: &Vec<usize>, placed: &Vec<bool>| {
        (0..n).find(|&v| !placed[v] && indeg[v] == 0 && g.letter(v) == Some(c))
    };
    loop {
        if let Some(b) = available('b', &indeg, &placed) {
            take(b, &mut indeg, &mut placed, &mut order);
            let rest: FixedBitSet = (0..n).filter(|&v| !placed[v]).collect();
            order.extend(g.topo_order_of(&rest));
            return SolveResult::yes(g, order, &k, TAG);
        }
        if order.len() == n {
            return SolveResult::yes(g, order, &k, TAG);
        }
        let profitable = (0..n).find(|&v| {
            !placed[v]
                && indeg[v] == 0
                && g.letter(v) == Some('a')
                && g.succ(v).iter().any(|&w| indeg[w] == 1 && g.letter(w) == Some('b'))
        });
        let Some(a) = profitable else {
            return Ok(SolveResult::no(TAG));
        };
        take(a, &mut indeg, &mut placed, &mut order);
        let b = available('b', &indeg, &placed).expect("a profitable a frees a b");
        take(b, &mut indeg, &mut placed, &mut order);
    }
}
