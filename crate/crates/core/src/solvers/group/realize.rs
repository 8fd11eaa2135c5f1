use fixedbitset::FixedBitSet;

use super::reach::{gamma_over_subalphabets, omega_estimate, Saturated};
use super::GroupPresentation;
use crate::dag::{rich_antichain, LabeledDag};
use crate::solvers::SolveError;

/// Split a topological sort of `g` into `targets.len()` consecutive
/// segments whose images are the targets.
///
/// Needs an antichain holding `ω + (k-1)·γ` vertices of every letter that
/// occurs in `g`. The antichain is extended to a maximal one `C`, so the
/// graph splits into the vertices before `C`, `C` itself and the vertices
/// after `C`. Segments `k, k-1, …, 2` each take a shortest word from `C`;
/// the first segment arranges whatever is left of `C`.
pub fn realize_segmented(
    g: &LabeledDag,
    gp: &GroupPresentation,
    targets: &[usize],
) -> Result<Vec<Vec<usize>>, SolveError> {
    let fail = |m: &str| SolveError::Precondition(format!("segmented realization: {m}"));
    let k = targets.len();
    if k == 0 {
        return if g.is_empty() { Ok(Vec::new()) } else { Err(fail("no segment for a nonempty graph")) };
    }
    if !g.single_letter_labels() {
        return Err(fail("labels must be single letters"));
    }
    let mut present: Vec<char> = (0..g.len()).filter_map(|v| g.letter(v)).collect();
    present.sort_unstable();
    present.dedup();
    if let Some(&c) = present.iter().find(|&&c| !gp.alphabet().contains(c)) {
        return Err(fail(&format!("letter '{c}' outside the group alphabet")));
    }
    let gp = gp.restrict(&present);
    let richness = omega_estimate(&gp) + (k - 1) * gamma_over_subalphabets(&gp);
    let mut antichain = rich_antichain(g, richness, &present).ok_or_else(|| fail("no rich antichain"))?;
    for v in 0..g.len() {
        if antichain.iter().all(|&u| u != v && !g.comparable(u, v)) {
            antichain.push(v);
        }
    }
    let mut in_c = FixedBitSet::with_capacity(g.len());
    let mut before = FixedBitSet::with_capacity(g.len());
    for &c in &antichain {
        in_c.insert(c);
        before.union_with(g.ancestors(c));
    }
    before.difference_with(&in_c);
    let after: FixedBitSet = (0..g.len()).filter(|&v| !in_c[v] && !before[v]).collect();
    let sigma_minus = g.topo_order_of(&before);
    let sigma_plus = g.topo_order_of(&after);
    let image = |vs: &[usize]| gp.eval(&g.spell(vs)).expect("letters checked");

    // pool[a] = unused antichain vertices labeled with symbol a
    let mut pool: Vec<Vec<usize>> = vec![Vec::new(); gp.alphabet().len()];
    antichain.sort_unstable();
    for &c in antichain.iter().rev() {
        let a = gp.alphabet().index(g.letter(c).expect("single letters")).expect("present");
        pool[a].push(c);
    }
    let shortest = gp.shortest_words();
    let mut segments = vec![Vec::new(); k];
    for j in (1..k).rev() {
        let mut goal = targets[j];
        if j == k - 1 {
            goal = gp.mul(goal, gp.inv(image(&sigma_plus)));
        }
        let word = shortest[goal].as_ref().ok_or_else(|| fail("target outside the generated subgroup"))?;
        for &a in word {
            segments[j].push(pool[a].pop().ok_or_else(|| fail("antichain exhausted"))?);
        }
        if j == k - 1 {
            segments[j].extend_from_slice(&sigma_plus);
        }
    }
    let mut goal = gp.mul(gp.inv(image(&sigma_minus)), targets[0]);
    if k == 1 {
        goal = gp.mul(goal, gp.inv(image(&sigma_plus)));
    }
    let counts: Vec<usize> = pool.iter().map(Vec::len).collect();
    let mut sat = Saturated::new(&gp, &counts);
    let mut word = sat.word(goal).ok_or_else(|| fail("Parikh condition fails"))?;
    for a in 0..counts.len() {
        word.extend(std::iter::repeat(a).take(counts[a] - sat.reduced[a]));
    }
    segments[0] = sigma_minus;
    for a in word {
        segments[0].push(pool[a].pop().expect("counts match"));
    }
    if k == 1 {
        segments[0].extend_from_slice(&sigma_plus);
    }
    debug_assert!(segments.iter().zip(targets).all(|(s, &t)| image(s) == t));
    Ok(segments)
}
