use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::csh::{check_surjective, check_symbols, finish, solve_group_csh, string_vertices, GroupConfig};
use super::presentation::GroupJson;
use super::segdp::{SegSpace, Slice};
use super::GroupPresentation;
use crate::caps::Caps;
use crate::dag::{rare_frequent, ShuffleInstance};
use crate::lang::{Alphabet, Dfa};
use crate::solvers::{SolveError, SolveResult};

/// `K_0 c_1 K_1 ⋯ c_m K_m` where every `K_j` is a group language over its
/// own alphabet and the `c_j` are letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistrictMonomial {
    segments: Vec<GroupPresentation>,
    pivots: Vec<char>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DistrictJson {
    pub segments: Vec<GroupJson>,
    #[serde(default)]
    pub pivots: String,
}

impl DistrictMonomial {
    pub fn new(segments: Vec<GroupPresentation>, pivots: Vec<char>) -> Result<DistrictMonomial, SolveError> {
        if segments.len() != pivots.len() + 1 {
            return Err(SolveError::Spec("need exactly one more segment than pivots".into()));
        }
        Ok(DistrictMonomial { segments, pivots })
    }

    pub fn from_json(j: &DistrictJson) -> Result<DistrictMonomial, SolveError> {
        let segments = j.segments.iter().map(GroupPresentation::from_json).collect::<Result<_, _>>()?;
        DistrictMonomial::new(segments, j.pivots.chars().collect())
    }

    pub fn to_json(&self) -> DistrictJson {
        DistrictJson {
            segments: self.segments.iter().map(GroupPresentation::to_json).collect(),
            pivots: self.pivots.iter().collect(),
        }
    }

    pub fn segments(&self) -> &[GroupPresentation] {
        &self.segments
    }

    pub fn pivots(&self) -> &[char] {
        &self.pivots
    }

    pub fn letters(&self) -> BTreeSet<char> {
        let mut out: BTreeSet<char> = self.pivots.iter().copied().collect();
        for s in &self.segments {
            out.extend(s.alphabet().symbols());
        }
        out
    }

    /// Subset construction over `(segment, element)` pairs.
    pub fn to_dfa(&self, alphabet: &Alphabet) -> Dfa {
        type Set = BTreeSet<(usize, usize)>;
        let accepting = |s: &Set| {
            s.iter()
                .any(|&(j, h)| j == self.pivots.len() && self.segments[j].is_accepting(h))
        };
        let start: Set = [(0, self.segments[0].identity())].into();
        let mut index: HashMap<Set, usize> = HashMap::from([(start.clone(), 0)]);
        let mut states = vec![start.clone()];
        let mut delta: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            let mut row = Vec::with_capacity(alphabet.len());
            for &c in alphabet.symbols() {
                let mut next = Set::new();
                for &(j, h) in &s {
                    if let Some(g) = self.segments[j].mu_of(c) {
                        next.insert((j, self.segments[j].mul(h, g)));
                    }
                    if j < self.pivots.len() && self.pivots[j] == c && self.segments[j].is_accepting(h) {
                        next.insert((j + 1, self.segments[j + 1].identity()));
                    }
                }
                let id = *index.entry(next.clone()).or_insert_with(|| {
                    states.push(next.clone());
                    queue.push_back(next);
                    states.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
        }
        let finals = states.iter().map(accepting).collect();
        Dfa::from_parts(alphabet.clone(), delta, 0, finals).minimize()
    }
}

/// Per-segment letter counts of the frequent strings, with the number of
/// strings holding each letter (capped).
type Aggregate = Vec<u32>;

struct Layer {
    states: Vec<(Aggregate, usize, Vec<usize>)>,
}

/// Shuffle membership for a district monomial. With no pivots this is the
/// group solver. Otherwise the frequent strings are cut into one slice per
/// segment; the slicings are enumerated up to their aggregate counts, and
/// for each aggregate the rare strings are searched with pivots moving the
/// search to the next segment.
pub fn solve_district_monomial(
    inst: &ShuffleInstance,
    dm: &DistrictMonomial,
    cfg: &GroupConfig,
    caps: &Caps,
) -> Result<SolveResult, SolveError> {
    const TAG: &str = "district";
    if dm.pivots.is_empty() {
        return Ok(solve_group_csh(inst, &dm.segments[0], cfg, caps)?.with_solver(TAG));
    }
    let letters = dm.letters();
    check_symbols(inst, |c| letters.contains(&c))?;
    for s in &dm.segments {
        check_surjective(s)?;
    }
    let threshold = dm.segments.iter().map(|s| cfg.threshold(s)).max().unwrap_or(1);
    let rf = rare_frequent(inst, threshold);
    let dfa = dm.to_dfa(inst.alphabet());
    let letter = |v: usize| inst.dag().letter(v).expect("single letters");
    let rare: Vec<Vec<usize>> = rf.rare_strings.iter().map(|&s| string_vertices(inst, s)).collect();
    let budget = dm.segments.iter().map(|s| cfg.budget(s)).max().unwrap_or(1);

    let layout = AggregateLayout::new(dm, threshold);
    let layers = enumerate_slicings(inst, &rf.frequent_strings, dm, &layout, caps)?;
    let last = layers.last().expect("at least the empty layer");
    let mut finals: Vec<usize> = (0..last.states.len()).collect();
    finals.sort_by(|&x, &y| last.states[x].0.cmp(&last.states[y].0));
    for fi in finals {
        if !layout.rich_enough(&last.states[fi].0) {
            continue;
        }
        let cuts = backtrack(&layers, fi);
        let slices = build_slices(inst, &rf.frequent_strings, &cuts, dm);
        let space = SegSpace {
            rare: rare.clone(),
            letter: &letter,
            segments: &dm.segments,
            pivots: &dm.pivots,
            slices: &slices,
            max_inserts: budget,
        };
        if let Some(path) = space.run(caps.search_states)? {
            return finish(inst, &dfa, &path, &slices, caps, TAG);
        }
    }
    Ok(SolveResult {
        complete: rf.frequent_strings.is_empty(),
        ..SolveResult::no(TAG)
    })
}

/// Where each (segment, letter) pair lives inside an aggregate vector.
struct AggregateLayout {
    offsets: Vec<usize>,
    letters: Vec<Vec<char>>,
    threshold: usize,
}

impl AggregateLayout {
    fn new(dm: &DistrictMonomial, threshold: usize) -> AggregateLayout {
        let letters: Vec<Vec<char>> = dm.segments.iter().map(|s| s.alphabet().symbols().to_vec()).collect();
        let mut offsets = Vec::with_capacity(letters.len() + 1);
        let mut at = 0;
        for l in &letters {
            offsets.push(at);
            at += 2 * l.len();
        }
        offsets.push(at);
        AggregateLayout {
            offsets,
            letters,
            threshold,
        }
    }

    fn holder_cap(&self, j: usize) -> u32 {
        (self.threshold * self.letters[j].len()).min(u32::MAX as usize) as u32
    }

    fn add(&self, agg: &mut Aggregate, j: usize, slice: &str) {
        let base = self.offsets[j];
        let n = self.letters[j].len();
        for (i, &c) in self.letters[j].iter().enumerate() {
            let count = slice.chars().filter(|&x| x == c).count() as u32;
            if count > 0 {
                agg[base + i] += count;
                agg[base + n + i] = (agg[base + n + i] + 1).min(self.holder_cap(j));
            }
        }
    }

    /// Every letter present in a slice occurs in enough strings to carry a
    /// rich antichain.
    fn rich_enough(&self, agg: &Aggregate) -> bool {
        (0..self.letters.len()).all(|j| {
            let base = self.offsets[j];
            let n = self.letters[j].len();
            let present = (0..n).filter(|&i| agg[base + i] > 0).count();
            let need = (self.threshold * present).min(self.holder_cap(j) as usize) as u32;
            (0..n).all(|i| agg[base + i] == 0 || agg[base + n + i] >= need)
        })
    }
}

/// Cut positions `0 = c_0 ≤ c_1 ≤ ⋯ ≤ c_{m+1} = len` such that slice `j`
/// uses only letters of segment `j`.
fn slicings(s: &[char], dm: &DistrictMonomial) -> Vec<Vec<usize>> {
    let m1 = dm.segments.len();
    let mut out = Vec::new();
    let mut cur = vec![0];
    fn go(s: &[char], dm: &DistrictMonomial, m1: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let j = cur.len() - 1;
        let from = *cur.last().expect("start cut");
        if j == m1 - 1 {
            if s[from..].iter().all(|&c| dm.segments[j].alphabet().contains(c)) {
                let mut full = cur.clone();
                full.push(s.len());
                out.push(full);
            }
            return;
        }
        let mut to = from;
        loop {
            cur.push(to);
            go(s, dm, m1, cur, out);
            cur.pop();
            if to == s.len() || !dm.segments[j].alphabet().contains(s[to]) {
                break;
            }
            to += 1;
        }
    }
    go(s, dm, m1, &mut cur, &mut out);
    out
}

fn enumerate_slicings(
    inst: &ShuffleInstance,
    frequent: &[usize],
    dm: &DistrictMonomial,
    layout: &AggregateLayout,
    caps: &Caps,
) -> Result<Vec<Layer>, SolveError> {
    let size = *layout.offsets.last().expect("offsets");
    let mut layers = vec![Layer {
        states: vec![(vec![0; size], 0, Vec::new())],
    }];
    let mut total = 1usize;
    for &s in frequent {
        let chars: Vec<char> = inst.strings()[s].chars().collect();
        let options = slicings(&chars, dm);
        let prev = layers.last().expect("layer");
        let mut seen: BTreeMap<Aggregate, usize> = BTreeMap::new();
        let mut next = Layer { states: Vec::new() };
        for (pi, (agg, _, _)) in prev.states.iter().enumerate() {
            for cuts in &options {
                let mut a = agg.clone();
                for j in 0..dm.segments.len() {
                    let slice: String = chars[cuts[j]..cuts[j + 1]].iter().collect();
                    layout.add(&mut a, j, &slice);
                }
                if !seen.contains_key(&a) {
                    seen.insert(a.clone(), next.states.len());
                    next.states.push((a, pi, cuts.clone()));
                    total += 1;
                    if total > caps.aggregates {
                        return Err(SolveError::CapExceeded {
                            what: "frequent slicing aggregates",
                            limit: caps.aggregates,
                        });
                    }
                }
            }
        }
        layers.push(next);
    }
    Ok(layers)
}

/// Cuts of every frequent string leading to state `at` of the last layer.
fn backtrack(layers: &[Layer], mut at: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(layers.len() - 1);
    for layer in layers[1..].iter().rev() {
        let (_, prev, cuts) = &layer.states[at];
        out.push(cuts.clone());
        at = *prev;
    }
    out.reverse();
    out
}

fn build_slices(inst: &ShuffleInstance, frequent: &[usize], cuts: &[Vec<usize>], dm: &DistrictMonomial) -> Vec<Slice> {
    (0..dm.segments.len())
        .map(|j| {
            let mut strings = Vec::new();
            let mut origin = Vec::new();
            for (&s, c) in frequent.iter().zip(cuts) {
                if c[j] == c[j + 1] {
                    continue;
                }
                strings.push(inst.strings()[s].chars().skip(c[j]).take(c[j + 1] - c[j]).collect::<String>());
                origin.extend((c[j]..c[j + 1]).map(|p| inst.vertex(s, p)));
            }
            let sub = ShuffleInstance::new(inst.alphabet().clone(), strings).expect("slices of valid strings");
            Slice::new(sub.dag().clone(), origin, &dm.segments[j])
        })
        .collect()
}
