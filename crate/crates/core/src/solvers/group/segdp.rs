//! Search over the rare strings with group elements inserted for the
//! frequent part, split into segments separated by pivot letters.

use fixedbitset::FixedBitSet;

use super::reach::reachable_set;
use super::realize::realize_segmented;
use super::GroupPresentation;
use crate::dag::{LabeledDag, ParikhVector};
use crate::solvers::search::{find_path, Space};
use crate::solvers::SolveError;

/// The frequent material assigned to one segment.
pub(crate) struct Slice {
    pub dag: LabeledDag,
    /// Vertex of the full instance for every vertex of `dag`.
    pub origin: Vec<usize>,
    /// Segment group restricted to the letters present in `dag`.
    pub gp: GroupPresentation,
    /// Products the frequent material can realize in some order.
    pub reach: FixedBitSet,
    /// Non-identity elements spelled by the letters of `dag`.
    pub inserts: Vec<usize>,
}

impl Slice {
    pub fn new(dag: LabeledDag, origin: Vec<usize>, segment: &GroupPresentation) -> Slice {
        let mut present: Vec<char> = (0..dag.len()).filter_map(|v| dag.letter(v)).collect();
        present.sort_unstable();
        present.dedup();
        let gp = segment.restrict(&present);
        let mut counts = vec![0; gp.alphabet().len()];
        for v in 0..dag.len() {
            counts[gp.alphabet().index(dag.letter(v).expect("letter")).expect("present")] += 1;
        }
        let mut reach = FixedBitSet::with_capacity(gp.order());
        reach.extend(reachable_set(&gp, &ParikhVector(counts)));
        let inserts = if dag.is_empty() {
            Vec::new()
        } else {
            let gen = gp.generated();
            (0..gp.order()).filter(|&x| gen[x] && x != gp.identity()).collect()
        };
        Slice {
            dag,
            origin,
            gp,
            reach,
            inserts,
        }
    }
}

/// One rare letter, a pivot, or a block of frequent material.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Vertex(usize),
    Pivot(usize),
    Insert(usize),
}

pub(crate) struct SegSpace<'a> {
    /// Rare strings as vertex sequences of the full instance.
    pub rare: Vec<Vec<usize>>,
    pub letter: &'a dyn Fn(usize) -> char,
    pub segments: &'a [GroupPresentation],
    pub pivots: &'a [char],
    pub slices: &'a [Slice],
    pub max_inserts: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Node {
    pos: Vec<u32>,
    seg: u32,
    elem: u32,
    used: u32,
    product: u32,
    after_insert: bool,
}

impl SegSpace<'_> {
    pub fn start(&self) -> Node {
        Node {
            pos: vec![0; self.rare.len()],
            seg: 0,
            elem: self.segments[0].identity() as u32,
            used: 0,
            product: self.segments[0].identity() as u32,
            after_insert: false,
        }
    }

    fn closes(&self, n: &Node) -> bool {
        let j = n.seg as usize;
        self.segments[j].is_accepting(n.elem as usize) && self.slices[j].reach.contains(n.product as usize)
    }

    pub fn run(&self, cap: usize) -> Result<Option<Vec<Step>>, SolveError> {
        find_path(self, self.start(), cap)
    }
}

impl Space for SegSpace<'_> {
    type Node = Node;
    type Step = Step;

    fn successors(&self, n: &Node, out: &mut Vec<(Step, Node)>) {
        let j = n.seg as usize;
        let gp = &self.segments[j];
        for (s, string) in self.rare.iter().enumerate() {
            let Some(&v) = string.get(n.pos[s] as usize) else { continue };
            let c = (self.letter)(v);
            let mut pos = n.pos.clone();
            pos[s] += 1;
            if let Some(g) = gp.mu_of(c) {
                out.push((
                    Step::Vertex(v),
                    Node {
                        pos: pos.clone(),
                        elem: gp.mul(n.elem as usize, g) as u32,
                        after_insert: false,
                        ..n.clone()
                    },
                ));
            }
            if j < self.pivots.len() && self.pivots[j] == c && self.closes(n) {
                let next = &self.segments[j + 1];
                out.push((
                    Step::Pivot(v),
                    Node {
                        pos,
                        seg: n.seg + 1,
                        elem: next.identity() as u32,
                        used: 0,
                        product: next.identity() as u32,
                        after_insert: false,
                    },
                ));
            }
        }
        if !n.after_insert && (n.used as usize) < self.max_inserts {
            for &x in &self.slices[j].inserts {
                out.push((
                    Step::Insert(x),
                    Node {
                        elem: gp.mul(n.elem as usize, x) as u32,
                        product: gp.mul(n.product as usize, x) as u32,
                        used: n.used + 1,
                        after_insert: true,
                        ..n.clone()
                    },
                ));
            }
        }
    }

    fn is_goal(&self, n: &Node) -> bool {
        n.seg as usize == self.pivots.len()
            && n.pos.iter().zip(&self.rare).all(|(&p, s)| p as usize == s.len())
            && self.closes(n)
    }
}

/// Turn an accepted path into a vertex order by realizing the inserted
/// elements of each segment on its slice. A slice without insertions is
/// placed as one block of identity image at the end of its segment.
pub(crate) fn assemble(path: &[Step], slices: &[Slice]) -> Result<Vec<usize>, SolveError> {
    let mut targets: Vec<Vec<usize>> = vec![Vec::new(); slices.len()];
    let mut seg = 0;
    for step in path {
        match step {
            Step::Insert(x) => targets[seg].push(*x),
            Step::Pivot(_) => seg += 1,
            Step::Vertex(_) => {}
        }
    }
    let mut blocks = Vec::with_capacity(slices.len());
    let mut trailing = vec![false; slices.len()];
    for (j, slice) in slices.iter().enumerate() {
        if targets[j].is_empty() && !slice.dag.is_empty() {
            targets[j].push(slice.gp.identity());
            trailing[j] = true;
        }
        let segs = realize_segmented(&slice.dag, &slice.gp, &targets[j])?;
        let mapped: Vec<Vec<usize>> =
            segs.into_iter().map(|s| s.into_iter().map(|v| slice.origin[v]).collect()).collect();
        blocks.push(mapped.into_iter());
    }
    let mut order = Vec::new();
    let mut seg = 0;
    for step in path {
        match step {
            Step::Vertex(v) => order.push(*v),
            Step::Insert(_) => order.extend(blocks[seg].next().expect("one block per insertion")),
            Step::Pivot(v) => {
                if trailing[seg] {
                    order.extend(blocks[seg].next().expect("trailing block"));
                }
                order.push(*v);
                seg += 1;
            }
        }
    }
    if trailing[seg] {
        order.extend(blocks[seg].next().expect("trailing block"));
    }
    Ok(order)
}
