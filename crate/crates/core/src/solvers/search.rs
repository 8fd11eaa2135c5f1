use std::collections::HashSet;
use std::hash::Hash;

use super::SolveError;

/// Finite acyclic search space explored depth first with a memo of nodes
/// known to lead nowhere.
pub(crate) trait Space {
    type Node: Clone + Eq + Hash;
    type Step: Clone;

    fn successors(&self, node: &Self::Node, out: &mut Vec<(Self::Step, Self::Node)>);
    fn is_goal(&self, node: &Self::Node) -> bool;
}

struct Frame<S: Space> {
    node: S::Node,
    step: Option<S::Step>,
    succ: Vec<(S::Step, S::Node)>,
    next: usize,
}

/// Steps of some path from `start` to a goal node.
pub(crate) fn find_path<S: Space>(space: &S, start: S::Node, cap: usize) -> Result<Option<Vec<S::Step>>, SolveError> {
    if space.is_goal(&start) {
        return Ok(Some(Vec::new()));
    }
    let mut dead: HashSet<S::Node> = HashSet::new();
    let mut visited = 1usize;
    let mut succ = Vec::new();
    space.successors(&start, &mut succ);
    let mut stack: Vec<Frame<S>> = vec![Frame {
        node: start,
        step: None,
        succ,
        next: 0,
    }];
    while let Some(top) = stack.last_mut() {
        if top.next == top.succ.len() {
            let f = stack.pop().expect("non-empty");
            dead.insert(f.node);
            continue;
        }
        let (step, node) = top.succ[top.next].clone();
        top.next += 1;
        if dead.contains(&node) {
            continue;
        }
        if space.is_goal(&node) {
            let mut path: Vec<S::Step> = stack.iter().filter_map(|f| f.step.clone()).collect();
            path.push(step);
            return Ok(Some(path));
        }
        visited += 1;
        if visited > cap {
            return Err(SolveError::CapExceeded {
                what: "search states",
                limit: cap,
            });
        }
        let mut succ = Vec::new();
        space.successors(&node, &mut succ);
        stack.push(Frame {
            node,
            step: Some(step),
            succ,
            next: 0,
        });
    }
    Ok(None)
}
