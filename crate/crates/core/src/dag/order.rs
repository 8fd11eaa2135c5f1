use super::{DagError, LabeledDag};

/// Streaming enumeration of all topological sorts, in lexicographic order of
/// vertex sequences.
pub struct TopoSorts<'a> {
    g: &'a LabeledDag,
    indeg: Vec<usize>,
    placed: Vec<bool>,
    order: Vec<usize>,
    // Per depth: the candidate tried last at that depth.
    tried: Vec<Option<usize>>,
    finished: bool,
}

impl<'a> TopoSorts<'a> {
    pub fn new(g: &'a LabeledDag) -> Self {
        TopoSorts {
            g,
            indeg: (0..g.len()).map(|v| g.pred(v).len()).collect(),
            placed: vec![false; g.len()],
            order: Vec::new(),
            tried: vec![None],
            finished: false,
        }
    }

    fn next_candidate(&self, after: Option<usize>) -> Option<usize> {
        let start = after.map_or(0, |v| v + 1);
        (start..self.g.len()).find(|&v| !self.placed[v] && self.indeg[v] == 0)
    }

    fn place(&mut self, v: usize) {
        self.placed[v] = true;
        self.order.push(v);
        for &w in self.g.succ(v) {
            self.indeg[w] -= 1;
        }
    }

    fn unplace(&mut self) -> usize {
        let v = self.order.pop().expect("non-empty");
        self.placed[v] = false;
        for &w in self.g.succ(v) {
            self.indeg[w] += 1;
        }
        v
    }
}

impl Iterator for TopoSorts<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.finished {
            return None;
        }
        let n = self.g.len();
        loop {
            if self.order.len() == n {
                let out = self.order.clone();
                // step back so the next call continues the search
                if n == 0 {
                    self.finished = true;
                } else {
                    let v = self.unplace();
                    self.tried.pop();
                    *self.tried.last_mut().expect("depth") = Some(v);
                }
                return Some(out);
            }
            let depth = self.order.len();
            match self.next_candidate(self.tried[depth]) {
                Some(v) => {
                    self.tried[depth] = Some(v);
                    self.place(v);
                    self.tried.push(None);
                }
                None => {
                    if depth == 0 {
                        self.finished = true;
                        return None;
                    }
                    self.tried.pop();
                    let v = self.unplace();
                    *self.tried.last_mut().expect("depth") = Some(v);
                }
            }
        }
    }
}

pub fn topological_sorts(g: &LabeledDag) -> TopoSorts<'_> {
    TopoSorts::new(g)
}

/// All topological sorts, refused above `cap` vertices.
pub fn all_topological_sorts(g: &LabeledDag, cap: usize) -> Result<Vec<Vec<usize>>, DagError> {
    if g.len() > cap {
        return Err(DagError::CapExceeded {
            what: "topological sort enumeration",
            limit: cap,
        });
    }
    Ok(topological_sorts(g).collect())
}
