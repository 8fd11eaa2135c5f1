use std::collections::{BTreeMap, BinaryHeap};
use std::cmp::Reverse;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::DagError;
use crate::lang::Alphabet;

/// Directed acyclic graph with a word on every vertex. Vertices are
/// `0..len()` internally and `1..=len()` in files and reports.
#[derive(Clone, Debug)]
pub struct LabeledDag {
    alphabet: Alphabet,
    labels: Vec<String>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    closure: OnceLock<Closure>,
}

#[derive(Clone, Debug)]
struct Closure {
    desc: Vec<FixedBitSet>,
    anc: Vec<FixedBitSet>,
}

impl PartialEq for LabeledDag {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.labels == other.labels && self.succ == other.succ
    }
}

impl LabeledDag {
    pub fn new(
        alphabet: Alphabet,
        labels: Vec<String>,
        edges: &[(usize, usize)],
    ) -> Result<LabeledDag, DagError> {
        let n = labels.len();
        for l in &labels {
            if let Some(c) = l.chars().find(|&c| !alphabet.contains(c)) {
                return Err(DagError::UnknownSymbol(c));
            }
        }
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(DagError::UnknownVertex(u.max(v) + 1));
            }
            if !succ[u].contains(&v) {
                succ[u].push(v);
                pred[v].push(u);
            }
        }
        for row in succ.iter_mut().chain(pred.iter_mut()) {
            row.sort_unstable();
        }
        let g = LabeledDag {
            alphabet,
            labels,
            succ,
            pred,
            closure: OnceLock::new(),
        };
        if g.try_topo_order().is_none() {
            return Err(DagError::Cycle);
        }
        Ok(g)
    }

    /// Single-letter labels given as a string, one per vertex.
    pub fn from_letters(alphabet: &Alphabet, letters: &str, edges: &[(usize, usize)]) -> Result<LabeledDag, DagError> {
        LabeledDag::new(
            alphabet.clone(),
            letters.chars().map(String::from).collect(),
            edges,
        )
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Letter of a single-letter vertex.
    pub fn letter(&self, v: usize) -> Option<char> {
        let mut it = self.labels[v].chars();
        match (it.next(), it.next()) {
            (Some(c), None) => Some(c),
            _ => None,
        }
    }

    pub fn single_letter_labels(&self) -> bool {
        (0..self.len()).all(|v| self.letter(v).is_some())
    }

    pub fn succ(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn pred(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, row) in self.succ.iter().enumerate() {
            for &v in row {
                out.push((u, v));
            }
        }
        out
    }

    fn try_topo_order(&self) -> Option<Vec<usize>> {
        let n = self.len();
        let mut indeg: Vec<usize> = self.pred.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &w in &self.succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    heap.push(Reverse(w));
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Topological sort taking the smallest available vertex first.
    pub fn topo_order(&self) -> Vec<usize> {
        self.try_topo_order().expect("acyclic by construction")
    }

    /// Smallest-first topological sort of the subgraph induced by `set`.
    pub fn topo_order_of(&self, set: &FixedBitSet) -> Vec<usize> {
        self.topo_order().into_iter().filter(|&v| set.contains(v)).collect()
    }

    fn closure(&self) -> &Closure {
        self.closure.get_or_init(|| {
            let n = self.len();
            let order = self.topo_order();
            let mut desc = vec![FixedBitSet::with_capacity(n); n];
            for &v in order.iter().rev() {
                let mut d = FixedBitSet::with_capacity(n);
                for &w in &self.succ[v] {
                    d.insert(w);
                    d.union_with(&desc[w]);
                }
                desc[v] = d;
            }
            let mut anc = vec![FixedBitSet::with_capacity(n); n];
            for v in 0..n {
                for w in desc[v].ones() {
                    anc[w].insert(v);
                }
            }
            Closure { desc, anc }
        })
    }

    /// Strict descendants.
    pub fn descendants(&self, v: usize) -> &FixedBitSet {
        &self.closure().desc[v]
    }

    /// Strict ancestors.
    pub fn ancestors(&self, v: usize) -> &FixedBitSet {
        &self.closure().anc[v]
    }

    /// Is there a non-empty path from `u` to `v`?
    pub fn reaches(&self, u: usize, v: usize) -> bool {
        self.closure().desc[u].contains(v)
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        u == v || self.reaches(u, v) || self.reaches(v, u)
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            set[i + 1..].iter().all(|&v| !self.comparable(u, v))
        })
    }

    pub fn is_topological_sort(&self, order: &[usize]) -> bool {
        let n = self.len();
        if order.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        (0..n).all(|u| self.succ[u].iter().all(|&v| pos[u] < pos[v]))
    }

    pub fn spell(&self, order: &[usize]) -> String {
        order.iter().map(|&v| self.labels[v].as_str()).collect()
    }

    /// Subgraph induced by `keep` (in increasing vertex order) together with
    /// the map from new to old vertex numbers.
    pub fn induced(&self, keep: &[usize]) -> (LabeledDag, Vec<usize>) {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for &u in &keep {
            for &v in &self.succ[u] {
                if pos[v] != usize::MAX {
                    edges.push((pos[u], pos[v]));
                }
            }
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let g = LabeledDag::new(self.alphabet.clone(), labels, &edges).expect("subgraph of a DAG");
        (g, keep)
    }

    /// If the edges form vertex-disjoint directed paths, those paths (each in
    /// order, sorted by first vertex).
    pub fn path_components(&self) -> Option<Vec<Vec<usize>>> {
        if (0..self.len()).any(|v| self.succ[v].len() > 1 || self.pred[v].len() > 1) {
            return None;
        }
        let mut out = Vec::new();
        for v in 0..self.len() {
            if self.pred[v].is_empty() {
                let mut path = vec![v];
                let mut cur = v;
                while let Some(&w) = self.succ[cur].first() {
                    path.push(w);
                    cur = w;
                }
                out.push(path);
            }
        }
        Some(out)
    }

    /// Disjoint union; the vertices of `other` are numbered after ours.
    pub fn disjoint_union(&self, other: &LabeledDag) -> LabeledDag {
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + n, v + n)));
        LabeledDag::new(self.alphabet.union(&other.alphabet), labels, &edges).expect("union of DAGs")
    }
}

/// Tuple of words, read as a disjoint union of labeled paths.
#[derive(Clone, Debug, PartialEq)]
pub struct ShuffleInstance {
    alphabet: Alphabet,
    strings: Vec<String>,
    dag: LabeledDag,
    offsets: Vec<usize>,
}

impl ShuffleInstance {
    pub fn new(alphabet: Alphabet, strings: Vec<String>) -> Result<ShuffleInstance, DagError> {
        let mut labels = Vec::new();
        let mut edges = Vec::new();
        let mut offsets = Vec::with_capacity(strings.len() + 1);
        for s in &strings {
            offsets.push(labels.len());
            for (i, c) in s.chars().enumerate() {
                if i > 0 {
                    edges.push((labels.len() - 1, labels.len()));
                }
                labels.push(c.to_string());
            }
        }
        offsets.push(labels.len());
        let dag = LabeledDag::new(alphabet.clone(), labels, &edges)?;
        Ok(ShuffleInstance {
            alphabet,
            strings,
            dag,
            offsets,
        })
    }

    /// Alphabet spanned by the strings themselves.
    pub fn from_strs(strings: &[&str]) -> Result<ShuffleInstance, DagError> {
        let alphabet = Alphabet::spanning(strings.iter().copied())?;
        ShuffleInstance::new(alphabet, strings.iter().map(|s| s.to_string()).collect())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn strings(&self) -> &[String] {
        &self.strings
    }

    pub fn dag(&self) -> &LabeledDag {
        &self.dag
    }

    pub fn total_len(&self) -> usize {
        self.dag.len()
    }

    /// Vertex of position `pos` in string `s`.
    pub fn vertex(&self, s: usize, pos: usize) -> usize {
        self.offsets[s] + pos
    }

    /// `(string, position)` of a vertex.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        let s = self.offsets.partition_point(|&o| o <= v) - 1;
        (s, v - self.offsets[s])
    }

    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<ShuffleInstance, DagError> {
        ShuffleInstance::new(alphabet, self.strings.clone())
    }

    pub fn sub_instance(&self, which: &[usize]) -> ShuffleInstance {
        ShuffleInstance::new(
            self.alphabet.clone(),
            which.iter().map(|&i| self.strings[i].clone()).collect(),
        )
        .expect("strings already validated")
    }
}

/// Either a general labeled DAG or a tuple of strings.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Dag(LabeledDag),
    Strings(ShuffleInstance),
}

impl Instance {
    pub fn dag(&self) -> &LabeledDag {
        match self {
            Instance::Dag(g) => g,
            Instance::Strings(s) => s.dag(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.dag().alphabet()
    }

    pub fn strings(&self) -> Option<&ShuffleInstance> {
        match self {
            Instance::Strings(s) => Some(s),
            Instance::Dag(_) => None,
        }
    }

    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Instance, DagError> {
        Ok(match self {
            Instance::Strings(s) => Instance::Strings(s.with_alphabet(alphabet)?),
            Instance::Dag(g) => Instance::Dag(LabeledDag::new(alphabet, g.labels().to_vec(), &g.edges())?),
        })
    }

    /// Parse JSON, or the compact `strings: ab,ba` text form.
    pub fn parse(text: &str) -> Result<Instance, DagError> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let j: InstanceJson = serde_json::from_str(text).map_err(|e| DagError::Parse(e.to_string()))?;
            return j.instance();
        }
        let mut alphabet = None;
        let mut strings = None;
        for line in text.lines().flat_map(|l| l.split(';')) {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| DagError::Parse(format!("expected 'key: value', got '{line}'")))?;
            let value = value.trim();
            match key.trim() {
                "alphabet" => alphabet = Some(value.to_string()),
                "strings" => {
                    strings = Some(
                        value
                            .split(',')
                            .map(|s| s.trim().to_string())
                            .filter(|s| !s.is_empty())
                            .collect::<Vec<_>>(),
                    )
                }
                other => return Err(DagError::Parse(format!("unknown key '{other}'"))),
            }
        }
        InstanceJson {
            alphabet,
            vertices: None,
            edges: None,
            strings: Some(strings.ok_or_else(|| DagError::Parse("missing 'strings'".into()))?),
        }
        .instance()
    }

    pub fn to_json(&self) -> InstanceJson {
        match self {
            Instance::Strings(s) => InstanceJson {
                alphabet: Some(s.alphabet().to_string()),
                vertices: None,
                edges: None,
                strings: Some(s.strings().to_vec()),
            },
            Instance::Dag(g) => InstanceJson {
                alphabet: Some(g.alphabet().to_string()),
                vertices: Some(
                    g.labels()
                        .iter()
                        .enumerate()
                        .map(|(i, l)| VertexJson {
                            id: i as u64 + 1,
                            label: l.clone(),
                        })
                        .collect(),
                ),
                edges: Some(g.edges().into_iter().map(|(u, v)| [u as u64 + 1, v as u64 + 1]).collect()),
                strings: None,
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: u64,
    pub label: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<VertexJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[u64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strings: Option<Vec<String>>,
}

impl InstanceJson {
    pub fn instance(&self) -> Result<Instance, DagError> {
        let words: Vec<&str> = match (&self.strings, &self.vertices) {
            (Some(s), None) => s.iter().map(String::as_str).collect(),
            (None, Some(v)) => v.iter().map(|x| x.label.as_str()).collect(),
            _ => return Err(DagError::Parse("exactly one of 'strings' or 'vertices' is required".into())),
        };
        let alphabet = match &self.alphabet {
            Some(a) => Alphabet::try_from(a.as_str())?,
            None => Alphabet::spanning(words.iter().copied())?,
        };
        if let Some(strings) = &self.strings {
            return Ok(Instance::Strings(ShuffleInstance::new(alphabet, strings.clone())?));
        }
        let vertices = self.vertices.as_ref().expect("checked above");
        let n = vertices.len();
        let mut labels: BTreeMap<u64, String> = BTreeMap::new();
        for v in vertices {
            if v.id == 0 || v.id as usize > n || labels.insert(v.id, v.label.clone()).is_some() {
                return Err(DagError::Parse(format!("vertex ids must be 1..{n}, each once (got {})", v.id)));
            }
        }
        let mut edges = Vec::new();
        for &[u, v] in self.edges.as_deref().unwrap_or(&[]) {
            if u == 0 || v == 0 || u as usize > n || v as usize > n {
                return Err(DagError::UnknownVertex(u.max(v) as usize));
            }
            edges.push((u as usize - 1, v as usize - 1));
        }
        Ok(Instance::Dag(LabeledDag::new(alphabet, labels.into_values().collect(), &edges)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_cycles() {
        let a = Alphabet::new("abc".chars()).unwrap();
        let g = LabeledDag::from_letters(&a, "abbc", &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(g.reaches(0, 3) && !g.reaches(1, 2) && !g.comparable(1, 2));
        assert_eq!(g.ancestors(3).ones().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert!(matches!(
            LabeledDag::from_letters(&a, "ab", &[(0, 1), (1, 0)]),
            Err(DagError::Cycle)
        ));
        assert!(matches!(
            LabeledDag::from_letters(&a, "ad", &[]),
            Err(DagError::UnknownSymbol('d'))
        ));
    }

    #[test]
    fn json_forms() {
        let g = Instance::parse(r#"{"alphabet":"ab","vertices":[{"id":2,"label":"b"},{"id":1,"label":"a"}],"edges":[[1,2]]}"#).unwrap();
        assert_eq!(g.dag().labels(), ["a", "b"]);
        assert!(g.dag().reaches(0, 1));
        let s = Instance::parse("strings: ab, ba").unwrap();
        assert_eq!(s.strings().unwrap().strings(), ["ab", "ba"]);
        assert_eq!(s.alphabet().to_string(), "ab");
        let back = Instance::parse(&serde_json::to_string(&g.to_json()).unwrap()).unwrap();
        assert_eq!(back, g);
        assert!(Instance::parse(r#"{"alphabet":"ab","vertices":[{"id":1,"label":"a"}],"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn string_layout() {
        let s = ShuffleInstance::from_strs(&["ab", "", "cde"]).unwrap();
        assert_eq!(s.vertex(2, 1), 3);
        assert_eq!(s.locate(3), (2, 1));
        assert_eq!(s.locate(0), (0, 0));
        assert_eq!(s.dag().path_components().unwrap(), vec![vec![0, 1], vec![2, 3, 4]]);
    }
}
