//! Finite simple graphs with labelled vertices.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::complex::Label;
use crate::error::{Error, Result};

/// A finite simple graph. Vertices are addressed by index; each index
/// carries an opaque label.
#[derive(Clone, Default)]
pub struct Graph {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from a vertex list and a list of label pairs. Repeated
    /// edges collapse; loops and edges to unknown vertices are rejected.
    pub fn new<V, E, L>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = L>,
        E: IntoIterator<Item = (L, L)>,
        L: Into<Label>,
    {
        let mut g = Graph::default();
        for v in vertices {
            g.add_vertex(v.into());
        }
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            let ia = *g
                .index
                .get(&a)
                .ok_or_else(|| Error::NotSimple(format!("edge endpoint {a} is not a vertex")))?;
            let ib = *g
                .index
                .get(&b)
                .ok_or_else(|| Error::NotSimple(format!("edge endpoint {b} is not a vertex")))?;
            if ia == ib {
                return Err(Error::NotSimple(format!("loop at {a}")));
            }
            g.add_edge(ia, ib);
        }
        Ok(g)
    }

    /// Graph whose vertex set is the set of edge endpoints, in label order.
    pub fn from_edges<E, L>(edges: E) -> Self
    where
        E: IntoIterator<Item = (L, L)>,
        L: Into<Label>,
    {
        let edges: Vec<(Label, Label)> = edges.into_iter().map(|(a, b)| (a.into(), b.into())).collect();
        let vertices: BTreeSet<Label> = edges.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        Graph::new(vertices, edges).expect("loop in edge list")
    }

    pub(crate) fn with_labels(labels: Vec<Label>) -> Self {
        let mut g = Graph::default();
        for l in labels {
            g.add_vertex(l);
        }
        g
    }

    fn add_vertex(&mut self, l: Label) -> usize {
        if let Some(&i) = self.index.get(&l) {
            return i;
        }
        let i = self.labels.len();
        self.index.insert(l.clone(), i);
        self.labels.push(l);
        self.adj.push(Vec::new());
        i
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        if let Err(pos) = self.adj[a].binary_search(&b) {
            self.adj[a].insert(pos, b);
            let pos = self.adj[b].binary_search(&a).unwrap_err();
            self.adj[b].insert(pos, a);
        }
    }

    /// `K_n` on labels `1..=n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    /// `n` isolated vertices labelled `1..=n`.
    pub fn edgeless(n: usize) -> Self {
        Graph::with_labels((1..=n).map(Label::from).collect())
    }

    /// Path on `n` vertices labelled `1..=n`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for a in 1..n {
            g.add_edge(a - 1, a);
        }
        g
    }

    /// Cycle on `n >= 3` vertices labelled `1..=n`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// Wheel: a cycle on `1..=n` joined to a hub labelled `0`.
    pub fn wheel(n: usize) -> Self {
        Graph::edgeless(1).relabel(|_| Label::from(0)).join_plain(&Graph::cycle(n))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as index pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, nb)| nb.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The subgraph induced on `keep`, with vertices in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            pos[old] = new;
        }
        let mut g = Graph::with_labels(keep.iter().map(|&i| self.labels[i].clone()).collect());
        for (new, &old) in keep.iter().enumerate() {
            for &nb in &self.adj[old] {
                if pos[nb] != usize::MAX && pos[nb] > new {
                    g.add_edge(new, pos[nb]);
                }
            }
        }
        g
    }

    /// The unit sphere of vertex `i`: the subgraph induced on its neighbors.
    pub fn unit_sphere(&self, i: usize) -> Graph {
        self.induced(&self.adj[i])
    }

    pub fn without_vertex(&self, i: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&j| j != i).collect();
        self.induced(&keep)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::with_labels(self.labels.clone());
        for a in 0..self.n() {
            for b in a + 1..self.n() {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn relabel(&self, f: impl Fn(&Label) -> Label) -> Graph {
        let mut g = Graph::with_labels(self.labels.iter().map(f).collect());
        assert_eq!(g.n(), self.n(), "relabelling must be injective");
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        g
    }

    /// Graph join without relabelling; the label sets must be disjoint.
    fn join_plain(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = Graph::with_labels(self.labels.iter().chain(&other.labels).cloned().collect());
        assert_eq!(g.n(), self.n() + other.n(), "join needs disjoint labels");
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        for (a, b) in other.edges() {
            g.add_edge(off + a, off + b);
        }
        for a in 0..self.n() {
            for b in 0..other.n() {
                g.add_edge(a, off + b);
            }
        }
        g
    }

    /// Zykov join of graphs: disjoint union plus every cross edge. Labels are
    /// tagged `L:`/`R:`. Its clique complex is the join of the clique
    /// complexes.
    pub fn join(&self, other: &Graph) -> Graph {
        self.relabel(|l| l.tagged("L"))
            .join_plain(&other.relabel(|l| l.tagged("R")))
    }

    /// Calls `visit` once per clique (every nonempty complete subgraph), each
    /// given as increasing vertex indices.
    pub fn for_each_clique(&self, mut visit: impl FnMut(&[usize])) {
        let mut stack = Vec::new();
        for v in 0..self.n() {
            let cand: Vec<usize> = self.adj[v].iter().copied().filter(|&w| w > v).collect();
            stack.push(v);
            self.extend_clique(&mut stack, &cand, &mut visit);
            stack.pop();
        }
    }

    fn extend_clique(&self, stack: &mut Vec<usize>, cand: &[usize], visit: &mut impl FnMut(&[usize])) {
        visit(stack);
        for (k, &w) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[k + 1..]
                .iter()
                .copied()
                .filter(|&u| self.has_edge(w, u))
                .collect();
            stack.push(w);
            self.extend_clique(stack, &next, visit);
            stack.pop();
        }
    }

    /// f-vector of the clique complex, `(f_0, f_1, ...)`.
    pub fn clique_counts(&self) -> Vec<u64> {
        let mut counts: Vec<u64> = Vec::new();
        self.for_each_clique(|c| {
            if counts.len() < c.len() {
                counts.resize(c.len(), 0);
            }
            counts[c.len() - 1] += 1;
        });
        counts
    }

    /// Euler characteristic of the clique complex.
    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0;
        self.for_each_clique(|c| chi += if c.len() % 2 == 1 { 1 } else { -1 });
        chi
    }

    fn label_edges(&self) -> BTreeSet<(Label, Label)> {
        self.edges()
            .map(|(a, b)| {
                let (x, y) = (self.labels[a].clone(), self.labels[b].clone());
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect()
    }
}

/// Graphs compare as labelled graphs: same vertex labels, same edges.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        let va: BTreeSet<&Label> = self.labels.iter().collect();
        let vb: BTreeSet<&Label> = other.labels.iter().collect();
        va == vb && self.label_edges() == other.label_edges()
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.label_edges())
            .finish()
    }
}
