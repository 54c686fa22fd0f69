//! Simplices, finite abstract simplicial complexes and their constructors.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;

/// An opaque vertex label.
///
/// Labels that parse as integers sort numerically and ahead of all other
/// labels; everything else sorts as plain strings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(s: impl AsRef<str>) -> Self {
        Label(Arc::from(s.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn as_int(&self) -> Option<i64> {
        self.0.parse().ok()
    }

    /// `tag` prepended with a `:` separator, as used by joins and unions.
    pub fn tagged(&self, tag: &str) -> Label {
        Label::new(format!("{tag}:{}", self.0))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.as_int(), other.as_int()) {
            (Some(a), Some(b)) => a.cmp(&b).then_with(|| self.0.cmp(&other.0)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::new(s)
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label::new(s)
    }
}

macro_rules! label_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Label {
            fn from(v: $t) -> Self {
                Label::new(v.to_string())
            }
        }
    )*};
}
label_from_int!(i32, i64, u32, u64, usize);

/// A nonempty finite set of vertex labels, stored sorted.
///
/// Simplices order canonically: by cardinality first, then lexicographically
/// on the sorted vertex sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: Vec<Label>,
}

impl Simplex {
    pub fn new<I, T>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<Label>,
    {
        let set: BTreeSet<Label> = vertices.into_iter().map(Into::into).collect();
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(Simplex {
            vertices: set.into_iter().collect(),
        })
    }

    fn from_sorted(vertices: Vec<Label>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex { vertices }
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    /// Number of vertices, `|x|`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// `(-1)^dim`.
    pub fn omega(&self) -> i64 {
        if self.dim().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn contains_vertex(&self, v: &Label) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.vertices.iter();
        'outer: for v in &self.vertices {
            for w in it.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_proper_subset_of(&self, other: &Simplex) -> bool {
        self.len() < other.len() && self.is_subset_of(other)
    }

    /// Whether the two vertex sets share a vertex.
    pub fn intersects(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let set: BTreeSet<Label> = self
            .vertices
            .iter()
            .chain(&other.vertices)
            .cloned()
            .collect();
        Simplex::from_sorted(set.into_iter().collect())
    }

    /// All nonempty subsets, the simplex itself included.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let k = self.len();
        assert!(k < 64, "simplex too large to enumerate faces");
        (1u64..(1u64 << k)).map(move |mask| {
            Simplex::from_sorted(
                (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.vertices[i].clone())
                    .collect(),
            )
        })
    }

    /// Nonempty proper subsets.
    pub fn proper_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.len();
        self.faces().filter(move |f| f.len() < n)
    }

    pub fn map_labels(&self, f: impl Fn(&Label) -> Label) -> Simplex {
        let set: BTreeSet<Label> = self.vertices.iter().map(f).collect();
        Simplex::from_sorted(set.into_iter().collect())
    }

    /// The label this simplex carries when it becomes a vertex of a derived
    /// graph (refinement or connection graph).
    pub fn as_label(&self) -> Label {
        let inner: Vec<&str> = self.vertices.iter().map(Label::as_str).collect();
        Label::new(format!("[{}]", inner.join(" ")))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Number of simplices per dimension, `(f_0, ..., f_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// `b`, the number of even-dimensional simplices.
    pub fn even(&self) -> u64 {
        self.0.iter().step_by(2).sum()
    }

    /// `f`, the number of odd-dimensional simplices.
    pub fn odd(&self) -> u64 {
        self.0.iter().skip(1).step_by(2).sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finite abstract simplicial complex: a set of simplices closed under
/// taking nonempty subsets, held in canonical order.
#[derive(Clone, Default)]
pub struct SimplicialComplex {
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

impl Hash for SimplicialComplex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.simplices.hash(state);
    }
}

impl Ord for SimplicialComplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.simplices
            .len()
            .cmp(&other.simplices.len())
            .then_with(|| self.simplices.cmp(&other.simplices))
    }
}

impl PartialOrd for SimplicialComplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.simplices).finish()
    }
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    fn from_closed_set(set: BTreeSet<Simplex>) -> Self {
        let simplices: Vec<Simplex> = set.into_iter().collect();
        let index = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        SimplicialComplex { simplices, index }
    }

    /// The complex generated by `sets`: every nonempty subset of every set.
    pub fn generate<I, S, T>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = T>,
        T: Into<Label>,
    {
        let mut all = BTreeSet::new();
        for set in sets {
            let top = Simplex::new(set)?;
            if all.contains(&top) {
                continue;
            }
            all.extend(top.faces());
        }
        Ok(Self::from_closed_set(all))
    }

    /// Builds a complex from an explicit list of simplices, rejecting lists
    /// that are not closed under nonempty subsets.
    pub fn try_from_simplices(simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let set: BTreeSet<Simplex> = simplices.into_iter().collect();
        for s in &set {
            if let Some(missing) = s.proper_faces().find(|f| !set.contains(f)) {
                return Err(Error::Internal(format!(
                    "{missing} is a face of {s} but missing from the set"
                )));
            }
        }
        Ok(Self::from_closed_set(set))
    }

    /// The single-vertex complex `K_1`.
    pub fn point() -> Self {
        Self::generate([["1"]]).expect("nonempty")
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn get(&self, i: usize) -> &Simplex {
        &self.simplices[i]
    }

    pub fn index_of(&self, x: &Simplex) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Simplex) -> bool {
        self.index.contains_key(x)
    }

    pub(crate) fn require(&self, x: &Simplex) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| Error::NotAMember(x.to_string()))
    }

    /// `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.last().map(Simplex::dim)
    }

    pub fn vertices(&self) -> Vec<Label> {
        self.simplices
            .iter()
            .take_while(|s| s.len() == 1)
            .map(|s| s.vertices[0].clone())
            .collect()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.dimension().map_or(0, |d| d + 1)];
        for s in &self.simplices {
            counts[s.dim()] += 1;
        }
        FVector(counts)
    }

    /// `chi(G) = sum of omega(x)`.
    pub fn euler_characteristic(&self) -> i64 {
        euler_of(&self.simplices)
    }

    /// `phi(G) = product of omega(x)`.
    pub fn fermi_characteristic(&self) -> i64 {
        if self.simplices.iter().filter(|s| s.dim() % 2 == 1).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn genus(&self) -> i64 {
        1 - self.euler_characteristic()
    }

    /// `1 + f_0 t + f_1 t^2 + ... + f_d t^(d+1)`.
    pub fn f_function(&self) -> IntPoly {
        IntPoly::new(std::iter::once(1u64).chain(self.f_vector().0))
    }

    pub fn k_skeleton(&self, k: usize) -> Self {
        Self::from_closed_set(
            self.simplices
                .iter()
                .filter(|s| s.dim() <= k)
                .cloned()
                .collect(),
        )
    }

    /// Maximal simplices, in canonical order.
    pub fn facets(&self) -> Vec<Simplex> {
        self.simplices
            .iter()
            .filter(|s| self.is_facet(s))
            .cloned()
            .collect()
    }

    pub fn is_facet(&self, x: &Simplex) -> bool {
        self.contains(x)
            && !self
                .simplices
                .iter()
                .any(|y| y.len() > x.len() && x.is_subset_of(y))
    }

    /// The complex with the facet `x` removed.
    pub fn without_facet(&self, x: &Simplex) -> Result<Self> {
        if !self.is_facet(x) {
            return Err(Error::NotAFacet(x.to_string()));
        }
        Ok(Self::from_closed_set(
            self.simplices.iter().filter(|s| *s != x).cloned().collect(),
        ))
    }

    /// The subcomplex made of the first `k` simplices in canonical order.
    /// Every prefix of the canonical order is closed under subsets.
    pub fn prefix(&self, k: usize) -> Self {
        Self::from_closed_set(self.simplices[..k].iter().cloned().collect())
    }

    pub fn relabel(&self, f: impl Fn(&Label) -> Label) -> Self {
        Self::from_closed_set(self.simplices.iter().map(|s| s.map_labels(&f)).collect())
    }

    /// Whether every nonempty proper subset of every member is a member.
    pub fn is_closed(&self) -> bool {
        self.simplices
            .iter()
            .all(|s| s.proper_faces().all(|f| self.contains(&f)))
    }
}

/// `sum of omega(y)` over an arbitrary set of simplices. Stars and their
/// intersections are not complexes, but still carry this characteristic.
pub fn euler_of<'a>(sets: impl IntoIterator<Item = &'a Simplex>) -> i64 {
    sets.into_iter().map(Simplex::omega).sum()
}

/// All nonempty subsets of the given sets.
pub fn generate_complex<I, S, T>(sets: I) -> Result<SimplicialComplex>
where
    I: IntoIterator<Item = S>,
    S: IntoIterator<Item = T>,
    T: Into<Label>,
{
    SimplicialComplex::generate(sets)
}

/// The clique complex of `g`.
pub fn whitney_complex(g: &Graph) -> SimplicialComplex {
    let mut set = BTreeSet::new();
    g.for_each_clique(|clique| {
        let labels = clique.iter().map(|&i| g.label(i).clone());
        set.insert(Simplex::new(labels).expect("cliques are nonempty"));
    });
    SimplicialComplex::from_closed_set(set)
}

/// Nonempty independent vertex sets of `g`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    whitney_complex(&g.complement())
}

/// Nonempty forests of `g`, as sets of edge labels `a-b`.
pub fn graphic_matroid(g: &Graph) -> SimplicialComplex {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let edge_labels: Vec<Label> = edges
        .iter()
        .map(|&(a, b)| Label::new(format!("{}-{}", g.label(a), g.label(b))))
        .collect();
    let mut set = BTreeSet::new();
    let mut chosen = Vec::new();
    let mut parent: Vec<usize> = (0..g.n()).collect();
    extend_forests(&edges, 0, &mut parent, &mut chosen, &mut |forest| {
        let labels = forest.iter().map(|&e| edge_labels[e].clone());
        set.insert(Simplex::new(labels).expect("nonempty forest"));
    });
    SimplicialComplex::from_closed_set(set)
}

fn find(parent: &[usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

fn extend_forests(
    edges: &[(usize, usize)],
    start: usize,
    parent: &mut Vec<usize>,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    for e in start..edges.len() {
        let (a, b) = edges[e];
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra == rb {
            continue;
        }
        // union without path compression so it can be undone
        parent[ra] = rb;
        chosen.push(e);
        emit(chosen);
        extend_forests(edges, e + 1, parent, chosen, emit);
        chosen.pop();
        parent[ra] = ra;
    }
}

/// The Zykov join `a + b`: both complexes together with every union of a
/// simplex of `a` with a simplex of `b`. Labels of `a` are tagged `L:` and
/// labels of `b` are tagged `R:`.
pub fn zykov_join(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let left: Vec<Simplex> = a.simplices.iter().map(|s| s.map_labels(|l| l.tagged("L"))).collect();
    let right: Vec<Simplex> = b.simplices.iter().map(|s| s.map_labels(|l| l.tagged("R"))).collect();
    let mut set: BTreeSet<Simplex> = left.iter().chain(&right).cloned().collect();
    for x in &left {
        for y in &right {
            set.insert(x.union(y));
        }
    }
    SimplicialComplex::from_closed_set(set)
}

/// Disjoint union with `L:`/`R:` tagged labels.
pub fn disjoint_union(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let set = a
        .simplices
        .iter()
        .map(|s| s.map_labels(|l| l.tagged("L")))
        .chain(b.simplices.iter().map(|s| s.map_labels(|l| l.tagged("R"))))
        .collect();
    SimplicialComplex::from_closed_set(set)
}

/// Strips one `L:`/`R:` tag level, the inverse of the tagging done by joins
/// and unions when the two sides have disjoint labels already.
pub fn strip_tag(l: &Label) -> Label {
    let s = l.as_str();
    match s.split_once(':') {
        Some(("L" | "R", rest)) => Label::new(rest),
        _ => l.clone(),
    }
}
