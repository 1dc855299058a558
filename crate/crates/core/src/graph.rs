//! Labeled simple graphs on at most 64 vertices.
//!
//! Vertices are dense indices `0..n` backed by a label table, and every vertex
//! set is a 64-bit mask. Induced subgraphs are compacted to `0..m` but keep the
//! labels of the parent graph, so figures can be matched by name.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

pub const MAX_VERTICES: usize = 64;

/// A subset of the vertex indices of some graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Vertex)
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitIter {}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v])).collect();
        f.debug_struct("Graph").field("vertices", &self.labels).field("edges", &edges).finish()
    }
}

/// Default labels `x1..xn`.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl Graph {
    /// Graph without edges on the given labels.
    pub fn edgeless(labels: Vec<String>) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph { labels, adj: vec![0; n] })
    }

    pub fn from_edges(labels: Vec<String>, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::edgeless(labels)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on `x1..xn` with the given 0-based edges.
    pub fn with_default_labels(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Graph::from_edges(default_labels(n), edges)
    }

    /// Builds a graph from label pairs; vertices appear in order of first mention.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let mut idx = |s: &str| {
                *index.entry(s.to_string()).or_insert_with(|| {
                    labels.push(s.to_string());
                    labels.len() - 1
                })
            };
            let u = idx(a.as_ref());
            let v = idx(b.as_ref());
            pairs.push((u, v));
        }
        Graph::from_edges(labels, &pairs)
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn check(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            let bad = s.difference(self.vertices()).first().unwrap_or(0);
            Err(Error::InvalidVertex { vertex: bad, n: self.n() })
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolves a list of labels to a vertex set.
    pub fn set_of(&self, labels: &[&str]) -> Result<VertexSet> {
        labels.iter().map(|l| self.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))).collect()
    }

    pub fn set_labels(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn adj_mask(&self, v: Vertex) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n()).flat_map(move |u| {
            let above = if u >= 63 { 0 } else { u64::MAX << (u + 1) };
            BitIter(self.adj[u] & above).map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edges(&self) -> bool {
        self.adj.iter().any(|&a| a != 0)
    }

    /// `N_G(s)`: vertices adjacent to some member of `s`.
    pub fn open_neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(VertexSet(s.iter().fold(0, |acc, v| acc | self.adj[v])))
    }

    /// `N_G[s] = N_G(s) ∪ s`.
    pub fn neighbors_closed(&self, s: VertexSet) -> Result<VertexSet> {
        Ok(self.open_neighborhood(s)?.union(s))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.0 & !(1u64 << v)) & !self.adj[v] == 0)
    }

    /// Induced subgraph on `keep`, reindexed `0..|keep|` in increasing order,
    /// labels carried over.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep.intersection(self.vertices());
        let order: Vec<Vertex> = keep.to_vec();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let adj = order.iter().map(|&v| BitIter(self.adj[v] & keep.0).fold(0u64, |acc, w| acc | 1 << pos[w])).collect();
        let labels = order.iter().map(|&v| self.labels[v].clone()).collect();
        Graph { labels, adj }
    }

    /// `G \ s`.
    pub fn delete_vertices(&self, s: VertexSet) -> Graph {
        self.induced(self.vertices().difference(s))
    }

    /// `G \ N_G[s]` for an independent set `s`.
    pub fn delete_closed_neighborhood(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        if !self.is_independent(s) {
            return Err(Error::NotIndependent);
        }
        let closed = self.neighbors_closed(s)?;
        Ok(self.delete_vertices(closed))
    }

    /// A vertex whose neighbors form a clique. Vertices of degree at most one
    /// are simplicial.
    pub fn is_simplicial_vertex(&self, v: Vertex) -> Result<bool> {
        self.check(v)?;
        Ok(self.is_clique(self.neighbors(v)))
    }

    pub(crate) fn is_simplicial_in(&self, mask: u64, v: Vertex) -> bool {
        let nb = self.adj[v] & mask;
        BitIter(nb).all(|w| (nb & !(1u64 << w)) & !self.adj[w] == 0)
    }

    pub fn simplicial_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.is_simplicial_in(u64::MAX, v)).collect()
    }

    /// Perfect elimination ordering obtained by repeatedly removing the
    /// lowest-index simplicial vertex. `None` when the graph is not chordal.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<Vertex>> {
        let mut mask = self.vertices().0;
        let mut order = Vec::with_capacity(self.n());
        while mask != 0 {
            let v = BitIter(mask).find(|&v| self.is_simplicial_in(mask, v))?;
            order.push(v);
            mask &= !(1u64 << v);
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// Two-coloring with the lowest-index vertex of every component on the
    /// first side; `None` for non-bipartite graphs.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let c = color[u].unwrap();
                for w in BitIter(self.adj[u]) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let x = (0..n).filter(|&v| color[v] == Some(false)).collect();
        let y = (0..n).filter(|&v| color[v] == Some(true)).collect();
        Some((x, y))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub(crate) fn component_of(&self, mask: u64, v: Vertex) -> u64 {
        let mut comp = 1u64 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for u in BitIter(frontier) {
                next |= self.adj[u] & mask;
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    /// Connected components, each as a vertex set, ordered by lowest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices().0;
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.component_of(rest, v);
            out.push(VertexSet(c));
            rest &= !c;
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `G ∪ W(s)`: a pendant vertex `z_x` attached to every `x ∈ s`, appended
    /// in increasing order of `x`.
    pub fn add_whiskers(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let mut labels = self.labels.clone();
        let mut edges: Vec<(Vertex, Vertex)> = self.edges().collect();
        for v in s.iter() {
            labels.push(format!("z_{}", self.labels[v]));
            edges.push((v, labels.len() - 1));
        }
        Graph::from_edges(labels, &edges)
    }

    /// Same graph with a permutation applied: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        let n = self.n();
        let mut labels = vec![String::new(); n];
        let mut adj = vec![0u64; n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
            adj[perm[v]] = BitIter(self.adj[v]).fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Graph { labels, adj }
    }

    /// Replaces the label table.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(Error::InvalidVertex { vertex: labels.len(), n: self.n() });
        }
        let mut g = Graph::edgeless(labels)?;
        g.adj = self.adj.clone();
        Ok(g)
    }

    /// Edge set as sorted label pairs, each pair sorted.
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        out.sort();
        out
    }
}
