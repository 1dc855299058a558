//! Vertex decomposability of graphs (through their independence complexes),
//! shedding orders, the spanning bipartite graph `B_G`, the layered graph
//! `G_k`, and W-graph detection.
//!
//! All recursive checks work on vertex masks inside one fixed graph and
//! memoize on the mask. Disconnected inputs are split into components first:
//! a disjoint union is vertex decomposable iff every part is.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, Vertex, VertexSet};

#[inline]
fn bit(v: Vertex) -> u64 {
    1u64 << v
}

fn has_edge_within(g: &Graph, mask: u64) -> bool {
    BitIter(mask).any(|v| g.adj_mask(v) & mask != 0)
}

fn closed_nbhd(g: &Graph, v: Vertex, mask: u64) -> u64 {
    (g.adj_mask(v) | bit(v)) & mask
}

/// Calls `f` on every maximal independent set of `g[mask]` (Bron–Kerbosch
/// with pivoting on the complement). Stops early when `f` returns `false`;
/// the return value reports whether the enumeration ran to completion.
pub fn for_each_maximal_independent_set(g: &Graph, mask: u64, f: &mut dyn FnMut(u64) -> bool) -> bool {
    fn rec(g: &Graph, mask: u64, r: u64, mut p: u64, mut x: u64, f: &mut dyn FnMut(u64) -> bool) -> bool {
        if p == 0 && x == 0 {
            return f(r);
        }
        let non_nbrs = |u: Vertex| mask & !g.adj_mask(u) & !bit(u);
        let pivot = BitIter(p | x)
            .max_by_key(|&u| ((p & non_nbrs(u)).count_ones(), std::cmp::Reverse(u)))
            .expect("p | x is nonempty");
        for v in BitIter(p & !non_nbrs(pivot)) {
            if !rec(g, mask, r | bit(v), p & non_nbrs(v), x & non_nbrs(v), f) {
                return false;
            }
            p &= !bit(v);
            x |= bit(v);
        }
        true
    }
    rec(g, mask, 0, mask, 0, f)
}

/// All maximal independent sets of `g`, sorted.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_maximal_independent_set(g, g.vertices().bits(), &mut |s| {
        out.push(VertexSet(s));
        true
    });
    out.sort();
    out
}

/// Every independent set of `g` (including the empty set), sorted.
pub fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    fn rec(g: &Graph, chosen: u64, cand: u64, out: &mut Vec<VertexSet>) {
        out.push(VertexSet(chosen));
        for v in BitIter(cand) {
            // Only extend by vertices above v to list each set once.
            let above = if v >= 63 { 0 } else { u64::MAX << (v + 1) };
            rec(g, chosen | bit(v), cand & above & !g.adj_mask(v), out);
        }
    }
    let mut out = Vec::new();
    rec(g, 0, g.vertices().bits(), &mut out);
    out.sort();
    out
}

/// Breadth-first walk over the distinct graphs `G \ N[A]`, `A` independent.
/// Yields `(remaining mask, one independent set A producing it)`, starting
/// with `(V, ∅)`; successors are explored in increasing vertex order.
pub(crate) fn closed_neighborhood_deletions(g: &Graph) -> Vec<(u64, u64)> {
    let mut seen: HashMap<u64, u64> = HashMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let all = g.vertices().bits();
    seen.insert(all, 0);
    queue.push_back(all);
    while let Some(rest) = queue.pop_front() {
        let a = seen[&rest];
        order.push((rest, a));
        for v in BitIter(rest) {
            let next = rest & !closed_nbhd(g, v, rest);
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(next) {
                e.insert(a | bit(v));
                queue.push_back(next);
            }
        }
    }
    order
}

/// Memoized vertex decomposability over induced subgraphs of one graph.
pub struct VdChecker<'g> {
    g: &'g Graph,
    memo: HashMap<u64, bool>,
}

impl<'g> VdChecker<'g> {
    pub fn new(g: &'g Graph) -> Self {
        VdChecker { g, memo: HashMap::new() }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    /// Is `x` a shedding vertex of `g[mask]`: every maximal independent set
    /// of `g[mask] \ x` meets `N(x)`.
    pub fn is_shedding(&self, mask: u64, x: Vertex) -> bool {
        let g = self.g;
        let nx = g.adj_mask(x) & mask;
        if nx == 0 {
            return false;
        }
        let rest = mask & !nx & !bit(x);
        // Look for a maximal independent set of g[mask \ N[x]] that dominates
        // N(x); such a set is maximal in g[mask] \ x and avoids N(x).
        for_each_maximal_independent_set(g, rest, &mut |s| {
            let dominated = BitIter(s).fold(0u64, |acc, v| acc | g.adj_mask(v));
            nx & !dominated != 0
        })
    }

    pub fn is_vd(&mut self, mask: u64) -> bool {
        let g = self.g;
        let mut active = BitIter(mask).filter(|&v| g.adj_mask(v) & mask != 0).fold(0u64, |a, v| a | bit(v));
        while active != 0 {
            let v = active.trailing_zeros() as usize;
            let comp = g.component_of(active, v);
            if !self.is_vd_connected(comp) {
                return false;
            }
            active &= !comp;
        }
        true
    }

    fn is_vd_connected(&mut self, comp: u64) -> bool {
        if let Some(&r) = self.memo.get(&comp) {
            return r;
        }
        let result = self.candidate_order(comp).into_iter().any(|(x, known_shedding)| {
            (known_shedding || self.is_shedding(comp, x))
                && self.is_vd(comp & !bit(x))
                && self.is_vd(comp & !closed_nbhd(self.g, x, comp))
        });
        self.memo.insert(comp, result);
        result
    }

    /// Vertices of `g[mask]` in the preferred trial order: neighbors of a
    /// simplicial vertex first (these are always shedding vertices), then
    /// the rest, each group by increasing index. Isolated vertices are never
    /// shedding and are left out.
    fn candidate_order(&self, mask: u64) -> Vec<(Vertex, bool)> {
        let g = self.g;
        let near_simplicial = BitIter(mask)
            .filter(|&s| g.adj_mask(s) & mask != 0 && g.is_simplicial_in(mask, s))
            .fold(0u64, |acc, s| acc | (g.adj_mask(s) & mask));
        let mut out: Vec<(Vertex, bool)> = BitIter(near_simplicial).map(|v| (v, true)).collect();
        out.extend(BitIter(mask & !near_simplicial).filter(|&v| g.adj_mask(v) & mask != 0).map(|v| (v, false)));
        out
    }

    /// Deterministic shedding order for `g[mask]`, if it is vertex
    /// decomposable. Returns `(shedding order, remaining independent mask)`.
    fn shedding_order(&mut self, mask: u64) -> Option<(Vec<Vertex>, u64)> {
        if !self.is_vd(mask) {
            return None;
        }
        let mut rest = mask;
        let mut order = Vec::new();
        while has_edge_within(self.g, rest) {
            let x = self
                .candidate_order(rest)
                .into_iter()
                .find(|&(x, known)| (known || self.is_shedding(rest, x)) && self.is_vd(rest & !bit(x)))
                .map(|(x, _)| x)
                .expect("a vertex decomposable graph with edges has a usable shedding vertex");
            order.push(x);
            rest &= !bit(x);
        }
        Some((order, rest))
    }
}

pub fn is_vertex_decomposable(g: &Graph) -> bool {
    VdChecker::new(g).is_vd(g.vertices().bits())
}

pub fn is_shedding_vertex(g: &Graph, v: Vertex) -> Result<bool> {
    g.check(v)?;
    Ok(VdChecker::new(g).is_shedding(g.vertices().bits(), v))
}

/// Shedding order plus i-order of a vertex decomposable graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheddingDecomposition {
    pub shedding_order: Vec<Vertex>,
    pub i_order: Vec<Vertex>,
}

impl SheddingDecomposition {
    pub fn shedding_set(&self) -> VertexSet {
        self.shedding_order.iter().copied().collect()
    }

    pub fn independent_set(&self) -> VertexSet {
        self.i_order.iter().copied().collect()
    }

    /// Builds a decomposition from labels, e.g. to check a hand-given order.
    pub fn from_labels(g: &Graph, shedding: &[&str], independent: &[&str]) -> Result<Self> {
        let idx = |l: &&str| g.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
        Ok(SheddingDecomposition {
            shedding_order: shedding.iter().map(idx).collect::<Result<_>>()?,
            i_order: independent.iter().map(idx).collect::<Result<_>>()?,
        })
    }

    /// Checks the invariants: the two orders partition `V(G)`, the i-order is
    /// independent, and every prefix deletion removes a shedding vertex and
    /// leaves a vertex decomposable graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let invalid = |m: String| Err(Error::InvalidDecomposition(m));
        for &v in self.shedding_order.iter().chain(&self.i_order) {
            g.check(v)?;
        }
        let shed = self.shedding_set();
        let ind = self.independent_set();
        if shed.len() != self.shedding_order.len() || ind.len() != self.i_order.len() {
            return invalid("repeated vertex".into());
        }
        if !shed.intersection(ind).is_empty() || shed.union(ind) != g.vertices() {
            return invalid("orders do not partition the vertex set".into());
        }
        if !g.is_independent(ind) {
            return invalid("i-order is not an independent set".into());
        }
        let mut chk = VdChecker::new(g);
        let mut rest = g.vertices().bits();
        for &x in &self.shedding_order {
            if !chk.is_shedding(rest, x) {
                return invalid(format!("{} is not a shedding vertex at its step", g.label(x)));
            }
            rest &= !bit(x);
            if !chk.is_vd(rest) {
                return invalid(format!("deleting {} leaves a graph that is not vertex decomposable", g.label(x)));
            }
        }
        Ok(())
    }
}

/// Deterministic decomposition: at each step the first vertex, among
/// neighbors of simplicial vertices and then all others (lowest index first),
/// that is shedding and keeps the remainder vertex decomposable.
pub fn shedding_decomposition(g: &Graph) -> Option<SheddingDecomposition> {
    let (order, rest) = VdChecker::new(g).shedding_order(g.vertices().bits())?;
    Some(SheddingDecomposition { shedding_order: order, i_order: BitIter(rest).collect() })
}

/// All distinct i-order sets reachable by some valid shedding order. The
/// spanning bipartite graph only depends on this set. Returns the sets and
/// whether the search finished within `budget` visited states.
pub fn all_independent_parts(g: &Graph, budget: usize) -> (Vec<VertexSet>, bool) {
    let mut chk = VdChecker::new(g);
    let all = g.vertices().bits();
    let mut finals = BTreeSet::new();
    if !chk.is_vd(all) {
        return (Vec::new(), true);
    }
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![all];
    seen.insert(all);
    let mut complete = true;
    while let Some(rest) = stack.pop() {
        if seen.len() > budget {
            complete = false;
            break;
        }
        if !has_edge_within(g, rest) {
            finals.insert(VertexSet(rest));
            continue;
        }
        for x in BitIter(rest) {
            if g.adj_mask(x) & rest == 0 {
                continue;
            }
            let next = rest & !bit(x);
            if !seen.contains(&next) && chk.is_shedding(rest, x) && chk.is_vd(next) {
                seen.insert(next);
                stack.push(next);
            }
        }
    }
    (finals.into_iter().collect(), complete)
}

/// Spanning bipartite subgraph between the i-order part and the shedding
/// part: the edges of `g` with one end in each part.
pub fn build_bg(g: &Graph, d: &SheddingDecomposition) -> Result<Graph> {
    d.validate(g)?;
    Ok(bg_for_independent_part(g, d.independent_set()))
}

pub(crate) fn bg_for_independent_part(g: &Graph, ind: VertexSet) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = g.edges().filter(|&(u, v)| ind.contains(u) != ind.contains(v)).collect();
    Graph::from_edges(g.labels().to_vec(), &edges).expect("subgraph of a valid graph")
}

/// The layered graph `G_k` on `x_{i,p}` (label `{label}_{p}`, index
/// `i*k + p - 1`), with `x_{i,p} ~ x_{j,q}` iff `x_i ~ x_j` and `p + q ≤ k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredGraph {
    pub base: Graph,
    pub k: usize,
    pub result: Graph,
}

impl LayeredGraph {
    pub fn index(&self, i: Vertex, p: usize) -> Vertex {
        i * self.k + p - 1
    }

    /// `(base vertex, layer)` of a vertex of the layered graph.
    pub fn coords(&self, v: Vertex) -> (Vertex, usize) {
        (v / self.k, v % self.k + 1)
    }
}

pub fn layered_label(base: &str, p: usize) -> String {
    format!("{base}_{p}")
}

pub fn build_gk(g: &Graph, k: usize) -> Result<LayeredGraph> {
    if k < 1 {
        return Err(Error::InvalidLayerCount(k));
    }
    let n = g.n();
    if n * k > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices(n * k));
    }
    let labels = (0..n).flat_map(|i| (1..=k).map(move |p| (i, p))).map(|(i, p)| layered_label(g.label(i), p)).collect();
    let mut edges = Vec::new();
    for (i, j) in g.edges() {
        for p in 1..=k {
            for q in 1..=k + 1 - p {
                edges.push((i * k + p - 1, j * k + q - 1));
            }
        }
    }
    let result = Graph::from_edges(labels, &edges)?;
    Ok(LayeredGraph { base: g.clone(), k, result })
}

/// Deletes `N[top]` from `G_k`, maps survivors by `shift(i, p)` and compares
/// with `target` (indices `i*target_k + p - 1`). Survivors the map sends
/// nowhere must be isolated; the mapped vertices must cover `target`.
fn collapse_matches(
    gk: &LayeredGraph,
    top: VertexSet,
    target: &LayeredGraph,
    shift: impl Fn(Vertex, usize) -> Option<usize>,
) -> bool {
    let h = &gk.result;
    let removed = h.neighbors_closed(top).expect("valid set");
    let survivors = h.vertices().difference(removed);
    let tk = target.k;
    let mut image = vec![None; h.n()];
    let mut covered = VertexSet::EMPTY;
    for v in survivors.iter() {
        let (i, p) = gk.coords(v);
        match shift(i, p) {
            Some(q) if (1..=tk).contains(&q) => {
                let w = i * tk + q - 1;
                image[v] = Some(w);
                covered.insert(w);
            }
            _ => {
                if !h.neighbors(v).intersection(survivors).is_empty() {
                    return false;
                }
            }
        }
    }
    if covered != target.result.vertices() {
        return false;
    }
    let mut mapped: Vec<(Vertex, Vertex)> = Vec::new();
    for (u, v) in h.edges() {
        if survivors.contains(u) && survivors.contains(v) {
            let (a, b) = (image[u].expect("non-isolated"), image[v].expect("non-isolated"));
            mapped.push((a.min(b), a.max(b)));
        }
    }
    mapped.sort();
    let expected: Vec<(Vertex, Vertex)> = target.result.edges().collect();
    mapped == expected
}

fn empty_layered(g: &Graph) -> LayeredGraph {
    LayeredGraph { base: g.clone(), k: 0, result: Graph::edgeless(Vec::new()).expect("empty") }
}

/// `G_k \ N[x_{1,k},…,x_{n,k}]`, with layers shifted down by one, equals
/// `G_{k-2}` (the empty graph when `k = 2`). Vertices of `G` without
/// neighbors leave isolated copies in layer 1, which are ignored.
pub fn layer_collapse_check(g: &Graph, k: usize) -> bool {
    if k < 2 {
        return false;
    }
    let Ok(gk) = build_gk(g, k) else { return false };
    let top: VertexSet = (0..g.n()).map(|i| gk.index(i, k)).collect();
    let target = if k == 2 { empty_layered(g) } else { build_gk(g, k - 2).expect("smaller than G_k") };
    if k == 2 {
        // Only isolated layer-1 copies may survive.
        let rest = gk.result.vertices().difference(gk.result.neighbors_closed(top).expect("valid"));
        return rest.iter().all(|v| g.degree(gk.coords(v).0) == 0);
    }
    collapse_matches(&gk, top, &target, |_, p| p.checked_sub(1))
}

/// Bipartite one-step collapse: deleting `N[x_{i,k} : x_i ∈ X]` from `G_k`
/// and shifting the `Y`-side layers down by one gives `G_{k-1}`.
pub fn bipartite_layer_collapse_check(g: &Graph, k: usize) -> Result<bool> {
    let (x_side, _) = g.bipartition().ok_or(Error::NotBipartite)?;
    if k < 2 {
        return Ok(false);
    }
    let gk = build_gk(g, k)?;
    let top: VertexSet = x_side.iter().map(|i| gk.index(i, k)).collect();
    let target = build_gk(g, k - 1)?;
    Ok(collapse_matches(&gk, top, &target, |i, p| if x_side.contains(i) { Some(p) } else { p.checked_sub(1) }))
}

/// `G \ N[A]` is empty or has a simplicial vertex for every independent `A`,
/// including `A = ∅`.
pub fn is_w_graph(g: &Graph) -> bool {
    w_graph_witness(g).is_none()
}

/// An independent set `A` for which `G \ N[A]` is nonempty without a
/// simplicial vertex.
pub fn w_graph_witness(g: &Graph) -> Option<VertexSet> {
    closed_neighborhood_deletions(g)
        .into_iter()
        .find(|&(rest, _)| rest != 0 && !BitIter(rest).any(|v| g.is_simplicial_in(rest, v)))
        .map(|(_, a)| VertexSet(a))
}

/// Recursive test for sequentially Cohen–Macaulay bipartite graphs: some leaf
/// `x` with neighbor `y` leaves both `G \ N[x]` and `G \ N[y]` SCM.
pub fn is_scm_bipartite(g: &Graph) -> Result<bool> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    fn rec(g: &Graph, mask: u64, memo: &mut HashMap<u64, bool>) -> bool {
        if !has_edge_within(g, mask) {
            return true;
        }
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let mut result = false;
        for x in BitIter(mask) {
            let nx = g.adj_mask(x) & mask;
            if nx.count_ones() != 1 {
                continue;
            }
            let y = nx.trailing_zeros() as usize;
            if rec(g, mask & !closed_nbhd(g, x, mask), memo) && rec(g, mask & !closed_nbhd(g, y, mask), memo) {
                result = true;
                break;
            }
        }
        memo.insert(mask, result);
        result
    }
    Ok(rec(g, g.vertices().bits(), &mut HashMap::new()))
}

/// Outcome of checking `B_{G \ N[A]}` over all independent sets `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BgFamilyReport {
    pub holds: bool,
    /// One independent set `A` for each distinct failing `G \ N[A]`, in
    /// breadth-first order from `A = ∅`.
    pub failures: Vec<VertexSet>,
    pub graphs_checked: usize,
}

/// Evaluates `B_{G \ N[A]}` (deterministic decomposition) for every
/// independent set `A`. Requires `g` to be vertex decomposable.
pub fn bg_family_report(g: &Graph) -> Result<BgFamilyReport> {
    let mut chk = VdChecker::new(g);
    if !chk.is_vd(g.vertices().bits()) {
        return Err(Error::NotVertexDecomposable);
    }
    let deletions = closed_neighborhood_deletions(g);
    let mut failures = Vec::new();
    for &(rest, a) in &deletions {
        let (_, ind) = chk.shedding_order(rest).expect("closed under N[A]-deletion");
        let b = bg_for_independent_part(&g.induced(VertexSet(rest)), compact(rest, ind));
        if !is_vertex_decomposable(&b) {
            failures.push(VertexSet(a));
        }
    }
    Ok(BgFamilyReport { holds: failures.is_empty(), failures, graphs_checked: deletions.len() })
}

pub fn bg_family_vd(g: &Graph) -> Result<bool> {
    Ok(bg_family_report(g)?.holds)
}

/// Re-expresses `sub ⊆ mask` in the compacted indexing of `g.induced(mask)`.
fn compact(mask: u64, sub: u64) -> VertexSet {
    BitIter(mask).enumerate().filter(|&(_, v)| sub >> v & 1 == 1).map(|(i, _)| i).collect()
}

/// Per-`A` comparison of the verdict across all valid shedding orders.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRobustness {
    /// Some order gives a vertex decomposable `B_{G\N[A]}` for every `A`.
    pub holds_for_some_order: bool,
    /// Every order does.
    pub holds_for_every_order: bool,
    /// `A` values where the verdict depends on the chosen order.
    pub order_dependent: Vec<VertexSet>,
    pub complete: bool,
}

pub fn bg_family_order_robustness(g: &Graph, budget: usize) -> Result<OrderRobustness> {
    if !is_vertex_decomposable(g) {
        return Err(Error::NotVertexDecomposable);
    }
    let mut some = true;
    let mut every = true;
    let mut dependent = Vec::new();
    let mut complete = true;
    for (rest, a) in closed_neighborhood_deletions(g) {
        let h = g.induced(VertexSet(rest));
        let (parts, done) = all_independent_parts(&h, budget);
        complete &= done;
        let verdicts: BTreeSet<bool> =
            parts.iter().map(|&ind| is_vertex_decomposable(&bg_for_independent_part(&h, ind))).collect();
        if !verdicts.contains(&true) {
            some = false;
        }
        if verdicts.contains(&false) {
            every = false;
        }
        if verdicts.len() > 1 {
            dependent.push(VertexSet(a));
        }
    }
    Ok(OrderRobustness {
        holds_for_some_order: some,
        holds_for_every_order: every,
        order_dependent: dependent,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};

    fn cycle(n: usize) -> Graph {
        make_family(&FamilySpec::Cycle { n }).unwrap()
    }

    fn path(n: usize) -> Graph {
        make_family(&FamilySpec::Path { n }).unwrap()
    }

    pub(crate) fn triangle_square() -> Graph {
        // x1-x2, x2-x3, x2-x4, x3-x4, x4-x5, x4-x7, x5-x6, x6-x7
        let edges = [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4), (3, 6), (4, 5), (5, 6)];
        Graph::with_default_labels(7, &edges).unwrap()
    }

    /// Literal reading: no independent set of `G \ N[x]` is a maximal
    /// independent set of `G \ x`.
    fn shedding_literal(g: &Graph, x: Vertex) -> bool {
        let all = g.vertices().bits();
        let minus_x = all & !bit(x);
        let h = all & !closed_nbhd(g, x, all);
        let mut sub = h;
        loop {
            let independent = BitIter(sub).all(|v| g.adj_mask(v) & sub == 0);
            if independent {
                let maximal = BitIter(minus_x & !sub).all(|w| g.adj_mask(w) & sub != 0);
                if maximal {
                    return false;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & h;
        }
        true
    }

    /// Definition-level recursion without memo, splitting, or shortcuts.
    fn vd_literal(g: &Graph) -> bool {
        if !g.has_edges() {
            return true;
        }
        (0..g.n()).any(|x| {
            shedding_literal(g, x)
                && vd_literal(&g.delete_vertices(VertexSet::singleton(x)))
                && vd_literal(&g.delete_closed_neighborhood(VertexSet::singleton(x)).unwrap())
        })
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len()).map(move |m| {
            let edges: Vec<_> = BitIter(m).map(|i| pairs[i]).collect();
            Graph::with_default_labels(n, &edges).unwrap()
        })
    }

    #[test]
    fn shedding_formulations_agree_up_to_six_vertices() {
        for n in 1..=6 {
            for g in all_graphs(n) {
                for x in 0..n {
                    assert_eq!(is_shedding_vertex(&g, x).unwrap(), shedding_literal(&g, x), "{g:?} at {x}");
                }
            }
        }
    }

    #[test]
    fn vd_matches_literal_recursion_up_to_six_vertices() {
        for n in 1..=6 {
            for g in all_graphs(n) {
                assert_eq!(is_vertex_decomposable(&g), vd_literal(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn shedding_examples() {
        let g = triangle_square();
        assert!(is_shedding_vertex(&g, g.index_of("x2").unwrap()).unwrap());
        let e = path(2);
        assert!(is_shedding_vertex(&e, 0).unwrap());
        let two = Graph::with_default_labels(2, &[]).unwrap();
        assert!(!is_shedding_vertex(&two, 0).unwrap());
        assert!(!is_shedding_vertex(&two, 1).unwrap());
        assert!(is_shedding_vertex(&two, 2).is_err());
    }

    #[test]
    fn vd_examples() {
        assert!(is_vertex_decomposable(&triangle_square()));
        assert!(!is_vertex_decomposable(&cycle(6)));
        assert!(!is_vertex_decomposable(&cycle(4)));
        assert!(is_vertex_decomposable(&cycle(5)));
        assert!(is_vertex_decomposable(&Graph::with_default_labels(4, &[]).unwrap()));
        assert!(is_vertex_decomposable(&Graph::with_default_labels(0, &[]).unwrap()));
    }

    #[test]
    fn triangle_square_decomposition() {
        let g = triangle_square();
        let d = shedding_decomposition(&g).unwrap();
        d.validate(&g).unwrap();
        assert_eq!(g.set_labels(d.shedding_set()), vec!["x2", "x4", "x6"]);
        assert_eq!(d.shedding_order, vec![1, 3, 5]);
        assert_eq!(d.i_order.iter().map(|&v| g.label(v)).collect::<Vec<_>>(), vec!["x1", "x3", "x5", "x7"]);
        let hand = SheddingDecomposition::from_labels(&g, &["x2", "x4", "x6"], &["x1", "x3", "x5", "x7"]).unwrap();
        hand.validate(&g).unwrap();
        let b = build_bg(&g, &hand).unwrap();
        let expected: Vec<(String, String)> =
            [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x6"), ("x4", "x7"), ("x6", "x7")]
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
        assert_eq!(b.labeled_edges(), expected);
    }

    #[test]
    fn decomposition_edge_cases() {
        let iso = Graph::with_default_labels(3, &[]).unwrap();
        let d = shedding_decomposition(&iso).unwrap();
        assert!(d.shedding_order.is_empty());
        assert_eq!(d.i_order, vec![0, 1, 2]);
        assert!(shedding_decomposition(&cycle(4)).is_none());
        let e = path(2);
        let d = SheddingDecomposition { shedding_order: vec![0], i_order: vec![1] };
        assert_eq!(build_bg(&e, &d).unwrap().edge_count(), 1);
    }

    #[test]
    fn invalid_decompositions_are_rejected() {
        let g = triangle_square();
        let bad = SheddingDecomposition::from_labels(&g, &["x2", "x4"], &["x1", "x3", "x5", "x6", "x7"]).unwrap();
        assert!(matches!(bad.validate(&g), Err(Error::InvalidDecomposition(_))));
        let missing = SheddingDecomposition::from_labels(&g, &["x2", "x4"], &["x1"]).unwrap();
        assert!(build_bg(&g, &missing).is_err());
        // x1 is a leaf: never a shedding vertex of this graph.
        let wrong = SheddingDecomposition::from_labels(&g, &["x1", "x4", "x6"], &["x2", "x3", "x5", "x7"]).unwrap();
        assert!(wrong.validate(&g).is_err());
    }

    #[test]
    fn diamond_bg_is_square() {
        let diamond = make_family(&FamilySpec::NClique { p: 2, sizes: vec![1, 1] }).unwrap();
        let d = shedding_decomposition(&diamond).unwrap();
        let b = build_bg(&diamond, &d).unwrap();
        assert_eq!(b.edge_count(), 4);
        assert!((0..4).all(|v| b.degree(v) == 2));
        assert!(b.is_bipartite() && b.is_connected());
    }

    #[test]
    fn gk_examples() {
        let e = path(2);
        let g2 = build_gk(&e, 2).unwrap();
        assert_eq!(
            g2.result.labeled_edges(),
            vec![
                ("x1_1".to_string(), "x2_1".to_string()),
                ("x1_1".to_string(), "x2_2".to_string()),
                ("x1_2".to_string(), "x2_1".to_string())
            ]
        );
        let g1 = build_gk(&cycle(5), 1).unwrap();
        assert_eq!(g1.result.edge_count(), 5);
        assert_eq!(g1.result.label(0), "x1_1");
        assert_eq!(build_gk(&e, 0).unwrap_err(), Error::InvalidLayerCount(0));
    }

    #[test]
    fn gk_matches_pair_enumeration() {
        // Oracle: test every vertex pair of G_k against the defining rule.
        let g = path(3);
        let k = 3;
        let gk = build_gk(&g, k).unwrap();
        assert_eq!(gk.result.n(), 9);
        let mut count = 0;
        for u in 0..9 {
            for v in 0..9 {
                let (i, p) = (u / k, u % k + 1);
                let (j, q) = (v / k, v % k + 1);
                let rule = g.has_edge(i, j) && p + q <= k + 1;
                assert_eq!(gk.result.has_edge(u, v), rule);
                count += (rule && u < v) as usize;
            }
        }
        // Six layer pairs per base edge satisfy p + q <= 4.
        assert_eq!(count, 12);
        assert_eq!(gk.result.edge_count(), 12);
    }

    #[test]
    fn layer_collapse_examples() {
        assert!(layer_collapse_check(&path(3), 3));
        assert!(layer_collapse_check(&cycle(5), 4));
        assert!(layer_collapse_check(&path(2), 3));
        assert!(layer_collapse_check(&path(2), 2));
        let with_isolated = Graph::with_default_labels(3, &[(0, 1)]).unwrap();
        assert!(layer_collapse_check(&with_isolated, 4));
        assert!(!layer_collapse_check(&path(3), 1));
        for k in 2..=4 {
            assert!(bipartite_layer_collapse_check(&path(4), k).unwrap());
            assert!(bipartite_layer_collapse_check(&with_isolated, k).unwrap());
        }
        assert_eq!(bipartite_layer_collapse_check(&cycle(3), 2), Err(Error::NotBipartite));
    }

    #[test]
    fn w_graph_examples() {
        assert!(is_w_graph(&path(4)));
        assert!(!is_w_graph(&cycle(6)));
        assert_eq!(w_graph_witness(&cycle(6)), Some(VertexSet::EMPTY));
        let k4 = make_family(&FamilySpec::Complete { n: 4 }).unwrap();
        assert!(is_w_graph(&k4));
        assert!(is_w_graph(&Graph::with_default_labels(0, &[]).unwrap()));
    }

    #[test]
    fn scm_bipartite_examples() {
        assert!(is_scm_bipartite(&path(5)).unwrap());
        assert!(!is_scm_bipartite(&cycle(4)).unwrap());
        assert!(!is_scm_bipartite(&cycle(6)).unwrap());
        assert_eq!(is_scm_bipartite(&cycle(5)), Err(Error::NotBipartite));
    }

    #[test]
    fn bg_family_on_triangle_square() {
        let g = triangle_square();
        let r = bg_family_report(&g).unwrap();
        assert!(!r.holds);
        assert_eq!(r.failures, vec![VertexSet::EMPTY]);
        assert!(!bg_family_vd(&g).unwrap());
        assert_eq!(bg_family_vd(&cycle(4)), Err(Error::NotVertexDecomposable));
    }

    #[test]
    fn bg_family_on_forests() {
        for seed in 0..10 {
            let t = make_family(&FamilySpec::RandomTree { n: 7, seed }).unwrap();
            assert!(bg_family_vd(&t).unwrap());
        }
    }

    #[test]
    fn independent_set_enumeration() {
        let p3 = path(3);
        let sets = independent_sets(&p3);
        assert_eq!(sets.len(), 5); // ∅, {1}, {2}, {3}, {1,3}
        let mis = maximal_independent_sets(&p3);
        assert_eq!(mis, vec![VertexSet::singleton(1), VertexSet::from_iter([0, 2])]);
        let deletions = closed_neighborhood_deletions(&cycle(6));
        assert_eq!(deletions[0], (0b111111, 0));
    }

    #[test]
    fn every_independent_part_gives_a_valid_decomposition() {
        let g = triangle_square();
        let (parts, complete) = all_independent_parts(&g, 10_000);
        assert!(complete);
        assert!(parts.contains(&g.set_of(&["x1", "x3", "x5", "x7"]).unwrap()));
        for ind in parts {
            assert!(g.is_independent(ind));
        }
    }
}
