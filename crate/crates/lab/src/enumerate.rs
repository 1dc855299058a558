//! Graphs on `n` vertices up to isomorphism, by vertex augmentation with a
//! canonical form (colour refinement, then every ordering inside the colour
//! cells). Exhaustive up to 8 vertices; beyond that, seeded sampling.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use coverlab::family::{make_family, FamilySpec};
use coverlab::Graph;

pub const MAX_EXHAUSTIVE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    Connected,
    Bipartite,
    ConnectedBipartite,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::All => true,
            Filter::Connected => g.is_connected(),
            Filter::Bipartite => g.is_bipartite(),
            Filter::ConnectedBipartite => g.is_connected() && g.is_bipartite(),
        }
    }

    fn connected(self) -> bool {
        matches!(self, Filter::Connected | Filter::ConnectedBipartite)
    }
}

/// Upper-triangle adjacency code under an ordering: bit `k` for pair `k` in
/// `(0,1), (0,2), (1,2), (0,3), …` order.
fn code_under(adj: &[u64], order: &[usize]) -> u64 {
    let mut code = 0u64;
    let mut k = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1 << k;
            }
            k += 1;
        }
    }
    code
}

fn refined_colors(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let rank: HashMap<&(usize, Vec<usize>), usize> = distinct.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        let after = distinct.len();
        colors = next;
        if after == before {
            return colors;
        }
    }
}

/// Smallest adjacency code over orderings that list colour cells in colour
/// order. Isomorphic graphs get the same code.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.n() <= 11, "canonical codes are for small graphs");
    let adj: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v).bits()).collect();
    let colors = refined_colors(&adj);
    let ncolors = colors.iter().max().map_or(0, |c| c + 1);
    let cells: Vec<Vec<usize>> = (0..ncolors).map(|c| (0..g.n()).filter(|&v| colors[v] == c).collect()).collect();
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(g.n());
    permute_cells(&cells, 0, &mut order, &adj, &mut best);
    best
}

fn permute_cells(cells: &[Vec<usize>], c: usize, order: &mut Vec<usize>, adj: &[u64], best: &mut u64) {
    if c == cells.len() {
        *best = (*best).min(code_under(adj, order));
        return;
    }
    let mut cell = cells[c].clone();
    let len = cell.len();
    heap_permutations(&mut cell, len, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_cells(cells, c + 1, order, adj, best);
        order.truncate(len);
    });
}

fn heap_permutations(a: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(a);
        return;
    }
    for i in 0..k {
        heap_permutations(a, k - 1, f);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::with_default_labels(n, &edges).expect("small graph")
}

type Cache = Mutex<HashMap<(usize, Filter), Vec<u64>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn codes(n: usize, filter: Filter) -> Vec<u64> {
    if let Some(c) = cache().lock().expect("cache lock").get(&(n, filter)) {
        return c.clone();
    }
    let out: Vec<u64> = if n == 0 {
        if filter.connected() {
            Vec::new()
        } else {
            vec![0]
        }
    } else if n == 1 {
        vec![0]
    } else {
        // Removing a suitable vertex keeps each class: connected graphs
        // have a non-cut vertex, bipartite graphs stay bipartite.
        let parents = codes(n - 1, filter);
        let mut found = BTreeSet::new();
        for code in parents {
            let base = graph_from_code(n - 1, code);
            let mut edges: Vec<(usize, usize)> = base.edges().collect();
            let start = if filter.connected() { 1u64 } else { 0 };
            for nbrs in start..1u64 << (n - 1) {
                edges.truncate(base.edge_count());
                edges.extend((0..n - 1).filter(|&v| nbrs >> v & 1 == 1).map(|v| (v, n - 1)));
                let g = Graph::with_default_labels(n, &edges).expect("small graph");
                if filter.accepts(&g) {
                    found.insert(canonical_code(&g));
                }
            }
        }
        found.into_iter().collect()
    };
    cache().lock().expect("cache lock").insert((n, filter), out.clone());
    out
}

/// One representative per isomorphism class, labeled `x1..xn`, in a fixed
/// order. Requires `n ≤ 8`.
pub fn enumerate_graphs(n: usize, filter: Filter) -> Vec<Graph> {
    assert!(n <= MAX_EXHAUSTIVE, "exhaustive enumeration stops at {MAX_EXHAUSTIVE} vertices");
    codes(n, filter).into_iter().map(|c| graph_from_code(n, c)).collect()
}

/// Exhaustive enumeration when `n ≤ 8`, otherwise `samples` seeded random
/// graphs passing the filter (duplicates possible).
pub fn graphs_or_samples(n: usize, filter: Filter, samples: usize, seed: u64) -> Vec<Graph> {
    if n <= MAX_EXHAUSTIVE {
        return enumerate_graphs(n, filter);
    }
    let mut out = Vec::new();
    let mut attempt = 0u64;
    while out.len() < samples && attempt < 1000 * samples as u64 {
        let p = if matches!(filter, Filter::Bipartite | Filter::ConnectedBipartite) { 0.25 } else { 0.5 };
        let g = make_family(&FamilySpec::RandomGraph { n, p, seed: seed.wrapping_add(attempt) }).expect("valid");
        if filter.accepts(&g) {
            out.push(g);
        }
        attempt += 1;
    }
    out
}

/// Connected graphs on `lo..=hi` vertices.
pub fn connected_up_to(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi).flat_map(|n| enumerate_graphs(n, Filter::Connected)).collect()
}
