//! Named graph families: paths, cycles, complete graphs, star graphs based on
//! a complete graph, n-clique graphs and seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{default_labels, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Complete core on `x1..x_core`, plus independent vertices `y1..ym`;
    /// `attachments[i]` lists the (0-based) core vertices adjacent to `y_{i+1}`.
    StarComplete {
        core: usize,
        attachments: Vec<Vec<usize>>,
    },
    /// Complete graphs on `{x1..xp} ∪ {y_i1..y_im_i}` glued along the common
    /// `p`-clique.
    NClique {
        p: usize,
        sizes: Vec<usize>,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
    RandomGraph {
        n: usize,
        p: f64,
        seed: u64,
    },
}

/// Label of `y_{ij}`: `y11` when both indices are single digits, `y1_12`
/// otherwise.
pub fn clique_leaf_label(i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("y{i}{j}")
    } else {
        format!("y{i}_{j}")
    }
}

fn complete_edges(vs: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for (a, &u) in vs.iter().enumerate() {
        for &v in &vs[a + 1..] {
            out.push((u, v));
        }
    }
    out
}

pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::MalformedFamily(msg.to_string()));
    match spec {
        FamilySpec::Path { n } => {
            if *n == 0 {
                return bad("path needs at least one vertex");
            }
            let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            Graph::with_default_labels(*n, &edges)
        }
        FamilySpec::Cycle { n } => {
            if *n < 3 {
                return bad("cycle needs at least three vertices");
            }
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::with_default_labels(*n, &edges)
        }
        FamilySpec::Complete { n } => {
            let vs: Vec<_> = (0..*n).collect();
            Graph::with_default_labels(*n, &complete_edges(&vs))
        }
        FamilySpec::StarComplete { core, attachments } => {
            if *core == 0 {
                return bad("star graph needs a nonempty complete core");
            }
            let mut labels = default_labels(*core);
            labels.extend((1..=attachments.len()).map(|i| format!("y{i}")));
            let vs: Vec<_> = (0..*core).collect();
            let mut edges = complete_edges(&vs);
            for (i, nbrs) in attachments.iter().enumerate() {
                for &x in nbrs {
                    if x >= *core {
                        return bad("star attachment outside the core");
                    }
                    edges.push((x, core + i));
                }
            }
            let g = Graph::from_edges(labels, &edges)?;
            if !g.is_connected() {
                return bad("star graph must be connected");
            }
            Ok(g)
        }
        FamilySpec::NClique { p, sizes } => {
            if *p == 0 || sizes.is_empty() || sizes.contains(&0) {
                return bad("n-clique graph needs p >= 1 and every m_i >= 1");
            }
            let mut labels = default_labels(*p);
            let mut edges = Vec::new();
            for (i, &m) in sizes.iter().enumerate() {
                let mut block: Vec<Vertex> = (0..*p).collect();
                for j in 1..=m {
                    labels.push(clique_leaf_label(i + 1, j));
                    block.push(labels.len() - 1);
                }
                edges.extend(complete_edges(&block));
            }
            edges.sort();
            edges.dedup();
            Graph::from_edges(labels, &edges)
        }
        FamilySpec::RandomTree { n, seed } => {
            if *n == 0 {
                return bad("tree needs at least one vertex");
            }
            Graph::with_default_labels(*n, &random_tree_edges(*n, *seed))
        }
        FamilySpec::RandomGraph { n, p, seed } => {
            if !(0.0..=1.0).contains(p) {
                return bad("edge probability must lie in [0, 1]");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if rng.gen_bool(*p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::with_default_labels(*n, &edges)
        }
    }
}

/// Uniform labeled tree from a seeded Prüfer sequence.
fn random_tree_edges(n: usize, seed: u64) -> Vec<(Vertex, Vertex)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges.sort();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles_on_an_edge() {
        let g = make_family(&FamilySpec::NClique { p: 2, sizes: vec![1, 1] }).unwrap();
        assert_eq!(g.labels(), &["x1", "x2", "y11", "y21"]);
        assert_eq!(g.edge_count(), 5);
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn one_clique_gamma_1321() {
        let g = make_family(&FamilySpec::NClique { p: 1, sizes: vec![3, 2, 1] }).unwrap();
        assert_eq!(g.n(), 7);
        // K4 + K3 + K2 sharing x1.
        assert_eq!(g.edge_count(), 6 + 3 + 1);
        assert_eq!(g.degree(0), 6);
    }

    #[test]
    fn path_of_two_is_an_edge() {
        let g = make_family(&FamilySpec::Path { n: 2 }).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..40 {
            for n in 1..10 {
                let g = make_family(&FamilySpec::RandomTree { n, seed }).unwrap();
                assert_eq!(g.edge_count(), n - 1);
                assert!(g.is_connected());
            }
        }
        let a = make_family(&FamilySpec::RandomTree { n: 8, seed: 3 }).unwrap();
        let b = make_family(&FamilySpec::RandomTree { n: 8, seed: 3 }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn malformed_specs() {
        assert!(make_family(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(make_family(&FamilySpec::NClique { p: 0, sizes: vec![1] }).is_err());
        assert!(make_family(&FamilySpec::StarComplete { core: 2, attachments: vec![vec![5]] }).is_err());
        assert!(make_family(&FamilySpec::StarComplete { core: 2, attachments: vec![vec![]] }).is_err());
        assert!(make_family(&FamilySpec::RandomGraph { n: 3, p: 1.5, seed: 0 }).is_err());
    }

    #[test]
    fn star_graph() {
        let g = make_family(&FamilySpec::StarComplete { core: 3, attachments: vec![vec![0, 1], vec![2]] }).unwrap();
        assert_eq!(g.labels(), &["x1", "x2", "x3", "y1", "y2"]);
        assert_eq!(g.edge_count(), 3 + 3);
        assert!(g.is_chordal());
    }
}
