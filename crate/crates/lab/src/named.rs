//! The named graphs used throughout the reports and goldens.

use coverlab::family::{make_family, FamilySpec};
use coverlab::{Graph, VertexSet};

/// Seven vertices whose shedding order is `x2, x4, x6`.
pub fn triangle_square() -> Graph {
    Graph::with_default_labels(7, &[(0, 1), (1, 2), (1, 3), (2, 3), (3, 4), (3, 6), (4, 5), (5, 6)]).expect("valid")
}

/// The six-vertex graph `G` before whiskering.
pub fn diamond_tail() -> Graph {
    Graph::with_default_labels(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5)]).expect("valid")
}

/// `G ∪ W(x6)`.
pub fn whiskered_diamond_tail() -> Graph {
    let g = diamond_tail();
    g.add_whiskers(VertexSet::singleton(5)).expect("valid")
}

pub fn diamond() -> Graph {
    Graph::from_labeled_edges(&[("a", "b"), ("b", "c"), ("a", "c"), ("a", "d"), ("c", "d")]).expect("valid")
}

pub fn n_clique(p: usize, sizes: &[usize]) -> Graph {
    make_family(&FamilySpec::NClique { p, sizes: sizes.to_vec() }).expect("valid")
}

/// `(name, graph)` for every named instance with a golden report.
pub fn named_instances() -> Vec<(&'static str, Graph)> {
    vec![
        ("triangle-square", triangle_square()),
        ("whiskered-diamond-tail", whiskered_diamond_tail()),
        ("diamond", diamond()),
        ("gamma-2-1-1", n_clique(2, &[1, 1])),
        ("gamma-1-3-2-1", n_clique(1, &[3, 2, 1])),
    ]
}

pub fn by_name(name: &str) -> Option<Graph> {
    match name {
        "gamma-2-2-2" => Some(n_clique(2, &[2, 2])),
        _ => named_instances().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g),
    }
}
