//! Per-graph structural summaries and small composite operations shared by
//! the command line and the browser demo.

use std::fmt::Write as _;

use crate::decomp::{
    bg_family_report, build_bg, build_gk, is_vertex_decomposable, shedding_decomposition, w_graph_witness,
};
use crate::homology::Field;
use crate::ideal::{cover_ideal, edge_ideal, symbolic_power_bruteforce};
use crate::io::write_edge_list;
use crate::resolution::{betti_table, componentwise_linearity, BettiTable, ClMethod, ClReport};
use crate::{Graph, MonomialIdeal, Result, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub shedding_order: Vec<String>,
    pub i_order: Vec<String>,
    pub bg_edges: Vec<(String, String)>,
    pub bg_vertex_decomposable: bool,
    pub bg_family_vertex_decomposable: bool,
    /// Independent sets `A` whose `B_{G\N[A]}` is not vertex decomposable.
    pub bg_family_failures: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub simplicial_vertices: Vec<String>,
    pub chordal: bool,
    pub bipartition: Option<(Vec<String>, Vec<String>)>,
    pub vertex_decomposable: bool,
    pub w_graph: bool,
    /// An independent `A` with `G \ N[A]` nonempty and free of simplicial
    /// vertices, when there is one.
    pub w_obstruction: Option<Vec<String>>,
    pub decomposition: Option<Decomposition>,
}

pub fn analyze(g: &Graph) -> Result<AnalyzeReport> {
    let names = |s: VertexSet| g.set_labels(s);
    let vd = is_vertex_decomposable(g);
    let decomposition = match shedding_decomposition(g) {
        Some(d) => {
            let bg = build_bg(g, &d)?;
            let family = bg_family_report(g)?;
            Some(Decomposition {
                shedding_order: d.shedding_order.iter().map(|&v| g.label(v).to_string()).collect(),
                i_order: d.i_order.iter().map(|&v| g.label(v).to_string()).collect(),
                bg_edges: bg.labeled_edges(),
                bg_vertex_decomposable: is_vertex_decomposable(&bg),
                bg_family_vertex_decomposable: family.holds,
                bg_family_failures: family.failures.iter().map(|&a| names(a)).collect(),
            })
        }
        None => None,
    };
    let witness = w_graph_witness(g);
    Ok(AnalyzeReport {
        vertices: g.labels().to_vec(),
        edges: g.labeled_edges(),
        simplicial_vertices: names(g.simplicial_vertices()),
        chordal: g.is_chordal(),
        bipartition: g.bipartition().map(|(a, b)| (names(a), names(b))),
        vertex_decomposable: vd,
        w_graph: witness.is_none(),
        w_obstruction: witness.map(names),
        decomposition,
    })
}

fn list(v: &[String]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

fn edges_text(e: &[(String, String)]) -> String {
    if e.is_empty() {
        "-".into()
    } else {
        e.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ")
    }
}

impl AnalyzeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let yn = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(s, "vertices: {} ({})", self.vertices.len(), list(&self.vertices));
        let _ = writeln!(s, "edges: {} ({})", self.edges.len(), edges_text(&self.edges));
        let _ = writeln!(s, "simplicial: {}", list(&self.simplicial_vertices));
        let _ = writeln!(s, "chordal: {}", yn(self.chordal));
        match &self.bipartition {
            Some((a, b)) => {
                let _ = writeln!(s, "bipartite: yes ({} | {})", list(a), list(b));
            }
            None => s.push_str("bipartite: no\n"),
        }
        let _ = writeln!(s, "vertex decomposable: {}", yn(self.vertex_decomposable));
        match &self.w_obstruction {
            Some(a) => {
                let _ = writeln!(s, "W-graph: no (no simplicial vertex after deleting N[{{{}}}])", a.join(","));
            }
            None => s.push_str("W-graph: yes\n"),
        }
        if let Some(d) = &self.decomposition {
            let _ = writeln!(s, "shedding order: {}", list(&d.shedding_order));
            let _ = writeln!(s, "i-order: {}", list(&d.i_order));
            let _ = writeln!(s, "B_G edges: {}", edges_text(&d.bg_edges));
            let _ = writeln!(s, "B_G vertex decomposable: {}", yn(d.bg_vertex_decomposable));
            let _ = writeln!(s, "every B_(G\\N[A]) vertex decomposable: {}", yn(d.bg_family_vertex_decomposable));
            for a in &d.bg_family_failures {
                let _ = writeln!(s, "  fails at A = {{{}}}", a.join(","));
            }
        }
        s
    }
}

/// Which ideal of a graph to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealKind {
    Cover,
    Edge,
    Symbolic(usize),
    Power(usize),
}

pub fn build_ideal(g: &Graph, kind: IdealKind) -> Result<MonomialIdeal> {
    match kind {
        IdealKind::Cover => cover_ideal(g),
        IdealKind::Edge => Ok(edge_ideal(g)),
        IdealKind::Symbolic(k) => symbolic_power_bruteforce(g, k),
        IdealKind::Power(k) => cover_ideal(g)?.power(k),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    pub ideal: String,
    pub generators: usize,
    pub betti: Option<BettiTable>,
}

impl IdealReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("{} ({} generators)\n", self.ideal, self.generators);
        if let Some(b) = &self.betti {
            s.push_str(&b.to_grid());
        }
        s
    }
}

pub fn ideal_report(i: &MonomialIdeal, betti: Option<Field>) -> Result<IdealReport> {
    Ok(IdealReport {
        ideal: i.to_text().trim_end().replace('\n', ", "),
        generators: i.len(),
        betti: betti.map(|f| betti_table(i, f)).transpose()?,
    })
}

pub fn check_cl(g: &Graph, kind: IdealKind, field: Field, method: ClMethod, budget: u64) -> Result<ClReport> {
    componentwise_linearity(&build_ideal(g, kind)?, field, method, budget)
}

/// Edge list of `G_k`.
pub fn construct_gk(g: &Graph, k: usize) -> Result<String> {
    Ok(write_edge_list(&build_gk(g, k)?.result))
}

/// Edge list of `B_G` under the deterministic shedding order.
pub fn construct_bg(g: &Graph) -> Result<String> {
    let d = shedding_decomposition(g).ok_or(crate::Error::NotVertexDecomposable)?;
    Ok(write_edge_list(&build_bg(g, &d)?))
}
