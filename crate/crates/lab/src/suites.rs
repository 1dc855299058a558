//! Verification suites. Each suite enumerates its instances, checks them in
//! parallel and folds the outcomes in instance order.

use std::time::Instant;

use coverlab::decomp::{
    bg_family_order_robustness, bg_family_report, bipartite_layer_collapse_check, build_bg, build_gk, independent_sets,
    is_scm_bipartite, is_vertex_decomposable, is_w_graph, layer_collapse_check, shedding_decomposition,
    SheddingDecomposition,
};
use coverlab::family::{make_family, FamilySpec};
use coverlab::homology::Field;
use coverlab::ideal::{
    cover_ideal, minimal_vertex_covers, polarize_with, symbolic_power_bruteforce, symbolic_power_via_gk,
    PolarizationMap,
};
use coverlab::io::write_graph6;
use coverlab::resolution::{
    has_linear_quotients, has_linear_resolution, is_linear_quotient_order, polarization_check, regularity,
    regularity_trace, LinearQuotients, DEFAULT_BUDGET,
};
use coverlab::{Graph, MonomialIdeal, VertexSet};
use rayon::prelude::*;

use crate::enumerate::{canonical_code, connected_up_to, enumerate_graphs, Filter};
use crate::report::{Outcome, SuiteConfig, VerificationReport};

pub const MAX_GENERATORS: usize = 350;

/// `(id, default max_n, default max_k, what it checks)`.
pub const SUITES: &[(&str, usize, usize, &str)] = &[
    ("fakhari", 6, 3, "polarized symbolic powers are the cover ideals of G_k"),
    ("polar-betti", 5, 3, "polarization keeps Betti tables and linear quotients"),
    ("layer-collapse", 7, 5, "G_k minus N[top layer] is G_{k-2}; bipartite one-step variant"),
    ("not-cl-propagation", 6, 5, "two consecutive non-CL symbolic powers force all later ones"),
    ("suff-cond", 7, 3, "a non-VD B_{G\\N[A]} rules out CL symbolic powers"),
    ("w-main", 7, 3, "for W-graphs, VD of every B_{G\\N[A]} is equivalent to CL symbolic powers"),
    ("whisker", 6, 2, "whiskered graphs: large S, B-obstructions and the forest condition"),
    ("star", 8, 3, "star graphs on a clique: B_G VD iff CL symbolic powers"),
    ("nclique", 9, 3, "n-clique graphs: CL iff at most one m_i equals 1"),
    ("bipartite-main", 8, 3, "bipartite graphs: VD iff CL ordinary powers"),
    ("bipartite-linres", 7, 3, "bipartite graphs: linear resolution of J iff of J^k"),
    ("reg-formula", 7, 3, "VD bipartite graphs: reg(J^k) = k * max cover size"),
    ("tree", 8, 3, "trees: powers of J have linear quotients"),
    ("census", 6, 4, "evidence for the closing questions (no verdict)"),
];

/// User-facing limits; `None` means the suite default.
#[derive(Clone, Debug, Default)]
pub struct Limits {
    pub max_n: Option<usize>,
    pub max_k: Option<usize>,
    pub field: Option<Field>,
    pub seed: u64,
    pub budget: Option<u64>,
    pub max_generators: Option<usize>,
}

impl Limits {
    pub fn resolve(&self, suite: &str) -> Option<SuiteConfig> {
        let &(_, n, k, _) = SUITES.iter().find(|s| s.0 == suite)?;
        Some(SuiteConfig {
            max_n: self.max_n.unwrap_or(n),
            max_k: self.max_k.unwrap_or(k),
            fields: self.field.map_or(vec![Field::F2, Field::Q], |f| vec![f]),
            seed: self.seed,
            budget: self.budget.unwrap_or(DEFAULT_BUDGET),
            max_generators: self.max_generators.unwrap_or(MAX_GENERATORS),
        })
    }
}

pub fn run_suite(id: &str, limits: &Limits) -> Option<VerificationReport> {
    let cfg = limits.resolve(id)?;
    let start = Instant::now();
    let outcome = match id {
        "fakhari" => fakhari(&cfg),
        "polar-betti" => polar_betti(&cfg),
        "layer-collapse" => layer_collapse(&cfg),
        "not-cl-propagation" => not_cl_propagation(&cfg),
        "suff-cond" => suff_cond(&cfg),
        "w-main" => w_main(&cfg),
        "whisker" => whisker(&cfg),
        "star" => star(&cfg),
        "nclique" => nclique(&cfg),
        "bipartite-main" => bipartite_main(&cfg),
        "bipartite-linres" => bipartite_linres(&cfg),
        "reg-formula" => reg_formula(&cfg),
        "tree" => tree(&cfg),
        "census" => census(&cfg),
        _ => return None,
    };
    Some(outcome.into_report(id, cfg, start.elapsed().as_millis() as u64))
}

pub fn key(g: &Graph) -> String {
    format!("g6:{}", write_graph6(g))
}

fn set_key(g: &Graph, s: VertexSet) -> String {
    format!("{{{}}}", g.set_labels(s).join(","))
}

fn run_all<T: Sync>(
    items: &[T],
    f: impl Fn(&T, &mut Outcome) -> coverlab::Result<()> + Sync,
    name: impl Fn(&T) -> String + Sync,
) -> Outcome {
    let parts: Vec<Outcome> = items
        .par_iter()
        .map(|item| {
            let mut o = Outcome::default();
            if let Err(e) = f(item, &mut o) {
                o.fail(&name(item), "", "no error", format!("error: {e}"));
            }
            o
        })
        .collect();
    let mut total = Outcome::default();
    for p in parts {
        total.merge(p);
    }
    total
}

/// Componentwise linearity as decided by the suites: a linear-quotient order
/// settles it for every field; otherwise each configured field runs the
/// homological test, and a split between fields stays undecided.
pub struct ClCheck {
    pub verdict: Option<bool>,
    pub reason: String,
}

pub fn cl_check(i: &MonomialIdeal, cfg: &SuiteConfig) -> coverlab::Result<ClCheck> {
    if let LinearQuotients::Found(_) = has_linear_quotients(i, cfg.budget)? {
        return Ok(ClCheck { verdict: Some(true), reason: "linear quotients".into() });
    }
    if i.len() > cfg.max_generators {
        return Ok(ClCheck {
            verdict: None,
            reason: format!("skipped: {} generators exceed the cap of {}", i.len(), cfg.max_generators),
        });
    }
    let mut verdicts = Vec::new();
    for &field in &cfg.fields {
        let trace = regularity_trace(i, field)?;
        verdicts.push((field, trace.iter().all(|l| l.linear)));
    }
    if verdicts.iter().all(|v| v.1 == verdicts[0].1) {
        Ok(ClCheck { verdict: Some(verdicts[0].1), reason: "regularity trace".into() })
    } else {
        let parts: Vec<String> = verdicts.iter().map(|(f, v)| format!("{f}={v}")).collect();
        Ok(ClCheck { verdict: None, reason: format!("field split: {}", parts.join(", ")) })
    }
}

/// Records an undecided check as skipped (or a finding for field splits).
fn undecided(o: &mut Outcome, inst: &str, params: &str, c: &ClCheck) {
    if c.reason.starts_with("field split") {
        o.finding(inst, params, &c.reason);
    }
    o.skip(inst, params, &c.reason);
}

fn fakhari(cfg: &SuiteConfig) -> Outcome {
    let graphs = connected_up_to(2, cfg.max_n);
    let items: Vec<(Graph, usize)> = graphs.iter().flat_map(|g| (1..=cfg.max_k).map(move |k| (g.clone(), k))).collect();
    run_all(
        &items,
        |(g, k), o| {
            let inst = key(g);
            let params = format!("k={k}");
            o.tested += 1;
            let direct = symbolic_power_bruteforce(g, *k)?;
            let layered = symbolic_power_via_gk(g, *k)?;
            if direct != layered {
                o.fail(&inst, &params, format!("{direct:?}"), format!("{layered:?}"));
            }
            let map = PolarizationMap::uniform(g.labels().to_vec(), *k as u32);
            let polarized = polarize_with(&direct, &map)?;
            let gk = cover_ideal(&build_gk(g, *k)?.result)?;
            if polarized != gk {
                o.fail(&inst, &format!("{params} polarization"), format!("{gk:?}"), format!("{polarized:?}"));
            }
            Ok(())
        },
        |(g, _)| key(g),
    )
}

fn polar_betti(cfg: &SuiteConfig) -> Outcome {
    let graphs = connected_up_to(2, cfg.max_n);
    let mut items = Vec::new();
    for g in &graphs {
        for k in 1..=cfg.max_k {
            for &f in &cfg.fields {
                items.push((g.clone(), k, f));
            }
        }
    }
    run_all(
        &items,
        |(g, k, field), o| {
            let inst = key(g);
            let params = format!("k={k} field={field}");
            o.tested += 1;
            let s = symbolic_power_bruteforce(g, *k)?;
            let check = polarization_check(&s, *field, cfg.budget)?;
            if !check.betti_equal {
                o.fail(&inst, &params, "equal Betti tables", "different Betti tables");
            }
            match check.quotients_agree {
                Some(false) => o.fail(&inst, &params, "same linear-quotient verdict", "verdicts differ"),
                None => o.finding(&inst, &params, "linear-quotient search ran out of budget"),
                Some(true) => {}
            }
            Ok(())
        },
        |(g, _, _)| key(g),
    )
}

fn layer_collapse(cfg: &SuiteConfig) -> Outcome {
    let graphs: Vec<Graph> = (1..=cfg.max_n).flat_map(|n| enumerate_graphs(n, Filter::All)).collect();
    run_all(
        &graphs,
        |g, o| {
            let inst = key(g);
            for k in 3..=cfg.max_k {
                o.tested += 1;
                if !layer_collapse_check(g, k) {
                    o.fail(&inst, &format!("k={k}"), true, false);
                }
            }
            if g.is_bipartite() {
                for k in 2..=cfg.max_k {
                    o.tested += 1;
                    if !bipartite_layer_collapse_check(g, k)? {
                        o.fail(&inst, &format!("bipartite k={k}"), true, false);
                    }
                }
            }
            Ok(())
        },
        key,
    )
}

fn not_cl_propagation(cfg: &SuiteConfig) -> Outcome {
    let graphs = connected_up_to(2, cfg.max_n);
    run_all(
        &graphs,
        |g, o| {
            let inst = key(g);
            o.tested += 1;
            let mut memo: Vec<Option<Option<bool>>> = vec![None; cfg.max_k.max(3) + 1];
            let mut cl = |k: usize, o: &mut Outcome| -> coverlab::Result<Option<bool>> {
                if let Some(v) = memo[k] {
                    return Ok(v);
                }
                let c = cl_check(&symbolic_power_bruteforce(g, k)?, cfg)?;
                if c.verdict.is_none() {
                    undecided(o, &inst, &format!("k={k}"), &c);
                }
                memo[k] = Some(c.verdict);
                Ok(c.verdict)
            };
            if cl(2, o)? != Some(false) {
                return Ok(());
            }
            let first = cl(1, o)? == Some(false);
            let second = cl(3, o)? == Some(false);
            let from = match (first, second) {
                (true, _) => 3,
                (false, true) => 4,
                _ => return Ok(()),
            };
            o.count(if first { "premise k=1,2" } else { "premise k=2,3" });
            for k in from..=cfg.max_k {
                if cl(k, o)? == Some(true) {
                    o.fail(&inst, &format!("k={k}"), "not CL", "CL");
                }
            }
            Ok(())
        },
        key,
    )
}

fn vd_connected(lo: usize, hi: usize) -> Vec<Graph> {
    connected_up_to(lo, hi).into_iter().filter(is_vertex_decomposable).collect()
}

fn suff_cond(cfg: &SuiteConfig) -> Outcome {
    let graphs = vd_connected(2, cfg.max_n);
    run_all(
        &graphs,
        |g, o| {
            let inst = key(g);
            o.tested += 1;
            let report = bg_family_report(g)?;
            if report.holds {
                return Ok(());
            }
            o.count("obstructed");
            for k in 2..=cfg.max_k {
                let params = format!("k={k} A={}", set_key(g, report.failures[0]));
                let c = cl_check(&symbolic_power_bruteforce(g, k)?, cfg)?;
                match c.verdict {
                    Some(true) => o.fail(&inst, &params, "not CL", format!("CL ({})", c.reason)),
                    Some(false) => {}
                    None => undecided(o, &inst, &params, &c),
                }
            }
            Ok(())
        },
        key,
    )
}

fn w_main(cfg: &SuiteConfig) -> Outcome {
    let graphs: Vec<Graph> = connected_up_to(2, cfg.max_n).into_iter().filter(is_w_graph).collect();
    run_all(
        &graphs,
        |g, o| {
            let inst = key(g);
            o.tested += 1;
            let family_vd = bg_family_report(g)?.holds;
            o.count(if family_vd { "family VD" } else { "family not VD" });
            if family_vd {
                for k in 2..=cfg.max_k {
                    if !is_w_graph(&build_gk(g, k)?.result) {
                        o.fail(&inst, &format!("k={k} G_k W-graph"), true, false);
                    }
                }
            }
            let first_k = if family_vd { 1 } else { 2 };
            for k in first_k..=cfg.max_k {
                let params = format!("k={k}");
                let s = symbolic_power_bruteforce(g, k)?;
                let c = cl_check(&s, cfg)?;
                match c.verdict {
                    Some(v) if v != family_vd => o.fail(&inst, &params, family_vd, v),
                    None => undecided(o, &inst, &params, &c),
                    _ => {}
                }
                if family_vd {
                    match has_linear_quotients(&s, cfg.budget)? {
                        LinearQuotients::Found(_) => {}
                        LinearQuotients::NotFound => o.fail(&inst, &params, "linear quotients", "none exist"),
                        LinearQuotients::Unknown => {
                            o.finding(&inst, &params, "linear-quotient search ran out of budget")
                        }
                    }
                }
            }
            Ok(())
        },
        key,
    )
}

fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

/// Every `B_{W \ N[A]}` minus the surviving vertices of `S` is a forest.
fn whisker_forest_condition(w: &Graph, s_labels: &[String]) -> coverlab::Result<bool> {
    for a in independent_sets(w) {
        let h = w.delete_closed_neighborhood(a)?;
        let d = shedding_decomposition(&h).ok_or(coverlab::Error::NotVertexDecomposable)?;
        let b = build_bg(&h, &d)?;
        let drop: VertexSet = (0..b.n()).filter(|&v| s_labels.iter().any(|l| l == b.label(v))).collect();
        if !is_forest(&b.delete_vertices(drop)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn whisker(cfg: &SuiteConfig) -> Outcome {
    let graphs = connected_up_to(1, cfg.max_n);
    let items: Vec<(Graph, VertexSet)> =
        graphs.iter().flat_map(|g| (0..1u64 << g.n()).map(move |s| (g.clone(), VertexSet(s)))).collect();
    run_all(
        &items,
        |(g, s), o| {
            let w = g.add_whiskers(*s)?;
            if !w.has_edges() {
                return Ok(());
            }
            let inst = format!("{} S={}", key(g), set_key(g, *s));
            o.tested += 1;
            let large = s.len() + 3 >= g.n();
            let cl_at = |k: usize, o: &mut Outcome| -> coverlab::Result<Option<bool>> {
                let c = cl_check(&symbolic_power_bruteforce(&w, k)?, cfg)?;
                if c.verdict.is_none() {
                    undecided(o, &inst, &format!("k={k}"), &c);
                }
                Ok(c.verdict)
            };
            if large {
                o.count("large S");
                for k in 1..=cfg.max_k {
                    if cl_at(k, o)? == Some(false) {
                        o.fail(&inst, &format!("rule=large-S k={k}"), "CL", "not CL");
                    }
                }
            }
            if is_vertex_decomposable(&w) {
                let rest = g.delete_vertices(*s);
                if rest.n() > 0 {
                    if !is_vertex_decomposable(&rest) {
                        o.fail(&inst, "rule=G\\S inherits VD", true, false);
                    } else if !bg_family_report(&rest)?.holds {
                        o.count("B-obstruction");
                        if cl_at(2, o)? == Some(true) {
                            o.fail(&inst, "rule=B-obstruction k=2", "not CL", "CL");
                        }
                    }
                }
            }
            if is_w_graph(&w) {
                let s_labels = g.set_labels(*s);
                if whisker_forest_condition(&w, &s_labels)? {
                    o.count("forest condition");
                    if cl_at(2, o)? == Some(false) {
                        o.fail(&inst, "rule=forest k=2", "CL", "not CL");
                    }
                }
            }
            Ok(())
        },
        |(g, s)| format!("{} S={}", key(g), set_key(g, *s)),
    )
}

/// Star graphs on `K_c` plus `m` independent vertices with nonempty
/// attachments, one per isomorphism class, at most `max_n` vertices.
pub fn star_graphs(max_n: usize) -> Vec<Graph> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for core in 1..max_n {
        for m in 1..=max_n - core {
            let masks: Vec<u64> = (1..1u64 << core).collect();
            let mut pick = vec![0usize; m];
            loop {
                let attachments: Vec<Vec<usize>> =
                    pick.iter().map(|&p| (0..core).filter(|&v| masks[p] >> v & 1 == 1).collect()).collect();
                let g = make_family(&FamilySpec::StarComplete { core, attachments }).expect("connected");
                if seen.insert((g.n(), canonical_code(&g))) {
                    out.push(g);
                }
                // Next nondecreasing choice of attachment masks.
                let mut i = m;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if pick[i] + 1 < masks.len() {
                        pick[i] += 1;
                        for j in i + 1..m {
                            pick[j] = pick[i];
                        }
                        break;
                    }
                    if i == 0 {
                        pick.clear();
                    }
                }
                if pick.is_empty() {
                    break;
                }
            }
        }
    }
    out
}

/// The shedding order written down for star graphs: the core minus a vertex
/// missed by every `y` when there is one; otherwise, for each `y_i` in turn,
/// its neighbors not already adjacent to an earlier `y`.
pub fn star_order(g: &Graph) -> SheddingDecomposition {
    let core: Vec<usize> = (0..g.n()).filter(|&v| g.label(v).starts_with('x')).collect();
    let ys: Vec<usize> = (0..g.n()).filter(|&v| g.label(v).starts_with('y')).collect();
    let touched = ys.iter().fold(VertexSet::default(), |acc, &y| acc.union(g.neighbors(y)));
    if let Some(&free) = core.iter().find(|&&x| !touched.contains(x)) {
        let mut i_order = vec![free];
        i_order.extend(&ys);
        return SheddingDecomposition { shedding_order: core.into_iter().filter(|&x| x != free).collect(), i_order };
    }
    let mut seen = VertexSet::default();
    let mut shedding = Vec::new();
    for &y in &ys {
        let fresh = g.neighbors(y).difference(seen);
        shedding.extend(fresh.iter());
        seen = seen.union(fresh);
    }
    SheddingDecomposition { shedding_order: shedding, i_order: ys }
}

fn star(cfg: &SuiteConfig) -> Outcome {
    let graphs = star_graphs(cfg.max_n);
    run_all(
        &graphs,
        |g, o| {
            let inst = key(g);
            o.tested += 1;
            let d = shedding_decomposition(g).ok_or(coverlab::Error::NotVertexDecomposable)?;
            let bg_vd = is_vertex_decomposable(&build_bg(g, &d)?);
            o.count(if bg_vd { "B_G VD" } else { "B_G not VD" });
            let hand = star_order(g);
            match hand.validate(g) {
                Ok(()) => {
                    if is_vertex_decomposable(&build_bg(g, &hand)?) != bg_vd {
                        o.finding(&inst, "", "B_G verdict differs between the hand order and the default order");
                    }
                }
                Err(e) => o.fail(&inst, "hand-given order", "valid", e),
            }
            let family = bg_family_report(g)?.holds;
            if family != bg_vd {
                o.fail(&inst, "B-family vs B_G", bg_vd, family);
            }
            for k in 2..=cfg.max_k {
                let params = format!("k={k}");
                let c = cl_check(&symbolic_power_bruteforce(g, k)?, cfg)?;
                match c.verdict {
                    Some(v) if v != bg_vd => o.fail(&inst, &params, bg_vd, v),
                    None => undecided(o, &inst, &params, &c),
                    _ => {}
                }
            }
            Ok(())
        },
        key,
    )
}

/// `(p, sizes)` with sizes nonincreasing, entries in `1..=3`, at most three
/// cliques and `p + Σ sizes ≤ max_n`.
pub fn nclique_params(max_n: usize) -> Vec<(usize, Vec<usize>)> {
    fn rec(p: usize, left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<(usize, Vec<usize>)>) {
        if !cur.is_empty() {
            out.push((p, cur.clone()));
        }
        if cur.len() == 3 {
            return;
        }
        for m in (1..=cap.min(left)).rev() {
            cur.push(m);
            rec(p, left - m, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for p in 1..=3.min(max_n.saturating_sub(1)) {
        rec(p, max_n - p, 3, &mut Vec::new(), &mut out);
    }
    out
}

fn nclique(cfg: &SuiteConfig) -> Outcome {
    let items = nclique_params(cfg.max_n);
    run_all(
        &items,
        |(p, sizes), o| {
            let g = make_family(&FamilySpec::NClique { p: *p, sizes: sizes.clone() })?;
            let inst = format!("gamma p={p} m={sizes:?}");
            o.tested += 1;
            let expected = *p == 1 || sizes.iter().filter(|&&m| m == 1).count() <= 1;
            let family = bg_family_report(&g)?.holds;
            if family != expected {
                o.fail(&inst, "B-family", expected, family);
            }
            for k in 2..=cfg.max_k {
                let params = format!("k={k}");
                let c = cl_check(&symbolic_power_bruteforce(&g, k)?, cfg)?;
                match c.verdict {
                    Some(v) if v != expected => o.fail(&inst, &params, expected, v),
                    None => undecided(o, &inst, &params, &c),
                    _ => {}
                }
            }
            Ok(())
        },
        |(p, sizes)| format!("gamma p={p} m={sizes:?}"),
    )
}

fn bipartite_connected(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi).flat_map(|n| enumerate_graphs(n, Filter::ConnectedBipartite)).collect()
}

fn bipartite_main(cfg: &SuiteConfig) -> Outcome {
    let graphs = bipartite_connected(2, cfg.max_n);
    run_all(
        &graphs,
        |g, o| {
            let inst = key(g);
            o.tested += 1;
            let vd = is_vertex_decomposable(g);
            if is_scm_bipartite(g)? != vd {
                o.fail(&inst, "recursion vs VD", vd, !vd);
            }
            o.count(if vd { "VD" } else { "not VD" });
            let j = cover_ideal(g)?;
            for k in 2..=cfg.max_k {
                let params = format!("k={k}");
                let power = j.power(k)?;
                if power != symbolic_power_bruteforce(g, k)? {
                    o.fail(&inst, &format!("{params} ordinary = symbolic"), true, false);
                }
                let c = cl_check(&power, cfg)?;
                match c.verdict {
                    Some(v) if v != vd => o.fail(&inst, &params, vd, v),
                    None => undecided(o, &inst, &params, &c),
                    _ => {}
                }
            }
            Ok(())
        },
        key,
    )
}

fn bipartite_linres(cfg: &SuiteConfig) -> Outcome {
    let graphs = bipartite_connected(2, cfg.max_n);
    run_all(
        &graphs,
        |g, o| {
            let inst = key(g);
            o.tested += 1;
            let j = cover_ideal(g)?;
            let covers = minimal_vertex_covers(g);
            let unmixed = covers.iter().all(|c| c.len() == covers[0].len());
            let vd = is_vertex_decomposable(g);
            for &field in &cfg.fields {
                let base = has_linear_resolution(&j, field)?;
                o.count(if base { "linear" } else { "not linear" });
                if unmixed && vd && base {
                    o.count("unmixed VD with linear J");
                }
                for k in 2..=cfg.max_k {
                    let got = has_linear_resolution(&j.power(k)?, field)?;
                    if got != base {
                        o.fail(&inst, &format!("k={k} field={field}"), base, got);
                    }
                }
            }
            Ok(())
        },
        key,
    )
}

fn reg_formula(cfg: &SuiteConfig) -> Outcome {
    let graphs: Vec<Graph> = bipartite_connected(2, cfg.max_n).into_iter().filter(is_vertex_decomposable).collect();
    run_all(
        &graphs,
        |g, o| {
            let inst = key(g);
            let j = cover_ideal(g)?;
            let deg = minimal_vertex_covers(g).iter().map(|c| c.len()).max().unwrap_or(0) as u32;
            for k in 1..=cfg.max_k {
                let power = j.power(k)?;
                for &field in &cfg.fields {
                    o.tested += 1;
                    let reg = regularity(&power, field)?;
                    if reg != k as u32 * deg {
                        o.fail(&inst, &format!("k={k} field={field}"), k as u32 * deg, reg);
                    }
                }
            }
            Ok(())
        },
        key,
    )
}

pub const TREE_SAMPLES: usize = 50;

fn tree(cfg: &SuiteConfig) -> Outcome {
    let top = cfg.max_n.max(2);
    let items: Vec<(usize, u64)> =
        (0..TREE_SAMPLES).map(|t| (2 + t % (top - 1), cfg.seed.wrapping_add(t as u64))).collect();
    run_all(
        &items,
        |&(n, seed), o| {
            let g = make_family(&FamilySpec::RandomTree { n, seed })?;
            let inst = format!("tree n={n} seed={seed} {}", key(&g));
            let j = cover_ideal(&g)?;
            for k in 1..=cfg.max_k {
                o.tested += 1;
                let params = format!("k={k}");
                match has_linear_quotients(&j.power(k)?, cfg.budget)? {
                    LinearQuotients::Found(order) => {
                        if !is_linear_quotient_order(&order) {
                            o.fail(&inst, &params, "valid order", "invalid order");
                        }
                    }
                    LinearQuotients::NotFound => o.fail(&inst, &params, "linear quotients", "none exist"),
                    LinearQuotients::Unknown => o.skip(&inst, &params, "linear-quotient search ran out of budget"),
                }
            }
            Ok(())
        },
        |&(n, seed)| format!("tree n={n} seed={seed}"),
    )
}

/// States visited per `G \\ N[A]` when listing every valid shedding order.
pub const ORDER_BUDGET: usize = 100_000;

fn census(cfg: &SuiteConfig) -> Outcome {
    let graphs = vd_connected(2, cfg.max_n);
    run_all(
        &graphs,
        |g, o| {
            let inst = key(g);
            o.tested += 1;
            let family = bg_family_report(g)?.holds;
            let mut verdicts = Vec::new();
            for k in 2..=cfg.max_k.max(2) {
                let c = cl_check(&symbolic_power_bruteforce(g, k)?, cfg)?;
                if c.verdict.is_none() {
                    undecided(o, &inst, &format!("k={k}"), &c);
                }
                verdicts.push(c.verdict);
            }
            o.count(if family { "family VD" } else { "family not VD" });
            let robust = bg_family_order_robustness(g, ORDER_BUDGET)?;
            if !robust.complete {
                o.count("order search incomplete");
            } else if robust.holds_for_some_order != robust.holds_for_every_order {
                o.count("family verdict depends on the shedding order");
                let a: Vec<String> = robust.order_dependent.iter().map(|&a| set_key(g, a)).collect();
                o.finding(&inst, "", format!("B-family verdict depends on the shedding order at A in {}", a.join(" ")));
            }
            if verdicts[0] == Some(false) {
                o.count("k=2 not CL");
                if verdicts[1..].contains(&Some(true)) {
                    o.finding(&inst, "", "J^(2) not CL but a later symbolic power is CL");
                }
            }
            if family && verdicts.contains(&Some(false)) {
                o.finding(&inst, "", "every B_{G\\N[A]} is VD but some symbolic power is not CL");
            }
            Ok(())
        },
        key,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_defaults_resolve() {
        let cfg = Limits::default().resolve("fakhari").unwrap();
        assert_eq!((cfg.max_n, cfg.max_k), (6, 3));
        assert_eq!(cfg.fields, vec![Field::F2, Field::Q]);
        assert!(Limits::default().resolve("nope").is_none());
        let one = Limits { field: Some(Field::Q), max_n: Some(3), ..Default::default() }.resolve("tree").unwrap();
        assert_eq!(one.fields, vec![Field::Q]);
        assert_eq!(one.max_n, 3);
    }

    #[test]
    fn star_graph_enumeration() {
        let g = star_graphs(3);
        assert!(g.iter().all(|g| g.is_connected() && g.is_chordal()));
        // An edge, a path on three vertices and a triangle.
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn star_orders_follow_the_two_cases() {
        let spec = |attachments| FamilySpec::StarComplete { core: 3, attachments };
        let g = make_family(&spec(vec![vec![1], vec![1, 2]])).unwrap();
        let d = star_order(&g);
        assert_eq!(d.shedding_order, vec![1, 2]);
        assert_eq!(d.i_order, vec![0, 3, 4]);
        d.validate(&g).unwrap();
        let g = make_family(&spec(vec![vec![0, 1], vec![1, 2]])).unwrap();
        let d = star_order(&g);
        assert_eq!(d.shedding_order, vec![0, 1, 2]);
        assert_eq!(d.i_order, vec![3, 4]);
        d.validate(&g).unwrap();
    }

    #[test]
    fn nclique_parameter_list() {
        let p = nclique_params(5);
        assert!(p.contains(&(2, vec![2, 1])));
        assert!(p.contains(&(1, vec![3, 1])));
        assert!(p.iter().all(|(p, s)| p + s.iter().sum::<usize>() <= 5));
        assert!(p.iter().all(|(_, s)| s.windows(2).all(|w| w[0] >= w[1])));
    }

    #[test]
    fn small_suites_pass() {
        let limits = Limits { max_n: Some(4), max_k: Some(2), ..Default::default() };
        for id in ["fakhari", "layer-collapse", "bipartite-main", "tree"] {
            let r = run_suite(id, &limits).unwrap();
            assert!(r.passed(), "{}", r.to_json());
            assert!(r.instances_tested > 0);
        }
    }
}
