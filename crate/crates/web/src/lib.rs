//! Three operations for the demo page. Each takes an edge list (one
//! `a b` pair per line) and returns text or JSON for the page to show.

use coverlab::homology::Field;
use coverlab::io::parse_edge_list;
use coverlab::resolution::{ClCertificate, ClMethod, Verdict, DEFAULT_BUDGET};
use coverlab::summary::{analyze, build_ideal, check_cl, construct_bg, construct_gk, ideal_report, IdealKind};
use coverlab::Graph;
use wasm_bindgen::prelude::*;

/// Keeps the page responsive: the lcm lattice grows fast past this.
const MAX_DEMO_VERTICES: usize = 12;

fn graph(edges: &str) -> Result<Graph, String> {
    let g = parse_edge_list(edges).map_err(|e| e.to_string())?;
    if g.n() > MAX_DEMO_VERTICES {
        return Err(format!("the demo takes at most {MAX_DEMO_VERTICES} vertices"));
    }
    Ok(g)
}

pub fn analyze_text(edges: &str) -> Result<String, String> {
    Ok(analyze(&graph(edges)?).map_err(|e| e.to_string())?.to_text())
}

/// `J(G)^(k)` with its Betti table and componentwise-linearity verdict.
pub fn symbolic_power_text(edges: &str, k: usize, field: &str) -> Result<String, String> {
    let g = graph(edges)?;
    let field: Field = field.parse()?;
    if !(1..=4).contains(&k) {
        return Err("k must be between 1 and 4".into());
    }
    let err = |e: coverlab::Error| e.to_string();
    let i = build_ideal(&g, IdealKind::Symbolic(k)).map_err(err)?;
    let mut out = ideal_report(&i, Some(field)).map_err(err)?.to_text();
    let cl = check_cl(&g, IdealKind::Symbolic(k), field, ClMethod::Auto, DEFAULT_BUDGET).map_err(err)?;
    let verdict = match cl.verdict {
        Verdict::True => "componentwise linear",
        Verdict::False => "not componentwise linear",
        Verdict::Unknown => "undecided",
    };
    let how = match cl.certificate {
        ClCertificate::LinearQuotients { .. } => "found a linear-quotient order".to_string(),
        ClCertificate::RegularityTrace { levels } => {
            let parts: Vec<String> = levels.iter().map(|l| format!("reg(I<={}) = {}", l.ell, l.regularity)).collect();
            parts.join(", ")
        }
        ClCertificate::None => "no certificate".into(),
    };
    out.push_str(&format!("\n{verdict} ({how})\n"));
    Ok(out)
}

/// `"gk"` builds `G_k`, `"bg"` builds `B_G`; both as edge lists.
pub fn construct_text(edges: &str, what: &str, k: usize) -> Result<String, String> {
    let g = graph(edges)?;
    let r = match what {
        "gk" if (1..=4).contains(&k) => construct_gk(&g, k),
        "gk" => return Err("k must be between 1 and 4".into()),
        "bg" => construct_bg(&g),
        _ => return Err(format!("unknown construction `{what}`")),
    };
    r.map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = analyzeGraph)]
pub fn analyze_graph(edges: &str) -> Result<String, JsError> {
    analyze_text(edges).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = symbolicPower)]
pub fn symbolic_power(edges: &str, k: usize, field: &str) -> Result<String, JsError> {
    symbolic_power_text(edges, k, field).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn construct(edges: &str, what: &str, k: usize) -> Result<String, JsError> {
    construct_text(edges, what, k).map_err(|e| JsError::new(&e))
}
