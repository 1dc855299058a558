//! Text formats: edge lists (`label1 label2` per line, `#` comments, a lone
//! label declares an isolated vertex) and graph6.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{default_labels, Graph, Vertex, MAX_VERTICES};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, Vertex> = HashMap::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() > 2 {
            return Err(Error::Parse { line: lineno + 1, msg: format!("expected `a b`, got `{line}`") });
        }
        let mut ids = Vec::with_capacity(2);
        for t in &toks {
            let id = match index.get(*t) {
                Some(&i) => i,
                None => {
                    if labels.len() == MAX_VERTICES {
                        return Err(Error::Parse { line: lineno + 1, msg: "more than 64 vertices".into() });
                    }
                    labels.push(t.to_string());
                    index.insert(t.to_string(), labels.len() - 1);
                    labels.len() - 1
                }
            };
            ids.push(id);
        }
        if ids.len() == 2 {
            if ids[0] == ids[1] {
                return Err(Error::Parse { line: lineno + 1, msg: format!("self-loop on `{}`", toks[0]) });
            }
            edges.push((ids[0], ids[1]));
        }
    }
    Graph::from_edges(labels, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            out.push_str(g.label(v));
            out.push('\n');
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
    }
    out
}

/// Decodes one graph6 line (optional `>>graph6<<` header). Vertices are
/// labeled `x1..xn`.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let perr = |msg: &str| Error::Parse { line: 1, msg: msg.to_string() };
    let s = line.trim().trim_start_matches(">>graph6<<").as_bytes();
    if s.is_empty() {
        return Err(perr("empty graph6 string"));
    }
    if s.iter().any(|&c| !(63..=126).contains(&c)) {
        return Err(perr("graph6 byte outside 63..=126"));
    }
    let (n, body) = if s[0] != 126 {
        ((s[0] - 63) as usize, &s[1..])
    } else {
        if s.len() < 4 || s[1] == 126 {
            return Err(perr("unsupported graph6 size prefix"));
        }
        let n = s[1..4].iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
        (n, &s[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(perr("graph6 body length does not match vertex count"));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(default_labels(n), &edges)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let text = "# diamond\na b\nb c\na c # shared\na d\nc d\n\ne\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.degree(4), 0);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap().labeled_edges(), g.labeled_edges());
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("a b\na b c\n"),
            Err(Error::Parse { line: 2, msg: "expected `a b`, got `a b c`".into() })
        );
        assert!(matches!(parse_edge_list("\n\nq q"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn graph6_known_strings() {
        let c4 = Graph::with_default_labels(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let p3 = Graph::with_default_labels(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(write_graph6(&p3), "Bg");
        let enc = write_graph6(&c4);
        assert_eq!(parse_graph6(&enc).unwrap(), c4);
        assert_eq!(parse_graph6(">>graph6<<Bg").unwrap(), p3);
        assert_eq!(write_graph6(&Graph::with_default_labels(0, &[]).unwrap()), "?");
        assert!(parse_graph6("B").is_err());
    }

    #[test]
    fn graph6_large() {
        let edges: Vec<_> = (1..64).map(|i| (i - 1, i)).collect();
        let g = Graph::with_default_labels(64, &edges).unwrap();
        let enc = write_graph6(&g);
        assert!(enc.starts_with('~'));
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }
}
