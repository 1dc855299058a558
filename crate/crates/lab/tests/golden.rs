//! Text reports for the named graphs, compared byte for byte with the files
//! in `tests/golden`. Set `UPDATE_GOLDENS=1` to rewrite them.

use std::fmt::Write as _;
use std::path::PathBuf;

use coverlab::homology::Field;
use coverlab::resolution::{ClMethod, DEFAULT_BUDGET};
use coverlab_lab::analyze::{analyze, build_ideal, check_cl, ideal_report, IdealKind};
use coverlab_lab::named::named_instances;

fn render(g: &coverlab::Graph) -> String {
    let mut s = analyze(g).unwrap().to_text();
    for kind in [IdealKind::Cover, IdealKind::Symbolic(2)] {
        let label = match kind {
            IdealKind::Cover => "J".to_string(),
            IdealKind::Symbolic(k) => format!("J^({k})"),
            _ => unreachable!(),
        };
        let i = build_ideal(g, kind).unwrap();
        let r = ideal_report(&i, Some(Field::Q)).unwrap();
        let cl = check_cl(g, kind, Field::Q, ClMethod::Auto, DEFAULT_BUDGET).unwrap();
        let _ = writeln!(s, "\n{label}: {} generators, componentwise linear: {:?}", r.generators, cl.verdict);
        s.push_str(&r.betti.unwrap().to_grid());
    }
    s
}

#[test]
fn named_instances_match_goldens() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDENS").is_some();
    for (name, g) in named_instances() {
        let path = dir.join(format!("{name}.txt"));
        let got = render(&g);
        if update {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
        assert_eq!(got, want, "golden mismatch for {name}");
    }
}
