use coverlab_lab::suites::{run_suite, Limits, SUITES};

#[test]
fn reports_are_byte_stable() {
    let limits = Limits { max_n: Some(4), max_k: Some(2), ..Default::default() };
    for (id, ..) in SUITES {
        let a = run_suite(id, &limits).unwrap().without_timing().to_json();
        let b = run_suite(id, &limits).unwrap().without_timing().to_json();
        assert_eq!(a, b, "{id}");
    }
}

#[test]
fn seed_changes_tree_samples() {
    let run = |seed| {
        let limits = Limits { seed, max_k: Some(1), ..Default::default() };
        run_suite("tree", &limits).unwrap()
    };
    assert!(run(0).passed() && run(7).passed());
    assert_eq!(run(0).config.seed, 0);
}
