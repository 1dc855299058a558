use coverlab::decomp::{build_bg, build_gk, is_vertex_decomposable, shedding_decomposition};
use coverlab::family::{make_family, FamilySpec};
use coverlab::homology::Field;
use coverlab::ideal::{cover_ideal, depolarize, polarize, symbolic_power_bruteforce, symbolic_power_via_gk};
use coverlab::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use coverlab::resolution::{betti_table, componentwise_linearity, regularity, ClMethod, Verdict, DEFAULT_BUDGET};
use coverlab::{Graph, MonomialIdeal};

fn cycle(n: usize) -> Graph {
    make_family(&FamilySpec::Cycle { n }).unwrap()
}

#[test]
fn formats_round_trip() {
    for seed in 0..20 {
        let g = make_family(&FamilySpec::RandomGraph { n: 9, p: 0.4, seed }).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap().labeled_edges(), g.labeled_edges());
    }
    let i = symbolic_power_bruteforce(&cycle(5), 2).unwrap();
    assert_eq!(MonomialIdeal::parse_text(i.ambient().to_vec(), &i.to_text()).unwrap(), i);
    assert_eq!(MonomialIdeal::from_json(&i.to_json()).unwrap(), i);
}

#[test]
fn odd_cycles_separate_ordinary_and_symbolic_squares() {
    let c5 = cycle(5);
    let j = cover_ideal(&c5).unwrap();
    let sym = symbolic_power_bruteforce(&c5, 2).unwrap();
    let ord = j.power(2).unwrap();
    assert_ne!(sym, ord);
    assert!(ord.gens().iter().all(|m| sym.contains(m)));
    assert_eq!(sym, symbolic_power_via_gk(&c5, 2).unwrap());
    // The product of all variables lies in J^(2) but not in J^2.
    let all = coverlab::Monomial::new(vec![1; 5]);
    assert!(sym.contains(&all) && !ord.contains(&all));
}

#[test]
fn even_cycles_are_bipartite_so_powers_agree() {
    let c6 = cycle(6);
    for k in 2..=3 {
        assert_eq!(cover_ideal(&c6).unwrap().power(k).unwrap(), symbolic_power_bruteforce(&c6, k).unwrap());
    }
}

#[test]
fn polarization_round_trip_and_layered_graph() {
    let g = make_family(&FamilySpec::Path { n: 4 }).unwrap();
    let s = symbolic_power_bruteforce(&g, 3).unwrap();
    let (p, map) = polarize(&s);
    assert!(p.is_squarefree());
    assert_eq!(depolarize(&p, &map).unwrap(), s);
    assert_eq!(betti_table(&s, Field::Q).unwrap(), betti_table(&p, Field::Q).unwrap());
    assert_eq!(build_gk(&g, 3).unwrap().result.n(), 12);
}

#[test]
fn paths_are_vertex_decomposable_with_linear_cover_ideals() {
    for n in 2..=7 {
        let g = make_family(&FamilySpec::Path { n }).unwrap();
        assert!(is_vertex_decomposable(&g));
        let d = shedding_decomposition(&g).unwrap();
        assert!(is_vertex_decomposable(&build_bg(&g, &d).unwrap()));
        let r = componentwise_linearity(&cover_ideal(&g).unwrap(), Field::F2, ClMethod::Auto, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.verdict, Verdict::True);
    }
}

#[test]
fn cycles_beyond_five_are_not_vertex_decomposable() {
    assert!(is_vertex_decomposable(&cycle(3)));
    assert!(is_vertex_decomposable(&cycle(5)));
    for n in [4, 6, 7, 8] {
        assert!(!is_vertex_decomposable(&cycle(n)), "C{n}");
    }
}

#[test]
fn complete_graph_powers_have_known_regularity() {
    // J(K_n) is generated by the n products of n-1 variables, with a linear
    // resolution; so are its powers.
    for n in 3..=5 {
        let j = cover_ideal(&make_family(&FamilySpec::Complete { n }).unwrap()).unwrap();
        assert_eq!(j.len(), n);
        for k in 1..=3u32 {
            let jk = j.power(k as usize).unwrap();
            assert_eq!(regularity(&jk, Field::F2).unwrap(), k * (n as u32 - 1));
        }
    }
}
