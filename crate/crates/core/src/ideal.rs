//! Ideals attached to graphs: edge and cover ideals, symbolic powers of cover
//! ideals (directly and through `G_k`), Alexander duality and polarization.

use crate::decomp::{build_gk, for_each_maximal_independent_set, layered_label};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::monomial::{Monomial, MonomialIdeal};

/// Complements of the maximal independent sets, sorted. An edgeless graph
/// has the single cover `∅`.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<VertexSet> {
    let all = g.vertices();
    let mut out = Vec::new();
    for_each_maximal_independent_set(g, all.bits(), &mut |s| {
        out.push(all.difference(VertexSet(s)));
        true
    });
    out.sort();
    out
}

pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    let gens = g.edges().map(|(u, v)| Monomial::from_mask(n, 1 << u | 1 << v)).collect();
    MonomialIdeal::new(g.labels().to_vec(), gens).expect("same ambient")
}

/// `J(G)`, over the labels of `g`.
pub fn cover_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if !g.has_edges() {
        return Err(Error::EdgelessGraph);
    }
    let n = g.n();
    let gens = minimal_vertex_covers(g).into_iter().map(|c| Monomial::from_mask(n, c.bits())).collect();
    MonomialIdeal::new(g.labels().to_vec(), gens)
}

/// Inclusion-minimal sets meeting every member of `sets` (Berge's
/// incremental algorithm).
pub fn minimal_transversals(sets: &[u64]) -> Vec<u64> {
    let mut current: Vec<u64> = vec![0];
    for &s in sets {
        let mut next = Vec::new();
        for &t in &current {
            if t & s != 0 {
                next.push(t);
            } else {
                let mut rest = s;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    next.push(t | 1 << v);
                }
            }
        }
        current = minimal_masks(next);
    }
    current
}

fn minimal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| k & m == k) {
            kept.push(m);
        }
    }
    kept
}

pub fn alexander_dual(i: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !i.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if i.nvars() > 64 {
        return Err(Error::TooManyVariables(i.nvars()));
    }
    let supports: Vec<u64> = i.gens().iter().map(Monomial::support_mask).collect();
    if supports.contains(&0) {
        return Ok(MonomialIdeal::zero(i.ambient().to_vec()));
    }
    let n = i.nvars();
    let gens = minimal_transversals(&supports).into_iter().map(|t| Monomial::from_mask(n, t)).collect();
    MonomialIdeal::new(i.ambient().to_vec(), gens)
}

fn check_power_args(g: &Graph, k: usize) -> Result<()> {
    if !g.has_edges() {
        return Err(Error::EdgelessGraph);
    }
    if k < 1 {
        return Err(Error::InvalidPower(k));
    }
    Ok(())
}

/// `J(G)^(k)` as the intersection of `(x_i, x_j)^k` over the edges, folded in
/// edge order.
pub fn symbolic_power_bruteforce(g: &Graph, k: usize) -> Result<MonomialIdeal> {
    check_power_args(g, k)?;
    let n = g.n();
    let ambient = g.labels().to_vec();
    let mut acc: Option<MonomialIdeal> = None;
    for (u, v) in g.edges() {
        let gens = (0..=k as u32)
            .map(|a| {
                let mut e = vec![0; n];
                e[u] = a;
                e[v] = k as u32 - a;
                Monomial::new(e)
            })
            .collect();
        let prime_power = MonomialIdeal::new(ambient.clone(), gens)?;
        acc = Some(match acc {
            None => prime_power,
            Some(a) => a.intersect(&prime_power)?,
        });
    }
    Ok(acc.expect("at least one edge"))
}

/// `J(G)^(k)` from the minimal vertex covers of `G_k`, each depolarized by
/// counting the layers it uses over every base vertex.
pub fn symbolic_power_via_gk(g: &Graph, k: usize) -> Result<MonomialIdeal> {
    check_power_args(g, k)?;
    let gk = build_gk(g, k)?;
    let n = g.n();
    let gens = minimal_vertex_covers(&gk.result)
        .into_iter()
        .map(|c| {
            let mut e = vec![0u32; n];
            for v in c.iter() {
                e[gk.coords(v).0] += 1;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(g.labels().to_vec(), gens)
}

/// `x_i^a ↦ x_{i,1}⋯x_{i,a}`. Variable `i` gets `layers[i]` polarized
/// copies, laid out `i` ascending then layer ascending and named `{x}_{p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationMap {
    base: Vec<String>,
    layers: Vec<u32>,
    offsets: Vec<usize>,
}

impl PolarizationMap {
    pub fn new(base: Vec<String>, layers: Vec<u32>) -> Result<Self> {
        if base.len() != layers.len() {
            return Err(Error::AmbientMismatch);
        }
        let mut offsets = Vec::with_capacity(layers.len());
        let mut at = 0;
        for &l in &layers {
            offsets.push(at);
            at += l as usize;
        }
        Ok(PolarizationMap { base, layers, offsets })
    }

    /// `k` layers for every variable: the vertex layout of `G_k`.
    pub fn uniform(base: Vec<String>, k: u32) -> Self {
        let layers = vec![k; base.len()];
        PolarizationMap::new(base, layers).expect("lengths agree")
    }

    /// The smallest map able to polarize `i` (at least one layer each).
    pub fn for_ideal(i: &MonomialIdeal) -> Self {
        let mut layers = vec![1u32; i.nvars()];
        for g in i.gens() {
            for (l, &e) in layers.iter_mut().zip(g.exps()) {
                *l = (*l).max(e);
            }
        }
        PolarizationMap::new(i.ambient().to_vec(), layers).expect("lengths agree")
    }

    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn layers(&self) -> &[u32] {
        &self.layers
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(|&l| l as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Polarized index of `x_{var,layer}`, layers counted from 1.
    pub fn index(&self, var: usize, layer: u32) -> Option<usize> {
        (var < self.layers.len() && (1..=self.layers[var]).contains(&layer))
            .then(|| self.offsets[var] + layer as usize - 1)
    }

    /// `(var, layer)` of a polarized index.
    pub fn source(&self, idx: usize) -> Option<(usize, u32)> {
        let var = self.offsets.partition_point(|&o| o <= idx).checked_sub(1)?;
        let layer = (idx - self.offsets[var]) as u32 + 1;
        (layer <= self.layers[var]).then_some((var, layer))
    }

    pub fn names(&self) -> Vec<String> {
        self.base
            .iter()
            .zip(&self.layers)
            .flat_map(|(x, &l)| (1..=l).map(move |p| layered_label(x, p as usize)))
            .collect()
    }
}

pub fn polarize(i: &MonomialIdeal) -> (MonomialIdeal, PolarizationMap) {
    let map = PolarizationMap::for_ideal(i);
    let p = polarize_with(i, &map).expect("map fits the ideal");
    (p, map)
}

pub fn polarize_with(i: &MonomialIdeal, map: &PolarizationMap) -> Result<MonomialIdeal> {
    if map.base() != i.ambient() {
        return Err(Error::AmbientMismatch);
    }
    let total = map.len();
    let mut gens = Vec::with_capacity(i.len());
    for g in i.gens() {
        let mut e = vec![0u32; total];
        for (var, &a) in g.exps().iter().enumerate() {
            if a > map.layers[var] {
                return Err(Error::PolarizationOverflow { var, exponent: a, layers: map.layers[var] });
            }
            for p in 1..=a {
                e[map.offsets[var] + p as usize - 1] = 1;
            }
        }
        gens.push(Monomial::new(e));
    }
    MonomialIdeal::new(map.names(), gens)
}

/// Sends `x_{i,p} ↦ x_i`; each generator's exponent on `x_i` is the number of
/// its layers over `i`. The result is minimalized.
pub fn depolarize(i: &MonomialIdeal, map: &PolarizationMap) -> Result<MonomialIdeal> {
    if i.nvars() != map.len() {
        return Err(Error::AmbientMismatch);
    }
    let n = map.base().len();
    let gens = i
        .gens()
        .iter()
        .map(|g| {
            let mut e = vec![0u32; n];
            for idx in g.support() {
                e[map.source(idx).expect("index in range").0] += g.exps()[idx];
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(map.base().to_vec(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};

    fn path(n: usize) -> Graph {
        make_family(&FamilySpec::Path { n }).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        make_family(&FamilySpec::Cycle { n }).unwrap()
    }

    fn triangle() -> Graph {
        make_family(&FamilySpec::Complete { n: 3 }).unwrap()
    }

    fn exps(i: &MonomialIdeal) -> Vec<Vec<u32>> {
        i.gens().iter().map(|g| g.exps().to_vec()).collect()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn covers_of_small_graphs() {
        assert_eq!(minimal_vertex_covers(&path(2)), vec![set(&[0]), set(&[1])]);
        let mut p4 = minimal_vertex_covers(&path(4));
        p4.sort();
        let mut expected = vec![set(&[1, 2]), set(&[0, 2]), set(&[1, 3])];
        expected.sort();
        assert_eq!(p4, expected);
        assert_eq!(minimal_vertex_covers(&triangle()).len(), 3);
        assert_eq!(minimal_vertex_covers(&Graph::with_default_labels(3, &[]).unwrap()), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn covers_match_brute_force() {
        for spec in
            [FamilySpec::Cycle { n: 5 }, FamilySpec::Path { n: 6 }, FamilySpec::RandomGraph { n: 7, p: 0.4, seed: 2 }]
        {
            let g = make_family(&spec).unwrap();
            let n = g.n();
            let is_cover = |m: u64| g.edges().all(|(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1);
            let brute: Vec<VertexSet> = (0..1u64 << n)
                .filter(|&m| is_cover(m) && (0..n).all(|v| m >> v & 1 == 0 || !is_cover(m & !(1 << v))))
                .map(VertexSet)
                .collect();
            assert_eq!(minimal_vertex_covers(&g), brute);
        }
    }

    #[test]
    fn cover_and_edge_ideals() {
        assert_eq!(exps(&cover_ideal(&path(4)).unwrap()), vec![vec![1, 0, 1, 0], vec![0, 1, 1, 0], vec![0, 1, 0, 1]]);
        assert_eq!(exps(&cover_ideal(&cycle(4)).unwrap()), vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]);
        assert_eq!(cover_ideal(&triangle()).unwrap().len(), 3);
        assert_eq!(exps(&edge_ideal(&path(3))), vec![vec![1, 1, 0], vec![0, 1, 1]]);
        assert!(edge_ideal(&Graph::with_default_labels(2, &[]).unwrap()).is_zero());
        assert_eq!(cover_ideal(&Graph::with_default_labels(2, &[]).unwrap()), Err(Error::EdgelessGraph));
    }

    #[test]
    fn dual_of_edge_ideal_is_cover_ideal() {
        assert_eq!(alexander_dual(&edge_ideal(&cycle(4))).unwrap(), cover_ideal(&cycle(4)).unwrap());
        let e = edge_ideal(&path(2));
        assert_eq!(exps(&alexander_dual(&e).unwrap()), vec![vec![1, 0], vec![0, 1]]);
        let j = cover_ideal(&path(4)).unwrap();
        assert_eq!(alexander_dual(&alexander_dual(&j).unwrap()).unwrap(), j);
        for seed in 0..20 {
            let g = make_family(&FamilySpec::RandomGraph { n: 7, p: 0.35, seed }).unwrap();
            if g.has_edges() {
                assert_eq!(alexander_dual(&edge_ideal(&g)).unwrap(), cover_ideal(&g).unwrap());
            }
        }
        let sq = MonomialIdeal::from_exponents(vec!["x".into()], &[vec![2]]).unwrap();
        assert_eq!(alexander_dual(&sq), Err(Error::NotSquarefree));
    }

    #[test]
    fn symbolic_square_of_triangle() {
        let s = symbolic_power_bruteforce(&triangle(), 2).unwrap();
        assert_eq!(exps(&s), vec![vec![1, 1, 1], vec![2, 2, 0], vec![2, 0, 2], vec![0, 2, 2]]);
        assert_eq!(symbolic_power_via_gk(&triangle(), 2).unwrap(), s);
    }

    #[test]
    fn symbolic_power_agreement() {
        for g in [path(3), path(4), cycle(4), cycle(5), triangle()] {
            assert_eq!(symbolic_power_bruteforce(&g, 1).unwrap(), cover_ideal(&g).unwrap());
            assert_eq!(symbolic_power_via_gk(&g, 1).unwrap(), cover_ideal(&g).unwrap());
            for k in 2..=3 {
                assert_eq!(symbolic_power_via_gk(&g, k).unwrap(), symbolic_power_bruteforce(&g, k).unwrap());
            }
        }
        let c4 = cycle(4);
        assert_eq!(symbolic_power_bruteforce(&c4, 2).unwrap(), cover_ideal(&c4).unwrap().power(2).unwrap());
        assert_eq!(symbolic_power_bruteforce(&c4, 0), Err(Error::InvalidPower(0)));
    }

    #[test]
    fn symbolic_generators_meet_every_edge_prime() {
        let g = cycle(5);
        for k in 1..=3u32 {
            for m in symbolic_power_bruteforce(&g, k as usize).unwrap().gens() {
                for (u, v) in g.edges() {
                    assert!(m.exps()[u] + m.exps()[v] >= k);
                }
            }
        }
    }

    #[test]
    fn polarization_rules() {
        let xy = MonomialIdeal::from_exponents(vec!["x".into(), "y".into()], &[vec![2, 2]]).unwrap();
        let (p, map) = polarize(&xy);
        assert_eq!(p.ambient(), &["x_1", "x_2", "y_1", "y_2"]);
        assert_eq!(exps(&p), vec![vec![1, 1, 1, 1]]);
        assert_eq!(depolarize(&p, &map).unwrap(), xy);
        let j = cover_ideal(&path(4)).unwrap();
        let (pj, _) = polarize(&j);
        assert_eq!(exps(&pj), exps(&j));
        assert_eq!(map.source(2), Some((1, 1)));
        assert_eq!(map.index(1, 2), Some(3));
        assert_eq!(map.index(1, 3), None);
        let over = PolarizationMap::uniform(vec!["x".into(), "y".into()], 1);
        assert!(matches!(polarize_with(&xy, &over), Err(Error::PolarizationOverflow { .. })));
    }

    #[test]
    fn polarized_symbolic_square_is_the_cover_ideal_of_g2() {
        let t = triangle();
        let s = symbolic_power_bruteforce(&t, 2).unwrap();
        let map = PolarizationMap::uniform(t.labels().to_vec(), 2);
        let gk = build_gk(&t, 2).unwrap();
        assert_eq!(polarize_with(&s, &map).unwrap(), cover_ideal(&gk.result).unwrap());
    }
}
