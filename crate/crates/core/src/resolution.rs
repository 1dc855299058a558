//! Graded Betti numbers of monomial ideals, regularity, linear quotients and
//! componentwise linearity.
//!
//! Betti numbers come from the upper Koszul complexes: for a multidegree `b`,
//! `β_{i,b}(I) = dim H̃_{i-1}(K^b)` with
//! `K^b = { F ⊆ supp(b) : x^{b-F} ∈ I }`. `K^b` is the union, over the
//! generators `g | x^b`, of the simplices on `{ j : g_j < b_j }`, and it is a
//! cone unless `b` lies in the lcm lattice, so only lattice elements are
//! visited. The Taylor complex gives an independent check on small ideals.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{rank, reduced_homology_dims, Field, SimplicialComplexChain, SparseRow};
use crate::ideal::polarize;
use crate::monomial::{Monomial, MonomialIdeal};

pub const TAYLOR_MAX_GENERATORS: usize = 14;
pub const DEFAULT_BUDGET: u64 = 200_000;

/// `β_{i,j}` of the module `I` (or of `R/I` for the quotient view).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub field: Field,
    #[serde(with = "entry_list")]
    pub entries: BTreeMap<(usize, u32), usize>,
}

mod entry_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        i: usize,
        j: u32,
        rank: usize,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<(usize, u32), usize>, s: S) -> Result<S::Ok, S::Error> {
        m.iter().map(|(&(i, j), &rank)| Entry { i, j, rank }).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, u32), usize>, D::Error> {
        Ok(Vec::<Entry>::deserialize(d)?.into_iter().filter(|e| e.rank > 0).map(|e| ((e.i, e.j), e.rank)).collect())
    }
}

impl BettiTable {
    pub fn new(field: Field) -> Self {
        BettiTable { field, entries: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, j: u32, r: usize) {
        if r > 0 {
            *self.entries.entry((i, j)).or_insert(0) += r;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((a, _), _)| *a == i).map(|(_, r)| r).sum()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// The same ranks with the field tag ignored.
    pub fn same_ranks(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    /// Table of `R/I` from that of `I`: `β_{0,0} = 1`, `β_{i+1,j} = β_{i,j}(I)`.
    pub fn quotient_view(&self) -> BettiTable {
        let mut t = BettiTable::new(self.field);
        t.add(0, 0, 1);
        for (&(i, j), &r) in &self.entries {
            t.add(i + 1, j, r);
        }
        t
    }

    /// Macaulay-style grid: column `i`, row `j - i`, `.` for zero.
    pub fn to_grid(&self) -> String {
        let Some(pd) = self.projective_dimension() else { return "0\n".to_string() };
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap();
            let hi = self.regularity().unwrap();
            (lo..=hi).collect()
        };
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=pd).map(|i| i.to_string()));
        cells.push(header);
        let mut totals = vec!["total:".to_string()];
        totals.extend((0..=pd).map(|i| self.total(i).to_string()));
        cells.push(totals);
        for &r in &rows {
            let mut line = vec![format!("{r}:")];
            line.extend((0..=pd).map(|i| match self.get(i, (r + i as i64) as u32) {
                0 => ".".to_string(),
                v => v.to_string(),
            }));
            cells.push(line);
        }
        let ncols = pd + 2;
        let widths: Vec<usize> = (0..ncols).map(|c| cells.iter().map(|l| l[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for line in &cells {
            let parts: Vec<String> = line.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            let _ = writeln!(out, "{}", parts.join(" ").trim_end());
        }
        out
    }
}

/// Multigraded Betti numbers: exponent vector `b` → (homological index → rank).
pub type MultigradedBetti = BTreeMap<Vec<u32>, BTreeMap<usize, usize>>;

/// The lcm lattice of the generators, without the bottom element.
pub fn lcm_lattice(i: &MonomialIdeal) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = i.gens().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = i.gens().to_vec();
    while let Some(a) = frontier.pop() {
        for g in i.gens() {
            if g.divides(&a) {
                continue;
            }
            let c = a.lcm(g);
            if seen.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    out
}

/// The upper Koszul complex `K^b`, on the vertices `supp(b)` renumbered
/// `0..|supp(b)|`.
pub fn upper_koszul_complex(i: &MonomialIdeal, b: &Monomial, field: Field) -> SimplicialComplexChain {
    let supp: Vec<usize> = b.support().collect();
    let mut facets: Vec<u64> = i
        .gens()
        .iter()
        .filter(|g| g.divides(b))
        .map(|g| {
            supp.iter().enumerate().filter(|(_, &v)| g.exps()[v] < b.exps()[v]).fold(0u64, |m, (pos, _)| m | 1 << pos)
        })
        .collect();
    facets.sort_unstable();
    facets.dedup();
    let maximal: Vec<u64> = facets.iter().copied().filter(|&f| !facets.iter().any(|&h| h != f && h & f == f)).collect();
    SimplicialComplexChain::new(supp.len(), maximal, field)
}

pub fn multigraded_betti(i: &MonomialIdeal, field: Field) -> Result<MultigradedBetti> {
    i.check_nonzero()?;
    if i.nvars() > 64 {
        return Err(Error::TooManyVariables(i.nvars()));
    }
    let mut out = MultigradedBetti::new();
    for b in lcm_lattice(i) {
        let k = upper_koszul_complex(i, &b, field);
        let ranks: BTreeMap<usize, usize> =
            reduced_homology_dims(&k).into_iter().filter(|&(_, r)| r > 0).map(|(d, r)| ((d + 1) as usize, r)).collect();
        if !ranks.is_empty() {
            out.insert(b.exps().to_vec(), ranks);
        }
    }
    Ok(out)
}

fn graded(m: &MultigradedBetti, field: Field) -> BettiTable {
    let mut t = BettiTable::new(field);
    for (b, ranks) in m {
        let deg: u32 = b.iter().sum();
        for (&i, &r) in ranks {
            t.add(i, deg, r);
        }
    }
    t
}

pub fn betti_table(i: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    Ok(graded(&multigraded_betti(i, field)?, field))
}

/// Multigraded Betti numbers from the strands of the Taylor complex: in
/// multidegree `b` the basis is the generator subsets with lcm `b`, and the
/// differential keeps only faces with the same lcm.
pub fn multigraded_betti_taylor(i: &MonomialIdeal, field: Field) -> Result<MultigradedBetti> {
    i.check_nonzero()?;
    let m = i.len();
    if m > TAYLOR_MAX_GENERATORS {
        return Err(Error::TooManyGenerators { got: m, max: TAYLOR_MAX_GENERATORS });
    }
    let gens = i.gens();
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << m);
    lcms.push(Monomial::one(i.nvars()));
    for s in 1..1usize << m {
        let low = s.trailing_zeros() as usize;
        let prev = &lcms[s & (s - 1)];
        lcms.push(prev.lcm(&gens[low]));
    }
    let mut strands: HashMap<&Monomial, Vec<usize>> = HashMap::new();
    for s in 1..1usize << m {
        strands.entry(&lcms[s]).or_default().push(s);
    }
    let mut out = MultigradedBetti::new();
    for (b, subsets) in strands {
        let max_size = subsets.iter().map(|s| s.count_ones() as usize).max().unwrap_or(0);
        let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); max_size + 2];
        for &s in &subsets {
            by_size[s.count_ones() as usize].push(s);
        }
        let mut ranks = vec![0usize; max_size + 2];
        for size in 2..=max_size {
            let index: HashMap<usize, usize> = by_size[size - 1].iter().enumerate().map(|(k, &s)| (s, k)).collect();
            let rows: Vec<SparseRow> = by_size[size]
                .iter()
                .map(|&s| {
                    let mut row = Vec::new();
                    let mut rest = s;
                    let mut pos = 0;
                    while rest != 0 {
                        let low = rest & rest.wrapping_neg();
                        rest &= rest - 1;
                        if let Some(&k) = index.get(&(s & !low)) {
                            row.push((k, if pos % 2 == 0 { 1 } else { -1 }));
                        }
                        pos += 1;
                    }
                    row
                })
                .collect();
            ranks[size] = rank(&rows, by_size[size - 1].len(), field);
        }
        let mut entry = BTreeMap::new();
        for size in 1..=max_size {
            let r = by_size[size].len() - ranks[size] - ranks[size + 1];
            if r > 0 {
                entry.insert(size - 1, r);
            }
        }
        if !entry.is_empty() {
            out.insert(b.exps().to_vec(), entry);
        }
    }
    Ok(out)
}

pub fn betti_table_taylor(i: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    Ok(graded(&multigraded_betti_taylor(i, field)?, field))
}

pub fn regularity(i: &MonomialIdeal, field: Field) -> Result<u32> {
    let t = betti_table(i, field)?;
    Ok(t.regularity().expect("nonzero ideal has β_0") as u32)
}

pub fn has_linear_resolution(i: &MonomialIdeal, field: Field) -> Result<bool> {
    i.check_nonzero()?;
    if !i.is_equigenerated() {
        return Ok(false);
    }
    Ok(regularity(i, field)? == i.min_degree().expect("nonzero"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "order", rename_all = "snake_case")]
pub enum LinearQuotients {
    Found(Vec<Monomial>),
    NotFound,
    Unknown,
}

/// Searches for an order with variable-generated colons `(u_1..u_{i-1}) : u_i`.
/// Orders are built degree by degree (an ideal with linear quotients has such
/// an order), with backtracking and a memo of dead placed-sets. `budget`
/// bounds the number of placements tried.
pub fn has_linear_quotients(i: &MonomialIdeal, budget: u64) -> Result<LinearQuotients> {
    i.check_nonzero()?;
    if i.nvars() > 64 {
        return Err(Error::TooManyVariables(i.nvars()));
    }
    let gens = i.gens();
    let m = gens.len();
    // colon[j][k]: support of u_j : u_k; var[j][k]: that support when it is one variable of degree 1.
    let mut colon = vec![vec![0u64; m]; m];
    let mut var = vec![vec![0u64; m]; m];
    for j in 0..m {
        for k in 0..m {
            if j != k {
                let c = gens[j].colon(&gens[k]);
                colon[j][k] = c.support_mask();
                if c.degree() == 1 {
                    var[j][k] = colon[j][k];
                }
            }
        }
    }
    let mut search = LqSearch {
        m,
        degrees: gens.iter().map(Monomial::degree).collect(),
        colon,
        var,
        dead: HashSet::new(),
        nodes: 0,
        budget,
    };
    let mut order = Vec::with_capacity(m);
    let mut placed = vec![0u64; m.div_ceil(64)];
    Ok(match search.extend(&mut order, &mut placed) {
        Some(true) => LinearQuotients::Found(order.into_iter().map(|k| gens[k].clone()).collect()),
        Some(false) => LinearQuotients::NotFound,
        None => LinearQuotients::Unknown,
    })
}

struct LqSearch {
    m: usize,
    degrees: Vec<u32>,
    colon: Vec<Vec<u64>>,
    var: Vec<Vec<u64>>,
    dead: HashSet<Vec<u64>>,
    nodes: u64,
    budget: u64,
}

impl LqSearch {
    fn fits(&self, order: &[usize], k: usize) -> bool {
        let t = order.iter().fold(0u64, |acc, &j| acc | self.var[j][k]);
        order.iter().all(|&j| self.colon[j][k] & t != 0)
    }

    /// `Some(true)` when `order` was completed, `None` when out of budget.
    fn extend(&mut self, order: &mut Vec<usize>, placed: &mut Vec<u64>) -> Option<bool> {
        if order.len() == self.m {
            return Some(true);
        }
        if self.dead.contains(placed) {
            return Some(false);
        }
        let is_placed = |p: &[u64], k: usize| p[k / 64] >> (k % 64) & 1 == 1;
        let next_degree =
            (0..self.m).filter(|&k| !is_placed(placed, k)).map(|k| self.degrees[k]).min().expect("something left");
        for k in 0..self.m {
            if is_placed(placed, k) || self.degrees[k] != next_degree || !self.fits(order, k) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            order.push(k);
            placed[k / 64] |= 1 << (k % 64);
            if self.extend(order, placed)? {
                return Some(true);
            }
            placed[k / 64] &= !(1 << (k % 64));
            order.pop();
        }
        self.dead.insert(placed.clone());
        Some(false)
    }
}

/// True iff every colon in the given order is generated by variables.
pub fn is_linear_quotient_order(order: &[Monomial]) -> bool {
    (1..order.len()).all(|k| {
        let colons: Vec<Monomial> = order[..k].iter().map(|u| u.colon(&order[k])).collect();
        let vars: Vec<&Monomial> = colons.iter().filter(|c| c.degree() == 1).collect();
        colons.iter().all(|c| vars.iter().any(|v| v.divides(c)))
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClMethod {
    #[default]
    Auto,
    Betti,
    Quotients,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Unknown => None,
        }
    }
}

/// `reg(I_{≤ℓ})` for one degree `ℓ`; the truncation `I_{<ℓ>}` has a linear
/// resolution iff it is at most `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCheck {
    pub ell: u32,
    pub regularity: u32,
    pub linear: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClCertificate {
    LinearQuotients { order: Vec<Monomial> },
    RegularityTrace { levels: Vec<LevelCheck> },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClReport {
    pub verdict: Verdict,
    pub certificate: ClCertificate,
}

/// Per-degree regularity trace over `ℓ = min..=max` generator degree,
/// stopping at the first nonlinear level.
pub fn regularity_trace(i: &MonomialIdeal, field: Field) -> Result<Vec<LevelCheck>> {
    i.check_nonzero()?;
    let lo = i.min_degree().expect("nonzero");
    let hi = i.max_degree().expect("nonzero");
    let mut levels = Vec::new();
    for ell in lo..=hi {
        let part = i.generated_up_to(ell);
        let reg = regularity(&part, field)?;
        levels.push(LevelCheck { ell, regularity: reg, linear: reg <= ell });
        if reg > ell {
            break;
        }
    }
    Ok(levels)
}

pub fn componentwise_linearity(i: &MonomialIdeal, field: Field, method: ClMethod, budget: u64) -> Result<ClReport> {
    i.check_nonzero()?;
    if method != ClMethod::Betti {
        match has_linear_quotients(i, budget)? {
            LinearQuotients::Found(order) => {
                return Ok(ClReport { verdict: Verdict::True, certificate: ClCertificate::LinearQuotients { order } })
            }
            _ if method == ClMethod::Quotients => {
                return Ok(ClReport { verdict: Verdict::Unknown, certificate: ClCertificate::None })
            }
            _ => {}
        }
    }
    let levels = regularity_trace(i, field)?;
    let verdict = Verdict::from_bool(levels.iter().all(|l| l.linear));
    Ok(ClReport { verdict, certificate: ClCertificate::RegularityTrace { levels } })
}

pub fn is_componentwise_linear(i: &MonomialIdeal, field: Field) -> Result<bool> {
    let r = componentwise_linearity(i, field, ClMethod::Auto, DEFAULT_BUDGET)?;
    Ok(r.verdict == Verdict::True)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizationCheck {
    pub betti_equal: bool,
    /// `None` when either search ran out of budget.
    pub quotients_agree: Option<bool>,
}

impl PolarizationCheck {
    pub fn holds(&self) -> bool {
        self.betti_equal && self.quotients_agree != Some(false)
    }
}

pub fn polarization_check(i: &MonomialIdeal, field: Field, budget: u64) -> Result<PolarizationCheck> {
    let (p, _) = polarize(i);
    let betti_equal = betti_table(i, field)?.same_ranks(&betti_table(&p, field)?);
    let found = |l: LinearQuotients| match l {
        LinearQuotients::Found(_) => Some(true),
        LinearQuotients::NotFound => Some(false),
        LinearQuotients::Unknown => None,
    };
    let a = found(has_linear_quotients(i, budget)?);
    let b = found(has_linear_quotients(&p, budget)?);
    let quotients_agree = a.zip(b).map(|(x, y)| x == y);
    Ok(PolarizationCheck { betti_equal, quotients_agree })
}

pub fn polarization_betti_check(i: &MonomialIdeal, field: Field) -> Result<bool> {
    Ok(polarization_check(i, field, DEFAULT_BUDGET)?.holds())
}
