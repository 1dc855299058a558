//! Reduced simplicial homology over F2 or Q, and exact ranks of sparse
//! integer matrices.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    #[default]
    F2,
    Q,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::F2 => "f2",
            Field::Q => "q",
        })
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "f2" | "gf2" | "2" => Ok(Field::F2),
            "q" | "qq" | "0" => Ok(Field::Q),
            other => Err(format!("unknown field `{other}` (expected f2 or q)")),
        }
    }
}

/// A sparse matrix row: `(column, coefficient)` with distinct columns.
pub type SparseRow = Vec<(usize, i64)>;

pub fn rank(rows: &[SparseRow], ncols: usize, field: Field) -> usize {
    match field {
        Field::F2 => rank_f2(rows, ncols),
        Field::Q => rank_q(rows),
    }
}

pub fn rank_f2(rows: &[SparseRow], ncols: usize) -> usize {
    let words = ncols.div_ceil(64);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for row in rows {
        let mut r = vec![0u64; words];
        for &(c, a) in row {
            if a & 1 == 1 {
                r[c / 64] ^= 1 << (c % 64);
            }
        }
        while let Some(lead) = lowest_bit(&r) {
            match pivots.get(&lead) {
                Some(p) => r.iter_mut().zip(p).for_each(|(x, y)| *x ^= y),
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn lowest_bit(r: &[u64]) -> Option<usize> {
    r.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank over Q by fraction-free elimination over Z. Runs in `i64` and
/// restarts with `BigInt` if a coefficient overflows.
pub fn rank_q(rows: &[SparseRow]) -> usize {
    let small: Vec<Vec<(usize, i64)>> = rows.iter().map(|r| normalize(r.clone())).collect();
    if let Some(r) = rank_integer(small) {
        return r;
    }
    let big = rows.iter().map(|r| normalize(r.iter().map(|&(c, a)| (c, BigInt::from(a))).collect())).collect();
    rank_integer(big).expect("BigInt arithmetic cannot overflow")
}

fn normalize<T: Zero>(mut r: Vec<(usize, T)>) -> Vec<(usize, T)> {
    r.retain(|(_, a)| !a.is_zero());
    r.sort_by_key(|(c, _)| *c);
    r
}

fn rank_integer<T>(rows: Vec<Vec<(usize, T)>>) -> Option<usize>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub,
{
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut r in rows {
        while let Some((lead, a)) = r.first().cloned() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, r);
                break;
            };
            let b = p[0].1.clone();
            r = combine(&r, &b, p, &a)?;
        }
    }
    Some(pivots.len())
}

/// `b*r - a*p`, divided by the gcd of its entries.
fn combine<T>(r: &[(usize, T)], b: &T, p: &[(usize, T)], a: &T) -> Option<Vec<(usize, T)>>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub,
{
    let mut out: Vec<(usize, T)> = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, b.checked_mul(&r[i - 1].1)?)
        } else if cj < ci {
            j += 1;
            (cj, T::zero().checked_sub(&a.checked_mul(&p[j - 1].1)?)?)
        } else {
            i += 1;
            j += 1;
            (ci, b.checked_mul(&r[i - 1].1)?.checked_sub(&a.checked_mul(&p[j - 1].1)?)?)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    let g = out.iter().fold(T::zero(), |g, (_, v)| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for e in &mut out {
            e.1 = e.1.div_floor(&g);
        }
    }
    Some(out)
}

/// A simplicial complex given by facets (vertex bitmasks over `0..nverts`).
/// No facets is the void complex; the single facet `∅` is the complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplexChain {
    pub nverts: usize,
    pub facets: Vec<u64>,
    pub field: Field,
}

impl SimplicialComplexChain {
    pub fn new(nverts: usize, facets: Vec<u64>, field: Field) -> Self {
        SimplicialComplexChain { nverts, facets, field }
    }

    /// All faces, grouped by size and sorted.
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        let mut faces: Vec<u64> = if self.nverts <= 20 {
            let mut seen = vec![false; 1 << self.nverts];
            for &f in &self.facets {
                mark_subsets(f, &mut |s| {
                    let fresh = !seen[s as usize];
                    seen[s as usize] = true;
                    fresh
                });
            }
            (0..seen.len() as u64).filter(|&s| seen[s as usize]).collect()
        } else {
            let mut seen = HashSet::new();
            for &f in &self.facets {
                mark_subsets(f, &mut |s| seen.insert(s));
            }
            seen.into_iter().collect()
        };
        faces.sort();
        let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut by_size = vec![Vec::new(); if faces.is_empty() { 0 } else { top + 1 }];
        for f in faces {
            by_size[f.count_ones() as usize].push(f);
        }
        by_size
    }
}

/// Visits the subsets of `f`, skipping below any subset already seen
/// (`visit` returns false for those).
fn mark_subsets(f: u64, visit: &mut dyn FnMut(u64) -> bool) {
    if !visit(f) {
        return;
    }
    let mut rest = f;
    while rest != 0 {
        let v = rest & rest.wrapping_neg();
        rest &= rest - 1;
        mark_subsets(f & !v, visit);
    }
}

/// `dim H̃_d` for `d = -1..=top`, zero entries included. The void complex
/// yields an empty map.
pub fn reduced_homology_dims(c: &SimplicialComplexChain) -> BTreeMap<i32, usize> {
    let mut out = BTreeMap::new();
    if c.facets.is_empty() {
        return out;
    }
    let by_size = c.faces_by_size();
    let top = by_size.len() as i32 - 2;
    let common = c.facets.iter().fold(u64::MAX, |acc, &f| acc & f);
    if common != 0 {
        // A cone is acyclic.
        for d in -1..=top {
            out.insert(d, 0);
        }
        return out;
    }
    // ranks[s] = rank of the boundary map from faces of size s.
    let mut ranks = vec![0usize; by_size.len() + 1];
    for s in 1..by_size.len() {
        let index: HashMap<u64, usize> = by_size[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let rows: Vec<SparseRow> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row = Vec::with_capacity(s);
                let mut rest = f;
                let mut pos = 0;
                while rest != 0 {
                    let v = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    row.push((index[&(f & !v)], sign));
                    pos += 1;
                }
                row
            })
            .collect();
        ranks[s] = rank(&rows, by_size[s - 1].len(), c.field);
    }
    for s in 0..by_size.len() {
        let dim = by_size[s].len() - ranks[s] - ranks[s + 1];
        out.insert(s as i32 - 1, dim);
    }
    out
}
