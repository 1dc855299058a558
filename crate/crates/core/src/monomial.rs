//! Monomials as dense exponent vectors and monomial ideals stored by their
//! unique minimal generating set.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    /// Squarefree monomial on the set bits of `mask`.
    pub fn from_mask(nvars: usize, mask: u64) -> Self {
        Monomial((0..nvars).map(|i| (mask >> i & 1) as u32).collect())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Support as a bitmask; requires at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        self.support().fold(0, |acc, i| acc | 1u64 << i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Generator of the colon `(self) : other`, i.e. `lcm(self, other) / other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Degree first, then lexicographic with `x1 > x2 > …`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Keeps only the minimal elements under divisibility, sorted.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    ambient: Vec<String>,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.format(&self.ambient)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    ambient: Vec<String>,
    gens: Vec<Vec<u32>>,
}

impl MonomialIdeal {
    pub fn new(ambient: Vec<String>, gens: Vec<Monomial>) -> Result<Self> {
        if gens.iter().any(|g| g.nvars() != ambient.len()) {
            return Err(Error::AmbientMismatch);
        }
        Ok(MonomialIdeal { ambient, gens: minimalize(gens) })
    }

    pub(crate) fn from_minimal(ambient: Vec<String>, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { ambient, gens }
    }

    pub fn from_exponents(ambient: Vec<String>, gens: &[Vec<u32>]) -> Result<Self> {
        MonomialIdeal::new(ambient, gens.iter().cloned().map(Monomial::new).collect())
    }

    pub fn zero(ambient: Vec<String>) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    pub fn ambient(&self) -> &[String] {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.ambient.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// All generators have the same degree.
    pub fn is_equigenerated(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub(crate) fn check_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    fn check_same_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ambient(other)?;
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b))).collect();
        MonomialIdeal::new(self.ambient.clone(), gens)
    }

    /// Ordinary power `I^k`.
    pub fn power(&self, k: usize) -> Result<MonomialIdeal> {
        if k < 1 {
            return Err(Error::InvalidPower(k));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J` from pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ambient(other)?;
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))).collect();
        MonomialIdeal::new(self.ambient.clone(), gens)
    }

    /// The subideal generated by the generators of degree at most `ell`.
    pub fn generated_up_to(&self, ell: u32) -> MonomialIdeal {
        let gens = self.gens.iter().filter(|g| g.degree() <= ell).cloned().collect();
        MonomialIdeal::from_minimal(self.ambient.clone(), gens)
    }

    /// `I_{<ℓ>}`: the ideal generated by all degree-`ℓ` monomials of `I`.
    pub fn truncation(&self, ell: u32) -> MonomialIdeal {
        let n = self.nvars();
        let mut out = Vec::new();
        for g in self.gens.iter().filter(|g| g.degree() <= ell) {
            for m in monomials_of_degree(n, ell - g.degree()) {
                out.push(g.mul(&m));
            }
        }
        out.sort();
        out.dedup();
        MonomialIdeal::from_minimal(self.ambient.clone(), out)
    }

    pub fn to_text(&self) -> String {
        self.gens.iter().map(|g| g.format(&self.ambient) + "\n").collect()
    }

    /// Parses one generator per line (`x1^2*x3`, `1` for the unit monomial,
    /// `#` comments) over the given variables.
    pub fn parse_text(ambient: Vec<String>, text: &str) -> Result<MonomialIdeal> {
        let index: HashMap<&str, usize> = ambient.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: lineno + 1, msg };
            let mut exps = vec![0u32; ambient.len()];
            if line != "1" {
                for factor in line.split('*') {
                    let factor = factor.trim();
                    let (name, e) = match factor.split_once('^') {
                        Some((v, e)) => {
                            (v.trim(), e.trim().parse::<u32>().map_err(|_| err(format!("bad exponent in `{factor}`")))?)
                        }
                        None => (factor, 1),
                    };
                    let &i = index.get(name).ok_or_else(|| err(format!("unknown variable `{name}`")))?;
                    exps[i] += e;
                }
            }
            gens.push(Monomial::new(exps));
        }
        MonomialIdeal::new(ambient, gens)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(IdealJson {
            ambient: self.ambient.clone(),
            gens: self.gens.iter().map(|g| g.exps().to_vec()).collect(),
        })
        .expect("plain data")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<MonomialIdeal> {
        let parsed: IdealJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse { line: 1, msg: e.to_string() })?;
        MonomialIdeal::from_exponents(parsed.ambient, &parsed.gens)
    }
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(names(n), &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn minimal_generators_are_kept() {
        let i = ideal(2, &[&[1, 0], &[2, 1], &[0, 3], &[1, 0]]);
        assert_eq!(i.len(), 2);
        assert_eq!(i.gens()[0], Monomial::new(vec![1, 0]));
    }

    #[test]
    fn powers() {
        let x = ideal(1, &[&[1]]);
        assert_eq!(x.power(3).unwrap(), ideal(1, &[&[3]]));
        let j_c4 = ideal(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(j_c4.power(2).unwrap(), ideal(4, &[&[2, 0, 2, 0], &[1, 1, 1, 1], &[0, 2, 0, 2]]));
        assert_eq!(j_c4.power(1).unwrap(), j_c4);
        assert_eq!(j_c4.power(0), Err(Error::InvalidPower(0)));
    }

    #[test]
    fn intersections() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(2, &[&[1, 1]]));
        let a = ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(a.intersect(&x).unwrap(), ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.intersect(&ideal(3, &[&[1, 0, 0]])), Err(Error::AmbientMismatch));
    }

    #[test]
    fn truncations() {
        // (x2, x1x3) at degree 2: x2 times each variable, plus x1x3.
        let i = ideal(3, &[&[0, 1, 0], &[1, 0, 1]]);
        let t = i.truncation(2);
        assert_eq!(t, ideal(3, &[&[0, 2, 0], &[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]));
        assert!(i.truncation(0).is_zero());
        let eq = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(eq.truncation(2), eq);
    }

    #[test]
    fn text_and_json_formats() {
        let i = ideal(3, &[&[2, 0, 1], &[0, 1, 0]]);
        assert_eq!(i.to_text(), "x2\nx1^2*x3\n");
        assert_eq!(MonomialIdeal::parse_text(names(3), &i.to_text()).unwrap(), i);
        assert_eq!(MonomialIdeal::from_json(&i.to_json()).unwrap(), i);
        assert_eq!(i.to_json()["gens"][1], serde_json::json!([2, 0, 1]));
        assert!(matches!(MonomialIdeal::parse_text(names(2), "x1\nx9"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn degree_monomials() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 0), vec![Monomial::one(4)]);
    }

    fn arb_gens() -> impl Strategy<Value = Vec<Vec<u32>>> {
        prop::collection::vec(prop::collection::vec(0u32..3, 4), 1..8)
    }

    proptest! {
        #[test]
        fn stored_generators_are_an_antichain(gens in arb_gens(), other in arb_gens()) {
            let a = MonomialIdeal::from_exponents(names(4), &gens).unwrap();
            let b = MonomialIdeal::from_exponents(names(4), &other).unwrap();
            for i in [a.clone(), a.product(&b).unwrap(), a.intersect(&b).unwrap(), a.power(2).unwrap()] {
                for (x, g) in i.gens().iter().enumerate() {
                    for (y, h) in i.gens().iter().enumerate() {
                        prop_assert!(x == y || !g.divides(h));
                    }
                }
                prop_assert!(i.gens().windows(2).all(|w| w[0] < w[1]));
            }
        }

        #[test]
        fn intersection_membership(gens in arb_gens(), other in arb_gens(), probe in prop::collection::vec(0u32..4, 4)) {
            let a = MonomialIdeal::from_exponents(names(4), &gens).unwrap();
            let b = MonomialIdeal::from_exponents(names(4), &other).unwrap();
            let m = Monomial::new(probe);
            prop_assert_eq!(a.intersect(&b).unwrap().contains(&m), a.contains(&m) && b.contains(&m));
        }
    }
}
