//! Symmetric polynomials in the Schur basis.
//!
//! Polynomials may carry several blocks of variables (one per Grassmannian
//! factor); they are required to be symmetric within each block only. Schur
//! expansions are indexed by one partition per block.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lr::{lr_product, Bounds};
use crate::partition::{enumerate_bounded, Partition};

/// Exponent vector of a monomial, concatenated over all variable blocks.
pub type Exponents = Vec<u8>;

/// An explicit polynomial with integer coefficients, variables grouped into blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    blocks: Vec<usize>,
    terms: HashMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero(blocks: Vec<usize>) -> Self {
        Polynomial {
            blocks,
            terms: HashMap::new(),
        }
    }

    pub fn one(blocks: Vec<usize>) -> Self {
        let n = blocks.iter().sum();
        let mut p = Self::zero(blocks);
        p.terms.insert(vec![0; n], BigInt::one());
        p
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn num_vars(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn terms(&self) -> &HashMap<Exponents, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u8]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Adds `coeff * x^exps`, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        assert_eq!(exps.len(), self.num_vars(), "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.blocks != other.blocks {
            return Err(Error::VariableMismatch(self.blocks.clone(), other.blocks.clone()));
        }
        let mut out = Polynomial::zero(self.blocks.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies by the linear form `sum_v form[v] * x_v`.
    pub(crate) fn mul_linear(&self, form: &[i64]) -> Polynomial {
        let mut out = Polynomial::zero(self.blocks.clone());
        out.terms.reserve(self.terms.len() * 2);
        for (e, c) in &self.terms {
            for (v, &a) in form.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut e2 = e.clone();
                e2[v] += 1;
                out.add_term(e2, c * a);
            }
        }
        out
    }

    pub(crate) fn add_assign(&mut self, other: Polynomial) {
        for (e, c) in other.terms {
            self.add_term(e, c);
        }
    }

    /// Splits an exponent vector into its per-block slices.
    fn split<'a>(&self, exps: &'a [u8]) -> Vec<&'a [u8]> {
        let mut out = Vec::with_capacity(self.blocks.len());
        let mut at = 0;
        for &b in &self.blocks {
            out.push(&exps[at..at + b]);
            at += b;
        }
        out
    }

    /// Coefficients of the monomial symmetric functions `m_lambda`, read off at
    /// block-wise weakly decreasing exponents. Assumes block-wise symmetry.
    pub(crate) fn orbit_coefficients(&self) -> BTreeMap<Vec<Partition>, BigInt> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let slices = self.split(e);
            if slices.iter().all(|s| s.windows(2).all(|w| w[0] >= w[1])) {
                let key = slices.iter().map(|s| Partition::from_exponents(s)).collect();
                out.insert(key, c.clone());
            }
        }
        out
    }

    /// Verifies block-wise symmetry, then returns the orbit coefficients.
    fn checked_orbit_coefficients(&self) -> Result<BTreeMap<Vec<Partition>, BigInt>> {
        let mut orbit_members: HashMap<Exponents, usize> = HashMap::new();
        for (e, c) in &self.terms {
            let slices = self.split(e);
            let mut sorted: Exponents = Vec::with_capacity(e.len());
            for s in &slices {
                let mut s = s.to_vec();
                s.sort_unstable_by(|a, b| b.cmp(a));
                sorted.extend(s);
            }
            if self.terms.get(&sorted) != Some(c) {
                return Err(Error::NotSymmetric);
            }
            *orbit_members.entry(sorted).or_insert(0) += 1;
        }
        for (rep, count) in &orbit_members {
            let expected: u128 = self.split(rep).iter().map(|s| orbit_size(s)).product();
            if expected != *count as u128 {
                return Err(Error::NotSymmetric);
            }
        }
        Ok(self.orbit_coefficients())
    }
}

/// Number of distinct rearrangements of an exponent vector.
fn orbit_size(exps: &[u8]) -> u128 {
    let mut counts: BTreeMap<u8, u128> = BTreeMap::new();
    for &e in exps {
        *counts.entry(e).or_insert(0) += 1;
    }
    let mut out: u128 = 1;
    let mut seen: u128 = 0;
    for c in counts.values() {
        for i in 1..=*c {
            seen += 1;
            out = out * seen / i;
        }
    }
    out
}

/// A finite integer combination of products of Schur polynomials, one per
/// variable block. `num_vars[i]` is the number of variables in block `i`.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurPoly {
    num_vars: Vec<usize>,
    terms: BTreeMap<Vec<Partition>, BigInt>,
}

impl SchurPoly {
    pub fn zero(num_vars: Vec<usize>) -> Self {
        SchurPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: Vec<usize>) -> Self {
        let key = vec![Partition::empty(); num_vars.len()];
        let mut s = Self::zero(num_vars);
        s.terms.insert(key, BigInt::one());
        s
    }

    /// `s_lam` in a single block of `num_vars` variables.
    pub fn single(lam: Partition, num_vars: usize) -> Self {
        let mut s = Self::zero(vec![num_vars]);
        s.add_term(vec![lam], BigInt::one());
        s
    }

    pub fn from_terms(
        num_vars: Vec<usize>,
        terms: impl IntoIterator<Item = (Vec<Partition>, BigInt)>,
    ) -> Self {
        let mut s = Self::zero(num_vars);
        for (k, c) in terms {
            s.add_term(k, c);
        }
        s
    }

    pub fn num_vars(&self) -> &[usize] {
        &self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Partition>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &[Partition]) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Adds a term; partitions longer than their block's variable count vanish
    /// identically and are dropped.
    pub fn add_term(&mut self, key: Vec<Partition>, coeff: BigInt) {
        assert_eq!(key.len(), self.num_vars.len(), "partition tuple length");
        if coeff.is_zero() || key.iter().zip(&self.num_vars).any(|(p, &n)| p.len() > n) {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &SchurPoly) -> Result<SchurPoly> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, by: &BigInt) -> SchurPoly {
        let mut out = SchurPoly::zero(self.num_vars.clone());
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * by);
        }
        out
    }

    fn same_vars(&self, other: &SchurPoly) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VariableMismatch(
                self.num_vars.clone(),
                other.num_vars.clone(),
            ));
        }
        Ok(())
    }

    /// Monomial expansion, block by block.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.num_vars.clone());
        for (key, c) in &self.terms {
            let mut acc: Vec<(Exponents, BigInt)> = vec![(Vec::new(), c.clone())];
            for (lam, &n) in key.iter().zip(&self.num_vars) {
                let block = schur_monomials(lam, n);
                let mut next = Vec::with_capacity(acc.len() * block.len());
                for (e, c) in &acc {
                    for (be, bc) in &block {
                        let mut e2 = e.clone();
                        e2.extend_from_slice(be);
                        next.push((e2, c * bc));
                    }
                }
                acc = next;
            }
            for (e, c) in acc {
                out.add_term(e, c);
            }
        }
        out
    }
}

impl fmt::Debug for SchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurPoly{:?}[{}]", self.num_vars, self)
    }
}

impl fmt::Display for SchurPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let body: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let slots: Vec<String> = k.iter().map(|p| p.to_string()).collect();
                format!("{}*s[{}]", c, slots.join("|"))
            })
            .collect();
        write!(f, "{}", body.join(" + "))
    }
}

/// One serialized term: `{"partition_tuple": [[2,1],[]], "coefficient": "3"}`.
struct TermRef<'a>(&'a [Partition], &'a BigInt);

impl Serialize for TermRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("partition_tuple", self.0)?;
        st.serialize_field("coefficient", &self.1.to_string())?;
        st.end()
    }
}

impl Serialize for SchurPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            seq.serialize_element(&TermRef(k, c))?;
        }
        seq.end()
    }
}

/// Product in the Schur basis through Littlewood-Richardson coefficients.
pub fn schur_multiply(a: &SchurPoly, b: &SchurPoly) -> Result<SchurPoly> {
    a.same_vars(b)?;
    let mut out = SchurPoly::zero(a.num_vars.clone());
    for (ka, ca) in &a.terms {
        for (kb, cb) in &b.terms {
            let coeff = ca * cb;
            let mut acc: Vec<(Vec<Partition>, BigInt)> = vec![(Vec::new(), coeff)];
            for ((la, lb), &n) in ka.iter().zip(kb).zip(&a.num_vars) {
                let prod = lr_product(la, lb, Bounds::rows(n));
                let mut next = Vec::with_capacity(acc.len() * prod.len());
                for (key, c) in &acc {
                    for (nu, m) in &prod {
                        let mut k2 = key.clone();
                        k2.push(nu.clone());
                        next.push((k2, c * BigInt::from(*m)));
                    }
                }
                acc = next;
            }
            for (k, c) in acc {
                out.add_term(k, c);
            }
        }
    }
    Ok(out)
}

/// Schur expansion of a single-block symmetric polynomial given by its
/// monomial-orbit coefficients (`m_lambda` coefficients).
pub fn monomial_to_schur(
    orbit_coeffs: &BTreeMap<Partition, BigInt>,
    num_vars: usize,
) -> Result<SchurPoly> {
    let keyed = orbit_coeffs
        .iter()
        .map(|(p, c)| (vec![p.clone()], c.clone()))
        .collect();
    let terms = orbits_to_schur(keyed, &[num_vars])?;
    Ok(SchurPoly::from_terms(vec![num_vars], terms))
}

/// Schur expansion of an explicit polynomial; rejects input that is not
/// symmetric within each variable block.
pub fn polynomial_to_schur(poly: &Polynomial) -> Result<SchurPoly> {
    let orbits = poly.checked_orbit_coefficients()?;
    let terms = orbits_to_schur(orbits, poly.blocks())?;
    Ok(SchurPoly::from_terms(poly.blocks().to_vec(), terms))
}

/// Converts orbit coefficients to Schur coefficients one block at a time.
pub(crate) fn orbits_to_schur(
    orbits: BTreeMap<Vec<Partition>, BigInt>,
    num_vars: &[usize],
) -> Result<BTreeMap<Vec<Partition>, BigInt>> {
    for key in orbits.keys() {
        for (p, &n) in key.iter().zip(num_vars) {
            if p.len() > n {
                return Err(Error::TooManyParts(p.to_string(), n));
            }
        }
    }
    let mut current = orbits;
    for slot in 0..num_vars.len() {
        let mut groups: BTreeMap<Vec<Partition>, BTreeMap<Partition, BigInt>> = BTreeMap::new();
        for (mut key, c) in current {
            let p = key.remove(slot);
            groups.entry(key).or_default().insert(p, c);
        }
        let mut next = BTreeMap::new();
        for (rest, group) in groups {
            for (p, c) in leading_term_subtraction(group, num_vars[slot]) {
                let mut key = rest.clone();
                key.insert(slot, p);
                next.insert(key, c);
            }
        }
        current = next;
    }
    Ok(current)
}

/// Repeatedly strips the dominance-leading orbit `m_mu` by subtracting
/// `c * s_mu = c * sum_nu K(mu, nu) m_nu`.
fn leading_term_subtraction(
    mut orbits: BTreeMap<Partition, BigInt>,
    num_vars: usize,
) -> BTreeMap<Partition, BigInt> {
    orbits.retain(|_, c| !c.is_zero());
    let mut out = BTreeMap::new();
    // lex order refines dominance among partitions of equal weight, so the
    // lex-largest key is dominance-maximal within its degree
    while let Some((lead, c)) = orbits.pop_last() {
        for nu in partitions_below(&lead, num_vars) {
            let k = kostka(&lead, &nu);
            if k.is_zero() {
                continue;
            }
            let slot = orbits.entry(nu.clone()).or_default();
            *slot -= &c * k;
            if slot.is_zero() {
                orbits.remove(&nu);
            }
        }
        out.insert(lead, c);
    }
    out
}

/// Partitions strictly dominated by `lead` with at most `num_vars` parts.
fn partitions_below(lead: &Partition, num_vars: usize) -> Vec<Partition> {
    enumerate_bounded(lead.weight(), lead.part(0), num_vars)
        .into_iter()
        .filter(|nu| nu != lead && lead.dominates(nu))
        .collect()
}

thread_local! {
    static KOSTKA: RefCell<HashMap<(Vec<usize>, Vec<usize>), BigInt>> = RefCell::new(HashMap::new());
}

/// Kostka number `K(lam, mu)`: semistandard tableaux of shape `lam` and content `mu`.
/// The content may be any composition; it is sorted first.
pub fn kostka(lam: &Partition, content: &Partition) -> BigInt {
    if lam.weight() != content.weight() || !lam.dominates(content) {
        return BigInt::zero();
    }
    kostka_rec(lam.parts(), content.parts())
}

fn kostka_rec(shape: &[usize], content: &[usize]) -> BigInt {
    if content.is_empty() {
        return if shape.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if shape.len() > content.len() {
        return BigInt::zero();
    }
    let key = (shape.to_vec(), content.to_vec());
    if let Some(v) = KOSTKA.with(|k| k.borrow().get(&key).cloned()) {
        return v;
    }
    // the largest letter occupies a horizontal strip of size `last`
    let (&last, rest) = content.split_last().unwrap();
    let mut total = BigInt::zero();
    let mut inner = shape.to_vec();
    strips(shape, 0, last, &mut inner, &mut |smaller| {
        let trimmed: Vec<usize> = smaller.iter().copied().take_while(|&p| p > 0).collect();
        total += kostka_rec(&trimmed, rest);
    });
    KOSTKA.with(|k| k.borrow_mut().insert(key, total.clone()));
    total
}

/// Enumerates `inner` with `shape / inner` a horizontal strip of `remaining` boxes.
fn strips(
    shape: &[usize],
    row: usize,
    remaining: usize,
    inner: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if remaining == 0 {
            f(inner);
        }
        return;
    }
    let below = shape.get(row + 1).copied().unwrap_or(0);
    let room = shape[row] - below;
    let room_after: usize = (row + 1..shape.len())
        .map(|r| shape[r] - shape.get(r + 1).copied().unwrap_or(0))
        .sum();
    let lo = remaining.saturating_sub(room_after);
    for take in lo..=room.min(remaining) {
        inner[row] = shape[row] - take;
        strips(shape, row + 1, remaining - take, inner, f);
    }
    inner[row] = shape[row];
}

/// Monomial expansion of `s_lam` in `n` variables via Kostka numbers.
pub fn schur_monomials(lam: &Partition, n: usize) -> Vec<(Exponents, BigInt)> {
    let mut out = Vec::new();
    if lam.len() > n {
        return out;
    }
    let w = lam.weight();
    let mut exps = vec![0u8; n];
    compositions(w, 0, &mut exps, &mut |e| {
        let k = kostka(lam, &Partition::from_exponents(e));
        if !k.is_zero() {
            out.push((e.to_vec(), k));
        }
    });
    out
}

fn compositions(remaining: usize, at: usize, exps: &mut Vec<u8>, f: &mut dyn FnMut(&[u8])) {
    if at + 1 == exps.len() {
        exps[at] = remaining as u8;
        f(exps);
        exps[at] = 0;
        return;
    }
    if exps.is_empty() {
        if remaining == 0 {
            f(exps);
        }
        return;
    }
    for v in 0..=remaining {
        exps[at] = v as u8;
        compositions(remaining - v, at + 1, exps, f);
    }
    exps[at] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn orbit(entries: &[(&[usize], i64)]) -> BTreeMap<Partition, BigInt> {
        entries.iter().map(|(k, c)| (p(k), BigInt::from(*c))).collect()
    }

    #[test]
    fn kostka_small() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(kostka(&p(&[3, 2, 1]), &p(&[1, 1, 1, 1, 1, 1])), BigInt::from(16));
        assert_eq!(kostka(&p(&[2, 2]), &p(&[2, 1, 1])), BigInt::from(1));
        assert_eq!(kostka(&p(&[2, 2]), &p(&[3, 1])), BigInt::zero());
    }

    #[test]
    fn orbit_conversions() {
        let s = monomial_to_schur(&orbit(&[(&[2], 1), (&[1, 1], 1)]), 2).unwrap();
        assert_eq!(s, SchurPoly::single(p(&[2]), 2));
        let s = monomial_to_schur(&orbit(&[(&[1, 1], 1)]), 3).unwrap();
        assert_eq!(s, SchurPoly::single(p(&[1, 1]), 3));
        let s = monomial_to_schur(&orbit(&[(&[2], 11), (&[1, 1], 32)]), 2).unwrap();
        assert_eq!(s.coefficient(&[p(&[2])]), BigInt::from(11));
        assert_eq!(s.coefficient(&[p(&[1, 1])]), BigInt::from(21));
        assert_eq!(s.terms().len(), 2);
        assert!(monomial_to_schur(&orbit(&[(&[1, 1, 1], 1)]), 2).is_err());
    }

    #[test]
    fn rejects_non_symmetric() {
        let mut poly = Polynomial::zero(vec![2]);
        poly.add_term(vec![2, 0], BigInt::one());
        assert_eq!(polynomial_to_schur(&poly), Err(Error::NotSymmetric));
        poly.add_term(vec![0, 2], BigInt::from(2));
        assert_eq!(polynomial_to_schur(&poly), Err(Error::NotSymmetric));
    }

    #[test]
    fn products() {
        let s1 = SchurPoly::single(p(&[1]), 2);
        let sq = schur_multiply(&s1, &s1).unwrap();
        assert_eq!(sq.terms().len(), 2);
        let s1 = SchurPoly::single(p(&[1]), 1);
        assert_eq!(schur_multiply(&s1, &s1).unwrap(), SchurPoly::single(p(&[2]), 1));
        let s21 = SchurPoly::single(p(&[2, 1]), 3);
        let sq = schur_multiply(&s21, &s21).unwrap();
        assert_eq!(sq.coefficient(&[p(&[3, 2, 1])]), BigInt::from(2));
        assert!(schur_multiply(&s21, &SchurPoly::single(p(&[1]), 2)).is_err());
    }

    #[test]
    fn monomial_round_trip() {
        let s = SchurPoly::from_terms(
            vec![3, 2],
            [
                (vec![p(&[2, 1]), p(&[1])], BigInt::from(3)),
                (vec![p(&[1, 1, 1]), p(&[])], BigInt::from(-2)),
            ],
        );
        let back = polynomial_to_schur(&s.to_polynomial()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn json_terms() {
        let s = SchurPoly::from_terms(vec![2, 2], [(vec![p(&[1]), p(&[])], BigInt::from(4))]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"[{"partition_tuple":[[1],[]],"coefficient":"4"}]"#);
    }
}
