//! Bundle expressions over tautological subbundles and their Chern classes.
//!
//! Chern classes come from the splitting principle. Each `Taut(i)` leaf of
//! rank `k` gets the roots `-x_1, ..., -x_k` of block `i`, so that the dual
//! `U_i^*` has roots `x_1, ..., x_k` and `c_j(U_i^*) = e_j(x) = s_{1^j}(x)`.
//! Under the identification `s_lam(x) <-> sigma_lam` this makes
//! `c_j(U^*) = sigma_{1^j}`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::{orbits_to_schur, Polynomial, SchurPoly};

/// A formal bundle built from tautological subbundles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BundleExpr {
    /// Tautological subbundle of factor `factor`, of rank `rank`.
    Taut { factor: usize, rank: usize },
    /// Trivial bundle of the given rank.
    Trivial(usize),
    Dual(Box<BundleExpr>),
    Sum(Box<BundleExpr>, Box<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    Wedge(usize, Box<BundleExpr>),
    Sym(usize, Box<BundleExpr>),
}

impl BundleExpr {
    pub fn taut(factor: usize, rank: usize) -> Self {
        BundleExpr::Taut { factor, rank }
    }

    /// `U_factor^*`, the most common leaf.
    pub fn taut_dual(factor: usize, rank: usize) -> Self {
        Self::taut(factor, rank).dual()
    }

    pub fn trivial(rank: usize) -> Self {
        BundleExpr::Trivial(rank)
    }

    pub fn dual(self) -> Self {
        BundleExpr::Dual(Box::new(self))
    }

    pub fn sum(self, other: BundleExpr) -> Self {
        BundleExpr::Sum(Box::new(self), Box::new(other))
    }

    pub fn tensor(self, other: BundleExpr) -> Self {
        BundleExpr::Tensor(Box::new(self), Box::new(other))
    }

    pub fn wedge(p: usize, e: BundleExpr) -> Self {
        BundleExpr::Wedge(p, Box::new(e))
    }

    pub fn sym(p: usize, e: BundleExpr) -> Self {
        BundleExpr::Sym(p, Box::new(e))
    }

    pub fn rank(&self) -> usize {
        match self {
            BundleExpr::Taut { rank, .. } => *rank,
            BundleExpr::Trivial(r) => *r,
            BundleExpr::Dual(e) => e.rank(),
            BundleExpr::Sum(a, b) => a.rank() + b.rank(),
            BundleExpr::Tensor(a, b) => a.rank() * b.rank(),
            BundleExpr::Wedge(p, e) => binomial(e.rank(), *p),
            BundleExpr::Sym(p, e) => {
                let r = e.rank();
                if r == 0 {
                    usize::from(*p == 0)
                } else {
                    binomial(r + p - 1, *p)
                }
            }
        }
    }

    /// Checks every leaf against the declared per-factor ranks.
    pub fn validate(&self, factor_ranks: &[usize]) -> Result<()> {
        match self {
            BundleExpr::Taut { factor, rank } => match factor_ranks.get(*factor) {
                None => Err(Error::MalformedBundle(format!(
                    "taut({factor}) refers to an undeclared factor"
                ))),
                Some(&k) if k != *rank => Err(Error::MalformedBundle(format!(
                    "taut({factor}) has rank {rank}, factor has rank {k}"
                ))),
                _ => Ok(()),
            },
            BundleExpr::Trivial(_) => Ok(()),
            BundleExpr::Dual(e) | BundleExpr::Sym(_, e) => e.validate(factor_ranks),
            BundleExpr::Wedge(p, e) => {
                if *p > e.rank() {
                    return Err(Error::MalformedBundle(format!(
                        "wedge({p}, _) of a rank {} bundle",
                        e.rank()
                    )));
                }
                e.validate(factor_ranks)
            }
            BundleExpr::Sum(a, b) | BundleExpr::Tensor(a, b) => {
                a.validate(factor_ranks)?;
                b.validate(factor_ranks)
            }
        }
    }

    /// Replaces every `Taut` leaf by `rank_of_leaf(factor)`. Used for the
    /// Borel-Weil count: sections of a polynomial functor of `U^*` on `G(k, n)`
    /// form the same functor of `V_n^*`.
    pub fn with_leaf_ranks(&self, rank_of_leaf: &dyn Fn(usize) -> usize) -> BundleExpr {
        match self {
            BundleExpr::Taut { factor, .. } => BundleExpr::taut(*factor, rank_of_leaf(*factor)),
            BundleExpr::Trivial(r) => BundleExpr::Trivial(*r),
            BundleExpr::Dual(e) => e.with_leaf_ranks(rank_of_leaf).dual(),
            BundleExpr::Sum(a, b) => a
                .with_leaf_ranks(rank_of_leaf)
                .sum(b.with_leaf_ranks(rank_of_leaf)),
            BundleExpr::Tensor(a, b) => a
                .with_leaf_ranks(rank_of_leaf)
                .tensor(b.with_leaf_ranks(rank_of_leaf)),
            BundleExpr::Wedge(p, e) => BundleExpr::wedge(*p, e.with_leaf_ranks(rank_of_leaf)),
            BundleExpr::Sym(p, e) => BundleExpr::sym(*p, e.with_leaf_ranks(rank_of_leaf)),
        }
    }

    /// Chern roots as integer linear forms in the concatenated block variables.
    pub fn roots(&self, factor_ranks: &[usize]) -> Result<Vec<Vec<i64>>> {
        self.validate(factor_ranks)?;
        let offsets: Vec<usize> = factor_ranks
            .iter()
            .scan(0, |acc, &k| {
                let o = *acc;
                *acc += k;
                Some(o)
            })
            .collect();
        let nvars = factor_ranks.iter().sum();
        Ok(self.roots_in(&offsets, nvars))
    }

    fn roots_in(&self, offsets: &[usize], nvars: usize) -> Vec<Vec<i64>> {
        match self {
            BundleExpr::Taut { factor, rank } => (0..*rank)
                .map(|j| {
                    let mut f = vec![0; nvars];
                    f[offsets[*factor] + j] = -1;
                    f
                })
                .collect(),
            BundleExpr::Trivial(r) => vec![vec![0; nvars]; *r],
            BundleExpr::Dual(e) => e
                .roots_in(offsets, nvars)
                .into_iter()
                .map(|f| f.into_iter().map(|a| -a).collect())
                .collect(),
            BundleExpr::Sum(a, b) => {
                let mut r = a.roots_in(offsets, nvars);
                r.extend(b.roots_in(offsets, nvars));
                r
            }
            BundleExpr::Tensor(a, b) => {
                let ra = a.roots_in(offsets, nvars);
                let rb = b.roots_in(offsets, nvars);
                let mut out = Vec::with_capacity(ra.len() * rb.len());
                for x in &ra {
                    for y in &rb {
                        out.push(x.iter().zip(y).map(|(u, v)| u + v).collect());
                    }
                }
                out
            }
            BundleExpr::Wedge(p, e) => {
                let base = e.roots_in(offsets, nvars);
                let mut out = Vec::new();
                subset_sums(&base, *p, 0, &mut vec![0; nvars], &mut out, false);
                out
            }
            BundleExpr::Sym(p, e) => {
                let base = e.roots_in(offsets, nvars);
                let mut out = Vec::new();
                subset_sums(&base, *p, 0, &mut vec![0; nvars], &mut out, true);
                out
            }
        }
    }
}

/// Sums over `p`-subsets (or `p`-multisets when `repeat`) of `base`.
fn subset_sums(
    base: &[Vec<i64>],
    p: usize,
    from: usize,
    acc: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
    repeat: bool,
) {
    if p == 0 {
        out.push(acc.clone());
        return;
    }
    for i in from..base.len() {
        for (a, b) in acc.iter_mut().zip(&base[i]) {
            *a += b;
        }
        let next = if repeat { i } else { i + 1 };
        subset_sums(base, p - 1, next, acc, out, repeat);
        for (a, b) in acc.iter_mut().zip(&base[i]) {
            *a -= b;
        }
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::Taut { factor, .. } => write!(f, "taut({factor})"),
            BundleExpr::Trivial(r) => write!(f, "triv({r})"),
            BundleExpr::Dual(e) => write!(f, "dual({e})"),
            BundleExpr::Sum(a, b) => write!(f, "sum({a},{b})"),
            BundleExpr::Tensor(a, b) => write!(f, "tensor({a},{b})"),
            BundleExpr::Wedge(p, e) => write!(f, "wedge({p},{e})"),
            BundleExpr::Sym(p, e) => write!(f, "sym({p},{e})"),
        }
    }
}

/// Elementary symmetric polynomials `e_0 .. e_max` of the given roots, each as
/// an explicit homogeneous polynomial. When `only_top` is set, only `e_max`
/// is needed and lower degrees that can no longer reach it are discarded.
fn elementary(roots: &[Vec<i64>], blocks: &[usize], max: usize, only_top: bool) -> Vec<Polynomial> {
    let roots: Vec<&Vec<i64>> = roots.iter().filter(|r| r.iter().any(|&a| a != 0)).collect();
    let mut e: Vec<Polynomial> = (0..=max)
        .map(|k| {
            if k == 0 {
                Polynomial::one(blocks.to_vec())
            } else {
                Polynomial::zero(blocks.to_vec())
            }
        })
        .collect();
    let n = roots.len();
    for (j, r) in roots.iter().enumerate() {
        let remaining = n - j - 1;
        let top = max.min(j + 1);
        for k in (1..=top).rev() {
            if e[k - 1].is_empty() {
                continue;
            }
            let add = e[k - 1].mul_linear(r);
            e[k].add_assign(add);
        }
        if only_top {
            for (k, poly) in e.iter_mut().enumerate() {
                if k + remaining < max {
                    *poly = Polynomial::zero(blocks.to_vec());
                }
            }
        }
    }
    e
}

fn to_schur(poly: &Polynomial) -> Result<SchurPoly> {
    let terms = orbits_to_schur(poly.orbit_coefficients(), poly.blocks())?;
    Ok(SchurPoly::from_terms(poly.blocks().to_vec(), terms))
}

/// The degree-`degree` Chern class of `e`, in the Schur basis of the dual
/// tautological roots of each factor. `factor_ranks[i]` is the rank `k_i`.
pub fn chern_class(e: &BundleExpr, degree: usize, factor_ranks: &[usize]) -> Result<SchurPoly> {
    let roots = e.roots(factor_ranks)?;
    if degree > e.rank() {
        return Ok(SchurPoly::zero(factor_ranks.to_vec()));
    }
    let polys = elementary(&roots, factor_ranks, degree, true);
    to_schur(&polys[degree])
}

/// Chern classes `c_0 .. c_max` of `e` (zero above the rank).
pub fn chern_classes(e: &BundleExpr, max: usize, factor_ranks: &[usize]) -> Result<Vec<SchurPoly>> {
    let roots = e.roots(factor_ranks)?;
    let top = max.min(e.rank());
    let polys = elementary(&roots, factor_ranks, top, false);
    let mut out = polys.iter().map(to_schur).collect::<Result<Vec<_>>>()?;
    out.resize(max + 1, SchurPoly::zero(factor_ranks.to_vec()));
    Ok(out)
}

/// `sum_i c_i` as a single (mixed-degree) polynomial, mostly for tests.
pub fn total_chern_polynomial(e: &BundleExpr, factor_ranks: &[usize]) -> Result<Polynomial> {
    let roots = e.roots(factor_ranks)?;
    let mut total = Polynomial::one(factor_ranks.to_vec());
    for r in roots {
        let mut shifted = total.mul_linear(&r);
        shifted.add_assign(total);
        total = shifted;
    }
    Ok(total)
}

/// The first Chern class as per-factor multiples of `s_1`.
pub fn first_chern_weights(e: &BundleExpr, factor_ranks: &[usize]) -> Result<Vec<BigInt>> {
    let roots = e.roots(factor_ranks)?;
    let mut out = vec![BigInt::zero(); factor_ranks.len()];
    let mut at = 0;
    for (i, &k) in factor_ranks.iter().enumerate() {
        // each root contributes its coefficient sum over block `i`
        let mut sum = 0i64;
        for r in &roots {
            sum += r[at..at + k].iter().sum::<i64>();
        }
        // c_1 = sum of roots = (sum / k) * (x_1 + ... + x_k) by symmetry
        if k > 0 {
            debug_assert_eq!(sum % k as i64, 0);
            out[i] = BigInt::from(sum / k as i64);
        }
        at += k;
    }
    Ok(out)
}

/// `s_1` in block `slot` of a multi-block layout.
pub fn hyperplane_schur(slot: usize, num_vars: &[usize]) -> SchurPoly {
    let mut key = vec![Partition::empty(); num_vars.len()];
    key[slot] = Partition::row(1);
    SchurPoly::from_terms(num_vars.to_vec(), [(key, BigInt::one())])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn ranks() {
        let u2 = BundleExpr::taut_dual(0, 2);
        assert_eq!(BundleExpr::sym(3, u2.clone()).rank(), 4);
        assert_eq!(
            u2.clone()
                .tensor(BundleExpr::taut_dual(1, 2))
                .tensor(BundleExpr::taut_dual(2, 2))
                .rank(),
            8
        );
        assert_eq!(BundleExpr::wedge(3, BundleExpr::taut_dual(0, 6)).rank(), 20);
        assert_eq!(BundleExpr::sym(0, BundleExpr::trivial(0)).rank(), 1);
    }

    #[test]
    fn validation() {
        let e = BundleExpr::wedge(3, BundleExpr::taut_dual(0, 2));
        assert!(e.validate(&[2]).is_err());
        assert!(BundleExpr::taut_dual(1, 2).validate(&[2]).is_err());
        assert!(BundleExpr::taut_dual(0, 3).validate(&[2]).is_err());
    }

    #[test]
    fn wedge_two_is_staircase() {
        let e = BundleExpr::wedge(2, BundleExpr::taut_dual(0, 5));
        let c = chern_class(&e, 10, &[5]).unwrap();
        assert_eq!(c, SchurPoly::single(p(&[4, 3, 2, 1]), 5));
    }

    #[test]
    fn first_classes() {
        let c = chern_class(&BundleExpr::taut_dual(0, 3), 1, &[3]).unwrap();
        assert_eq!(c, SchurPoly::single(p(&[1]), 3));
        let c = chern_class(&BundleExpr::taut(0, 3), 1, &[3]).unwrap();
        assert_eq!(c, SchurPoly::single(p(&[1]), 3).scale(&BigInt::from(-1)));
        let e = BundleExpr::taut_dual(0, 2)
            .tensor(BundleExpr::taut_dual(1, 2))
            .tensor(BundleExpr::taut_dual(2, 2));
        let c = chern_class(&e, 1, &[2, 2, 2]).unwrap();
        let mut expected = SchurPoly::zero(vec![2, 2, 2]);
        for slot in 0..3 {
            expected = expected.add(&hyperplane_schur(slot, &[2, 2, 2]).scale(&BigInt::from(4))).unwrap();
        }
        assert_eq!(c, expected);
        assert_eq!(first_chern_weights(&e, &[2, 2, 2]).unwrap(), vec![BigInt::from(4); 3]);
    }

    #[test]
    fn above_rank_vanishes() {
        let e = BundleExpr::sym(3, BundleExpr::taut_dual(0, 2));
        assert!(chern_class(&e, 5, &[2]).unwrap().is_zero());
        assert_eq!(chern_class(&e, 0, &[2]).unwrap(), SchurPoly::one(vec![2]));
        let all = chern_classes(&e, 6, &[2]).unwrap();
        assert_eq!(all.len(), 7);
        assert!(all[5].is_zero() && all[6].is_zero());
    }

    #[test]
    fn display_grammar() {
        let e = BundleExpr::wedge(3, BundleExpr::taut_dual(0, 6));
        assert_eq!(e.to_string(), "wedge(3,dual(taut(0)))");
    }
}
