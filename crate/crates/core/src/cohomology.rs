//! Cohomology rings of finite products of Grassmannians.
//!
//! `H^*(G(k, n))` is modelled by Schur classes `sigma_lam` with `lam` in the
//! `k x (n - k)` box; products are Littlewood-Richardson products with the
//! out-of-box shapes dropped. No relation ideal is ever built.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bundle::{chern_classes, first_chern_weights, BundleExpr};
use crate::error::{Error, Result};
use crate::lr::{lr_product, Bounds};
use crate::partition::{Partition, Rect};
use crate::schur::SchurPoly;

/// An ordered product `G(k_1, n_1) x ... x G(k_m, n_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannProduct {
    factors: Vec<(usize, usize)>,
}

impl GrassmannProduct {
    pub fn new(factors: Vec<(usize, usize)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidRing("no factors".into()));
        }
        for &(k, n) in &factors {
            if k == 0 || k >= n {
                return Err(Error::InvalidRing(format!("G({k},{n}) needs 1 <= k < n")));
            }
        }
        Ok(GrassmannProduct { factors })
    }

    pub fn single(k: usize, n: usize) -> Result<Self> {
        Self::new(vec![(k, n)])
    }

    /// `G(k, n)^m`.
    pub fn power(k: usize, n: usize, m: usize) -> Result<Self> {
        Self::new(vec![(k, n); m])
    }

    /// Projective space `P^d = G(1, d + 1)`.
    pub fn projective(d: usize) -> Result<Self> {
        Self::single(1, d + 1)
    }

    pub fn factors(&self) -> &[(usize, usize)] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|&(k, n)| k * (n - k)).sum()
    }

    /// Ranks `k_i` of the tautological subbundles.
    pub fn ranks(&self) -> Vec<usize> {
        self.factors.iter().map(|&(k, _)| k).collect()
    }

    pub fn rect(&self, i: usize) -> Rect {
        let (k, n) = self.factors[i];
        Rect { rows: k, cols: n - k }
    }

    pub fn unit(&self) -> SchubertClass {
        self.sigma(vec![Partition::empty(); self.factors.len()])
    }

    pub fn zero(&self) -> SchubertClass {
        SchubertClass {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The top class: the full box in every factor.
    pub fn point_class(&self) -> SchubertClass {
        self.sigma(self.point_key())
    }

    fn point_key(&self) -> Vec<Partition> {
        (0..self.factors.len()).map(|i| self.rect(i).full()).collect()
    }

    /// `sigma_1` pulled back from factor `i`.
    pub fn hyperplane(&self, i: usize) -> SchubertClass {
        let mut key = vec![Partition::empty(); self.factors.len()];
        key[i] = Partition::row(1);
        self.sigma(key)
    }

    /// A single Schubert class; shapes outside the boxes give zero.
    pub fn sigma(&self, key: Vec<Partition>) -> SchubertClass {
        let mut c = self.zero();
        c.add_term(key, BigInt::one());
        c
    }

    /// Truncates a Schur expansion in the dual tautological roots to the ring.
    pub fn from_schur(&self, s: &SchurPoly) -> Result<SchubertClass> {
        if s.num_vars() != self.ranks().as_slice() {
            return Err(Error::VariableMismatch(s.num_vars().to_vec(), self.ranks()));
        }
        let mut c = self.zero();
        for (k, v) in s.terms() {
            c.add_term(k.clone(), v.clone());
        }
        Ok(c)
    }

    /// `c_degree(e)` as a Schubert class.
    pub fn chern_class(&self, e: &BundleExpr, degree: usize) -> Result<SchubertClass> {
        let s = crate::bundle::chern_class(e, degree, &self.ranks())?;
        self.from_schur(&s)
    }

    /// `c_0(e) .. c_max(e)`.
    pub fn chern_classes(&self, e: &BundleExpr, max: usize) -> Result<Vec<SchubertClass>> {
        chern_classes(e, max, &self.ranks())?
            .iter()
            .map(|s| self.from_schur(s))
            .collect()
    }

    /// Per-factor anticanonical weights: `-K = sum_i n_i sigma_1^{(i)}`.
    pub fn anticanonical_weights(&self) -> Vec<i64> {
        self.factors.iter().map(|&(_, n)| n as i64).collect()
    }

    fn check_same(&self, other: &GrassmannProduct) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch(self.to_string(), other.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for GrassmannProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<((usize, usize), usize)> = Vec::new();
        for &fac in &self.factors {
            match groups.last_mut() {
                Some((g, m)) if *g == fac => *m += 1,
                _ => groups.push((fac, 1)),
            }
        }
        let parts: Vec<String> = groups
            .iter()
            .map(|&((k, n), m)| {
                if m == 1 {
                    format!("G({k},{n})")
                } else {
                    format!("G({k},{n})^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for GrassmannProduct {
    type Err = Error;

    /// Parses `G(2,4)^3`, `G(5,9)` and products joined by `x`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("ring descriptor {s:?}"));
        let mut factors = Vec::new();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        for piece in compact.split(['x', '*']) {
            let body = piece.strip_prefix('G').ok_or_else(bad)?;
            let (inner, power) = match body.split_once(")^") {
                Some((inner, pow)) => (format!("{inner})"), pow.parse::<usize>().map_err(|_| bad())?),
                None => (body.to_string(), 1),
            };
            let inner = inner
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let (k, n) = inner.split_once(',').ok_or_else(bad)?;
            let k: usize = k.parse().map_err(|_| bad())?;
            let n: usize = n.parse().map_err(|_| bad())?;
            if power == 0 {
                return Err(bad());
            }
            factors.extend(std::iter::repeat((k, n)).take(power));
        }
        GrassmannProduct::new(factors)
    }
}

/// An integer combination of Schubert classes on a product of Grassmannians.
#[derive(Clone, PartialEq, Eq)]
pub struct SchubertClass {
    ring: GrassmannProduct,
    terms: BTreeMap<Vec<Partition>, BigInt>,
}

impl SchubertClass {
    pub fn ring(&self) -> &GrassmannProduct {
        &self.ring
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

    /// Adds a term, dropping it if any slot leaves its box.
    pub fn add_term(&mut self, key: Vec<Partition>, coeff: BigInt) {
        assert_eq!(key.len(), self.ring.num_factors(), "partition tuple length");
        if coeff.is_zero() {
            return;
        }
        if key
            .iter()
            .enumerate()
            .any(|(i, p)| !p.fits_in(&self.ring.rect(i)))
        {
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

    /// Total degree if every term has the same one; `Some(0)` for the zero class.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self
            .terms
            .keys()
            .map(|k| k.iter().map(Partition::weight).sum::<usize>());
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    /// Degree-`d` component of a mixed-degree class.
    pub fn component(&self, d: usize) -> SchubertClass {
        let mut out = self.ring.zero();
        for (k, c) in &self.terms {
            if k.iter().map(Partition::weight).sum::<usize>() == d {
                out.terms.insert(k.clone(), c.clone());
            }
        }
        out
    }

    pub fn add(&self, other: &SchubertClass) -> Result<SchubertClass> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchubertClass) -> Result<SchubertClass> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, by: &BigInt) -> SchubertClass {
        let mut out = self.ring.zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * by);
        }
        out
    }

    /// Cup product: factor-wise LR products truncated to each box.
    pub fn multiply(&self, other: &SchubertClass) -> Result<SchubertClass> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.ring.zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut acc: Vec<(Vec<Partition>, BigInt)> = vec![(Vec::new(), ca * cb)];
                for (i, (la, lb)) in ka.iter().zip(kb).enumerate() {
                    let rect = self.ring.rect(i);
                    let prod = cached_lr(la, lb, rect);
                    if prod.is_empty() {
                        acc.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(acc.len() * prod.len());
                    for (key, c) in &acc {
                        for (nu, m) in prod.iter() {
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

    pub fn pow(&self, e: usize) -> Result<SchubertClass> {
        let mut out = self.ring.unit();
        for _ in 0..e {
            out = out.multiply(self)?;
        }
        Ok(out)
    }

    /// Coefficient of the point class.
    pub fn integrate(&self) -> BigInt {
        self.coefficient(&self.ring.point_key())
    }
}

thread_local! {
    static LR_CACHE: RefCell<HashMap<(Partition, Partition, Rect), std::rc::Rc<Vec<(Partition, u64)>>>> =
        RefCell::new(HashMap::new());
}

fn cached_lr(a: &Partition, b: &Partition, rect: Rect) -> std::rc::Rc<Vec<(Partition, u64)>> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let key = (a.clone(), b.clone(), rect);
    if let Some(hit) = LR_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let prod: Vec<(Partition, u64)> = lr_product(a, b, Bounds::rect(rect.rows, rect.cols))
        .into_iter()
        .collect();
    let prod = std::rc::Rc::new(prod);
    LR_CACHE.with(|c| c.borrow_mut().insert(key, prod.clone()));
    prod
}

impl fmt::Display for SchubertClass {
    /// Terms as `c*σ[λ₁|λ₂|...]`, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let body: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let slots: Vec<String> = k
                    .iter()
                    .map(|p| if p.is_empty() { String::new() } else { p.to_string() })
                    .collect();
                format!("{}*σ[{}]", c, slots.join("|"))
            })
            .collect();
        write!(f, "{}", body.join(" + "))
    }
}

impl fmt::Debug for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self, self.ring)
    }
}

/// A term of a serialized class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTerm {
    pub partition_tuple: Vec<Partition>,
    pub coefficient: String,
}

/// JSON form of a class: ring descriptor plus decimal-string coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub ring: String,
    pub terms: Vec<ClassTerm>,
}

impl From<&SchubertClass> for ClassJson {
    fn from(c: &SchubertClass) -> Self {
        ClassJson {
            ring: c.ring.to_string(),
            terms: c
                .terms
                .iter()
                .map(|(k, v)| ClassTerm {
                    partition_tuple: k.clone(),
                    coefficient: v.to_string(),
                })
                .collect(),
        }
    }
}

/// `integrate(c * (sum_i w_i h_i)^d)` with `d = dim - deg(c)`.
pub fn degree_wrt(c: &SchubertClass, weights: &[i64]) -> Result<BigInt> {
    let ring = c.ring();
    if weights.len() != ring.num_factors() {
        return Err(Error::InvalidPolarization(format!(
            "{} weights for {} factors",
            weights.len(),
            ring.num_factors()
        )));
    }
    if weights.iter().any(|&w| w < 0) {
        return Err(Error::InvalidPolarization("negative weight".into()));
    }
    if weights.iter().all(|&w| w == 0) {
        return Err(Error::InvalidPolarization("all weights zero".into()));
    }
    let deg = c.degree().ok_or(Error::NotHomogeneous)?;
    if deg > ring.dim() {
        return Err(Error::DegreeTooLarge {
            degree: deg,
            dim: ring.dim(),
        });
    }
    let mut h = ring.zero();
    for (i, &w) in weights.iter().enumerate() {
        h = h.add(&ring.hyperplane(i).scale(&BigInt::from(w)))?;
    }
    let mut acc = c.clone();
    for _ in 0..ring.dim() - deg {
        acc = acc.multiply(&h)?;
    }
    Ok(acc.integrate())
}

/// Degeneracy class of a map from a trivial bundle of rank `e_rank` to `F`:
/// `det( c_{(f_rank - r) + j - i}(F) )` of size `e_rank - r`.
/// `f_chern[i]` is `c_i(F)`; missing entries are zero.
pub fn porteous_class(
    ring: &GrassmannProduct,
    e_rank: usize,
    f_chern: &[SchubertClass],
    f_rank: usize,
    r: usize,
) -> Result<SchubertClass> {
    let max = e_rank.min(f_rank);
    if r > max {
        return Err(Error::RankOutOfRange { r, max });
    }
    for c in f_chern {
        ring.check_same(c.ring())?;
    }
    let size = e_rank - r;
    let shift = (f_rank - r) as isize;
    let entry = |i: usize, j: usize| -> SchubertClass {
        let idx = shift + j as isize - i as isize;
        if idx < 0 || idx as usize > f_rank {
            return ring.zero();
        }
        f_chern.get(idx as usize).cloned().unwrap_or_else(|| ring.zero())
    };
    let matrix: Vec<Vec<SchubertClass>> = (0..size)
        .map(|i| (0..size).map(|j| entry(i, j)).collect())
        .collect();
    determinant(ring, &matrix)
}

/// Laplace expansion along the first row.
fn determinant(ring: &GrassmannProduct, m: &[Vec<SchubertClass>]) -> Result<SchubertClass> {
    let n = m.len();
    if n == 0 {
        return Ok(ring.unit());
    }
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut out = ring.zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<SchubertClass>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].multiply(&determinant(ring, &minor)?)?;
        out = if j % 2 == 0 { out.add(&term)? } else { out.sub(&term)? };
    }
    Ok(out)
}

/// A K-theory class `positive - negative`, enough to describe kernel bundles
/// `F = ker(A -> B)` of surjections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualBundle {
    pub positive: BundleExpr,
    pub negative: Option<BundleExpr>,
}

impl VirtualBundle {
    pub fn kernel(source: BundleExpr, target: BundleExpr) -> Self {
        VirtualBundle {
            positive: source,
            negative: Some(target),
        }
    }

    pub fn rank(&self) -> isize {
        self.positive.rank() as isize - self.negative.as_ref().map_or(0, |n| n.rank() as isize)
    }

    pub fn dual(&self) -> Self {
        VirtualBundle {
            positive: self.positive.clone().dual(),
            negative: self.negative.clone().map(BundleExpr::dual),
        }
    }

    /// `c_0 .. c_max` of the virtual class: `c(positive) / c(negative)`.
    pub fn chern_classes(&self, ring: &GrassmannProduct, max: usize) -> Result<Vec<SchubertClass>> {
        let pos = ring.chern_classes(&self.positive, max)?;
        match &self.negative {
            None => Ok(pos),
            Some(neg) => {
                let inv = inverse_total(ring, &ring.chern_classes(neg, max)?)?;
                graded_product(ring, &pos, &inv, max)
            }
        }
    }

    /// First Chern class as per-factor multiples of `sigma_1`.
    pub fn first_chern_weights(&self, ring: &GrassmannProduct) -> Result<Vec<BigInt>> {
        let ranks = ring.ranks();
        let mut w = first_chern_weights(&self.positive, &ranks)?;
        if let Some(neg) = &self.negative {
            for (a, b) in w.iter_mut().zip(first_chern_weights(neg, &ranks)?) {
                *a -= b;
            }
        }
        Ok(w)
    }
}

impl From<BundleExpr> for VirtualBundle {
    fn from(e: BundleExpr) -> Self {
        VirtualBundle {
            positive: e,
            negative: None,
        }
    }
}

impl fmt::Display for VirtualBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.negative {
            None => write!(f, "{}", self.positive),
            Some(n) => write!(f, "[{}] - [{}]", self.positive, n),
        }
    }
}

/// Graded inverse of a total class `1 + c_1 + c_2 + ...` up to the same length.
pub fn inverse_total(ring: &GrassmannProduct, c: &[SchubertClass]) -> Result<Vec<SchubertClass>> {
    let mut s = vec![ring.unit()];
    for k in 1..c.len() {
        let mut acc = ring.zero();
        for i in 1..=k {
            acc = acc.sub(&c[i].multiply(&s[k - i])?)?;
        }
        s.push(acc);
    }
    Ok(s)
}

fn graded_product(
    ring: &GrassmannProduct,
    a: &[SchubertClass],
    b: &[SchubertClass],
    max: usize,
) -> Result<Vec<SchubertClass>> {
    (0..=max)
        .map(|k| {
            let mut acc = ring.zero();
            for i in 0..=k {
                if let (Some(x), Some(y)) = (a.get(i), b.get(k - i)) {
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.add(&x.multiply(y)?)?;
                    }
                }
            }
            Ok(acc)
        })
        .collect()
}

/// Fundamental class, dimension and adjunction index of the zero locus of a
/// general section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroLocusProfile {
    pub class: SchubertClass,
    pub dim: usize,
    /// Per factor, `n_i` minus the `sigma_1^{(i)}` coefficient of `c_1`.
    pub index: Vec<BigInt>,
    /// Set when the top Chern class vanishes identically.
    pub empty: bool,
}

impl ZeroLocusProfile {
    /// The common index when all factors agree, e.g. the Fano index.
    pub fn uniform_index(&self) -> Option<BigInt> {
        let first = self.index.first()?;
        self.index.iter().all(|i| i == first).then(|| first.clone())
    }
}

pub fn zero_locus_profile(
    ring: &GrassmannProduct,
    bundle: &VirtualBundle,
) -> Result<ZeroLocusProfile> {
    let rank = bundle.rank();
    if rank < 0 {
        return Err(Error::MalformedBundle(format!("negative rank {rank}")));
    }
    let rank = rank as usize;
    if rank > ring.dim() {
        return Err(Error::RankExceedsDimension {
            rank,
            dim: ring.dim(),
        });
    }
    let classes = bundle.chern_classes(ring, rank)?;
    let class = classes[rank].clone();
    let c1 = bundle.first_chern_weights(ring)?;
    let index = ring
        .anticanonical_weights()
        .into_iter()
        .zip(c1)
        .map(|(n, c)| BigInt::from(n) - c)
        .collect();
    Ok(ZeroLocusProfile {
        empty: class.is_zero(),
        class,
        dim: ring.dim() - rank,
        index,
    })
}

/// `c_1(wedge^3 T) - c_1(T)` on `G(6, 9)` for the tautological `T`: the first
/// Chern class of the rank 14 kernel bundle away from the exceptional locus.
pub fn kernel_c1_on_complement() -> SchubertClass {
    let ring = GrassmannProduct::single(6, 9).expect("valid ring");
    let t = BundleExpr::taut(0, 6);
    let f = VirtualBundle::kernel(BundleExpr::wedge(3, t.clone()), t);
    f.chern_classes(&ring, 1).expect("well-formed bundle")[1].clone()
}

/// Tangent bundle of a Grassmannian product as `sum_i (U_i^* (x) V_i) - U_i^* (x) U_i`.
pub fn tangent_bundle(ring: &GrassmannProduct) -> VirtualBundle {
    let mut pos: Option<BundleExpr> = None;
    let mut neg: Option<BundleExpr> = None;
    let join = |acc: Option<BundleExpr>, e: BundleExpr| match acc {
        None => Some(e),
        Some(a) => Some(a.sum(e)),
    };
    for (i, &(k, n)) in ring.factors().iter().enumerate() {
        for _ in 0..n {
            pos = join(pos, BundleExpr::taut_dual(i, k));
        }
        neg = join(neg, BundleExpr::taut_dual(i, k).tensor(BundleExpr::taut(i, k)));
    }
    VirtualBundle {
        positive: pos.expect("nonempty ring"),
        negative: neg,
    }
}

/// Topological Euler characteristic of the zero locus `Z` of a general section
/// of `e`: `integral of c_top(e) * c_dim(T_P - e)`.
pub fn euler_characteristic_of_zero_locus(
    ring: &GrassmannProduct,
    e: &BundleExpr,
) -> Result<BigInt> {
    let profile = zero_locus_profile(ring, &e.clone().into())?;
    let t = tangent_bundle(ring);
    let normal_removed = VirtualBundle {
        positive: t.positive,
        negative: Some(match t.negative {
            Some(n) => n.sum(e.clone()),
            None => e.clone(),
        }),
    };
    let tz = normal_removed.chern_classes(ring, profile.dim)?;
    Ok(profile.class.multiply(&tz[profile.dim])?.integrate())
}

/// Kinds of homogeneous spaces whose dimensions are needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HomogeneousKind {
    Grassmannian,
    Isotropic,
    Orthogonal,
}

/// Dimension of `G(k, n)`, of `IG(k, n)` for a nondegenerate symplectic form on
/// even `n`, or of `OG(k, n)` for a nondegenerate quadratic form.
pub fn homogeneous_dims(kind: HomogeneousKind, k: usize, n: usize) -> Result<usize> {
    let bad = |why: &str| Err(Error::InvalidHomogeneous(format!("{kind:?}({k},{n}): {why}")));
    if k == 0 || k >= n {
        return bad("needs 1 <= k < n");
    }
    match kind {
        HomogeneousKind::Grassmannian => Ok(k * (n - k)),
        HomogeneousKind::Isotropic => {
            if n % 2 != 0 {
                return bad("symplectic space must be even-dimensional");
            }
            if 2 * k > n {
                return bad("isotropic subspaces have dimension at most n/2");
            }
            Ok(k * (n - k) - k * (k - 1) / 2)
        }
        HomogeneousKind::Orthogonal => {
            if 2 * k > n {
                return bad("isotropic subspaces have dimension at most n/2");
            }
            Ok(k * (n - k) - k * (k + 1) / 2)
        }
    }
}

/// True for a class with all coefficients nonnegative.
pub fn is_effective(c: &SchubertClass) -> bool {
    c.terms.values().all(|v| !v.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn ring_descriptors() {
        let r: GrassmannProduct = "G(2,4)^3".parse().unwrap();
        assert_eq!(r.factors(), &[(2, 4); 3]);
        assert_eq!(r.dim(), 12);
        assert_eq!(r.to_string(), "G(2,4)^3");
        let r: GrassmannProduct = "G(2,4) x G(3,6)".parse().unwrap();
        assert_eq!(r.to_string(), "G(2,4)xG(3,6)");
        assert!("G(4,4)".parse::<GrassmannProduct>().is_err());
        assert!("H(1,2)".parse::<GrassmannProduct>().is_err());
    }

    #[test]
    fn products_on_g24() {
        let g = GrassmannProduct::single(2, 4).unwrap();
        let s1 = g.hyperplane(0);
        let sq = s1.multiply(&s1).unwrap();
        let expected = g.sigma(vec![p(&[2])]).add(&g.sigma(vec![p(&[1, 1])])).unwrap();
        assert_eq!(sq, expected);
        let s2 = g.sigma(vec![p(&[2])]);
        assert_eq!(s2.multiply(&s2).unwrap(), g.sigma(vec![p(&[2, 2])]));
        assert_eq!(g.sigma(vec![p(&[2, 2])]).integrate(), BigInt::one());
        assert_eq!(degree_wrt(&g.unit(), &[1]).unwrap(), BigInt::from(2));
    }

    #[test]
    fn factors_commute() {
        let g = GrassmannProduct::power(2, 4, 2).unwrap();
        let prod = g.hyperplane(0).multiply(&g.hyperplane(1)).unwrap();
        assert_eq!(prod, g.sigma(vec![p(&[1]), p(&[1])]));
    }

    #[test]
    fn ring_mismatch() {
        let a = GrassmannProduct::single(2, 4).unwrap();
        let b = GrassmannProduct::single(2, 5).unwrap();
        assert!(a.unit().multiply(&b.unit()).is_err());
    }

    #[test]
    fn degree_errors() {
        let g = GrassmannProduct::single(2, 4).unwrap();
        assert!(degree_wrt(&g.unit(), &[-1]).is_err());
        assert!(degree_wrt(&g.unit(), &[0]).is_err());
        let mixed = g.unit().add(&g.hyperplane(0)).unwrap();
        assert_eq!(degree_wrt(&mixed, &[1]), Err(Error::NotHomogeneous));
    }

    #[test]
    fn porteous_edges() {
        let g = GrassmannProduct::single(2, 4).unwrap();
        let e = BundleExpr::taut_dual(0, 2);
        let c = g.chern_classes(&e, 2).unwrap();
        assert_eq!(porteous_class(&g, 1, &c, 2, 1).unwrap(), g.unit());
        assert_eq!(porteous_class(&g, 1, &c, 2, 0).unwrap(), c[2]);
        assert!(porteous_class(&g, 1, &c, 2, 2).is_err());
    }

    #[test]
    fn homogeneous() {
        use HomogeneousKind::*;
        assert_eq!(homogeneous_dims(Isotropic, 3, 8).unwrap(), 12);
        assert_eq!(homogeneous_dims(Isotropic, 3, 6).unwrap(), 6);
        assert_eq!(homogeneous_dims(Orthogonal, 6, 15).unwrap(), 33);
        assert_eq!(homogeneous_dims(Orthogonal, 6, 12).unwrap(), 15);
        assert_eq!(homogeneous_dims(Grassmannian, 6, 9).unwrap(), 18);
        assert!(homogeneous_dims(Isotropic, 3, 9).is_err());
        assert!(homogeneous_dims(Isotropic, 4, 6).is_err());
        assert!(homogeneous_dims(Grassmannian, 0, 3).is_err());
    }

    #[test]
    fn kernel_c1() {
        let g = GrassmannProduct::single(6, 9).unwrap();
        assert_eq!(kernel_c1_on_complement(), g.hyperplane(0).scale(&BigInt::from(-9)));
        let t = BundleExpr::taut(0, 6);
        assert_eq!(g.chern_class(&t, 1).unwrap(), g.hyperplane(0).scale(&BigInt::from(-1)));
        assert_eq!(
            g.chern_class(&BundleExpr::wedge(3, t), 1).unwrap(),
            g.hyperplane(0).scale(&BigInt::from(-10))
        );
    }

    #[test]
    fn zero_locus_errors() {
        let g = GrassmannProduct::single(1, 3).unwrap();
        let big = BundleExpr::trivial(3).into();
        assert!(matches!(
            zero_locus_profile(&g, &big),
            Err(Error::RankExceedsDimension { .. })
        ));
        let triv: VirtualBundle = BundleExpr::trivial(1).into();
        assert!(zero_locus_profile(&g, &triv).unwrap().empty);
    }
}
