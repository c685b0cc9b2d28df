//! Pointwise geometry of a tensor `h` in `V_1^* (x) V_2^* (x) V_3^*` with
//! `dim V_i = 4`: determinantal quartics, the line correspondences between
//! them and the map from pairs of surface points to triples of planes.
//!
//! Axes are numbered 1, 2, 3. A point of `P(V_i)` is a normalized coordinate
//! vector. The incidence surface `S_3` is the set of pairs `(l_1, l_2)` with
//! `h(l_1, l_2, .) = 0`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Fp};
use crate::matrix::ExactMatrix;
use crate::sampling::sample_rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axis {
    One,
    Two,
    Three,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::One, Axis::Two, Axis::Three];

    pub fn index(self) -> usize {
        match self {
            Axis::One => 0,
            Axis::Two => 1,
            Axis::Three => 2,
        }
    }

    pub fn from_number(n: usize) -> Result<Axis> {
        match n {
            1 => Ok(Axis::One),
            2 => Ok(Axis::Two),
            3 => Ok(Axis::Three),
            _ => Err(Error::Dimension(format!("axis {n} is not 1, 2 or 3"))),
        }
    }

    pub fn number(self) -> usize {
        self.index() + 1
    }

    /// The two other axes, in increasing order.
    pub fn others(self) -> (Axis, Axis) {
        match self {
            Axis::One => (Axis::Two, Axis::Three),
            Axis::Two => (Axis::One, Axis::Three),
            Axis::Three => (Axis::One, Axis::Two),
        }
    }
}

/// A point of `P^3`: first nonzero coordinate equal to one.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint<E> {
    coords: Vec<E>,
}

impl<E: Clone + PartialEq + fmt::Debug + fmt::Display> ProjPoint<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, coords: Vec<E>) -> Result<Self> {
        let Some(lead) = coords.iter().position(|c| !field.is_zero(c)) else {
            return Err(Error::Degenerate("zero vector has no projective point".into()));
        };
        let inv = field.inv(&coords[lead]).expect("nonzero");
        Ok(ProjPoint {
            coords: coords.iter().map(|c| field.mul(c, &inv)).collect(),
        })
    }

    pub fn coords(&self) -> &[E] {
        &self.coords
    }
}

impl<E: fmt::Display> fmt::Display for ProjPoint<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", c.join(":"))
    }
}

impl<E: fmt::Display> fmt::Debug for ProjPoint<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type Point<F> = ProjPoint<<F as Field>::Elem>;

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor444<F: Field> {
    field: F,
    h: Vec<F::Elem>,
}

impl<F: Field> Tensor444<F> {
    pub fn from_fn(field: &F, mut entry: impl FnMut(usize, usize, usize) -> F::Elem) -> Self {
        let mut h = Vec::with_capacity(64);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    h.push(entry(i, j, k));
                }
            }
        }
        Tensor444 {
            field: field.clone(),
            h,
        }
    }

    /// `a (x) b (x) c`.
    pub fn rank_one(field: &F, a: &[F::Elem], b: &[F::Elem], c: &[F::Elem]) -> Self {
        Self::from_fn(field, |i, j, k| field.mul(&a[i], &field.mul(&b[j], &c[k])))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        &self.h[16 * i + 4 * j + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F::Elem) {
        self.h[16 * i + 4 * j + k] = v;
    }

    fn entry(&self, idx: [usize; 3]) -> &F::Elem {
        self.get(idx[0], idx[1], idx[2])
    }

    /// Contraction with `point` along `axis`; rows and columns follow the
    /// remaining axes in increasing order.
    pub fn slice_matrix(&self, axis: Axis, point: &[F::Elem]) -> ExactMatrix<F> {
        let f = &self.field;
        let (ra, ca) = axis.others();
        let mut m = ExactMatrix::zeros(f, 4, 4);
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = f.zero();
                for (s, p) in point.iter().enumerate() {
                    let mut idx = [0; 3];
                    idx[axis.index()] = s;
                    idx[ra.index()] = r;
                    idx[ca.index()] = c;
                    acc = f.add(&acc, &f.mul(p, self.entry(idx)));
                }
                m.set(r, c, acc);
            }
        }
        m
    }

    /// Determinant of the slice: the equation of the determinantal quartic.
    pub fn quartic_value(&self, axis: Axis, point: &[F::Elem]) -> F::Elem {
        self.slice_matrix(axis, point).det().expect("square")
    }

    /// `h(x_1, x_2, x_3)` with one slot left free, as a linear form on it.
    pub fn partial(&self, free: Axis, points: [Option<&[F::Elem]>; 3]) -> Vec<F::Elem> {
        let f = &self.field;
        (0..4)
            .map(|s| {
                let mut acc = f.zero();
                for i in 0..4 {
                    for j in 0..4 {
                        for k in 0..4 {
                            let idx = [i, j, k];
                            if idx[free.index()] != s {
                                continue;
                            }
                            let mut term = self.entry(idx).clone();
                            for ax in Axis::ALL {
                                if ax == free {
                                    continue;
                                }
                                let p = points[ax.index()].expect("fixed slot");
                                term = f.mul(&term, &p[idx[ax.index()]]);
                            }
                            acc = f.add(&acc, &term);
                        }
                    }
                }
                acc
            })
            .collect()
    }

    /// `h(l_1, l_2, .) = 0`.
    pub fn on_s3(&self, l1: &Point<F>, l2: &Point<F>) -> bool {
        self.partial(Axis::Three, [Some(l1.coords()), Some(l2.coords()), None])
            .iter()
            .all(|v| self.field.is_zero(v))
    }

    /// Whether `h` vanishes on `point_a (x) V_free (x) point_b` style incidences.
    pub fn vanishes_on(&self, state: &Incidence<F>) -> bool {
        let pts = state.slots();
        self.partial(state.free, pts)
            .iter()
            .all(|v| self.field.is_zero(v))
    }

    /// The unique `l_3` with `h(l_1, ., l_3) = 0` for `(l_1, l_2)` on `S_3`.
    pub fn next_line(&self, l1: &Point<F>, l2: &Point<F>) -> Result<Point<F>> {
        if !self.on_s3(l1, l2) {
            return Err(Error::NotOnSurface(format!("({l1}, {l2})")));
        }
        let state = Incidence {
            free: Axis::Three,
            points: [Some(l1.clone()), Some(l2.clone()), None],
        };
        let next = self.elementary_step(&state, Axis::One)?;
        Ok(next.points[2].clone().expect("filled slot"))
    }

    /// Keeps the point on `keep`, frees the other fixed slot and fills the
    /// previously free slot with the unique compatible point.
    pub fn elementary_step(&self, state: &Incidence<F>, keep: Axis) -> Result<Incidence<F>> {
        if keep == state.free {
            return Err(Error::Dimension("the kept axis must carry a point".into()));
        }
        if !self.vanishes_on(state) {
            return Err(Error::NotOnSurface(state.to_string()));
        }
        let f = &self.field;
        let kept = state.points[keep.index()].clone().expect("fixed slot");
        let dropped = Axis::ALL
            .into_iter()
            .find(|&a| a != keep && a != state.free)
            .expect("three axes");
        // rows: dropped axis, columns: free axis
        let slice = self.slice_matrix(keep, kept.coords());
        let m = if dropped.index() < state.free.index() {
            slice
        } else {
            slice.transpose()
        };
        let kernel = m.kernel();
        if kernel.len() != 1 {
            return Err(Error::NonUniqueKernel {
                dim: kernel.len(),
                witness: format!("axis {} point {}", keep.number(), kept),
            });
        }
        let new_point = ProjPoint::new(f, kernel[0].clone())?;
        let mut points = state.points.clone();
        points[dropped.index()] = None;
        points[state.free.index()] = Some(new_point);
        let next = Incidence {
            free: dropped,
            points,
        };
        debug_assert!(self.vanishes_on(&next));
        Ok(next)
    }

    /// One step of the cyclic iteration: the kept axis follows the free one.
    pub fn triality_step(&self, state: &Incidence<F>) -> Result<Incidence<F>> {
        let keep = Axis::from_number(state.free.number() % 3 + 1)?;
        self.elementary_step(state, keep)
    }

    /// Three cyclic steps, returning to a pair on `S_3`.
    pub fn triality(&self, l1: &Point<F>, l2: &Point<F>) -> Result<(Point<F>, Point<F>)> {
        let mut state = Incidence {
            free: Axis::Three,
            points: [Some(l1.clone()), Some(l2.clone()), None],
        };
        for _ in 0..3 {
            state = self.triality_step(&state)?;
        }
        debug_assert_eq!(state.free, Axis::Three);
        let [a, b, _] = state.points;
        Ok((a.expect("filled"), b.expect("filled")))
    }

    /// The triple of planes attached to two points of `S_3`.
    pub fn triple_from_pair(
        &self,
        z1: (&Point<F>, &Point<F>),
        z2: (&Point<F>, &Point<F>),
    ) -> Result<PlaneTriple<F>> {
        for (a, b) in [z1, z2] {
            if !self.on_s3(a, b) {
                return Err(Error::NotOnSurface(format!("({a}, {b})")));
            }
        }
        if z1.0 == z2.0 {
            return Err(Error::Degenerate(format!("both points share l_1 = {}", z1.0)));
        }
        if z1.1 == z2.1 {
            return Err(Error::Degenerate(format!("both points share l_2 = {}", z1.1)));
        }
        let f = &self.field;
        let t1 = vec![z1.0.coords().to_vec(), z2.0.coords().to_vec()];
        let t2 = vec![z1.1.coords().to_vec(), z2.1.coords().to_vec()];
        // h(t1_a, t2_b, .) as forms on V_3; the diagonal terms vanish on S_3
        let mut forms = Vec::new();
        for a in &t1 {
            for b in &t2 {
                forms.push(self.partial(Axis::Three, [Some(a), Some(b), None]));
            }
        }
        let image = ExactMatrix::from_rows(f, forms)?;
        let rank = image.rank();
        if rank != 2 {
            return Err(Error::Degenerate(format!("T_1 (x) T_2 -> V_3^* has rank {rank}")));
        }
        let t3 = image.kernel();
        let triple = PlaneTriple {
            planes: [t1, t2, t3],
        };
        if !self.vanishes_on_triple(&triple) {
            return Err(Error::Degenerate("h does not vanish on the triple".into()));
        }
        Ok(triple)
    }

    /// The eight values `h(a, b, c)` over basis vectors of the three planes.
    pub fn vanishes_on_triple(&self, triple: &PlaneTriple<F>) -> bool {
        let [t1, t2, t3] = &triple.planes;
        t1.iter().all(|a| {
            t2.iter().all(|b| {
                let form = self.partial(Axis::Three, [Some(a), Some(b), None]);
                t3.iter().all(|c| {
                    let v = form
                        .iter()
                        .zip(c)
                        .fold(self.field.zero(), |acc, (x, y)| self.field.add(&acc, &self.field.mul(x, y)));
                    self.field.is_zero(&v)
                })
            })
        })
    }

    /// `V_3 -> T_1^* (x) T_2^*` in the bases of the planes, as a `4 x 4`
    /// matrix whose column `k` lists `h(t1_a, t2_b, e_k)` over `(a, b)`.
    pub fn restricted_map(&self, triple: &PlaneTriple<F>) -> ExactMatrix<F> {
        let [t1, t2, _] = &triple.planes;
        let rows: Vec<Vec<F::Elem>> = t1
            .iter()
            .flat_map(|a| t2.iter().map(move |b| (a, b)))
            .map(|(a, b)| self.partial(Axis::Three, [Some(a), Some(b), None]))
            .collect();
        ExactMatrix::from_rows(&self.field, rows).expect("rectangular")
    }

    /// Exact quartic polynomial `det slice(axis, x)` in the coordinates `x`.
    pub fn quartic_polynomial(&self, axis: Axis) -> QuarticPoly<F> {
        let f = &self.field;
        // entry (r, c) of the slice is a linear form in x
        let linear = |r: usize, c: usize| -> Vec<F::Elem> {
            let unit = |s: usize| -> Vec<F::Elem> { (0..4).map(|t| if t == s { f.one() } else { f.zero() }).collect() };
            (0..4)
                .map(|s| self.slice_matrix(axis, &unit(s)).get(r, c).clone())
                .collect()
        };
        let entries: Vec<Vec<Vec<F::Elem>>> =
            (0..4).map(|r| (0..4).map(|c| linear(r, c)).collect()).collect();
        let mut out = QuarticPoly::zero(f);
        for perm in permutations4() {
            let sign = permutation_sign(&perm);
            let mut term = QuarticPoly::constant(f, if sign { f.one() } else { f.neg(&f.one()) });
            for (r, &c) in perm.iter().enumerate() {
                term = term.mul_linear(&entries[r][c]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Rejects tensors whose quartics vanish identically or whose slices have
    /// rank at most two at every probed point.
    pub fn check_general(&self, probes: &[Vec<F::Elem>]) -> Result<()> {
        for axis in Axis::ALL {
            if self.quartic_polynomial(axis).is_zero() {
                return Err(Error::NonGeneral(format!("quartic along axis {} vanishes identically", axis.number())));
            }
            if !probes.iter().any(|p| self.slice_matrix(axis, p).rank() >= 3) {
                return Err(Error::NonGeneral(format!(
                    "every probed slice along axis {} has rank at most 2",
                    axis.number()
                )));
            }
        }
        Ok(())
    }
}

impl Tensor444<Fp> {
    pub fn random<R: Rng + ?Sized>(field: &Fp, rng: &mut R) -> Self {
        Self::from_fn(field, |_, _, _| field.random(rng))
    }

    /// Surface points found by scanning the `p + 1` points of random lines
    /// in `P(V_1)` for rank-3 slices. Fails with [`Error::Exhausted`] after
    /// `max_lines` lines.
    pub fn find_surface_points<R: Rng + ?Sized>(
        &self,
        count: usize,
        max_lines: usize,
        rng: &mut R,
    ) -> Result<Vec<(Point<Fp>, Point<Fp>)>> {
        let f = self.field;
        let mut found = Vec::new();
        let mut seen = BTreeSet::new();
        let mut lines = 0;
        while found.len() < count {
            if lines == max_lines {
                return Err(Error::Exhausted {
                    found: found.len(),
                    wanted: count,
                    attempts: lines,
                });
            }
            lines += 1;
            let a: Vec<u64> = (0..4).map(|_| f.random(rng)).collect();
            let b: Vec<u64> = (0..4).map(|_| f.random(rng)).collect();
            if ExactMatrix::from_columns(&f, 4, &[a.clone(), b.clone()])?.rank() != 2 {
                continue;
            }
            let on_line = f
                .elements()
                .map(|t| a.iter().zip(&b).map(|(x, y)| f.add(x, &f.mul(&t, y))).collect::<Vec<u64>>())
                .chain(std::iter::once(b.clone()));
            for x in on_line {
                let m = self.slice_matrix(Axis::One, &x);
                if m.det()? != 0 || m.rank() != 3 {
                    continue;
                }
                let l2 = m.transpose().kernel().remove(0);
                let p1 = ProjPoint::new(&f, x)?;
                let p2 = ProjPoint::new(&f, l2)?;
                debug_assert!(self.on_s3(&p1, &p2));
                if seen.insert((p1.clone(), p2.clone())) {
                    found.push((p1, p2));
                    if found.len() == count {
                        break;
                    }
                }
            }
        }
        Ok(found)
    }

    /// Base points of the pencil `V_3 -> T_1^* (x) T_2^*` on `P(T_1) x P(T_2)`,
    /// found by running over the `p + 1` points of `P(T_1)`.
    pub fn pencil_base_points(&self, triple: &PlaneTriple<Fp>) -> Result<Vec<(Point<Fp>, Point<Fp>)>> {
        let f = self.field;
        let map = self.restricted_map(triple);
        let image = map.image();
        if image.len() != 2 {
            return Err(Error::Degenerate(format!("restricted map has rank {}", image.len())));
        }
        // each image vector is a bilinear form beta(a, b) over (a, b) in {0,1}^2
        let [t1, t2, _] = &triple.planes;
        let s_points = f
            .elements()
            .map(|t| vec![1, t])
            .chain(std::iter::once(vec![0, 1]));
        let mut out = Vec::new();
        for s in s_points {
            // rows: the two forms evaluated at s, as linear forms on T_2
            let rows: Vec<Vec<u64>> = image
                .iter()
                .map(|beta| {
                    (0..2)
                        .map(|bb| {
                            let v0 = f.mul(&s[0], &beta[bb]);
                            let v1 = f.mul(&s[1], &beta[2 + bb]);
                            f.add(&v0, &v1)
                        })
                        .collect()
                })
                .collect();
            let m = ExactMatrix::from_rows(&f, rows)?;
            match m.rank() {
                2 => continue,
                0 => return Err(Error::Degenerate("pencil vanishes on a whole fibre".into())),
                _ => {}
            }
            let t = m.kernel().remove(0);
            let combine = |basis: &Vec<Vec<u64>>, c: &[u64]| -> Vec<u64> {
                (0..4)
                    .map(|i| f.add(&f.mul(&c[0], &basis[0][i]), &f.mul(&c[1], &basis[1][i])))
                    .collect()
            };
            out.push((
                ProjPoint::new(&f, combine(t1, &s))?,
                ProjPoint::new(&f, combine(t2, &t))?,
            ));
        }
        Ok(out)
    }
}

/// A slot pattern `l_a (x) l_b (x) V_free` on which `h` vanishes.
#[derive(Clone, PartialEq)]
pub struct Incidence<F: Field> {
    pub free: Axis,
    pub points: [Option<Point<F>>; 3],
}

impl<F: Field> Incidence<F> {
    fn slots(&self) -> [Option<&[F::Elem]>; 3] {
        [
            self.points[0].as_ref().map(|p| p.coords()),
            self.points[1].as_ref().map(|p| p.coords()),
            self.points[2].as_ref().map(|p| p.coords()),
        ]
    }
}

impl<F: Field> fmt::Display for Incidence<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| match p {
                Some(p) => p.to_string(),
                None => format!("V{}", i + 1),
            })
            .collect();
        write!(f, "{}", parts.join(" (x) "))
    }
}

impl<F: Field> fmt::Debug for Incidence<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Planes `T_1, T_2, T_3`, each given by two basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneTriple<F: Field> {
    pub planes: [Vec<Vec<F::Elem>>; 3],
}

/// A homogeneous polynomial in four variables.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticPoly<F: Field> {
    field: F,
    terms: BTreeMap<[u8; 4], F::Elem>,
}

impl<F: Field> QuarticPoly<F> {
    fn zero(field: &F) -> Self {
        QuarticPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn constant(field: &F, c: F::Elem) -> Self {
        let mut p = Self::zero(field);
        p.insert([0; 4], c);
        p
    }

    fn insert(&mut self, exps: [u8; 4], c: F::Elem) {
        let f = &self.field;
        let v = match self.terms.get(&exps) {
            Some(old) => f.add(old, &c),
            None => c,
        };
        if f.is_zero(&v) {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, v);
        }
    }

    fn mul_linear(&self, form: &[F::Elem]) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f);
        for (exps, c) in &self.terms {
            for (s, a) in form.iter().enumerate() {
                if f.is_zero(a) {
                    continue;
                }
                let mut e = *exps;
                e[s] += 1;
                out.insert(e, f.mul(c, a));
            }
        }
        out
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn eval(&self, x: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        self.terms.iter().fold(f.zero(), |acc, (e, c)| {
            let mut term = c.clone();
            for (s, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = f.mul(&term, &x[s]);
                }
            }
            f.add(&acc, &term)
        })
    }
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| p.contains(&i)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// True for even permutations.
fn permutation_sign(p: &[usize; 4]) -> bool {
    let mut inversions = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Outcome of the sampled checks on one random tensor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleySuite {
    pub prime: u64,
    pub seed: u64,
    pub points: usize,
    pub on_quartic: usize,
    pub next_line_unique: usize,
    pub next_line_verified: usize,
    pub step_involutive: usize,
    pub triality_closes: usize,
    pub triality_nontrivial: usize,
    pub pairs: usize,
    pub pairs_skipped: usize,
    pub triples_vanish: usize,
    pub map_rank_two: usize,
    pub round_trips: usize,
    pub witnesses: Vec<String>,
}

pub fn cayley_suite(prime: u64, seed: u64, count: usize) -> Result<CayleySuite> {
    let field = Fp::new(prime)?;
    let mut rng = sample_rng(seed, "cayley/tensor", 0);
    let h = Tensor444::random(&field, &mut rng);
    let probes: Vec<Vec<u64>> = (0..8).map(|_| (0..4).map(|_| field.random(&mut rng)).collect()).collect();
    h.check_general(&probes)?;

    let mut rng = sample_rng(seed, "cayley/points", 0);
    let max_lines = 100 * count.max(1);
    let points = h.find_surface_points(count, max_lines, &mut rng)?;

    let mut s = CayleySuite {
        prime,
        seed,
        points: points.len(),
        on_quartic: 0,
        next_line_unique: 0,
        next_line_verified: 0,
        step_involutive: 0,
        triality_closes: 0,
        triality_nontrivial: 0,
        pairs: 0,
        pairs_skipped: 0,
        triples_vanish: 0,
        map_rank_two: 0,
        round_trips: 0,
        witnesses: Vec::new(),
    };

    for (l1, l2) in &points {
        if h.quartic_value(Axis::One, l1.coords()) == 0 {
            s.on_quartic += 1;
        }
        match h.next_line(l1, l2) {
            Ok(l3) => {
                s.next_line_unique += 1;
                let state = Incidence {
                    free: Axis::Two,
                    points: [Some(l1.clone()), None, Some(l3.clone())],
                };
                if h.vanishes_on(&state) {
                    s.next_line_verified += 1;
                }
                match h.elementary_step(&state, Axis::One) {
                    Ok(back) if back.points[1].as_ref() == Some(l2) => s.step_involutive += 1,
                    Ok(back) => s.witnesses.push(format!("step not involutive at {state}: {back}")),
                    Err(e) => s.witnesses.push(format!("reverse step at {state}: {e}")),
                }
            }
            Err(e) => s.witnesses.push(format!("next line at ({l1}, {l2}): {e}")),
        }
        match h.triality(l1, l2) {
            Ok((m1, m2)) => {
                if h.on_s3(&m1, &m2) {
                    s.triality_closes += 1;
                }
                if (&m1, &m2) != (l1, l2) {
                    s.triality_nontrivial += 1;
                }
            }
            Err(e) => s.witnesses.push(format!("triality at ({l1}, {l2}): {e}")),
        }
    }

    let n = points.len();
    for i in 0..n {
        if n < 2 {
            break;
        }
        let (a1, a2) = &points[i];
        let (b1, b2) = &points[(i + 1) % n];
        s.pairs += 1;
        let triple = match h.triple_from_pair((a1, a2), (b1, b2)) {
            Ok(t) => t,
            Err(Error::Degenerate(msg)) if a1 == b1 || a2 == b2 => {
                s.pairs_skipped += 1;
                s.witnesses.push(format!("pair {i} skipped: {msg}"));
                continue;
            }
            Err(e) => {
                s.witnesses.push(format!("pair {i}: {e}"));
                continue;
            }
        };
        if h.vanishes_on_triple(&triple) {
            s.triples_vanish += 1;
        }
        if h.restricted_map(&triple).rank() == 2 {
            s.map_rank_two += 1;
        }
        match h.pencil_base_points(&triple) {
            Ok(base) => {
                let got: BTreeSet<_> = base.into_iter().collect();
                let want: BTreeSet<_> = [(a1.clone(), a2.clone()), (b1.clone(), b2.clone())].into_iter().collect();
                if got == want {
                    s.round_trips += 1;
                } else {
                    s.witnesses.push(format!("pair {i}: base points {got:?}"));
                }
            }
            Err(e) => s.witnesses.push(format!("pair {i}: {e}")),
        }
    }
    Ok(s)
}
