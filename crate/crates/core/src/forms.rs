//! Alternating 2- and 3-forms on a 9-dimensional space and the pointwise
//! linear algebra of 6-spaces, kernels and graph subspaces.
//!
//! Vectors are coordinate columns in the standard basis `e_1, ..., e_9`
//! (index 0 is `e_1`). 3-forms and 3-vectors use the lexicographic basis of
//! triples `i < j < k`.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Fp};
use crate::matrix::ExactMatrix;
use crate::sampling::sample_rng;

/// Dimension of the ambient space of the odd-symplectic geometry.
pub const AMBIENT: usize = 9;

/// `(i, j)` with `i < j < n`, lexicographic.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// `(i, j, k)` with `i < j < k < n`, lexicographic.
pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .collect()
}

/// A skew-symmetric bilinear form.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewForm<F: Field> {
    matrix: ExactMatrix<F>,
}

impl<F: Field> SkewForm<F> {
    pub fn from_matrix(matrix: ExactMatrix<F>) -> Result<Self> {
        let f = matrix.field().clone();
        if matrix.rows() != matrix.cols() {
            return Err(Error::Dimension("2-form matrix must be square".into()));
        }
        let n = matrix.rows();
        for i in 0..n {
            for j in 0..n {
                if *matrix.get(i, j) != f.neg(matrix.get(j, i)) {
                    return Err(Error::Dimension(format!("entry ({i},{j}) breaks skew symmetry")));
                }
            }
        }
        Ok(SkewForm { matrix })
    }

    /// `sum c * e_i^* ^ e_j^*` over the listed pairs.
    pub fn from_pairs(field: &F, n: usize, terms: &[(usize, usize, i64)]) -> Result<Self> {
        let mut m = ExactMatrix::zeros(field, n, n);
        for &(i, j, c) in terms {
            if i >= n || j >= n || i == j {
                return Err(Error::Dimension(format!("pair ({i},{j}) in dimension {n}")));
            }
            let v = field.add(m.get(i, j), &field.from_i64(c));
            m.set(i, j, v.clone());
            m.set(j, i, field.neg(&v));
        }
        Self::from_matrix(m)
    }

    /// `e_5^* ^ e_6^* + e_4^* ^ e_7^* + e_3^* ^ e_8^* + e_2^* ^ e_9^*`, kernel `e_1`.
    pub fn normal_form(field: &F) -> Self {
        Self::from_pairs(field, AMBIENT, &[(4, 5, 1), (3, 6, 1), (2, 7, 1), (1, 8, 1)])
            .expect("static form")
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> &F {
        self.matrix.field()
    }

    pub fn matrix(&self) -> &ExactMatrix<F> {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn eval(&self, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
        let f = self.field();
        let mx = self.matrix.apply(y).expect("vector length");
        x.iter()
            .zip(&mx)
            .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
    }

    /// Gram matrix on the given basis.
    pub fn restrict(&self, basis: &Subspace<F>) -> SkewForm<F> {
        let b = basis.matrix();
        let m = b
            .transpose()
            .mul(&self.matrix)
            .and_then(|m| m.mul(b))
            .expect("ambient dimensions agree");
        SkewForm { matrix: m }
    }

    /// Coefficient on `e_i^* ^ e_j^*`.
    pub fn coeff(&self, i: usize, j: usize) -> &F::Elem {
        self.matrix.get(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        self.matrix.kernel()
    }
}

impl SkewForm<Fp> {
    /// A random form of rank exactly `n - 1` on odd `n` (or `n` on even `n`);
    /// deficient draws are rejected.
    pub fn random<R: Rng + ?Sized>(field: &Fp, n: usize, rng: &mut R) -> Self {
        let target = n - n % 2;
        loop {
            let mut m = ExactMatrix::zeros(field, n, n);
            for (i, j) in pairs(n) {
                let v = field.random(rng);
                m.set(i, j, v);
                m.set(j, i, field.neg(&v));
            }
            if m.rank() == target {
                return SkewForm { matrix: m };
            }
        }
    }
}

/// An alternating 3-form, dense over lexicographic triples.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeForm<F: Field> {
    field: F,
    dim: usize,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> ThreeForm<F> {
    pub fn zero(field: &F, dim: usize) -> Self {
        ThreeForm {
            field: field.clone(),
            dim,
            coeffs: vec![field.zero(); triples(dim).len()],
        }
    }

    pub fn from_coeffs(field: &F, dim: usize, coeffs: Vec<F::Elem>) -> Result<Self> {
        if coeffs.len() != triples(dim).len() {
            return Err(Error::Dimension(format!(
                "{} coefficients for a 3-form in dimension {dim}",
                coeffs.len()
            )));
        }
        Ok(ThreeForm {
            field: field.clone(),
            dim,
            coeffs,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    fn position(&self, i: usize, j: usize, k: usize) -> usize {
        triples(self.dim)
            .iter()
            .position(|&t| t == (i, j, k))
            .expect("sorted triple")
    }

    /// Coefficient with full antisymmetry in the indices.
    pub fn get(&self, i: usize, j: usize, k: usize) -> F::Elem {
        let f = &self.field;
        if i == j || j == k || i == k {
            return f.zero();
        }
        let mut idx = [i, j, k];
        let mut sign = false;
        for a in 0..3 {
            for b in 0..2 - a {
                if idx[b] > idx[b + 1] {
                    idx.swap(b, b + 1);
                    sign = !sign;
                }
            }
        }
        let v = self.coeffs[self.position(idx[0], idx[1], idx[2])].clone();
        if sign {
            f.neg(&v)
        } else {
            v
        }
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F::Elem) {
        assert!(i < j && j < k && k < self.dim, "sorted triple");
        let p = self.position(i, j, k);
        self.coeffs[p] = v;
    }

    /// `Omega(x, y, z)`.
    pub fn eval(&self, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for (t, (i, j, k)) in triples(self.dim).into_iter().enumerate() {
            let c = &self.coeffs[t];
            if f.is_zero(c) {
                continue;
            }
            acc = f.add(&acc, &f.mul(c, &minor3(f, x, y, z, i, j, k)));
        }
        acc
    }

    /// Pull-back to the span of `basis`, in the basis's own coordinates.
    pub fn restrict(&self, basis: &Subspace<F>) -> ThreeForm<F> {
        let vs = basis.vectors();
        let d = vs.len();
        let coeffs = triples(d)
            .into_iter()
            .map(|(a, b, c)| self.eval(&vs[a], &vs[b], &vs[c]))
            .collect();
        ThreeForm {
            field: self.field.clone(),
            dim: d,
            coeffs,
        }
    }

    pub fn add(&self, other: &ThreeForm<F>) -> Result<ThreeForm<F>> {
        if self.dim != other.dim {
            return Err(Error::Dimension("3-forms on different spaces".into()));
        }
        let f = &self.field;
        Ok(ThreeForm {
            field: f.clone(),
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }
}

impl ThreeForm<Fp> {
    pub fn random<R: Rng + ?Sized>(field: &Fp, dim: usize, rng: &mut R) -> Self {
        let coeffs = (0..triples(dim).len()).map(|_| field.random(rng)).collect();
        ThreeForm {
            field: *field,
            dim,
            coeffs,
        }
    }
}

/// `det` of rows `i, j, k` of the columns `x, y, z`.
fn minor3<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem], z: &[F::Elem], i: usize, j: usize, k: usize) -> F::Elem {
    let term = |a: &F::Elem, b: &F::Elem, c: &F::Elem| f.mul(a, &f.mul(b, c));
    let pos = f.add(
        &f.add(&term(&x[i], &y[j], &z[k]), &term(&x[j], &y[k], &z[i])),
        &term(&x[k], &y[i], &z[j]),
    );
    let neg = f.add(
        &f.add(&term(&x[i], &y[k], &z[j]), &term(&x[j], &y[i], &z[k])),
        &term(&x[k], &y[j], &z[i]),
    );
    f.sub(&pos, &neg)
}

/// `beta ^ alpha` for a 1-form `beta` and a 2-form `alpha` on the same space.
pub fn wedge_one_two<F: Field>(beta: &[F::Elem], alpha: &SkewForm<F>) -> Result<ThreeForm<F>> {
    let n = alpha.dim();
    if beta.len() != n {
        return Err(Error::Dimension("1-form and 2-form live on different spaces".into()));
    }
    let f = alpha.field();
    let coeffs = triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            let a = f.mul(&beta[i], alpha.coeff(j, k));
            let b = f.mul(&beta[j], alpha.coeff(i, k));
            let c = f.mul(&beta[k], alpha.coeff(i, j));
            f.add(&f.sub(&a, &b), &c)
        })
        .collect();
    ThreeForm::from_coeffs(f, n, coeffs)
}

/// A subspace given by a basis of full column rank.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    basis: ExactMatrix<F>,
}

impl<F: Field> Subspace<F> {
    pub fn new(field: &F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Result<Self> {
        let basis = ExactMatrix::from_columns(field, ambient, &vectors)?;
        if basis.rank() != vectors.len() {
            return Err(Error::Dimension("basis vectors are linearly dependent".into()));
        }
        Ok(Subspace { basis })
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: &F, ambient: usize, indices: &[usize]) -> Result<Self> {
        let vectors = indices
            .iter()
            .map(|&i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Self::new(field, ambient, vectors)
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    pub fn matrix(&self) -> &ExactMatrix<F> {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<F::Elem>> {
        self.basis.columns()
    }

    /// Whether every vector of `other` lies in this span.
    pub fn contains(&self, other: &Subspace<F>) -> bool {
        let joint = self.basis.hstack(&other.basis).expect("same ambient");
        joint.rank() == self.dim()
    }

    pub fn contains_vector(&self, v: &[F::Elem]) -> bool {
        let col = ExactMatrix::from_columns(self.basis.field(), self.ambient(), &[v.to_vec()])
            .expect("same ambient");
        self.basis.hstack(&col).expect("same ambient").rank() == self.dim()
    }
}

impl Subspace<Fp> {
    /// Column span of a uniform random matrix; rank-deficient draws are redrawn.
    pub fn random<R: Rng + ?Sized>(field: &Fp, ambient: usize, dim: usize, rng: &mut R) -> Self {
        loop {
            let m = ExactMatrix::random(field, ambient, dim, rng);
            if m.rank() == dim {
                return Subspace { basis: m };
            }
        }
    }

    /// Span of `fixed` and `extra` random vectors drawn from the span of `pool`.
    pub fn random_extension<R: Rng + ?Sized>(
        field: &Fp,
        fixed: &[Vec<u64>],
        pool: &[Vec<u64>],
        extra: usize,
        rng: &mut R,
    ) -> Result<Self> {
        let ambient = fixed.first().or(pool.first()).map_or(0, Vec::len);
        for _ in 0..1000 {
            let mut vectors = fixed.to_vec();
            for _ in 0..extra {
                let mut v = vec![0u64; ambient];
                for p in pool {
                    let c = field.random(rng);
                    for (vi, pi) in v.iter_mut().zip(p) {
                        *vi = field.add(vi, &field.mul(&c, pi));
                    }
                }
                vectors.push(v);
            }
            if let Ok(s) = Subspace::new(field, ambient, vectors) {
                return Ok(s);
            }
        }
        Err(Error::Degenerate("pool too small for a random extension".into()))
    }

    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        self.basis.transpose().to_signed_rows()
    }
}

/// Rank of `omega` restricted to a 6-space.
pub fn restriction_rank<F: Field>(omega: &SkewForm<F>, v6: &Subspace<F>) -> Result<usize> {
    if v6.dim() != 6 {
        return Err(Error::Dimension(format!("expected a 6-space, got dimension {}", v6.dim())));
    }
    match omega.restrict(v6).rank() {
        0 => Err(Error::ZeroRestriction),
        r => Ok(r),
    }
}

/// Orbit label `i` with restriction rank `6 - 2i`.
pub fn orbit_of_rank(rank: usize) -> usize {
    (6 - rank) / 2
}

/// The contraction `wedge^3 T -> T`,
/// `a ^ b ^ c -> omega(a,b) c - omega(a,c) b + omega(b,c) a`,
/// as a `dim T x C(dim T, 3)` matrix in the coordinates of the basis of `T`.
pub fn contraction_map<F: Field>(omega: &SkewForm<F>, t: &Subspace<F>) -> ExactMatrix<F> {
    let f = omega.field();
    let w = omega.restrict(t);
    let d = t.dim();
    let cols: Vec<Vec<F::Elem>> = triples(d)
        .into_iter()
        .map(|(a, b, c)| {
            let mut v = vec![f.zero(); d];
            v[c] = f.add(&v[c], w.coeff(a, b));
            v[b] = f.sub(&v[b], w.coeff(a, c));
            v[a] = f.add(&v[a], w.coeff(b, c));
            v
        })
        .collect();
    ExactMatrix::from_columns(f, d, &cols).expect("consistent lengths")
}

/// Kernel and image dimensions of the contraction on a 6-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionDims {
    pub kernel: usize,
    pub image: usize,
}

pub fn contraction_kernel_dim<F: Field>(omega: &SkewForm<F>, t: &Subspace<F>) -> Result<ContractionDims> {
    if t.dim() != 6 {
        return Err(Error::Dimension(format!("expected a 6-space, got dimension {}", t.dim())));
    }
    let m = contraction_map(omega, t);
    let image = m.rank();
    Ok(ContractionDims {
        kernel: m.cols() - image,
        image,
    })
}

/// Ambient coordinates of `x ^ y`, over lexicographic pairs.
fn wedge2<F: Field>(f: &F, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
    pairs(x.len())
        .into_iter()
        .map(|(i, j)| f.sub(&f.mul(&x[i], &y[j]), &f.mul(&x[j], &y[i])))
        .collect()
}

/// Ambient coordinates of `v ^ lam` for a 2-vector `lam` over lexicographic pairs.
fn wedge_vec_bivec<F: Field>(f: &F, v: &[F::Elem], lam: &[F::Elem]) -> Vec<F::Elem> {
    let n = v.len();
    let ps = pairs(n);
    let at = |i: usize, j: usize| -> &F::Elem {
        &lam[ps.iter().position(|&p| p == (i, j)).expect("sorted pair")]
    };
    triples(n)
        .into_iter()
        .map(|(i, j, k)| {
            let a = f.mul(&v[i], at(j, k));
            let b = f.mul(&v[j], at(i, k));
            let c = f.mul(&v[k], at(i, j));
            f.add(&f.sub(&a, &b), &c)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FLambdaDims {
    /// `dim T ^ Lambda`.
    pub t_wedge: usize,
    /// `dim T_4 ^ Lambda`.
    pub t4_wedge: usize,
}

/// `dim T ^ Lambda` and `dim T_4 ^ Lambda` inside `wedge^3 V`.
///
/// `lambda` lists elements of `wedge^2 T_4` in coordinates over the pairs of
/// the basis of `t4`; they must span a hyperplane.
pub fn f_lambda_dim<F: Field>(
    t: &Subspace<F>,
    t4: &Subspace<F>,
    lambda: &[Vec<F::Elem>],
) -> Result<FLambdaDims> {
    if t.dim() != 6 || t4.dim() != 4 {
        return Err(Error::Dimension(format!(
            "expected dimensions 6 and 4, got {} and {}",
            t.dim(),
            t4.dim()
        )));
    }
    if !t.contains(t4) {
        return Err(Error::Dimension("T_4 is not contained in T".into()));
    }
    let f = t.matrix().field().clone();
    let n = t.ambient();
    let basis4 = t4.vectors();
    let p4 = pairs(4);
    if lambda.iter().any(|l| l.len() != p4.len()) {
        return Err(Error::Dimension("elements of wedge^2 T_4 have 6 coordinates".into()));
    }
    let lam_rank = ExactMatrix::from_columns(&f, p4.len(), lambda)?.rank();
    if lam_rank != 5 {
        return Err(Error::Dimension(format!("Lambda has dimension {lam_rank}, expected 5")));
    }
    let ambient_lambda: Vec<Vec<F::Elem>> = lambda
        .iter()
        .map(|coords| {
            let mut acc = vec![f.zero(); n * (n - 1) / 2];
            for (c, &(a, b)) in coords.iter().zip(&p4) {
                if f.is_zero(c) {
                    continue;
                }
                for (slot, w) in acc.iter_mut().zip(wedge2(&f, &basis4[a], &basis4[b])) {
                    *slot = f.add(slot, &f.mul(c, &w));
                }
            }
            acc
        })
        .collect();
    let f = &f;
    let ambient_lambda = &ambient_lambda;
    let span_dim = |vectors: &[Vec<F::Elem>]| -> Result<usize> {
        let cols: Vec<Vec<F::Elem>> = vectors
            .iter()
            .flat_map(|v| ambient_lambda.iter().map(move |l| wedge_vec_bivec(f, v, l)))
            .collect();
        Ok(ExactMatrix::from_columns(f, triples(n).len(), &cols)?.rank())
    };
    Ok(FLambdaDims {
        t_wedge: span_dim(&t.vectors())?,
        t4_wedge: span_dim(&basis4)?,
    })
}

/// Coordinates over the pairs of `T_4` of a basis of the kernel of a linear
/// form on `wedge^2 T_4`.
pub fn hyperplane_of<F: Field>(field: &F, form: &[F::Elem]) -> Result<Vec<Vec<F::Elem>>> {
    let m = ExactMatrix::from_rows(field, vec![form.to_vec()])?;
    let k = m.kernel();
    if k.len() != 5 {
        return Err(Error::Dimension("the linear form on wedge^2 T_4 is zero".into()));
    }
    Ok(k)
}

/// Both sides of the graph-subspace identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphCheck {
    /// `Omega + omega ^ v_0^*` vanishes on the graph `{x + u(x) v_0}` of `u`.
    pub lhs: bool,
    /// `Omega + u ^ omega` vanishes on `T`.
    pub rhs: bool,
    /// The two restricted 3-forms agree coefficient by coefficient.
    pub forms_agree: bool,
}

/// Extends `omega` and `big_omega` on `V_9` to `Omega_0 = Omega + omega ^ v_0^*`
/// on `V_10`, with `v_0` the extra basis vector at index `v0_index`.
pub fn extended_form<F: Field>(
    omega: &SkewForm<F>,
    big_omega: &ThreeForm<F>,
    v0_index: usize,
) -> Result<ThreeForm<F>> {
    let n = omega.dim();
    if big_omega.dim() != n {
        return Err(Error::Dimension("2-form and 3-form live on different spaces".into()));
    }
    if v0_index > n {
        return Err(Error::Dimension(format!("v_0 index {v0_index} outside 0..={n}")));
    }
    let f = omega.field();
    let old = |i: usize| if i < v0_index { i } else { i - 1 };
    let mut out = ThreeForm::zero(f, n + 1);
    for (i, j, k) in triples(n + 1) {
        let v = if k == v0_index {
            // (omega ^ v_0^*)(e_i, e_j, v_0) = omega(e_i, e_j)
            omega.coeff(old(i), old(j)).clone()
        } else if i == v0_index {
            omega.coeff(old(j), old(k)).clone()
        } else if j == v0_index {
            f.neg(omega.coeff(old(i), old(k)))
        } else {
            big_omega.get(old(i), old(j), old(k))
        };
        out.set(i, j, k, v);
    }
    Ok(out)
}

/// Compares the vanishing of `Omega_0` on the graph of `u` over `t` with the
/// vanishing of `Omega + u ^ omega` on `t`. `u` is given by its values on the
/// basis of `t`.
pub fn graph_vanishing_check<F: Field>(
    omega: &SkewForm<F>,
    big_omega: &ThreeForm<F>,
    t: &Subspace<F>,
    u: &[F::Elem],
    v0_index: usize,
) -> Result<GraphCheck> {
    let n = omega.dim();
    if t.ambient() != n || big_omega.dim() != n {
        return Err(Error::Dimension("forms and subspace live on different spaces".into()));
    }
    if t.dim() != 6 {
        return Err(Error::Dimension(format!("expected a 6-space, got dimension {}", t.dim())));
    }
    if u.len() != t.dim() {
        return Err(Error::Dimension("u must have one value per basis vector".into()));
    }
    let f = omega.field();
    let omega0 = extended_form(omega, big_omega, v0_index)?;
    let lifted: Vec<Vec<F::Elem>> = t
        .vectors()
        .into_iter()
        .zip(u)
        .map(|(x, ux)| {
            let mut y = x;
            y.insert(v0_index, ux.clone());
            y
        })
        .collect();
    let t0 = Subspace::new(f, n + 1, lifted)?;
    let lhs_form = omega0.restrict(&t0);

    let rhs_form = big_omega
        .restrict(t)
        .add(&wedge_one_two(u, &omega.restrict(t))?)?;
    Ok(GraphCheck {
        lhs: lhs_form.is_zero(),
        rhs: rhs_form.is_zero(),
        forms_agree: lhs_form == rhs_form,
    })
}

/// The restriction map from 3-forms on the ambient space to 3-forms on `t`,
/// as a matrix over the lexicographic coordinates.
pub fn restriction_matrix<F: Field>(field: &F, t: &Subspace<F>) -> ExactMatrix<F> {
    let n = t.ambient();
    let vs = t.vectors();
    let rows: Vec<Vec<F::Elem>> = triples(t.dim())
        .into_iter()
        .map(|(a, b, c)| {
            triples(n)
                .into_iter()
                .map(|(i, j, k)| minor3(field, &vs[a], &vs[b], &vs[c], i, j, k))
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(field, rows).expect("rectangular")
}

/// Adjusts `start` by a solution of a linear system so that
/// `Omega + u ^ omega` vanishes on `t`.
pub fn solve_graph_vanishing<F: Field>(
    omega: &SkewForm<F>,
    start: &ThreeForm<F>,
    t: &Subspace<F>,
    u: &[F::Elem],
) -> Result<ThreeForm<F>> {
    let f = omega.field();
    let target = start
        .restrict(t)
        .add(&wedge_one_two(u, &omega.restrict(t))?)?;
    let rhs: Vec<F::Elem> = target.coeffs().iter().map(|c| f.neg(c)).collect();
    let correction = restriction_matrix(f, t).solve(&rhs)?;
    start.add(&ThreeForm::from_coeffs(f, omega.dim(), correction)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingPair {
    pub omega_vanishes: bool,
    #[serde(rename = "Omega_vanishes")]
    pub big_omega_vanishes: bool,
}

/// Whether `omega` and `Omega` both vanish on the 5-space `r`.
pub fn vanishing_pair_residual<F: Field>(
    omega: &SkewForm<F>,
    big_omega: &ThreeForm<F>,
    r: &Subspace<F>,
) -> Result<VanishingPair> {
    if r.dim() != 5 {
        return Err(Error::Dimension(format!("expected a 5-space, got dimension {}", r.dim())));
    }
    Ok(VanishingPair {
        omega_vanishes: omega.restrict(r).is_zero(),
        big_omega_vanishes: big_omega.restrict(r).is_zero(),
    })
}

/// Rank of `V/R -> wedge^2 R^*`, `x -> Omega(x, ., .)|_R`, computed on the
/// coordinate complement `complement` of `r`. Rank 4 means injective.
pub fn lifting_map_rank<F: Field>(
    big_omega: &ThreeForm<F>,
    r: &Subspace<F>,
    complement: &Subspace<F>,
) -> Result<usize> {
    if r.dim() != 5 || complement.dim() + r.dim() != r.ambient() {
        return Err(Error::Dimension("need a 5-space and a complement".into()));
    }
    let joint = r.matrix().hstack(complement.matrix())?;
    if joint.rank() != r.ambient() {
        return Err(Error::Dimension("complement meets R".into()));
    }
    let f = big_omega.field.clone();
    let rv = r.vectors();
    let cols: Vec<Vec<F::Elem>> = complement
        .vectors()
        .iter()
        .map(|x| {
            pairs(5)
                .into_iter()
                .map(|(a, b)| big_omega.eval(x, &rv[a], &rv[b]))
                .collect()
        })
        .collect();
    Ok(ExactMatrix::from_columns(&f, 10, &cols)?.rank())
}

/// A random 3-form in `wedge^2 V^* ^ W` for `W = span(e_6^*, ..., e_9^*)`:
/// every coefficient on a triple inside `{0..5}` vanishes.
pub fn random_form_vanishing_on_first_five<R: Rng + ?Sized>(field: &Fp, rng: &mut R) -> ThreeForm<Fp> {
    let mut form = ThreeForm::random(field, AMBIENT, rng);
    for (i, j, k) in triples(AMBIENT) {
        if k < 5 {
            form.set(i, j, k, 0);
        }
    }
    form
}

/// Subspace families used by the orbit sampler.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleKind {
    /// Uniform random 6-spaces.
    Random,
    /// `K` plus five random vectors.
    ContainsKernel,
    /// `K + I + 2` random vectors of `I^perp` for a random isotropic 3-space `I`.
    IsotropicPerp,
}

/// A random isotropic 3-space for `omega`.
pub fn random_isotropic_three<R: Rng + ?Sized>(
    field: &Fp,
    omega: &SkewForm<Fp>,
    rng: &mut R,
) -> Result<Vec<Vec<u64>>> {
    let n = omega.dim();
    let mut chosen: Vec<Vec<u64>> = Vec::new();
    for _ in 0..3 {
        // the omega-orthogonal of the vectors chosen so far
        let pool = if chosen.is_empty() {
            Subspace::coordinate(field, n, &(0..n).collect::<Vec<_>>())?.vectors()
        } else {
            let rows: Vec<Vec<u64>> = chosen
                .iter()
                .map(|c| omega.matrix().transpose().apply(c).expect("length"))
                .collect();
            ExactMatrix::from_rows(field, rows)?.kernel()
        };
        let s = Subspace::random_extension(field, &chosen, &pool, 1, rng)?;
        chosen = s.vectors();
    }
    Ok(chosen)
}

pub fn sample_six_space<R: Rng + ?Sized>(
    field: &Fp,
    omega: &SkewForm<Fp>,
    kind: SampleKind,
    rng: &mut R,
) -> Result<Subspace<Fp>> {
    let n = omega.dim();
    let kernel = omega.kernel();
    if kernel.len() != 1 {
        return Err(Error::Degenerate(format!("2-form has a {}-dimensional kernel", kernel.len())));
    }
    let everything = Subspace::coordinate(field, n, &(0..n).collect::<Vec<_>>())?.vectors();
    match kind {
        SampleKind::Random => Ok(Subspace::random(field, n, 6, rng)),
        SampleKind::ContainsKernel => Subspace::random_extension(field, &kernel, &everything, 5, rng),
        SampleKind::IsotropicPerp => {
            let iso = random_isotropic_three(field, omega, rng)?;
            let rows: Vec<Vec<u64>> = iso
                .iter()
                .map(|c| omega.matrix().transpose().apply(c).expect("length"))
                .collect();
            let perp = ExactMatrix::from_rows(field, rows)?.kernel();
            let mut fixed = kernel.clone();
            fixed.extend(iso);
            Subspace::random_extension(field, &fixed, &perp, 2, rng)
        }
    }
}

/// A 6-space reported with its restriction rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub sample: u64,
    pub label: String,
    pub value: String,
    /// Basis vectors as signed residues, one row per vector.
    pub basis: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSuite {
    pub prime: u64,
    pub seed: u64,
    pub samples: u64,
    /// Restriction-rank histogram per sampled family.
    pub rank_counts: BTreeMap<SampleKind, BTreeMap<usize, u64>>,
    pub normal_form_o2_rank: usize,
    pub normal_form_o1_rank: usize,
    /// Samples outside the family's expected orbit.
    pub witnesses: Vec<Witness>,
}

/// Expected restriction rank of each family for a general draw.
pub fn expected_rank(kind: SampleKind) -> usize {
    match kind {
        SampleKind::Random => 6,
        SampleKind::ContainsKernel => 4,
        SampleKind::IsotropicPerp => 2,
    }
}

/// Samples each family `samples` times against per-sample random 2-forms.
pub fn orbit_suite(prime: u64, seed: u64, samples: u64, kinds: &[SampleKind]) -> Result<OrbitSuite> {
    let field = Fp::new(prime)?;
    let nf = SkewForm::normal_form(&field);
    let o2 = restriction_rank(&nf, &Subspace::coordinate(&field, AMBIENT, &[0, 1, 2, 3, 4, 5])?)?;
    let o1 = restriction_rank(&nf, &Subspace::coordinate(&field, AMBIENT, &[1, 2, 3, 4, 5, 6])?)?;
    let mut rank_counts = BTreeMap::new();
    let mut witnesses = Vec::new();
    for &kind in kinds {
        let counts: &mut BTreeMap<usize, u64> = rank_counts.entry(kind).or_default();
        let stream = format!("orbits/{kind:?}");
        for i in 0..samples {
            let mut rng = sample_rng(seed, &stream, i);
            let omega = SkewForm::random(&field, AMBIENT, &mut rng);
            let v6 = sample_six_space(&field, &omega, kind, &mut rng)?;
            let rank = match restriction_rank(&omega, &v6) {
                Ok(r) => r,
                Err(Error::ZeroRestriction) => 0,
                Err(e) => return Err(e),
            };
            *counts.entry(rank).or_default() += 1;
            if rank != expected_rank(kind) {
                witnesses.push(Witness {
                    sample: i,
                    label: format!("{kind:?}"),
                    value: rank.to_string(),
                    basis: v6.to_signed_rows(),
                });
            }
        }
    }
    Ok(OrbitSuite {
        prime,
        seed,
        samples,
        rank_counts,
        normal_form_o2_rank: o2,
        normal_form_o1_rank: o1,
        witnesses,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelSuite {
    pub prime: u64,
    pub seed: u64,
    pub samples: u64,
    /// Contraction kernel dimension histogram, random 6-spaces.
    pub generic_kernel_dims: BTreeMap<usize, u64>,
    pub o1_kernel_dim: usize,
    pub o2_kernel_dim: usize,
    pub o2_image_is_t4: bool,
    /// Every sample has kernel + image = 20.
    pub rank_nullity_holds: bool,
    /// `(dim T ^ Lambda, dim T_4 ^ Lambda)` histogram over random hyperplanes.
    pub f_lambda_dims: BTreeMap<String, u64>,
    /// Hyperplane spanned by five coordinate 2-vectors, three of them through `t_1`.
    pub degenerate_probe: FLambdaDims,
    pub witnesses: Vec<Witness>,
}

pub fn kernel_suite(prime: u64, seed: u64, samples: u64) -> Result<KernelSuite> {
    let field = Fp::new(prime)?;
    let nf = SkewForm::normal_form(&field);
    let o2_space = Subspace::coordinate(&field, AMBIENT, &[0, 1, 2, 3, 4, 5])?;
    let o1_space = Subspace::coordinate(&field, AMBIENT, &[1, 2, 3, 4, 5, 6])?;
    let o2 = contraction_kernel_dim(&nf, &o2_space)?;
    let o1 = contraction_kernel_dim(&nf, &o1_space)?;

    // image of the contraction on the O_2 representative, back in V_9
    let t4 = Subspace::coordinate(&field, AMBIENT, &[0, 1, 2, 3])?;
    let image_cols: Vec<Vec<u64>> = contraction_map(&nf, &o2_space)
        .image()
        .iter()
        .map(|c| o2_space.matrix().apply(c).expect("length"))
        .collect();
    let o2_image_is_t4 =
        image_cols.len() == 4 && Subspace::new(&field, AMBIENT, image_cols).map_or(false, |s| s.contains(&t4));

    let mut generic = BTreeMap::new();
    let mut rank_nullity = o1.kernel + o1.image == 20 && o2.kernel + o2.image == 20;
    let mut f_dims = BTreeMap::new();
    let mut witnesses = Vec::new();
    for i in 0..samples {
        let mut rng = sample_rng(seed, "kernels", i);
        let omega = SkewForm::random(&field, AMBIENT, &mut rng);
        let t = Subspace::random(&field, AMBIENT, 6, &mut rng);
        let dims = contraction_kernel_dim(&omega, &t)?;
        rank_nullity &= dims.kernel + dims.image == 20;
        *generic.entry(dims.kernel).or_insert(0) += 1;
        if dims.kernel != 14 {
            witnesses.push(Witness {
                sample: i,
                label: "contraction-kernel".into(),
                value: dims.kernel.to_string(),
                basis: t.to_signed_rows(),
            });
        }

        let mut rng = sample_rng(seed, "f-lambda", i);
        let t = Subspace::random(&field, AMBIENT, 6, &mut rng);
        let tv = t.vectors();
        let t4 = Subspace::random_extension(&field, &[], &tv, 4, &mut rng)?;
        let form: Vec<u64> = loop {
            let v: Vec<u64> = (0..6).map(|_| field.random(&mut rng)).collect();
            if v.iter().any(|&x| x != 0) {
                break v;
            }
        };
        let lambda = hyperplane_of(&field, &form)?;
        let d = f_lambda_dim(&t, &t4, &lambda)?;
        *f_dims.entry(format!("{}/{}", d.t_wedge, d.t4_wedge)).or_insert(0) += 1;
        if (d.t_wedge, d.t4_wedge) != (14, 4) {
            witnesses.push(Witness {
                sample: i,
                label: "f-lambda".into(),
                value: format!("{}/{}", d.t_wedge, d.t4_wedge),
                basis: t.to_signed_rows(),
            });
        }
    }

    // Lambda = kernel of t_3^* ^ t_4^*: spanned by t1t2, t1t3, t1t4, t2t3, t2t4
    let mut probe_form = vec![0u64; 6];
    probe_form[5] = 1;
    let probe = f_lambda_dim(&o2_space, &t4, &hyperplane_of(&field, &probe_form)?)?;

    Ok(KernelSuite {
        prime,
        seed,
        samples,
        generic_kernel_dims: generic,
        o1_kernel_dim: o1.kernel,
        o2_kernel_dim: o2.kernel,
        o2_image_is_t4,
        rank_nullity_holds: rank_nullity,
        f_lambda_dims: f_dims,
        degenerate_probe: probe,
        witnesses,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSuite {
    pub prime: u64,
    pub seed: u64,
    pub samples: u64,
    /// Random instances where `lhs == rhs` and the restricted forms agree.
    pub agreeing: u64,
    /// Random instances where both sides vanish.
    pub both_vanish: u64,
    pub zero_u: GraphCheck,
    pub constructed: GraphCheck,
}

pub fn graph_suite(prime: u64, seed: u64, samples: u64) -> Result<GraphSuite> {
    let field = Fp::new(prime)?;
    let mut agreeing = 0;
    let mut both_vanish = 0;
    for i in 0..samples {
        let mut rng = sample_rng(seed, "graph", i);
        let omega = SkewForm::random(&field, AMBIENT, &mut rng);
        let big = ThreeForm::random(&field, AMBIENT, &mut rng);
        let t = Subspace::random(&field, AMBIENT, 6, &mut rng);
        let u: Vec<u64> = (0..6).map(|_| field.random(&mut rng)).collect();
        let v0 = rng.gen_range(0..=AMBIENT);
        let c = graph_vanishing_check(&omega, &big, &t, &u, v0)?;
        if c.lhs == c.rhs && c.forms_agree {
            agreeing += 1;
        }
        if c.lhs && c.rhs {
            both_vanish += 1;
        }
    }

    let mut rng = sample_rng(seed, "graph/fixed", 0);
    let omega = SkewForm::random(&field, AMBIENT, &mut rng);
    let t = Subspace::random(&field, AMBIENT, 6, &mut rng);

    // u = 0 with Omega vanishing on T
    let start = ThreeForm::random(&field, AMBIENT, &mut rng);
    let zero_u_form = solve_graph_vanishing(&omega, &start, &t, &[0; 6])?;
    let zero_u = graph_vanishing_check(&omega, &zero_u_form, &t, &[0; 6], AMBIENT)?;

    let u: Vec<u64> = (0..6).map(|_| field.random_nonzero(&mut rng)).collect();
    let start = ThreeForm::random(&field, AMBIENT, &mut rng);
    let solved = solve_graph_vanishing(&omega, &start, &t, &u)?;
    let constructed = graph_vanishing_check(&omega, &solved, &t, &u, AMBIENT)?;

    Ok(GraphSuite {
        prime,
        seed,
        samples,
        agreeing,
        both_vanish,
        zero_u,
        constructed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSuite {
    pub samples: u64,
    /// Random 5-spaces on which some form fails to vanish.
    pub random_rejected: u64,
    pub normal_form: VanishingPair,
    /// Lifting-map rank histogram over forms in `wedge^2 V^* ^ W`.
    pub lifting_ranks: BTreeMap<usize, u64>,
}

pub fn pair_suite(prime: u64, seed: u64, samples: u64) -> Result<PairSuite> {
    let field = Fp::new(prime)?;
    let nf = SkewForm::normal_form(&field);
    let r = Subspace::coordinate(&field, AMBIENT, &[0, 1, 2, 3, 4])?;
    let complement = Subspace::coordinate(&field, AMBIENT, &[5, 6, 7, 8])?;
    let mut random_rejected = 0;
    let mut lifting = BTreeMap::new();
    let mut normal: Option<VanishingPair> = None;
    for i in 0..samples {
        let mut rng = sample_rng(seed, "pairs", i);
        let omega = SkewForm::random(&field, AMBIENT, &mut rng);
        let big = ThreeForm::random(&field, AMBIENT, &mut rng);
        let r5 = Subspace::random(&field, AMBIENT, 5, &mut rng);
        let res = vanishing_pair_residual(&omega, &big, &r5)?;
        if !res.omega_vanishes || !res.big_omega_vanishes {
            random_rejected += 1;
        }
        let special = random_form_vanishing_on_first_five(&field, &mut rng);
        let res = vanishing_pair_residual(&nf, &special, &r)?;
        normal = Some(match normal {
            None => res,
            Some(prev) => VanishingPair {
                omega_vanishes: prev.omega_vanishes && res.omega_vanishes,
                big_omega_vanishes: prev.big_omega_vanishes && res.big_omega_vanishes,
            },
        });
        *lifting.entry(lifting_map_rank(&special, &r, &complement)?).or_insert(0) += 1;
    }
    Ok(PairSuite {
        samples,
        random_rejected,
        normal_form: normal.unwrap_or(VanishingPair {
            omega_vanishes: true,
            big_omega_vanishes: true,
        }),
        lifting_ranks: lifting,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn f() -> Fp {
        Fp::new(1009).unwrap()
    }

    #[test]
    fn normal_form_orbits() {
        let f = f();
        let w = SkewForm::normal_form(&f);
        assert_eq!(w.rank(), 8);
        let k = w.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], 1);
        let o2 = Subspace::coordinate(&f, 9, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(restriction_rank(&w, &o2).unwrap(), 2);
        let o1 = Subspace::coordinate(&f, 9, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(restriction_rank(&w, &o1).unwrap(), 4);
        // e_1, e_2, e_3, e_4, e_5, e_7 only pairs e_4 with e_7
        let skewed = Subspace::coordinate(&f, 9, &[0, 1, 2, 3, 4, 6]).unwrap();
        assert_eq!(restriction_rank(&w, &skewed).unwrap(), 2);
        let isotropic = Subspace::coordinate(&f, 9, &[0, 1, 2, 3, 4]).unwrap();
        assert!(restriction_rank(&w, &isotropic).is_err());
    }

    #[test]
    fn zero_restriction_is_an_error() {
        let f = f();
        let w = SkewForm::from_pairs(&f, 9, &[(7, 8, 1)]).unwrap();
        let t = Subspace::coordinate(&f, 9, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(restriction_rank(&w, &t), Err(Error::ZeroRestriction));
    }

    #[test]
    fn contraction_dims() {
        let f = f();
        let w = SkewForm::normal_form(&f);
        let o2 = Subspace::coordinate(&f, 9, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(contraction_kernel_dim(&w, &o2).unwrap(), ContractionDims { kernel: 16, image: 4 });
        let o1 = Subspace::coordinate(&f, 9, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(contraction_kernel_dim(&w, &o1).unwrap().kernel, 14);
    }

    #[test]
    fn f_lambda_on_normal_form() {
        let f = f();
        let t = Subspace::coordinate(&f, 9, &[0, 1, 2, 3, 4, 5]).unwrap();
        let t4 = Subspace::coordinate(&f, 9, &[0, 1, 2, 3]).unwrap();
        let lambda = hyperplane_of(&f, &[1, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(
            f_lambda_dim(&t, &t4, &lambda).unwrap(),
            FLambdaDims { t_wedge: 14, t4_wedge: 4 }
        );
        let outside = Subspace::coordinate(&f, 9, &[0, 1, 2, 6]).unwrap();
        assert!(f_lambda_dim(&t, &outside, &lambda).is_err());
    }

    #[test]
    fn three_form_antisymmetry() {
        let q = Rationals;
        let mut w = ThreeForm::zero(&q, 4);
        w.set(0, 1, 2, q.from_i64(3));
        assert_eq!(w.get(1, 0, 2), q.from_i64(-3));
        assert_eq!(w.get(2, 0, 1), q.from_i64(3));
        assert_eq!(w.get(0, 0, 2), q.zero());
        let e = |i: usize| (0..4).map(|j| q.from_i64((i == j) as i64)).collect::<Vec<_>>();
        assert_eq!(w.eval(&e(1), &e(0), &e(2)), q.from_i64(-3));
    }

    #[test]
    fn graph_identity_over_q() {
        let q = Rationals;
        let omega = SkewForm::from_pairs(&q, 9, &[(4, 5, 1), (3, 6, 2), (2, 7, -1), (1, 8, 5), (0, 3, 1)]).unwrap();
        let mut big = ThreeForm::zero(&q, 9);
        for (n, (i, j, k)) in triples(9).into_iter().enumerate() {
            big.set(i, j, k, q.from_i64((n as i64 * 7) % 11 - 5));
        }
        let t = Subspace::coordinate(&q, 9, &[0, 2, 3, 5, 6, 8]).unwrap();
        let u: Vec<_> = [1, -2, 0, 3, 1, 1].iter().map(|&v| q.from_i64(v)).collect();
        for v0 in [0, 4, 9] {
            let c = graph_vanishing_check(&omega, &big, &t, &u, v0).unwrap();
            assert!(c.forms_agree);
        }
        let solved = solve_graph_vanishing(&omega, &big, &t, &u).unwrap();
        let c = graph_vanishing_check(&omega, &solved, &t, &u, 9).unwrap();
        assert!(c.lhs && c.rhs && c.forms_agree);
    }

    #[test]
    fn pair_normal_form() {
        use rand::SeedableRng;
        let f = f();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let big = random_form_vanishing_on_first_five(&f, &mut rng);
        let w = SkewForm::normal_form(&f);
        let r = Subspace::coordinate(&f, 9, &[0, 1, 2, 3, 4]).unwrap();
        let res = vanishing_pair_residual(&w, &big, &r).unwrap();
        assert!(res.omega_vanishes && res.big_omega_vanishes);
        let r4 = Subspace::coordinate(&f, 9, &[0, 1, 2, 3]).unwrap();
        assert!(vanishing_pair_residual(&w, &big, &r4).is_err());
        let comp = Subspace::coordinate(&f, 9, &[5, 6, 7, 8]).unwrap();
        assert_eq!(lifting_map_rank(&big, &r, &comp).unwrap(), 4);
    }

    #[test]
    fn sampled_families_hit_their_orbits() {
        let s = orbit_suite(1009, 0, 20, &[SampleKind::Random, SampleKind::ContainsKernel, SampleKind::IsotropicPerp]).unwrap();
        assert!(s.witnesses.is_empty(), "{:?}", s.witnesses);
        assert_eq!(s.normal_form_o1_rank, 4);
        assert_eq!(s.normal_form_o2_rank, 2);
    }
}
