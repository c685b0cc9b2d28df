use num_bigint::BigInt;
use num_integer::binomial;
use proptest::prelude::*;

use legendrian_cycles::bundle::BundleExpr;
use legendrian_cycles::cayley::ProjPoint;
use legendrian_cycles::cohomology::{GrassmannProduct, SchubertClass};
use legendrian_cycles::field::{Field, Fp};
use legendrian_cycles::forms::ThreeForm;
use legendrian_cycles::lr::lr_coefficient;
use legendrian_cycles::matrix::ExactMatrix;
use legendrian_cycles::partition::{enumerate_partitions, Partition, Rect};
use legendrian_cycles::sampling::derive_seed;
use legendrian_cycles::schur::{polynomial_to_schur, schur_multiply, SchurPoly};

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn rect() -> impl Strategy<Value = Rect> {
    (1usize..=5, 1usize..=5).prop_map(|(r, c)| Rect::new(r, c).unwrap())
}

fn in_rect() -> impl Strategy<Value = (Rect, Partition)> {
    rect().prop_flat_map(|r| {
        partition(r.rows, r.cols).prop_map(move |p| (r, p))
    })
}

/// A class on `G(3,7)` with small coefficients.
fn class_on_g37() -> impl Strategy<Value = SchubertClass> {
    prop::collection::vec((partition(3, 4), -3i64..=3), 1..4).prop_map(|terms| {
        let ring = GrassmannProduct::single(3, 7).unwrap();
        let mut c = ring.zero();
        for (p, k) in terms {
            c = c.add(&ring.sigma(vec![p]).scale(&BigInt::from(k))).unwrap();
        }
        c
    })
}

/// Bundles on a single factor of rank 3.
fn bundle() -> impl Strategy<Value = BundleExpr> {
    let u = BundleExpr::taut_dual(0, 3);
    prop_oneof![
        Just(u.clone()),
        Just(BundleExpr::taut(0, 3)),
        Just(BundleExpr::wedge(2, u.clone())),
        Just(BundleExpr::sym(2, u.clone())),
        Just(BundleExpr::trivial(2)),
        Just(u.clone().tensor(BundleExpr::taut(0, 3))),
    ]
}

fn total(classes: &[SchubertClass]) -> SchubertClass {
    let mut acc = classes[0].ring().zero();
    for c in classes {
        acc = acc.add(c).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_is_an_involution(p in partition(6, 6)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }

    #[test]
    fn complement_is_an_involution((r, p) in in_rect()) {
        let c = p.complement_in(&r).unwrap();
        prop_assert!(c.fits_in(&r));
        prop_assert_eq!(c.weight() + p.weight(), r.area());
        prop_assert_eq!(c.complement_in(&r).unwrap(), p);
    }

    #[test]
    fn box_has_binomial_many_partitions(r in rect()) {
        let total: usize = (0..=r.area()).map(|w| enumerate_partitions(w, &r).len()).sum();
        prop_assert_eq!(total, binomial(r.rows + r.cols, r.rows));
    }

    #[test]
    fn lr_symmetries(lam in partition(3, 3), mu in partition(3, 3), nu in partition(4, 5)) {
        let c = lr_coefficient(&lam, &mu, &nu);
        prop_assert_eq!(c, lr_coefficient(&mu, &lam, &nu));
        prop_assert_eq!(c, lr_coefficient(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()));
        if lam.weight() + mu.weight() != nu.weight() || !nu.contains(&lam) {
            prop_assert_eq!(c, 0);
        }
    }

    #[test]
    fn products_are_associative_and_commutative(a in class_on_g37(), b in class_on_g37(), c in class_on_g37()) {
        let ab = a.multiply(&b).unwrap();
        prop_assert_eq!(&ab, &b.multiply(&a).unwrap());
        prop_assert_eq!(ab.multiply(&c).unwrap(), a.multiply(&b.multiply(&c).unwrap()).unwrap());
    }

    #[test]
    fn whitney_sum(a in bundle(), b in bundle()) {
        let ring = GrassmannProduct::single(3, 7).unwrap();
        let max = ring.dim();
        let ca = total(&ring.chern_classes(&a, max).unwrap());
        let cb = total(&ring.chern_classes(&b, max).unwrap());
        let sum = total(&ring.chern_classes(&a.clone().sum(b.clone()), max).unwrap());
        prop_assert_eq!(sum, ca.multiply(&cb).unwrap());
    }

    #[test]
    fn dual_flips_odd_classes(e in bundle()) {
        let ring = GrassmannProduct::single(3, 7).unwrap();
        let c = ring.chern_classes(&e, 6).unwrap();
        let d = ring.chern_classes(&e.clone().dual(), 6).unwrap();
        for (i, (x, y)) in c.iter().zip(&d).enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(y, &x.scale(&BigInt::from(sign)));
        }
    }

    #[test]
    fn poincare_pairing((r, p) in in_rect()) {
        let ring = GrassmannProduct::single(r.rows, r.rows + r.cols).unwrap();
        let dual = p.complement_in(&r).unwrap();
        let v = ring.sigma(vec![p.clone()]).multiply(&ring.sigma(vec![dual])).unwrap();
        prop_assert_eq!(v, ring.point_class());
    }

    #[test]
    fn schur_product_matches_polynomials(a in partition(3, 3), b in partition(3, 3)) {
        let x = SchurPoly::single(a, 3);
        let y = SchurPoly::single(b, 3);
        let via_lr = schur_multiply(&x, &y).unwrap();
        let via_poly = polynomial_to_schur(&x.to_polynomial().mul(&y.to_polynomial()).unwrap()).unwrap();
        prop_assert_eq!(via_lr, via_poly);
    }

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..7, seed in any::<u64>()) {
        use rand::SeedableRng;
        let f = Fp::new(101).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let m = ExactMatrix::random(&f, rows, cols, &mut rng);
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in kernel {
            prop_assert!(m.apply(&v).unwrap().iter().all(|x| *x == 0));
        }
        prop_assert_eq!(m.image().len(), m.rank());
    }

    #[test]
    fn projective_points_are_canonical(v in prop::collection::vec(0u64..101, 4), k in 1u64..101) {
        let f = Fp::new(101).unwrap();
        prop_assume!(v.iter().any(|&x| x != 0));
        let scaled: Vec<u64> = v.iter().map(|x| f.mul(x, &k)).collect();
        let a = ProjPoint::new(&f, v).unwrap();
        prop_assert_eq!(&a, &ProjPoint::new(&f, scaled).unwrap());
        prop_assert_eq!(&ProjPoint::new(&f, a.coords().to_vec()).unwrap(), &a);
    }

    #[test]
    fn three_forms_are_alternating(coeffs in prop::collection::vec(0u64..101, 20), i in 0usize..6, j in 0usize..6, k in 0usize..6) {
        let f = Fp::new(101).unwrap();
        let t = ThreeForm::from_coeffs(&f, 6, coeffs).unwrap();
        let v = t.get(i, j, k);
        prop_assert_eq!(t.get(j, i, k), f.neg(&v));
        prop_assert_eq!(t.get(j, k, i), v);
        if i == j || j == k || i == k {
            prop_assert_eq!(v, 0);
        }
    }

    #[test]
    fn seeds_are_stable(master in any::<u64>(), index in any::<u64>()) {
        prop_assert_eq!(derive_seed(master, "s", index), derive_seed(master, "s", index));
    }
}
