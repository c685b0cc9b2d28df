//! Acceptance criteria, one line each. Criteria run concurrently; the process
//! exits nonzero when a gating criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use legendrian_cycles::bundle::BundleExpr;
use legendrian_cycles::cayley::cayley_suite;
use legendrian_cycles::cohomology::{
    degree_wrt, kernel_c1_on_complement, porteous_class, zero_locus_profile, GrassmannProduct,
};
use legendrian_cycles::forms::{graph_suite, kernel_suite, orbit_suite, SampleKind};
use legendrian_cycles::lr::lr_coefficient;
use legendrian_cycles::partition::{Partition, Rect};
use legendrian_cycles::report::{d4_euler_characteristic, lemma2, PFAFFIAN_TOLERANCE};
use legendrian_cycles::series::{all_rows, check_row, CheckStatus, Group};

mod common;

use common::{lr_tableaux, partitions};

const PRIME: u64 = 1009;
const SEED: u64 = 0;

// runtime budgets
const LEMMA2_BUDGET: Duration = Duration::from_secs(30);
const D4_BUDGET: Duration = Duration::from_secs(10);
const LR_BUDGET: Duration = Duration::from_secs(60);
const SAMPLING_BUDGET: Duration = Duration::from_secs(30);
const CAYLEY_BUDGET: Duration = Duration::from_secs(120);

// sizes
const LR_MAX_WEIGHT: usize = 10;
const LR_MAX_ROWS: usize = 4;
const DUALITY_ROWS: usize = 5;
const DUALITY_COLS: usize = 4;
const RANDOM_V6: u64 = 1000;
const FAMILY_V6: u64 = 100;
const KERNEL_SAMPLES: u64 = 100;
const GRAPH_SAMPLES: u64 = 200;
const CAYLEY_POINTS: usize = 50;
const NONTRIVIAL_PERCENT: usize = 90;

struct Outcome {
    pass: bool,
    detail: String,
    budget: Option<Duration>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
            budget: None,
        }
    }

    fn within(mut self, budget: Duration) -> Self {
        self.budget = Some(budget);
        self
    }
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn lemma2_count() -> Outcome {
    let l = lemma2().unwrap();
    let ring = GrassmannProduct::single(5, 9).unwrap();
    let is_4321 = l.c10_wedge2 == ring.sigma(vec![p(&[4, 3, 2, 1])]);
    Outcome::new(
        l.count == BigInt::from(9) && is_4321,
        format!("count {} (want 9), c10(wedge2 U*) = {}", l.count, l.c10_wedge2),
    )
    .within(LEMMA2_BUDGET)
}

fn d4_degrees() -> Outcome {
    let ring = GrassmannProduct::power(2, 4, 3).unwrap();
    let e = BundleExpr::taut_dual(0, 2)
        .tensor(BundleExpr::taut_dual(1, 2))
        .tensor(BundleExpr::taut_dual(2, 2));
    let c8 = ring.chern_class(&e, 8).unwrap();
    let d110 = degree_wrt(&c8, &[1, 1, 0]).unwrap();
    let d100 = degree_wrt(&c8, &[1, 0, 0]).unwrap();

    let pair = GrassmannProduct::power(2, 4, 2).unwrap();
    let f = BundleExpr::taut_dual(0, 2).tensor(BundleExpr::taut_dual(1, 2));
    let fc = pair.chern_classes(&f, 4).unwrap();
    let porteous = porteous_class(&pair, 4, &fc, 4, 2).unwrap();
    let dp = degree_wrt(&porteous, &[1, 1]).unwrap();

    // deg G(2,4) = integral of sigma_1^4
    let g = GrassmannProduct::single(2, 4).unwrap();
    let deg_g = g.hyperplane(0).pow(4).unwrap().integrate();
    let proj = &d100 / &deg_g;
    let pass = d110 == BigInt::from(432)
        && dp == BigInt::from(432)
        && d100 == BigInt::from(12)
        && (&d100 % &deg_g).is_zero()
        && proj == BigInt::from(6);
    Outcome::new(
        pass,
        format!("c8 at (1,1,0) = {d110}, rank-2 locus at (1,1) = {dp}, c8 at (1,0,0) = {d100}, / {deg_g} = {proj}"),
    )
    .within(D4_BUDGET)
}

fn chern_identities() -> Outcome {
    let ring = GrassmannProduct::power(2, 4, 3).unwrap();
    let e = BundleExpr::taut_dual(0, 2)
        .tensor(BundleExpr::taut_dual(1, 2))
        .tensor(BundleExpr::taut_dual(2, 2));
    let c1 = ring.chern_class(&e, 1).unwrap();
    // c1(A (x) B (x) C) = rk(B)rk(C) c1(A) + ..., all ranks 2
    let mut want = ring.zero();
    for i in 0..3 {
        want = want.add(&ring.hyperplane(i).scale(&BigInt::from(2 * 2))).unwrap();
    }
    // c1(wedge^3 T) = C(5,2) c1(T) for rank 6, c1(T) = -sigma_1
    let k = kernel_c1_on_complement();
    let binom_5_2 = 10;
    let want_k = k.ring().hyperplane(0).scale(&BigInt::from(-binom_5_2 + 1));
    Outcome::new(
        c1 == want && k == want_k,
        format!("c1(E) = {c1}; c1 of the kernel = {k}"),
    )
}

fn series_table() -> Outcome {
    let mut bad = Vec::new();
    let mut recorded = Vec::new();
    let mut values = BTreeMap::new();
    for row in all_rows() {
        for c in check_row(&row) {
            values.insert((row.group, c.key.clone()), c.computed.clone());
            match c.status {
                CheckStatus::Pass | CheckStatus::Info => {}
                CheckStatus::RecordedException if row.group == Group::E7 => {
                    recorded.push(format!("E7 {}", c.key))
                }
                _ => bad.push(format!("{} {}: {} vs {}", row.group, c.key, c.computed, c.expected)),
            }
        }
    }
    let f4_index = values.get(&(Group::F4, "index".to_string())).cloned().unwrap_or_default();
    let f4_h0 = values.get(&(Group::F4, "h0".to_string())).cloned().unwrap_or_default();
    let e7_index = values.get(&(Group::E7, "index".to_string())).cloned().unwrap_or_default();
    let pass = bad.is_empty() && f4_index == "7" && f4_h0 == "75" && e7_index == "5" && recorded.len() == 2;
    Outcome::new(
        pass,
        format!(
            "IG(3,9) index {f4_index}, h0(F dual) {f4_h0}, recorded exceptions [{}]{}",
            recorded.join(", "),
            if bad.is_empty() { String::new() } else { format!(", failing: {}", bad.join("; ")) }
        ),
    )
}

fn zero_locus_dims() -> Outcome {
    let mut dims = Vec::new();
    for g in [Group::G2, Group::D4, Group::F4, Group::E6] {
        let row = legendrian_cycles::series::series_row(g);
        let e = row.e.expect("constructed row");
        let z = zero_locus_profile(&e.ring, &e.bundle).unwrap();
        dims.push((g, z.dim, z.empty));
    }
    Outcome::new(
        dims.iter().all(|&(_, d, empty)| d == 4 && !empty),
        dims.iter().map(|(g, d, _)| format!("{g}: {d}")).collect::<Vec<_>>().join(", "),
    )
}

fn lr_oracle() -> Outcome {
    let by_weight: Vec<Vec<Vec<usize>>> = (0..=LR_MAX_WEIGHT).map(|n| partitions(n, LR_MAX_ROWS)).collect();
    let mut cases = 0u64;
    let mut nonzero = 0u64;
    let mut mismatches = Vec::new();
    for a in 0..=LR_MAX_WEIGHT {
        for b in 0..=LR_MAX_WEIGHT - a {
            for lam in &by_weight[a] {
                for mu in &by_weight[b] {
                    for nu in &by_weight[a + b] {
                        let want = lr_tableaux(lam, mu, nu);
                        let got = lr_coefficient(&p(lam), &p(mu), &p(nu));
                        cases += 1;
                        nonzero += (want > 0) as u64;
                        if want != got && mismatches.len() < 5 {
                            mismatches.push(format!("{lam:?}*{mu:?}->{nu:?}: {got} vs {want}"));
                        }
                    }
                }
            }
        }
    }
    Outcome::new(
        mismatches.is_empty() && cases > 1000,
        format!("{cases} triples ({nonzero} nonzero){}", if mismatches.is_empty() { String::new() } else { format!(", mismatches {mismatches:?}") }),
    )
    .within(LR_BUDGET)
}

fn complement(lam: &[usize], rows: usize, cols: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..rows).rev().map(|i| cols - lam.get(i).copied().unwrap_or(0)).collect();
    out.retain(|&x| x > 0);
    out
}

fn poincare_duality() -> Outcome {
    let mut boxes = 0;
    let mut pairings = 0;
    let mut failures = Vec::new();
    for rows in 1..=DUALITY_ROWS {
        for cols in 1..=DUALITY_COLS {
            boxes += 1;
            let ring = GrassmannProduct::single(rows, rows + cols).unwrap();
            let area = rows * cols;
            let in_box: Vec<Vec<usize>> = (0..=area)
                .flat_map(|n| partitions(n, rows))
                .filter(|l| l.first().map_or(true, |&x| x <= cols))
                .collect();
            for lam in &in_box {
                let dual = complement(lam, rows, cols);
                let a = ring.sigma(vec![p(lam)]);
                for mu in in_box.iter().filter(|m| m.iter().sum::<usize>() + lam.iter().sum::<usize>() == area) {
                    pairings += 1;
                    let v = a.multiply(&ring.sigma(vec![p(mu)])).unwrap().integrate();
                    let want = BigInt::from((*mu == dual) as u8);
                    if v != want {
                        failures.push(format!("{rows}x{cols}: {lam:?}.{mu:?} = {v}"));
                    }
                }
            }
            debug_assert_eq!(
                p(&complement(&[], rows, cols)),
                Rect::new(rows, cols).unwrap().full()
            );
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!("{pairings} pairings on {boxes} boxes up to {DUALITY_ROWS}x{DUALITY_COLS}{}", if failures.is_empty() { String::new() } else { format!(", failures {:?}", &failures[..failures.len().min(3)]) }),
    )
}

fn orbits_and_kernels() -> Outcome {
    let random = orbit_suite(PRIME, SEED, RANDOM_V6, &[SampleKind::Random]).unwrap();
    let fam = orbit_suite(PRIME, SEED, FAMILY_V6, &[SampleKind::ContainsKernel, SampleKind::IsotropicPerp]).unwrap();
    let k = kernel_suite(PRIME, SEED, KERNEL_SAMPLES).unwrap();
    let count = |s: &legendrian_cycles::forms::OrbitSuite, kind, r| {
        s.rank_counts.get(&kind).and_then(|c: &BTreeMap<usize, u64>| c.get(&r)).copied().unwrap_or(0)
    };
    let six = count(&random, SampleKind::Random, 6);
    let four = count(&random, SampleKind::Random, 4);
    // rank < 6 is a Pfaffian hypersurface, hit with probability about 1/p
    let random_ok = six + four == RANDOM_V6 && four <= PFAFFIAN_TOLERANCE;
    let pass = random_ok
        && count(&fam, SampleKind::ContainsKernel, 4) == FAMILY_V6
        && count(&fam, SampleKind::IsotropicPerp, 2) == FAMILY_V6
        && random.normal_form_o1_rank == 4
        && random.normal_form_o2_rank == 2
        && k.generic_kernel_dims.get(&14) == Some(&KERNEL_SAMPLES)
        && k.o1_kernel_dim == 14
        && k.o2_kernel_dim == 16
        && k.f_lambda_dims.get("14/4") == Some(&KERNEL_SAMPLES);
    Outcome::new(
        pass,
        format!(
            "random V6 rank 6 on {six}/{RANDOM_V6} (rank 4 on {four}, allowed {PFAFFIAN_TOLERANCE}); witnesses {}/{}; kernels {:?}, {}, {}; f_lambda {:?}",
            random.normal_form_o1_rank, random.normal_form_o2_rank, k.generic_kernel_dims, k.o1_kernel_dim, k.o2_kernel_dim, k.f_lambda_dims
        ),
    )
    .within(SAMPLING_BUDGET)
}

fn graph_identity() -> Outcome {
    let g = graph_suite(PRIME, SEED, GRAPH_SAMPLES).unwrap();
    let pass = g.agreeing == GRAPH_SAMPLES
        && g.constructed.lhs
        && g.constructed.rhs
        && g.constructed.forms_agree
        && g.zero_u.lhs
        && g.zero_u.rhs;
    Outcome::new(
        pass,
        format!(
            "{}/{GRAPH_SAMPLES} random agree; constructed {}/{}; u = 0 {}/{}",
            g.agreeing, g.constructed.lhs, g.constructed.rhs, g.zero_u.lhs, g.zero_u.rhs
        ),
    )
}

fn cayley() -> Outcome {
    let s = cayley_suite(PRIME, SEED, CAYLEY_POINTS).unwrap();
    let n = s.points;
    let pairs = s.pairs - s.pairs_skipped;
    let pass = n >= CAYLEY_POINTS
        && s.on_quartic == n
        && s.next_line_unique == n
        && s.next_line_verified == n
        && s.triality_closes == n
        && s.triality_nontrivial * 100 >= NONTRIVIAL_PERCENT * n
        && pairs >= CAYLEY_POINTS
        && s.triples_vanish == pairs
        && s.map_rank_two == pairs
        && s.round_trips == pairs;
    Outcome::new(
        pass,
        format!(
            "{n} points; next line {}/{n}; triality closes {}/{n}, moves {}/{n}; triples {}/{pairs}, round trips {}/{pairs}",
            s.next_line_verified, s.triality_closes, s.triality_nontrivial, s.triples_vanish, s.round_trips
        ),
    )
    .within(CAYLEY_BUDGET)
}

fn euler_stretch() -> Outcome {
    let chi = d4_euler_characteristic().unwrap();
    // S^[2] is the blow-up of S x S along the diagonal modulo the swap
    let e = BigInt::from(24);
    let oracle = (&e * &e + BigInt::from(3) * &e) / 2;
    Outcome::new(chi == oracle, format!("chi = {chi}, Hilbert square of a K3 = {oracle}"))
}

type Criterion = (&'static str, bool, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1 Lemma 2 count", true, lemma2_count),
        ("2 D4 degrees", true, d4_degrees),
        ("3 Chern identities", true, chern_identities),
        ("4 series table", true, series_table),
        ("5 zero-locus dimensions", true, zero_locus_dims),
        ("6 LR oracle", true, lr_oracle),
        ("7 Poincare duality", true, poincare_duality),
        ("8 orbits and kernels", true, orbits_and_kernels),
        ("9 graph identity", true, graph_identity),
        ("10 Cayley suite", true, cayley),
        ("11 Euler characteristic (stretch)", false, euler_stretch),
    ];
    let results: Vec<(Outcome, Duration)> = std::thread::scope(|scope| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, _, f)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let out = f();
                    (out, start.elapsed())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join().unwrap_or_else(|_| {
                    (Outcome::new(false, "panicked"), Duration::ZERO)
                })
            })
            .collect()
    });

    let mut gating_failed = false;
    for ((name, gating, _), (out, elapsed)) in criteria.iter().zip(results) {
        let in_time = out.budget.map_or(true, |b| elapsed <= b);
        let pass = out.pass && in_time;
        if *gating && !pass {
            gating_failed = true;
        }
        let budget = out.budget.map_or(String::new(), |b| format!(" / {} s", b.as_secs()));
        println!(
            "[{}] {name}: {} ({:.2} s{budget}){}",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
            if *gating { "" } else { " [not gating]" }
        );
    }
    if gating_failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
