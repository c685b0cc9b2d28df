use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use legendrian_cycles::cayley::cayley_suite;
use legendrian_cycles::cohomology::{degree_wrt, ClassJson, GrassmannProduct};
use legendrian_cycles::forms::{graph_suite, kernel_suite, orbit_suite, SampleKind};
use legendrian_cycles::parse::{parse_bundle, parse_class, parse_weights};
use legendrian_cycles::report::{self, emit, run_all, Format, SeriesRowJson};
use legendrian_cycles::series::all_rows;
use legendrian_cycles::Result;

#[derive(Parser)]
#[command(name = "legendrian-cycles", version, about = "Schubert calculus and exact-arithmetic checks")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Prime of the finite field used by the sampled suites.
    #[arg(long, global = true, default_value_t = 1009)]
    prime: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    samples: u64,
    #[arg(long, global = true)]
    json: bool,
    /// Include per-claim runtimes in the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// The exceptional-series table with its checks.
    Series,
    /// A Chern class of a bundle expression, e.g. `wedge(2,dual(taut(0)))`.
    Chern {
        bundle: String,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        degree: usize,
    },
    /// Integral of a class expression, e.g. `h^4` or `sigma(21)*sigma(1)^2`.
    Integrate {
        class: String,
        #[arg(long)]
        ring: String,
    },
    /// Degree of a class against per-factor hyperplane weights.
    Degree {
        class: String,
        #[arg(long)]
        ring: String,
        #[arg(long, value_name = "W1,W2,..")]
        weights: String,
    },
    /// Number of five-spaces on G(5,9) and the class c10(wedge2 U*).
    Lemma2,
    /// Degrees of the triple tensor zero locus on G(2,4)^3.
    D4Degrees,
    /// Restriction ranks of 2-forms on sampled six-spaces.
    Orbits,
    /// Contraction kernels and hyperplane wedge dimensions.
    Kernels,
    /// Surface points, line correspondences and plane triples of a random tensor.
    Cayley,
    /// Graph-subspace vanishing against the extended forms.
    GraphIdentity,
    /// Every claim, as a report.
    ReproduceAll,
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("plain data"));
}

fn run(cli: Cli) -> Result<ExitCode> {
    let c = &cli.common;
    match cli.command {
        Command::Series => {
            if c.json {
                let rows: Vec<SeriesRowJson> = all_rows().iter().map(SeriesRowJson::from).collect();
                print_json(&rows);
            } else {
                print!("{}", report::series_table());
            }
        }
        Command::Chern { bundle, ring, degree } => {
            let ring: GrassmannProduct = ring.parse()?;
            let e = parse_bundle(&bundle, &ring)?;
            let class = ring.chern_class(&e, degree)?;
            if c.json {
                #[derive(Serialize)]
                struct Out {
                    bundle: String,
                    rank: usize,
                    degree: usize,
                    class: ClassJson,
                }
                print_json(&Out {
                    bundle: e.to_string(),
                    rank: e.rank(),
                    degree,
                    class: ClassJson::from(&class),
                });
            } else {
                println!("c_{degree}({e}) on {ring} = {class}");
            }
        }
        Command::Integrate { class, ring } => {
            let ring: GrassmannProduct = ring.parse()?;
            let v = parse_class(&class, &ring)?.integrate();
            if c.json {
                print_json(&serde_json::json!({ "ring": ring.to_string(), "class": class, "integral": v.to_string() }));
            } else {
                println!("{v}");
            }
        }
        Command::Degree { class, ring, weights } => {
            let ring: GrassmannProduct = ring.parse()?;
            let w = parse_weights(&weights)?;
            let v = degree_wrt(&parse_class(&class, &ring)?, &w)?;
            if c.json {
                print_json(&serde_json::json!({
                    "ring": ring.to_string(), "class": class, "weights": w, "degree": v.to_string()
                }));
            } else {
                println!("{v}");
            }
        }
        Command::Lemma2 => {
            let l = report::lemma2()?;
            let is_4321 = l.c10_wedge2 == report::sigma_4321();
            if c.json {
                print_json(&serde_json::json!({
                    "count": l.count.to_string(),
                    "c10_wedge2": ClassJson::from(&l.c10_wedge2),
                    "c10_wedge3": ClassJson::from(&l.c10_wedge3),
                    "c10_wedge2_is_sigma4321": is_4321,
                }));
            } else {
                println!("c10(wedge2 U*) = {}", l.c10_wedge2);
                println!("c10(wedge3 U*) = {}", l.c10_wedge3);
                println!("count = {}", l.count);
            }
        }
        Command::D4Degrees => {
            let d = report::d4_degrees()?;
            let proj = d.projection_degree().map(|p| p.to_string());
            if c.json {
                print_json(&serde_json::json!({
                    "degree_110": d.degree_110.to_string(),
                    "degree_porteous": d.degree_porteous.to_string(),
                    "degree_100": d.degree_100.to_string(),
                    "grassmannian_degree": d.grassmannian_degree.to_string(),
                    "projection_degree": proj,
                    "c1": ClassJson::from(&d.c1),
                    "c1_is_444": d.c1_is_444(),
                    "c8": ClassJson::from(&d.c8),
                }));
            } else {
                println!("degree (1,1,0) of c8     = {}", d.degree_110);
                println!("degree (1,1) of rank <= 2 = {}", d.degree_porteous);
                println!("degree (1,0,0) of c8     = {}", d.degree_100);
                println!("projection degree        = {}", proj.unwrap_or_else(|| "not integral".into()));
                println!("c1                       = {}", d.c1);
            }
        }
        Command::Orbits => {
            let kinds = [SampleKind::Random, SampleKind::ContainsKernel, SampleKind::IsotropicPerp];
            let s = orbit_suite(c.prime, c.seed, c.samples, &kinds)?;
            if c.json {
                print_json(&s);
            } else {
                for (kind, counts) in &s.rank_counts {
                    println!("{kind:?}: {counts:?}");
                }
                println!("normal form on span(e2..e7): rank {}", s.normal_form_o1_rank);
                println!("normal form on span(e1..e6): rank {}", s.normal_form_o2_rank);
                for w in &s.witnesses {
                    println!("witness {} {}: rank {} basis {:?}", w.sample, w.label, w.value, w.basis);
                }
            }
        }
        Command::Kernels => {
            let s = kernel_suite(c.prime, c.seed, c.samples)?;
            if c.json {
                print_json(&s);
            } else {
                println!("contraction kernel dims (random): {:?}", s.generic_kernel_dims);
                println!("contraction kernel dims (O1, O2): {}, {}", s.o1_kernel_dim, s.o2_kernel_dim);
                println!("O2 image is T4: {}", s.o2_image_is_t4);
                println!("rank-nullity on every sample: {}", s.rank_nullity_holds);
                println!("(T^Lambda, T4^Lambda) dims: {:?}", s.f_lambda_dims);
                println!(
                    "degenerate probe: {}/{}",
                    s.degenerate_probe.t_wedge, s.degenerate_probe.t4_wedge
                );
            }
        }
        Command::Cayley => {
            let s = cayley_suite(c.prime, c.seed, c.samples as usize)?;
            if c.json {
                print_json(&s);
            } else {
                println!("surface points: {}", s.points);
                println!("next line unique and verified: {}/{}", s.next_line_verified, s.points);
                println!("step involutive: {}/{}", s.step_involutive, s.points);
                println!("triality closes: {}/{}", s.triality_closes, s.points);
                println!("triality nontrivial: {}/{}", s.triality_nontrivial, s.points);
                println!(
                    "pairs: {} ({} skipped), vanishing {}, rank two {}, round trips {}",
                    s.pairs, s.pairs_skipped, s.triples_vanish, s.map_rank_two, s.round_trips
                );
                for w in &s.witnesses {
                    println!("witness: {w}");
                }
            }
        }
        Command::GraphIdentity => {
            let s = graph_suite(c.prime, c.seed, c.samples)?;
            if c.json {
                print_json(&s);
            } else {
                println!("random instances agreeing: {}/{}", s.agreeing, s.samples);
                println!("random instances with both sides vanishing: {}", s.both_vanish);
                println!("constructed: lhs {} rhs {}", s.constructed.lhs, s.constructed.rhs);
                println!("u = 0: lhs {} rhs {}", s.zero_u.lhs, s.zero_u.rhs);
            }
        }
        Command::ReproduceAll => {
            let mut r = run_all(c.prime, c.seed)?;
            if !c.timings {
                r = r.without_timings();
            }
            print!("{}", emit(&r, if c.json { Format::Json } else { Format::Text }));
            if r.has_failures() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
