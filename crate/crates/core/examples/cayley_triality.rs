//! Points of the incidence surface of a random 4x4x4 tensor over F_p, the
//! next-line correspondence, three-step triality and plane triples.

use legendrian_cycles::cayley::{cayley_suite, Axis, Tensor444};
use legendrian_cycles::field::Fp;
use legendrian_cycles::sampling::sample_rng;

fn main() -> legendrian_cycles::Result<()> {
    let f = Fp::new(1009)?;
    let mut rng = sample_rng(0, "example/tensor", 0);
    let h = Tensor444::random(&f, &mut rng);
    let points = h.find_surface_points(3, 1000, &mut rng)?;
    for (l1, l2) in &points {
        let l3 = h.next_line(l1, l2)?;
        let (m1, m2) = h.triality(l1, l2)?;
        println!(
            "({l1}, {l2}): quartic {} next line {l3} triality ({m1}, {m2})",
            h.quartic_value(Axis::One, l1.coords())
        );
    }
    let t = h.triple_from_pair((&points[0].0, &points[0].1), (&points[1].0, &points[1].1))?;
    println!("T3 = {:?}", t.planes[2]);
    println!("pencil base points: {:?}", h.pencil_base_points(&t)?);

    let s = cayley_suite(1009, 0, 50)?;
    println!(
        "suite: {} points, triality moves {}, round trips {}/{}",
        s.points, s.triality_nontrivial, s.round_trips, s.pairs
    );
    Ok(())
}
