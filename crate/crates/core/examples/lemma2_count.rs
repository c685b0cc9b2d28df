//! Five-dimensional subspaces isotropic for a general 2-form and 3-form on a
//! nine-dimensional space, counted on G(5,9).

use std::time::Instant;

use legendrian_cycles::report::{lemma2, sigma_4321};

fn main() -> legendrian_cycles::Result<()> {
    let start = Instant::now();
    let l = lemma2()?;
    println!("c10(wedge2 U*) = {}", l.c10_wedge2);
    println!("equals sigma_4321: {}", l.c10_wedge2 == sigma_4321());
    println!("c10(wedge3 U*) = {}", l.c10_wedge3);
    println!("count = {} ({:?})", l.count, start.elapsed());
    Ok(())
}
