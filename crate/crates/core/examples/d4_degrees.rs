//! Degrees of the zero locus of T1* (x) T2* (x) T3* on G(2,4)^3, including the
//! degeneracy-locus route on G(2,4)^2.

use legendrian_cycles::report::d4_degrees;

fn main() -> legendrian_cycles::Result<()> {
    let d = d4_degrees()?;
    println!("c1(E) = {} (4(h1+h2+h3): {})", d.c1, d.c1_is_444());
    println!("c8(E) has {} terms", d.c8.terms().len());
    println!("degree against (1,1,0): {}", d.degree_110);
    println!("rank <= 2 locus against (1,1): {}", d.degree_porteous);
    println!("degree against (1,0,0): {}", d.degree_100);
    println!(
        "projection to one factor: {} / {} = {:?}",
        d.degree_100,
        d.grassmannian_degree,
        d.projection_degree()
    );
    Ok(())
}
