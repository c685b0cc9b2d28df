//! Chern classes of bundle expressions, parsed from the text grammar.

use legendrian_cycles::cohomology::GrassmannProduct;
use legendrian_cycles::parse::parse_bundle;

fn main() -> legendrian_cycles::Result<()> {
    let cases = [
        ("G(2,6)", "sym(3,dual(taut(0)))"),
        ("G(5,9)", "wedge(2,dual(taut(0)))"),
        ("G(2,4)^3", "tensor(dual(taut(0)),dual(taut(1)),dual(taut(2)))"),
        ("G(2,4)x G(3,5)", "tensor(taut(0),dual(taut(1)))"),
    ];
    for (ring, expr) in cases {
        let ring: GrassmannProduct = ring.parse()?;
        let e = parse_bundle(expr, &ring)?;
        println!("{e} on {ring}, rank {}", e.rank());
        for (i, c) in ring.chern_classes(&e, 3)?.iter().enumerate().skip(1) {
            println!("  c{i} = {c}");
        }
    }
    Ok(())
}
