//! Zero loci of general sections: dimension, adjunction index, fundamental
//! class degree and, for the D4 case, the Euler characteristic.

use legendrian_cycles::cohomology::{degree_wrt, zero_locus_profile};
use legendrian_cycles::report::{d4_euler_characteristic, hilbert_scheme_euler};
use legendrian_cycles::series::{series_row, Group};

fn main() -> legendrian_cycles::Result<()> {
    for g in [Group::G2, Group::D4, Group::F4, Group::E6] {
        let row = series_row(g);
        let e = row.e.expect("constructed row");
        let z = zero_locus_profile(&e.ring, &e.bundle)?;
        let pluecker = vec![1; e.ring.num_factors()];
        println!(
            "{g}: {} on {}: dim {}, index {:?}, degree {}",
            e.bundle,
            e.ring,
            z.dim,
            z.index.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
            degree_wrt(&z.class, &pluecker)?
        );
    }
    println!(
        "Euler characteristic of the D4 fourfold: {} (Hilbert square of a K3: {})",
        d4_euler_characteristic()?,
        hilbert_scheme_euler(24, 2)
    );
    Ok(())
}
