//! Restriction ranks of 2-forms on six-spaces of a nine-dimensional space
//! over F_p, for random and specially constructed six-spaces.

use legendrian_cycles::forms::{orbit_suite, SampleKind};

fn main() -> legendrian_cycles::Result<()> {
    let kinds = [SampleKind::Random, SampleKind::ContainsKernel, SampleKind::IsotropicPerp];
    let s = orbit_suite(1009, 0, 200, &kinds)?;
    for (kind, counts) in &s.rank_counts {
        println!("{kind:?}: rank histogram {counts:?}");
    }
    println!("normal form on span(e2..e7): {}", s.normal_form_o1_rank);
    println!("normal form on span(e1..e6): {}", s.normal_form_o2_rank);
    for w in &s.witnesses {
        println!("off-orbit sample {} ({}): rank {}", w.sample, w.label, w.value);
    }
    Ok(())
}
