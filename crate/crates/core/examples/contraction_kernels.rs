//! Kernels of the contraction wedge^3 T -> T by a 2-form, and the dimensions
//! of T ^ Lambda for hyperplanes Lambda in wedge^2 T_4.

use legendrian_cycles::field::Fp;
use legendrian_cycles::forms::{contraction_kernel_dim, kernel_suite, SkewForm, Subspace, AMBIENT};

fn main() -> legendrian_cycles::Result<()> {
    let f = Fp::new(1009)?;
    let nf = SkewForm::normal_form(&f);
    for idx in [[0, 1, 2, 3, 4, 5], [1, 2, 3, 4, 5, 6]] {
        let t = Subspace::coordinate(&f, AMBIENT, &idx)?;
        let d = contraction_kernel_dim(&nf, &t)?;
        println!("coordinates {idx:?}: kernel {}, image {}", d.kernel, d.image);
    }
    let s = kernel_suite(1009, 0, 100)?;
    println!("random six-spaces: kernel histogram {:?}", s.generic_kernel_dims);
    println!("(T^Lambda, T4^Lambda) histogram {:?}", s.f_lambda_dims);
    println!(
        "Lambda = ker(t3* ^ t4*): {}/{}",
        s.degenerate_probe.t_wedge, s.degenerate_probe.t4_wedge
    );
    Ok(())
}
