//! Rank, kernel, image and solving over Q and F_p.

use legendrian_cycles::field::{Fp, Rationals};
use legendrian_cycles::matrix::ExactMatrix;

fn main() -> legendrian_cycles::Result<()> {
    let rows = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]];
    let q = ExactMatrix::from_i64_rows(&Rationals, &rows)?;
    println!("over Q: det {}, rank {}", q.det()?, q.rank());
    let b: Vec<_> = [1, 0, 0].iter().map(|&v| num_rational::BigRational::from_integer(v.into())).collect();
    let x = q.solve(&b)?;
    println!("solution of A x = e1: {:?}", x.iter().map(|v| v.to_string()).collect::<Vec<_>>());

    let f = Fp::new(3)?;
    let m = ExactMatrix::from_i64_rows(&f, &rows)?;
    println!("over F_3: det {}, rank {}, kernel {:?}", m.det()?, m.rank(), m.kernel());
    Ok(())
}
