//! Littlewood-Richardson products, box truncation and integration on G(2,4).

use legendrian_cycles::cohomology::GrassmannProduct;
use legendrian_cycles::lr::{lr_coefficient, lr_product, Bounds};
use legendrian_cycles::partition::{enumerate_partitions, Partition, Rect};

fn main() -> legendrian_cycles::Result<()> {
    let s21 = Partition::new(vec![2, 1])?;
    let s321 = Partition::new(vec![3, 2, 1])?;
    println!("c^(321)_(21),(21) = {}", lr_coefficient(&s21, &s21, &s321));
    for (nu, c) in lr_product(&s21, &s21, Bounds::rows(3)) {
        println!("  s21 * s21 contains {c} s{nu}");
    }

    let g24 = GrassmannProduct::single(2, 4)?;
    let h = g24.hyperplane(0);
    for k in 1..=4 {
        println!("sigma_1^{k} = {}", h.pow(k)?);
    }
    println!("deg G(2,4) = {}", h.pow(4)?.integrate());

    let rect = Rect::new(2, 2)?;
    for d in 0..=rect.area() {
        for lam in enumerate_partitions(d, &rect) {
            let dual = lam.complement_in(&rect)?;
            let v = g24.sigma(vec![lam.clone()]).multiply(&g24.sigma(vec![dual.clone()]))?;
            println!("sigma_{lam} * sigma_{dual} = {v}");
        }
    }
    Ok(())
}
