//! Forms on a graph subspace x + u(x) v0 against Omega + u ^ omega, over Q
//! and over F_p.

use legendrian_cycles::field::{Field, Rationals};
use legendrian_cycles::forms::{graph_suite, graph_vanishing_check, SkewForm, Subspace, ThreeForm};

fn main() -> legendrian_cycles::Result<()> {
    let q = Rationals;
    let omega = SkewForm::from_pairs(&q, 9, &[(0, 1, 1), (2, 3, 2), (4, 5, 1), (6, 7, -3)])?;
    let mut big = ThreeForm::zero(&q, 9);
    big.set(0, 2, 4, q.one());
    big.set(1, 3, 8, q.from_i64(5));
    let t = Subspace::coordinate(&q, 9, &[0, 1, 2, 3, 4, 5])?;
    let u: Vec<_> = (1..=6).map(|i| q.from_i64(i)).collect();
    let c = graph_vanishing_check(&omega, &big, &t, &u, 9)?;
    println!("over Q: graph forms vanish {}, Omega + u^omega vanishes {}, restrictions agree {}", c.lhs, c.rhs, c.forms_agree);

    let s = graph_suite(1009, 0, 200)?;
    println!("over F_1009: {}/{} random instances agree", s.agreeing, s.samples);
    println!("solved instance: {} / {}", s.constructed.lhs, s.constructed.rhs);
    println!("u = 0 instance: {} / {}", s.zero_u.lhs, s.zero_u.rhs);
    Ok(())
}
