//! Littlewood-Richardson coefficients.
//!
//! The skew tableau of shape `nu / lam` and content `mu` is grown one letter
//! at a time: the cells holding letter `i` form a horizontal strip added to
//! the shape built so far. The lattice-word condition on the reverse reading
//! word reduces to a row-wise inequality between consecutive letters, so it
//! is checked while the strip is being distributed.

use std::collections::BTreeMap;

use crate::partition::Partition;

/// Optional row/column limits applied to the shapes produced by a product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub max_rows: Option<usize>,
    pub max_cols: Option<usize>,
}

impl Bounds {
    pub const NONE: Bounds = Bounds {
        max_rows: None,
        max_cols: None,
    };

    pub fn rows(n: usize) -> Self {
        Bounds {
            max_rows: Some(n),
            max_cols: None,
        }
    }

    pub fn rect(rows: usize, cols: usize) -> Self {
        Bounds {
            max_rows: Some(rows),
            max_cols: Some(cols),
        }
    }
}

/// The coefficient of `s_nu` in `s_lam * s_mu`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lam.weight() + mu.weight() || !nu.contains(lam) || !nu.contains(mu) {
        return 0;
    }
    let rows = nu.len();
    let caps: Vec<usize> = (0..rows).map(|r| nu.part(r)).collect();
    let mut out = BTreeMap::new();
    grow(lam, mu, rows, &caps, &mut out);
    out.get(nu).copied().unwrap_or(0)
}

/// The full product `s_lam * s_mu`, keeping only shapes inside `bounds`.
pub fn lr_product(lam: &Partition, mu: &Partition, bounds: Bounds) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let natural = lam.len() + mu.len();
    let rows = bounds.max_rows.map_or(natural, |r| r.min(natural));
    if lam.len() > rows || mu.len() > rows {
        return out;
    }
    let max_cols = bounds.max_cols.unwrap_or(usize::MAX);
    if lam.part(0) > max_cols || mu.part(0) > max_cols {
        return out;
    }
    let caps = vec![max_cols; rows];
    grow(lam, mu, rows, &caps, &mut out);
    out
}

fn grow(
    lam: &Partition,
    mu: &Partition,
    rows: usize,
    caps: &[usize],
    out: &mut BTreeMap<Partition, u64>,
) {
    if lam.len() > rows || (0..lam.len()).any(|r| lam.part(r) > caps[r]) {
        return;
    }
    let shape: Vec<usize> = (0..rows).map(|r| lam.part(r)).collect();
    let mut search = Search {
        content: mu.parts(),
        caps,
        out,
    };
    search.letter(0, &shape, &vec![0; rows]);
}

struct Search<'a> {
    content: &'a [usize],
    caps: &'a [usize],
    out: &'a mut BTreeMap<Partition, u64>,
}

impl Search<'_> {
    /// Places every copy of `letter`, given the shape before it and the
    /// per-row counts of the previous letter.
    fn letter(&mut self, letter: usize, shape: &[usize], prev: &[usize]) {
        if letter == self.content.len() {
            let parts: Vec<usize> = shape.iter().copied().take_while(|&p| p > 0).collect();
            *self
                .out
                .entry(Partition::from_parts_unchecked(parts))
                .or_insert(0) += 1;
            return;
        }
        let mut counts = vec![0; shape.len()];
        let mut next = shape.to_vec();
        self.row(letter, shape, prev, 0, self.content[letter], 0, 0, &mut counts, &mut next);
    }

    #[allow(clippy::too_many_arguments)]
    fn row(
        &mut self,
        letter: usize,
        shape: &[usize],
        prev: &[usize],
        r: usize,
        remaining: usize,
        placed: usize,
        prev_above: usize,
        counts: &mut Vec<usize>,
        next: &mut Vec<usize>,
    ) {
        if remaining == 0 {
            self.letter(letter + 1, next, counts);
            return;
        }
        if r == shape.len() {
            return;
        }
        let mut most = remaining.min(self.caps[r].saturating_sub(shape[r]));
        if r > 0 {
            most = most.min(shape[r - 1] - shape[r]);
        }
        if letter > 0 {
            // copies of `letter` read so far may not outnumber copies of `letter - 1`
            // in strictly earlier rows
            most = most.min(prev_above.saturating_sub(placed));
        }
        let prev_here = prev[r];
        for take in (0..=most).rev() {
            counts[r] = take;
            next[r] = shape[r] + take;
            self.row(
                letter,
                shape,
                prev,
                r + 1,
                remaining - take,
                placed + take,
                prev_above + prev_here,
                counts,
                next,
            );
        }
        counts[r] = 0;
        next[r] = shape[r];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pieri_and_unit() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        let lam = p(&[3, 1]);
        assert_eq!(lr_coefficient(&lam, &Partition::empty(), &lam), 1);
        assert_eq!(lr_coefficient(&lam, &Partition::empty(), &p(&[2, 2])), 0);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), 0);
    }

    #[test]
    fn staircase_square() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        let prod = lr_product(&p(&[2, 1]), &p(&[2, 1]), Bounds::NONE);
        assert_eq!(prod[&p(&[3, 2, 1])], 2);
        assert_eq!(prod.values().sum::<u64>(), 8);
        assert_eq!(prod.len(), 7);
    }

    #[test]
    fn bounds_truncate() {
        let prod = lr_product(&p(&[1]), &p(&[1]), Bounds::rows(1));
        assert_eq!(prod.len(), 1);
        assert_eq!(prod[&p(&[2])], 1);
        let prod = lr_product(&p(&[2]), &p(&[2]), Bounds::rect(2, 2));
        assert_eq!(prod.into_iter().collect::<Vec<_>>(), vec![(p(&[2, 2]), 1)]);
    }
}
