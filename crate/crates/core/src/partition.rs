//! Integer partitions and the rectangles that truncate them.
//!
//! A [`Partition`] indexes both Schur polynomials and Schubert classes. The
//! Schubert basis of `G(k, n)` is the set of partitions fitting in the
//! `k x (n - k)` rectangle, modelled by [`Rect`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so structural and value equality agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `rows` copies of `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// Sorts an exponent vector into a partition.
    pub fn from_exponents<T: Copy + Into<usize>>(exps: &[T]) -> Self {
        let mut parts: Vec<usize> = exps.iter().map(|&e| e.into()).filter(|&e| e > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).map(|p| p.parts == parts).unwrap_or(false));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    pub fn fits_in(&self, rect: &Rect) -> bool {
        self.len() <= rect.rows && self.part(0) <= rect.cols
    }

    /// Complement of the diagram inside `rect`, rotated by 180 degrees.
    pub fn complement_in(&self, rect: &Rect) -> Result<Partition> {
        if !self.fits_in(rect) {
            return Err(Error::DoesNotFit {
                partition: self.to_string(),
                rows: rect.rows,
                cols: rect.cols,
            });
        }
        let parts = (0..rect.rows)
            .map(|i| rect.cols - self.part(rect.rows - 1 - i))
            .collect();
        Partition::new(parts)
    }

    /// Dominance order: `self >= other` iff every partial sum of `self` is at
    /// least the matching partial sum of `other`. Only meaningful for equal weights.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// True when `other`'s diagram is contained in `self`'s.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let big = self.parts.iter().any(|&p| p > 9);
        let sep = if big { "," } else { "" };
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", body.join(sep))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// A `rows x cols` rectangle of boxes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub rows: usize,
    pub cols: usize,
}

impl Rect {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyBox { rows, cols });
        }
        Ok(Rect { rows, cols })
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    /// The full rectangle as a partition (the point class of a Grassmannian).
    pub fn full(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols)
    }
}

/// All partitions of `weight` inside `rect`, in lexicographically descending order.
pub fn enumerate_partitions(weight: usize, rect: &Rect) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(weight, rect.cols, rect.rows, &mut current, &mut out);
    out
}

/// Partitions of `weight` with at most `max_len` parts and no part above `max_part`.
pub fn enumerate_bounded(weight: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(weight, max_part, max_len, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    max_part: usize,
    rows_left: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if rows_left == 0 || max_part * rows_left < remaining {
        return;
    }
    for first in (1..=max_part.min(remaining)).rev() {
        current.push(first);
        fill(remaining - first, first, rows_left - 1, current, out);
        current.pop();
    }
}
