//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Partitions of `n` with at most `rows` parts.
pub fn partitions(n: usize, rows: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if rows == 0 {
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            go(n - part, part, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, rows, &mut Vec::new(), &mut out);
    out
}

/// Littlewood-Richardson tableaux of shape `nu / lam` and content `mu`,
/// filled in reverse reading order.
pub fn lr_tableaux(lam: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let part = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    if (0..nu.len()).any(|i| part(lam, i) > nu[i]) || lam.len() > nu.len() {
        return 0;
    }
    if lam.iter().sum::<usize>() + mu.iter().sum::<usize>() != nu.iter().sum::<usize>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (part(lam, r)..nu[r]).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut counts = vec![0usize; mu.len() + 1];
    fn dfs(
        k: usize,
        cells: &[(usize, usize)],
        mu: &[usize],
        grid: &mut BTreeMap<(usize, usize), usize>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 1..=mu.len() {
            if counts[v] == mu[v - 1] {
                continue;
            }
            if v > 1 && counts[v] + 1 > counts[v - 1] {
                continue;
            }
            if let Some(&right) = grid.get(&(r, c + 1)) {
                if v > right {
                    continue;
                }
            }
            if r > 0 {
                if let Some(&above) = grid.get(&(r - 1, c)) {
                    if v <= above {
                        continue;
                    }
                }
            }
            grid.insert((r, c), v);
            counts[v] += 1;
            total += dfs(k + 1, cells, mu, grid, counts);
            counts[v] -= 1;
            grid.remove(&(r, c));
        }
        total
    }
    dfs(0, &cells, mu, &mut grid, &mut counts)
}
