#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Monomial expansion of a polynomial in `m` variables, exponent vector to coefficient.
pub type Poly = BTreeMap<Vec<u32>, i64>;

/// Partitions with at most `rows` parts and exactly `size` boxes.
pub fn partitions(size: u32, rows: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, cap: u32, rows: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            let mut p = prefix.clone();
            p.resize(rows, 0);
            out.push(p);
            return;
        }
        if prefix.len() == rows {
            return;
        }
        for part in (1..=cap.min(left)).rev() {
            prefix.push(part);
            go(left - part, part, rows, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, rows, &mut Vec::new(), &mut out);
    out
}

/// Every semistandard filling of `shape` with entries `0..m`, as content vectors.
pub fn ssyt_contents(shape: &[u32], m: usize) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    let mut out = Vec::new();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        m: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if k == cells.len() {
            let mut content = vec![0u32; m];
            for row in grid.iter() {
                for &x in row {
                    content[x] += 1;
                }
            }
            out.push(content);
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for x in lo_row.max(lo_col)..m {
            grid[r][c] = x;
            fill(k + 1, cells, grid, m, out);
        }
    }
    fill(0, &cells, &mut grid, m, &mut out);
    out
}

pub fn ssyt_count(shape: &[u32], m: usize) -> usize {
    ssyt_contents(shape, m).len()
}

pub fn schur_poly(shape: &[u32], m: usize) -> Poly {
    let mut p = Poly::new();
    for c in ssyt_contents(shape, m) {
        *p.entry(c).or_insert(0) += 1;
    }
    p
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands a symmetric polynomial in the Schur basis by peeling off leading monomials.
pub fn schur_expand(mut p: Poly, m: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut out = BTreeMap::new();
    p.retain(|_, c| *c != 0);
    while let Some((lead, &c)) = p.iter().next_back() {
        let lead = lead.clone();
        assert!(lead.windows(2).all(|w| w[0] >= w[1]), "leading monomial {lead:?} not dominant");
        for (e, x) in schur_poly(&lead, m) {
            let slot = p.entry(e).or_insert(0);
            *slot -= c * x;
        }
        p.retain(|_, c| *c != 0);
        out.insert(lead, c);
    }
    out
}

/// Littlewood–Richardson multiplicities of `s_λ · s_μ` in `m` variables.
pub fn lr_oracle(lam: &[u32], mu: &[u32], m: usize) -> BTreeMap<Vec<u32>, i64> {
    schur_expand(poly_mul(&schur_poly(lam, m), &schur_poly(mu, m)), m)
}

/// Restriction of `s_α(x_1..x_n)` to `s_β(x_1..x_m)` by setting the remaining variables to 1.
pub fn branch_oracle(alpha: &[u32], n: usize, m: usize) -> BTreeMap<Vec<u32>, i64> {
    let mut p = Poly::new();
    for (e, c) in schur_poly(alpha, n) {
        *p.entry(e[..m].to_vec()).or_insert(0) += c;
    }
    schur_expand(p, m)
}

/// Product of the invariant factors of a square integer matrix, via Smith normal form.
pub fn smith_index(a: &[Vec<BigInt>]) -> BigInt {
    let mut a: Vec<Vec<BigInt>> = a.to_vec();
    let n = a.len();
    let mut prod = BigInt::one();
    for t in 0..n {
        loop {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else {
                return BigInt::zero();
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            let pivot_row = a[t].clone();
            for row in &mut a[t + 1..] {
                let q = &row[t] / &pivot_row[t];
                for (x, p) in row[t..].iter_mut().zip(&pivot_row[t..]) {
                    *x -= &q * p;
                }
                clean &= row[t].is_zero();
            }
            for j in t + 1..n {
                let q = &a[t][j] / &a[t][t];
                for row in &mut a[t..] {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    let row = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        prod *= a[t][t].abs();
    }
    prod
}

/// Every `W = (w_0 < ... < w_n)` with `n` in `1..=3`, gaps in `1..=3` and `w_0` in `[-3, 3]`.
pub fn collection_grid() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        let mut gaps: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..n {
            gaps = gaps
                .into_iter()
                .flat_map(|g| {
                    (1..=3).map(move |x| {
                        let mut h = g.clone();
                        h.push(x);
                        h
                    })
                })
                .collect();
        }
        for w0 in -3..=3 {
            for g in &gaps {
                let mut w = vec![w0];
                for x in g {
                    w.push(w.last().unwrap() + x);
                }
                out.push(w);
            }
        }
    }
    out
}
