//! Integer lattice helpers: Hermite and Smith normal forms, membership.

use alloc::vec;
use alloc::vec::Vec;

pub type IntMatrix = Vec<Vec<i64>>;

fn to_wide(a: &[Vec<i64>]) -> Vec<Vec<i128>> {
    a.iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect()
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("lattice entry overflows i64")
}

fn row_axpy(rows: &mut [Vec<i128>], dst: usize, f: i128, src: usize) {
    if f == 0 {
        return;
    }
    for c in 0..rows[dst].len() {
        let s = rows[src][c];
        rows[dst][c] -= f * s;
    }
}

/// Row-style Hermite normal form `H = U A` of the row lattice of `A`.
#[derive(Clone, Debug)]
pub struct Hermite {
    /// Nonzero rows of `H`.
    pub rows: Vec<Vec<i128>>,
    pub pivots: Vec<usize>,
    /// First `rows.len()` rows of `U`.
    pub transform: Vec<Vec<i128>>,
}

pub fn hermite(a: &[Vec<i64>], width: usize) -> Hermite {
    let k = a.len();
    let mut h = to_wide(a);
    let mut u: Vec<Vec<i128>> = (0..k)
        .map(|r| (0..k).map(|c| (r == c) as i128).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == k {
            break;
        }
        loop {
            let p = (r..k)
                .filter(|&q| h[q][col] != 0)
                .min_by_key(|&q| h[q][col].abs());
            let Some(p) = p else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for q in r + 1..k {
                if h[q][col] != 0 {
                    let f = h[q][col] / h[r][col];
                    row_axpy(&mut h, q, f, r);
                    row_axpy(&mut u, q, f, r);
                    done &= h[q][col] == 0;
                }
            }
            if done {
                break;
            }
        }
        if h[r][col] == 0 {
            continue;
        }
        if h[r][col] < 0 {
            h[r].iter_mut().for_each(|x| *x = -*x);
            u[r].iter_mut().for_each(|x| *x = -*x);
        }
        for q in 0..r {
            let f = h[q][col].div_euclid(h[r][col]);
            row_axpy(&mut h, q, f, r);
            row_axpy(&mut u, q, f, r);
        }
        pivots.push(col);
        r += 1;
    }
    h.truncate(r);
    u.truncate(r);
    Hermite {
        rows: h,
        pivots,
        transform: u,
    }
}

impl Hermite {
    /// Coefficients `c` with `v = sum_r c_r a_r` over the original rows, if any.
    pub fn solve(&self, v: &[i64]) -> Option<Vec<i64>> {
        let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        let mut coef = vec![0i128; self.rows.len()];
        for (r, &col) in self.pivots.iter().enumerate() {
            let p = self.rows[r][col];
            if rest[col] % p != 0 {
                return None;
            }
            let f = rest[col] / p;
            coef[r] = f;
            for c in 0..rest.len() {
                rest[c] -= f * self.rows[r][c];
            }
        }
        if rest.iter().any(|&x| x != 0) {
            return None;
        }
        let k = self.transform.first().map_or(0, |r| r.len());
        let mut out = vec![0i128; k];
        for (r, &f) in coef.iter().enumerate() {
            for (c, x) in out.iter_mut().enumerate() {
                *x += f * self.transform[r][c];
            }
        }
        Some(out.into_iter().map(narrow).collect())
    }
}

pub fn same_lattice(a: &[Vec<i64>], b: &[Vec<i64>], width: usize) -> bool {
    hermite(a, width).rows == hermite(b, width).rows
}

/// Elementary divisors of an integer matrix (nonzero diagonal of its Smith form).
pub fn elementary_divisors(a: &[Vec<i64>]) -> Vec<i64> {
    let mut m = to_wide(a);
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if m[r][c] != 0 && best.is_none_or(|(br, bc)| m[r][c].abs() < m[br][bc].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((br, bc)) = best else {
                return out;
            };
            m.swap(t, br);
            for row in m.iter_mut() {
                row.swap(t, bc);
            }
            let p = m[t][t];
            let mut clean = true;
            for r in t + 1..rows {
                let f = m[r][t] / p;
                row_axpy(&mut m, r, f, t);
                clean &= m[r][t] == 0;
            }
            for c in t + 1..cols {
                let f = m[t][c] / p;
                if f != 0 {
                    for r in 0..rows {
                        let s = m[r][t];
                        m[r][c] -= f * s;
                    }
                }
                clean &= m[t][c] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| m[r][c] % p != 0));
            match bad {
                Some(r) => {
                    for c in 0..cols {
                        let s = m[r][c];
                        m[t][c] += s;
                    }
                }
                None => break,
            }
        }
        out.push(narrow(m[t][t].abs()));
    }
    out
}

/// Inverse of an upper unitriangular integer matrix.
pub fn unitriangular_inverse(m: &[Vec<i64>]) -> IntMatrix {
    let n = m.len();
    let mut inv = vec![vec![0i64; n]; n];
    for col in 0..n {
        for row in (0..=col).rev() {
            if row == col {
                inv[row][col] = 1;
            } else {
                let s: i64 = (row + 1..=col).map(|l| m[row][l] * inv[l][col]).sum();
                inv[row][col] = -s;
            }
        }
    }
    inv
}

pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).map(|l| row[l] * b[l][c]).sum())
                .collect()
        })
        .collect()
}
