//! Independent Chevalley-Eilenberg rank oracle.
//!
//! Deliberately shares no code path with the library implementation: the
//! exterior basis is enumerated by ascending bitmask (colex order, not lex),
//! permutation signs come from direct inversion counting, structure
//! constants are cleared to integers, and ranks are computed by Bareiss
//! fraction-free elimination over i128.

use lieclass_core::lie::LieAlgebra;
use num_traits::{One, Zero};

/// Integer structure constants `c[i][j][m]` with `[e_i, e_j] = sum c e_m`,
/// scaled by a common denominator (which does not affect ranks).
fn integer_constants(g: &LieAlgebra) -> Vec<Vec<Vec<i128>>> {
    let n = g.dim;
    // common denominator across all constants
    let mut denom: i128 = 1;
    for (_, terms) in g.structure() {
        for (_, c) in terms {
            let d: i128 = c.denom().try_into().expect("small denominator");
            denom = denom / gcd(denom, d) * d;
        }
    }
    let mut out = vec![vec![vec![0i128; n]; n]; n];
    for ((i, j), terms) in g.structure() {
        for (m, c) in terms {
            let num: i128 = c.numer().try_into().expect("small numerator");
            let d: i128 = c.denom().try_into().expect("small denominator");
            let v = num * (denom / d);
            out[*i][*j][*m] = v;
            out[*j][*i][*m] = -v;
        }
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

fn subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize == k {
            let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            out.push(subset);
        }
    }
    out
}

/// Sign of sorting `tuple` ascending; `None` on repeats.
fn sort_sign(tuple: &[usize]) -> Option<(Vec<usize>, i128)> {
    let mut inversions = 0usize;
    for a in 0..tuple.len() {
        for b in (a + 1)..tuple.len() {
            if tuple[a] == tuple[b] {
                return None;
            }
            if tuple[a] > tuple[b] {
                inversions += 1;
            }
        }
    }
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    Some((sorted, if inversions % 2 == 0 { 1 } else { -1 }))
}

/// Rank by Bareiss fraction-free elimination.
fn rank_bareiss(mut m: Vec<Vec<i128>>) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        for r in 0..rows {
            if r == row {
                continue;
            }
            for c in (col + 1)..cols {
                m[r][c] = (m[r][c] * m[row][col] - m[r][col] * m[row][c]) / prev_pivot;
            }
            m[r][col] = 0;
        }
        prev_pivot = m[row][col];
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

pub fn betti_via_integer_elimination(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim;
    let c = integer_constants(g);
    let mut ranks = vec![0usize; n + 1];
    for k in 1..n {
        let dom = subsets_colex(n, k);
        let cod = subsets_colex(n, k + 1);
        let index_of = |s: &[usize]| dom.iter().position(|t| t == s);
        let mut matrix = vec![vec![0i128; dom.len()]; cod.len()];
        for (srow, s) in cod.iter().enumerate() {
            for p in 0..s.len() {
                for q in (p + 1)..s.len() {
                    let pair_sign: i128 = if (p + q) % 2 == 0 { 1 } else { -1 };
                    let rest: Vec<usize> = s
                        .iter()
                        .enumerate()
                        .filter(|(idx, _)| *idx != p && *idx != q)
                        .map(|(_, &v)| v)
                        .collect();
                    for m_idx in 0..n {
                        let coeff = c[s[p]][s[q]][m_idx];
                        if coeff == 0 {
                            continue;
                        }
                        let mut tuple = vec![m_idx];
                        tuple.extend(&rest);
                        if let Some((sorted, sgn)) = sort_sign(&tuple) {
                            if let Some(tcol) = index_of(&sorted) {
                                matrix[srow][tcol] += pair_sign * sgn * coeff;
                            }
                        }
                    }
                }
            }
        }
        ranks[k] = rank_bareiss(matrix);
    }
    (0..=n)
        .map(|k| {
            let dim_k = binomial(n, k);
            let r_k = ranks.get(k).copied().unwrap_or(0);
            let r_km1 = if k >= 1 { ranks[k - 1] } else { 0 };
            dim_k - r_k - r_km1
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

// Silence a lint: the num-traits imports serve the assertions in the parent
// test file when this module is reused.
#[allow(unused)]
fn _keep_traits_linked(x: &lieclass_core::rat::Rat) -> bool {
    x.is_zero() || x.is_one()
}
