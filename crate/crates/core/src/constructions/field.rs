//! Arithmetic over the prime field GF(p).

use crate::error::{param, Result};

pub fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

pub fn inverse(a: usize, p: usize) -> Option<usize> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a as u64, (p - 2) as u64, 1u64);
    let m = p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    Some(acc as usize)
}

/// Determinant of a square matrix over GF(p) by Gaussian elimination.
pub fn determinant(rows: &[Vec<usize>], p: usize) -> Result<usize> {
    if !is_prime(p) {
        return param(format!("{p} is not prime"));
    }
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return param("determinant needs a square matrix");
    }
    let mut m: Vec<Vec<usize>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x % p).collect())
        .collect();
    let mut det = 1usize;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return Ok(0);
        };
        if pivot != col {
            m.swap(pivot, col);
            det = (p - det) % p;
        }
        det = det * m[col][col] % p;
        let inv = inverse(m[col][col], p).expect("pivot is nonzero");
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            let factor = row[col] * inv % p;
            if factor == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (*x + p - factor * y % p) % p;
            }
        }
    }
    Ok(det)
}
