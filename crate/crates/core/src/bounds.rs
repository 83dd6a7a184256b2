//! Existence bounds for hypercuboids and size bounds for mixed codes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{param, Result};
use crate::shape::CuboidShape;

/// Outcome of the axis-counting existence test
/// `sum(n_i) - prod(n_1..n_r) <= d - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceVerdict {
    pub lhs: i64,
    pub rhs: i64,
    /// False for class 1, where the modular construction always exists and
    /// the inequality is not a constraint.
    pub applies: bool,
    pub satisfied: bool,
    /// `(n-1)^(r-1) + r`, the sharper dimension bound for cubic shapes.
    pub ethier_max: Option<u64>,
    /// `(n^r - 1) / (n - 1)` rounded down, cubic shapes only.
    pub cubic_max: Option<u64>,
}

pub fn existence_bound(shape: &CuboidShape) -> ExistenceVerdict {
    let sum: i64 = shape.sizes().iter().map(|&n| n as i64).sum();
    let lhs = sum - shape.order() as i64;
    let rhs = shape.dim() as i64 - 1;
    let applies = shape.class() >= 2;
    let (ethier_max, cubic_max) = if shape.is_cubic() {
        let n = shape.sizes()[0] as u64;
        let r = shape.class() as u32;
        let ethier = (n - 1)
            .checked_pow(r - 1)
            .and_then(|p| p.checked_add(r as u64));
        let cubic = n.checked_pow(r).map(|p| (p - 1) / (n - 1));
        (ethier, cubic)
    } else {
        (None, None)
    };
    ExistenceVerdict {
        lhs,
        rhs,
        applies,
        satisfied: !applies || lhs <= rhs,
        ethier_max,
        cubic_max,
    }
}

/// Every non-increasing shape with `n1 <= max_size`, `3 <= d <= max_dim`
/// and the given class that fails [`existence_bound`], ordered by
/// dimension and then by sizes.
pub fn violating_shapes(max_size: usize, max_dim: usize, class: usize) -> Vec<CuboidShape> {
    fn extend(prefix: &mut Vec<usize>, len: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let top = prefix.last().copied().unwrap_or(max);
        for n in 2..=top {
            prefix.push(n);
            extend(prefix, len, max, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for d in (class + 1).max(2)..=max_dim {
        let mut all = Vec::new();
        extend(&mut Vec::new(), d, max_size, &mut all);
        all.sort();
        out.extend(all.into_iter().filter_map(|sizes| {
            let shape = CuboidShape::new(sizes, class).ok()?;
            (!existence_bound(&shape).satisfied).then_some(shape)
        }));
    }
    out
}

/// Class-2 shapes with `n1 <= 5` and `d <= 6` that violate the bound.
pub fn table1_check() -> Vec<CuboidShape> {
    violating_shapes(5, 6, 2)
}

fn check_alphabets(alphabets: &[usize]) -> Result<()> {
    if alphabets.is_empty() {
        return param("at least one coordinate is required");
    }
    if alphabets.contains(&0) {
        return param("alphabets must be non-empty");
    }
    Ok(())
}

fn space_size(alphabets: &[usize]) -> Result<u64> {
    alphabets
        .iter()
        .try_fold(1u64, |acc, &n| acc.checked_mul(n as u64))
        .map_or_else(|| param("space size overflows"), Ok)
}

/// Product of the `d - delta + 1` smallest alphabet sizes.
pub fn singleton_bound(alphabets: &[usize], delta: usize) -> Result<u64> {
    check_alphabets(alphabets)?;
    let d = alphabets.len();
    if delta < 1 || delta > d {
        return param(format!("minimum distance must lie in 1..={d}, got {delta}"));
    }
    let mut sorted = alphabets.to_vec();
    sorted.sort_unstable();
    space_size(&sorted[..d - delta + 1])
}

/// Number of words within distance `t` of any fixed word.
///
/// Computed as `sum_k e_k(n_1 - 1, .., n_d - 1)` for `k = 0..=t`, with
/// `e_k` the elementary symmetric polynomials. Radii beyond `d` give the
/// whole space.
pub fn sphere_size(alphabets: &[usize], t: usize) -> u64 {
    // e[k] after processing a prefix of the alphabets
    let mut e = vec![0u64; alphabets.len() + 1];
    e[0] = 1;
    for (i, &n) in alphabets.iter().enumerate() {
        let w = n.saturating_sub(1) as u64;
        for k in (1..=i + 1).rev() {
            e[k] = e[k].saturating_add(e[k - 1].saturating_mul(w));
        }
    }
    e.iter().take(t + 1).fold(0u64, |a, &b| a.saturating_add(b))
}

/// `floor(prod(n_i) / S(t))`, the largest possible t-error-correcting code.
pub fn hamming_bound(alphabets: &[usize], t: usize) -> Result<u64> {
    check_alphabets(alphabets)?;
    Ok(space_size(alphabets)? / sphere_size(alphabets, t))
}

/// The quantity `rho * d = d - sum(1 / n_i)`.
pub fn plotkin_rho_d(alphabets: &[usize]) -> BigRational {
    let d = BigRational::from_integer(BigInt::from(alphabets.len()));
    alphabets.iter().fold(d, |acc, &n| {
        acc - BigRational::new(BigInt::from(1), BigInt::from(n))
    })
}

/// `floor(delta / (delta - rho d))` when `rho d < delta`, else `None`.
pub fn plotkin_bound(alphabets: &[usize], delta: usize) -> Option<u64> {
    let rho_d = plotkin_rho_d(alphabets);
    let delta = BigRational::from_integer(BigInt::from(delta));
    let gap = &delta - rho_d;
    if gap <= BigRational::zero() {
        return None;
    }
    (delta / gap).floor().to_integer().to_u64()
}

/// Every bound that applies to codes of length `d = alphabets.len()` and
/// minimum distance `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub alphabets: Vec<usize>,
    pub delta: usize,
    pub singleton: u64,
    /// Error-correcting radius `floor((delta - 1) / 2)` used for `hamming`.
    pub hamming_radius: usize,
    pub hamming: u64,
    pub plotkin: Option<u64>,
    /// `rho = 1 - sum(1 / (d n_i))`.
    pub plotkin_rho: BigRational,
    /// Known exact optimum: the full space for `delta = 1`, the smallest
    /// alphabet for `delta = d`.
    pub exact: Option<u64>,
}

impl BoundReport {
    /// Smallest of the applicable upper bounds.
    pub fn best(&self) -> u64 {
        let mut b = self.singleton.min(self.hamming);
        if let Some(p) = self.plotkin {
            b = b.min(p);
        }
        b
    }
}

pub fn bound_report(alphabets: &[usize], delta: usize) -> Result<BoundReport> {
    let singleton = singleton_bound(alphabets, delta)?;
    let d = alphabets.len();
    let hamming_radius = (delta - 1) / 2;
    let hamming = hamming_bound(alphabets, hamming_radius)?;
    let plotkin = plotkin_bound(alphabets, delta);
    let plotkin_rho = plotkin_rho_d(alphabets) / BigRational::from_integer(BigInt::from(d));
    let exact = if delta == 1 {
        Some(space_size(alphabets)?)
    } else if delta == d {
        alphabets.iter().min().map(|&n| n as u64)
    } else {
        None
    };
    Ok(BoundReport {
        alphabets: alphabets.to_vec(),
        delta,
        singleton,
        hamming_radius,
        hamming,
        plotkin,
        plotkin_rho,
        exact,
    })
}
