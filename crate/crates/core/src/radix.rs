//! Mixed-radix encoding shared by cell indexing and symbol tuples.
//!
//! Digit 0 is the fastest-varying position everywhere in the crate: a cell
//! `(x1, .., xd)` of a cuboid with sizes `(n1, .., nd)` lives at
//! `x1 + n1 * (x2 + n2 * (..))`, and an r-tuple symbol `(t1, .., tr)` over
//! `(n1, .., nr)` is encoded the same way. With this choice the symbol
//! encoding of a tuple equals the index of that tuple inside the first
//! r-subarray.

/// Encode `digits` over `radices`, digit 0 fastest.
pub fn rank(digits: &[usize], radices: &[usize]) -> usize {
    debug_assert_eq!(digits.len(), radices.len());
    digits.iter().zip(radices).rev().fold(0, |acc, (&x, &n)| {
        debug_assert!(x < n);
        acc * n + x
    })
}

/// Inverse of [`rank`].
pub fn unrank(mut value: usize, radices: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(radices.len());
    unrank_into(&mut value, radices, &mut out);
    out
}

pub(crate) fn unrank_into(value: &mut usize, radices: &[usize], out: &mut Vec<usize>) {
    out.clear();
    for &n in radices {
        out.push(*value % n);
        *value /= n;
    }
}

/// Product of the radices, `None` on overflow.
pub fn volume(radices: &[usize]) -> Option<usize> {
    radices
        .iter()
        .try_fold(1usize, |acc, &n| acc.checked_mul(n))
}

/// Iterates every digit vector over `radices` in [`rank`] order.
#[derive(Debug, Clone)]
pub struct Odometer {
    radices: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl Odometer {
    pub fn new(radices: &[usize]) -> Self {
        let current = if radices.contains(&0) {
            None
        } else {
            Some(vec![0; radices.len()])
        };
        Odometer {
            radices: radices.to_vec(),
            current,
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut i = 0;
        loop {
            if i == cur.len() {
                self.current = None;
                break;
            }
            cur[i] += 1;
            if cur[i] < self.radices[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

/// All `k`-subsets of `0..n` as sorted vectors, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_roundtrip() {
        let radices = [3, 2, 2];
        for (i, digits) in Odometer::new(&radices).enumerate() {
            assert_eq!(rank(&digits, &radices), i);
            assert_eq!(unrank(i, &radices), digits);
        }
        assert_eq!(Odometer::new(&radices).count(), 12);
    }

    #[test]
    fn empty_radix_list_has_one_point() {
        assert_eq!(Odometer::new(&[]).count(), 1);
        assert_eq!(rank(&[], &[]), 0);
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
