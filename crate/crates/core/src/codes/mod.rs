//! Mixed codes over cuboidal Hamming spaces and their links to
//! hypercuboids, cliques and graph endomorphisms.

mod clique;
mod convert;
mod endo;
mod search;

use std::collections::{BTreeSet, HashSet};

use crate::bounds::singleton_bound;
use crate::error::{param, Error, Result};
use crate::radix::Odometer;

pub use clique::{code_is_clique, CliqueCheck};
pub use convert::{code_to_cuboid, cuboid_to_code};
pub use endo::{build_endomorphism, edge_count, verify_endomorphism, Endomorphism};
pub use search::max_code_bruteforce;

pub type Word = Vec<usize>;

/// Number of positions in which `u` and `v` differ.
pub fn hamming_distance(u: &[usize], v: &[usize]) -> Result<usize> {
    if u.len() != v.len() {
        return param(format!(
            "words of lengths {} and {} are not comparable",
            u.len(),
            v.len()
        ));
    }
    Ok(distance(u, v))
}

pub(crate) fn distance(u: &[usize], v: &[usize]) -> usize {
    u.iter().zip(v).filter(|(a, b)| a != b).count()
}

/// A set of words over per-coordinate alphabets `[0, alphabets[i])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedCode {
    alphabets: Vec<usize>,
    words: Vec<Word>,
}

impl MixedCode {
    pub fn new(alphabets: Vec<usize>, words: Vec<Word>) -> Result<Self> {
        if alphabets.is_empty() || alphabets.contains(&0) {
            return Err(Error::Data(
                "alphabets must be a non-empty list of positive sizes".into(),
            ));
        }
        let mut seen = HashSet::with_capacity(words.len());
        for w in &words {
            if w.len() != alphabets.len() {
                return Err(Error::Data(format!(
                    "word {w:?} has length {}, expected {}",
                    w.len(),
                    alphabets.len()
                )));
            }
            if w.iter().zip(&alphabets).any(|(&x, &n)| x >= n) {
                return Err(Error::Data(format!(
                    "word {w:?} leaves the alphabets {alphabets:?}"
                )));
            }
            if !seen.insert(w) {
                return Err(Error::Data(format!("word {w:?} appears twice")));
            }
        }
        Ok(MixedCode { alphabets, words })
    }

    pub fn alphabets(&self) -> &[usize] {
        &self.alphabets
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Word length `d`.
    pub fn length(&self) -> usize {
        self.alphabets.len()
    }

    pub fn contains(&self, w: &[usize]) -> bool {
        self.words.iter().any(|x| x == w)
    }

    /// The words as a set, for order-insensitive comparison.
    pub fn word_set(&self) -> BTreeSet<Word> {
        self.words.iter().cloned().collect()
    }

    /// Every word of the ambient space, in rank order.
    pub fn space(alphabets: &[usize]) -> Odometer {
        Odometer::new(alphabets)
    }

    pub fn min_distance(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                let d = distance(u, v);
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        best
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMetrics {
    pub size: usize,
    /// `{ d(x, y) : x != y in C }`.
    pub distance_set: BTreeSet<usize>,
    /// Minimum of `distance_set`; absent for fewer than two words.
    pub min_distance: Option<usize>,
    /// Closed under componentwise addition modulo the alphabet sizes.
    pub is_additive: bool,
    /// Least nonzero weight, reported for additive codes only.
    pub min_weight: Option<usize>,
}

pub fn code_metrics(c: &MixedCode) -> CodeMetrics {
    let mut distance_set = BTreeSet::new();
    for (i, u) in c.words.iter().enumerate() {
        for v in &c.words[i + 1..] {
            distance_set.insert(distance(u, v));
        }
    }
    let is_additive = is_additive(c);
    let min_weight = if is_additive {
        c.words
            .iter()
            .map(|w| w.iter().filter(|&&x| x != 0).count())
            .filter(|&w| w > 0)
            .min()
    } else {
        None
    };
    CodeMetrics {
        size: c.len(),
        min_distance: distance_set.first().copied(),
        distance_set,
        is_additive,
        min_weight,
    }
}

fn is_additive(c: &MixedCode) -> bool {
    let set: HashSet<&Word> = c.words.iter().collect();
    c.words.iter().all(|u| {
        c.words.iter().all(|v| {
            let sum: Word = u
                .iter()
                .zip(v)
                .zip(&c.alphabets)
                .map(|((a, b), n)| (a + b) % n)
                .collect();
            set.contains(&sum)
        })
    })
}

/// Any two distinct codewords lie more than `t` apart.
pub fn is_error_detecting(c: &MixedCode, t: usize) -> bool {
    c.min_distance().is_none_or(|d| d > t)
}

/// `t`-error-correcting via the minimum distance: `delta > 2t`.
pub fn is_error_correcting(c: &MixedCode, t: usize) -> bool {
    c.min_distance().is_none_or(|d| d > 2 * t)
}

/// `t`-error-correcting straight from the definition: no word of the
/// space lies within distance `t` of two distinct codewords.
pub fn spheres_disjoint(c: &MixedCode, t: usize) -> bool {
    MixedCode::space(&c.alphabets).all(|z| {
        c.words
            .iter()
            .filter(|w| distance(w, &z) <= t)
            .take(2)
            .count()
            < 2
    })
}

/// The code meets the Singleton bound for its own minimum distance.
pub fn is_mds(c: &MixedCode) -> bool {
    match c.min_distance() {
        Some(delta) => singleton_bound(&c.alphabets, delta).is_ok_and(|b| b == c.len() as u64),
        None => false,
    }
}

/// An element of `H ⋊ K`: symbol permutations per coordinate followed by a
/// coordinate permutation that respects alphabet sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeTransform {
    pub symbol_perms: Vec<Vec<usize>>,
    pub coord_perm: Vec<usize>,
}

pub fn apply_code_transform(c: &MixedCode, t: &CodeTransform) -> Result<MixedCode> {
    let a = &c.alphabets;
    if t.symbol_perms.len() != a.len() || t.coord_perm.len() != a.len() {
        return param("transform length does not match the code");
    }
    for (i, p) in t.symbol_perms.iter().enumerate() {
        let set: BTreeSet<usize> = p.iter().copied().collect();
        if p.len() != a[i] || set.len() != a[i] || set.last().is_some_and(|&m| m >= a[i]) {
            return param(format!(
                "symbol map {i} is not a permutation of 0..{}",
                a[i]
            ));
        }
    }
    let targets: BTreeSet<usize> = t.coord_perm.iter().copied().collect();
    if targets.len() != a.len() || targets.last().is_some_and(|&m| m >= a.len()) {
        return param("coordinate map is not a permutation");
    }
    if t.coord_perm.iter().enumerate().any(|(i, &j)| a[i] != a[j]) {
        return param("coordinates may only move between equal alphabets");
    }
    let words = c
        .words
        .iter()
        .map(|w| {
            let mut out = vec![0; w.len()];
            for (i, &x) in w.iter().enumerate() {
                out[t.coord_perm[i]] = t.symbol_perms[i][x];
            }
            out
        })
        .collect();
    MixedCode::new(a.clone(), words)
}

/// `t` maps `c` onto `d`.
pub fn equivalent_under(c: &MixedCode, d: &MixedCode, t: &CodeTransform) -> Result<bool> {
    Ok(c.alphabets == d.alphabets && apply_code_transform(c, t)?.word_set() == d.word_set())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::six_word_code;

    #[test]
    fn distances() {
        assert_eq!(hamming_distance(&[0, 0, 0], &[0, 0, 0]).unwrap(), 0);
        assert_eq!(hamming_distance(&[1, 1, 1], &[2, 3, 1]).unwrap(), 2);
        assert_eq!(hamming_distance(&[0, 0], &[1, 1]).unwrap(), 2);
        assert!(hamming_distance(&[0], &[0, 1]).is_err());
    }

    #[test]
    fn rejects_malformed_codes() {
        assert!(MixedCode::new(vec![2, 2], vec![vec![0, 2]]).is_err());
        assert!(MixedCode::new(vec![2, 2], vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(MixedCode::new(vec![2, 2], vec![vec![0]]).is_err());
    }

    #[test]
    fn six_word_code_metrics() {
        let c = six_word_code();
        let m = code_metrics(&c);
        assert_eq!(m.size, 6);
        assert_eq!(m.min_distance, Some(2));
        assert!(is_mds(&c));
    }

    #[test]
    fn repetition_code() {
        let c = MixedCode::new(vec![2, 2, 2], vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        let m = code_metrics(&c);
        assert_eq!(m.min_distance, Some(3));
        assert!(m.is_additive);
        assert_eq!(m.min_weight, Some(3));
        assert!(is_error_correcting(&c, 1));
        assert!(spheres_disjoint(&c, 1));
        assert!(!is_error_correcting(&c, 2));
        assert!(is_mds(&c));
    }

    #[test]
    fn not_mds() {
        let c = MixedCode::new(vec![2, 2], vec![vec![0, 0], vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c.min_distance(), Some(1));
        assert!(!is_mds(&c));
        assert!(!code_metrics(&c).is_additive);
    }

    #[test]
    fn single_word_has_no_distance() {
        let c = MixedCode::new(vec![3], vec![vec![1]]).unwrap();
        let m = code_metrics(&c);
        assert_eq!(m.min_distance, None);
        assert!(m.distance_set.is_empty());
        assert!(!is_mds(&c));
    }

    #[test]
    fn transform_preserves_metrics() {
        let c = six_word_code();
        let t = CodeTransform {
            symbol_perms: vec![vec![2, 0, 1], vec![1, 2, 0], vec![1, 0]],
            coord_perm: vec![1, 0, 2],
        };
        let d = apply_code_transform(&c, &t).unwrap();
        assert!(equivalent_under(&c, &d, &t).unwrap());
        assert_eq!(code_metrics(&d).distance_set, code_metrics(&c).distance_set);
        assert!(is_mds(&d));
        let bad = CodeTransform {
            coord_perm: vec![2, 1, 0],
            ..t
        };
        assert!(apply_code_transform(&c, &bad).is_err());
    }
}
