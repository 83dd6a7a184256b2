//! Independent reference implementations used by the integration and
//! acceptance tests. Nothing here calls into the search engine or the
//! validator.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

/// Coordinates of a flat index, coordinate 1 fastest.
pub fn coords(sizes: &[usize], mut index: usize) -> Vec<usize> {
    sizes
        .iter()
        .map(|&n| {
            let x = index % n;
            index /= n;
            x
        })
        .collect()
}

pub fn all_coords(sizes: &[usize]) -> Vec<Vec<usize>> {
    let cells: usize = sizes.iter().product();
    (0..cells).map(|i| coords(sizes, i)).collect()
}

fn hamming(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// A full array of order `prod(n_1..n_r)` is Latin of class r iff equal
/// symbols never sit within distance r of each other.
pub fn distance_rule(sizes: &[usize], r: usize, cells: &[u16]) -> bool {
    let pos = all_coords(sizes);
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if cells[i] == cells[j] && hamming(&pos[i], &pos[j]) <= r {
                return false;
            }
        }
    }
    true
}

pub fn order(sizes: &[usize], r: usize) -> usize {
    sizes[..r].iter().product()
}

/// Non-increasing shapes with entries >= 2, dimension >= 2 and at most
/// `max_cells` cells, paired with every class 1..d-1.
pub fn small_shapes(max_cells: usize) -> Vec<(Vec<usize>, usize)> {
    fn grow(prefix: &mut Vec<usize>, cells: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let top = prefix.last().copied().unwrap_or(max);
        for n in 2..=top {
            if cells * n <= max {
                prefix.push(n);
                grow(prefix, cells * n, max, out);
                prefix.pop();
            }
        }
    }
    let mut sizes = Vec::new();
    grow(&mut Vec::new(), 1, max_cells, &mut sizes);
    let mut out = Vec::new();
    for s in sizes {
        for r in 1..s.len() {
            out.push((s.clone(), r));
        }
    }
    out.sort();
    out
}

/// Counts full arrays passing the distance rule by trying every filling
/// of the cells after the fixed prefix `0, 1, .., n-1`.
pub fn generate_and_test(sizes: &[usize], r: usize) -> u64 {
    let n = order(sizes, r);
    let total: usize = sizes.iter().product();
    let mut cells: Vec<u16> = (0..total)
        .map(|i| if i < n { i as u16 } else { 0 })
        .collect();
    let mut count = 0;
    loop {
        if distance_rule(sizes, r, &cells) {
            count += 1;
        }
        let mut k = n;
        loop {
            if k == total {
                return count;
            }
            cells[k] += 1;
            if (cells[k] as usize) < n {
                break;
            }
            cells[k] = 0;
            k += 1;
        }
    }
}

/// Plain backtracking over all cells in index order with the distance
/// rule as the only pruning. `fixed_prefix` pins the first n cells.
pub fn backtrack_count(sizes: &[usize], r: usize, fixed_prefix: bool) -> u64 {
    let n = order(sizes, r);
    let pos = all_coords(sizes);
    let total = pos.len();
    let mut cells = vec![0u16; total];
    let start = if fixed_prefix {
        for (i, c) in cells.iter_mut().enumerate().take(n) {
            *c = i as u16;
        }
        n
    } else {
        0
    };
    fn go(k: usize, n: usize, r: usize, pos: &[Vec<usize>], cells: &mut Vec<u16>) -> u64 {
        if k == pos.len() {
            return 1;
        }
        let mut found = 0;
        for s in 0..n as u16 {
            let clash = (0..k).any(|j| cells[j] == s && hamming(&pos[j], &pos[k]) <= r);
            if !clash {
                cells[k] = s;
                found += go(k + 1, n, r, pos, cells);
            }
        }
        found
    }
    go(start, n, r, &pos, &mut cells)
}

/// A random full array over the right number of symbols. About half the
/// samples start from `valid` (when given) with relabeled symbols and
/// possibly one mutation, so both verdicts are well represented.
pub fn sample_array(rng: &mut impl Rng, sizes: &[usize], r: usize, valid: &[Vec<u16>]) -> Vec<u16> {
    let n = order(sizes, r);
    let total: usize = sizes.iter().product();
    if valid.is_empty() || rng.gen_bool(0.5) {
        return (0..total).map(|_| rng.gen_range(0..n) as u16).collect();
    }
    let mut relabel: Vec<u16> = (0..n as u16).collect();
    relabel.shuffle(rng);
    let base = valid.choose(rng).unwrap();
    let mut cells: Vec<u16> = base.iter().map(|&s| relabel[s as usize]).collect();
    match rng.gen_range(0..3) {
        0 => {}
        1 => {
            let i = rng.gen_range(0..total);
            let j = rng.gen_range(0..total);
            cells.swap(i, j);
        }
        _ => {
            let i = rng.gen_range(0..total);
            cells[i] = rng.gen_range(0..n) as u16;
        }
    }
    cells
}

/// Largest code with minimum distance `delta`, by checking every subset
/// of the space. Spaces of at most 16 words only.
pub fn max_code_subsets(alphabets: &[usize], delta: usize) -> u64 {
    let words = all_coords(alphabets);
    let m = words.len();
    assert!(m <= 16);
    let far: Vec<u32> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && hamming(&words[i], &words[j]) >= delta)
                .fold(0, |acc, j| acc | 1 << j)
        })
        .collect();
    let mut best = 0;
    for set in 0u32..(1 << m) {
        let size = set.count_ones();
        if size <= best {
            continue;
        }
        if (0..m).all(|i| set & (1 << i) == 0 || (set & !(1 << i)) & !far[i] == 0) {
            best = size;
        }
    }
    best as u64
}

/// Non-increasing alphabet tuples (entries >= 2) with product <= `max`.
pub fn alphabet_tuples(max: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, prod: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let top = prefix.last().copied().unwrap_or(max);
        for n in 2..=top {
            if prod * n <= max {
                prefix.push(n);
                grow(prefix, prod * n, max, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), 1, max, &mut out);
    out
}

/// Cell `x` holds the rank of `x f` over GF(p), first component fastest.
pub fn linear_array(p: usize, rows: &[Vec<usize>]) -> Vec<u16> {
    let d = rows.len();
    let r = rows[0].len();
    all_coords(&vec![p; d])
        .iter()
        .map(|x| {
            let mut rank = 0;
            for j in (0..r).rev() {
                let v: usize = (0..d).map(|i| x[i] * rows[i][j]).sum::<usize>() % p;
                rank = rank * p + v;
            }
            rank as u16
        })
        .collect()
}
