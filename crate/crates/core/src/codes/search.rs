use crate::codes::{distance, MixedCode, Word};
use crate::error::{param, Error, Result};

const MAX_SPACE: usize = 32;

/// Exact `A(d, delta)` for spaces of at most 32 words, with a witness.
///
/// Runs a branch-and-bound maximum clique search over the graph joining
/// words at distance `>= delta`. Among optimal codes the witness is the
/// first one met in rank order.
pub fn max_code_bruteforce(alphabets: &[usize], delta: usize) -> Result<(u64, MixedCode)> {
    let d = alphabets.len();
    if d == 0 || alphabets.contains(&0) {
        return param("alphabets must be a non-empty list of positive sizes");
    }
    if delta < 1 || delta > d {
        return param(format!("minimum distance must lie in 1..={d}, got {delta}"));
    }
    let space: Vec<Word> = MixedCode::space(alphabets).take(MAX_SPACE + 1).collect();
    if space.len() > MAX_SPACE {
        return Err(Error::Resource {
            what: format!("exhaustive code search is limited to {MAX_SPACE} words"),
            nodes: 0,
        });
    }
    let m = space.len();
    let adjacency: Vec<u32> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && distance(&space[i], &space[j]) >= delta)
                .fold(0u32, |acc, j| acc | (1 << j))
        })
        .collect();

    let mut best = 0u32;
    let mut current = 0u32;
    grow(
        &adjacency,
        &mut current,
        ((1u64 << m) - 1) as u32,
        &mut best,
    );

    let words = (0..m)
        .filter(|&i| best & (1 << i) != 0)
        .map(|i| space[i].clone())
        .collect();
    let code = MixedCode::new(alphabets.to_vec(), words)?;
    Ok((best.count_ones() as u64, code))
}

fn grow(adjacency: &[u32], current: &mut u32, mut candidates: u32, best: &mut u32) {
    if current.count_ones() > best.count_ones() {
        *best = *current;
    }
    while candidates != 0 {
        if current.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        let v = candidates.trailing_zeros();
        candidates &= candidates - 1;
        *current |= 1 << v;
        grow(adjacency, current, candidates & adjacency[v as usize], best);
        *current &= !(1 << v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::code_metrics;

    #[test]
    fn small_optima() {
        let (a, c) = max_code_bruteforce(&[2, 2], 2).unwrap();
        assert_eq!(a, 2);
        assert_eq!(code_metrics(&c).min_distance, Some(2));
        let (a, c) = max_code_bruteforce(&[2, 2, 2], 2).unwrap();
        assert_eq!(a, 4);
        assert!(c.words().iter().all(|w| w.iter().sum::<usize>() % 2 == 0));
        assert_eq!(max_code_bruteforce(&[2, 2, 2], 3).unwrap().0, 2);
        assert_eq!(max_code_bruteforce(&[3, 2, 2], 1).unwrap().0, 12);
        assert_eq!(max_code_bruteforce(&[3, 3, 2], 2).unwrap().0, 6);
    }

    #[test]
    fn large_spaces_are_refused() {
        assert!(matches!(
            max_code_bruteforce(&[3, 3, 2, 2], 2),
            Err(Error::Resource { .. })
        ));
        assert!(max_code_bruteforce(&[2, 2], 3).is_err());
    }
}
