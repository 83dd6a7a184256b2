use crate::codes::{distance, MixedCode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueCheck {
    /// All pairwise distances lie in `low_dist..=d`.
    pub clique: bool,
    /// No word of the space can be added while staying a clique.
    pub maximal: bool,
}

/// Tests whether the code is a (maximal) clique of the cuboidal Hamming
/// graph whose edges join words at distance `low_dist` or more.
pub fn code_is_clique(c: &MixedCode, low_dist: usize) -> CliqueCheck {
    let words = c.words();
    let clique = words
        .iter()
        .enumerate()
        .all(|(i, u)| words[i + 1..].iter().all(|v| distance(u, v) >= low_dist));
    let maximal = clique
        && MixedCode::space(c.alphabets())
            .all(|z| c.contains(&z) || words.iter().any(|w| distance(w, &z) < low_dist));
    CliqueCheck { clique, maximal }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::six_word_code;

    #[test]
    fn six_word_code_is_a_maximal_clique() {
        let check = code_is_clique(&six_word_code(), 2);
        assert!(check.clique && check.maximal);
    }

    #[test]
    fn single_word_is_not_maximal() {
        let c = MixedCode::new(vec![3, 3, 2], vec![vec![0, 0, 0]]).unwrap();
        let check = code_is_clique(&c, 2);
        assert!(check.clique && !check.maximal);
    }

    #[test]
    fn full_space_is_not_a_clique() {
        let words = MixedCode::space(&[3, 3, 2]).collect();
        let c = MixedCode::new(vec![3, 3, 2], words).unwrap();
        assert!(!code_is_clique(&c, 2).clique);
    }
}
