use std::collections::HashMap;

use crate::codes::{distance, MixedCode, Word};
use crate::cuboid::{Hypercuboid, Symbol, EMPTY};
use crate::error::{param, Error, Result};
use crate::radix;
use crate::shape::CuboidShape;
use crate::validate::validate;

/// Reads a full hypercuboid as a mixed MDS code, one word per cell.
///
/// Without expansion the word of cell `x` is `(s, x1, .., xd)` over the
/// alphabets `(n, n1, .., nd)` and the code has minimum distance 2. With
/// expansion the symbol is replaced by its r-tuple, giving words of length
/// `d + r` over `(n1, .., nr, n1, .., nd)`. The expanded code has minimum
/// distance `r + 1` only when neighbouring cells carry tuples that differ
/// in every component; class 1 always qualifies.
pub fn cuboid_to_code(c: &Hypercuboid, expand: bool) -> Result<MixedCode> {
    if !c.is_standard() {
        return param(format!(
            "conversion needs a full hypercuboid of order {}",
            c.shape().order()
        ));
    }
    if let Some(v) = validate(c).first_violation {
        return Err(Error::Data(format!(
            "not a Latin hypercuboid: {:?}",
            v.kind
        )));
    }
    let shape = c.shape();
    let symbol_radices = shape.symbol_radices();
    let mut alphabets: Vec<usize> = if expand {
        symbol_radices.to_vec()
    } else {
        vec![c.order()]
    };
    alphabets.extend_from_slice(shape.sizes());
    let words = MixedCode::space(shape.sizes())
        .zip(c.cells())
        .map(|(x, &s)| {
            let mut w: Word = if expand {
                radix::unrank(s as usize, symbol_radices)
            } else {
                vec![s as usize]
            };
            w.extend(x);
            w
        })
        .collect();
    MixedCode::new(alphabets, words)
}

/// Places the words of a mixed code of length `d + r` into an array: the
/// last `d` coordinates give the cell, the first `r` the symbol tuple.
///
/// The words must fill the array exactly once, and two words carrying the
/// same symbol must differ in at least `r + 1` position coordinates. Every
/// mixed MDS code with minimum distance `r + 1` meets both requirements.
pub fn code_to_cuboid(c: &MixedCode, r: usize) -> Result<Hypercuboid> {
    let len = c.length();
    if r < 1 || len < r + 2 {
        return param(format!("a code of length {len} cannot carry class {r}"));
    }
    let (symbol_part, sizes) = c.alphabets().split_at(r);
    let shape = CuboidShape::new(sizes.to_vec(), r).map_err(|e| Error::Data(e.to_string()))?;
    if symbol_part != shape.symbol_radices() {
        return Err(Error::Data(format!(
            "symbol alphabets {symbol_part:?} must equal the leading sizes {:?}",
            shape.symbol_radices()
        )));
    }
    if c.len() != shape.cell_count() {
        return Err(Error::Data(format!(
            "code has {} words, the array has {} cells",
            c.len(),
            shape.cell_count()
        )));
    }
    // words sharing a symbol must be r + 1 apart on the position block
    let mut by_symbol: HashMap<&[usize], Vec<&[usize]>> = HashMap::new();
    for w in c.words() {
        let (symbol, position) = w.split_at(r);
        let peers = by_symbol.entry(symbol).or_default();
        if let Some(p) = peers.iter().find(|p| distance(p, position) <= r) {
            return Err(Error::Data(format!(
                "codewords at positions {p:?} and {position:?} share a symbol but are \
                 fewer than {} positions apart",
                r + 1
            )));
        }
        peers.push(position);
    }
    let mut cells = vec![EMPTY; shape.cell_count()];
    for w in c.words() {
        let (symbol, position) = w.split_at(r);
        let cell = shape.index_of(position);
        if cells[cell] != EMPTY {
            return Err(Error::Data(format!(
                "two codewords share the position {position:?}"
            )));
        }
        cells[cell] = radix::rank(symbol, symbol_part) as Symbol;
    }
    let cuboid = Hypercuboid::new(shape.clone(), shape.order(), cells)?;
    if let Some(v) = validate(&cuboid).first_violation {
        return Err(Error::Data(format!(
            "induced array is not Latin: {:?}",
            v.kind
        )));
    }
    Ok(cuboid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::singleton_bound;
    use crate::codes::{code_metrics, is_mds};
    use crate::fixtures::{cyclic_square, example_cuboid, partial_cube, six_word_code};

    #[test]
    fn plain_conversion() {
        let code = cuboid_to_code(&example_cuboid(), false).unwrap();
        assert_eq!(code.len(), 12);
        assert_eq!(code.alphabets(), &[6, 3, 2, 2]);
        assert_eq!(code.min_distance(), Some(2));
        assert!(is_mds(&code));
    }

    #[test]
    fn expanded_conversion() {
        let code = cuboid_to_code(&example_cuboid(), true).unwrap();
        assert_eq!(code.len(), 12);
        assert_eq!(code.alphabets(), &[3, 2, 3, 2, 2]);
        // 12 words at distance 3 would beat the Singleton bound of 2*2*2
        assert_eq!(singleton_bound(code.alphabets(), 3).unwrap(), 8);
        assert_eq!(code.min_distance(), Some(2));
        assert!(!is_mds(&code));
        assert_eq!(code_to_cuboid(&code, 2).unwrap(), example_cuboid());
    }

    #[test]
    fn expanded_class_one_code_is_mds() {
        let c = crate::constructions::modular_class1(&CuboidShape::new(vec![3, 3, 2], 1).unwrap())
            .unwrap();
        let code = cuboid_to_code(&c, true).unwrap();
        assert_eq!(code.min_distance(), Some(2));
        assert!(is_mds(&code));
        assert_eq!(code_to_cuboid(&code, 1).unwrap(), c);
    }

    #[test]
    fn latin_square_gives_triples() {
        let code = cuboid_to_code(&cyclic_square(4), false).unwrap();
        assert_eq!(code.alphabets(), &[4, 4, 4]);
        assert_eq!(code.len(), 16);
        assert_eq!(code_metrics(&code).min_distance, Some(2));
    }

    #[test]
    fn six_words_form_a_latin_rectangle() {
        let c = code_to_cuboid(&six_word_code(), 1).unwrap();
        assert_eq!(c.shape().sizes(), &[3, 2]);
        let one_based: Vec<u16> = c.cells().iter().map(|s| s + 1).collect();
        assert_eq!(one_based, vec![1, 3, 2, 2, 1, 3]);
    }

    #[test]
    fn distance_violation_is_a_data_error() {
        let words = vec![
            vec![0, 0, 0],
            vec![0, 1, 0],
            vec![1, 2, 0],
            vec![1, 0, 1],
            vec![2, 1, 1],
            vec![2, 2, 1],
        ];
        let c = MixedCode::new(vec![3, 3, 2], words).unwrap();
        assert!(matches!(code_to_cuboid(&c, 1), Err(Error::Data(_))));
    }

    #[test]
    fn partial_input_is_rejected() {
        assert!(matches!(
            cuboid_to_code(&partial_cube(), true),
            Err(Error::Parameter(_))
        ));
    }
}
