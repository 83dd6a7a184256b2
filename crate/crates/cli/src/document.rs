//! On-disk documents. Symbols and code letters are 0-based unless the
//! caller asks for the 1-based display convention.

use std::fs;
use std::io::Read;

use hypercuboid::codes::MixedCode;
use hypercuboid::{CuboidShape, Error, Hypercuboid, Symbol, EMPTY};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuboidDocument {
    pub sizes: Vec<usize>,
    pub class: usize,
    pub order: usize,
    /// Flat cell list, coordinate 1 varying fastest; `null` marks an
    /// empty cell.
    pub cells: Vec<Option<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeDocument {
    pub alphabets: Vec<usize>,
    pub words: Vec<Vec<u64>>,
}

fn unshift(x: u64, base: u64, what: &str) -> Result<u64, Error> {
    x.checked_sub(base)
        .ok_or_else(|| Error::Data(format!("{what} {x} is below the 1-based range")))
}

impl CuboidDocument {
    pub fn from_cuboid(c: &Hypercuboid, base: u64) -> Self {
        CuboidDocument {
            sizes: c.shape().sizes().to_vec(),
            class: c.shape().class(),
            order: c.order(),
            cells: c
                .cells()
                .iter()
                .map(|&s| (s != EMPTY).then(|| s as u64 + base))
                .collect(),
        }
    }

    pub fn to_cuboid(&self, base: u64) -> Result<Hypercuboid, Error> {
        let shape = CuboidShape::new(self.sizes.clone(), self.class)
            .map_err(|e| Error::Data(e.to_string()))?;
        let cells = self
            .cells
            .iter()
            .map(|cell| match cell {
                None => Ok(EMPTY),
                Some(x) => {
                    let s = unshift(*x, base, "symbol")?;
                    if s >= EMPTY as u64 {
                        return Err(Error::Data(format!("symbol {x} is too large")));
                    }
                    Ok(s as Symbol)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Hypercuboid::new(shape, self.order, cells)
    }
}

impl CodeDocument {
    pub fn from_code(c: &MixedCode, base: u64) -> Self {
        CodeDocument {
            alphabets: c.alphabets().to_vec(),
            words: c
                .words()
                .iter()
                .map(|w| w.iter().map(|&x| x as u64 + base).collect())
                .collect(),
        }
    }

    pub fn to_code(&self, base: u64) -> Result<MixedCode, Error> {
        let words = self
            .words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&x| unshift(x, base, "letter").map(|v| v as usize))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        MixedCode::new(self.alphabets.clone(), words)
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Data(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Data(format!("reading {path}: {e}")))
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T, Error> {
    let text = read_source(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Data(format!("{path}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Hypercuboid {
        let shape = CuboidShape::new(vec![3, 2, 2], 2).unwrap();
        Hypercuboid::new(shape, 6, vec![0, 1, 2, 3, 4, 5, 4, 5, 3, 1, 2, 0]).unwrap()
    }

    #[test]
    fn cuboid_roundtrip() {
        for base in [0, 1] {
            let doc = CuboidDocument::from_cuboid(&example(), base);
            let text = serde_json::to_string(&doc).unwrap();
            let back: CuboidDocument = serde_json::from_str(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_cuboid(base).unwrap(), example());
        }
    }

    #[test]
    fn empty_cells_are_null() {
        let shape = CuboidShape::new(vec![2, 2], 1).unwrap();
        let c = Hypercuboid::new(shape, 2, vec![0, EMPTY, EMPTY, 0]).unwrap();
        let text = serde_json::to_string(&CuboidDocument::from_cuboid(&c, 0)).unwrap();
        assert!(text.contains("[0,null,null,0]"));
    }

    #[test]
    fn code_roundtrip() {
        let code = MixedCode::new(vec![3, 2], vec![vec![0, 1], vec![2, 0]]).unwrap();
        for base in [0, 1] {
            let doc = CodeDocument::from_code(&code, base);
            let back: CodeDocument =
                serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
            assert_eq!(back.to_code(base).unwrap(), code);
        }
    }

    #[test]
    fn one_based_rejects_zero() {
        let doc = CodeDocument {
            alphabets: vec![2],
            words: vec![vec![0]],
        };
        assert!(doc.to_code(1).is_err());
    }
}
