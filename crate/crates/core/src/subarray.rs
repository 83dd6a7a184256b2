use crate::error::{param, Result};
use crate::radix::{combinations, Odometer};
use crate::shape::CuboidShape;

/// A k-dimensional subarray: the coordinates in `varying` range freely,
/// every other coordinate is pinned to its value in `base`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubarraySelector {
    varying: Vec<usize>,
    base: Vec<usize>,
}

impl SubarraySelector {
    pub fn new(shape: &CuboidShape, varying: Vec<usize>, base: Vec<usize>) -> Result<Self> {
        let d = shape.dim();
        if base.len() != d {
            return param(format!(
                "selector needs {d} coordinates, got {}",
                base.len()
            ));
        }
        if varying.windows(2).any(|w| w[0] >= w[1]) || varying.iter().any(|&i| i >= d) {
            return param(format!(
                "varying coordinates {varying:?} are not a sorted subset of 0..{d}"
            ));
        }
        let mut base = base;
        for (i, x) in base.iter_mut().enumerate() {
            if varying.contains(&i) {
                *x = 0;
            } else if *x >= shape.sizes()[i] {
                return param(format!("fixed value {x} out of range on coordinate {i}"));
            }
        }
        Ok(SubarraySelector { varying, base })
    }

    /// The first r-subarray: coordinates `0..r` vary, the rest sit at 0.
    pub fn first(shape: &CuboidShape) -> Self {
        SubarraySelector {
            varying: (0..shape.class()).collect(),
            base: vec![0; shape.dim()],
        }
    }

    pub fn varying(&self) -> &[usize] {
        &self.varying
    }

    /// Pinned coordinates as `(coordinate, value)` pairs.
    pub fn fixed(&self) -> Vec<(usize, usize)> {
        (0..self.base.len())
            .filter(|i| !self.varying.contains(i))
            .map(|i| (i, self.base[i]))
            .collect()
    }

    pub fn cell_count(&self, shape: &CuboidShape) -> usize {
        self.varying.iter().map(|&i| shape.sizes()[i]).product()
    }

    pub fn contains(&self, coords: &[usize]) -> bool {
        coords
            .iter()
            .enumerate()
            .all(|(i, &x)| self.varying.contains(&i) || self.base[i] == x)
    }

    /// Flat cell indices of the subarray, first varying coordinate fastest.
    pub fn cells(&self, shape: &CuboidShape) -> Vec<usize> {
        let offset = shape.index_of(&self.base);
        let radices: Vec<usize> = self.varying.iter().map(|&i| shape.sizes()[i]).collect();
        let strides: Vec<usize> = self.varying.iter().map(|&i| shape.stride(i)).collect();
        Odometer::new(&radices)
            .map(|x| offset + x.iter().zip(&strides).map(|(a, s)| a * s).sum::<usize>())
            .collect()
    }
}

/// Every k-subarray of `shape` exactly once.
///
/// Varying sets come in lexicographic order; within one set the fixings
/// are enumerated with the lowest pinned coordinate fastest.
pub fn iter_subarrays(
    shape: &CuboidShape,
    k: usize,
) -> Result<impl Iterator<Item = SubarraySelector> + '_> {
    let d = shape.dim();
    if k < 1 || k > d {
        return param(format!("subarray dimension must lie in 1..={d}, got {k}"));
    }
    Ok(combinations(d, k).into_iter().flat_map(move |varying| {
        let pinned: Vec<usize> = (0..d).filter(|i| !varying.contains(i)).collect();
        let radices: Vec<usize> = pinned.iter().map(|&i| shape.sizes()[i]).collect();
        Odometer::new(&radices).map(move |values| {
            let mut base = vec![0; d];
            for (&i, v) in pinned.iter().zip(values) {
                base[i] = v;
            }
            SubarraySelector {
                varying: varying.clone(),
                base,
            }
        })
    }))
}
