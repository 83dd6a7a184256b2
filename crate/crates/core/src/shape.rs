use crate::error::{param, Result};
use crate::radix;

/// The type `(n1, .., nd)` of a hypercuboid together with its class `r`.
///
/// Sizes are non-increasing and at least 2, and `1 <= r <= d - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuboidShape {
    sizes: Vec<usize>,
    class: usize,
}

impl CuboidShape {
    pub fn new(sizes: Vec<usize>, class: usize) -> Result<Self> {
        let d = sizes.len();
        if d < 2 {
            return param(format!(
                "a hypercuboid needs at least 2 coordinates, got {d}"
            ));
        }
        if let Some(&n) = sizes.iter().find(|&&n| n < 2) {
            return param(format!("coordinate sizes must be at least 2, got {n}"));
        }
        if sizes.windows(2).any(|w| w[0] < w[1]) {
            return param(format!("sizes must be non-increasing, got {sizes:?}"));
        }
        if class < 1 || class >= d {
            return param(format!("class must lie in 1..={}, got {class}", d - 1));
        }
        if radix::volume(&sizes).is_none() {
            return param("cell count overflows");
        }
        Ok(CuboidShape { sizes, class })
    }

    /// Sorts `sizes` into non-increasing order.
    ///
    /// Returns the shape and the coordinate permutation `perm` with
    /// `normalized.sizes()[i] == sizes[perm[i]]`.
    pub fn normalized(sizes: &[usize], class: usize) -> Result<(Self, Vec<usize>)> {
        let mut perm: Vec<usize> = (0..sizes.len()).collect();
        perm.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]));
        let sorted = perm.iter().map(|&i| sizes[i]).collect();
        Ok((CuboidShape::new(sorted, class)?, perm))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn dim(&self) -> usize {
        self.sizes.len()
    }

    pub fn class(&self) -> usize {
        self.class
    }

    /// Number of symbols of a full hypercuboid: the product of the `r`
    /// largest sizes.
    pub fn order(&self) -> usize {
        self.sizes[..self.class].iter().product()
    }

    pub fn cell_count(&self) -> usize {
        self.sizes.iter().product()
    }

    pub fn is_cubic(&self) -> bool {
        self.sizes.iter().all(|&n| n == self.sizes[0])
    }

    /// Radices of the r-tuple a symbol stands for.
    pub fn symbol_radices(&self) -> &[usize] {
        &self.sizes[..self.class]
    }

    pub fn index_of(&self, coords: &[usize]) -> usize {
        radix::rank(coords, &self.sizes)
    }

    pub fn coords_of(&self, index: usize) -> Vec<usize> {
        radix::unrank(index, &self.sizes)
    }

    /// Step in the flat cell index when coordinate `i` grows by one.
    pub fn stride(&self, i: usize) -> usize {
        self.sizes[..i].iter().product()
    }

    pub fn with_class(&self, class: usize) -> Result<Self> {
        CuboidShape::new(self.sizes.clone(), class)
    }
}

impl std::fmt::Display for CuboidShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sizes: Vec<String> = self.sizes.iter().map(|n| n.to_string()).collect();
        write!(f, "({}) class {}", sizes.join(","), self.class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        assert!(CuboidShape::new(vec![3], 1).is_err());
        assert!(CuboidShape::new(vec![2, 3], 1).is_err());
        assert!(CuboidShape::new(vec![3, 1], 1).is_err());
        assert!(CuboidShape::new(vec![3, 2, 2], 3).is_err());
        assert!(CuboidShape::new(vec![3, 2, 2], 0).is_err());
    }

    #[test]
    fn order_is_product_of_leading_sizes() {
        let s = CuboidShape::new(vec![3, 2, 2], 2).unwrap();
        assert_eq!(s.order(), 6);
        assert_eq!(s.cell_count(), 12);
        assert_eq!(s.stride(2), 6);
    }

    #[test]
    fn normalization_records_permutation() {
        let (s, perm) = CuboidShape::normalized(&[2, 3, 2], 1).unwrap();
        assert_eq!(s.sizes(), &[3, 2, 2]);
        assert_eq!(perm, vec![1, 0, 2]);
    }
}
