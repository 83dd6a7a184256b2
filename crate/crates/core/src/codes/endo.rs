use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::codes::distance;
use crate::cuboid::Hypercuboid;
use crate::error::{Error, Result};
use crate::shape::CuboidShape;
use crate::validate::validate;

const MAX_VERTICES: usize = 10_000;

/// A vertex map on the cuboidal Hamming graph `H(shape, S)`, whose
/// vertices are the cells and whose edges join cells at a Hamming
/// distance in `S`. Vertices are flat cell indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism {
    shape: CuboidShape,
    distance_set: Vec<usize>,
    map: Vec<usize>,
    rank: usize,
}

impl Endomorphism {
    pub fn new(shape: CuboidShape, distance_set: Vec<usize>, map: Vec<usize>) -> Result<Self> {
        let v = shape.cell_count();
        if map.len() != v {
            return Err(Error::Data(format!(
                "map covers {} of {v} vertices",
                map.len()
            )));
        }
        if map.iter().any(|&y| y >= v) {
            return Err(Error::Data("map leaves the vertex set".into()));
        }
        let mut distance_set = distance_set;
        distance_set.sort_unstable();
        distance_set.dedup();
        let mut image = map.clone();
        image.sort_unstable();
        image.dedup();
        Ok(Endomorphism {
            shape,
            distance_set,
            rank: image.len(),
            map,
        })
    }

    pub fn identity(shape: CuboidShape, distance_set: Vec<usize>) -> Self {
        let map = (0..shape.cell_count()).collect();
        Endomorphism::new(shape, distance_set, map).expect("identity is total")
    }

    pub fn shape(&self) -> &CuboidShape {
        &self.shape
    }

    pub fn distance_set(&self) -> &[usize] {
        &self.distance_set
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Size of the image.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_singular(&self) -> bool {
        self.rank < self.map.len()
    }

    /// Preimages of each image vertex, ordered by image vertex.
    pub fn kernel_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, &y) in self.map.iter().enumerate() {
            classes.entry(y).or_default().push(x);
        }
        classes.into_values().collect()
    }

    /// Image vertices, sorted.
    pub fn image(&self) -> Vec<usize> {
        let mut image = self.map.clone();
        image.sort_unstable();
        image.dedup();
        image
    }
}

/// The minimal-rank endomorphism of `H(shape, {1, .., r})` induced by a
/// hypercuboid: every cell goes to the cell of the first r-subarray that
/// holds the same symbol.
pub fn build_endomorphism(c: &Hypercuboid) -> Result<Endomorphism> {
    if !c.is_standard() {
        return Err(Error::Data(format!(
            "need a full hypercuboid of order {}",
            c.shape().order()
        )));
    }
    if let Some(v) = validate(c).first_violation {
        return Err(Error::Data(format!(
            "not a Latin hypercuboid: {:?}",
            v.kind
        )));
    }
    let n = c.order();
    let mut home = vec![0; n];
    for (i, &s) in c.cells()[..n].iter().enumerate() {
        home[s as usize] = i;
    }
    let map = c.cells().iter().map(|&s| home[s as usize]).collect();
    let r = c.shape().class();
    Endomorphism::new(c.shape().clone(), (1..=r).collect(), map)
}

fn coords(shape: &CuboidShape) -> Vec<Vec<usize>> {
    crate::radix::Odometer::new(shape.sizes()).collect()
}

/// Checks that every edge is sent to an edge, over all vertex pairs.
pub fn verify_endomorphism(e: &Endomorphism) -> Result<bool> {
    let v = e.map.len();
    if v > MAX_VERTICES {
        return Err(Error::Resource {
            what: format!("exhaustive edge check is limited to {MAX_VERTICES} vertices"),
            nodes: 0,
        });
    }
    let points = coords(&e.shape);
    let s = &e.distance_set;
    let adjacent = |a: usize, b: usize| s.binary_search(&distance(&points[a], &points[b])).is_ok();
    Ok((0..v).into_par_iter().all(|a| {
        (a + 1..v).all(|b| {
            if !adjacent(a, b) {
                return true;
            }
            let (fa, fb) = (e.map[a], e.map[b]);
            fa != fb && adjacent(fa, fb)
        })
    }))
}

/// Number of edges of `H(shape, S)`.
pub fn edge_count(shape: &CuboidShape, distance_set: &[usize]) -> u64 {
    let points = coords(shape);
    let mut edges = 0;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if distance_set.contains(&distance(a, b)) {
                edges += 1;
            }
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cyclic_square, example_cuboid};

    #[test]
    fn example_endomorphism() {
        let e = build_endomorphism(&example_cuboid()).unwrap();
        assert_eq!(e.rank(), 6);
        assert_eq!(e.map().len(), 12);
        assert!(verify_endomorphism(&e).unwrap());
        assert_eq!(edge_count(e.shape(), e.distance_set()), 54);
        assert!(e.kernel_classes().iter().all(|k| k.len() == 2));
    }

    #[test]
    fn latin_square_colours_the_rook_graph() {
        let e = build_endomorphism(&cyclic_square(5)).unwrap();
        assert_eq!(e.rank(), 5);
        assert_eq!(e.distance_set(), &[1]);
        assert!(verify_endomorphism(&e).unwrap());
    }

    #[test]
    fn identity_and_constant_maps() {
        let shape = CuboidShape::new(vec![2, 2], 1).unwrap();
        let id = Endomorphism::identity(shape.clone(), vec![1]);
        assert!(verify_endomorphism(&id).unwrap());
        assert!(!id.is_singular());
        let constant = Endomorphism::new(shape, vec![1], vec![0; 4]).unwrap();
        assert_eq!(constant.rank(), 1);
        assert!(!verify_endomorphism(&constant).unwrap());
    }

    #[test]
    fn malformed_maps() {
        let shape = CuboidShape::new(vec![2, 2], 1).unwrap();
        assert!(Endomorphism::new(shape.clone(), vec![1], vec![0; 3]).is_err());
        assert!(Endomorphism::new(shape, vec![1], vec![0, 1, 2, 4]).is_err());
    }
}
