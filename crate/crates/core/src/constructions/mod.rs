//! Explicit constructions of Latin hypercuboids of class r.
//!
//! * [`modular_class1`]: coordinate sum modulo `n1`, any shape of class 1.
//! * [`seed_cube`] / [`lift_identity_array`]: start from the array whose
//!   cells hold their own coordinate tuples and stack layers obtained by
//!   permuting tuple components.
//! * [`extend_cube`]: embed a cubic LHC(d, n, r) into LHC(d+1, n, r) using
//!   the r-layers of an LHC(r+1, n, r) as symbol permutations.
//! * [`matrix_cube`]: the linear map `x -> x f` over GF(p) for a `d x r`
//!   matrix `f` whose r-row submatrices are all invertible.

pub mod field;

use crate::cuboid::{Hypercuboid, Symbol};
use crate::error::{param, Error, Result};
use crate::radix::{self, combinations};
use crate::shape::CuboidShape;
use crate::subarray::iter_subarrays;
use crate::validate::validate;

fn checked(c: Hypercuboid) -> Result<Hypercuboid> {
    match validate(&c).first_violation {
        None => Ok(c),
        Some(v) => Err(Error::Construction(format!(
            "output is not a Latin hypercuboid: {:?} in subarray varying {:?}",
            v.kind,
            v.selector.varying()
        ))),
    }
}

fn require_valid(c: &Hypercuboid, what: &str) -> Result<()> {
    if !c.is_standard() {
        return Err(Error::Data(format!(
            "{what} must be full with order {}",
            c.shape().order()
        )));
    }
    if let Some(v) = validate(c).first_violation {
        return Err(Error::Data(format!("{what} is not valid: {:?}", v.kind)));
    }
    Ok(())
}

/// Cell `(a1, .., ad)` holds `(a1 + .. + ad) mod n1`.
pub fn modular_class1(shape: &CuboidShape) -> Result<Hypercuboid> {
    if shape.class() != 1 {
        return param(format!(
            "the modular construction is class 1, got class {}",
            shape.class()
        ));
    }
    let n = shape.sizes()[0];
    checked(Hypercuboid::from_fn(shape.clone(), |x| {
        (x.iter().sum::<usize>() % n) as Symbol
    })?)
}

fn is_permutation_of(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n
        && p.iter()
            .all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

/// Stacks `layers.len()` layers on the identity array over `sizes`.
///
/// The identity array has `r = sizes.len()` coordinates and holds in each
/// cell the symbol of its own coordinate tuple. Layer `i` replaces every
/// tuple `(t1, .., tr)` by `(layers[i][0][t1], .., layers[i][r-1][tr])`.
/// The result has shape `sizes ++ [layers.len()]` and class `r`; it is
/// validated before being returned.
pub fn lift_identity_array(sizes: &[usize], layers: &[Vec<Vec<usize>>]) -> Result<Hypercuboid> {
    let r = sizes.len();
    let mut full_sizes = sizes.to_vec();
    full_sizes.push(layers.len());
    let shape = CuboidShape::new(full_sizes, r)?;
    for (i, layer) in layers.iter().enumerate() {
        if layer.len() != r {
            return param(format!(
                "layer {i} has {} component maps, need {r}",
                layer.len()
            ));
        }
        for (k, p) in layer.iter().enumerate() {
            if !is_permutation_of(p, sizes[k]) {
                return param(format!(
                    "layer {i}, component {k} is not a permutation of 0..{}",
                    sizes[k]
                ));
            }
        }
    }
    let mut tuple = vec![0; r];
    checked(Hypercuboid::from_fn(shape, |x| {
        let layer = &layers[x[r]];
        for k in 0..r {
            tuple[k] = layer[k][x[k]];
        }
        radix::rank(&tuple, sizes) as Symbol
    })?)
}

/// Row `i` of a Latin square, read as the permutation `x -> square(x, i)`.
fn square_rows(square: &Hypercuboid) -> Result<Vec<Vec<usize>>> {
    let sizes = square.shape().sizes();
    if sizes.len() != 2 || sizes[0] != sizes[1] || square.shape().class() != 1 {
        return Err(Error::Data(
            "expected an n x n Latin square of class 1".into(),
        ));
    }
    require_valid(square, "the Latin square")?;
    let n = sizes[0];
    Ok((0..n)
        .map(|i| (0..n).map(|x| square.get(&[x, i]) as usize).collect())
        .collect())
}

/// An LHC(r+1, n, r) built from an `n x n` Latin square: layer `i` applies
/// row `i` of the square to every component of the coordinate tuples.
pub fn seed_cube(n: usize, r: usize, square: &Hypercuboid) -> Result<Hypercuboid> {
    if r < 1 {
        return param("class must be at least 1");
    }
    let rows = square_rows(square)?;
    if rows.len() != n {
        return param(format!("square has order {}, expected {n}", rows.len()));
    }
    let layers: Vec<Vec<Vec<usize>>> = rows.into_iter().map(|phi| vec![phi; r]).collect();
    lift_identity_array(&vec![n; r], &layers)
}

/// Embeds a cubic LHC(d, n, r) into an LHC(d+1, n, r).
///
/// The r-layers of `seed` (an LHC(r+1, n, r)) define symbol permutations
/// `phi_i` by `phi_i(seed_0[p]) = seed_i[p]`, so `phi_0` is the identity.
/// Layer `i` of the output is `cube` relabeled by `phi_i`. The embedding
/// fails when two layers collide inside an r-subarray that crosses the new
/// coordinate; the error names the witnessing layers and cells.
pub fn extend_cube(cube: &Hypercuboid, seed: &Hypercuboid) -> Result<Hypercuboid> {
    let shape = cube.shape();
    if !shape.is_cubic() {
        return param("the base must be a hypercube");
    }
    let n = shape.sizes()[0];
    let r = shape.class();
    let d = shape.dim();
    let sshape = seed.shape();
    if sshape.sizes() != vec![n; r + 1].as_slice() || sshape.class() != r {
        return param(format!(
            "the seed must have shape ({n}^{}) and class {r}, got {sshape}",
            r + 1
        ));
    }
    require_valid(cube, "the base cube")?;
    require_valid(seed, "the seed cube")?;

    let big_n = cube.order();
    let base = seed.last_layer(0);
    let phis: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let mut phi = vec![0; big_n];
            for (&from, &to) in base.iter().zip(seed.last_layer(i)) {
                phi[from as usize] = to as usize;
            }
            phi
        })
        .collect();

    check_layer_condition(cube, &phis)?;

    let out_shape = CuboidShape::new(vec![n; d + 1], r)?;
    let layer_len = cube.cells().len();
    let mut cells = Vec::with_capacity(layer_len * n);
    for phi in &phis {
        cells.extend(cube.cells().iter().map(|&s| phi[s as usize] as Symbol));
    }
    checked(Hypercuboid::new(out_shape, big_n, cells)?)
}

/// Every r-subarray of the extension that runs along the new coordinate
/// consists of an (r-1)-subarray of `cube` repeated over all layers. The
/// extension is Latin iff none of these repeats a symbol.
fn check_layer_condition(cube: &Hypercuboid, phis: &[Vec<usize>]) -> Result<()> {
    let shape = cube.shape();
    let r = shape.class();
    if r < 2 {
        // single cells: distinct because the seed rows form a Latin square
        return Ok(());
    }
    let mut owner: Vec<Option<(usize, usize)>> = vec![None; cube.order()];
    for selector in iter_subarrays(shape, r - 1)? {
        owner.iter_mut().for_each(|o| *o = None);
        for cell in selector.cells(shape) {
            let s = cube.cells()[cell] as usize;
            for (i, phi) in phis.iter().enumerate() {
                let image = phi[s];
                if let Some((layer, other)) = owner[image] {
                    return Err(Error::Construction(format!(
                        "layer condition violated: symbol {image} appears in layer {layer} at cell {:?} \
                         and in layer {i} at cell {:?} of the subarray varying {:?} plus the new coordinate",
                        shape.coords_of(other),
                        shape.coords_of(cell),
                        selector.varying()
                    )));
                }
                owner[image] = Some((i, cell));
            }
        }
    }
    Ok(())
}

/// A `d x r` matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSpec {
    prime: usize,
    rows: Vec<Vec<usize>>,
}

impl MatrixSpec {
    pub fn new(prime: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if !field::is_prime(prime) {
            return param(format!("{prime} is not prime"));
        }
        let Some(r) = rows.first().map(Vec::len) else {
            return param("matrix has no rows");
        };
        if r == 0 || rows.iter().any(|row| row.len() != r) {
            return param("matrix rows must share a positive length");
        }
        if rows.iter().flatten().any(|&x| x >= prime) {
            return param(format!("matrix entries must lie in 0..{prime}"));
        }
        if rows.len() < r {
            return param("matrix needs at least as many rows as columns");
        }
        Ok(MatrixSpec { prime, rows })
    }

    pub fn prime(&self) -> usize {
        self.prime
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn class(&self) -> usize {
        self.rows[0].len()
    }

    /// First choice of `r` rows (in lexicographic order) whose submatrix is
    /// singular.
    pub fn singular_rows(&self) -> Option<Vec<usize>> {
        combinations(self.dim(), self.class())
            .into_iter()
            .find(|pick| {
                let sub: Vec<Vec<usize>> = pick.iter().map(|&i| self.rows[i].clone()).collect();
                field::determinant(&sub, self.prime).expect("prime checked") == 0
            })
    }

    /// `x f` over GF(p).
    pub fn apply(&self, x: &[usize]) -> Vec<usize> {
        let p = self.prime;
        (0..self.class())
            .map(|j| {
                x.iter()
                    .zip(&self.rows)
                    .map(|(a, row)| a * row[j])
                    .sum::<usize>()
                    % p
            })
            .collect()
    }
}

/// True iff every r-row submatrix is invertible over GF(p), i.e. the map
/// `x -> x f` can be solved uniquely for any `r` coordinates.
pub fn check_matrix_quasigroup(spec: &MatrixSpec) -> bool {
    spec.singular_rows().is_none()
}

/// The cubic LHC(d, p, r) with cell `x` holding the symbol of `x f`.
pub fn matrix_cube(spec: &MatrixSpec) -> Result<Hypercuboid> {
    if let Some(rows) = spec.singular_rows() {
        return Err(Error::Construction(format!(
            "rows {rows:?} form a singular submatrix over GF({})",
            spec.prime
        )));
    }
    let p = spec.prime;
    let r = spec.class();
    let shape = CuboidShape::new(vec![p; spec.dim()], r)?;
    let radices = vec![p; r];
    checked(Hypercuboid::from_fn(shape, |x| {
        radix::rank(&spec.apply(x), &radices) as Symbol
    })?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cyclic_square, example_cuboid};
    use crate::radix::Odometer;
    use crate::validate::is_valid;

    fn field_points(p: usize, d: usize) -> Odometer {
        Odometer::new(&vec![p; d])
    }

    fn shape(sizes: &[usize], r: usize) -> CuboidShape {
        CuboidShape::new(sizes.to_vec(), r).unwrap()
    }

    #[test]
    fn modular_xor_square() {
        let c = modular_class1(&shape(&[2, 2], 1)).unwrap();
        assert_eq!(c.cells(), &[0, 1, 1, 0]);
    }

    #[test]
    fn modular_shapes_are_valid() {
        for sizes in [&[3, 2, 2][..], &[3, 3, 3], &[5, 4, 2, 2]] {
            let c = modular_class1(&shape(sizes, 1)).unwrap();
            assert!(is_valid(&c));
            assert_eq!(c.order(), sizes[0]);
        }
        assert!(modular_class1(&shape(&[3, 2, 2], 2)).is_err());
    }

    #[test]
    fn seed_cubes() {
        let sq = cyclic_square(3);
        let c = seed_cube(3, 1, &sq).unwrap();
        assert_eq!(c.shape(), &shape(&[3, 3], 1));
        let c = seed_cube(3, 2, &sq).unwrap();
        assert_eq!((c.order(), c.cells().len()), (9, 27));
        let c = seed_cube(2, 2, &cyclic_square(2)).unwrap();
        assert_eq!(c.order(), 4);
    }

    #[test]
    fn seed_rejects_non_latin_square() {
        let bad = Hypercuboid::new(shape(&[2, 2], 1), 2, vec![0, 0, 1, 1]).unwrap();
        assert!(matches!(seed_cube(2, 2, &bad), Err(Error::Data(_))));
    }

    #[test]
    fn componentwise_lift_reproduces_the_example() {
        let id3 = vec![0, 1, 2];
        let id2 = vec![0, 1];
        let phi = vec![1, 2, 0];
        let psi = vec![1, 0];
        let layers = vec![vec![id3, id2], vec![phi, psi]];
        let c = lift_identity_array(&[3, 2], &layers).unwrap();
        assert_eq!(c, example_cuboid());
    }

    #[test]
    fn extend_cyclic_square_to_cube() {
        let sq = cyclic_square(3);
        let base = seed_cube(3, 1, &sq).unwrap();
        let cube = extend_cube(&base, &sq).unwrap();
        assert_eq!(cube.shape(), &shape(&[3, 3, 3], 1));
        assert!(is_valid(&cube));
        assert_eq!(cube.last_layer(0), base.cells());
    }

    #[test]
    fn extend_detects_layer_collision() {
        let sq = cyclic_square(3);
        let base = seed_cube(3, 2, &sq).unwrap();
        let seed = seed_cube(3, 2, &sq).unwrap();
        assert!(matches!(
            extend_cube(&base, &seed),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn extend_shape_mismatch() {
        let sq = cyclic_square(3);
        let base = seed_cube(3, 2, &sq).unwrap();
        assert!(matches!(extend_cube(&base, &sq), Err(Error::Parameter(_))));
    }

    #[test]
    fn gf3_matrix() {
        let spec =
            MatrixSpec::new(3, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]).unwrap();
        assert!(check_matrix_quasigroup(&spec));
        let c = matrix_cube(&spec).unwrap();
        assert_eq!((c.cells().len(), c.order()), (81, 9));
        assert!(is_valid(&c));
    }

    #[test]
    fn parity_matrix_matches_modular() {
        let spec = MatrixSpec::new(2, vec![vec![1]; 3]).unwrap();
        assert_eq!(
            matrix_cube(&spec).unwrap(),
            modular_class1(&shape(&[2, 2, 2], 1)).unwrap()
        );
    }

    #[test]
    fn gf2_class_two() {
        let spec = MatrixSpec::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert!(check_matrix_quasigroup(&spec));
        assert!(is_valid(&matrix_cube(&spec).unwrap()));
    }

    #[test]
    fn singular_matrices() {
        let spec = MatrixSpec::new(3, vec![vec![1, 0], vec![0, 0], vec![1, 1]]).unwrap();
        assert!(!check_matrix_quasigroup(&spec));
        assert_eq!(spec.singular_rows(), Some(vec![0, 1]));
        assert!(matches!(matrix_cube(&spec), Err(Error::Construction(_))));
        let square = MatrixSpec::new(5, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(check_matrix_quasigroup(&square));
        assert!(MatrixSpec::new(4, vec![vec![1]]).is_err());
    }

    #[test]
    fn matrix_map_is_bijective_on_every_layer() {
        let spec =
            MatrixSpec::new(3, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]).unwrap();
        for pick in combinations(4, 2) {
            let mut images = std::collections::HashSet::new();
            for x in field_points(3, 2) {
                let mut full = vec![0; 4];
                full[pick[0]] = x[0];
                full[pick[1]] = x[1];
                images.insert(spec.apply(&full));
            }
            assert_eq!(images.len(), 9);
        }
    }
}
