//! Isotopy and paratopy actions, semi-reduced forms and brute-force orbits.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::cuboid::{Hypercuboid, Symbol, EMPTY};
use crate::error::{param, Error, Result};
use crate::radix::Odometer;
use crate::validate::is_valid;

/// An element of `(S_n1 x .. x S_nd x S_n) ⋊ S~_d`.
///
/// Cell `x` of the input lands on the position `y` with
/// `y[coord_perm[i]] = axis_perms[i][x[i]]`, and its symbol `s` becomes
/// `symbol_perm[s]`. `coord_perm` may only exchange coordinates of equal
/// size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotopyTransform {
    pub symbol_perm: Vec<usize>,
    pub axis_perms: Vec<Vec<usize>>,
    pub coord_perm: Vec<usize>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

impl IsotopyTransform {
    pub fn identity(sizes: &[usize], order: usize) -> Self {
        IsotopyTransform {
            symbol_perm: (0..order).collect(),
            axis_perms: sizes.iter().map(|&n| (0..n).collect()).collect(),
            coord_perm: (0..sizes.len()).collect(),
        }
    }

    fn check(&self, c: &Hypercuboid) -> Result<()> {
        let sizes = c.shape().sizes();
        if self.symbol_perm.len() != c.order() || !is_permutation(&self.symbol_perm) {
            return param("symbol map is not a permutation of the symbol set");
        }
        if self.axis_perms.len() != sizes.len() || self.coord_perm.len() != sizes.len() {
            return param("transform dimension does not match the cuboid");
        }
        for (i, p) in self.axis_perms.iter().enumerate() {
            if p.len() != sizes[i] || !is_permutation(p) {
                return param(format!(
                    "axis map {i} is not a permutation of 0..{}",
                    sizes[i]
                ));
            }
        }
        if !is_permutation(&self.coord_perm) {
            return param("coordinate map is not a permutation");
        }
        for (i, &j) in self.coord_perm.iter().enumerate() {
            if sizes[i] != sizes[j] {
                return param(format!(
                    "coordinate {i} (size {}) cannot move to coordinate {j} (size {})",
                    sizes[i], sizes[j]
                ));
            }
        }
        Ok(())
    }
}

pub fn apply_transform(c: &Hypercuboid, t: &IsotopyTransform) -> Result<Hypercuboid> {
    t.check(c)?;
    let shape = c.shape();
    let mut cells = vec![EMPTY; c.cells().len()];
    let mut y = vec![0; shape.dim()];
    for (src, x) in Odometer::new(shape.sizes()).enumerate() {
        for (i, &xi) in x.iter().enumerate() {
            y[t.coord_perm[i]] = t.axis_perms[i][xi];
        }
        let s = c.cells()[src];
        cells[shape.index_of(&y)] = if s == EMPTY {
            EMPTY
        } else {
            t.symbol_perm[s as usize] as Symbol
        };
    }
    Hypercuboid::new(shape.clone(), c.order(), cells)
}

fn require_standard(c: &Hypercuboid) -> Result<()> {
    if !c.is_full() {
        return param("operation needs a full hypercuboid");
    }
    if c.order() != c.shape().order() {
        return param(format!(
            "operation needs order {}, got {}",
            c.shape().order(),
            c.order()
        ));
    }
    Ok(())
}

/// True iff the first r-subarray holds `0, 1, .., n-1` in cell order.
pub fn is_semi_reduced(c: &Hypercuboid) -> Result<bool> {
    require_standard(c)?;
    let n = c.order();
    Ok(c.cells()[..n]
        .iter()
        .enumerate()
        .all(|(i, &s)| s as usize == i))
}

/// Relabels symbols so that the first r-subarray reads `0..n`.
///
/// Returns the relabeled cuboid and the map `old symbol -> new symbol`.
pub fn semi_reduce(c: &Hypercuboid) -> Result<(Hypercuboid, Vec<usize>)> {
    require_standard(c)?;
    if !is_valid(c) {
        return param("semi-reduction needs a valid hypercuboid");
    }
    let n = c.order();
    let mut perm = vec![0; n];
    for (i, &s) in c.cells()[..n].iter().enumerate() {
        perm[s as usize] = i;
    }
    let cells = c
        .cells()
        .iter()
        .map(|&s| perm[s as usize] as Symbol)
        .collect();
    Ok((Hypercuboid::new(c.shape().clone(), n, cells)?, perm))
}

/// The orbit of a cuboid, sorted by cell sequence.
#[derive(Debug, Clone)]
pub struct Orbit {
    members: Vec<Hypercuboid>,
}

impl Orbit {
    pub fn members(&self) -> &[Hypercuboid] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Lexicographically least member.
    pub fn canonical(&self) -> &Hypercuboid {
        &self.members[0]
    }

    pub fn contains(&self, c: &Hypercuboid) -> bool {
        self.members.binary_search(c).is_ok()
    }
}

/// A generator acting on flat cells: `out[dest[i]] = sym[in[i]]`.
struct Generator {
    dest: Vec<usize>,
    sym: Vec<Symbol>,
}

fn generators(c: &Hypercuboid, paratopy: bool) -> Vec<Generator> {
    let sizes = c.shape().sizes();
    let identity = IsotopyTransform::identity(sizes, c.order());
    let mut transforms = Vec::new();
    for s in 0..c.order().saturating_sub(1) {
        let mut t = identity.clone();
        t.symbol_perm.swap(s, s + 1);
        transforms.push(t);
    }
    for (i, &n) in sizes.iter().enumerate() {
        for a in 0..n - 1 {
            let mut t = identity.clone();
            t.axis_perms[i].swap(a, a + 1);
            transforms.push(t);
        }
    }
    if paratopy {
        for i in 0..sizes.len() - 1 {
            if sizes[i] == sizes[i + 1] {
                let mut t = identity.clone();
                t.coord_perm.swap(i, i + 1);
                transforms.push(t);
            }
        }
    }
    let shape = c.shape();
    transforms
        .into_iter()
        .map(|t| {
            let mut y = vec![0; sizes.len()];
            let dest = Odometer::new(sizes)
                .map(|x| {
                    for (i, &xi) in x.iter().enumerate() {
                        y[t.coord_perm[i]] = t.axis_perms[i][xi];
                    }
                    shape.index_of(&y)
                })
                .collect();
            let sym = t.symbol_perm.iter().map(|&s| s as Symbol).collect();
            Generator { dest, sym }
        })
        .collect()
}

/// Full orbit of `c` under isotopy (or paratopy), by breadth-first closure
/// under a generating set. Fails once more than `cap` members are found.
pub fn orbit_bruteforce(c: &Hypercuboid, paratopy: bool, cap: usize) -> Result<Orbit> {
    let gens = generators(c, paratopy);
    let mut seen: HashSet<Vec<Symbol>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(c.cells().to_vec());
    queue.push_back(c.cells().to_vec());
    while let Some(cells) = queue.pop_front() {
        for g in &gens {
            let mut image = vec![EMPTY; cells.len()];
            for (i, &s) in cells.iter().enumerate() {
                image[g.dest[i]] = if s == EMPTY { EMPTY } else { g.sym[s as usize] };
            }
            if seen.insert(image.clone()) {
                if seen.len() > cap {
                    return Err(Error::Resource {
                        what: format!("orbit has more than {cap} members"),
                        nodes: seen.len() as u64,
                    });
                }
                queue.push_back(image);
            }
        }
    }
    let members: BTreeSet<Vec<Symbol>> = seen.into_iter().collect();
    let members = members
        .into_iter()
        .map(|cells| Hypercuboid::new(c.shape().clone(), c.order(), cells))
        .collect::<Result<Vec<_>>>()?;
    Ok(Orbit { members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_cuboid;
    use crate::shape::CuboidShape;

    fn swap01(c: &Hypercuboid) -> Hypercuboid {
        let mut t = IsotopyTransform::identity(c.shape().sizes(), c.order());
        t.symbol_perm.swap(0, 1);
        apply_transform(c, &t).unwrap()
    }

    #[test]
    fn example_is_semi_reduced() {
        let c = example_cuboid();
        assert!(is_semi_reduced(&c).unwrap());
        let (r, perm) = semi_reduce(&c).unwrap();
        assert_eq!(r, c);
        assert_eq!(perm, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn swapped_symbols_reduce_back() {
        let c = example_cuboid();
        let swapped = swap01(&c);
        assert!(!is_semi_reduced(&swapped).unwrap());
        let (r, perm) = semi_reduce(&swapped).unwrap();
        assert_eq!(r, c);
        assert_eq!(perm, vec![1, 0, 2, 3, 4, 5]);
        assert!(is_semi_reduced(&r).unwrap());
    }

    #[test]
    fn partial_input_is_rejected() {
        let m = crate::fixtures::partial_cube();
        assert!(matches!(is_semi_reduced(&m), Err(Error::Parameter(_))));
        assert!(matches!(semi_reduce(&m), Err(Error::Parameter(_))));
    }

    #[test]
    fn identity_transform() {
        let c = example_cuboid();
        let t = IsotopyTransform::identity(c.shape().sizes(), 6);
        assert_eq!(apply_transform(&c, &t).unwrap(), c);
    }

    #[test]
    fn swapping_equal_axes_keeps_validity() {
        let c = example_cuboid();
        let mut t = IsotopyTransform::identity(c.shape().sizes(), 6);
        t.coord_perm = vec![0, 2, 1];
        let image = apply_transform(&c, &t).unwrap();
        assert_eq!(image.shape(), c.shape());
        assert!(is_valid(&image));
    }

    #[test]
    fn swapping_unequal_axes_fails() {
        let c = example_cuboid();
        let mut t = IsotopyTransform::identity(c.shape().sizes(), 6);
        t.coord_perm = vec![1, 0, 2];
        assert!(matches!(apply_transform(&c, &t), Err(Error::Parameter(_))));
    }

    #[test]
    fn class_one_cube_orbit() {
        let shape = CuboidShape::new(vec![2, 2, 2], 1).unwrap();
        let parity = Hypercuboid::from_fn(shape, |x| (x.iter().sum::<usize>() % 2) as u16).unwrap();
        let orbit = orbit_bruteforce(&parity, false, 100).unwrap();
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&parity));
        assert_eq!(orbit.canonical(), &parity);
    }

    #[test]
    fn related_cuboids_share_a_canonical_form() {
        let c = example_cuboid();
        let mut t = IsotopyTransform::identity(c.shape().sizes(), 6);
        t.symbol_perm = vec![3, 1, 4, 0, 5, 2];
        t.axis_perms[0] = vec![2, 0, 1];
        t.axis_perms[2] = vec![1, 0];
        let image = apply_transform(&c, &t).unwrap();
        let a = orbit_bruteforce(&c, true, 100_000).unwrap();
        let b = orbit_bruteforce(&image, true, 100_000).unwrap();
        assert_eq!(a.canonical(), b.canonical());
        assert!(a.contains(&c) && a.contains(&image));
    }

    #[test]
    fn orbit_cap_is_enforced() {
        let c = example_cuboid();
        assert!(matches!(
            orbit_bruteforce(&c, false, 10),
            Err(Error::Resource { .. })
        ));
    }
}
