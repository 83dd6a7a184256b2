use crate::error::{data, Result};
use crate::shape::CuboidShape;

pub type Symbol = u16;

/// Marks an unfilled cell of a partial hypercuboid.
pub const EMPTY: Symbol = Symbol::MAX;

/// A (possibly partial) filled array over `order` symbols.
///
/// Cells are stored flat with coordinate 1 varying fastest, so the first
/// r-subarray occupies exactly the first `shape.order()` cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypercuboid {
    shape: CuboidShape,
    order: usize,
    cells: Vec<Symbol>,
}

impl Hypercuboid {
    pub fn new(shape: CuboidShape, order: usize, cells: Vec<Symbol>) -> Result<Self> {
        if cells.len() != shape.cell_count() {
            return data(format!(
                "{} cells supplied for a shape with {} cells",
                cells.len(),
                shape.cell_count()
            ));
        }
        if order == 0 || order >= EMPTY as usize {
            return data(format!("order {order} is out of range"));
        }
        if let Some(&s) = cells.iter().find(|&&s| s != EMPTY && s as usize >= order) {
            return data(format!("symbol {s} is not below the order {order}"));
        }
        Ok(Hypercuboid {
            shape,
            order,
            cells,
        })
    }

    /// A full cuboid of order `shape.order()` whose cells come from `f`.
    pub fn from_fn(shape: CuboidShape, mut f: impl FnMut(&[usize]) -> Symbol) -> Result<Self> {
        let order = shape.order();
        let cells = crate::radix::Odometer::new(shape.sizes())
            .map(|x| f(&x))
            .collect();
        Hypercuboid::new(shape, order, cells)
    }

    pub fn shape(&self) -> &CuboidShape {
        &self.shape
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[Symbol] {
        &self.cells
    }

    pub fn into_cells(self) -> Vec<Symbol> {
        self.cells
    }

    pub fn get(&self, coords: &[usize]) -> Symbol {
        self.cells[self.shape.index_of(coords)]
    }

    pub fn is_full(&self) -> bool {
        !self.cells.contains(&EMPTY)
    }

    /// Full and of order equal to the product of the `r` largest sizes.
    pub fn is_standard(&self) -> bool {
        self.is_full() && self.order == self.shape.order()
    }

    /// Layer `k` along the last coordinate, as a flat slice.
    pub fn last_layer(&self, k: usize) -> &[Symbol] {
        let len = self.shape.stride(self.shape.dim() - 1);
        &self.cells[k * len..(k + 1) * len]
    }
}
