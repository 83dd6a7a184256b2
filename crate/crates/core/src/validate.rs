use crate::cuboid::{Hypercuboid, Symbol, EMPTY};
use crate::subarray::{iter_subarrays, SubarraySelector};

/// What went wrong inside a single r-subarray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    /// `symbol` sits in both cells (flat indices).
    Duplicate {
        symbol: Symbol,
        first: usize,
        second: usize,
    },
    /// A subarray with exactly `order` cells lacks `symbol`.
    Missing { symbol: Symbol },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub selector: SubarraySelector,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub first_violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks the class-r Latin property.
///
/// Every r-subarray may hold each symbol at most once. A full cuboid whose
/// order is the product of the `r` largest sizes must in addition show
/// every symbol in every r-subarray that has exactly `order` cells.
/// Partial cuboids are only held to the first rule.
pub fn validate(c: &Hypercuboid) -> ValidationReport {
    let shape = c.shape();
    let order = c.order();
    let exact = c.is_standard();
    let cells = c.cells();

    // stamp[s] = id of the last subarray in which s was seen, where[s] = cell
    let mut stamp = vec![usize::MAX; order];
    let mut seen_at = vec![0usize; order];

    let selectors = iter_subarrays(shape, shape.class()).expect("class is within 1..d");
    for (id, selector) in selectors.enumerate() {
        let members = selector.cells(shape);
        let mut distinct = 0;
        for &cell in &members {
            let s = cells[cell];
            if s == EMPTY {
                continue;
            }
            let si = s as usize;
            if stamp[si] == id {
                return ValidationReport {
                    first_violation: Some(Violation {
                        selector,
                        kind: ViolationKind::Duplicate {
                            symbol: s,
                            first: seen_at[si],
                            second: cell,
                        },
                    }),
                };
            }
            stamp[si] = id;
            seen_at[si] = cell;
            distinct += 1;
        }
        if exact && members.len() == order && distinct != order {
            // unreachable for a full subarray without duplicates
            debug_assert!(false, "pigeonhole violated");
            let symbol = (0..order).find(|&s| stamp[s] != id).unwrap_or(0) as Symbol;
            return ValidationReport {
                first_violation: Some(Violation {
                    selector,
                    kind: ViolationKind::Missing { symbol },
                }),
            };
        }
    }
    ValidationReport {
        first_violation: None,
    }
}

pub fn is_valid(c: &Hypercuboid) -> bool {
    validate(c).is_valid()
}
