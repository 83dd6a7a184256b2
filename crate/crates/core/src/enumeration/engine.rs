//! Bitmask backtracking over the cells of a hypercuboid.
//!
//! Cells are filled in increasing flat index. Each r-subarray keeps a `u64`
//! mask of the symbols it already holds; a cell's candidates are the
//! symbols missing from all of its subarrays. After every placement the
//! engine forward-checks the empty cells sharing a subarray with the new
//! one, and for subarrays with exactly `order` cells it also checks that
//! every missing symbol still has somewhere to go.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::cuboid::{Hypercuboid, Symbol, EMPTY};
use crate::error::{param, Error, Result};
use crate::shape::CuboidShape;
use crate::subarray::iter_subarrays;

const FREE: u8 = u8::MAX;
const FLUSH_EVERY: u64 = 1 << 12;

pub(crate) type Sink<'a> = &'a (dyn Fn(&Hypercuboid) -> std::result::Result<(), String> + Sync);

pub(crate) struct Model {
    shape: CuboidShape,
    order: usize,
    full: u64,
    per_cell: usize,
    cell_subs: Vec<u32>,
    sub_start: Vec<u32>,
    sub_cells: Vec<u32>,
    exact: Vec<bool>,
}

impl Model {
    pub(crate) fn new(shape: &CuboidShape, order: usize) -> Result<Self> {
        if order > 64 {
            return param(format!("search supports at most 64 symbols, got {order}"));
        }
        let cells = shape.cell_count();
        if cells > u32::MAX as usize {
            return param("too many cells");
        }
        let exact_order = order == shape.order();
        let mut sub_start = vec![0u32];
        let mut sub_cells = Vec::new();
        let mut exact = Vec::new();
        let mut membership: Vec<Vec<u32>> = vec![Vec::new(); cells];
        for (id, sel) in iter_subarrays(shape, shape.class())?.enumerate() {
            let members = sel.cells(shape);
            exact.push(exact_order && members.len() == order);
            for &c in &members {
                membership[c].push(id as u32);
                sub_cells.push(c as u32);
            }
            sub_start.push(sub_cells.len() as u32);
        }
        let per_cell = membership[0].len();
        debug_assert!(membership.iter().all(|m| m.len() == per_cell));
        Ok(Model {
            shape: shape.clone(),
            order,
            full: if order == 64 {
                u64::MAX
            } else {
                (1u64 << order) - 1
            },
            per_cell,
            cell_subs: membership.into_iter().flatten().collect(),
            sub_start,
            sub_cells,
            exact,
        })
    }

    fn subs_of(&self, cell: usize) -> &[u32] {
        &self.cell_subs[cell * self.per_cell..(cell + 1) * self.per_cell]
    }

    fn members(&self, sub: u32) -> &[u32] {
        let s = sub as usize;
        &self.sub_cells[self.sub_start[s] as usize..self.sub_start[s + 1] as usize]
    }

    fn subarray_count(&self) -> usize {
        self.exact.len()
    }
}

/// A partial assignment. Every placed symbol is recorded in the masks of
/// all subarrays through its cell.
#[derive(Clone)]
pub(crate) struct State {
    cells: Vec<u8>,
    masks: Vec<u64>,
}

impl State {
    /// Builds masks for `cells`; `None` if a subarray repeats a symbol.
    pub(crate) fn new(model: &Model, cells: Vec<u8>) -> Option<Self> {
        let mut masks = vec![0u64; model.subarray_count()];
        for (c, &s) in cells.iter().enumerate() {
            if s == FREE {
                continue;
            }
            let bit = 1u64 << s;
            for &sub in model.subs_of(c) {
                if masks[sub as usize] & bit != 0 {
                    return None;
                }
                masks[sub as usize] |= bit;
            }
        }
        Some(State { cells, masks })
    }

    pub(crate) fn from_symbols(model: &Model, cells: &[Symbol]) -> Option<Self> {
        let cells = cells
            .iter()
            .map(|&s| if s == EMPTY { FREE } else { s as u8 })
            .collect();
        State::new(model, cells)
    }

    fn candidates(&self, model: &Model, cell: usize) -> u64 {
        let used = model
            .subs_of(cell)
            .iter()
            .fold(0u64, |acc, &sub| acc | self.masks[sub as usize]);
        model.full & !used
    }

    fn place(&mut self, model: &Model, cell: usize, s: u8) {
        self.cells[cell] = s;
        let bit = 1u64 << s;
        for &sub in model.subs_of(cell) {
            self.masks[sub as usize] |= bit;
        }
    }

    fn unplace(&mut self, model: &Model, cell: usize, s: u8) {
        self.cells[cell] = FREE;
        let bit = !(1u64 << s);
        for &sub in model.subs_of(cell) {
            self.masks[sub as usize] &= bit;
        }
    }

    /// Forward check around a freshly filled `cell`.
    fn consistent_after(&self, model: &Model, cell: usize) -> bool {
        for &sub in model.subs_of(cell) {
            let mut reachable = 0u64;
            for &other in model.members(sub) {
                let other = other as usize;
                if self.cells[other] != FREE {
                    continue;
                }
                let cand = self.candidates(model, other);
                if cand == 0 {
                    return false;
                }
                reachable |= cand;
            }
            if model.exact[sub as usize] {
                let missing = model.full & !self.masks[sub as usize];
                if missing & !reachable != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn to_cuboid(&self, model: &Model) -> Hypercuboid {
        let cells = self
            .cells
            .iter()
            .map(|&s| if s == FREE { EMPTY } else { s as Symbol })
            .collect();
        Hypercuboid::new(model.shape.clone(), model.order, cells)
            .expect("engine keeps symbols in range")
    }
}

/// Limits and counters shared by all workers of one search.
pub(crate) struct Shared<'a> {
    pub budget: Option<u64>,
    pub limit: Option<u64>,
    pub nodes: AtomicU64,
    pub solutions: AtomicU64,
    pub stop: AtomicBool,
    pub sink: Option<Sink<'a>>,
    pub paranoid: bool,
}

impl<'a> Shared<'a> {
    pub(crate) fn new(budget: Option<u64>, limit: Option<u64>, sink: Option<Sink<'a>>) -> Self {
        Shared {
            budget,
            limit,
            nodes: AtomicU64::new(0),
            solutions: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            sink,
            paranoid: false,
        }
    }

    fn exhausted(&self) -> Error {
        Error::Resource {
            what: format!("node budget of {} exhausted", self.budget.unwrap_or(0)),
            nodes: self.nodes.load(Ordering::Relaxed),
        }
    }
}

/// Why a search stopped early.
pub(crate) enum Halt {
    Limit,
    Fail(Error),
}

/// Per-worker search over the free cells `free[depth..]`.
pub(crate) struct Worker<'m, 's, 'a> {
    model: &'m Model,
    free: &'m [u32],
    shared: &'s Shared<'a>,
    local_nodes: u64,
    pub found: u64,
    pub first: Option<Hypercuboid>,
}

impl<'m, 's, 'a> Worker<'m, 's, 'a> {
    pub(crate) fn new(model: &'m Model, free: &'m [u32], shared: &'s Shared<'a>) -> Self {
        Worker {
            model,
            free,
            shared,
            local_nodes: 0,
            found: 0,
            first: None,
        }
    }

    pub(crate) fn flush(&mut self) -> std::result::Result<(), Halt> {
        let total = self
            .shared
            .nodes
            .fetch_add(self.local_nodes, Ordering::Relaxed)
            + self.local_nodes;
        self.local_nodes = 0;
        if self.shared.stop.load(Ordering::Relaxed) {
            return Err(Halt::Limit);
        }
        if matches!(self.shared.budget, Some(b) if total > b) {
            self.shared.stop.store(true, Ordering::Relaxed);
            return Err(Halt::Fail(self.shared.exhausted()));
        }
        Ok(())
    }

    fn tick(&mut self) -> std::result::Result<(), Halt> {
        self.local_nodes += 1;
        if self.local_nodes >= FLUSH_EVERY {
            self.flush()?;
        }
        Ok(())
    }

    fn solution(&mut self, state: &State) -> std::result::Result<(), Halt> {
        let mut last = false;
        if let Some(limit) = self.shared.limit {
            let n = self.shared.solutions.fetch_add(1, Ordering::Relaxed) + 1;
            if n > limit {
                return Err(Halt::Limit);
            }
            last = n == limit;
        }
        self.found += 1;
        let wants_cuboid =
            self.shared.sink.is_some() || (self.first.is_none() && self.shared.limit.is_some());
        if wants_cuboid {
            let c = state.to_cuboid(self.model);
            debug_assert!(crate::validate::is_valid(&c));
            if let Some(sink) = self.shared.sink {
                if let Err(msg) = sink(&c) {
                    self.shared.stop.store(true, Ordering::Relaxed);
                    return Err(Halt::Fail(Error::SinkAborted(msg)));
                }
            }
            if self.first.is_none() {
                self.first = Some(c);
            }
        }
        if last {
            self.shared.stop.store(true, Ordering::Relaxed);
            return Err(Halt::Limit);
        }
        Ok(())
    }

    pub(crate) fn run(&mut self, state: &mut State, depth: usize) -> std::result::Result<(), Halt> {
        if depth == self.free.len() {
            return self.solution(state);
        }
        let model = self.model;
        let cell = self.free[depth] as usize;
        let mut cand = state.candidates(model, cell);
        while cand != 0 {
            let s = cand.trailing_zeros() as u8;
            cand &= cand - 1;
            self.tick()?;
            state.place(model, cell, s);
            if self.shared.paranoid {
                assert!(crate::validate::is_valid(&state.to_cuboid(model)));
            }
            if state.consistent_after(model, cell) {
                let r = self.run(state, depth + 1);
                if r.is_err() {
                    state.unplace(model, cell, s);
                    return r;
                }
            }
            state.unplace(model, cell, s);
        }
        Ok(())
    }

    /// Children of `state` at `depth`, in increasing symbol order.
    pub(crate) fn expand(
        &mut self,
        state: &State,
        depth: usize,
    ) -> std::result::Result<Vec<State>, Halt> {
        let model = self.model;
        let cell = self.free[depth] as usize;
        let mut cand = state.candidates(model, cell);
        let mut out = Vec::new();
        let mut work = state.clone();
        while cand != 0 {
            let s = cand.trailing_zeros() as u8;
            cand &= cand - 1;
            self.tick()?;
            work.place(model, cell, s);
            if work.consistent_after(model, cell) {
                out.push(work.clone());
            }
            work.unplace(model, cell, s);
        }
        Ok(out)
    }
}
