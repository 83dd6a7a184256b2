//! Exhaustive enumeration and counting of semi-reduced hypercuboids.
//!
//! Fixing the first r-subarray to `0, 1, .., n-1` picks exactly one
//! member from each class of symbol relabelings, so the total number of
//! hypercuboids of a shape is `h * n!` with `h` the semi-reduced count.
//! In the flat cell layout the first r-subarray is the first `n` cells,
//! so the symmetry break is a fixed prefix of the search.
//!
//! Parallel searches expand the tree breadth-first to a split depth and
//! hand the resulting sub-problems to a rayon pool. Sub-problems share no
//! mutable search state, so counts and node totals do not depend on the
//! worker count.

mod engine;
pub mod table2;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bounds::existence_bound;
use crate::cuboid::{Hypercuboid, EMPTY};
use crate::error::{Error, Result};
use crate::shape::CuboidShape;
use crate::validate::validate;
use engine::{Halt, Model, Shared, Sink, State, Worker};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Skip materializing solutions (the sink, if any, is not called).
    pub count_only: bool,
    /// Stop after this many solutions.
    pub limit: Option<u64>,
    /// Depth at which the tree is cut into independent work units. When
    /// unset, a single worker does not split and several workers split
    /// until there are at least four units per worker.
    pub split_depth: Option<usize>,
    pub workers: usize,
    /// Upper limit on search nodes; exceeding it is an error.
    pub node_budget: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            count_only: false,
            limit: None,
            split_depth: None,
            workers: 1,
            node_budget: None,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_limit(mut self, limit: u64) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }

    pub fn with_split_depth(mut self, depth: usize) -> Self {
        self.split_depth = Some(depth);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    /// Number of semi-reduced hypercuboids `h`.
    pub semi_reduced: BigUint,
    /// Relabeling factor `c = n!`.
    pub total_factor: BigUint,
    /// `h * c`.
    pub total: BigUint,
    pub nodes_visited: u64,
    pub elapsed: Duration,
    /// The existence bound ruled the shape out without searching.
    pub short_circuited: bool,
    /// The search stopped at the solution limit.
    pub truncated: bool,
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

struct Outcome {
    found: u64,
    first: Option<Hypercuboid>,
    nodes: u64,
    truncated: bool,
}

fn search(
    model: &Model,
    initial: State,
    free: &[u32],
    opts: &SearchOptions,
    sink: Option<Sink<'_>>,
) -> Result<Outcome> {
    if opts.workers == 0 {
        return Err(Error::Parameter("at least one worker is required".into()));
    }
    let shared = Shared::new(opts.node_budget, opts.limit, sink);
    if opts.limit == Some(0) {
        return Ok(Outcome {
            found: 0,
            first: None,
            nodes: 0,
            truncated: true,
        });
    }
    search_shared(model, initial, free, opts, &shared)
}

fn search_shared(
    model: &Model,
    initial: State,
    free: &[u32],
    opts: &SearchOptions,
    shared: &Shared<'_>,
) -> Result<Outcome> {
    // expansion never emits solutions, so only failures can halt it
    let halted = |h: Halt| -> Result<Outcome> {
        match h {
            Halt::Fail(e) => Err(e),
            Halt::Limit => Err(Error::Resource {
                what: "search stopped during work splitting".into(),
                nodes: shared.nodes.load(std::sync::atomic::Ordering::Relaxed),
            }),
        }
    };

    let mut frontier = vec![initial];
    let mut depth = 0;
    let target = match opts.split_depth {
        Some(k) => k.min(free.len()),
        None if opts.workers == 1 => 0,
        None => free.len(),
    };
    let wanted_units = if opts.split_depth.is_some() {
        usize::MAX
    } else {
        4 * opts.workers
    };
    let mut master = Worker::new(model, free, shared);
    while depth < target && frontier.len() < wanted_units && !frontier.is_empty() {
        let mut next = Vec::new();
        for state in &frontier {
            match master.expand(state, depth) {
                Ok(children) => next.extend(children),
                Err(h) => return halted(h),
            }
        }
        frontier = next;
        depth += 1;
    }
    if let Err(h) = master.flush() {
        return halted(h);
    }

    let run_unit = |state: &State| {
        let mut worker = Worker::new(model, free, shared);
        let mut state = state.clone();
        let mut result = worker.run(&mut state, depth);
        if result.is_ok() {
            result = worker.flush();
        } else {
            let _ = worker.flush();
        }
        (worker.found, worker.first, result)
    };

    let results: Vec<_> = if opts.workers == 1 {
        let mut out = Vec::with_capacity(frontier.len());
        for unit in &frontier {
            let r = run_unit(unit);
            let stop = r.2.is_err();
            out.push(r);
            if stop {
                break;
            }
        }
        out
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::Parameter(format!("cannot start worker pool: {e}")))?;
        pool.install(|| frontier.par_iter().map(run_unit).collect())
    };

    let mut outcome = Outcome {
        found: 0,
        first: None,
        nodes: 0,
        truncated: false,
    };
    for (found, first, result) in results {
        outcome.found += found;
        if outcome.first.is_none() {
            outcome.first = first;
        }
        match result {
            Ok(()) => {}
            Err(Halt::Limit) => outcome.truncated = true,
            Err(Halt::Fail(e)) => return Err(e),
        }
    }
    outcome.nodes = shared.nodes.load(std::sync::atomic::Ordering::Relaxed);
    Ok(outcome)
}

fn semi_reduced_search(
    shape: &CuboidShape,
    opts: &SearchOptions,
    sink: Option<Sink<'_>>,
    paranoid: bool,
) -> Result<CountResult> {
    let start = Instant::now();
    let n = shape.order();
    let total_factor = factorial(n);
    if !existence_bound(shape).satisfied {
        return Ok(CountResult {
            semi_reduced: BigUint::default(),
            total_factor,
            total: BigUint::default(),
            nodes_visited: 0,
            elapsed: start.elapsed(),
            short_circuited: true,
            truncated: false,
        });
    }
    let model = Model::new(shape, n)?;
    let mut cells = vec![u8::MAX; shape.cell_count()];
    for (i, c) in cells.iter_mut().take(n).enumerate() {
        *c = i as u8;
    }
    let initial = State::new(&model, cells).expect("the first subarray is duplicate free");
    let free: Vec<u32> = (n as u32..shape.cell_count() as u32).collect();
    let outcome = if paranoid {
        let mut shared = Shared::new(opts.node_budget, opts.limit, sink);
        shared.paranoid = true;
        search_shared(&model, initial, &free, opts, &shared)?
    } else {
        search(&model, initial, &free, opts, sink)?
    };
    let semi_reduced = BigUint::from(outcome.found);
    Ok(CountResult {
        total: &semi_reduced * &total_factor,
        semi_reduced,
        total_factor,
        nodes_visited: outcome.nodes,
        elapsed: start.elapsed(),
        short_circuited: false,
        truncated: outcome.truncated,
    })
}

/// Number of semi-reduced hypercuboids of `shape`.
///
/// Shapes failing the existence bound return 0 without searching.
pub fn count_semi_reduced(shape: &CuboidShape, opts: &SearchOptions) -> Result<CountResult> {
    semi_reduced_search(shape, opts, None, false)
}

/// Like [`count_semi_reduced`], handing every solution to `sink`.
///
/// With one worker the solutions arrive in lexicographic order of their
/// cells; with more workers the order is unspecified and `sink` may be
/// called from several threads. An `Err` from the sink aborts the search.
pub fn enumerate_semi_reduced<F>(
    shape: &CuboidShape,
    opts: &SearchOptions,
    sink: F,
) -> Result<CountResult>
where
    F: Fn(&Hypercuboid) -> std::result::Result<(), String> + Sync,
{
    if opts.count_only {
        return count_semi_reduced(shape, opts);
    }
    semi_reduced_search(shape, opts, Some(&sink), false)
}

/// Total number of hypercuboids of `shape`: `h * n!`.
pub fn total_count(shape: &CuboidShape, opts: &SearchOptions) -> Result<CountResult> {
    count_semi_reduced(shape, opts)
}

/// All semi-reduced hypercuboids of `shape`, in lexicographic order.
pub fn collect_semi_reduced(shape: &CuboidShape, opts: &SearchOptions) -> Result<Vec<Hypercuboid>> {
    let found = std::sync::Mutex::new(Vec::new());
    let opts = SearchOptions {
        count_only: false,
        ..opts.clone()
    };
    enumerate_semi_reduced(shape, &opts, |c| {
        found.lock().unwrap().push(c.clone());
        Ok(())
    })?;
    let mut found = found.into_inner().unwrap();
    found.sort();
    Ok(found)
}

/// Fills the empty cells of a valid partial hypercuboid.
///
/// Returns `Ok(None)` when no completion exists. The result keeps the
/// order of `p`; when that order is the product of the `r` largest sizes
/// the completion is held to the exactly-once rule as well.
pub fn complete_partial(p: &Hypercuboid, opts: &SearchOptions) -> Result<Option<Hypercuboid>> {
    if let Some(v) = validate(p).first_violation {
        return Err(Error::Data(format!(
            "input is not a valid partial hypercuboid: {:?}",
            v.kind
        )));
    }
    if p.is_full() {
        return Ok(Some(p.clone()));
    }
    let model = Model::new(p.shape(), p.order())?;
    let initial = State::from_symbols(&model, p.cells()).expect("validated input");
    let free: Vec<u32> = p
        .cells()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == EMPTY)
        .map(|(i, _)| i as u32)
        .collect();
    let opts = SearchOptions {
        limit: Some(1),
        ..opts.clone()
    };
    let outcome = search(&model, initial, &free, &opts, None)?;
    Ok(outcome.first)
}
