//! Degree-preserving edge swaps: transforming any realization into any
//! other, and interpolating intermediate matching numbers.
//!
//! A bipartite swap replaces edges `v_i w_j` and `v_i' w_j'` by `v_i w_j'`
//! and `v_i' w_j` (which must be non-edges). Swaps preserve every vertex
//! degree and change the matching number by at most one, so walking a swap
//! path between realizations with extremal matching numbers passes through
//! a realization for every value in between.
//!
//! Paths are found by canonicalization: every realization can be driven by
//! swaps to the greedy realization of its degree sequence (row by row,
//! matching each row against the columns of largest residual degree), and a
//! path between two realizations is the first walk followed by the second
//! one reversed.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cuts::{matching_interval_bipartite, BipartiteIntervalResult};
use crate::flow::{realize_bipartite_with_nu, BipRealization};
use crate::graph::{
    havel_hakimi_row, maximum_matching, BipartiteDegreeSequence, LabeledBipartiteGraph,
};

/// One bipartite swap: removes `v_i w_j` and `v_i' w_j'`, adds `v_i w_j'`
/// and `v_i' w_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwapStep {
    pub i: usize,
    pub i_prime: usize,
    pub j: usize,
    pub j_prime: usize,
}

impl SwapStep {
    /// The swap that undoes this one.
    pub fn inverse(&self) -> SwapStep {
        SwapStep {
            i: self.i,
            i_prime: self.i_prime,
            j: self.j_prime,
            j_prime: self.j,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SwapError {
    /// The step's edge / non-edge pattern does not hold in the host graph.
    InvalidSwap { step: SwapStep },
    /// The two graphs do not realize the same degree sequence on the same
    /// labeled vertex sets.
    MismatchedSequences,
}

impl fmt::Display for SwapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwapError::InvalidSwap { step } => write!(
                f,
                "swap (v{} w{}, v{} w{}) -> (v{} w{}, v{} w{}) does not apply",
                step.i,
                step.j,
                step.i_prime,
                step.j_prime,
                step.i,
                step.j_prime,
                step.i_prime,
                step.j
            ),
            SwapError::MismatchedSequences => {
                write!(
                    f,
                    "graphs do not realize the same bipartite degree sequence"
                )
            }
        }
    }
}

impl core::error::Error for SwapError {}

/// Applies one swap, validating the edge / non-edge pattern.
pub fn apply_swap(
    g: &LabeledBipartiteGraph,
    step: &SwapStep,
) -> Result<LabeledBipartiteGraph, SwapError> {
    let pattern_holds = g.contains_edge(step.i, step.j)
        && g.contains_edge(step.i_prime, step.j_prime)
        && !g.contains_edge(step.i, step.j_prime)
        && !g.contains_edge(step.i_prime, step.j);
    if !pattern_holds {
        return Err(SwapError::InvalidSwap { step: *step });
    }
    let edges = g
        .edges()
        .filter(|&e| e != (step.i, step.j) && e != (step.i_prime, step.j_prime))
        .chain([(step.i, step.j_prime), (step.i_prime, step.j)]);
    Ok(LabeledBipartiteGraph::new(g.n(), g.m(), edges).expect("swap preserves validity"))
}

/// Drives `g` to the greedy realization of its degree sequence, recording
/// the swaps. Row `i`'s target is the set of columns of largest residual
/// degree among rows `i..`; a swap moving a target column into row `i`
/// always exists because the target column has at least as much residual
/// degree as any column it replaces.
fn canonicalize(g: &LabeledBipartiteGraph) -> (Vec<SwapStep>, LabeledBipartiteGraph) {
    let (n, m) = (g.n(), g.m());
    let mut rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
    for (i, j) in g.edges() {
        rows[i].insert(j);
    }
    let mut steps = Vec::new();
    for i in 1..=n {
        let mut residual = vec![0usize; m];
        for row in rows.iter().skip(i) {
            for &j in row {
                residual[j - 1] += 1;
            }
        }
        let target: BTreeSet<usize> = havel_hakimi_row(&residual, rows[i].len())
            .expect("rows of an existing realization always fit")
            .into_iter()
            .collect();
        while rows[i] != target {
            let &incoming = target.difference(&rows[i]).next().expect("sets differ");
            let &outgoing = rows[i].difference(&target).next().expect("sets differ");
            let partner = (i + 1..=n)
                .find(|&r| rows[r].contains(&incoming) && !rows[r].contains(&outgoing))
                .expect("the incoming column has more residual rows than the outgoing one");
            let step = SwapStep {
                i,
                i_prime: partner,
                j: outgoing,
                j_prime: incoming,
            };
            rows[i].remove(&outgoing);
            rows[i].insert(incoming);
            rows[partner].remove(&incoming);
            rows[partner].insert(outgoing);
            steps.push(step);
        }
    }
    let canonical = LabeledBipartiteGraph::new(
        n,
        m,
        rows.iter()
            .enumerate()
            .flat_map(|(i, cols)| cols.iter().map(move |&j| (i, j))),
    )
    .expect("canonicalization preserves validity");
    (steps, canonical)
}

/// A sequence of swaps transforming `g1` into `g2` exactly (empty when they
/// already coincide).
pub fn swap_path(
    g1: &LabeledBipartiteGraph,
    g2: &LabeledBipartiteGraph,
) -> Result<Vec<SwapStep>, SwapError> {
    if g1.n() != g2.n() || g1.m() != g2.m() || g1.degree_vectors() != g2.degree_vectors() {
        return Err(SwapError::MismatchedSequences);
    }
    let (forward, canon1) = canonicalize(g1);
    let (backward, canon2) = canonicalize(g2);
    debug_assert_eq!(
        canon1, canon2,
        "equal degree sequences share a canonical form"
    );
    let mut path = forward;
    path.extend(backward.into_iter().rev().map(|s| s.inverse()));
    Ok(path)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InterpolateError {
    /// The degree sequence has no realization at all.
    NotRealizable,
    /// The requested matching number lies outside the achievable interval.
    OutOfRange {
        nu: usize,
        nu_min: usize,
        nu_max: usize,
    },
}

impl fmt::Display for InterpolateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InterpolateError::NotRealizable => {
                write!(f, "the degree sequence has no realization")
            }
            InterpolateError::OutOfRange { nu, nu_min, nu_max } => {
                write!(
                    f,
                    "nu = {nu} outside the achievable interval [{nu_min}, {nu_max}]"
                )
            }
        }
    }
}

impl core::error::Error for InterpolateError {}

/// The walk [`interpolate_nu`] takes: extremal realizations from the flow
/// route, the swap path between them, and the matching number after every
/// step.
#[derive(Debug, Clone)]
pub struct InterpolationWalk {
    pub start: LabeledBipartiteGraph,
    pub start_nu: usize,
    /// each step paired with the matching number after applying it
    pub steps: Vec<(SwapStep, usize)>,
}

impl InterpolationWalk {
    /// First graph along the walk with the requested matching number.
    pub fn first_with_nu(&self, nu: usize) -> Option<LabeledBipartiteGraph> {
        if self.start_nu == nu {
            return Some(self.start.clone());
        }
        let mut current = self.start.clone();
        for &(step, nu_after) in &self.steps {
            current = apply_swap(&current, &step).expect("recorded steps replay");
            if nu_after == nu {
                return Some(current);
            }
        }
        None
    }
}

/// Builds the full swap walk from a minimum-matching realization to a
/// maximum-matching one, tracking the matching number after every step.
pub fn interpolation_walk(
    dd: &BipartiteDegreeSequence,
) -> Result<InterpolationWalk, InterpolateError> {
    let (nu_min, nu_max) = match matching_interval_bipartite(dd) {
        BipartiteIntervalResult::Empty => return Err(InterpolateError::NotRealizable),
        BipartiteIntervalResult::Range { nu_min, nu_max } => (nu_min, nu_max),
    };
    let realize = |nu: usize| -> LabeledBipartiteGraph {
        match realize_bipartite_with_nu(dd, nu) {
            Ok(BipRealization::Realized { graph, .. }) => graph,
            other => unreachable!("interval endpoints are realizable, got {other:?}"),
        }
    };
    let start = realize(nu_min);
    let finish = realize(nu_max);
    let path = swap_path(&start, &finish).expect("both realize the same sequence");
    let mut steps = Vec::with_capacity(path.len());
    let mut current = start.clone();
    for step in path {
        current = apply_swap(&current, &step).expect("path steps replay");
        steps.push((step, maximum_matching(&current).len()));
    }
    debug_assert_eq!(current, finish);
    Ok(InterpolationWalk {
        start,
        start_nu: nu_min,
        steps,
    })
}

/// A realization with matching number exactly `nu`, found by replaying the
/// swap walk between the extremal realizations and stopping at the first
/// graph with the requested value. Consecutive graphs differ by one swap,
/// so the matching number moves in steps of at most one and every value in
/// the interval is hit.
pub fn interpolate_nu(
    dd: &BipartiteDegreeSequence,
    nu: usize,
) -> Result<LabeledBipartiteGraph, InterpolateError> {
    let walk = interpolation_walk(dd)?;
    let top = walk.steps.last().map_or(walk.start_nu, |&(_, v)| v);
    if nu < walk.start_nu || nu > top {
        return Err(InterpolateError::OutOfRange {
            nu,
            nu_min: walk.start_nu,
            nu_max: top,
        });
    }
    Ok(walk
        .first_with_nu(nu)
        .expect("matching numbers move by at most one per swap"))
}
