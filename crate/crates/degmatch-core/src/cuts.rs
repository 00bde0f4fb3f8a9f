//! Gale-Ryser-style certificates: the classical realizability check, clean
//! cuts and their closed-form capacities, the inequality system that decides
//! a matching number without running flows, and bipartite matching-number
//! intervals.
//!
//! An s-t cut of `N(d_A, d_B, nu, k)` is generated by a node set
//! `{s} ∪ S_1 ∪ S_2 ∪ T_1 ∪ T_2` with `S_1 ⊆ {v_1..v_k}`,
//! `S_2 ⊆ {v_{k+1}..v_n}` and the `T`s on the B side. A cut is *clean* when
//! each `S` part prefers larger degrees (larger index on ties). Some minimum
//! cut is always clean, and a clean `S` part is determined by its
//! cardinality alone, so scanning the pairs `(p, q) = (|S_1|, |S_2|)` visits
//! a minimum cut. With the sink side optimized pointwise, the capacity of
//! the cheapest cut with these source cardinalities is
//!
//! ```text
//! sum over v_i outside S_1 ∪ S_2 of c((s, v_i))
//!   + sum over j of min{ c((w_j, t)), |in-neighbors of w_j inside S_1 ∪ S_2| }
//! ```
//!
//! Requiring every such capacity to reach `sum(a) - nu` for some `k` is
//! exactly max-flow feasibility, giving `(k+1)(n+1-k)` inequalities per `k`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::flow::Side;
use crate::graph::{havel_hakimi_realization, maximum_matching, BipartiteDegreeSequence};

/// Cardinalities determining a clean cut: `p = |S_1|` of `{v_1..v_k}` and
/// `q = |S_2|` of `{v_{k+1}..v_n}`; members are selected by degree
/// (descending), larger index first on ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CleanCutSpec {
    pub k: usize,
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutsError {
    SpecOutOfRange {
        spec: CleanCutSpec,
        nu: usize,
        n: usize,
        m: usize,
    },
    /// A matched position has degree 0, so a boundary capacity would be
    /// negative; such parameters correspond to no realization.
    ZeroDegreeMatched { side: Side, index: usize },
}

impl fmt::Display for CutsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutsError::SpecOutOfRange { spec, nu, n, m } => write!(
                f,
                "cut spec (k={}, p={}, q={}) out of range for nu = {nu}, sides {n} and {m}",
                spec.k, spec.p, spec.q
            ),
            CutsError::ZeroDegreeMatched { side, index } => write!(
                f,
                "degree 0 at matched position {index} on side {side} gives a negative capacity"
            ),
        }
    }
}

impl core::error::Error for CutsError {}

/// The Gale-Ryser realizability condition: equal degree sums and
/// `a_1 + ... + a_k <= sum over j of min(b_j, k)` for every `k` in `[n]`.
pub fn gale_ryser_check(dd: &BipartiteDegreeSequence) -> bool {
    if !dd.sums_match() {
        return false;
    }
    let mut prefix = 0u64;
    for k in 1..=dd.n() {
        prefix += dd.a.degree(k) as u64;
        let rhs: u64 = dd.b.values().iter().map(|&b| b.min(k) as u64).sum();
        if prefix > rhs {
            return false;
        }
    }
    true
}

/// Members of an index range selected by (degree descending, index
/// descending): the order clean cuts fill their source parts in.
fn selection_order(dd: &BipartiteDegreeSequence, lo: usize, hi: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (lo..=hi).collect();
    order.sort_by(|&x, &y| dd.a.degree(y).cmp(&dd.a.degree(x)).then(y.cmp(&x)));
    order
}

struct CutEvaluator<'a> {
    dd: &'a BipartiteDegreeSequence,
    nu: usize,
    k: usize,
    /// position of each A-index in its selection order (s1 for `1..=k`,
    /// s2 for `k+1..=n`)
    rank: Vec<usize>,
    /// source capacities ordered by the selection orders, prefix-summed
    s1_prefix: Vec<u64>,
    s2_prefix: Vec<u64>,
    source_total: u64,
}

impl<'a> CutEvaluator<'a> {
    fn new(dd: &'a BipartiteDegreeSequence, nu: usize, k: usize) -> Self {
        let n = dd.n();
        let source_cap = |i: usize| -> u64 { dd.a.degree(i) as u64 - (i <= nu) as u64 };
        let mut rank = vec![0usize; n + 1];
        let order1 = selection_order(dd, 1, k);
        let order2 = selection_order(dd, k + 1, n);
        let mut s1_prefix = vec![0u64; order1.len() + 1];
        for (pos, &i) in order1.iter().enumerate() {
            rank[i] = pos;
            s1_prefix[pos + 1] = s1_prefix[pos] + source_cap(i);
        }
        let mut s2_prefix = vec![0u64; order2.len() + 1];
        for (pos, &i) in order2.iter().enumerate() {
            rank[i] = pos;
            s2_prefix[pos + 1] = s2_prefix[pos] + source_cap(i);
        }
        let source_total = (1..=n).map(source_cap).sum();
        CutEvaluator {
            dd,
            nu,
            k,
            rank,
            s1_prefix,
            s2_prefix,
            source_total,
        }
    }

    fn in_s1(&self, i: usize, p: usize) -> bool {
        i >= 1 && i <= self.k && self.rank[i] < p
    }

    fn in_s(&self, i: usize, p: usize, q: usize) -> bool {
        if i < 1 || i > self.dd.n() {
            return false;
        }
        if i <= self.k {
            self.rank[i] < p
        } else {
            self.rank[i] < q
        }
    }

    /// Cheapest cut capacity for the given source cardinalities: the source
    /// arcs outside the selection plus, per sink arc, the smaller of its
    /// capacity and its in-degree from the selection.
    fn capacity(&self, p: usize, q: usize) -> u64 {
        let (nu, k) = (self.nu, self.k);
        let mut total = self.source_total - self.s1_prefix[p] - self.s2_prefix[q];
        let selected = (p + q) as u64;
        for j in 1..=self.dd.m() {
            let sink_cap = self.dd.b.degree(j) as u64 - (j <= nu) as u64;
            let in_degree = if j <= nu - k {
                // all of A reaches w_j except the matched partner v_{nu+1-j}
                selected - self.in_s(nu + 1 - j, p, q) as u64
            } else {
                // only {v_1..v_k} reaches w_j, minus a matched partner in range
                let diag_in_k = j <= nu && nu + 1 - j <= k;
                p as u64 - (diag_in_k && self.in_s1(nu + 1 - j, p)) as u64
            };
            total += sink_cap.min(in_degree);
        }
        total
    }
}

/// Capacity of the cheapest s-t cut whose source side realizes the given
/// clean spec (sink side optimized pointwise).
pub fn clean_cut_capacity(
    dd: &BipartiteDegreeSequence,
    nu: usize,
    spec: &CleanCutSpec,
) -> Result<u64, CutsError> {
    let (n, m) = (dd.n(), dd.m());
    if nu > n.min(m) || spec.k > nu || spec.p > spec.k || spec.q > n - spec.k {
        return Err(CutsError::SpecOutOfRange {
            spec: *spec,
            nu,
            n,
            m,
        });
    }
    for i in 1..=nu {
        if dd.a.degree(i) == 0 {
            return Err(CutsError::ZeroDegreeMatched {
                side: Side::A,
                index: i,
            });
        }
        if dd.b.degree(i) == 0 {
            return Err(CutsError::ZeroDegreeMatched {
                side: Side::B,
                index: i,
            });
        }
    }
    Ok(CutEvaluator::new(dd, nu, spec.k).capacity(spec.p, spec.q))
}

/// Number of inequalities checked for one `nu`: `(k+1)(n+1-k)` per `k`.
pub fn inequality_count(n: usize, nu: usize) -> u64 {
    (0..=nu)
        .map(|k| (k as u64 + 1) * (n as u64 + 1 - k as u64))
        .sum()
}

/// True exactly when some `k` in `0..=nu` satisfies all `(k+1)(n+1-k)`
/// clean-cut inequalities `capacity >= sum(a) - nu`; equivalently, when the
/// degree pair has a realization with matching number `nu`.
pub fn check_inequalities(dd: &BipartiteDegreeSequence, nu: usize) -> bool {
    if nu > dd.n().min(dd.m()) || !dd.sums_match() {
        return false;
    }
    if (1..=nu).any(|i| dd.a.degree(i) == 0 || dd.b.degree(i) == 0) {
        return false;
    }
    let target = dd.a.sum() - nu as u64;
    (0..=nu).any(|k| {
        let eval = CutEvaluator::new(dd, nu, k);
        (0..=k).all(|p| (0..=(dd.n() - k)).all(|q| eval.capacity(p, q) >= target))
    })
}

/// Closed interval of matching numbers achievable by realizations of a
/// bipartite degree sequence; empty exactly when the sequence has no
/// realization at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteIntervalResult {
    Empty,
    Range { nu_min: usize, nu_max: usize },
}

impl BipartiteIntervalResult {
    pub fn is_empty(&self) -> bool {
        matches!(self, BipartiteIntervalResult::Empty)
    }

    pub fn contains(&self, nu: usize) -> bool {
        match *self {
            BipartiteIntervalResult::Empty => false,
            BipartiteIntervalResult::Range { nu_min, nu_max } => nu_min <= nu && nu <= nu_max,
        }
    }

    pub fn as_range(&self) -> Option<(usize, usize)> {
        match *self {
            BipartiteIntervalResult::Empty => None,
            BipartiteIntervalResult::Range { nu_min, nu_max } => Some((nu_min, nu_max)),
        }
    }
}

/// The interval of achievable matching numbers. Realizability is settled by
/// [`gale_ryser_check`]; the endpoints are then located by two binary
/// searches around the matching number of the greedy realization, which is
/// licensed because the achievable set is an interval.
pub fn matching_interval_bipartite(dd: &BipartiteDegreeSequence) -> BipartiteIntervalResult {
    if !gale_ryser_check(dd) {
        return BipartiteIntervalResult::Empty;
    }
    let anchor_graph = havel_hakimi_realization(dd)
        .expect("a sequence passing the realizability check has a realization");
    let anchor = maximum_matching(&anchor_graph).len();
    assert!(
        check_inequalities(dd, anchor),
        "the matching number of an explicit realization must be feasible"
    );

    // smallest feasible value in [0, anchor]
    let (mut lo, mut hi) = (0usize, anchor);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if check_inequalities(dd, mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let nu_min = lo;

    // largest feasible value in [anchor, min(n, m)]
    let (mut lo, mut hi) = (anchor, dd.n().min(dd.m()));
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if check_inequalities(dd, mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let nu_max = lo;

    BipartiteIntervalResult::Range { nu_min, nu_max }
}

/// Linear-scan variant kept for cross-checking the binary search: probes
/// every `nu` from 0 to `min(n, m)`.
pub fn matching_interval_bipartite_linear(dd: &BipartiteDegreeSequence) -> BipartiteIntervalResult {
    if !gale_ryser_check(dd) {
        return BipartiteIntervalResult::Empty;
    }
    let feasible: Vec<usize> = (0..=dd.n().min(dd.m()))
        .filter(|&nu| check_inequalities(dd, nu))
        .collect();
    debug_assert!(
        feasible.windows(2).all(|w| w[1] == w[0] + 1),
        "achievable matching numbers form an interval"
    );
    match (feasible.first(), feasible.last()) {
        (Some(&nu_min), Some(&nu_max)) => BipartiteIntervalResult::Range { nu_min, nu_max },
        _ => BipartiteIntervalResult::Empty,
    }
}
