//! The flow network that decides whether a bipartite degree sequence has a
//! realization with a given matching number, an exact integral max-flow
//! solver, and realization extraction.
//!
//! For parameters `nu` (target matching number) and `k` (how much of the
//! minimum vertex cover sits on the A side), the network has source `s`,
//! one node per `v_i` and `w_j`, and sink `t`. Middle arcs `(v_i, w_j)` of
//! capacity 1 exist unless `i > k` and `j > nu - k` (the cover
//! `{v_1..v_k} ∪ {w_1..w_{nu-k}}` must touch every edge) or `i + j = nu + 1`
//! (those pairs form the fixed maximum matching and are added back at
//! extraction time). Source and sink arcs carry the degrees, each reduced by
//! one for the `nu` matched vertices of its side:
//!
//! * `c(s, v_i) = a_i - 1` for `i <= nu`, else `a_i`,
//! * `c(w_j, t) = b_j - 1` for `j <= nu`, else `b_j`.
//!
//! With these capacities the cut at `s` has capacity `sum(a) - nu`, so a
//! flow attains that value exactly when it saturates every source arc; an
//! integral flow of that value therefore forces every vertex degree, and the
//! graph read off from the saturating flow (middle arcs carrying one unit,
//! plus the fixed matching) realizes the degree sequence with matching
//! number exactly `nu`. Feasibility for some `k` in `0..=nu` is equivalent
//! to the existence of such a realization.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{BipartiteDegreeSequence, LabeledBipartiteGraph, Matching};

/// Which partite side a diagnostic refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => write!(f, "A"),
            Side::B => write!(f, "B"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NetworkError {
    /// `nu` must satisfy `nu <= min(n, m)` and `k <= nu`.
    BadParams {
        nu: usize,
        k: usize,
        n: usize,
        m: usize,
    },
    /// A matched vertex has degree 0, which would make a boundary capacity
    /// negative; no realization can match such a vertex.
    NegativeCapacity { side: Side, index: usize },
}

impl fmt::Display for NetworkError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NetworkError::BadParams { nu, k, n, m } => write!(
                f,
                "parameters nu = {nu}, k = {k} invalid for sides of length {n} and {m}"
            ),
            NetworkError::NegativeCapacity { side, index } => write!(
                f,
                "degree 0 at matched position {index} on side {side} would need a negative capacity"
            ),
        }
    }
}

impl core::error::Error for NetworkError {}

/// A directed arc with an integer capacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub capacity: u64,
}

/// The network `N(d_A, d_B, nu, k)`. Nodes are numbered `0 = s`,
/// `i` for `v_i` (`1..=n`), `n + j` for `w_j` (`1..=m`), `n + m + 1 = t`.
/// Arcs are stored source arcs first (increasing `i`), then middle arcs in
/// `(i, j)` order, then sink arcs (increasing `j`).
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    n: usize,
    m: usize,
    nu: usize,
    k: usize,
    arcs: Vec<Arc>,
    by_endpoints: BTreeMap<(usize, usize), usize>,
}

impl FlowNetwork {
    pub fn source(&self) -> usize {
        0
    }

    pub fn sink(&self) -> usize {
        self.n + self.m + 1
    }

    pub fn node_count(&self) -> usize {
        self.n + self.m + 2
    }

    pub fn a_node(&self, i: usize) -> usize {
        debug_assert!(1 <= i && i <= self.n);
        i
    }

    pub fn b_node(&self, j: usize) -> usize {
        debug_assert!(1 <= j && j <= self.m);
        self.n + j
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Arc lookup by endpoint pair.
    pub fn arc(&self, tail: usize, head: usize) -> Option<&Arc> {
        self.by_endpoints.get(&(tail, head)).map(|&i| &self.arcs[i])
    }

    /// Middle arcs as `(i, j)` index pairs, in order.
    pub fn middle_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs
            .iter()
            .filter(|a| a.tail != self.source() && a.head != self.sink())
            .map(|a| (a.tail, a.head - self.n))
    }
}

/// Is `(i, j)` a middle arc of `N(d_A, d_B, nu, k)`?
fn middle_arc_exists(i: usize, j: usize, nu: usize, k: usize) -> bool {
    let blocked = i > k && j > nu - k;
    let matched_pair = i + j == nu + 1;
    !blocked && !matched_pair
}

/// Builds `N(d_A, d_B, nu, k)`.
pub fn build_network(
    dd: &BipartiteDegreeSequence,
    nu: usize,
    k: usize,
) -> Result<FlowNetwork, NetworkError> {
    let (n, m) = (dd.n(), dd.m());
    if nu > n || nu > m || k > nu {
        return Err(NetworkError::BadParams { nu, k, n, m });
    }
    for i in 1..=nu {
        if dd.a.degree(i) == 0 {
            return Err(NetworkError::NegativeCapacity {
                side: Side::A,
                index: i,
            });
        }
        if dd.b.degree(i) == 0 {
            return Err(NetworkError::NegativeCapacity {
                side: Side::B,
                index: i,
            });
        }
    }

    let mut arcs = Vec::new();
    for i in 1..=n {
        let reduce = (i <= nu) as u64;
        arcs.push(Arc {
            tail: 0,
            head: i,
            capacity: dd.a.degree(i) as u64 - reduce,
        });
    }
    for i in 1..=n {
        for j in 1..=m {
            if middle_arc_exists(i, j, nu, k) {
                arcs.push(Arc {
                    tail: i,
                    head: n + j,
                    capacity: 1,
                });
            }
        }
    }
    for j in 1..=m {
        let reduce = (j <= nu) as u64;
        arcs.push(Arc {
            tail: n + j,
            head: n + m + 1,
            capacity: dd.b.degree(j) as u64 - reduce,
        });
    }

    let by_endpoints = arcs
        .iter()
        .enumerate()
        .map(|(idx, a)| ((a.tail, a.head), idx))
        .collect();
    Ok(FlowNetwork {
        n,
        m,
        nu,
        k,
        arcs,
        by_endpoints,
    })
}

/// An integral flow on a [`FlowNetwork`]; `arc_flow` is parallel to the
/// network's arc list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralFlow {
    pub value: u64,
    pub arc_flow: Vec<u64>,
}

impl IntegralFlow {
    pub fn flow_between(&self, net: &FlowNetwork, tail: usize, head: usize) -> Option<u64> {
        net.by_endpoints
            .get(&(tail, head))
            .map(|&idx| self.arc_flow[idx])
    }
}

struct ResidualEdge {
    to: usize,
    residual: u64,
    rev: usize,
    arc: Option<usize>,
}

/// Dinic's algorithm: BFS level graph plus blocking-flow DFS. Adjacency is
/// visited in arc insertion order, so the result is deterministic.
pub fn max_flow(net: &FlowNetwork) -> IntegralFlow {
    let node_count = net.node_count();
    let mut adj: Vec<Vec<ResidualEdge>> = (0..node_count).map(|_| Vec::new()).collect();
    for (idx, arc) in net.arcs.iter().enumerate() {
        let rev_f = adj[arc.head].len();
        let rev_b = adj[arc.tail].len();
        adj[arc.tail].push(ResidualEdge {
            to: arc.head,
            residual: arc.capacity,
            rev: rev_f,
            arc: Some(idx),
        });
        adj[arc.head].push(ResidualEdge {
            to: arc.tail,
            residual: 0,
            rev: rev_b,
            arc: None,
        });
    }

    let (s, t) = (net.source(), net.sink());
    let mut level = vec![usize::MAX; node_count];
    let mut iter = vec![0usize; node_count];
    let mut value = 0u64;
    while bfs_levels(&adj, s, t, &mut level) {
        iter.fill(0);
        loop {
            let pushed = blocking_dfs(&mut adj, &level, &mut iter, s, t, u64::MAX);
            if pushed == 0 {
                break;
            }
            value += pushed;
        }
    }

    let mut arc_flow = vec![0u64; net.arcs.len()];
    for edges in &adj {
        for e in edges {
            if let Some(idx) = e.arc {
                arc_flow[idx] = net.arcs[idx].capacity - e.residual;
            }
        }
    }
    IntegralFlow { value, arc_flow }
}

fn bfs_levels(adj: &[Vec<ResidualEdge>], s: usize, t: usize, level: &mut [usize]) -> bool {
    level.fill(usize::MAX);
    level[s] = 0;
    let mut queue = alloc::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for e in &adj[u] {
            if e.residual > 0 && level[e.to] == usize::MAX {
                level[e.to] = level[u] + 1;
                queue.push_back(e.to);
            }
        }
    }
    level[t] != usize::MAX
}

fn blocking_dfs(
    adj: &mut [Vec<ResidualEdge>],
    level: &[usize],
    iter: &mut [usize],
    u: usize,
    t: usize,
    limit: u64,
) -> u64 {
    if u == t {
        return limit;
    }
    while iter[u] < adj[u].len() {
        let (to, residual, rev) = {
            let e = &adj[u][iter[u]];
            (e.to, e.residual, e.rev)
        };
        if residual > 0 && level[to] == level[u] + 1 {
            let pushed = blocking_dfs(adj, level, iter, to, t, limit.min(residual));
            if pushed > 0 {
                let slot = iter[u];
                adj[u][slot].residual -= pushed;
                adj[to][rev].residual += pushed;
                return pushed;
            }
        }
        iter[u] += 1;
    }
    0
}

/// Why no realization with the requested matching number exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfeasibilityReason {
    /// The two sides have different degree sums.
    SumMismatch { sum_a: u64, sum_b: u64 },
    /// A vertex that would have to be matched has degree 0.
    ZeroDegreeMatched { side: Side, index: usize },
    /// Every k fell short of the target flow value.
    FlowShort {
        target: u64,
        /// max-flow value reached at each `k` in `0..=nu`
        attempts: Vec<(usize, u64)>,
    },
}

/// A certified negative answer: the matching number is not achievable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Infeasibility {
    pub nu: usize,
    pub reason: InfeasibilityReason,
}

/// Outcome of [`realize_bipartite_with_nu`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipRealization {
    /// A realization with matching number `nu`, plus the cover split `k`
    /// that produced it (smallest feasible).
    Realized {
        graph: LabeledBipartiteGraph,
        k: usize,
    },
    Infeasible(Infeasibility),
}

impl BipRealization {
    pub fn graph(&self) -> Option<&LabeledBipartiteGraph> {
        match self {
            BipRealization::Realized { graph, .. } => Some(graph),
            BipRealization::Infeasible(_) => None,
        }
    }
}

/// Smallest `k` in `0..=nu` whose network admits a flow of value
/// `sum(a) - nu`, i.e. whose max flow attains the target. `None` when the
/// matching number is infeasible.
pub fn flow_feasible(dd: &BipartiteDegreeSequence, nu: usize) -> Option<usize> {
    if nu > dd.n().min(dd.m()) || !dd.sums_match() {
        return None;
    }
    if (1..=nu).any(|i| dd.a.degree(i) == 0 || dd.b.degree(i) == 0) {
        return None;
    }
    let target = dd.a.sum() - nu as u64;
    (0..=nu).find(|&k| {
        let net = build_network(dd, nu, k).expect("parameters validated");
        let flow = max_flow(&net);
        debug_assert!(flow.value <= target, "cut at source bounds the flow");
        flow.value == target
    })
}

/// Builds a realization with matching number exactly `nu`, or certifies that
/// none exists. Scans `k` in increasing order; on success the graph consists
/// of the middle arcs carrying flow plus the fixed matching
/// `{v_i w_{nu+1-i}}`.
pub fn realize_bipartite_with_nu(
    dd: &BipartiteDegreeSequence,
    nu: usize,
) -> Result<BipRealization, NetworkError> {
    let (n, m) = (dd.n(), dd.m());
    if nu > n.min(m) {
        return Err(NetworkError::BadParams { nu, k: 0, n, m });
    }
    let (sum_a, sum_b) = (dd.a.sum(), dd.b.sum());
    if sum_a != sum_b {
        return Ok(BipRealization::Infeasible(Infeasibility {
            nu,
            reason: InfeasibilityReason::SumMismatch { sum_a, sum_b },
        }));
    }
    for i in 1..=nu {
        if dd.a.degree(i) == 0 {
            return Ok(BipRealization::Infeasible(Infeasibility {
                nu,
                reason: InfeasibilityReason::ZeroDegreeMatched {
                    side: Side::A,
                    index: i,
                },
            }));
        }
        if dd.b.degree(i) == 0 {
            return Ok(BipRealization::Infeasible(Infeasibility {
                nu,
                reason: InfeasibilityReason::ZeroDegreeMatched {
                    side: Side::B,
                    index: i,
                },
            }));
        }
    }

    let target = sum_a - nu as u64;
    let mut attempts = Vec::with_capacity(nu + 1);
    for k in 0..=nu {
        let net = build_network(dd, nu, k)?;
        let flow = max_flow(&net);
        debug_assert!(flow.value <= target, "cut at source bounds the flow");
        if flow.value == target {
            let graph = extract_realization(dd, nu, &net, &flow);
            return Ok(BipRealization::Realized { graph, k });
        }
        attempts.push((k, flow.value));
    }
    Ok(BipRealization::Infeasible(Infeasibility {
        nu,
        reason: InfeasibilityReason::FlowShort { target, attempts },
    }))
}

fn extract_realization(
    dd: &BipartiteDegreeSequence,
    nu: usize,
    net: &FlowNetwork,
    flow: &IntegralFlow,
) -> LabeledBipartiteGraph {
    let mut edges: Vec<(usize, usize)> = net
        .arcs
        .iter()
        .enumerate()
        .filter(|&(idx, arc)| {
            arc.tail != net.source() && arc.head != net.sink() && flow.arc_flow[idx] == 1
        })
        .map(|(_, arc)| (arc.tail, arc.head - net.n()))
        .collect();
    edges.extend((1..=nu).map(|i| (i, nu + 1 - i)));
    let graph = LabeledBipartiteGraph::new(dd.n(), dd.m(), edges)
        .expect("flow edges and matched pairs are disjoint and in range");
    debug_assert_eq!(graph.degree_vectors().0, dd.a.values());
    debug_assert_eq!(graph.degree_vectors().1, dd.b.values());
    graph
}

/// The fixed maximum matching of the canonical realization: pairs
/// `v_i w_{nu+1-i}` for `i` in `1..=nu`.
pub fn canonical_matching_pairs(nu: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=nu).map(move |i| (i, nu + 1 - i))
}

/// Checks the canonical structure: the pairs `{v_i w_{nu+1-i}}` form a
/// maximum matching of `g` of size exactly `nu`, and
/// `{v_1..v_k} ∪ {w_1..w_{nu-k}}` covers every edge.
pub fn verify_canonical_structure(g: &LabeledBipartiteGraph, nu: usize, k: usize) -> bool {
    if nu > g.n().min(g.m()) || k > nu {
        return false;
    }
    for (i, j) in canonical_matching_pairs(nu) {
        if !g.contains_edge(i, j) {
            return false;
        }
    }
    if crate::graph::maximum_matching(g).len() != nu {
        return false;
    }
    g.edges().all(|(i, j)| i <= k || j <= nu - k)
}

/// Restates a canonical matching as a [`Matching`] value of the host graph.
pub fn canonical_matching(g: &LabeledBipartiteGraph, nu: usize) -> Option<Matching> {
    let pairs: Vec<(usize, usize)> = canonical_matching_pairs(nu).collect();
    if pairs.iter().all(|&(i, j)| g.contains_edge(i, j)) {
        // already vertex-disjoint by construction
        let mut sorted = pairs;
        sorted.sort_unstable();
        Some(Matching::from_pairs_unchecked(sorted))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DegreeSequence;

    fn bip_seq(a: &[usize], b: &[usize]) -> BipartiteDegreeSequence {
        BipartiteDegreeSequence::new(
            DegreeSequence::new(a.to_vec()).unwrap(),
            DegreeSequence::new(b.to_vec()).unwrap(),
        )
    }

    /// Independent arc-set generator: plain set comprehension over the
    /// definition, written without reusing `middle_arc_exists`.
    fn expected_middle_arcs(n: usize, m: usize, nu: usize, k: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=m {
                let excluded = (i > k && j > nu - k) || (i + j == nu + 1);
                if !excluded {
                    out.push((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn network_for_two_one_nu_two_k_one() {
        let dd = bip_seq(&[2, 1], &[2, 1]);
        let net = build_network(&dd, 2, 1).unwrap();
        let middle: Vec<(usize, usize)> = net.middle_pairs().collect();
        assert_eq!(middle, vec![(1, 1)]);
        assert_eq!(middle, expected_middle_arcs(2, 2, 2, 1));
        // matched vertices lose one unit of boundary capacity
        assert_eq!(net.arc(0, 1).unwrap().capacity, 1);
        assert_eq!(net.arc(0, 2).unwrap().capacity, 0);
        assert_eq!(net.arc(net.b_node(1), net.sink()).unwrap().capacity, 1);
        assert_eq!(net.arc(net.b_node(2), net.sink()).unwrap().capacity, 0);
        assert_eq!(max_flow(&net).value, 1);
    }

    #[test]
    fn network_for_two_one_nu_one_k_zero() {
        let dd = bip_seq(&[2, 1], &[2, 1]);
        let net = build_network(&dd, 1, 0).unwrap();
        let middle: Vec<(usize, usize)> = net.middle_pairs().collect();
        assert_eq!(middle, vec![(2, 1)]);
        assert_eq!(middle, expected_middle_arcs(2, 2, 1, 0));
        assert_eq!(net.arc(0, 1).unwrap().capacity, 1);
        assert_eq!(net.arc(0, 2).unwrap().capacity, 1);
        // value 1 falls short of sum(a) - nu = 2
        assert_eq!(max_flow(&net).value, 1);
    }

    #[test]
    fn network_with_nu_zero_has_no_middle_arcs() {
        let dd = bip_seq(&[0, 0], &[0]);
        let net = build_network(&dd, 0, 0).unwrap();
        assert_eq!(net.middle_pairs().count(), 0);
        assert_eq!(max_flow(&net).value, 0);
    }

    #[test]
    fn middle_arc_count_formula() {
        // |middle| = nm - (n-k)(m-nu+k) - nu: the blocked rectangle and the
        // nu matched diagonal pairs are disjoint exclusions.
        for (n, m) in [(3, 3), (4, 2), (2, 4), (5, 5)] {
            for nu in 0..=n.min(m) {
                for k in 0..=nu {
                    let count = expected_middle_arcs(n, m, nu, k).len();
                    assert_eq!(count, n * m - (n - k) * (m - nu + k) - nu);
                }
            }
        }
    }

    #[test]
    fn build_rejects_bad_params() {
        let dd = bip_seq(&[2, 1], &[2, 1]);
        assert!(matches!(
            build_network(&dd, 3, 0),
            Err(NetworkError::BadParams { .. })
        ));
        assert!(matches!(
            build_network(&dd, 1, 2),
            Err(NetworkError::BadParams { .. })
        ));
        let zero = bip_seq(&[1, 0], &[1, 0]);
        assert!(matches!(
            build_network(&zero, 2, 0),
            Err(NetworkError::NegativeCapacity {
                side: Side::A,
                index: 2
            })
        ));
    }

    #[test]
    fn max_flow_is_deterministic() {
        let dd = bip_seq(&[3, 2, 2, 1], &[3, 2, 2, 1]);
        let net = build_network(&dd, 3, 1).unwrap();
        let f1 = max_flow(&net);
        let f2 = max_flow(&net);
        assert_eq!(f1, f2);
    }

    /// Minimum s-t cut by enumerating all subsets of the internal nodes.
    fn brute_force_min_cut(net: &FlowNetwork) -> u64 {
        let internal = net.node_count() - 2;
        let mut best = u64::MAX;
        for mask in 0u32..(1 << internal) {
            let in_cut = |node: usize| -> bool {
                if node == net.source() {
                    true
                } else if node == net.sink() {
                    false
                } else {
                    mask >> (node - 1) & 1 == 1
                }
            };
            let cap: u64 = net
                .arcs()
                .iter()
                .filter(|a| in_cut(a.tail) && !in_cut(a.head))
                .map(|a| a.capacity)
                .sum();
            best = best.min(cap);
        }
        best
    }

    #[test]
    fn max_flow_equals_brute_force_min_cut_on_small_networks() {
        for dd in crate::oracle::bipartite_degree_sequences(4, 4, 3) {
            if dd.n() + dd.m() > 8 {
                continue;
            }
            for nu in 0..=dd.n().min(dd.m()) {
                for k in 0..=nu {
                    let Ok(net) = build_network(&dd, nu, k) else {
                        continue;
                    };
                    assert_eq!(
                        max_flow(&net).value,
                        brute_force_min_cut(&net),
                        "dd {dd:?} nu {nu} k {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn realize_worked_examples() {
        let dd = bip_seq(&[2, 1], &[2, 1]);
        match realize_bipartite_with_nu(&dd, 2).unwrap() {
            BipRealization::Realized { graph, k } => {
                let edges: Vec<(usize, usize)> = graph.edges().collect();
                assert_eq!(edges, vec![(1, 1), (1, 2), (2, 1)]);
                assert_eq!(crate::graph::maximum_matching(&graph).len(), 2);
                assert!(verify_canonical_structure(&graph, 2, k));
            }
            other => panic!("expected a realization, got {other:?}"),
        }

        match realize_bipartite_with_nu(&dd, 1).unwrap() {
            BipRealization::Infeasible(inf) => {
                assert_eq!(inf.nu, 1);
                match inf.reason {
                    InfeasibilityReason::FlowShort { target, attempts } => {
                        assert_eq!(target, 2);
                        assert_eq!(attempts, vec![(0, 1), (1, 1)]);
                    }
                    other => panic!("unexpected reason {other:?}"),
                }
            }
            other => panic!("expected infeasible, got {other:?}"),
        }

        let perfect = bip_seq(&[1, 1], &[1, 1]);
        match realize_bipartite_with_nu(&perfect, 2).unwrap() {
            BipRealization::Realized { graph, .. } => {
                let edges: Vec<(usize, usize)> = graph.edges().collect();
                assert_eq!(edges, vec![(1, 2), (2, 1)]);
            }
            other => panic!("expected a realization, got {other:?}"),
        }
    }

    #[test]
    fn realize_handles_sum_mismatch_and_bad_nu() {
        let dd = bip_seq(&[2, 1], &[1, 1]);
        match realize_bipartite_with_nu(&dd, 1).unwrap() {
            BipRealization::Infeasible(inf) => {
                assert!(matches!(
                    inf.reason,
                    InfeasibilityReason::SumMismatch { .. }
                ));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
        assert!(realize_bipartite_with_nu(&bip_seq(&[1, 1], &[1, 1]), 3).is_err());
    }

    #[test]
    fn realize_zero_nu_means_empty_graph() {
        let empty = bip_seq(&[0, 0], &[0, 0]);
        match realize_bipartite_with_nu(&empty, 0).unwrap() {
            BipRealization::Realized { graph, k } => {
                assert_eq!(graph.edge_count(), 0);
                assert_eq!(k, 0);
            }
            other => panic!("expected the empty realization, got {other:?}"),
        }
        let nonempty = bip_seq(&[1, 1], &[1, 1]);
        assert!(matches!(
            realize_bipartite_with_nu(&nonempty, 0).unwrap(),
            BipRealization::Infeasible(_)
        ));
    }

    /// A flow can attain the target while routing through the wrong
    /// boundary arcs only if those arcs had slack; the reduced capacities
    /// remove all slack, so extraction always reproduces the exact degrees.
    #[test]
    fn extraction_forces_exact_degrees() {
        let dd = bip_seq(&[2, 1, 1], &[2, 1, 1]);
        match realize_bipartite_with_nu(&dd, 3).unwrap() {
            BipRealization::Realized { graph, k } => {
                let (da, db) = graph.degree_vectors();
                assert_eq!(da, dd.a.values());
                assert_eq!(db, dd.b.values());
                assert_eq!(crate::graph::maximum_matching(&graph).len(), 3);
                assert!(verify_canonical_structure(&graph, 3, k));
            }
            other => panic!("expected a realization, got {other:?}"),
        }
    }

    #[test]
    fn verify_canonical_examples() {
        let g = LabeledBipartiteGraph::new(2, 2, [(1, 1), (1, 2), (2, 1)]).unwrap();
        assert!(verify_canonical_structure(&g, 2, 1));

        let k22 = LabeledBipartiteGraph::new(2, 2, [(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert!(verify_canonical_structure(&k22, 2, 2));

        // the required matching edges v1w2, v2w1 are missing
        let disjoint = LabeledBipartiteGraph::new(2, 2, [(1, 1), (2, 2)]).unwrap();
        assert!(!verify_canonical_structure(&disjoint, 2, 0));
    }
}
