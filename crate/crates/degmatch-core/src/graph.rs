//! Fundamental types: degree sequences, labeled bipartite graphs and trees,
//! maximum matchings and minimum vertex covers.
//!
//! Vertices are identified by 1-based indices (`v_1..v_n` on the A side,
//! `w_1..w_m` on the B side; `v_1..v_n` for trees). All operations are
//! deterministic: scans run over increasing A-index, then increasing B-index.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A nonincreasing sequence of nonnegative integer degrees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence {
    values: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceError {
    /// The input is not sorted in nonincreasing order.
    NotNonincreasing { position: usize },
}

impl fmt::Display for SequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceError::NotNonincreasing { position } => write!(
                f,
                "degree sequence is not nonincreasing at position {position}"
            ),
        }
    }
}

impl core::error::Error for SequenceError {}

impl DegreeSequence {
    pub fn new(values: Vec<usize>) -> Result<Self, SequenceError> {
        if let Some(position) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(SequenceError::NotNonincreasing {
                position: position + 1,
            });
        }
        Ok(DegreeSequence { values })
    }

    /// Sorts the input nonincreasingly. Returns the sequence together with the
    /// 1-based original position of each sorted entry (stable for ties).
    pub fn from_unsorted(values: Vec<usize>) -> (Self, Vec<usize>) {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&x, &y| values[y].cmp(&values[x]).then(x.cmp(&y)));
        let sorted = order.iter().map(|&p| values[p]).collect();
        let positions = order.iter().map(|&p| p + 1).collect();
        (DegreeSequence { values: sorted }, positions)
    }

    /// Number of entries, `n(d)`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Degree bound to vertex `v_i` (1-based).
    pub fn degree(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().map(|&d| d as u64).sum()
    }

    /// Number of entries equal to `value`, `n_i(d)`.
    pub fn count_equal(&self, value: usize) -> usize {
        self.values.iter().filter(|&&d| d == value).count()
    }
}

/// An ordered pair of degree sequences, one per partite side. The sums may
/// differ; realizability is a separate question.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteDegreeSequence {
    pub a: DegreeSequence,
    pub b: DegreeSequence,
}

impl BipartiteDegreeSequence {
    pub fn new(a: DegreeSequence, b: DegreeSequence) -> Self {
        BipartiteDegreeSequence { a, b }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn sums_match(&self) -> bool {
        self.a.sum() == self.b.sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { i: usize, j: usize },
    DuplicateEdge { i: usize, j: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { i, j } => {
                write!(f, "edge v{i} w{j} is outside the vertex ranges")
            }
            GraphError::DuplicateEdge { i, j } => write!(f, "duplicate edge v{i} w{j}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple bipartite graph on fixed labeled partite sets `A = {v_1..v_n}`
/// and `B = {w_1..w_m}`. Edges are pairs `(i, j)` meaning `v_i w_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledBipartiteGraph {
    n: usize,
    m: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledBipartiteGraph {
    pub fn new(
        n: usize,
        m: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i < 1 || i > n || j < 1 || j > m {
                return Err(GraphError::VertexOutOfRange { i, j });
            }
            if !set.insert((i, j)) {
                return Err(GraphError::DuplicateEdge { i, j });
            }
        }
        Ok(LabeledBipartiteGraph { n, m, edges: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    /// Edges in increasing `(i, j)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn degree_a(&self, i: usize) -> usize {
        self.edges.range((i, 0)..=(i, usize::MAX)).count()
    }

    pub fn degree_b(&self, j: usize) -> usize {
        self.edges.iter().filter(|&&(_, ej)| ej == j).count()
    }

    /// Per-vertex degree vectors `(d(v_1..v_n), d(w_1..w_m))`.
    pub fn degree_vectors(&self) -> (Vec<usize>, Vec<usize>) {
        let mut da = vec![0usize; self.n];
        let mut db = vec![0usize; self.m];
        for &(i, j) in &self.edges {
            da[i - 1] += 1;
            db[j - 1] += 1;
        }
        (da, db)
    }

    /// Neighbor lists indexed by A-vertex, each sorted increasingly.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i - 1].push(j);
        }
        adj
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    VertexOutOfRange { u: usize, v: usize },
    SelfLoop { u: usize },
    DuplicateEdge { u: usize, v: usize },
    WrongEdgeCount { expected: usize, found: usize },
    NotConnected,
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::VertexOutOfRange { u, v } => {
                write!(f, "edge v{u} v{v} is outside the vertex range")
            }
            TreeError::SelfLoop { u } => write!(f, "self-loop at v{u}"),
            TreeError::DuplicateEdge { u, v } => write!(f, "duplicate edge v{u} v{v}"),
            TreeError::WrongEdgeCount { expected, found } => {
                write!(f, "a tree needs {expected} edges, found {found}")
            }
            TreeError::NotConnected => write!(f, "edge set is not connected"),
        }
    }
}

impl core::error::Error for TreeError {}

/// A labeled tree on vertices `v_1..v_n`; edges are unordered pairs stored as
/// `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledTree {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, TreeError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a < 1 || a > n || b < 1 || b > n {
                return Err(TreeError::VertexOutOfRange { u: a, v: b });
            }
            if a == b {
                return Err(TreeError::SelfLoop { u: a });
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(TreeError::DuplicateEdge { u: e.0, v: e.1 });
            }
        }
        let expected = n.saturating_sub(1);
        if set.len() != expected {
            return Err(TreeError::WrongEdgeCount {
                expected,
                found: set.len(),
            });
        }
        let tree = LabeledTree { n, edges: set };
        if n > 0 && !tree.is_connected() {
            return Err(TreeError::NotConnected);
        }
        Ok(tree)
    }

    fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1usize]);
        seen[1] = true;
        let mut visited = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    visited += 1;
                    queue.push_back(v);
                }
            }
        }
        visited == self.n
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == u || b == u)
            .count()
    }

    /// Per-vertex degrees `d(v_1..v_n)`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        deg
    }

    /// Neighbor lists indexed 1..=n, each sorted increasingly.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// A set of pairwise vertex-disjoint edges `v_i w_j` of a bipartite host
/// graph, stored in increasing `(i, j)` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Caller guarantees the pairs are vertex-disjoint and sorted.
    pub(crate) fn from_pairs_unchecked(pairs: Vec<(usize, usize)>) -> Self {
        Matching { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn covers_a(&self, i: usize) -> bool {
        self.pairs.iter().any(|&(mi, _)| mi == i)
    }

    pub fn covers_b(&self, j: usize) -> bool {
        self.pairs.iter().any(|&(_, mj)| mj == j)
    }
}

/// A vertex cover of a bipartite host graph, split by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover {
    pub a_vertices: BTreeSet<usize>,
    pub b_vertices: BTreeSet<usize>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.a_vertices.len() + self.b_vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// True when every edge of `g` has an endpoint in the cover.
    pub fn covers(&self, g: &LabeledBipartiteGraph) -> bool {
        g.edges()
            .all(|(i, j)| self.a_vertices.contains(&i) || self.b_vertices.contains(&j))
    }
}

/// Maximum matching by augmenting paths. Free A-vertices are scanned in
/// increasing index order and neighbors in increasing index order, so the
/// result is deterministic.
pub fn maximum_matching(g: &LabeledBipartiteGraph) -> Matching {
    let adj = g.adjacency();
    // match_b[j-1] = A-vertex matched to w_j, 0 if free
    let mut match_b = vec![0usize; g.m()];
    let mut visited = vec![false; g.m() + 1];
    for i in 1..=g.n() {
        visited.fill(false);
        augment(i, &adj, &mut match_b, &mut visited);
    }
    let mut pairs: Vec<(usize, usize)> = match_b
        .iter()
        .enumerate()
        .filter(|&(_, &i)| i != 0)
        .map(|(j0, &i)| (i, j0 + 1))
        .collect();
    pairs.sort_unstable();
    Matching { pairs }
}

fn augment(i: usize, adj: &[Vec<usize>], match_b: &mut [usize], visited: &mut [bool]) -> bool {
    for &j in &adj[i - 1] {
        if visited[j] {
            continue;
        }
        visited[j] = true;
        if match_b[j - 1] == 0 || augment(match_b[j - 1], adj, match_b, visited) {
            match_b[j - 1] = i;
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverError {
    /// The supplied matching is not a matching of the host graph.
    InvalidMatching,
    /// The supplied matching is not maximum: König extraction produced a
    /// cover of a different size, which certifies the inconsistency.
    NotMaximum { matching: usize, cover: usize },
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::InvalidMatching => {
                write!(f, "supplied edges are not a matching of the host graph")
            }
            CoverError::NotMaximum { matching, cover } => write!(
                f,
                "matching of size {matching} is not maximum (extraction found a cover of size {cover})"
            ),
        }
    }
}

impl core::error::Error for CoverError {}

/// König/Egerváry extraction of a minimum vertex cover from a maximum
/// matching: alternating reachability from the unmatched A-vertices; the
/// cover is the unreached A side plus the reached B side.
pub fn minimum_vertex_cover(
    g: &LabeledBipartiteGraph,
    max_matching: &Matching,
) -> Result<VertexCover, CoverError> {
    let mut match_a = vec![0usize; g.n() + 1];
    let mut match_b = vec![0usize; g.m() + 1];
    for &(i, j) in max_matching.pairs() {
        if i < 1 || i > g.n() || j < 1 || j > g.m() || !g.contains_edge(i, j) {
            return Err(CoverError::InvalidMatching);
        }
        if match_a[i] != 0 || match_b[j] != 0 {
            return Err(CoverError::InvalidMatching);
        }
        match_a[i] = j;
        match_b[j] = i;
    }

    let adj = g.adjacency();
    let mut reached_a = vec![false; g.n() + 1];
    let mut reached_b = vec![false; g.m() + 1];
    let mut queue: VecDeque<usize> = (1..=g.n()).filter(|&i| match_a[i] == 0).collect();
    for &i in &queue {
        reached_a[i] = true;
    }
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i - 1] {
            if match_a[i] == j || reached_b[j] {
                continue;
            }
            reached_b[j] = true;
            let back = match_b[j];
            if back != 0 && !reached_a[back] {
                reached_a[back] = true;
                queue.push_back(back);
            }
        }
    }

    let cover = VertexCover {
        a_vertices: (1..=g.n()).filter(|&i| !reached_a[i]).collect(),
        b_vertices: (1..=g.m()).filter(|&j| reached_b[j]).collect(),
    };
    if cover.len() != max_matching.len() || !cover.covers(g) {
        return Err(CoverError::NotMaximum {
            matching: max_matching.len(),
            cover: cover.len(),
        });
    }
    Ok(cover)
}

/// Matching number of a tree by greedy leaf matching: repeatedly match the
/// smallest-index leaf to its neighbor and delete both.
pub fn tree_matching_number(t: &LabeledTree) -> usize {
    tree_maximum_matching(t).len()
}

/// The greedy maximum matching itself, as `(min, max)` vertex pairs.
pub(crate) fn tree_maximum_matching(t: &LabeledTree) -> Vec<(usize, usize)> {
    let adj = t.adjacency();
    let mut deg: Vec<usize> = adj.iter().map(|list| list.len()).collect();
    let mut alive = vec![true; t.n() + 1];
    let mut leaves: BTreeSet<usize> = (1..=t.n()).filter(|&u| deg[u] == 1).collect();
    let mut pairs = Vec::new();
    while let Some(&u) = leaves.iter().next() {
        leaves.remove(&u);
        if !alive[u] || deg[u] != 1 {
            continue;
        }
        let w = match adj[u].iter().find(|&&w| alive[w]) {
            Some(&w) => w,
            None => continue,
        };
        pairs.push((u.min(w), u.max(w)));
        alive[u] = false;
        alive[w] = false;
        for &x in &adj[w] {
            if alive[x] {
                deg[x] -= 1;
                if deg[x] == 1 {
                    leaves.insert(x);
                } else if deg[x] == 0 {
                    leaves.remove(&x);
                }
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Greedy realization of a bipartite degree sequence: row `i` takes the
/// `a_i` columns of largest residual degree (smallest index on ties).
/// Returns `None` exactly when the pair is not a bipartite degree sequence.
///
/// This is also the canonical graph that swap canonicalization drives
/// every realization to.
pub fn havel_hakimi_realization(dd: &BipartiteDegreeSequence) -> Option<LabeledBipartiteGraph> {
    if !dd.sums_match() {
        return None;
    }
    let n = dd.n();
    let m = dd.m();
    let mut residual: Vec<usize> = dd.b.values().to_vec();
    let mut edges = Vec::new();
    for i in 1..=n {
        let need = dd.a.degree(i);
        let row = havel_hakimi_row(&residual, need)?;
        for &j in &row {
            residual[j - 1] -= 1;
            edges.push((i, j));
        }
    }
    if residual.iter().any(|&r| r != 0) {
        return None;
    }
    let g = LabeledBipartiteGraph::new(n, m, edges).expect("greedy rows are within range");
    Some(g)
}

/// The columns a greedy row of size `need` takes from the given residual
/// column degrees: largest residual first, smallest index on ties. `None`
/// when fewer than `need` columns have residual degree left.
pub(crate) fn havel_hakimi_row(residual: &[usize], need: usize) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (1..=residual.len()).collect();
    order.sort_by(|&x, &y| residual[y - 1].cmp(&residual[x - 1]).then(x.cmp(&y)));
    let row: Vec<usize> = order
        .into_iter()
        .filter(|&j| residual[j - 1] > 0)
        .take(need)
        .collect();
    if row.len() < need {
        return None;
    }
    Some(row)
}
