//! Exhaustive ground truth for small instances.
//!
//! Trees are enumerated through the Prüfer bijection: a labeled tree on
//! `v_1..v_n` with degrees `d_i` corresponds to a string of length `n - 2`
//! in which `v_i` appears exactly `d_i - 1` times, so the realizations of a
//! degree sequence are exactly the distinct multiset permutations of that
//! string. Bipartite realizations are enumerated as 0/1 matrices with
//! prescribed row and column sums, by backtracking in row-major
//! lexicographic order.
//!
//! Enumeration refuses instances whose predicted realization count exceeds a
//! cap (default 10^7); the oracle is meant for desk-scale cross-validation,
//! not for counting at scale.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{
    maximum_matching, tree_matching_number, BipartiteDegreeSequence, DegreeSequence,
    LabeledBipartiteGraph, LabeledTree,
};

/// Upper bound on how many realizations an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCap(pub u64);

impl Default for EnumerationCap {
    fn default() -> Self {
        EnumerationCap(10_000_000)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    CapExceeded { predicted: u128, cap: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::CapExceeded { predicted, cap } => write!(
                f,
                "enumeration would visit {predicted} realizations, above the cap of {cap}"
            ),
        }
    }
}

impl core::error::Error for OracleError {}

fn tree_preconditions_hold(d: &DegreeSequence) -> bool {
    let n = d.len();
    n >= 2 && d.values().iter().all(|&x| x >= 1) && d.sum() == 2 * (n as u64 - 1)
}

/// Number of labeled trees with per-vertex degrees `d_i`, i.e. the number of
/// multiset permutations of the Prüfer string; 0 when the preconditions fail.
pub fn predicted_tree_count(d: &DegreeSequence) -> u128 {
    if !tree_preconditions_hold(d) {
        return 0;
    }
    let mut remaining = (d.len() - 2) as u128;
    let mut count: u128 = 1;
    for &deg in d.values() {
        for t in 0..(deg - 1) as u128 {
            // multiply by C(remaining, d_i - 1) incrementally
            count = count.saturating_mul(remaining - t);
            count /= t + 1;
        }
        remaining -= (deg - 1) as u128;
    }
    count
}

/// All labeled trees with `d(v_i) = d_i`, each exactly once, in lexicographic
/// order of the Prüfer string. Invalid sequences give an empty stream.
pub fn enumerate_trees(
    d: &DegreeSequence,
    cap: EnumerationCap,
) -> Result<TreeEnumeration, OracleError> {
    let predicted = predicted_tree_count(d);
    if predicted > cap.0 as u128 {
        return Err(OracleError::CapExceeded {
            predicted,
            cap: cap.0,
        });
    }
    let current = if tree_preconditions_hold(d) {
        let mut string = Vec::with_capacity(d.len().saturating_sub(2));
        for (i, &deg) in d.values().iter().enumerate() {
            string.extend(core::iter::repeat_n(i + 1, deg - 1));
        }
        string.sort_unstable();
        Some(string)
    } else {
        None
    };
    Ok(TreeEnumeration {
        n: d.len(),
        current,
    })
}

/// Iterator over the trees of [`enumerate_trees`].
pub struct TreeEnumeration {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for TreeEnumeration {
    type Item = LabeledTree;

    fn next(&mut self) -> Option<LabeledTree> {
        let string = self.current.as_mut()?;
        let tree = decode_prufer(string, self.n);
        if !next_permutation(string) {
            self.current = None;
        }
        Some(tree)
    }
}

/// Advances `v` to its lexicographic successor permutation; false at the end.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Standard Prüfer decode; the string must use 1-based vertex labels and each
/// label `i` must appear `d_i - 1` times for some valid tree sequence.
fn decode_prufer(string: &[usize], n: usize) -> LabeledTree {
    let mut deg = vec![1usize; n + 1];
    for &s in string {
        deg[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&u| deg[u] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in string {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        deg[leaf] -= 1;
        deg[s] -= 1;
        if deg[s] == 1 {
            leaves.insert(s);
        }
    }
    let last: Vec<usize> = (1..=n).filter(|&u| deg[u] == 1).collect();
    debug_assert_eq!(last.len(), 2);
    edges.push((last[0], last[1]));
    LabeledTree::new(n, edges).expect("Prüfer decode yields a tree")
}

/// Exact number of realizations of a bipartite degree sequence, by a
/// memoized recursion over rows: the state is the sorted multiset of
/// residual column sums, and a row distributes its degree over the groups of
/// equal residual values. Independent of the backtracking enumerator.
pub fn count_bipartite_realizations(dd: &BipartiteDegreeSequence) -> u128 {
    if !dd.sums_match() {
        return 0;
    }
    let residual: Vec<usize> = {
        let mut r = dd.b.values().to_vec();
        r.sort_unstable_by(|x, y| y.cmp(x));
        r
    };
    let mut memo: BTreeMap<(usize, Vec<usize>), u128> = BTreeMap::new();
    count_rows(dd.a.values(), 0, residual, &mut memo)
}

fn count_rows(
    rows: &[usize],
    i: usize,
    residual: Vec<usize>,
    memo: &mut BTreeMap<(usize, Vec<usize>), u128>,
) -> u128 {
    if i == rows.len() {
        return if residual.iter().all(|&r| r == 0) {
            1
        } else {
            0
        };
    }
    if let Some(&c) = memo.get(&(i, residual.clone())) {
        return c;
    }
    // group the residual multiset by value
    let mut groups: Vec<(usize, usize)> = Vec::new(); // (value, multiplicity)
    for &r in &residual {
        match groups.last_mut() {
            Some(g) if g.0 == r => g.1 += 1,
            _ => groups.push((r, 1)),
        }
    }
    let need = rows[i];
    let mut total: u128 = 0;
    let mut take = vec![0usize; groups.len()];
    distribute(&groups, need, 0, &mut take, &mut |take| {
        let mut ways: u128 = 1;
        let mut next = Vec::with_capacity(residual.len());
        for (g, &(value, mult)) in groups.iter().enumerate() {
            ways = ways.saturating_mul(binomial(mult, take[g]));
            for _ in 0..take[g] {
                next.push(value - 1);
            }
            for _ in take[g]..mult {
                next.push(value);
            }
        }
        next.sort_unstable_by(|x, y| y.cmp(x));
        total = total.saturating_add(ways.saturating_mul(count_rows(rows, i + 1, next, memo)));
    });
    memo.insert((i, residual), total);
    total
}

fn distribute(
    groups: &[(usize, usize)],
    need: usize,
    g: usize,
    take: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if g == groups.len() {
        if need == 0 {
            emit(take);
        }
        return;
    }
    let (value, mult) = groups[g];
    let max_here = if value == 0 { 0 } else { mult.min(need) };
    for t in 0..=max_here {
        take[g] = t;
        distribute(groups, need - t, g + 1, take, emit);
    }
    take[g] = 0;
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut c: u128 = 1;
    for t in 0..k {
        c = c.saturating_mul((n - t) as u128);
        c /= (t + 1) as u128;
    }
    c
}

/// All realizations of a bipartite degree sequence, each exactly once, as
/// 0/1 matrices in row-major lexicographic order (each row's columns chosen
/// in increasing combination order). Infeasible input gives an empty stream.
pub fn enumerate_bipartite(
    dd: &BipartiteDegreeSequence,
    cap: EnumerationCap,
) -> Result<BipartiteEnumeration, OracleError> {
    let predicted = count_bipartite_realizations(dd);
    if predicted > cap.0 as u128 {
        return Err(OracleError::CapExceeded {
            predicted,
            cap: cap.0,
        });
    }
    let feasible = dd.sums_match()
        && dd.a.values().iter().all(|&a| a <= dd.m())
        && dd.b.values().iter().all(|&b| b <= dd.n());
    Ok(BipartiteEnumeration {
        row_deg: dd.a.values().to_vec(),
        m: dd.m(),
        residual: dd.b.values().to_vec(),
        filled: vec![0; dd.n()],
        choices: Vec::new(),
        cursor: (0, 1),
        exhausted: !feasible,
    })
}

/// Backtracking iterator over the matrices of [`enumerate_bipartite`].
pub struct BipartiteEnumeration {
    row_deg: Vec<usize>,
    m: usize,
    residual: Vec<usize>,
    filled: Vec<usize>,
    /// committed cells (0-based row, 1-based column) in DFS order
    choices: Vec<(usize, usize)>,
    /// (current row, next candidate column)
    cursor: (usize, usize),
    exhausted: bool,
}

impl BipartiteEnumeration {
    fn backtrack(&mut self) {
        match self.choices.pop() {
            Some((r, c)) => {
                self.residual[c - 1] += 1;
                self.filled[r] -= 1;
                self.cursor = (r, c + 1);
            }
            None => self.exhausted = true,
        }
    }

    /// Every residual column sum must still fit in the rows below.
    fn columns_fit(&self, rows_left: usize) -> bool {
        self.residual.iter().all(|&r| r <= rows_left)
    }
}

impl Iterator for BipartiteEnumeration {
    type Item = LabeledBipartiteGraph;

    fn next(&mut self) -> Option<LabeledBipartiteGraph> {
        let n = self.row_deg.len();
        loop {
            if self.exhausted {
                return None;
            }
            let (row, mut cand) = self.cursor;
            if row == n {
                debug_assert!(self.residual.iter().all(|&r| r == 0));
                let g = LabeledBipartiteGraph::new(
                    n,
                    self.m,
                    self.choices.iter().map(|&(r, c)| (r + 1, c)),
                )
                .expect("enumerated cells are in range and distinct");
                self.backtrack();
                return Some(g);
            }
            let need = self.row_deg[row] - self.filled[row];
            if need == 0 {
                if self.columns_fit(n - row - 1) {
                    self.cursor = (row + 1, 1);
                    continue;
                }
                self.backtrack();
                continue;
            }
            let mut placed = false;
            while cand + need - 1 <= self.m {
                if self.residual[cand - 1] > 0 {
                    self.choices.push((row, cand));
                    self.residual[cand - 1] -= 1;
                    self.filled[row] += 1;
                    self.cursor = (row, cand + 1);
                    placed = true;
                    break;
                }
                cand += 1;
            }
            if !placed {
                self.backtrack();
            }
        }
    }
}

/// Exact set of matching numbers over all trees realizing `d`.
pub fn achievable_nu_set_tree(
    d: &DegreeSequence,
    cap: EnumerationCap,
) -> Result<BTreeSet<usize>, OracleError> {
    Ok(enumerate_trees(d, cap)?
        .map(|t| tree_matching_number(&t))
        .collect())
}

/// Exact set of matching numbers over all realizations of `dd`.
pub fn achievable_nu_set_bipartite(
    dd: &BipartiteDegreeSequence,
    cap: EnumerationCap,
) -> Result<BTreeSet<usize>, OracleError> {
    Ok(enumerate_bipartite(dd, cap)?
        .map(|g| maximum_matching(&g).len())
        .collect())
}

/// All nonincreasing sequences of the given length with entries in
/// `0..=max_entry`, in lexicographically decreasing order.
pub fn nonincreasing_sequences(len: usize, max_entry: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(len);
    fill_nonincreasing(len, max_entry, &mut prefix, &mut out);
    out
}

fn fill_nonincreasing(
    len: usize,
    bound: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<DegreeSequence>,
) {
    if prefix.len() == len {
        out.push(DegreeSequence::new(prefix.clone()).expect("built nonincreasing"));
        return;
    }
    for e in (0..=bound).rev() {
        prefix.push(e);
        fill_nonincreasing(len, e, prefix, out);
        prefix.pop();
    }
}

/// All bipartite degree sequences with side lengths `1..=max_n` and
/// `1..=max_m` and entries `0..=max_entry`.
pub fn bipartite_degree_sequences(
    max_n: usize,
    max_m: usize,
    max_entry: usize,
) -> Vec<BipartiteDegreeSequence> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let a_side = nonincreasing_sequences(n, max_entry);
        for m in 1..=max_m {
            let b_side = nonincreasing_sequences(m, max_entry);
            for a in &a_side {
                for b in &b_side {
                    out.push(BipartiteDegreeSequence::new(a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

/// All nonincreasing positive sequences of length `n` summing to `2(n-1)`,
/// i.e. every tree degree sequence on `n >= 2` vertices.
pub fn tree_degree_sequences(n: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut prefix = Vec::with_capacity(n);
    fill_partitions(n, 2 * (n - 1), n - 1, &mut prefix, &mut out);
    out
}

fn fill_partitions(
    len: usize,
    total: usize,
    bound: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<DegreeSequence>,
) {
    let left = len - prefix.len();
    if left == 0 {
        if total == 0 {
            out.push(DegreeSequence::new(prefix.clone()).expect("built nonincreasing"));
        }
        return;
    }
    // remaining entries are positive and at most `bound`
    for e in (1..=bound.min(total)).rev() {
        if total - e < left - 1 || total - e > (left - 1) * e {
            continue;
        }
        prefix.push(e);
        fill_partitions(len, total - e, e, prefix, out);
        prefix.pop();
    }
}
