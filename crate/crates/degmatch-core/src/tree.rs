//! Tree degree sequences: recognition, the closed-form interval of
//! achievable matching numbers, and constructive realizations.
//!
//! A sequence of at least two positive integers is a tree degree sequence
//! exactly when `n_1(d) = 2 + sum over d_i >= 2 of (d_i - 2)`. For such a
//! sequence with `n >= 3`, the achievable matching numbers are exactly the
//! integers between `min{k : d_1 + ... + d_k >= n - 1}` and
//! `min{floor(n/2), n - n_1(d)}`, and every value in between is hit by an
//! explicit construction:
//!
//! * [`realize_tree_nu_max`] builds a caterpillar for the subsequence
//!   without 2-entries, then reinserts each 2 by subdividing an edge at an
//!   exposed vertex of a maximum matching (any edge once no vertex is
//!   exposed). The result attains the upper endpoint.
//! * [`realize_tree_with_cover`] builds a tree in which a prescribed vertex
//!   set with large degrees is a minimum vertex cover, by peeling one cover
//!   vertex per step together with a star of leaves.
//! * [`realize_tree_with_nu`] specializes the cover construction to
//!   `X = {v_1, ..., v_nu}`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{DegreeSequence, LabeledTree};

/// Closed interval of matching numbers achievable by trees realizing a
/// degree sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeIntervalResult {
    pub nu_min: usize,
    pub nu_max: usize,
}

impl TreeIntervalResult {
    pub fn contains(&self, nu: usize) -> bool {
        self.nu_min <= nu && nu <= self.nu_max
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeRealizeError {
    /// The sequence fails the tree identity (or has zero entries / n < 2).
    NotTreeSequence,
    /// Interval and realization operations need at least 3 vertices.
    TooSmall { n: usize },
    /// A cover index is outside `1..=n`.
    CoverIndexOutOfRange { index: usize },
    /// Hypothesis (i): a cover vertex has degree 1.
    CoverContainsLowDegree { index: usize },
    /// Hypothesis (ii): more than `n/2` cover vertices.
    CoverTooLarge { size: usize, n: usize },
    /// Hypothesis (iii): the cover degrees do not dominate the rest.
    CoverDegreeSumTooSmall { cover_sum: u64, rest_sum: u64 },
    /// Requested matching number outside the achievable interval.
    NuOutOfRange {
        nu: usize,
        nu_min: usize,
        nu_max: usize,
    },
}

impl fmt::Display for TreeRealizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeRealizeError::NotTreeSequence => write!(f, "not a tree degree sequence"),
            TreeRealizeError::TooSmall { n } => {
                write!(f, "operation needs n >= 3 vertices, got {n}")
            }
            TreeRealizeError::CoverIndexOutOfRange { index } => {
                write!(f, "cover index v{index} is out of range")
            }
            TreeRealizeError::CoverContainsLowDegree { index } => {
                write!(f, "hypothesis (i) violated: cover vertex v{index} has degree 1")
            }
            TreeRealizeError::CoverTooLarge { size, n } => {
                write!(f, "hypothesis (ii) violated: |X| = {size} exceeds n/2 = {n}/2")
            }
            TreeRealizeError::CoverDegreeSumTooSmall { cover_sum, rest_sum } => write!(
                f,
                "hypothesis (iii) violated: cover degree sum {cover_sum} < remaining degree sum {rest_sum}"
            ),
            TreeRealizeError::NuOutOfRange { nu, nu_min, nu_max } => {
                write!(f, "nu = {nu} outside the achievable interval [{nu_min}, {nu_max}]")
            }
        }
    }
}

impl core::error::Error for TreeRealizeError {}

/// True exactly when `d` is the degree sequence of some tree: at least two
/// positive entries with `n_1(d) = 2 + sum over d_i >= 2 of (d_i - 2)`.
pub fn is_tree_degree_sequence(d: &DegreeSequence) -> bool {
    if d.len() < 2 || d.values().contains(&0) {
        return false;
    }
    let surplus: usize = d.values().iter().filter(|&&x| x >= 2).map(|&x| x - 2).sum();
    d.count_equal(1) == 2 + surplus
}

fn require_interval_input(d: &DegreeSequence) -> Result<(), TreeRealizeError> {
    if !is_tree_degree_sequence(d) {
        return Err(TreeRealizeError::NotTreeSequence);
    }
    if d.len() < 3 {
        return Err(TreeRealizeError::TooSmall { n: d.len() });
    }
    Ok(())
}

/// Largest achievable matching number: `min{floor(n/2), n - n_1(d)}`.
pub fn nu_max_tree(d: &DegreeSequence) -> Result<usize, TreeRealizeError> {
    require_interval_input(d)?;
    let n = d.len();
    Ok((n / 2).min(n - d.count_equal(1)))
}

/// Smallest achievable matching number: the least `k` whose degree prefix
/// sum reaches `n - 1`.
pub fn nu_min_tree(d: &DegreeSequence) -> Result<usize, TreeRealizeError> {
    require_interval_input(d)?;
    let n = d.len() as u64;
    let mut prefix = 0u64;
    for (i, &deg) in d.values().iter().enumerate() {
        prefix += deg as u64;
        if prefix >= n - 1 {
            return Ok(i + 1);
        }
    }
    unreachable!("degree sum 2(n-1) always reaches n-1")
}

/// The full interval; every integer inside is achievable, nothing outside is.
pub fn matching_interval_tree(d: &DegreeSequence) -> Result<TreeIntervalResult, TreeRealizeError> {
    Ok(TreeIntervalResult {
        nu_min: nu_min_tree(d)?,
        nu_max: nu_max_tree(d)?,
    })
}

/// A tree whose degree multiset equals `d` and whose matching number attains
/// [`nu_max_tree`]. Only the multiset is guaranteed, not which vertex gets
/// which degree.
pub fn realize_tree_nu_max(d: &DegreeSequence) -> Result<LabeledTree, TreeRealizeError> {
    require_interval_input(d)?;
    let base: Vec<usize> = d.values().iter().copied().filter(|&x| x != 2).collect();
    let two_count = d.len() - base.len();
    let (mut order, mut edges) = caterpillar(&base);
    for _ in 0..two_count {
        let tree = LabeledTree::new(order, edges.iter().copied())
            .expect("intermediate construction is a tree");
        let matching = crate::graph::tree_maximum_matching(&tree);
        let mut covered = vec![false; order + 1];
        for &(u, w) in &matching {
            covered[u] = true;
            covered[w] = true;
        }
        let fresh = order + 1;
        let (u, w) = match (1..=order).find(|&u| !covered[u]) {
            // subdivide an edge at an exposed vertex; the matching extends
            // by the new edge
            Some(u) => {
                let adj = tree.adjacency();
                (u, adj[u][0])
            }
            // perfect matching: subdivide the lexicographically smallest edge
            None => edges.iter().copied().min().expect("n >= 2 has an edge"),
        };
        let victim = (u.min(w), u.max(w));
        let at = edges
            .iter()
            .position(|&e| e == victim)
            .expect("edge exists");
        edges.swap_remove(at);
        edges.push((u.min(fresh), u.max(fresh)));
        edges.push((w.min(fresh), w.max(fresh)));
        order = fresh;
    }
    Ok(LabeledTree::new(order, edges).expect("construction yields a tree"))
}

/// Caterpillar for a tree degree sequence without 2-entries: a path over the
/// high-degree vertices with leaves attached to bring each to its degree.
fn caterpillar(base: &[usize]) -> (usize, Vec<(usize, usize)>) {
    let spine = base.iter().filter(|&&x| x >= 2).count();
    if spine == 0 {
        debug_assert_eq!(base, [1, 1]);
        return (2, vec![(1, 2)]);
    }
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i, i + 1)).collect();
    let mut next_leaf = spine + 1;
    for (idx, &deg) in base.iter().take(spine).enumerate() {
        let path_degree = match (spine, idx) {
            (1, _) => 0,
            (_, 0) => 1,
            (s, i) if i == s - 1 => 1,
            _ => 2,
        };
        for _ in 0..deg - path_degree {
            edges.push((idx + 1, next_leaf));
            next_leaf += 1;
        }
    }
    debug_assert_eq!(next_leaf - 1, base.len());
    (base.len(), edges)
}

/// A tree with `d(v_i) = d_i` for every vertex in which the given index set
/// is a minimum vertex cover (so its matching number equals the cover size).
///
/// The cover must satisfy: (i) every cover vertex has degree at least 2,
/// (ii) at most `n/2` vertices, (iii) the cover degrees sum to at least the
/// remaining degrees.
pub fn realize_tree_with_cover(
    d: &DegreeSequence,
    cover_indices: &BTreeSet<usize>,
) -> Result<LabeledTree, TreeRealizeError> {
    require_interval_input(d)?;
    let n = d.len();
    for &i in cover_indices {
        if i < 1 || i > n {
            return Err(TreeRealizeError::CoverIndexOutOfRange { index: i });
        }
        if d.degree(i) <= 1 {
            return Err(TreeRealizeError::CoverContainsLowDegree { index: i });
        }
    }
    if 2 * cover_indices.len() > n {
        return Err(TreeRealizeError::CoverTooLarge {
            size: cover_indices.len(),
            n,
        });
    }
    let cover_sum: u64 = cover_indices.iter().map(|&i| d.degree(i) as u64).sum();
    let rest_sum = d.sum() - cover_sum;
    if cover_sum < rest_sum {
        return Err(TreeRealizeError::CoverDegreeSumTooSmall {
            cover_sum,
            rest_sum,
        });
    }

    let entries: Vec<(usize, usize)> = (1..=n).map(|i| (i, d.degree(i))).collect();
    let edges = build_with_cover(entries, cover_indices.clone())?;
    Ok(LabeledTree::new(n, edges).expect("cover construction yields a tree"))
}

/// Recursive peeling on `(labeled degrees, cover label set)`; entries stay
/// positionally nonincreasing by degree throughout.
fn build_with_cover(
    mut entries: Vec<(usize, usize)>,
    mut cover: BTreeSet<usize>,
) -> Result<Vec<(usize, usize)>, TreeRealizeError> {
    debug_assert!(entries.windows(2).all(|w| w[0].1 >= w[1].1));
    let slack: usize = entries
        .iter()
        .filter(|(label, _)| !cover.contains(label))
        .map(|&(_, deg)| deg - 1)
        .sum();

    if slack == 0 {
        // Every non-cover vertex is a leaf, so the cover is exactly the set
        // of high-degree vertices and the maximum-matching-number tree for
        // this multiset has the cover as a minimum vertex cover. Relabel its
        // vertices (degree-descending) onto the entry labels.
        let multiset = DegreeSequence::new(entries.iter().map(|&(_, deg)| deg).collect())
            .expect("entries are nonincreasing");
        let base = realize_tree_nu_max(&multiset)?;
        let degrees = base.degrees();
        let mut by_degree: Vec<usize> = (1..=base.n()).collect();
        by_degree.sort_by(|&x, &y| degrees[y - 1].cmp(&degrees[x - 1]).then(x.cmp(&y)));
        let mut relabel = vec![0usize; base.n() + 1];
        for (pos, &fresh) in by_degree.iter().enumerate() {
            relabel[fresh] = entries[pos].0;
        }
        return Ok(base
            .edges()
            .map(|(u, v)| (relabel[u], relabel[v]))
            .collect());
    }

    // Pick the non-cover vertex to peel an edge from: the last position with
    // degree > 1 outside the cover. If its equal-degree class extends past it
    // the class tail is a cover vertex; swap the two labels (same degree) so
    // the peeled position is the last of its class and decrementing keeps
    // the entries sorted.
    let cand = entries
        .iter()
        .rposition(|(label, deg)| !cover.contains(label) && *deg > 1)
        .expect("slack > 0 gives a candidate");
    let class_degree = entries[cand].1;
    let last = entries
        .iter()
        .rposition(|&(_, deg)| deg == class_degree)
        .expect("class nonempty");
    if last != cand {
        debug_assert!(cover.contains(&entries[last].0));
        let (la, lb) = (entries[cand].0, entries[last].0);
        entries[cand].0 = lb;
        entries[last].0 = la;
    }
    let peel_pos = last;
    let peel_label = entries[peel_pos].0;

    // Cover vertex of minimum degree, largest label on ties.
    let (anchor_pos, anchor_label, anchor_degree) = entries
        .iter()
        .enumerate()
        .filter(|(_, (label, _))| cover.contains(label))
        .map(|(pos, &(label, deg))| (pos, label, deg))
        .min_by_key(|&(_, label, deg)| (deg, core::cmp::Reverse(label)))
        .expect("cover nonempty while slack > 0");

    // Remove the anchor and the trailing `anchor_degree - 1` leaves; they
    // become a star at the anchor, tied to the peeled vertex.
    let tail_start = entries.len() - (anchor_degree - 1);
    debug_assert!(entries[tail_start..].iter().all(|&(_, deg)| deg == 1));
    debug_assert!(peel_pos < tail_start && anchor_pos < tail_start);
    let star_leaves: Vec<usize> = entries[tail_start..]
        .iter()
        .map(|&(label, _)| label)
        .collect();
    entries.truncate(tail_start);
    entries.remove(anchor_pos);
    let peel_pos = if anchor_pos < peel_pos {
        peel_pos - 1
    } else {
        peel_pos
    };
    entries[peel_pos].1 -= 1;
    cover.remove(&anchor_label);

    let mut edges = build_with_cover(entries, cover)?;
    edges.push((peel_label, anchor_label));
    for leaf in star_leaves {
        edges.push((anchor_label, leaf));
    }
    Ok(edges)
}

/// A tree with `d(v_i) = d_i` and matching number exactly `nu`, via
/// [`realize_tree_with_cover`] with the first `nu` vertices as the cover.
pub fn realize_tree_with_nu(
    d: &DegreeSequence,
    nu: usize,
) -> Result<LabeledTree, TreeRealizeError> {
    let interval = matching_interval_tree(d)?;
    if !interval.contains(nu) {
        return Err(TreeRealizeError::NuOutOfRange {
            nu,
            nu_min: interval.nu_min,
            nu_max: interval.nu_max,
        });
    }
    let cover: BTreeSet<usize> = (1..=nu).collect();
    realize_tree_with_cover(d, &cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tree_matching_number;
    use crate::oracle;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn recognition() {
        assert!(is_tree_degree_sequence(&seq(&[2, 1, 1])));
        assert!(!is_tree_degree_sequence(&seq(&[3, 1, 1, 1, 1])));
        assert!(is_tree_degree_sequence(&seq(&[3, 3, 2, 1, 1, 1, 1])));
        assert!(is_tree_degree_sequence(&seq(&[1, 1])));
        assert!(!is_tree_degree_sequence(&seq(&[2, 2])));
        assert!(!is_tree_degree_sequence(&seq(&[1, 1, 0])));
        assert!(!is_tree_degree_sequence(&seq(&[1])));
        assert!(!is_tree_degree_sequence(&seq(&[])));
    }

    #[test]
    fn endpoint_formulas() {
        assert_eq!(nu_max_tree(&seq(&[2, 2, 1, 1])).unwrap(), 2);
        assert_eq!(nu_max_tree(&seq(&[4, 1, 1, 1, 1])).unwrap(), 1);
        assert_eq!(nu_max_tree(&seq(&[3, 3, 2, 1, 1, 1, 1])).unwrap(), 3);
        assert_eq!(nu_min_tree(&seq(&[2, 1, 1])).unwrap(), 1);
        assert_eq!(nu_min_tree(&seq(&[3, 3, 2, 1, 1, 1, 1])).unwrap(), 2);
        assert_eq!(nu_min_tree(&seq(&[2, 2, 2, 1, 1])).unwrap(), 2);
        assert!(matches!(
            nu_max_tree(&seq(&[1, 1])),
            Err(TreeRealizeError::TooSmall { .. })
        ));
        assert!(matches!(
            nu_max_tree(&seq(&[2, 2])),
            Err(TreeRealizeError::NotTreeSequence)
        ));
    }

    #[test]
    fn interval_examples() {
        let i = matching_interval_tree(&seq(&[2, 1, 1])).unwrap();
        assert_eq!((i.nu_min, i.nu_max), (1, 1));
        let i = matching_interval_tree(&seq(&[3, 3, 2, 1, 1, 1, 1])).unwrap();
        assert_eq!((i.nu_min, i.nu_max), (2, 3));
        let i = matching_interval_tree(&seq(&[4, 1, 1, 1, 1])).unwrap();
        assert_eq!((i.nu_min, i.nu_max), (1, 1));
    }

    #[test]
    fn realize_nu_max_examples() {
        for d in [
            seq(&[2, 1, 1]),
            seq(&[3, 3, 2, 1, 1, 1, 1]),
            seq(&[2, 2, 1, 1]),
            seq(&[2, 2, 2, 2, 1, 1]),
            seq(&[5, 2, 2, 1, 1, 1, 1, 1]),
        ] {
            let t = realize_tree_nu_max(&d).unwrap();
            let mut multiset = t.degrees();
            multiset.sort_unstable_by(|x, y| y.cmp(x));
            assert_eq!(multiset, d.values());
            assert_eq!(tree_matching_number(&t), nu_max_tree(&d).unwrap());
        }
    }

    #[test]
    fn realize_with_cover_examples() {
        let t = realize_tree_with_cover(&seq(&[2, 1, 1]), &BTreeSet::from([1])).unwrap();
        let edges: Vec<(usize, usize)> = t.edges().collect();
        assert_eq!(edges, vec![(1, 2), (1, 3)]);

        let d = seq(&[3, 3, 2, 1, 1, 1, 1]);
        let cover = BTreeSet::from([1, 2]);
        let t = realize_tree_with_cover(&d, &cover).unwrap();
        assert_eq!(t.degrees(), d.values());
        assert!(t
            .edges()
            .all(|(u, v)| cover.contains(&u) || cover.contains(&v)));
        assert_eq!(tree_matching_number(&t), 2);

        assert!(matches!(
            realize_tree_with_cover(&seq(&[2, 2, 1, 1]), &BTreeSet::from([3])),
            Err(TreeRealizeError::CoverContainsLowDegree { index: 3 })
        ));
    }

    #[test]
    fn cover_hypothesis_violations() {
        let d = seq(&[3, 3, 2, 1, 1, 1, 1]);
        assert!(matches!(
            realize_tree_with_cover(&d, &BTreeSet::from([1, 2, 3, 9])),
            Err(TreeRealizeError::CoverIndexOutOfRange { index: 9 })
        ));
        assert!(matches!(
            realize_tree_with_cover(&seq(&[2, 2, 2, 2, 2, 1, 1]), &BTreeSet::from([1, 2, 3, 4])),
            Err(TreeRealizeError::CoverTooLarge { .. })
        ));
        assert!(matches!(
            realize_tree_with_cover(&d, &BTreeSet::from([3])),
            Err(TreeRealizeError::CoverDegreeSumTooSmall { .. })
        ));
    }

    #[test]
    fn realize_with_nu_examples() {
        let t = realize_tree_with_nu(&seq(&[2, 1, 1]), 1).unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(tree_matching_number(&t), 1);

        let d = seq(&[3, 3, 2, 1, 1, 1, 1]);
        for nu in [2, 3] {
            let t = realize_tree_with_nu(&d, nu).unwrap();
            assert_eq!(t.degrees(), d.values());
            assert_eq!(tree_matching_number(&t), nu);
        }
        assert!(matches!(
            realize_tree_with_nu(&d, 4),
            Err(TreeRealizeError::NuOutOfRange { .. })
        ));
        assert!(matches!(
            realize_tree_with_nu(&d, 1),
            Err(TreeRealizeError::NuOutOfRange { .. })
        ));
    }

    #[test]
    fn interval_matches_oracle_up_to_seven_vertices() {
        let cap = oracle::EnumerationCap::default();
        for n in 3..=7 {
            for d in oracle::tree_degree_sequences(n) {
                assert!(is_tree_degree_sequence(&d));
                let interval = matching_interval_tree(&d).unwrap();
                let achieved = oracle::achievable_nu_set_tree(&d, cap).unwrap();
                let expected: alloc::collections::BTreeSet<usize> =
                    (interval.nu_min..=interval.nu_max).collect();
                assert_eq!(achieved, expected, "sequence {:?}", d.values());
                for nu in interval.nu_min..=interval.nu_max {
                    let t = realize_tree_with_nu(&d, nu).unwrap();
                    assert_eq!(t.degrees(), d.values());
                    assert_eq!(tree_matching_number(&t), nu);
                }
            }
        }
    }

    #[test]
    fn recognition_matches_oracle_nonemptiness() {
        let cap = oracle::EnumerationCap::default();
        // all nonincreasing positive sequences with the right sum, n <= 7
        for n in 2..=7usize {
            for d in oracle::tree_degree_sequences(n) {
                let count = oracle::enumerate_trees(&d, cap).unwrap().count();
                assert_eq!(is_tree_degree_sequence(&d), count > 0);
            }
        }
        // sequences with wrong sums are never tree sequences and enumerate empty
        for d in [seq(&[3, 1, 1, 1, 1]), seq(&[2, 2, 2]), seq(&[1, 1, 1])] {
            assert!(!is_tree_degree_sequence(&d));
            assert_eq!(oracle::enumerate_trees(&d, cap).unwrap().count(), 0);
        }
    }
}
