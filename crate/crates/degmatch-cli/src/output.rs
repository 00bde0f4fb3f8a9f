//! JSON output shapes. Field order is fixed by declaration order and
//! optional fields are omitted entirely, so identical invocations print
//! identical bytes.

use serde::Serialize;

/// Where each entry of a sorted sequence came from in the user's input
/// (1-based); present only when sorting changed the order.
#[derive(Serialize, Default)]
pub struct SortedInput {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a_from: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_from: Option<Vec<usize>>,
}

impl SortedInput {
    fn is_empty(&self) -> bool {
        self.a.is_none() && self.a_from.is_none() && self.b.is_none() && self.b_from.is_none()
    }
}

fn skip_sorted(sorted: &SortedInput) -> bool {
    sorted.is_empty()
}

#[derive(Serialize)]
pub struct TreeCheckOut {
    pub is_tree_sequence: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sorted_from: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct TreeIntervalOut {
    pub nu_min: usize,
    pub nu_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sorted_from: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct TreeRealizeOut {
    pub n: usize,
    pub nu: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sorted_from: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct BipCheckOut {
    pub graphical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violated_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
    #[serde(flatten, skip_serializing_if = "skip_sorted")]
    pub sorted: SortedInput,
}

#[derive(Serialize)]
pub struct BipIntervalOut {
    pub empty: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_max: Option<usize>,
    #[serde(flatten, skip_serializing_if = "skip_sorted")]
    pub sorted: SortedInput,
}

#[derive(Serialize)]
pub struct BipRealizeOut {
    pub nu: usize,
    /// cover split that produced the realization (flow method only)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub edges: Vec<(usize, usize)>,
    #[serde(flatten, skip_serializing_if = "skip_sorted")]
    pub sorted: SortedInput,
}

#[derive(Serialize)]
pub struct BipInfeasibleOut {
    pub infeasible: bool,
    pub nu: usize,
    pub reason: String,
    #[serde(flatten, skip_serializing_if = "skip_sorted")]
    pub sorted: SortedInput,
}

#[derive(Serialize)]
pub struct WalkStepOut {
    /// [i, i', j, j']: removes (i, j), (i', j'); adds (i, j'), (i', j)
    pub swap: [usize; 4],
    /// matching number after applying the step
    pub nu: usize,
}

#[derive(Serialize)]
pub struct BipInterpolateOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infeasible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start_nu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start_edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk: Option<Vec<WalkStepOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<BipRealizeOut>,
    #[serde(flatten, skip_serializing_if = "skip_sorted")]
    pub sorted: SortedInput,
}

#[derive(Serialize)]
pub struct SwapPathOut {
    pub length: usize,
    pub steps: Vec<[usize; 4]>,
}

#[derive(Serialize)]
pub struct VerifySummary {
    pub status: &'static str,
    pub tree_sequences: usize,
    pub tree_witnesses: usize,
    pub bipartite_sequences: usize,
    pub nu_instances: usize,
    pub networks_checked: usize,
    pub skipped_capped: usize,
}

#[derive(Serialize)]
pub struct VerifyCounterexample {
    pub status: &'static str,
    pub kind: &'static str,
    pub detail: String,
}
