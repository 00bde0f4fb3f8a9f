//! The `verify` subcommand: exhaustive cross-checks of every closed formula
//! against enumeration, within user-provided bounds. Stops at the first
//! counterexample (exit 1) or prints a pass summary.

use std::collections::BTreeSet;

use degmatch_core::cuts::{check_inequalities, clean_cut_capacity, gale_ryser_check, CleanCutSpec};
use degmatch_core::flow::{
    build_network, flow_feasible, max_flow, realize_bipartite_with_nu, verify_canonical_structure,
    BipRealization,
};
use degmatch_core::graph::{maximum_matching, tree_matching_number};
use degmatch_core::oracle::{
    achievable_nu_set_bipartite, achievable_nu_set_tree, bipartite_degree_sequences,
    tree_degree_sequences, EnumerationCap, OracleError,
};
use degmatch_core::tree::{matching_interval_tree, realize_tree_with_nu};

use crate::output::{VerifyCounterexample, VerifySummary};
use crate::CliError;

fn oracle_cap() -> Result<EnumerationCap, CliError> {
    match std::env::var("DEGSEQ_ORACLE_CAP") {
        Ok(text) => {
            text.trim().parse::<u64>().map(EnumerationCap).map_err(|_| {
                CliError::Invalid(format!("DEGSEQ_ORACLE_CAP='{text}' is not a number"))
            })
        }
        Err(_) => Ok(EnumerationCap::default()),
    }
}

struct Tally {
    tree_sequences: usize,
    tree_witnesses: usize,
    bipartite_sequences: usize,
    nu_instances: usize,
    networks_checked: usize,
    skipped_capped: usize,
}

fn fail(kind: &'static str, detail: String) -> Result<(), CliError> {
    let out = VerifyCounterexample {
        status: "counterexample",
        kind,
        detail,
    };
    println!("{}", serde_json::to_string(&out).expect("serializes"));
    Err(CliError::Inconsistency(format!(
        "{kind} counterexample found"
    )))
}

pub fn run(max_n: usize, max_m: usize, max_deg: usize, max_tree_n: usize) -> Result<(), CliError> {
    let cap = oracle_cap()?;
    let mut tally = Tally {
        tree_sequences: 0,
        tree_witnesses: 0,
        bipartite_sequences: 0,
        nu_instances: 0,
        networks_checked: 0,
        skipped_capped: 0,
    };

    for n in 3..=max_tree_n {
        for d in tree_degree_sequences(n) {
            if d.values().first().copied().unwrap_or(0) > max_deg {
                continue;
            }
            let achieved = match achievable_nu_set_tree(&d, cap) {
                Ok(set) => set,
                Err(OracleError::CapExceeded { .. }) => {
                    tally.skipped_capped += 1;
                    continue;
                }
            };
            let interval = match matching_interval_tree(&d) {
                Ok(i) => i,
                Err(e) => return fail("tree-interval", format!("{:?}: {e}", d.values())),
            };
            let expected: BTreeSet<usize> = (interval.nu_min..=interval.nu_max).collect();
            if achieved != expected {
                return fail(
                    "tree-interval",
                    format!(
                        "{:?}: formula gives [{}, {}] but enumeration gives {achieved:?}",
                        d.values(),
                        interval.nu_min,
                        interval.nu_max
                    ),
                );
            }
            for nu in interval.nu_min..=interval.nu_max {
                let tree = match realize_tree_with_nu(&d, nu) {
                    Ok(t) => t,
                    Err(e) => {
                        return fail("tree-realize", format!("{:?} nu {nu}: {e}", d.values()))
                    }
                };
                if tree.degrees() != d.values() || tree_matching_number(&tree) != nu {
                    return fail(
                        "tree-realize",
                        format!("{:?} nu {nu}: wrong degrees or matching number", d.values()),
                    );
                }
                tally.tree_witnesses += 1;
            }
            tally.tree_sequences += 1;
        }
    }

    for dd in bipartite_degree_sequences(max_n, max_m, max_deg) {
        let achievable = match achievable_nu_set_bipartite(&dd, cap) {
            Ok(set) => set,
            Err(OracleError::CapExceeded { .. }) => {
                tally.skipped_capped += 1;
                continue;
            }
        };
        if gale_ryser_check(&dd) != !achievable.is_empty() {
            return fail("gale-ryser", format!("{dd:?}"));
        }
        let mut feasible = Vec::new();
        for nu in 0..=dd.n().min(dd.m()) {
            let by_inequalities = check_inequalities(&dd, nu);
            let by_flow = flow_feasible(&dd, nu).is_some();
            let by_oracle = achievable.contains(&nu);
            if by_inequalities != by_oracle || by_flow != by_oracle {
                return fail(
                    "nu-feasibility",
                    format!(
                        "{dd:?} nu {nu}: inequalities {by_inequalities}, flow {by_flow}, \
                         enumeration {by_oracle}"
                    ),
                );
            }
            if by_inequalities {
                feasible.push(nu);
            }
            match realize_bipartite_with_nu(&dd, nu) {
                Ok(BipRealization::Realized { graph, k }) => {
                    let (da, db) = graph.degree_vectors();
                    let ok = by_oracle
                        && da == dd.a.values()
                        && db == dd.b.values()
                        && maximum_matching(&graph).len() == nu
                        && verify_canonical_structure(&graph, nu, k);
                    if !ok {
                        return fail("realize", format!("{dd:?} nu {nu} k {k}"));
                    }
                }
                Ok(BipRealization::Infeasible(_)) => {
                    if by_oracle {
                        return fail("realize", format!("{dd:?} nu {nu}: missed realization"));
                    }
                }
                Err(e) => return fail("realize", format!("{dd:?} nu {nu}: {e}")),
            }
            tally.nu_instances += 1;

            // duality between the inequality capacities and the flow value
            if (1..=nu).all(|i| dd.a.degree(i) >= 1 && dd.b.degree(i) >= 1) {
                for k in 0..=nu {
                    let net = match build_network(&dd, nu, k) {
                        Ok(net) => net,
                        Err(e) => return fail("network", format!("{dd:?} nu {nu} k {k}: {e}")),
                    };
                    let flow_value = max_flow(&net).value;
                    let min_cut = (0..=k)
                        .flat_map(|p| (0..=(dd.n() - k)).map(move |q| CleanCutSpec { k, p, q }))
                        .map(|spec| clean_cut_capacity(&dd, nu, &spec).unwrap())
                        .min()
                        .expect("at least the empty spec");
                    if flow_value != min_cut {
                        return fail(
                            "duality",
                            format!("{dd:?} nu {nu} k {k}: flow {flow_value}, cut {min_cut}"),
                        );
                    }
                    tally.networks_checked += 1;
                }
            }
        }
        if !feasible.windows(2).all(|w| w[1] == w[0] + 1) {
            return fail("intervality", format!("{dd:?}: feasible set {feasible:?}"));
        }
        tally.bipartite_sequences += 1;
    }

    let summary = VerifySummary {
        status: "pass",
        tree_sequences: tally.tree_sequences,
        tree_witnesses: tally.tree_witnesses,
        bipartite_sequences: tally.bipartite_sequences,
        nu_instances: tally.nu_instances,
        networks_checked: tally.networks_checked,
        skipped_capped: tally.skipped_capped,
    };
    println!("{}", serde_json::to_string(&summary).expect("serializes"));
    Ok(())
}
