//! `degmatch`: which matching numbers can a degree sequence realize?
//!
//! Subcommands answer interval questions (`tree-interval`, `bip-interval`),
//! construct witness realizations (`tree-realize`, `bip-realize`,
//! `bip-interpolate`), transform realizations into each other (`swap-path`),
//! and cross-check all formulas against exhaustive enumeration (`verify`).
//!
//! Output is JSON on stdout (plain edge lists with `--format edges`);
//! diagnostics go to stderr. Exit codes: 0 = answered (an infeasible or
//! empty answer is still an answer), 2 = invalid input, 1 = internal
//! inconsistency.

mod output;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use degmatch_core::cuts::{
    gale_ryser_check, matching_interval_bipartite, matching_interval_bipartite_linear,
    BipartiteIntervalResult,
};
use degmatch_core::flow::{realize_bipartite_with_nu, BipRealization, InfeasibilityReason};
use degmatch_core::graph::{maximum_matching, tree_matching_number};
use degmatch_core::swap::{apply_swap, interpolation_walk, swap_path, SwapStep};
use degmatch_core::tree::{
    is_tree_degree_sequence, matching_interval_tree, realize_tree_with_nu, TreeRealizeError,
};
use degmatch_core::{BipartiteDegreeSequence, DegreeSequence, LabeledBipartiteGraph, LabeledTree};

use output::*;

#[derive(Parser)]
#[command(
    name = "degmatch",
    about = "Matching numbers of tree and bipartite degree sequence realizations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Flow,
    Swap,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a sequence is a tree degree sequence
    TreeCheck {
        /// comma-separated degrees, e.g. 3,3,2,1,1,1,1
        #[arg(long)]
        seq: String,
    },
    /// Interval of matching numbers achievable by trees with the sequence
    TreeInterval {
        #[arg(long)]
        seq: String,
    },
    /// Build a tree with the given degrees and matching number
    TreeRealize {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        nu: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Gale-Ryser realizability check for a bipartite degree sequence
    BipCheck {
        /// comma-separated A-side degrees
        #[arg(long)]
        a: String,
        /// comma-separated B-side degrees
        #[arg(long)]
        b: String,
    },
    /// Interval of matching numbers achievable by realizations of (a, b)
    BipInterval {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// probe every value instead of binary-searching the endpoints
        #[arg(long)]
        linear_scan: bool,
    },
    /// Build a realization of (a, b) with the given matching number
    BipRealize {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        nu: usize,
        #[arg(long, value_enum, default_value = "flow")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Emit the full swap walk between extremal realizations, tracking nu
    BipInterpolate {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// also report the first graph along the walk with this nu
        #[arg(long)]
        nu: Option<usize>,
    },
    /// Swap sequence transforming one realization into another
    SwapPath {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// semicolon-separated edges i-j, e.g. "1-1;2-2" (empty for none)
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
    },
    /// Cross-check formulas, inequalities, and flows against enumeration
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_deg: usize,
        /// largest tree order swept (trees use max_deg as a degree bound)
        #[arg(long, default_value_t = 8)]
        max_tree_n: usize,
    },
}

enum CliError {
    /// exit code 2
    Invalid(String),
    /// exit code 1
    Inconsistency(String),
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Inconsistency(msg)) => {
            eprintln!("internal inconsistency: {msg}");
            ExitCode::from(1)
        }
    }
}

fn parse_values(text: &str) -> Result<Vec<usize>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| invalid(format!("malformed degree '{part}' in sequence '{text}'")))
        })
        .collect()
}

/// Sorts user input nonincreasingly; reports where each sorted entry came
/// from (1-based) when the order changed.
fn prepare_sequence(text: &str) -> Result<(DegreeSequence, Option<Vec<usize>>), CliError> {
    let values = parse_values(text)?;
    let already_sorted = values.windows(2).all(|w| w[0] >= w[1]);
    let (seq, positions) = DegreeSequence::from_unsorted(values);
    Ok((seq, (!already_sorted).then_some(positions)))
}

fn prepare_pair(a: &str, b: &str) -> Result<(BipartiteDegreeSequence, SortedInput), CliError> {
    let (a, a_from) = prepare_sequence(a)?;
    let (b, b_from) = prepare_sequence(b)?;
    let sorted = SortedInput {
        a: a_from.is_some().then(|| a.values().to_vec()),
        a_from,
        b: b_from.is_some().then(|| b.values().to_vec()),
        b_from,
    };
    Ok((BipartiteDegreeSequence::new(a, b), sorted))
}

fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|pair| {
            let mut parts = pair.trim().split('-');
            let bad = || invalid(format!("malformed edge '{pair}' (expected i-j)"));
            let i = parts
                .next()
                .ok_or_else(bad)?
                .trim()
                .parse()
                .map_err(|_| bad())?;
            let j = parts
                .next()
                .ok_or_else(bad)?
                .trim()
                .parse()
                .map_err(|_| bad())?;
            if parts.next().is_some() {
                return Err(bad());
            }
            Ok((i, j))
        })
        .collect()
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("output serializes")
    );
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::TreeCheck { seq } => {
            let (d, sorted_from) = prepare_sequence(&seq)?;
            print_json(&TreeCheckOut {
                is_tree_sequence: is_tree_degree_sequence(&d),
                sorted_from,
            });
            Ok(())
        }
        Command::TreeInterval { seq } => {
            let (d, sorted_from) = prepare_sequence(&seq)?;
            // the single edge is the unique tree on two vertices
            let (nu_min, nu_max) = if d.values() == [1, 1] {
                (1, 1)
            } else {
                let interval = matching_interval_tree(&d).map_err(tree_error)?;
                (interval.nu_min, interval.nu_max)
            };
            print_json(&TreeIntervalOut {
                nu_min,
                nu_max,
                sorted_from,
            });
            Ok(())
        }
        Command::TreeRealize { seq, nu, format } => {
            let (d, sorted_from) = prepare_sequence(&seq)?;
            let tree = if d.values() == [1, 1] {
                if nu != 1 {
                    return Err(invalid(format!(
                        "nu = {nu} outside the achievable interval [1, 1]"
                    )));
                }
                LabeledTree::new(2, [(1, 2)]).expect("single edge")
            } else {
                realize_tree_with_nu(&d, nu).map_err(tree_error)?
            };
            verify_tree_output(&d, nu, &tree)?;
            match format {
                Format::Edges => {
                    for (u, v) in tree.edges() {
                        println!("v{u} v{v}");
                    }
                }
                Format::Json => print_json(&TreeRealizeOut {
                    n: tree.n(),
                    nu,
                    edges: tree.edges().collect(),
                    sorted_from,
                }),
            }
            Ok(())
        }
        Command::BipCheck { a, b } => {
            let (dd, sorted) = prepare_pair(&a, &b)?;
            let graphical = gale_ryser_check(&dd);
            let mut out = BipCheckOut {
                graphical,
                violated_k: None,
                reason: None,
                sorted,
            };
            if !graphical {
                if !dd.sums_match() {
                    out.reason = Some("sum-mismatch");
                } else {
                    out.violated_k = first_violated_k(&dd);
                }
            }
            print_json(&out);
            Ok(())
        }
        Command::BipInterval { a, b, linear_scan } => {
            let (dd, sorted) = prepare_pair(&a, &b)?;
            let interval = if linear_scan {
                matching_interval_bipartite_linear(&dd)
            } else {
                matching_interval_bipartite(&dd)
            };
            let out = match interval {
                BipartiteIntervalResult::Empty => BipIntervalOut {
                    empty: true,
                    nu_min: None,
                    nu_max: None,
                    sorted,
                },
                BipartiteIntervalResult::Range { nu_min, nu_max } => BipIntervalOut {
                    empty: false,
                    nu_min: Some(nu_min),
                    nu_max: Some(nu_max),
                    sorted,
                },
            };
            print_json(&out);
            Ok(())
        }
        Command::BipRealize {
            a,
            b,
            nu,
            method,
            format,
        } => {
            let (dd, sorted) = prepare_pair(&a, &b)?;
            if nu > dd.n().min(dd.m()) {
                return Err(invalid(format!(
                    "nu = {nu} exceeds min(n, m) = {}",
                    dd.n().min(dd.m())
                )));
            }
            let realized = match method {
                Method::Flow => {
                    match realize_bipartite_with_nu(&dd, nu).map_err(|e| invalid(e.to_string()))? {
                        BipRealization::Realized { graph, k } => Some((graph, Some(k))),
                        BipRealization::Infeasible(inf) => {
                            emit_infeasible(&format, nu, infeasibility_label(&inf.reason), sorted);
                            return Ok(());
                        }
                    }
                }
                Method::Swap => match degmatch_core::swap::interpolate_nu(&dd, nu) {
                    Ok(graph) => Some((graph, None)),
                    Err(e) => {
                        emit_infeasible(&format, nu, e.to_string(), sorted);
                        return Ok(());
                    }
                },
            };
            let (graph, k) = realized.expect("infeasible cases returned above");
            verify_bip_output(&dd, nu, &graph)?;
            match format {
                Format::Edges => {
                    for (i, j) in graph.edges() {
                        println!("v{i} w{j}");
                    }
                }
                Format::Json => print_json(&BipRealizeOut {
                    nu,
                    k,
                    edges: graph.edges().collect(),
                    sorted,
                }),
            }
            Ok(())
        }
        Command::BipInterpolate { a, b, nu } => {
            let (dd, sorted) = prepare_pair(&a, &b)?;
            if let Some(nu) = nu {
                if nu > dd.n().min(dd.m()) {
                    return Err(invalid(format!(
                        "nu = {nu} exceeds min(n, m) = {}",
                        dd.n().min(dd.m())
                    )));
                }
            }
            let walk = match interpolation_walk(&dd) {
                Ok(walk) => walk,
                Err(e) => {
                    print_json(&BipInterpolateOut {
                        infeasible: Some(true),
                        reason: Some(e.to_string()),
                        start_nu: None,
                        start_edges: None,
                        walk: None,
                        result: None,
                        sorted,
                    });
                    return Ok(());
                }
            };
            let steps: Vec<WalkStepOut> = walk
                .steps
                .iter()
                .map(|&(s, nu_after)| WalkStepOut {
                    swap: [s.i, s.i_prime, s.j, s.j_prime],
                    nu: nu_after,
                })
                .collect();
            let result = match nu {
                Some(target) => match walk.first_with_nu(target) {
                    Some(g) => {
                        verify_bip_output(&dd, target, &g)?;
                        Some(BipRealizeOut {
                            nu: target,
                            k: None,
                            edges: g.edges().collect(),
                            sorted: SortedInput::default(),
                        })
                    }
                    None => {
                        print_json(&BipInterpolateOut {
                            infeasible: Some(true),
                            reason: Some(format!("nu = {target} outside the walk's range")),
                            start_nu: Some(walk.start_nu),
                            start_edges: Some(walk.start.edges().collect()),
                            walk: Some(steps),
                            result: None,
                            sorted,
                        });
                        return Ok(());
                    }
                },
                None => None,
            };
            print_json(&BipInterpolateOut {
                infeasible: None,
                reason: None,
                start_nu: Some(walk.start_nu),
                start_edges: Some(walk.start.edges().collect()),
                walk: Some(steps),
                result,
                sorted,
            });
            Ok(())
        }
        Command::SwapPath { n, m, g1, g2 } => {
            let e1 = parse_edges(&g1)?;
            let e2 = parse_edges(&g2)?;
            let g1 = LabeledBipartiteGraph::new(n, m, e1).map_err(|e| invalid(e.to_string()))?;
            let g2 = LabeledBipartiteGraph::new(n, m, e2).map_err(|e| invalid(e.to_string()))?;
            let path = swap_path(&g1, &g2).map_err(|e| invalid(e.to_string()))?;
            let mut replay = g1.clone();
            for step in &path {
                replay = apply_swap(&replay, step).map_err(|e| {
                    CliError::Inconsistency(format!("recorded step failed to replay: {e}"))
                })?;
            }
            if replay != g2 {
                return Err(CliError::Inconsistency(
                    "swap path replay did not reach the target graph".into(),
                ));
            }
            print_json(&SwapPathOut {
                length: path.len(),
                steps: path
                    .iter()
                    .map(|s: &SwapStep| [s.i, s.i_prime, s.j, s.j_prime])
                    .collect(),
            });
            Ok(())
        }
        Command::Verify {
            max_n,
            max_m,
            max_deg,
            max_tree_n,
        } => verify::run(max_n, max_m, max_deg, max_tree_n),
    }
}

fn tree_error(e: TreeRealizeError) -> CliError {
    invalid(e.to_string())
}

fn first_violated_k(dd: &BipartiteDegreeSequence) -> Option<usize> {
    let mut prefix = 0u64;
    for k in 1..=dd.n() {
        prefix += dd.a.degree(k) as u64;
        let rhs: u64 = dd.b.values().iter().map(|&bj| bj.min(k) as u64).sum();
        if prefix > rhs {
            return Some(k);
        }
    }
    None
}

fn infeasibility_label(reason: &InfeasibilityReason) -> String {
    match reason {
        InfeasibilityReason::SumMismatch { sum_a, sum_b } => {
            format!("degree sums differ ({sum_a} vs {sum_b})")
        }
        InfeasibilityReason::ZeroDegreeMatched { side, index } => {
            format!("matched position {index} on side {side} has degree 0")
        }
        InfeasibilityReason::FlowShort { target, attempts } => {
            let tried: Vec<String> = attempts.iter().map(|(k, v)| format!("k={k}:{v}")).collect();
            format!("no k reaches flow value {target} ({})", tried.join(", "))
        }
    }
}

fn emit_infeasible(format: &Format, nu: usize, reason: String, sorted: SortedInput) {
    match format {
        Format::Edges => eprintln!("infeasible: {reason}"),
        Format::Json => print_json(&BipInfeasibleOut {
            infeasible: true,
            nu,
            reason,
            sorted,
        }),
    }
}

/// Emitted realizations are re-checked before printing.
fn verify_tree_output(d: &DegreeSequence, nu: usize, tree: &LabeledTree) -> Result<(), CliError> {
    let reparsed = LabeledTree::new(tree.n(), tree.edges())
        .map_err(|e| CliError::Inconsistency(format!("emitted tree invalid: {e}")))?;
    if reparsed.degrees() != d.values() && d.values() != [1, 1] {
        return Err(CliError::Inconsistency(
            "emitted tree degrees differ".into(),
        ));
    }
    if tree_matching_number(&reparsed) != nu {
        return Err(CliError::Inconsistency(
            "emitted tree has the wrong matching number".into(),
        ));
    }
    Ok(())
}

fn verify_bip_output(
    dd: &BipartiteDegreeSequence,
    nu: usize,
    graph: &LabeledBipartiteGraph,
) -> Result<(), CliError> {
    let reparsed = LabeledBipartiteGraph::new(graph.n(), graph.m(), graph.edges())
        .map_err(|e| CliError::Inconsistency(format!("emitted graph invalid: {e}")))?;
    let (da, db) = reparsed.degree_vectors();
    if da != dd.a.values() || db != dd.b.values() {
        return Err(CliError::Inconsistency(
            "emitted graph degrees differ".into(),
        ));
    }
    if maximum_matching(&reparsed).len() != nu {
        return Err(CliError::Inconsistency(
            "emitted graph has the wrong matching number".into(),
        ));
    }
    Ok(())
}
