//! Rendering of results in the two output modes. Human text never contains
//! timing, so identical runs are byte-identical; the structured JSON carries
//! an `elapsed_ms` field as its only run-dependent value.

use crate::errors::{CliError, CliResult};
use hunt_core::construct::{StartSetGadgetLayout, ThreePartitionLayout};
use hunt_core::format::write_strategy;
use hunt_core::poly::{BoundsReport, CutShot, SeparatorPartition};
use hunt_core::recognize::{witness_edges, Method, RecognizerVerdict, SpiderKind, Witness};
use hunt_core::solver::{HuntOutcome, SolveOutcome};
use hunt_core::{Graph, SolverConfig, Strategy, Verdict, VertexSet};
use serde_json::{json, Value};
use std::time::Instant;

fn vertices(s: &VertexSet) -> String {
    let list: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    if list.is_empty() {
        "-".to_string()
    } else {
        list.join(" ")
    }
}

pub fn strategy_json(s: &Strategy) -> Value {
    serde_json::from_str(&write_strategy(s)).expect("strategy serializes as JSON")
}

fn print_strategy(s: &Strategy) {
    println!("strategy (budget {}, {} rounds):", s.budget(), s.len());
    for (t, shot) in s.shots().iter().enumerate() {
        println!("  round {}: {}", t + 1, vertices(shot));
    }
}

pub fn solve(
    g: &Graph,
    start: &VertexSet,
    k: Option<usize>,
    limit: Option<usize>,
    cfg: &SolverConfig,
    structured: bool,
) -> CliResult<()> {
    let query = json!({
        "n": g.n(),
        "k": k,
        "limit": limit,
        "start": start.to_vec(),
    });
    let begin = Instant::now();
    match k {
        Some(k) => {
            let report = hunt_core::solve_k(g, start, k, limit, cfg);
            let elapsed = begin.elapsed().as_millis() as u64;
            match report.outcome {
                SolveOutcome::Win(strategy) => {
                    if structured {
                        println!(
                            "{}",
                            json!({
                                "query": query,
                                "verdict": "win",
                                "strategy": strategy_json(&strategy),
                                "states_explored": report.explored,
                                "elapsed_ms": elapsed,
                            })
                        );
                    } else {
                        println!("verdict: {k} hunters win");
                        print_strategy(&strategy);
                        println!("states explored: {}", report.explored);
                    }
                    Ok(())
                }
                SolveOutcome::NoStrategy => {
                    if structured {
                        println!(
                            "{}",
                            json!({
                                "query": query,
                                "verdict": "no-strategy",
                                "states_explored": report.explored,
                                "elapsed_ms": elapsed,
                            })
                        );
                    } else {
                        println!("verdict: no winning strategy with {k} hunters");
                        println!("states explored: {}", report.explored);
                    }
                    Ok(())
                }
                SolveOutcome::Exhausted => Err(CliError::resource(format!(
                    "search gave up after {} states; verdict unknown",
                    report.explored
                ))),
            }
        }
        None => {
            let report = hunt_core::hunting_number(g, start, limit, cfg);
            let elapsed = begin.elapsed().as_millis() as u64;
            match report.outcome {
                HuntOutcome::Exact { value, strategy } => {
                    if structured {
                        println!(
                            "{}",
                            json!({
                                "query": query,
                                "value": value,
                                "strategy": strategy_json(&strategy),
                                "states_explored": report.explored,
                                "elapsed_ms": elapsed,
                            })
                        );
                    } else {
                        println!("hunting number: {value}");
                        print_strategy(&strategy);
                        println!("states explored: {}", report.explored);
                    }
                    Ok(())
                }
                HuntOutcome::Unknown { lower, upper, .. } => Err(CliError::resource(format!(
                    "value unknown, bracketed in [{lower}, {upper}] after {} states",
                    report.explored
                ))),
            }
        }
    }
}

pub fn verify(verdict: &Verdict, structured: bool) {
    match verdict {
        Verdict::Win(trace) => {
            if structured {
                println!(
                    "{}",
                    json!({
                        "verdict": "win",
                        "rounds": trace.territories.len(),
                        "trace": hunt_core::format::trace_to_json(trace),
                    })
                );
            } else {
                println!("verdict: win in {} rounds", trace.territories.len());
                for (t, r) in trace.territories.iter().enumerate() {
                    println!("  territory after round {}: {}", t + 1, vertices(r));
                }
            }
        }
        Verdict::Lose(walk) => {
            if structured {
                println!(
                    "{}",
                    json!({
                        "verdict": "lose",
                        "walk": hunt_core::format::walk_to_json(walk),
                    })
                );
            } else {
                let list: Vec<String> = walk.walk.iter().map(|v| v.to_string()).collect();
                println!("verdict: lose; escape walk: {}", list.join(" "));
            }
        }
    }
}

fn witness_kind(w: &Witness) -> &'static str {
    match w {
        Witness::Cycle(_) => "cycle",
        Witness::ConnectedLoops { .. } => "connected-loops",
        Witness::Spider(s) => match s.kind {
            SpiderKind::H1 => "h1",
            SpiderKind::H2 => "h2",
            SpiderKind::H3 => "h3",
            SpiderKind::H4 => "h4",
        },
    }
}

pub fn recognize(verdict: &RecognizerVerdict, structured: bool) {
    let method = match verdict.method {
        Method::Direct => "direct",
        Method::ViaDoubleCover => "via-bg",
    };
    if structured {
        let witness = verdict.witness.as_ref().map(|w| {
            json!({
                "kind": witness_kind(w),
                "edges": witness_edges(w),
            })
        });
        println!(
            "{}",
            json!({
                "one_hunter_win": verdict.one_hunter_win,
                "method": method,
                "witness": witness,
            })
        );
    } else {
        println!("one hunter wins: {} (method {method})", verdict.one_hunter_win);
        if let Some(w) = &verdict.witness {
            println!("forbidden subgraph: {}", witness_kind(w));
            for (u, v) in witness_edges(w) {
                println!("  {u} {v}");
            }
        }
    }
}

pub fn bounds(
    report: &BoundsReport,
    l: Option<usize>,
    layered: Option<&(usize, Vec<CutShot>)>,
    structured: bool,
) {
    if structured {
        let layered = layered.map(|(cut, shots)| {
            json!({
                "l": l,
                "cut": cut,
                "shots": shots
                    .iter()
                    .map(|s| json!({ "vertex": s.vertex, "round": s.round }))
                    .collect::<Vec<_>>(),
            })
        });
        println!(
            "{}",
            json!({
                "matching": report.matching,
                "vertex_cover": report.vertex_cover,
                "vc_double_cover": report.vc_double_cover,
                "degeneracy": report.degeneracy,
                "exact": report.exact,
                "chain": [
                    report.half_vc(),
                    report.matching,
                    report.half_vc_double_cover(),
                    report.vertex_cover,
                    report.double_matching(),
                    report.vc_double_cover,
                ],
                "layered": layered,
            })
        );
    } else {
        let quality = if report.exact { "exact" } else { "approximate (cap exceeded)" };
        println!("bounds ({quality}):");
        println!("  matching:              {}", report.matching);
        println!("  vertex cover:          {}", report.vertex_cover);
        println!("  vc of double cover:    {}", report.vc_double_cover);
        println!("  degeneracy:            {}", report.degeneracy);
        println!(
            "  chain: ceil(VC/2)={} <= M={} <= ceil(VCB/2)={} <= h2 <= VC={} <= 2M={} <= VCB={}",
            report.half_vc(),
            report.matching,
            report.half_vc_double_cover(),
            report.vertex_cover,
            report.double_matching(),
            report.vc_double_cover,
        );
        if let (Some(l), Some((cut, shots))) = (l, layered) {
            println!("  layered cut (l={l}): {cut}");
            for s in shots {
                println!("    shoot {} in round {}", s.vertex, s.round);
            }
        }
    }
}

pub fn separator(problem: &str, part: &SeparatorPartition, structured: bool) {
    if structured {
        println!(
            "{}",
            json!({
                "problem": problem,
                "objective": part.objective,
                "a": part.a.to_vec(),
                "b": part.b.to_vec(),
                "c": part.c.to_vec(),
                "d": part.d.as_ref().map(VertexSet::to_vec),
            })
        );
    } else {
        println!("{problem} objective: {}", part.objective);
        println!("  A: {}", vertices(&part.a));
        println!("  B: {}", vertices(&part.b));
        println!("  C: {}", vertices(&part.c));
        if let Some(d) = &part.d {
            println!("  D: {}", vertices(d));
        }
    }
}

pub fn three_partition_layout(layout: &ThreePartitionLayout) -> Value {
    json!({
        "numbers": layout.numbers,
        "groups": layout.group_count,
        "beta": layout.beta,
        "blocks": layout
            .blocks
            .iter()
            .map(|b| json!({ "name": b.name, "lo": b.lo, "hi": b.hi }))
            .collect::<Vec<_>>(),
        "start": layout.start.to_vec(),
    })
}

pub fn start_set_layout(layout: &StartSetGadgetLayout) -> Value {
    json!({
        "inner_n": layout.inner_n,
        "k": layout.k,
        "blocks": layout
            .blocks
            .iter()
            .map(|b| json!({ "name": b.name, "lo": b.lo, "hi": b.hi }))
            .collect::<Vec<_>>(),
        "start": layout.start.to_vec(),
    })
}
