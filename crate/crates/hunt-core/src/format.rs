//! File formats.
//!
//! Graphs travel as edge-list text: optional `#` comment lines, a header
//! `n m`, then `m` lines `u v` with 0-based endpoints; `u u` denotes a loop.
//! Writing is deterministic (edges sorted lexicographically), so
//! `read(write(g)) == g`.
//!
//! Strategies, traces and escape walks travel as JSON with explicit
//! universe and budget fields.

use crate::error::{Error, Result};
use crate::game::{EscapeWalk, Strategy, TerritoryTrace};
use crate::graph::Graph;
use crate::vset::VertexSet;
use serde::{Deserialize, Serialize};

pub fn read_graph(text: &str) -> Result<Graph> {
    let parse = |line: usize, tok: &str| -> Result<usize> {
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("expected a non-negative integer, got {tok:?}"),
        })
    };
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected two fields, got {}", toks.len()),
            });
        }
        let (a, b) = (parse(lineno, toks[0])?, parse(lineno, toks[1])?);
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a >= n || b >= n {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("endpoint out of range for n={n}"),
                    });
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 1, message: "missing `n m` header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("header announced {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct StrategyFile {
    n: usize,
    k: usize,
    shots: Vec<Vec<usize>>,
}

pub fn write_strategy(s: &Strategy) -> String {
    let file = StrategyFile {
        n: s.universe(),
        k: s.budget(),
        shots: s.shots().iter().map(VertexSet::to_vec).collect(),
    };
    serde_json::to_string_pretty(&file).expect("strategy serializes")
}

pub fn read_strategy(text: &str) -> Result<Strategy> {
    let file: StrategyFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let shots = file
        .shots
        .iter()
        .map(|shot| {
            for &v in shot {
                if v >= file.n {
                    return Err(Error::VertexOutOfRange { vertex: v, n: file.n });
                }
            }
            Ok(VertexSet::from_iter(file.n, shot.iter().copied()))
        })
        .collect::<Result<Vec<_>>>()?;
    Strategy::new(file.n, file.k, shots)
}

pub fn trace_to_json(t: &TerritoryTrace) -> serde_json::Value {
    serde_json::json!({
        "start": t.start.to_vec(),
        "territories": t.territories.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
    })
}

pub fn walk_to_json(w: &EscapeWalk) -> serde_json::Value {
    serde_json::json!({ "walk": w.walk })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let p3 = read_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(p3, Graph::new(3, &[(0, 1), (1, 2)]).unwrap());
        let looped = read_graph("1 1\n0 0\n").unwrap();
        assert!(looped.has_loop(0));
        match read_graph("2 1\n0 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = read_graph("# a path\n\n3 2\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_count_mismatch() {
        assert!(matches!(read_graph("3 2\n0 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn round_trip() {
        let g = Graph::new(4, &[(2, 3), (0, 1), (1, 1), (0, 3)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(read_graph(&text).unwrap(), g);
        // deterministic ordering
        assert_eq!(text, "4 4\n0 1\n0 3\n1 1\n2 3\n");
    }

    #[test]
    fn strategy_round_trip() {
        let s = Strategy::new(
            4,
            1,
            vec![
                VertexSet::from_iter(4, [1]),
                VertexSet::from_iter(4, [2]),
                VertexSet::empty(4),
            ],
        )
        .unwrap();
        let text = write_strategy(&s);
        let back = read_strategy(&text).unwrap();
        assert_eq!(back.shots(), s.shots());
        assert_eq!(back.budget(), 1);
    }
}
