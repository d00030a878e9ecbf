//! Interactive mode: the human plays the hunters against the territory.

use crate::errors::CliResult;
use hunt_core::{Graph, VertexSet};
use std::io::{self, BufRead, Write};

pub fn play(g: &Graph, k: usize, blind: bool) -> CliResult<()> {
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    let mut territory = g.full_set();
    let mut round = 0usize;

    println!(
        "hunting with {k} hunter(s) on {} vertices; enter up to {k} vertices per round, q to quit",
        g.n()
    );
    loop {
        round += 1;
        if blind {
            println!("round {round}");
        } else {
            println!("round {round}: territory has {} vertices: {}", territory.len(), show(&territory));
        }
        let shot = loop {
            print!("shots> ");
            io::stdout().flush().ok();
            let Some(line) = lines.next() else {
                println!("no more input; giving up after {} rounds", round - 1);
                return Ok(());
            };
            let line = line.unwrap_or_default();
            let trimmed = line.trim();
            if trimmed == "q" || trimmed == "quit" {
                println!("giving up after {} rounds", round - 1);
                return Ok(());
            }
            match parse_shot(g, k, trimmed) {
                Ok(shot) => break shot,
                Err(msg) => println!("{msg}"),
            }
        };
        // R_1 = V \ W_1; thereafter the survivors move first.
        if round == 1 {
            territory.difference_with(&shot);
        } else {
            territory = g.neighborhood(&territory).expect("same universe");
            territory.difference_with(&shot);
        }
        if territory.is_empty() {
            println!("the rabbit is shot: you won in {round} rounds");
            return Ok(());
        }
    }
}

fn show(s: &VertexSet) -> String {
    let list: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    if list.is_empty() {
        "-".into()
    } else {
        list.join(" ")
    }
}

fn parse_shot(g: &Graph, k: usize, line: &str) -> Result<VertexSet, String> {
    let mut shot = VertexSet::empty(g.n());
    for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| format!("not a vertex: {tok:?}; try again"))?;
        if v >= g.n() {
            return Err(format!("vertex {v} out of range (n = {}); try again", g.n()));
        }
        shot.insert(v);
    }
    if shot.len() > k {
        return Err(format!("that is {} shots, you only have {k}; try again", shot.len()));
    }
    Ok(shot)
}
