//! Exact computation of hunting numbers by reachability search over rabbit
//! territories.
//!
//! States are territories; shooting `W ⊆ N(R)` moves `R` to `N(R) \ W`. Two
//! reductions keep the branching factor down without losing completeness:
//! shots outside `N(R)` (outside the start set in round one) never change the
//! trace, and shooting fewer than `k` vertices never helps, so exactly
//! `min(k, |N(R)|)` vertices are shot. A visited territory dominates every
//! superset of itself — any continuation clearing the superset clears it too,
//! and it was reached no later — so candidate supersets are pruned against an
//! antichain of minimal visited territories.
//!
//! The search is breadth-first, which makes returned strategies shortest, and
//! fully deterministic: successors are generated in lexicographic shot order
//! and merged sequentially, so results (including the explored-state count)
//! do not depend on the worker count.

use crate::error::{Error, Result};
use crate::game::Strategy;
use crate::graph::{degeneracy, Graph};
use crate::vset::VertexSet;
use rayon::prelude::*;
use std::collections::HashSet;
use std::time::{Duration, Instant};

/// Default cap on visited territory states.
pub const DEFAULT_STATE_CAP: usize = 10_000_000;

/// Default cap on the number of shot-set sequences the brute-force
/// enumeration oracle will try.
pub const DEFAULT_ENUM_CAP: u64 = 100_000_000;

/// Frontier states expanded per parallel batch; bounds peak candidate memory.
const CHUNK: usize = 256;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Give up (reporting an explicitly unknown outcome) after visiting this
    /// many territory states.
    pub state_cap: usize,
    /// Optional wall-clock guard; exceeding it is reported as unknown.
    pub time_limit: Option<Duration>,
    /// Disable parallel frontier expansion. Results are identical either way.
    pub single_thread: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { state_cap: DEFAULT_STATE_CAP, time_limit: None, single_thread: false }
    }
}

/// Outcome of a fixed-budget solve. `NoStrategy` is a certificate (the search
/// space was exhausted); `Exhausted` means a resource guard fired and says
/// nothing about winnability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Win(Strategy),
    NoStrategy,
    Exhausted,
}

#[derive(Clone, Debug)]
pub struct KReport {
    pub outcome: SolveOutcome,
    pub explored: usize,
}

/// Result of a hunting-number computation. `Unknown` brackets the value when
/// some budget hit a resource guard before the least winning budget was
/// certified; the strategy then witnesses the upper end of the bracket.
#[derive(Clone, Debug)]
pub enum HuntOutcome {
    Exact { value: usize, strategy: Strategy },
    Unknown { lower: usize, upper: usize, strategy: Strategy },
}

#[derive(Clone, Debug)]
pub struct HuntReport {
    pub outcome: HuntOutcome,
    pub explored: usize,
}

impl HuntReport {
    /// The exact value, if the search certified one.
    pub fn value(&self) -> Option<usize> {
        match &self.outcome {
            HuntOutcome::Exact { value, .. } => Some(*value),
            HuntOutcome::Unknown { .. } => None,
        }
    }

    pub fn strategy(&self) -> &Strategy {
        match &self.outcome {
            HuntOutcome::Exact { strategy, .. } | HuntOutcome::Unknown { strategy, .. } => strategy,
        }
    }
}

struct StateRec {
    territory: VertexSet,
    parent: u32,
    shot: VertexSet,
}

const NO_PARENT: u32 = u32::MAX;

/// Antichain of minimal visited territories, bucketed by cardinality so the
/// dominance test only scans sets small enough to be subsets.
struct Antichain {
    buckets: Vec<Vec<VertexSet>>,
}

impl Antichain {
    fn new(n: usize) -> Self {
        Antichain { buckets: vec![Vec::new(); n + 1] }
    }

    fn dominates(&self, candidate: &VertexSet) -> bool {
        let sz = candidate.len();
        self.buckets[..=sz]
            .iter()
            .any(|b| b.iter().any(|s| s.is_subset(candidate)))
    }

    fn insert(&mut self, set: VertexSet) {
        let sz = set.len();
        for bucket in &mut self.buckets[sz + 1..] {
            bucket.retain(|s| !set.is_subset(s));
        }
        self.buckets[sz].push(set);
    }
}

struct Candidate {
    parent: u32,
    shot: VertexSet,
    territory: VertexSet,
}

enum Merge {
    Inserted,
    Pruned,
    Won(Candidate),
    Capped,
}

struct Search {
    states: Vec<StateRec>,
    visited: HashSet<VertexSet>,
    antichain: Antichain,
    frontier: Vec<u32>,
    cap: usize,
}

impl Search {
    fn new(n: usize, cap: usize) -> Self {
        Search {
            states: Vec::new(),
            visited: HashSet::new(),
            antichain: Antichain::new(n),
            frontier: Vec::new(),
            cap,
        }
    }

    fn merge(&mut self, cand: Candidate) -> Merge {
        if cand.territory.is_empty() {
            return Merge::Won(cand);
        }
        if self.visited.contains(&cand.territory) || self.antichain.dominates(&cand.territory) {
            return Merge::Pruned;
        }
        if self.states.len() >= self.cap {
            return Merge::Capped;
        }
        self.visited.insert(cand.territory.clone());
        self.antichain.insert(cand.territory.clone());
        self.frontier.push(self.states.len() as u32);
        self.states.push(StateRec {
            territory: cand.territory,
            parent: cand.parent,
            shot: cand.shot,
        });
        Merge::Inserted
    }

    fn reconstruct(&self, budget: usize, n: usize, last: Candidate) -> Strategy {
        let mut shots = vec![last.shot];
        let mut cur = last.parent;
        while cur != NO_PARENT {
            let rec = &self.states[cur as usize];
            shots.push(rec.shot.clone());
            cur = rec.parent;
        }
        shots.reverse();
        Strategy::new(n, budget, shots).expect("solver shots satisfy the budget")
    }
}

/// Calls `f` on every size-`k` subset of `items`, in lexicographic order.
fn for_each_combination(items: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let remaining = k - cur.len();
        for i in start..=items.len() - remaining {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if k <= items.len() {
        rec(items, k, 0, &mut Vec::with_capacity(k), f);
    }
}

fn expand(g: &Graph, k: usize, parent: u32, territory: &VertexSet, can_continue: bool) -> Vec<Candidate> {
    let nr = g.nbhd(territory);
    if nr.len() <= k {
        // Shooting all of N(R) ends the game right here.
        return vec![Candidate { parent, shot: nr, territory: VertexSet::empty(g.n()) }];
    }
    if !can_continue {
        return Vec::new();
    }
    let items = nr.to_vec();
    let mut out = Vec::new();
    for_each_combination(&items, k, &mut |combo| {
        let shot = VertexSet::from_iter(g.n(), combo.iter().copied());
        let territory = nr.difference(&shot);
        out.push(Candidate { parent, shot, territory });
    });
    out
}

/// Decides whether `k` hunters can clear `start` (within `limit` rounds when
/// given). On a win the reconstructed strategy is shortest and deterministic;
/// a negative verdict is certified by exhausting the dominance-pruned state
/// space.
pub fn solve_k(
    g: &Graph,
    start: &VertexSet,
    k: usize,
    limit: Option<usize>,
    cfg: &SolverConfig,
) -> KReport {
    debug_assert_eq!(start.universe(), g.n());
    let begin = Instant::now();
    let n = g.n();
    let strategy = |shots: Vec<VertexSet>| {
        Strategy::new(n, k, shots).expect("solver shots satisfy the budget")
    };

    if start.is_empty() {
        return KReport { outcome: SolveOutcome::Win(strategy(vec![])), explored: 0 };
    }
    if limit == Some(0) {
        return KReport { outcome: SolveOutcome::NoStrategy, explored: 0 };
    }
    if start.len() <= k {
        return KReport { outcome: SolveOutcome::Win(strategy(vec![start.clone()])), explored: 0 };
    }

    let mut search = Search::new(n, cfg.state_cap);

    // Round one: shots come from the start set; |start| > k, so no win yet.
    let start_vertices = start.to_vec();
    let mut initial = Vec::new();
    for_each_combination(&start_vertices, k, &mut |combo| {
        let shot = VertexSet::from_iter(n, combo.iter().copied());
        let territory = start.difference(&shot);
        initial.push(Candidate { parent: NO_PARENT, shot, territory });
    });
    for cand in initial {
        match search.merge(cand) {
            Merge::Capped => {
                return KReport { outcome: SolveOutcome::Exhausted, explored: search.states.len() }
            }
            Merge::Won(_) => unreachable!("round-one territories are nonempty"),
            _ => {}
        }
    }

    let mut depth = 1usize;
    loop {
        if search.frontier.is_empty() {
            return KReport { outcome: SolveOutcome::NoStrategy, explored: search.states.len() };
        }
        if limit == Some(depth) {
            // No rounds left to shoot in.
            return KReport { outcome: SolveOutcome::NoStrategy, explored: search.states.len() };
        }
        if let Some(tl) = cfg.time_limit {
            if begin.elapsed() > tl {
                return KReport { outcome: SolveOutcome::Exhausted, explored: search.states.len() };
            }
        }

        let can_continue = limit.map_or(true, |l| depth + 1 < l);
        let frontier = std::mem::take(&mut search.frontier);
        for chunk in frontier.chunks(CHUNK) {
            let work: Vec<(u32, VertexSet)> = chunk
                .iter()
                .map(|&i| (i, search.states[i as usize].territory.clone()))
                .collect();
            let expand_one =
                |(idx, territory): &(u32, VertexSet)| expand(g, k, *idx, territory, can_continue);
            let batches: Vec<Vec<Candidate>> = if cfg.single_thread {
                work.iter().map(expand_one).collect()
            } else {
                work.par_iter().map(expand_one).collect()
            };
            for cand in batches.into_iter().flatten() {
                match search.merge(cand) {
                    Merge::Won(win) => {
                        let explored = search.states.len();
                        return KReport {
                            outcome: SolveOutcome::Win(search.reconstruct(k, n, win)),
                            explored,
                        };
                    }
                    Merge::Capped => {
                        return KReport {
                            outcome: SolveOutcome::Exhausted,
                            explored: search.states.len(),
                        }
                    }
                    _ => {}
                }
            }
        }
        depth += 1;
    }
}

/// Least budget that wins from `start` (within `limit` rounds when given), by
/// ascending search. The ascent starts at the degeneracy lower bound when the
/// rabbit may start anywhere (valid for any round limit, since limits only
/// raise the hunting number) and at zero for restricted start sets, which
/// degeneracy does not bound. The witness strategy is included.
///
/// `limit` must be at least 1 when present.
pub fn hunting_number(
    g: &Graph,
    start: &VertexSet,
    limit: Option<usize>,
    cfg: &SolverConfig,
) -> HuntReport {
    assert!(
        limit.map_or(true, |l| l >= 1) || start.is_empty(),
        "round limit must be at least 1"
    );
    let full_start = *start == g.full_set();
    let mut lower = if full_start { degeneracy(g) } else { 0 };
    let mut unknown_below = false;
    let mut explored = 0usize;
    for k in lower..=start.len() {
        let report = solve_k(g, start, k, limit, cfg);
        explored += report.explored;
        match report.outcome {
            SolveOutcome::Win(strategy) => {
                let outcome = if unknown_below {
                    HuntOutcome::Unknown { lower, upper: k, strategy }
                } else {
                    HuntOutcome::Exact { value: k, strategy }
                };
                return HuntReport { outcome, explored };
            }
            SolveOutcome::NoStrategy => {
                if !unknown_below {
                    lower = k + 1;
                }
            }
            SolveOutcome::Exhausted => unknown_below = true,
        }
    }
    unreachable!("shooting the whole start set always wins");
}

/// Brute-force verdict: tries every shot-set sequence of length `rounds` with
/// shots of size at most `budget`, checking each with the game engine.
/// Independent of the territory search and used as its oracle. Errors out
/// when the sequence count exceeds `cap`.
pub fn brute_force_wins(
    g: &Graph,
    budget: usize,
    rounds: usize,
    start: &VertexSet,
    cap: u64,
) -> Result<bool> {
    if start.is_empty() {
        return Ok(true);
    }
    if rounds == 0 {
        return Ok(false);
    }
    let n = g.n();
    let vertices: Vec<usize> = (0..n).collect();
    let mut shots: Vec<VertexSet> = Vec::new();
    for size in 0..=budget.min(n) {
        for_each_combination(&vertices, size, &mut |combo| {
            shots.push(VertexSet::from_iter(n, combo.iter().copied()));
        });
    }
    match (shots.len() as u64).checked_pow(rounds as u32) {
        Some(total) if total <= cap => {}
        _ => {
            return Err(Error::CapExceeded(format!(
                "{} shot sets over {rounds} rounds",
                shots.len()
            )))
        }
    }

    let mut odometer = vec![0usize; rounds];
    loop {
        let seq: Vec<VertexSet> = odometer.iter().map(|&i| shots[i].clone()).collect();
        let strat = Strategy::new(n, budget, seq).expect("enumerated shots fit the budget");
        if crate::game::verify_strategy(g, start, &strat)
            .expect("universes agree")
            .is_win()
        {
            return Ok(true);
        }
        let mut pos = rounds;
        loop {
            if pos == 0 {
                return Ok(false);
            }
            pos -= 1;
            odometer[pos] += 1;
            if odometer[pos] < shots.len() {
                break;
            }
            odometer[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};
    use crate::game::verify_strategy;
    use crate::graph::Graph;

    fn vs(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, members.iter().copied())
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn complete_graph_budgets() {
        let k5 = generate(&Family::Complete(5)).unwrap();
        let win = solve_k(&k5, &k5.full_set(), 4, None, &cfg());
        match win.outcome {
            SolveOutcome::Win(s) => {
                assert_eq!(s.len(), 2);
                assert_eq!(s.shots()[0], s.shots()[1]);
                assert!(verify_strategy(&k5, &k5.full_set(), &s).unwrap().is_win());
            }
            o => panic!("expected win, got {o:?}"),
        }
        let lose = solve_k(&k5, &k5.full_set(), 3, None, &cfg());
        assert_eq!(lose.outcome, SolveOutcome::NoStrategy);
    }

    #[test]
    fn looped_path_strategy_is_pinned() {
        // Path 0-1-2 with a loop on vertex 0.
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 0)]).unwrap();
        let report = solve_k(&g, &g.full_set(), 1, None, &cfg());
        match report.outcome {
            SolveOutcome::Win(s) => {
                let expect: Vec<VertexSet> =
                    [[1], [0], [0], [1]].iter().map(|m| vs(3, m)).collect();
                assert_eq!(s.shots(), &expect[..]);
            }
            o => panic!("expected win, got {o:?}"),
        }
        // No shorter win exists: the oracle certifies rounds 1..=3 fail.
        for rounds in 1..=3 {
            assert!(!brute_force_wins(&g, 1, rounds, &g.full_set(), DEFAULT_ENUM_CAP).unwrap());
        }
        assert!(brute_force_wins(&g, 1, 4, &g.full_set(), DEFAULT_ENUM_CAP).unwrap());
    }

    #[test]
    fn hunting_number_examples() {
        let grid = generate(&Family::Grid { rows: 3, cols: 3 }).unwrap();
        assert_eq!(hunting_number(&grid, &grid.full_set(), None, &cfg()).value(), Some(2));

        let p3 = generate(&Family::Path(3)).unwrap();
        let restricted = hunting_number(&p3, &vs(3, &[1]), None, &cfg());
        assert_eq!(restricted.value(), Some(1));

        let k3 = generate(&Family::Complete(3)).unwrap();
        assert_eq!(hunting_number(&k3, &k3.full_set(), Some(1), &cfg()).value(), Some(3));
        assert_eq!(hunting_number(&k3, &k3.full_set(), Some(2), &cfg()).value(), Some(2));
    }

    #[test]
    fn oracle_examples() {
        let p4 = generate(&Family::Path(4)).unwrap();
        assert!(brute_force_wins(&p4, 1, 4, &p4.full_set(), DEFAULT_ENUM_CAP).unwrap());
        let k3 = generate(&Family::Complete(3)).unwrap();
        assert!(!brute_force_wins(&k3, 1, 5, &k3.full_set(), DEFAULT_ENUM_CAP).unwrap());
        assert!(brute_force_wins(&k3, 3, 2, &k3.full_set(), DEFAULT_ENUM_CAP).unwrap());
        assert!(matches!(
            brute_force_wins(&k3, 3, 64, &k3.full_set(), 1_000),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn exhaustion_is_distinct_from_no() {
        let grid = generate(&Family::Grid { rows: 3, cols: 3 }).unwrap();
        let tiny = SolverConfig { state_cap: 3, ..SolverConfig::default() };
        let report = solve_k(&grid, &grid.full_set(), 1, None, &tiny);
        assert_eq!(report.outcome, SolveOutcome::Exhausted);
    }

    #[test]
    fn thread_modes_agree() {
        let g = generate(&Family::Random { n: 8, edge_prob: 0.35, loop_prob: 0.15, seed: 11 })
            .unwrap();
        let serial = SolverConfig { single_thread: true, ..SolverConfig::default() };
        let par = SolverConfig { single_thread: false, ..SolverConfig::default() };
        for k in 0..4 {
            let a = solve_k(&g, &g.full_set(), k, None, &serial);
            let b = solve_k(&g, &g.full_set(), k, None, &par);
            assert_eq!(a.outcome, b.outcome);
            assert_eq!(a.explored, b.explored);
        }
    }

    #[test]
    fn empty_start_is_zero() {
        let p3 = generate(&Family::Path(3)).unwrap();
        let report = hunting_number(&p3, &VertexSet::empty(3), None, &cfg());
        assert_eq!(report.value(), Some(0));
        assert!(report.strategy().is_empty());
    }

    #[test]
    fn isolated_loopless_vertex_clears_itself() {
        // The rabbit must move but cannot: the territory empties unaided.
        let g = Graph::new(1, &[]).unwrap();
        let report = hunting_number(&g, &g.full_set(), None, &cfg());
        assert_eq!(report.value(), Some(0));
    }
}
