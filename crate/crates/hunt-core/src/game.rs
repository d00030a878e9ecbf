//! Territory dynamics: the single-step evolution rule, strategy verification
//! with a full trace, and escape-walk extraction when a strategy fails.
//!
//! The rabbit territory evolves as `R_1 = S \ W_1` and `R_t = N(R_{t-1}) \ W_t`;
//! a strategy wins iff some `R_t` is empty. When it does not win, an escape
//! walk (a rabbit walk dodging every shot set) exists and is reconstructed by
//! backward tracking through the territory layers.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

/// An oblivious hunter strategy: the ordered shot sets plus the declared
/// budget. Every shot must have cardinality at most the budget; shots may be
/// smaller (extra shots only ever shrink the territory, so allowing fewer
/// never changes winnability).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    n: usize,
    budget: usize,
    shots: Vec<VertexSet>,
}

impl Strategy {
    pub fn new(n: usize, budget: usize, shots: Vec<VertexSet>) -> Result<Self> {
        for shot in &shots {
            if shot.universe() != n {
                return Err(Error::UniverseMismatch { expected: n, got: shot.universe() });
            }
            if shot.len() > budget {
                return Err(Error::ShotOverBudget { got: shot.len(), budget });
            }
        }
        Ok(Strategy { n, budget, shots })
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn shots(&self) -> &[VertexSet] {
        &self.shots
    }

    pub fn len(&self) -> usize {
        self.shots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shots.is_empty()
    }

    pub fn max_shot_size(&self) -> usize {
        self.shots.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Shots in reverse order, same budget. A winning strategy on start `V`
    /// stays winning under reversal.
    pub fn reversed(&self) -> Strategy {
        let mut shots = self.shots.clone();
        shots.reverse();
        Strategy { n: self.n, budget: self.budget, shots }
    }
}

/// The territory layers `R_1..R_T` induced by a strategy from a start set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerritoryTrace {
    pub start: VertexSet,
    pub territories: Vec<VertexSet>,
}

/// A rabbit walk `v_1..v_T` with `v_1 ∈ start`, `v_t ∉ W_t`, and consecutive
/// vertices adjacent; witnesses that a strategy does not win.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EscapeWalk {
    pub walk: Vec<usize>,
}

impl EscapeWalk {
    /// Independent check of the three walk invariants.
    pub fn is_valid(&self, g: &Graph, start: &VertexSet, strat: &Strategy) -> bool {
        if self.walk.len() != strat.len() || self.walk.is_empty() {
            return false;
        }
        if !start.contains(self.walk[0]) {
            return false;
        }
        for (t, &v) in self.walk.iter().enumerate() {
            if strat.shots()[t].contains(v) {
                return false;
            }
        }
        self.walk.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Win(TerritoryTrace),
    Lose(EscapeWalk),
}

impl Verdict {
    pub fn is_win(&self) -> bool {
        matches!(self, Verdict::Win(_))
    }
}

/// One round of territory evolution: `N(r) \ w`.
pub fn step(g: &Graph, r: &VertexSet, w: &VertexSet) -> Result<VertexSet> {
    let mut out = g.neighborhood(r)?;
    if w.universe() != g.n() {
        return Err(Error::UniverseMismatch { expected: g.n(), got: w.universe() });
    }
    out.difference_with(w);
    Ok(out)
}

/// Runs a strategy from `start`. Returns the trace truncated at the first
/// empty territory on a win, or an escape walk of full strategy length
/// otherwise. An empty start set wins vacuously with an empty trace.
pub fn verify_strategy(g: &Graph, start: &VertexSet, strat: &Strategy) -> Result<Verdict> {
    if start.universe() != g.n() {
        return Err(Error::UniverseMismatch { expected: g.n(), got: start.universe() });
    }
    if strat.universe() != g.n() {
        return Err(Error::UniverseMismatch { expected: g.n(), got: strat.universe() });
    }
    if start.is_empty() {
        return Ok(Verdict::Win(TerritoryTrace { start: start.clone(), territories: vec![] }));
    }
    if strat.is_empty() {
        return Err(Error::EmptyStrategy);
    }

    let mut territories = Vec::with_capacity(strat.len());
    let mut current = start.difference(&strat.shots()[0]);
    territories.push(current.clone());
    for w in &strat.shots()[1..] {
        if territories.last().map(VertexSet::is_empty) == Some(true) {
            break;
        }
        current = g.nbhd(&current);
        current.difference_with(w);
        territories.push(current.clone());
    }

    if territories.last().map(VertexSet::is_empty) == Some(true) {
        return Ok(Verdict::Win(TerritoryTrace { start: start.clone(), territories }));
    }

    // Backward tracking: pick the lowest surviving vertex in the last layer,
    // then any lowest-index predecessor in each earlier layer.
    let mut walk = vec![0usize; territories.len()];
    let last = territories.len() - 1;
    walk[last] = territories[last].min().expect("nonempty losing layer");
    for t in (0..last).rev() {
        let next = walk[t + 1];
        walk[t] = territories[t]
            .iter()
            .find(|&u| g.has_edge(u, next))
            .expect("territory layers are neighborhood-connected");
    }
    Ok(Verdict::Lose(EscapeWalk { walk }))
}
