//! Undirected graphs with optional self-loops, immutable after construction.
//!
//! Vertices are the indices `0..n`. A loop at `v` is stored once in `loops`
//! and makes `v` a member of its own neighbor set, so the neighborhood
//! operator needs no special casing anywhere else.

use crate::error::{Error, Result};
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    loops: VertexSet,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. A pair `(v, v)` registers a loop.
    /// Out-of-range endpoints and duplicate edges (in either orientation)
    /// are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
            loops: VertexSet::empty(n),
            edge_count: 0,
        };
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if g.adj[u].contains(v) {
                return Err(Error::DuplicateEdge { u, v });
            }
            if u == v {
                g.loops.insert(u);
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
            g.edge_count += 1;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, loops counted once.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn loop_count(&self) -> usize {
        self.loops.len()
    }

    pub fn loops(&self) -> &VertexSet {
        &self.loops
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    /// Neighbor set of a single vertex; contains `v` itself iff `v` has a loop.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Degree with the convention that a loop contributes 1.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_universe(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                got: s.universe(),
            });
        }
        Ok(())
    }

    /// `N(S)`: all vertices with at least one neighbor in `s`. A loop at
    /// `v ∈ s` keeps `v` in the result.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_universe(s)?;
        Ok(self.nbhd(s))
    }

    pub(crate) fn nbhd(&self, s: &VertexSet) -> VertexSet {
        debug_assert_eq!(s.universe(), self.n);
        let mut out = VertexSet::empty(self.n);
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// All edges, lexicographically sorted, loops as `(v, v)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v >= u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components as vertex sets (isolated vertices form their own).
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for v in 0..self.n {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::from_iter(self.n, [v]);
            let mut frontier = comp.clone();
            loop {
                let mut next = self.nbhd(&frontier);
                next.difference_with(&comp);
                if next.is_empty() {
                    break;
                }
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// 2-coloring if one exists. A loop is an odd cycle, so any loop yields `None`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if v == u {
                        return None;
                    }
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let left = VertexSet::from_iter(self.n, (0..self.n).filter(|&v| color[v] == 0));
        Some((left.clone(), left.complement()))
    }

    /// Shortest path between two vertices (inclusive), if connected.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n];
        prev[from] = from;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for v in self.adj[u].iter() {
                if v != u && prev[v] == usize::MAX {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }
}

/// Maximum over induced subgraphs of the minimum degree, by iterative
/// min-degree peeling. A loop adds 1 to its vertex's degree, which makes
/// `degeneracy(K°_n) = n` match `h(K°_n) = n`. Lower bound for the hunting
/// number on every tested instance.
pub fn degeneracy(g: &Graph) -> usize {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut best = 0;
    for _ in 0..n {
        let v = alive
            .iter()
            .min_by_key(|&v| (deg[v], v))
            .expect("peeling a live vertex");
        best = best.max(deg[v]);
        alive.remove(v);
        for u in g.neighbors(v).iter() {
            if u != v && alive.contains(u) {
                deg[u] -= 1;
            }
        }
    }
    best
}
