//! Layered walk graph and its minimum vertex cut.
//!
//! `L(G, l)` has `l` layers of vertex copies between a source and a sink;
//! arcs `(u^i, v^{i+1})` per edge, so source-sink paths are exactly the
//! length-`l` walks in `G`. The minimum source-sink vertex cut equals (by
//! Menger, via unit node capacities and max-flow) the minimum number of shots
//! that guarantees capture within `l` rounds, and sandwiches the `l`-round
//! hunting number within a `min(l, n)` factor.

use crate::error::{Error, Result};
use crate::graph::Graph;

const LAYERED_NODE_CAP: usize = 1_000_000;

/// Explicit layered graph, mostly for inspection and tests. Node `v^i` (for
/// `i` in `1..=layers`) is `2 + (i-1)*n + v`; the source is 0, the sink 1.
#[derive(Clone, Debug)]
pub struct LayeredGraph {
    pub base_n: usize,
    pub layers: usize,
    pub node_count: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl LayeredGraph {
    pub const SOURCE: usize = 0;
    pub const SINK: usize = 1;

    pub fn copy_id(&self, vertex: usize, layer: usize) -> usize {
        debug_assert!(vertex < self.base_n && (1..=self.layers).contains(&layer));
        2 + (layer - 1) * self.base_n + vertex
    }
}

pub fn build_layered(g: &Graph, layers: usize) -> Result<LayeredGraph> {
    if layers < 1 {
        return Err(Error::InvalidParam("layered graph needs at least one layer".into()));
    }
    let n = g.n();
    let node_count = 2 + layers * n;
    if node_count > LAYERED_NODE_CAP {
        return Err(Error::CapExceeded(format!("layered graph with {node_count} nodes")));
    }
    let mut lg = LayeredGraph { base_n: n, layers, node_count, arcs: Vec::new() };
    for v in 0..n {
        lg.arcs.push((LayeredGraph::SOURCE, lg.copy_id(v, 1)));
    }
    for i in 1..layers {
        for (u, v) in g.edges() {
            if u == v {
                lg.arcs.push((lg.copy_id(u, i), lg.copy_id(u, i + 1)));
            } else {
                lg.arcs.push((lg.copy_id(u, i), lg.copy_id(v, i + 1)));
                lg.arcs.push((lg.copy_id(v, i), lg.copy_id(u, i + 1)));
            }
        }
    }
    for v in 0..n {
        lg.arcs.push((lg.copy_id(v, layers), LayeredGraph::SINK));
    }
    Ok(lg)
}

/// One cut element: shoot `vertex` in round `round`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutShot {
    pub vertex: usize,
    pub round: usize,
}

struct Dinic {
    to: Vec<usize>,
    cap: Vec<u32>,
    next: Vec<usize>,
    head: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl Dinic {
    fn new(nodes: usize) -> Self {
        Dinic { to: Vec::new(), cap: Vec::new(), next: Vec::new(), head: vec![NIL; nodes] }
    }

    /// Adds a directed edge and its residual twin; twins sit at paired
    /// indices so `e ^ 1` flips direction.
    fn add_edge(&mut self, u: usize, v: usize, c: u32) {
        self.to.push(v);
        self.cap.push(c);
        self.next.push(self.head[u]);
        self.head[u] = self.to.len() - 1;
        self.to.push(u);
        self.cap.push(0);
        self.next.push(self.head[v]);
        self.head[v] = self.to.len() - 1;
    }

    fn bfs_levels(&self, s: usize, t: usize) -> Option<Vec<u32>> {
        let mut level = vec![u32::MAX; self.head.len()];
        level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let mut e = self.head[u];
            while e != NIL {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] == u32::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
                e = self.next[e];
            }
        }
        (level[t] != u32::MAX).then_some(level)
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u32, level: &[u32], iter: &mut [usize]) -> u32 {
        if u == t {
            return pushed;
        }
        while iter[u] != NIL {
            let e = iter[u];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let d = self.dfs(v, t, pushed.min(self.cap[e]), level, iter);
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            iter[u] = self.next[e];
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u32 {
        let mut flow = 0;
        while let Some(level) = self.bfs_levels(s, t) {
            let mut iter = self.head.clone();
            loop {
                let pushed = self.dfs(s, t, u32::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
        flow
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let mut e = self.head[u];
            while e != NIL {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
                e = self.next[e];
            }
        }
        seen
    }
}

/// Minimum number of shots that captures the rabbit within `layers` rounds,
/// with one minimum shot schedule. Splits every vertex copy into a
/// unit-capacity in/out pair and runs max-flow on `L(G, layers)`; the cut is
/// read off the residual reachability.
pub fn layered_min_cut(g: &Graph, layers: usize) -> Result<(usize, Vec<CutShot>)> {
    let lg = build_layered(g, layers)?;
    let n = g.n();
    // Flow node ids: source/sink unsplit, copy (v, i) gets in/out pair.
    let node_in = |id: usize| 2 * id;
    let node_out = |id: usize| 2 * id + 1;
    let mut dinic = Dinic::new(2 * lg.node_count);
    let inf = (n as u32) + 1;
    dinic.add_edge(node_in(LayeredGraph::SOURCE), node_out(LayeredGraph::SOURCE), inf);
    dinic.add_edge(node_in(LayeredGraph::SINK), node_out(LayeredGraph::SINK), inf);
    for id in 2..lg.node_count {
        dinic.add_edge(node_in(id), node_out(id), 1);
    }
    for &(u, v) in &lg.arcs {
        dinic.add_edge(node_out(u), node_in(v), inf);
    }
    let s = node_out(LayeredGraph::SOURCE);
    let t = node_in(LayeredGraph::SINK);
    let flow = dinic.max_flow(s, t) as usize;

    let reach = dinic.residual_reachable(s);
    let mut shots = Vec::new();
    for layer in 1..=layers {
        for v in 0..n {
            let id = lg.copy_id(v, layer);
            if reach[node_in(id)] && !reach[node_out(id)] {
                shots.push(CutShot { vertex: v, round: layer });
            }
        }
    }
    debug_assert_eq!(shots.len(), flow);
    Ok((flow, shots))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};

    #[test]
    fn one_layer_cuts_everything() {
        let g = generate(&Family::Random { n: 7, edge_prob: 0.5, loop_prob: 0.1, seed: 3 }).unwrap();
        let (cut, shots) = layered_min_cut(&g, 1).unwrap();
        assert_eq!(cut, 7);
        assert!(shots.iter().all(|s| s.round == 1));
    }

    #[test]
    fn triangle_two_layers() {
        let k3 = generate(&Family::Complete(3)).unwrap();
        assert_eq!(layered_min_cut(&k3, 2).unwrap().0, 3);
    }

    #[test]
    fn path_two_layers() {
        let p3 = generate(&Family::Path(3)).unwrap();
        assert_eq!(layered_min_cut(&p3, 2).unwrap().0, 2);
    }

    #[test]
    fn arc_counts() {
        let p3 = generate(&Family::Path(3)).unwrap();
        let lg = build_layered(&p3, 4).unwrap();
        assert_eq!(lg.arcs.len(), 2 * p3.edge_count() * 3 + 2 * 3);
        // loops contribute a single arc per layer transition
        let looped = Graph::new(2, &[(0, 1), (0, 0)]).unwrap();
        let lg = build_layered(&looped, 3).unwrap();
        assert_eq!(lg.arcs.len(), (2 + 1) * 2 + 2 * 2);
    }

    #[test]
    fn cut_is_a_shot_schedule() {
        let g = generate(&Family::Grid { rows: 2, cols: 3 }).unwrap();
        let (cut, shots) = layered_min_cut(&g, 3).unwrap();
        assert_eq!(cut, shots.len());
        assert!(shots.iter().all(|s| s.vertex < g.n() && (1..=3).contains(&s.round)));
    }
}
