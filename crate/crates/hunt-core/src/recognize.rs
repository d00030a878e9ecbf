//! Decides whether one hunter suffices on a graph with loops, by forbidden
//! subgraphs: one hunter wins iff the graph contains no cycle, no two loops
//! in one connected component, and none of the four spider patterns (a
//! 3-spider, or two length-3 legs with a loop at distance 2, 1 or 0 from the
//! center). The verdict can also be computed through the bipartite double
//! cover, which reduces to the loopless criterion "forest without a
//! 3-spider"; both methods must agree.
//!
//! Negative verdicts carry a witness embedding that re-verifies as a genuine
//! subgraph of the claimed pattern.

use crate::construct::double_cover;
use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Direct,
    ViaDoubleCover,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpiderKind {
    /// Three disjoint length-3 legs.
    H1,
    /// Two legs plus a two-edge tail ending in a loop.
    H2,
    /// Two legs plus a pendant loop vertex.
    H3,
    /// Two legs with the loop on the center.
    H4,
}

/// Embedding of a forbidden structure into the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Cycle as its vertex list (closing edge implied).
    Cycle(Vec<usize>),
    /// Two loops joined by a path (inclusive of both loop vertices).
    ConnectedLoops { loops: (usize, usize), path: Vec<usize> },
    Spider(SpiderWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiderWitness {
    pub kind: SpiderKind,
    pub center: usize,
    /// Length-3 legs as `[a, b, c]` outward from the center; three legs for
    /// the 3-spider, two otherwise.
    pub legs: Vec<[usize; 3]>,
    /// Path from the center to the loop vertex (center excluded): two
    /// vertices for `H2`, one for `H3`, empty for `H4` and `H1`.
    pub tail: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognizerVerdict {
    pub one_hunter_win: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

pub fn recognize(g: &Graph, method: Method) -> RecognizerVerdict {
    match method {
        Method::Direct => {
            let witness = find_forbidden(g);
            RecognizerVerdict { one_hunter_win: witness.is_none(), witness, method }
        }
        Method::ViaDoubleCover => {
            let cover = double_cover(g);
            let clean = find_cycle(&cover).is_none() && find_three_spider(&cover).is_none();
            // The double cover settles the verdict; the witness, when one is
            // owed, is still expressed as a subgraph of the input.
            let witness = if clean { None } else { find_forbidden(g) };
            RecognizerVerdict { one_hunter_win: clean, witness, method }
        }
    }
}

fn find_forbidden(g: &Graph) -> Option<Witness> {
    if let Some(cycle) = find_cycle(g) {
        return Some(Witness::Cycle(cycle));
    }
    // Forest now. Two loops in one component come next.
    let components = g.components();
    for comp in &components {
        let looped: Vec<usize> = g.loops().intersection(comp).iter().collect();
        if looped.len() >= 2 {
            let path = g
                .shortest_path(looped[0], looped[1])
                .expect("loop vertices share a component");
            return Some(Witness::ConnectedLoops { loops: (looped[0], looped[1]), path });
        }
    }
    if let Some(spider) = find_three_spider(g) {
        return Some(Witness::Spider(spider));
    }
    // Forest with at most one loop per component: look for a center with two
    // deep legs close to the loop.
    for comp in &components {
        let looped = g.loops().intersection(comp);
        if let Some(loop_vertex) = looped.min() {
            if let Some(spider) = find_looped_spider(g, loop_vertex) {
                return Some(Witness::Spider(spider));
            }
        }
    }
    None
}

/// Any cycle (length at least 3; loops do not count), via iterative DFS.
/// A non-tree edge `uv` closes a cycle through the lowest common ancestor
/// of its endpoints in the DFS forest.
fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut visited = VertexSet::empty(n);
    for root in 0..n {
        if visited.contains(root) {
            continue;
        }
        parent[root] = root;
        visited.insert(root);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u).iter() {
                if v == u || v == parent[u] {
                    continue;
                }
                if visited.contains(v) {
                    return Some(close_cycle(&parent, u, v));
                }
                visited.insert(v);
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    None
}

/// Cycle `[u, .., lca, .., v]` closed by the non-tree edge `vu`.
fn close_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let mut u_chain = vec![u];
    while {
        let last = *u_chain.last().unwrap();
        parent[last] != last
    } {
        u_chain.push(parent[*u_chain.last().unwrap()]);
    }
    let mut v_chain = vec![v];
    while !u_chain.contains(v_chain.last().unwrap()) {
        v_chain.push(parent[*v_chain.last().unwrap()]);
    }
    let lca = *v_chain.last().unwrap();
    let cut = u_chain.iter().position(|&x| x == lca).unwrap();
    let mut cycle = u_chain[..=cut].to_vec();
    cycle.extend(v_chain[..v_chain.len() - 1].iter().rev());
    cycle
}

/// Depth-3 reach from `from`, stepping away from `avoid`; returns `[a, b, c]`
/// with `a = from`. Assumes the graph is a forest, so no revisits can occur.
fn deep_leg(g: &Graph, avoid: usize, from: usize) -> Option<[usize; 3]> {
    for b in g.neighbors(from).iter() {
        if b == from || b == avoid {
            continue;
        }
        for c in g.neighbors(b).iter() {
            if c != b && c != from {
                return Some([from, b, c]);
            }
        }
    }
    None
}

/// A vertex with three disjoint length-3 legs, on a forest (loops ignored).
fn find_three_spider(g: &Graph) -> Option<SpiderWitness> {
    for x in 0..g.n() {
        let mut legs = Vec::new();
        for a in g.neighbors(x).iter() {
            if a == x {
                continue;
            }
            if let Some(leg) = deep_leg(g, x, a) {
                legs.push(leg);
                if legs.len() == 3 {
                    return Some(SpiderWitness { kind: SpiderKind::H1, center: x, legs, tail: vec![] });
                }
            }
        }
    }
    None
}

/// On a tree component with a single loop: a center within distance 2 of the
/// loop vertex carrying two disjoint deep legs that avoid the loop-side path.
fn find_looped_spider(g: &Graph, loop_vertex: usize) -> Option<SpiderWitness> {
    // Root the component tree at the loop vertex.
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![loop_vertex];
    let mut depth = vec![usize::MAX; n];
    parent[loop_vertex] = loop_vertex;
    depth[loop_vertex] = 0;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for v in g.neighbors(u).iter() {
            if v != u && depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                order.push(v);
            }
        }
    }
    for &x in &order {
        if depth[x] > 2 {
            continue;
        }
        let mut legs = Vec::new();
        for a in g.neighbors(x).iter() {
            // skip the loop itself and the edge toward the loop vertex
            // (for the root, parent[x] == x, so both checks coincide)
            if a == x || a == parent[x] {
                continue;
            }
            if let Some(leg) = deep_leg(g, x, a) {
                legs.push(leg);
                if legs.len() == 2 {
                    let (kind, tail) = match depth[x] {
                        0 => (SpiderKind::H4, vec![]),
                        1 => (SpiderKind::H3, vec![loop_vertex]),
                        _ => (SpiderKind::H2, vec![parent[x], loop_vertex]),
                    };
                    return Some(SpiderWitness { kind, center: x, legs, tail });
                }
            }
        }
    }
    None
}

/// The edges of a witness, in edge-list form (loops as `(v, v)`).
pub fn witness_edges(w: &Witness) -> Vec<(usize, usize)> {
    let norm = |u: usize, v: usize| (u.min(v), u.max(v));
    let mut edges = Vec::new();
    match w {
        Witness::Cycle(cycle) => {
            for i in 0..cycle.len() {
                edges.push(norm(cycle[i], cycle[(i + 1) % cycle.len()]));
            }
        }
        Witness::ConnectedLoops { loops, path } => {
            edges.push((loops.0, loops.0));
            edges.push((loops.1, loops.1));
            for pair in path.windows(2) {
                edges.push(norm(pair[0], pair[1]));
            }
        }
        Witness::Spider(s) => {
            for leg in &s.legs {
                edges.push(norm(s.center, leg[0]));
                edges.push(norm(leg[0], leg[1]));
                edges.push(norm(leg[1], leg[2]));
            }
            let mut prev = s.center;
            for &t in &s.tail {
                edges.push(norm(prev, t));
                prev = t;
            }
            match s.kind {
                SpiderKind::H1 => {}
                SpiderKind::H2 => edges.push((s.tail[1], s.tail[1])),
                SpiderKind::H3 => edges.push((s.tail[0], s.tail[0])),
                SpiderKind::H4 => edges.push((s.center, s.center)),
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Re-verifies a witness as a genuine subgraph embedding of its claimed
/// pattern: all vertices distinct, all pattern edges (and loops) present.
pub fn witness_is_valid(g: &Graph, w: &Witness) -> bool {
    let distinct = |vs: &[usize]| {
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        sorted.windows(2).all(|p| p[0] != p[1])
    };
    match w {
        Witness::Cycle(cycle) => {
            cycle.len() >= 3
                && distinct(cycle)
                && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
        }
        Witness::ConnectedLoops { loops: (u, v), path } => {
            u != v
                && g.has_loop(*u)
                && g.has_loop(*v)
                && path.first() == Some(u)
                && path.last() == Some(v)
                && distinct(path)
                && path.windows(2).all(|p| g.has_edge(p[0], p[1]))
        }
        Witness::Spider(s) => {
            let leg_count = if s.kind == SpiderKind::H1 { 3 } else { 2 };
            let tail_len = match s.kind {
                SpiderKind::H1 | SpiderKind::H4 => 0,
                SpiderKind::H3 => 1,
                SpiderKind::H2 => 2,
            };
            if s.legs.len() != leg_count || s.tail.len() != tail_len {
                return false;
            }
            let mut all = vec![s.center];
            for leg in &s.legs {
                all.extend_from_slice(leg);
            }
            all.extend_from_slice(&s.tail);
            if !distinct(&all) {
                return false;
            }
            for leg in &s.legs {
                if !(g.has_edge(s.center, leg[0])
                    && g.has_edge(leg[0], leg[1])
                    && g.has_edge(leg[1], leg[2]))
                {
                    return false;
                }
            }
            let mut prev = s.center;
            for &t in &s.tail {
                if !g.has_edge(prev, t) {
                    return false;
                }
                prev = t;
            }
            match s.kind {
                SpiderKind::H1 => true,
                SpiderKind::H2 => g.has_loop(s.tail[1]),
                SpiderKind::H3 => g.has_loop(s.tail[0]),
                SpiderKind::H4 => g.has_loop(s.center),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};

    fn direct(g: &Graph) -> RecognizerVerdict {
        recognize(g, Method::Direct)
    }

    #[test]
    fn paths_are_one_hunter_win() {
        let p10 = generate(&Family::Path(10)).unwrap();
        assert!(direct(&p10).one_hunter_win);
        assert!(recognize(&p10, Method::ViaDoubleCover).one_hunter_win);
    }

    #[test]
    fn cycles_are_rejected_with_witness() {
        let c4 = generate(&Family::Cycle(4)).unwrap();
        let verdict = direct(&c4);
        assert!(!verdict.one_hunter_win);
        let w = verdict.witness.unwrap();
        assert!(matches!(&w, Witness::Cycle(c) if c.len() == 4));
        assert!(witness_is_valid(&c4, &w));
    }

    #[test]
    fn forbidden_families_detected_as_themselves() {
        for (family, kind) in [
            (Family::H1, SpiderKind::H1),
            (Family::H2, SpiderKind::H2),
            (Family::H3, SpiderKind::H3),
            (Family::H4, SpiderKind::H4),
        ] {
            let g = generate(&family).unwrap();
            let verdict = direct(&g);
            assert!(!verdict.one_hunter_win, "{kind:?} must be rejected");
            match verdict.witness.unwrap() {
                Witness::Spider(s) => {
                    assert_eq!(s.kind, kind);
                    assert!(witness_is_valid(&g, &Witness::Spider(s)));
                }
                w => panic!("expected spider witness for {kind:?}, got {w:?}"),
            }
            assert!(!recognize(&g, Method::ViaDoubleCover).one_hunter_win);
        }
    }

    #[test]
    fn looped_path_is_fine_two_loops_are_not() {
        let one_loop = Graph::new(3, &[(0, 1), (1, 2), (0, 0)]).unwrap();
        assert!(direct(&one_loop).one_hunter_win);

        let two_loops = Graph::new(3, &[(0, 1), (1, 2), (0, 0), (2, 2)]).unwrap();
        let verdict = direct(&two_loops);
        assert!(!verdict.one_hunter_win);
        let w = verdict.witness.unwrap();
        assert!(matches!(&w, Witness::ConnectedLoops { .. }));
        assert!(witness_is_valid(&two_loops, &w));

        // loops in different components are allowed
        let split = Graph::new(4, &[(0, 1), (2, 3), (0, 0), (3, 3)]).unwrap();
        assert!(direct(&split).one_hunter_win);
        assert!(recognize(&split, Method::ViaDoubleCover).one_hunter_win);
    }

    #[test]
    fn spider_plus_distance() {
        // legs of length 3 from x=0; loop at distance 3 is harmless
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6)];
        edges.extend([(0, 7), (7, 8), (8, 9), (9, 9)]);
        let g = Graph::new(10, &edges).unwrap();
        // distance-3 loop: contains no H2 (tail too long) but H1? only two
        // deep legs plus the tail branch... the tail branch is itself a
        // length-3 leg, so this IS a 3-spider.
        assert!(!direct(&g).one_hunter_win);

        // shorten the tail branch so only H2 at distance 2 applies
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6)];
        edges.extend([(0, 7), (7, 8), (8, 8)]);
        let g = Graph::new(9, &edges).unwrap();
        let verdict = direct(&g);
        match verdict.witness.unwrap() {
            Witness::Spider(s) => assert_eq!(s.kind, SpiderKind::H2),
            w => panic!("expected H2, got {w:?}"),
        }
    }
}
