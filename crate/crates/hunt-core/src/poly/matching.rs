//! Maximum matching and minimum vertex cover.
//!
//! Bipartite matching (augmenting paths) is the production path; by König's
//! theorem its size equals the minimum vertex cover on bipartite inputs.
//! General graphs get exact values at oracle scale via memoized subset
//! recursion (matching) and branch-and-bound (vertex cover) — they only
//! appear inside bound validation, where instances are small.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::EXACT_CAP;
use crate::vset::VertexSet;

/// Maximum matching of a bipartite loopless graph, as (size, matched edges).
pub fn bipartite_matching(g: &Graph) -> Result<(usize, Vec<(usize, usize)>)> {
    let (left, _) = g.bipartition().ok_or(Error::NotBipartite)?;
    let n = g.n();
    let mut matched_to: Vec<Option<usize>> = vec![None; n];

    fn augment(
        g: &Graph,
        u: usize,
        matched_to: &mut Vec<Option<usize>>,
        seen: &mut VertexSet,
    ) -> bool {
        for v in g.neighbors(u).to_vec() {
            if seen.contains(v) {
                continue;
            }
            seen.insert(v);
            let free = matched_to[v].is_none();
            if free || augment(g, matched_to[v].unwrap(), matched_to, seen) {
                matched_to[v] = Some(u);
                matched_to[u] = Some(v);
                return true;
            }
        }
        false
    }

    let mut size = 0;
    for u in left.iter() {
        if matched_to[u].is_none() {
            let mut seen = VertexSet::empty(n);
            if augment(g, u, &mut matched_to, &mut seen) {
                size += 1;
            }
        }
    }
    let mut edges = Vec::with_capacity(size);
    for u in left.iter() {
        if let Some(v) = matched_to[u] {
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    Ok((size, edges))
}

fn bitmask_adjacency(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&u| u != v)
                .fold(0u32, |m, u| m | 1 << u)
        })
        .collect()
}

/// Exact maximum matching of an arbitrary graph (loops ignored; a loop can
/// never be matched). Subset recursion with memoization, capped at
/// `EXACT_CAP` vertices.
pub fn maximum_matching_exact(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > EXACT_CAP {
        return Err(Error::CapExceeded(format!(
            "exact matching on {n} > {EXACT_CAP} vertices"
        )));
    }
    let adj = bitmask_adjacency(g);
    let mut memo: Vec<i8> = vec![-1; 1 << n];

    fn rec(mask: u32, adj: &[u32], memo: &mut [i8]) -> i8 {
        if memo[mask as usize] >= 0 {
            return memo[mask as usize];
        }
        // Lowest vertex with a live neighbor; vertices without one are inert.
        let mut best = 0i8;
        let mut probe = mask;
        while probe != 0 {
            let v = probe.trailing_zeros() as usize;
            probe &= probe - 1;
            let nbrs = adj[v] & mask;
            if nbrs == 0 {
                continue;
            }
            // Leave v unmatched...
            best = rec(mask & !(1 << v), adj, memo);
            // ...or match it to each live neighbor.
            let mut rest = nbrs;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                best = best.max(1 + rec(mask & !(1 << v) & !(1 << w), adj, memo));
            }
            break;
        }
        memo[mask as usize] = best;
        best
    }

    Ok(rec((1u32 << n) - 1, &adj, &mut memo) as usize)
}

/// Exact minimum vertex cover by branch and bound. Loops force their vertex
/// into every cover. Capped at `EXACT_CAP` vertices.
pub fn minimum_vertex_cover_exact(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > EXACT_CAP {
        return Err(Error::CapExceeded(format!(
            "exact vertex cover on {n} > {EXACT_CAP} vertices"
        )));
    }
    let adj = bitmask_adjacency(g);
    let mut forced = 0u32;
    for v in g.loops().iter() {
        forced |= 1 << v;
    }

    fn rec(live: u32, taken: usize, best: &mut usize, adj: &[u32]) {
        if taken >= *best {
            return;
        }
        // Highest-degree live vertex with a live edge.
        let mut pick = None;
        let mut pick_deg = 0;
        let mut probe = live;
        while probe != 0 {
            let v = probe.trailing_zeros() as usize;
            probe &= probe - 1;
            let deg = (adj[v] & live).count_ones() as usize;
            if deg > pick_deg {
                pick_deg = deg;
                pick = Some(v);
            }
        }
        let Some(v) = pick else {
            *best = taken; // no live edges left
            return;
        };
        // Either v joins the cover, or all its live neighbors must.
        rec(live & !(1 << v), taken + 1, best, adj);
        let nbrs = adj[v] & live;
        rec(live & !nbrs & !(1 << v), taken + nbrs.count_ones() as usize, best, adj);
    }

    let live = ((1u64 << n) - 1) as u32 & !forced;
    let mut best = n;
    rec(live, forced.count_ones() as usize, &mut best, &adj);
    Ok(best)
}

/// Greedy maximal matching; lower-bounds the matching number and half the
/// vertex cover. Used only for the flagged fallback beyond the exact cap.
pub fn greedy_matching(g: &Graph) -> usize {
    let n = g.n();
    let mut used = VertexSet::empty(n);
    let mut size = 0;
    for (u, v) in g.edges() {
        if u != v && !used.contains(u) && !used.contains(v) {
            used.insert(u);
            used.insert(v);
            size += 1;
        }
    }
    size
}
