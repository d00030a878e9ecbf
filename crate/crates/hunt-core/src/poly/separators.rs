//! Exhaustive separator oracles.
//!
//! Exact vertex bisection: a minimum separator `C` whose removal leaves two
//! equal-size sides `A`, `B` with no edges between them. Bisection stable
//! separator: additionally a stable set `D` (all neighbors inside `C`, no
//! edges to `A` or `B`), minimizing `|C| - |D|`; its optimum determines the
//! two-round hunting number via `h(G,2) = (n + BSS(G)) / 2` on loopless
//! graphs.
//!
//! Both oracles enumerate `C` and assign the components of `G - C` by
//! subset sum: a component with an edge can never split across sides or sit
//! inside the stable set, so only whole components (and, for the stable set,
//! loopless singletons) need placing. `2^n · poly` beats the naive 4-way
//! labeling; capped at `EXACT_CAP` vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::EXACT_CAP;
use crate::vset::VertexSet;

/// A witness partition. `d` is `None` for exact bisection. The objective is
/// `|C|` for exact bisection and `|C| - |D|` (possibly negative) for the
/// stable variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorPartition {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub d: Option<VertexSet>,
    pub objective: i64,
}

impl SeparatorPartition {
    /// Re-checks every constraint against the graph.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let n = g.n();
        let empty_d = VertexSet::empty(n);
        let d = self.d.as_ref().unwrap_or(&empty_d);
        // partition of V
        let mut union = self.a.union(&self.b);
        union.union_with(&self.c);
        union.union_with(d);
        if union != VertexSet::full(n) {
            return false;
        }
        if self.a.len() + self.b.len() + self.c.len() + d.len() != n {
            return false;
        }
        if self.a.len() != self.b.len() {
            return false;
        }
        // no edges among A, B, D pairwise; D stable; N(D) inside C
        let nbhd = |s: &VertexSet| g.neighborhood(s).expect("same universe");
        if nbhd(&self.a).intersects(&self.b) || nbhd(&self.a).intersects(d) {
            return false;
        }
        if nbhd(&self.b).intersects(d) {
            return false;
        }
        if self.d.is_some() {
            let nd = nbhd(d);
            if nd.intersects(d) || !nd.is_subset(&self.c) {
                return false;
            }
        }
        let expected = self.c.len() as i64 - if self.d.is_some() { d.len() as i64 } else { 0 };
        self.objective == expected
    }
}

fn mask_adjacency(g: &Graph) -> (Vec<u32>, u32) {
    let adj = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let loops = g.loops().iter().fold(0u32, |m, v| m | 1 << v);
    (adj, loops)
}

fn mask_components(adj: &[u32], mut rest: u32) -> Vec<u32> {
    let mut out = Vec::new();
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let mut comp = 1u32 << v;
        loop {
            let mut grown = comp;
            let mut probe = comp;
            while probe != 0 {
                let u = probe.trailing_zeros() as usize;
                probe &= probe - 1;
                grown |= adj[u] & rest;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// Splits `items` (component masks with their sizes) into two sides of equal
/// total size, if possible. Returns the mask union of one side.
fn equal_split(items: &[(u32, usize)]) -> Option<u32> {
    let total: usize = items.iter().map(|&(_, s)| s).sum();
    if total % 2 != 0 {
        return None;
    }
    let half = total / 2;
    // Reachable sums as a bitset, then greedy reconstruction.
    let words = half / 64 + 1;
    let mut sums = vec![0u64; words];
    sums[0] = 1;
    let mut history: Vec<Vec<u64>> = Vec::with_capacity(items.len());
    for &(_, size) in items {
        history.push(sums.clone());
        let mut shifted = vec![0u64; words];
        let (wshift, bshift) = (size / 64, size % 64);
        for i in (0..words).rev() {
            if i >= wshift {
                let mut val = sums[i - wshift] << bshift;
                if bshift > 0 && i > wshift {
                    val |= sums[i - wshift - 1] >> (64 - bshift);
                }
                shifted[i] = val;
            }
        }
        for i in 0..words {
            sums[i] |= shifted[i];
        }
    }
    if sums[half / 64] >> (half % 64) & 1 == 0 {
        return None;
    }
    // Walk backwards: include an item iff the remaining target was reachable
    // without it... include when target - size was reachable before it.
    let mut target = half;
    let mut side = 0u32;
    for (idx, &(mask, size)) in items.iter().enumerate().rev() {
        let before = &history[idx];
        let reachable = |t: usize| before[t / 64] >> (t % 64) & 1 == 1;
        if size <= target && reachable(target - size) {
            side |= mask;
            target -= size;
        } else {
            debug_assert!(reachable(target));
        }
    }
    (target == 0).then_some(side)
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > EXACT_CAP {
        return Err(Error::CapExceeded(format!(
            "separator oracle on {} > {EXACT_CAP} vertices",
            g.n()
        )));
    }
    Ok(())
}

fn set_of(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Minimum exact vertex bisection by exhaustive enumeration of `C`.
pub fn exact_vertex_bisection(g: &Graph) -> Result<SeparatorPartition> {
    check_cap(g)?;
    let n = g.n();
    let (adj, _) = mask_adjacency(g);
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best: Option<SeparatorPartition> = None;
    for c in 0..=full {
        if let Some(prev) = &best {
            if (c.count_ones() as i64) >= prev.objective {
                continue;
            }
        }
        let rest = full & !c;
        let comps: Vec<(u32, usize)> =
            mask_components(&adj, rest).iter().map(|&m| (m, m.count_ones() as usize)).collect();
        if let Some(side) = equal_split(&comps) {
            best = Some(SeparatorPartition {
                a: set_of(n, side),
                b: set_of(n, rest & !side),
                c: set_of(n, c),
                d: None,
                objective: c.count_ones() as i64,
            });
        }
    }
    Ok(best.expect("C = V is always feasible"))
}

/// Minimum bisection stable separator (`|C| - |D|`) by exhaustive
/// enumeration of `C`. Loopless singleton components of `G - C` may be
/// diverted into the stable set `D`; everything else splits into equal
/// sides. Determines the two-round hunting number on loopless graphs.
pub fn bisection_stable_separator(g: &Graph) -> Result<SeparatorPartition> {
    check_cap(g)?;
    let n = g.n();
    let (adj, loops) = mask_adjacency(g);
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best: Option<SeparatorPartition> = None;
    for c in 0..=full {
        let rest = full & !c;
        let comps = mask_components(&adj, rest);
        // Singleton loopless components are the D candidates.
        let mut divertible: Vec<u32> = Vec::new();
        let mut items: Vec<(u32, usize)> = Vec::new();
        for &m in &comps {
            if m.count_ones() == 1 && m & loops == 0 {
                divertible.push(m);
            } else {
                items.push((m, m.count_ones() as usize));
            }
        }
        // Divert as many singletons as possible while the rest still splits.
        for keep in 0..=divertible.len() {
            let diverted = divertible.len() - keep;
            let objective = c.count_ones() as i64 - diverted as i64;
            if best.as_ref().is_some_and(|p| objective >= p.objective) {
                break; // keeping more singletons only raises the objective
            }
            let mut trial = items.clone();
            trial.extend(divertible[..keep].iter().map(|&m| (m, 1usize)));
            if let Some(side) = equal_split(&trial) {
                let d_mask = divertible[keep..].iter().fold(0u32, |acc, &m| acc | m);
                let side_rest = rest & !side & !d_mask;
                best = Some(SeparatorPartition {
                    a: set_of(n, side),
                    b: set_of(n, side_rest),
                    c: set_of(n, c),
                    d: Some(set_of(n, d_mask)),
                    objective,
                });
                break;
            }
        }
    }
    Ok(best.expect("C = V is always feasible"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};

    fn path(n: usize) -> Graph {
        generate(&Family::Path(n)).unwrap()
    }

    #[test]
    fn evb_examples() {
        let p4 = path(4);
        let part = exact_vertex_bisection(&p4).unwrap();
        assert_eq!(part.objective, 2);
        assert!(part.is_valid(&p4));

        let k2 = path(2);
        assert_eq!(exact_vertex_bisection(&k2).unwrap().objective, 2);

        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let part = exact_vertex_bisection(&two_edges).unwrap();
        assert_eq!(part.objective, 0);
        assert!(part.is_valid(&two_edges));
    }

    #[test]
    fn bss_examples() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        let part = bisection_stable_separator(&k4).unwrap();
        assert_eq!(part.objective, 2);
        assert!(part.is_valid(&k4));

        let p4 = path(4);
        let part = bisection_stable_separator(&p4).unwrap();
        assert_eq!(part.objective, 0);
        assert!(part.is_valid(&p4));

        let p2 = path(2);
        assert_eq!(bisection_stable_separator(&p2).unwrap().objective, 0);
    }

    #[test]
    fn bss_loop_vertex_cannot_be_stable() {
        // lone loop vertex: D = {} forced, C = {v} optimal (A = B = empty)
        let g = Graph::new(1, &[(0, 0)]).unwrap();
        let part = bisection_stable_separator(&g).unwrap();
        assert_eq!(part.objective, 1);
        assert!(part.is_valid(&g));
        // loopless lone vertex goes to D instead
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(bisection_stable_separator(&g).unwrap().objective, -1);
    }

    #[test]
    fn cap_is_enforced() {
        let g = generate(&Family::Random { n: 21, edge_prob: 0.2, loop_prob: 0.0, seed: 1 }).unwrap();
        assert!(matches!(exact_vertex_bisection(&g), Err(Error::CapExceeded(_))));
        assert!(matches!(bisection_stable_separator(&g), Err(Error::CapExceeded(_))));
    }
}
