//! Polynomial special cases and bound machinery for the round-limited game:
//! bipartite matching (the exact two-round solver on bipartite graphs), the
//! exhaustive two-round optimum, the matching/vertex-cover inequality chain,
//! the layered min-cut approximation, and the separator oracles.

pub mod layered;
pub mod matching;
pub mod separators;

pub use layered::{build_layered, layered_min_cut, CutShot, LayeredGraph};
pub use matching::{
    bipartite_matching, greedy_matching, maximum_matching_exact, minimum_vertex_cover_exact,
};
pub use separators::{bisection_stable_separator, exact_vertex_bisection, SeparatorPartition};

use crate::construct::double_cover;
use crate::error::{Error, Result};
use crate::graph::{degeneracy, Graph};

/// Vertex cap for the exhaustive/exact components (separator oracles, exact
/// matching and vertex cover, two-round brute force).
pub const EXACT_CAP: usize = 20;

/// Exhaustive two-round optimum: `min_S max(|S|, |N(V \ S)|)` — shoot `S`
/// first, then everything the survivors can reach. Capped at `EXACT_CAP`.
pub fn h2_brute_force(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > EXACT_CAP {
        return Err(Error::CapExceeded(format!(
            "two-round brute force on {n} > {EXACT_CAP} vertices"
        )));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let full = (1u32 << n) - 1;
    let mut best = n;
    for s in 0..=full {
        let first = s.count_ones() as usize;
        if first >= best {
            continue;
        }
        let mut reach = 0u32;
        let mut rest = full & !s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            reach |= adj[v];
        }
        best = best.min(first.max(reach.count_ones() as usize));
    }
    Ok(best)
}

/// The quantities of the matching/vertex-cover inequality chain:
/// `⌈VC/2⌉ ≤ M ≤ ⌈VC(B_G)/2⌉ ≤ h(G,2) ≤ VC ≤ 2M ≤ VC(B_G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub matching: usize,
    pub vertex_cover: usize,
    /// Vertex cover of the bipartite double cover, computed as its maximum
    /// matching (König).
    pub vc_double_cover: usize,
    pub degeneracy: usize,
    /// False when the instance exceeded the exact cap and `matching` /
    /// `vertex_cover` degraded to greedy bracketing values.
    pub exact: bool,
}

impl BoundsReport {
    pub fn half_vc(&self) -> usize {
        self.vertex_cover.div_ceil(2)
    }

    pub fn half_vc_double_cover(&self) -> usize {
        self.vc_double_cover.div_ceil(2)
    }

    pub fn double_matching(&self) -> usize {
        2 * self.matching
    }
}

/// Computes every chain quantity. Beyond the exact cap, the matching degrades
/// to a greedy maximal matching (a lower bound) and the cover to twice it (an
/// upper bound), flagged via `exact = false`; the double-cover value stays
/// exact since bipartite matching is polynomial.
pub fn bounds_chain(g: &Graph) -> Result<BoundsReport> {
    let cover = double_cover(g);
    let (vc_double_cover, _) = bipartite_matching(&cover)?;
    let (matching, vertex_cover, exact) = if g.n() <= EXACT_CAP {
        (maximum_matching_exact(g)?, minimum_vertex_cover_exact(g)?, true)
    } else {
        let greedy = greedy_matching(g);
        (greedy, 2 * greedy, false)
    };
    Ok(BoundsReport {
        matching,
        vertex_cover,
        vc_double_cover,
        degeneracy: degeneracy(g),
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, Family};

    #[test]
    fn h2_examples() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        assert_eq!(h2_brute_force(&k4).unwrap(), 3);
        let p4 = generate(&Family::Path(4)).unwrap();
        assert_eq!(h2_brute_force(&p4).unwrap(), 2);
        // two disjoint 4-cliques
        let mut edges = Vec::new();
        for base in [0, 4] {
            for u in 0..4 {
                for v in u + 1..4 {
                    edges.push((base + u, base + v));
                }
            }
        }
        let g = Graph::new(8, &edges).unwrap();
        assert_eq!(h2_brute_force(&g).unwrap(), 4);
    }

    #[test]
    fn chain_examples() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        let r = bounds_chain(&k4).unwrap();
        assert_eq!((r.matching, r.vertex_cover, r.vc_double_cover), (2, 3, 4));
        assert!(r.exact);

        let p4 = generate(&Family::Path(4)).unwrap();
        let r = bounds_chain(&p4).unwrap();
        assert_eq!((r.matching, r.vertex_cover, r.vc_double_cover), (2, 2, 4));

        let mut edges = Vec::new();
        for base in [0, 4] {
            for u in 0..4 {
                for v in u + 1..4 {
                    edges.push((base + u, base + v));
                }
            }
        }
        let two_k4 = Graph::new(8, &edges).unwrap();
        let r = bounds_chain(&two_k4).unwrap();
        assert_eq!((r.matching, r.vertex_cover, r.vc_double_cover), (4, 6, 8));
    }

    #[test]
    fn big_instances_degrade_with_flag() {
        let g = generate(&Family::Random { n: 40, edge_prob: 0.2, loop_prob: 0.0, seed: 5 })
            .unwrap();
        let r = bounds_chain(&g).unwrap();
        assert!(!r.exact);
        assert_eq!(r.vertex_cover, 2 * r.matching);
    }
}
