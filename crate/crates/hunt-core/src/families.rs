//! Generators for the named graph families used throughout the toolkit,
//! including the four forbidden graphs of the 1-hunterwin characterization.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Complete graph in which every vertex also carries a loop.
    CompleteWithLoops(usize),
    Grid { rows: usize, cols: usize },
    Hypercube(usize),
    /// Central vertex with `legs` vertex-disjoint paths of `len` edges each.
    Spider { legs: usize, len: usize },
    /// 3-spider: the tree obstruction to one-hunter capture.
    H1,
    /// Two length-3 legs plus a pendant path of two edges ending in a loop.
    H2,
    /// Two length-3 legs plus a pendant loop vertex.
    H3,
    /// Two length-3 legs with a loop on the center itself.
    H4,
    Random { n: usize, edge_prob: f64, loop_prob: f64, seed: u64 },
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Path(n) => {
            require(n >= 1, "path needs n >= 1")?;
            Graph::new(n, &chain(0, n))
        }
        Family::Cycle(n) => {
            require(n >= 3, "cycle needs n >= 3")?;
            let mut e = chain(0, n);
            e.push((n - 1, 0));
            Graph::new(n, &e)
        }
        Family::Complete(n) => {
            require(n >= 1, "complete graph needs n >= 1")?;
            Graph::new(n, &clique(0, n, false))
        }
        Family::CompleteWithLoops(n) => {
            require(n >= 1, "complete graph with loops needs n >= 1")?;
            Graph::new(n, &clique(0, n, true))
        }
        Family::Grid { rows, cols } => {
            require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1")?;
            let mut e = Vec::new();
            for i in 0..rows {
                for j in 0..cols {
                    let v = i * cols + j;
                    if j + 1 < cols {
                        e.push((v, v + 1));
                    }
                    if i + 1 < rows {
                        e.push((v, v + cols));
                    }
                }
            }
            Graph::new(rows * cols, &e)
        }
        Family::Hypercube(d) => {
            require(d <= 20, "hypercube dimension too large")?;
            let n = 1usize << d;
            let mut e = Vec::new();
            for v in 0..n {
                for b in 0..d {
                    let u = v ^ (1 << b);
                    if u > v {
                        e.push((v, u));
                    }
                }
            }
            Graph::new(n, &e)
        }
        Family::Spider { legs, len } => {
            require(len >= 1, "spider legs need len >= 1")?;
            Ok(spider(legs, len))
        }
        Family::H1 => Ok(spider(3, 3)),
        Family::H2 => {
            // Center 0, legs 1-2-3 and 4-5-6, tail 7-8 with a loop on 8.
            let mut g = two_leg_base();
            g.extend([(0, 7), (7, 8), (8, 8)]);
            Graph::new(9, &g)
        }
        Family::H3 => {
            let mut g = two_leg_base();
            g.extend([(0, 7), (7, 7)]);
            Graph::new(8, &g)
        }
        Family::H4 => {
            let mut g = two_leg_base();
            g.push((0, 0));
            Graph::new(7, &g)
        }
        Family::Random { n, edge_prob, loop_prob, seed } => {
            require(
                (0.0..=1.0).contains(&edge_prob) && (0.0..=1.0).contains(&loop_prob),
                "probabilities must lie in [0, 1]",
            )?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(edge_prob) {
                        e.push((u, v));
                    }
                }
            }
            for v in 0..n {
                if rng.gen_bool(loop_prob) {
                    e.push((v, v));
                }
            }
            Graph::new(n, &e)
        }
    }
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParam(msg.to_string()))
    }
}

fn chain(start: usize, n: usize) -> Vec<(usize, usize)> {
    (0..n.saturating_sub(1)).map(|i| (start + i, start + i + 1)).collect()
}

fn clique(start: usize, n: usize, loops: bool) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for u in start..start + n {
        if loops {
            e.push((u, u));
        }
        for v in u + 1..start + n {
            e.push((u, v));
        }
    }
    e
}

fn spider(legs: usize, len: usize) -> Graph {
    let n = 1 + legs * len;
    let mut e = Vec::new();
    for l in 0..legs {
        let base = 1 + l * len;
        e.push((0, base));
        e.extend(chain(base, len));
    }
    Graph::new(n, &e).expect("spider edges are well formed")
}

/// Center 0 with legs 0-1-2-3 and 0-4-5-6, shared by H2/H3/H4.
fn two_leg_base() -> Vec<(usize, usize)> {
    vec![(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_counts() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        assert_eq!((k4.n(), k4.edge_count()), (4, 6));
        let k3l = generate(&Family::CompleteWithLoops(3)).unwrap();
        assert_eq!((k3l.n(), k3l.edge_count(), k3l.loop_count()), (3, 6, 3));
    }

    #[test]
    fn h1_shape() {
        let h1 = generate(&Family::H1).unwrap();
        assert_eq!((h1.n(), h1.edge_count()), (10, 9));
        assert_eq!(h1.degree(0), 3);
    }

    #[test]
    fn forbidden_family_shapes() {
        let h2 = generate(&Family::H2).unwrap();
        assert_eq!((h2.n(), h2.loop_count()), (9, 1));
        assert!(h2.has_loop(8));
        let h3 = generate(&Family::H3).unwrap();
        assert_eq!((h3.n(), h3.loop_count()), (8, 1));
        let h4 = generate(&Family::H4).unwrap();
        assert_eq!((h4.n(), h4.loop_count()), (7, 1));
        assert!(h4.has_loop(0));
    }

    #[test]
    fn grid_counts() {
        let g = generate(&Family::Grid { rows: 3, cols: 3 }).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 12));
        let g = generate(&Family::Grid { rows: 3, cols: 5 }).unwrap();
        assert_eq!((g.n(), g.edge_count()), (15, 3 * 4 + 5 * 2));
    }

    #[test]
    fn random_is_seed_deterministic() {
        let f = Family::Random { n: 9, edge_prob: 0.4, loop_prob: 0.2, seed: 7 };
        assert_eq!(generate(&f).unwrap(), generate(&f).unwrap());
    }

    #[test]
    fn bad_params_rejected() {
        assert!(generate(&Family::Cycle(2)).is_err());
        assert!(generate(&Family::Random { n: 3, edge_prob: 1.5, loop_prob: 0.0, seed: 0 }).is_err());
    }
}
