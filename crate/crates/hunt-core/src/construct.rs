//! Hunting-number-preserving and -scaling transformations, plus the hardness
//! gadget generators paired with their explicit proof strategies.
//!
//! Generators lay blocks out deterministically in the order their layout type
//! lists them, so strategies and witnesses are reproducible. Proof-strategy
//! builders are total functions of the layout and never consult the solver.

use crate::error::{Error, Result};
use crate::game::Strategy;
use crate::graph::Graph;
use crate::vset::VertexSet;

/// Half-open vertex range `[lo, hi)` occupied by a named block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockRange {
    pub name: String,
    pub lo: usize,
    pub hi: usize,
}

impl BlockRange {
    pub fn len(&self) -> usize {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.lo == self.hi
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        self.lo..self.hi
    }

    pub fn set(&self, universe: usize) -> VertexSet {
        VertexSet::from_iter(universe, self.vertices())
    }
}

/// Bipartite double cover: vertices `v` and `v' = n+v`, an edge `vw` becomes
/// `v'w` and `w'v`, a loop `vv` becomes the single edge `v'v`. The result is
/// loopless and bipartite and has the same hunting number as the input.
pub fn double_cover(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if u == v {
            edges.push((u, n + u));
        } else {
            edges.push((u, n + v));
            edges.push((v, n + u));
        }
    }
    Graph::new(2 * n, &edges).expect("double cover edges are distinct")
}

/// Product with the `p`-clique-with-loops: `p` copies of `g`, an edge `vw`
/// yielding `v^i w^j` for all copies `i, j`. Multiplies the hunting number
/// by `p`. Requires `p >= 2`.
pub fn loop_clique_product(g: &Graph, p: usize) -> Result<Graph> {
    if p < 2 {
        return Err(Error::InvalidParam("loop-clique product needs p >= 2".into()));
    }
    let n = g.n();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if u == v {
            for i in 0..p {
                for j in i..p {
                    edges.push((i * n + u, j * n + u));
                }
            }
        } else {
            for i in 0..p {
                for j in 0..p {
                    edges.push((i * n + u, j * n + v));
                }
            }
        }
    }
    Graph::new(p * n, &edges)
}

/// Join: disjoint union plus every cross edge. `h`'s vertices are shifted by
/// `g.n()`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    let mut edges = g.edges();
    for (u, v) in h.edges() {
        edges.push((n + u, n + v));
    }
    for u in 0..n {
        for v in 0..h.n() {
            edges.push((u, n + v));
        }
    }
    Graph::new(n + h.n(), &edges).expect("join edges are distinct")
}

/// Layout of the 3-partition gadget: blocks in construction order
/// `Y, Z1..Z3, V1..V_{2m+3}, U, X1..Xn, X'1..X'n`.
#[derive(Clone, Debug)]
pub struct ThreePartitionLayout {
    pub numbers: Vec<usize>,
    /// Number of groups `m = n/3`.
    pub group_count: usize,
    /// Common group sum; also the hunter budget of the proof strategy.
    pub beta: usize,
    pub blocks: Vec<BlockRange>,
    /// Allowed rabbit start positions `Z1 ∪ Z2 ∪ V1 ∪ X1 ∪ … ∪ Xn`.
    pub start: VertexSet,
}

impl ThreePartitionLayout {
    pub fn block(&self, name: &str) -> &BlockRange {
        self.blocks
            .iter()
            .find(|b| b.name == name)
            .unwrap_or_else(|| panic!("no block named {name}"))
    }

    pub fn universe(&self) -> usize {
        self.blocks.last().map_or(0, |b| b.hi)
    }
}

/// Builds the 3-partition gadget. The instance numbers must come in triples
/// (`n = 3m`), sum to `m·β`, and each satisfy `β/4 < a_i < β/2`. The gadget
/// has `(4m+8)β + 2` vertices; the instance admits a 3-partition iff `β`
/// hunters can clear the start set.
///
/// Block wiring: consecutive `V_i` fully connected; `X_i`–`X'_i`; `Z2`–`Z3`;
/// `U` (a clique on `β+2` vertices) fully connected to `Z1`, `Z3`,
/// `V_{2m+3}` and `Y`; each `X'_i` fully connected to `Y`. The only way out
/// of the `X` region is through `Y`, which the proof strategy shoots on the
/// odd rounds.
pub fn three_partition_gadget(numbers: &[usize]) -> Result<(Graph, ThreePartitionLayout)> {
    let n = numbers.len();
    if n == 0 || n % 3 != 0 {
        return Err(Error::InvalidParam(format!(
            "3-partition needs a positive multiple of 3 numbers, got {n}"
        )));
    }
    let m = n / 3;
    let total: usize = numbers.iter().sum();
    if total % m != 0 {
        return Err(Error::InvalidParam(format!(
            "numbers sum to {total}, not divisible by m = {m}"
        )));
    }
    let beta = total / m;
    for (i, &a) in numbers.iter().enumerate() {
        if 4 * a <= beta || 2 * a >= beta {
            return Err(Error::InvalidParam(format!(
                "number a_{} = {a} violates beta/4 < a_i < beta/2 for beta = {beta}",
                i + 1
            )));
        }
    }

    let mut blocks = Vec::new();
    let mut next = 0usize;
    let mut push = |name: String, size: usize, next: &mut usize| {
        blocks.push(BlockRange { name, lo: *next, hi: *next + size });
        *next += size;
    };
    push("Y".into(), beta, &mut next);
    for j in 1..=3 {
        push(format!("Z{j}"), beta, &mut next);
    }
    for i in 1..=2 * m + 3 {
        push(format!("V{i}"), beta, &mut next);
    }
    push("U".into(), beta + 2, &mut next);
    for (i, &a) in numbers.iter().enumerate() {
        push(format!("X{}", i + 1), a, &mut next);
    }
    for (i, &a) in numbers.iter().enumerate() {
        push(format!("X'{}", i + 1), a, &mut next);
    }
    let total_vertices = next;
    debug_assert_eq!(total_vertices, (4 * m + 8) * beta + 2);

    let find = |name: &str| blocks.iter().find(|b| b.name == name).unwrap().clone();
    let mut edges = Vec::new();
    let fully_connect = |a: &BlockRange, b: &BlockRange, edges: &mut Vec<(usize, usize)>| {
        for u in a.vertices() {
            for v in b.vertices() {
                edges.push((u, v));
            }
        }
    };
    let u_block = find("U");
    for u in u_block.vertices() {
        for v in u + 1..u_block.hi {
            edges.push((u, v));
        }
    }
    for i in 1..=2 * m + 2 {
        fully_connect(&find(&format!("V{i}")), &find(&format!("V{}", i + 1)), &mut edges);
    }
    for i in 1..=n {
        fully_connect(&find(&format!("X{i}")), &find(&format!("X'{i}")), &mut edges);
    }
    fully_connect(&find("Z2"), &find("Z3"), &mut edges);
    for name in ["Z3", "Z1", &format!("V{}", 2 * m + 3), "Y"] {
        fully_connect(&find(name), &u_block, &mut edges);
    }
    let y_block = find("Y");
    for i in 1..=n {
        fully_connect(&find(&format!("X'{i}")), &y_block, &mut edges);
    }

    let mut start = VertexSet::empty(total_vertices);
    for name in ["Z1", "Z2", "V1"] {
        start.union_with(&find(name).set(total_vertices));
    }
    for i in 1..=n {
        start.union_with(&find(&format!("X{i}")).set(total_vertices));
    }

    let graph = Graph::new(total_vertices, &edges)?;
    let layout = ThreePartitionLayout {
        numbers: numbers.to_vec(),
        group_count: m,
        beta,
        blocks,
        start,
    };
    Ok((graph, layout))
}

/// The forward-direction proof strategy for a caller-supplied partition:
/// shoot `Z1, Z3, Y, S_1, Y, S_2, …, Y, S_m, V_{2m+3}, …, V_2`, where `S_j`
/// is the union of the `X'_i` blocks of group `j`. Uses exactly `β` hunters
/// and `4m + 4` rounds. `groups` holds 0-based indices into the instance
/// numbers and must be a partition with each group summing to `β`.
pub fn three_partition_strategy(
    layout: &ThreePartitionLayout,
    groups: &[Vec<usize>],
) -> Result<Strategy> {
    let n = layout.numbers.len();
    let universe = layout.universe();
    if groups.len() != layout.group_count {
        return Err(Error::InvalidParam(format!(
            "expected {} groups, got {}",
            layout.group_count,
            groups.len()
        )));
    }
    let mut seen = vec![false; n];
    for group in groups {
        let mut sum = 0;
        for &i in group {
            if i >= n {
                return Err(Error::InvalidParam(format!("group index {i} out of range")));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParam(format!("index {i} used twice")));
            }
            sum += layout.numbers[i];
        }
        if sum != layout.beta {
            return Err(Error::InvalidParam(format!(
                "group sums to {sum}, expected beta = {}",
                layout.beta
            )));
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::InvalidParam("groups do not cover every number".into()));
    }

    let block_set = |name: &str| layout.block(name).set(universe);
    let mut shots = vec![block_set("Z1"), block_set("Z3")];
    for group in groups {
        shots.push(block_set("Y"));
        let mut s = VertexSet::empty(universe);
        for &i in group {
            s.union_with(&block_set(&format!("X'{}", i + 1)));
        }
        shots.push(s);
    }
    for i in (2..=2 * layout.group_count + 3).rev() {
        shots.push(block_set(&format!("V{i}")));
    }
    Strategy::new(universe, layout.beta, shots)
}

/// Layout of the start-set gadget: the inner graph keeps vertices `0..n`,
/// followed by blocks `A` (loop-clique on `n-k`), `B` (loop-clique on `k`)
/// and `C` (loop-clique on `2k`).
#[derive(Clone, Debug)]
pub struct StartSetGadgetLayout {
    pub inner_n: usize,
    pub k: usize,
    pub blocks: Vec<BlockRange>,
    /// The inner start set, embedded in the gadget universe.
    pub start: VertexSet,
}

impl StartSetGadgetLayout {
    pub fn block(&self, name: &str) -> &BlockRange {
        self.blocks
            .iter()
            .find(|b| b.name == name)
            .unwrap_or_else(|| panic!("no block named {name}"))
    }

    pub fn universe(&self) -> usize {
        self.inner_n + self.blocks.iter().map(BlockRange::len).sum::<usize>()
    }
}

/// Reduces the start-restricted game to the unrestricted one: builds `H`
/// containing `g` plus loop-cliques `A` (size `n-k`), `B` (size `k`) and `C`
/// (size `2k`), with `A` fully connected to `B`, `C` and the start set, and
/// `B` fully connected to all of `g` and `A`. Then `h_S(g) <= k` iff
/// `h(H) = n + k` (and `h(H) >= n + k` always, since `A ∪ C` is a
/// loop-clique on `n + k` vertices).
///
/// Computing `h_S` this way takes O(log n) gadget solves over candidate `k`;
/// the exact solver answers start-restricted queries directly, so that
/// recipe is only exercised at toy scale in tests.
pub fn start_set_gadget(
    g: &Graph,
    start: &VertexSet,
    k: usize,
) -> Result<(Graph, StartSetGadgetLayout)> {
    let n = g.n();
    if start.universe() != n {
        return Err(Error::UniverseMismatch { expected: n, got: start.universe() });
    }
    if k < 1 || k > start.len() {
        return Err(Error::InvalidParam(format!(
            "k = {k} must satisfy 1 <= k <= |start| = {}",
            start.len()
        )));
    }
    let blocks = vec![
        BlockRange { name: "A".into(), lo: n, hi: n + (n - k) },
        BlockRange { name: "B".into(), lo: n + (n - k), hi: 2 * n },
        BlockRange { name: "C".into(), lo: 2 * n, hi: 2 * n + 2 * k },
    ];
    let total = 2 * n + 2 * k;

    let mut edges = g.edges();
    for block in &blocks {
        for u in block.vertices() {
            edges.push((u, u));
            for v in u + 1..block.hi {
                edges.push((u, v));
            }
        }
    }
    let (a, b, c) = (&blocks[0], &blocks[1], &blocks[2]);
    for u in a.vertices() {
        for v in b.vertices() {
            edges.push((u, v));
        }
        for v in c.vertices() {
            edges.push((u, v));
        }
        for v in start.iter() {
            edges.push((u, v));
        }
    }
    for u in b.vertices() {
        for v in 0..n {
            edges.push((u, v));
        }
    }

    let graph = Graph::new(total, &edges)?;
    let mut embedded = VertexSet::empty(total);
    for v in start.iter() {
        embedded.insert(v);
    }
    let layout = StartSetGadgetLayout { inner_n: n, k, blocks, start: embedded };
    Ok((graph, layout))
}

/// Wraps a winning start-restricted strategy (budget at most `k`) into an
/// `(n+k)`-hunter strategy for the gadget: `W_1 = B ∪ V`, then each inner
/// shot padded with `A ∪ B`, and finally `A ∪ C`.
pub fn start_set_gadget_strategy(
    layout: &StartSetGadgetLayout,
    inner: &Strategy,
) -> Result<Strategy> {
    let n = layout.inner_n;
    if inner.universe() != n {
        return Err(Error::UniverseMismatch { expected: n, got: inner.universe() });
    }
    if inner.max_shot_size() > layout.k {
        return Err(Error::InvalidParam(format!(
            "inner strategy shoots {} vertices, more than k = {}",
            inner.max_shot_size(),
            layout.k
        )));
    }
    let total = layout.universe();
    let lift = |s: &VertexSet| VertexSet::from_iter(total, s.iter());
    let a = layout.block("A").set(total);
    let b = layout.block("B").set(total);
    let c = layout.block("C").set(total);
    let inner_vertices = VertexSet::from_iter(total, 0..n);

    let mut shots = vec![b.union(&inner_vertices)];
    for w in inner.shots() {
        let mut shot = lift(w);
        shot.union_with(&a);
        shot.union_with(&b);
        shots.push(shot);
    }
    shots.push(a.union(&c));
    Strategy::new(total, n + layout.k, shots)
}

/// Disjoint union with a `k`-clique. For `k >= 4`, deciding the two-round
/// game on `g` with budget `k` is equivalent to deciding the three-round game
/// on the result with the same budget.
pub fn union_with_clique(g: &Graph, k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(Error::InvalidParam(
            "the two-to-three round equivalence requires k >= 4".into(),
        ));
    }
    let n = g.n();
    let mut edges = g.edges();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((n + u, n + v));
        }
    }
    Graph::new(n + k, &edges)
}

/// Disjoint union with the complete split block: a `k`-clique fully connected
/// to an independent set on `k+1` vertices. For `k > 2`, the budget-`k`
/// `l`-round game on `g` is equivalent to the `(l+2)`-round game on the
/// result.
pub fn union_with_complete_split(g: &Graph, k: usize) -> Result<Graph> {
    if k <= 2 {
        return Err(Error::InvalidParam(
            "the round-extension equivalence requires k > 2".into(),
        ));
    }
    let n = g.n();
    let mut edges = g.edges();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((n + u, n + v));
        }
        for v in 0..k + 1 {
            edges.push((n + u, n + k + v));
        }
    }
    Graph::new(n + 2 * k + 1, &edges)
}

/// Replaces every vertex by an `m`-clique, with complete joins between the
/// cliques of adjacent vertices. Output is loopless (a loop adds nothing: its
/// clique is already complete). Relates the exact-bisection and
/// stable-separator problems: `EVB(g) <= k` iff `BSS(blowup) <= k·m`.
pub fn clique_blowup(g: &Graph, m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParam("blowup needs m >= 1".into()));
    }
    let n = g.n().checked_mul(m).filter(|&t| t <= 100_000).ok_or_else(|| {
        Error::CapExceeded(format!("blowup of {} vertices by {m}", g.n()))
    })?;
    let mut edges = Vec::new();
    for v in 0..g.n() {
        for a in 0..m {
            for b in a + 1..m {
                edges.push((v * m + a, v * m + b));
            }
        }
    }
    for (u, v) in g.edges() {
        if u == v {
            continue;
        }
        for a in 0..m {
            for b in 0..m {
                edges.push((u * m + a, v * m + b));
            }
        }
    }
    Graph::new(n, &edges)
}
