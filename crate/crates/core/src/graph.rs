//! Balanced bipartite graphs with bitset adjacency.
//!
//! Both color classes are indexed `0..n`. Each vertex keeps a bit row over the
//! opposite class, so membership tests are O(1) and neighbor scans are word
//! parallel. Rows are stored for both sides, which keeps the relation
//! symmetric by construction.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => f.write_str("A"),
            Side::B => f.write_str("B"),
        }
    }
}

/// A vertex named by its color class and its index inside that class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn a(index: usize) -> Self {
        Vertex { side: Side::A, index }
    }

    pub fn b(index: usize) -> Self {
        Vertex { side: Side::B, index }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::A => write!(f, "a{}", self.index),
            Side::B => write!(f, "b{}", self.index),
        }
    }
}

/// A set of vertices drawn from one color class. Members are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    side: Side,
    members: Vec<usize>,
}

impl VertexSubset {
    pub fn new(side: Side, n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&index) = members.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(VertexSubset { side, members })
    }

    pub fn empty(side: Side) -> Self {
        VertexSubset { side, members: Vec::new() }
    }

    pub fn full(side: Side, n: usize) -> Self {
        VertexSubset { side, members: (0..n).collect() }
    }

    /// Members are the set bits of `mask`.
    pub fn from_mask(side: Side, mask: u64) -> Self {
        let members = (0..64).filter(|&i| mask >> i & 1 == 1).collect();
        VertexSubset { side, members }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.side {
            Side::A => 'a',
            Side::B => 'b',
        };
        f.write_str("{")?;
        for (k, i) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{prefix}{i}")?;
        }
        f.write_str("}")
    }
}

/// Simple balanced bipartite graph on classes `A = {a_0..a_{n-1}}` and
/// `B = {b_0..b_{n-1}}`.
#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    words: usize,
    rows_a: Vec<u64>,
    rows_b: Vec<u64>,
    edges: usize,
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl BipartiteGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        BipartiteGraph {
            n,
            words,
            rows_a: vec![0; n * words],
            rows_b: vec![0; n * words],
            edges: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for a in 0..n {
            for b in 0..n {
                g.insert(a, b);
            }
        }
        g
    }

    /// Builds a graph from `(a, b)` index pairs. Repeated pairs are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Adds edge `a_a b_b`, rejecting out-of-range indices and repeats.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check_index(a)?;
        self.check_index(b)?;
        if self.insert(a, b) {
            Ok(())
        } else {
            Err(Error::DuplicateEdge { a, b })
        }
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, n: self.n })
        }
    }

    /// Inserts `a_a b_b`, returning false if it was already present.
    pub(crate) fn insert(&mut self, a: usize, b: usize) -> bool {
        let (wa, ba) = (a / WORD, a % WORD);
        let (wb, bb) = (b / WORD, b % WORD);
        let row = &mut self.rows_a[a * self.words + wb];
        if *row >> bb & 1 == 1 {
            return false;
        }
        *row |= 1 << bb;
        self.rows_b[b * self.words + wa] |= 1 << ba;
        self.edges += 1;
        true
    }

    pub(crate) fn remove(&mut self, a: usize, b: usize) -> bool {
        let (wa, ba) = (a / WORD, a % WORD);
        let (wb, bb) = (b / WORD, b % WORD);
        let row = &mut self.rows_a[a * self.words + wb];
        if *row >> bb & 1 == 0 {
            return false;
        }
        *row &= !(1 << bb);
        self.rows_b[b * self.words + wa] &= !(1 << ba);
        self.edges -= 1;
        true
    }

    /// Size of each color class.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.rows_a[a * self.words + b / WORD] >> (b % WORD) & 1 == 1
    }

    fn row(&self, v: Vertex) -> &[u64] {
        let rows = match v.side {
            Side::A => &self.rows_a,
            Side::B => &self.rows_b,
        };
        &rows[v.index * self.words..(v.index + 1) * self.words]
    }

    /// Bit row of `v` over the opposite class; bit `k` is set when `v` is
    /// adjacent to vertex `k` of the other side.
    pub fn row_bits(&self, v: Vertex) -> &[u64] {
        self.row(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &word)| BitIter(word).map(move |bit| w * WORD + bit))
    }

    /// All edges as `(a, b)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.neighbors(Vertex::a(a)).map(move |b| (a, b)))
    }

    pub fn degrees(&self, side: Side) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(Vertex { side, index: i })).collect()
    }

    /// δ(G): the minimum degree over all 2n vertices. Zero for `n = 0`.
    pub fn min_degree(&self) -> usize {
        [Side::A, Side::B]
            .into_iter()
            .flat_map(|side| (0..self.n).map(move |i| Vertex { side, index: i }))
            .map(|v| self.degree(v))
            .min()
            .unwrap_or(0)
    }

    pub fn is_regular(&self, r: usize) -> bool {
        [Side::A, Side::B]
            .into_iter()
            .all(|side| (0..self.n).all(|i| self.degree(Vertex { side, index: i }) == r))
    }

    /// True if every edge of `self` is an edge of `other` on the same vertex set.
    pub fn is_subgraph_of(&self, other: &BipartiteGraph) -> bool {
        self.n == other.n
            && self.rows_a.iter().zip(&other.rows_a).all(|(mine, theirs)| mine & !theirs == 0)
    }

    /// e(X, Y): the number of edges with one endpoint in `x ⊆ A` and the other in `y ⊆ B`.
    pub fn edge_count_between(&self, x: &VertexSubset, y: &VertexSubset) -> Result<usize> {
        if x.side() != Side::A {
            return Err(Error::SideMismatch { expected: Side::A, found: x.side() });
        }
        if y.side() != Side::B {
            return Err(Error::SideMismatch { expected: Side::B, found: y.side() });
        }
        for i in x.iter().chain(y.iter()) {
            self.check_index(i)?;
        }
        let mut mask = vec![0u64; self.words];
        for b in y.iter() {
            mask[b / WORD] |= 1 << (b % WORD);
        }
        Ok(x
            .iter()
            .map(|a| {
                self.row(Vertex::a(a))
                    .iter()
                    .zip(&mask)
                    .map(|(r, m)| (r & m).count_ones() as usize)
                    .sum::<usize>()
            })
            .sum())
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit)
    }
}

/// The circulant graph with `a_i ~ b_{(i+t) mod n}` for `t in 0..r`; every
/// vertex has degree exactly `r`.
pub fn circulant_regular(n: usize, r: usize) -> Result<BipartiteGraph> {
    if r > n {
        return Err(Error::DegreeOutOfRange { degree: r, n });
    }
    let mut g = BipartiteGraph::empty(n);
    for a in 0..n {
        for t in 0..r {
            g.insert(a, (a + t) % n);
        }
    }
    Ok(g)
}

/// Seeded random graph with minimum degree at least `d`.
///
/// Every A-vertex first picks `d` distinct neighbors uniformly. Any B-vertex
/// left below `d` is then topped up with uniformly chosen non-neighbors,
/// scanning B in index order. The RNG is ChaCha8, so output is stable across
/// platforms for a given `(n, d, seed)`.
pub fn random_min_degree(n: usize, d: usize, seed: u64) -> Result<BipartiteGraph> {
    if d > n {
        return Err(Error::DegreeOutOfRange { degree: d, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = BipartiteGraph::empty(n);
    for a in 0..n {
        for b in index::sample(&mut rng, n, d) {
            g.insert(a, b);
        }
    }
    for b in 0..n {
        let deg = g.degree(Vertex::b(b));
        if deg >= d {
            continue;
        }
        let missing: Vec<usize> = (0..n).filter(|&a| !g.has_edge(a, b)).collect();
        for k in index::sample(&mut rng, missing.len(), d - deg) {
            g.insert(missing[k], b);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph() -> BipartiteGraph {
        BipartiteGraph::from_edges(2, [(0, 0), (0, 1), (1, 1)]).unwrap()
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(BipartiteGraph::complete(3).min_degree(), 3);
        assert_eq!(BipartiteGraph::empty(2).min_degree(), 0);
        assert_eq!(circulant_regular(6, 3).unwrap().min_degree(), 3);
    }

    #[test]
    fn edge_count_between_examples() {
        let k22 = BipartiteGraph::complete(2);
        let all_a = VertexSubset::full(Side::A, 2);
        let all_b = VertexSubset::full(Side::B, 2);
        assert_eq!(k22.edge_count_between(&all_a, &all_b).unwrap(), 4);
        assert_eq!(k22.edge_count_between(&VertexSubset::empty(Side::A), &all_b).unwrap(), 0);

        let p = path_graph();
        let x = VertexSubset::new(Side::A, 2, [0]).unwrap();
        let y = VertexSubset::new(Side::B, 2, [1]).unwrap();
        assert_eq!(p.edge_count_between(&x, &y).unwrap(), 1);
    }

    #[test]
    fn edge_count_between_rejects_side_mismatch() {
        let g = BipartiteGraph::complete(2);
        let err = g
            .edge_count_between(&VertexSubset::full(Side::B, 2), &VertexSubset::full(Side::B, 2))
            .unwrap_err();
        assert_eq!(err, Error::SideMismatch { expected: Side::A, found: Side::B });
        let err = g
            .edge_count_between(&VertexSubset::full(Side::A, 2), &VertexSubset::full(Side::A, 2))
            .unwrap_err();
        assert_eq!(err, Error::SideMismatch { expected: Side::B, found: Side::A });
    }

    #[test]
    fn circulant_examples() {
        let g = circulant_regular(4, 2).unwrap();
        for i in 0..4 {
            let nb: Vec<_> = g.neighbors(Vertex::a(i)).collect();
            let mut expected = vec![i, (i + 1) % 4];
            expected.sort();
            assert_eq!(nb, expected);
        }
        assert!(g.is_regular(2));
        assert_eq!(circulant_regular(7, 0).unwrap().edge_count(), 0);
        assert_eq!(circulant_regular(5, 5).unwrap(), BipartiteGraph::complete(5));
        assert_eq!(circulant_regular(3, 4).unwrap_err(), Error::DegreeOutOfRange { degree: 4, n: 3 });
    }

    #[test]
    fn random_min_degree_examples() {
        for seed in 0..20 {
            assert!(random_min_degree(6, 3, seed).unwrap().min_degree() >= 3);
        }
        assert_eq!(random_min_degree(5, 5, 9).unwrap(), BipartiteGraph::complete(5));
        assert_eq!(random_min_degree(4, 0, 17).unwrap(), random_min_degree(4, 0, 17).unwrap());
        assert_eq!(random_min_degree(9, 5, 3).unwrap(), random_min_degree(9, 5, 3).unwrap());
        assert!(random_min_degree(3, 4, 0).is_err());
    }

    #[test]
    fn from_edges_rejects_duplicates_and_range() {
        assert_eq!(
            BipartiteGraph::from_edges(2, [(0, 1), (0, 1)]).unwrap_err(),
            Error::DuplicateEdge { a: 0, b: 1 }
        );
        assert_eq!(
            BipartiteGraph::from_edges(2, [(2, 0)]).unwrap_err(),
            Error::IndexOutOfRange { index: 2, n: 2 }
        );
    }

    #[test]
    fn adjacency_is_symmetric_across_word_boundaries() {
        let n = 130;
        let g = random_min_degree(n, 70, 5).unwrap();
        for a in 0..n {
            for b in g.neighbors(Vertex::a(a)) {
                assert!(g.neighbors(Vertex::b(b)).any(|x| x == a));
            }
        }
        let sum_a: usize = g.degrees(Side::A).iter().sum();
        let sum_b: usize = g.degrees(Side::B).iter().sum();
        assert_eq!(sum_a, g.edge_count());
        assert_eq!(sum_b, g.edge_count());
    }

    #[test]
    fn subset_display() {
        let x = VertexSubset::new(Side::A, 4, [3, 1]).unwrap();
        assert_eq!(alloc::format!("{x}"), "{a1,a3}");
        assert!(VertexSubset::new(Side::A, 4, [4]).is_err());
    }
}
