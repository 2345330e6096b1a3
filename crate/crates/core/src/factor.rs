//! Constructive f-factors through a max-flow reduction.
//!
//! The network has a source arc `s -> a` of capacity `f(a)` for each A-vertex,
//! a unit arc `a -> b` for each edge, and a sink arc `b -> t` of capacity
//! `f(b)`. An f-factor exists iff the maximum flow saturates every source arc,
//! and the unit arcs that carry flow are then the factor's edges.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::flow::{ArcId, FlowNetwork};
use crate::graph::{BipartiteGraph, Side, Vertex};

/// Target degrees for every vertex of a balanced bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSpec {
    targets_a: Vec<usize>,
    targets_b: Vec<usize>,
}

impl FactorSpec {
    pub fn new(targets_a: Vec<usize>, targets_b: Vec<usize>) -> Result<Self> {
        let n = targets_a.len();
        if targets_b.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: targets_b.len() });
        }
        if let Some(&degree) = targets_a.iter().chain(&targets_b).find(|&&t| t > n) {
            return Err(Error::DegreeOutOfRange { degree, n });
        }
        Ok(FactorSpec { targets_a, targets_b })
    }

    /// f ≡ r on all 2n vertices.
    pub fn constant(n: usize, r: usize) -> Result<Self> {
        Self::new(alloc::vec![r; n], alloc::vec![r; n])
    }

    pub fn n(&self) -> usize {
        self.targets_a.len()
    }

    pub fn targets(&self, side: Side) -> &[usize] {
        match side {
            Side::A => &self.targets_a,
            Side::B => &self.targets_b,
        }
    }

    pub fn target(&self, v: Vertex) -> usize {
        self.targets(v.side)[v.index]
    }

    pub fn sum(&self, side: Side) -> u64 {
        self.targets(side).iter().map(|&t| t as u64).sum()
    }
}

/// The reduction network for one graph. Capacities of the source and sink
/// arcs can be reset, so a binary search over `r` builds it only once.
struct FactorNetwork<'g> {
    graph: &'g BipartiteGraph,
    net: FlowNetwork,
    source_arcs: Vec<ArcId>,
    sink_arcs: Vec<ArcId>,
    middle: Vec<(usize, usize, ArcId)>,
}

impl<'g> FactorNetwork<'g> {
    fn new(graph: &'g BipartiteGraph) -> Self {
        let n = graph.n();
        let (source, sink) = (2 * n, 2 * n + 1);
        let mut net = FlowNetwork::with_capacity(2 * n + 2, graph.edge_count() + 2 * n);
        let source_arcs = (0..n).map(|a| net.add_arc(source, a, 0)).collect();
        let middle = graph
            .edges()
            .map(|(a, b)| (a, b, net.add_arc(a, n + b, 1)))
            .collect();
        let sink_arcs = (0..n).map(|b| net.add_arc(n + b, sink, 0)).collect();
        FactorNetwork { graph, net, source_arcs, sink_arcs, middle }
    }

    /// Runs the flow for targets `f` and returns whether it saturates.
    fn saturate(&mut self, f: &FactorSpec) -> bool {
        let n = self.graph.n();
        for (arc, &t) in self.source_arcs.iter().zip(f.targets(Side::A)) {
            self.net.set_capacity(*arc, t as u32);
        }
        for (arc, &t) in self.sink_arcs.iter().zip(f.targets(Side::B)) {
            self.net.set_capacity(*arc, t as u32);
        }
        for &(_, _, arc) in &self.middle {
            self.net.set_capacity(arc, 1);
        }
        let value = self.net.max_flow(2 * n, 2 * n + 1);
        debug_assert!(value <= f.sum(Side::A));
        value == f.sum(Side::A)
    }

    fn extract(&self) -> BipartiteGraph {
        let mut h = BipartiteGraph::empty(self.graph.n());
        for &(a, b, arc) in &self.middle {
            if self.net.flow(arc) == 1 {
                h.insert(a, b);
            }
        }
        h
    }
}

/// Finds a spanning subgraph `H ⊆ g` with `deg_H(x) = f(x)` for every vertex,
/// or `None` if there is none.
///
/// Which factor comes back is whatever the deterministic augmentation order
/// produces.
pub fn find_f_factor(g: &BipartiteGraph, f: &FactorSpec) -> Result<Option<BipartiteGraph>> {
    if f.n() != g.n() {
        return Err(Error::SizeMismatch { expected: g.n(), found: f.n() });
    }
    if f.sum(Side::A) != f.sum(Side::B) {
        return Ok(None);
    }
    let mut network = FactorNetwork::new(g);
    Ok(network.saturate(f).then(|| network.extract()))
}

/// Finds an `r`-regular spanning subgraph of `g`.
pub fn find_regular_factor(g: &BipartiteGraph, r: usize) -> Result<Option<BipartiteGraph>> {
    let f = FactorSpec::constant(g.n(), r)?;
    find_f_factor(g, &f)
}

/// Largest `r` for which `g` has an `r`-regular spanning subgraph, together
/// with one such subgraph.
///
/// Feasibility is downward closed in `r`, so this binary searches over
/// `[0, δ(g)]`.
pub fn max_regular_factor(g: &BipartiteGraph) -> (usize, BipartiteGraph) {
    let n = g.n();
    let mut network = FactorNetwork::new(g);
    let (mut lo, mut hi) = (0, g.min_degree());
    let mut best = BipartiteGraph::empty(n);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        let f = FactorSpec::constant(n, mid).expect("mid <= min degree <= n");
        if network.saturate(&f) {
            lo = mid;
            best = network.extract();
        } else {
            hi = mid - 1;
        }
    }
    (lo, best)
}

pub fn max_regular_degree(g: &BipartiteGraph) -> usize {
    max_regular_factor(g).0
}

/// Splits an `r`-regular graph into `r` edge-disjoint perfect matchings.
///
/// Each round extracts a perfect matching from what is left, which stays
/// regular, so Hall's condition holds every time.
pub fn decompose_into_matchings(h: &BipartiteGraph, r: usize) -> Result<Vec<BipartiteGraph>> {
    if !h.is_regular(r) {
        return Err(Error::NotRegular { degree: r });
    }
    let mut rest = h.clone();
    let mut matchings = Vec::with_capacity(r);
    for _ in 0..r {
        let m = find_regular_factor(&rest, 1)?.expect("regular bipartite graphs have perfect matchings");
        for (a, b) in m.edges() {
            rest.remove(a, b);
        }
        matchings.push(m);
    }
    debug_assert_eq!(rest.edge_count(), 0);
    Ok(matchings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::circulant_regular;

    fn path_graph() -> BipartiteGraph {
        BipartiteGraph::from_edges(2, [(0, 0), (0, 1), (1, 1)]).unwrap()
    }

    fn assert_factor(g: &BipartiteGraph, f: &FactorSpec, h: &BipartiteGraph) {
        assert!(h.is_subgraph_of(g));
        for side in [Side::A, Side::B] {
            assert_eq!(h.degrees(side), f.targets(side));
        }
    }

    #[test]
    fn f_factor_examples() {
        let k22 = BipartiteGraph::complete(2);
        let f = FactorSpec::constant(2, 1).unwrap();
        let h = find_f_factor(&k22, &f).unwrap().unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_factor(&k22, &f, &h);

        let f2 = FactorSpec::constant(2, 2).unwrap();
        assert_eq!(find_f_factor(&path_graph(), &f2).unwrap(), None);

        let c = circulant_regular(6, 3).unwrap();
        let f = FactorSpec::constant(6, 2).unwrap();
        let h = find_f_factor(&c, &f).unwrap().unwrap();
        assert_factor(&c, &f, &h);
    }

    #[test]
    fn non_constant_targets() {
        let g = BipartiteGraph::complete(3);
        let f = FactorSpec::new(alloc::vec![3, 1, 0], alloc::vec![2, 1, 1]).unwrap();
        let h = find_f_factor(&g, &f).unwrap().unwrap();
        assert_factor(&g, &f, &h);
        // Unequal sums can never be realized.
        let f = FactorSpec::new(alloc::vec![2, 1], alloc::vec![1, 1]).unwrap();
        assert_eq!(find_f_factor(&BipartiteGraph::complete(2), &f).unwrap(), None);
    }

    #[test]
    fn spec_validation() {
        assert_eq!(FactorSpec::constant(3, 4).unwrap_err(), Error::DegreeOutOfRange { degree: 4, n: 3 });
        assert!(FactorSpec::new(alloc::vec![1], alloc::vec![1, 1]).is_err());
        let f = FactorSpec::constant(3, 1).unwrap();
        assert_eq!(
            find_f_factor(&BipartiteGraph::complete(2), &f).unwrap_err(),
            Error::SizeMismatch { expected: 2, found: 3 }
        );
    }

    #[test]
    fn regular_factor_examples() {
        let k4 = BipartiteGraph::complete(4);
        assert_eq!(find_regular_factor(&k4, 4).unwrap().unwrap(), k4);
        let g = circulant_regular(5, 2).unwrap();
        assert_eq!(find_regular_factor(&g, 0).unwrap().unwrap(), BipartiteGraph::empty(5));
        assert!(find_regular_factor(&g, 6).is_err());
    }

    #[test]
    fn max_regular_degree_examples() {
        assert_eq!(max_regular_degree(&BipartiteGraph::complete(5)), 5);
        assert_eq!(max_regular_degree(&circulant_regular(7, 1).unwrap()), 1);
        assert_eq!(max_regular_degree(&BipartiteGraph::empty(3)), 0);
        assert_eq!(max_regular_degree(&path_graph()), 1);
        let (r, h) = max_regular_factor(&circulant_regular(6, 4).unwrap());
        assert_eq!(r, 4);
        assert!(h.is_regular(4));
    }

    #[test]
    fn decomposition_examples() {
        let g = circulant_regular(5, 3).unwrap();
        let ms = decompose_into_matchings(&g, 3).unwrap();
        assert_eq!(ms.len(), 3);
        // The only perfect matchings inside a 3-shift circulant on 5 vertices
        // are the shifts themselves.
        let mut shifts: Vec<usize> = ms
            .iter()
            .map(|m| {
                let (a, b) = m.edges().next().unwrap();
                let t = (b + 5 - a) % 5;
                assert!(m.edges().all(|(a, b)| (b + 5 - a) % 5 == t));
                t
            })
            .collect();
        shifts.sort();
        assert_eq!(shifts, [0, 1, 2]);

        let k3 = BipartiteGraph::complete(3);
        assert_eq!(decompose_into_matchings(&k3, 3).unwrap().len(), 3);

        let m = circulant_regular(4, 1).unwrap();
        assert_eq!(decompose_into_matchings(&m, 1).unwrap(), [m.clone()]);

        assert_eq!(decompose_into_matchings(&path_graph(), 1).unwrap_err(), Error::NotRegular { degree: 1 });
    }
}
