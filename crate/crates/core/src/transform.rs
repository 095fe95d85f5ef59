//! Derived graphs whose proper colorings are exactly the colorings of the
//! original graph under one of the four modes, plus the structural
//! predicates that relate the modes to each other.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::coloring::Mode;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Joins every pair of vertices that are the ends of a simple path on four
/// distinct vertices.
pub fn three_step_graph(g: &Graph) -> Graph {
    let n = g.n();
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for (u, row) in adj.iter_mut().enumerate() {
        for &x in g.neighbors(u) {
            for &y in g.neighbors(x) {
                if y == u {
                    continue;
                }
                for &v in g.neighbors(y) {
                    if v != u && v != x {
                        row.insert(v);
                    }
                }
            }
        }
    }
    Graph::from_adjacency(adj)
}

/// Joins every pair at distance one or two.
pub fn square_graph(g: &Graph) -> Graph {
    let n = g.n();
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for (u, row) in adj.iter_mut().enumerate() {
        for &x in g.neighbors(u) {
            row.insert(x);
            row.union_with(g.neighbor_set(x));
        }
        row.set(u, false);
    }
    Graph::from_adjacency(adj)
}

/// Joins every pair with a common neighbor.
pub fn two_step_graph(g: &Graph) -> Graph {
    let n = g.n();
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for (u, row) in adj.iter_mut().enumerate() {
        for &x in g.neighbors(u) {
            row.union_with(g.neighbor_set(x));
        }
        row.set(u, false);
    }
    Graph::from_adjacency(adj)
}

/// The graph whose proper colorings are the `mode`-colorings of `g`.
pub fn derived_graph(g: &Graph, mode: Mode) -> Graph {
    match mode {
        Mode::Proper => g.clone().without_labels(),
        Mode::Injective => two_step_graph(g),
        Mode::TwoDistance => square_graph(g),
        Mode::EInjective => three_step_graph(g),
    }
}

/// Hypotheses under which the e-injective number compares with the other
/// chromatic numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructurePredicate {
    /// Every edge has its ends joined by a P4.
    AdjImpliesP4,
    /// The ends of every P4 are adjacent.
    P4ImpliesAdj,
    /// Any two neighbors of a common vertex are joined by a P4.
    NeighborsArePairwiseP4,
    /// The ends of every P4 have a common neighbor.
    P4ImpliesCommonNeighbor,
    /// Any two of the three vertices of a P3 are joined by a P4.
    P3PairsAreP4Ends,
    /// The ends of every P4 are adjacent or have a common neighbor.
    P4ImpliesAdjOrCommonNeighbor,
}

impl StructurePredicate {
    pub const ALL: [StructurePredicate; 6] = [
        StructurePredicate::AdjImpliesP4,
        StructurePredicate::P4ImpliesAdj,
        StructurePredicate::NeighborsArePairwiseP4,
        StructurePredicate::P4ImpliesCommonNeighbor,
        StructurePredicate::P3PairsAreP4Ends,
        StructurePredicate::P4ImpliesAdjOrCommonNeighbor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StructurePredicate::AdjImpliesP4 => "adj-implies-p4",
            StructurePredicate::P4ImpliesAdj => "p4-implies-adj",
            StructurePredicate::NeighborsArePairwiseP4 => "neighbors-are-pairwise-p4",
            StructurePredicate::P4ImpliesCommonNeighbor => "p4-implies-common-neighbor",
            StructurePredicate::P3PairsAreP4Ends => "p3-pairs-are-p4-ends",
            StructurePredicate::P4ImpliesAdjOrCommonNeighbor => "p4-implies-adj-or-common-neighbor",
        }
    }
}

impl fmt::Display for StructurePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StructurePredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        StructurePredicate::ALL
            .into_iter()
            .find(|p| p.as_str().replace('-', "") == key)
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

/// Evaluates `kind` over all relevant vertex tuples of `g`.
pub fn structure_predicate(g: &Graph, kind: StructurePredicate) -> bool {
    use StructurePredicate::*;
    let n = g.n();
    let p4 = |u: usize, v: usize| g.p4_witness(u, v).is_some();
    match kind {
        AdjImpliesP4 => g.edges().all(|(u, v)| p4(u, v)),
        NeighborsArePairwiseP4 => (0..n).all(|c| {
            let ns = g.neighbors(c);
            ns.iter()
                .enumerate()
                .all(|(i, &a)| ns[i + 1..].iter().all(|&b| p4(a, b)))
        }),
        P3PairsAreP4Ends => (0..n).all(|b| {
            let ns = g.neighbors(b);
            ns.iter().enumerate().all(|(i, &a)| {
                ns[i + 1..]
                    .iter()
                    .all(|&c| p4(a, b) && p4(b, c) && p4(a, c))
            })
        }),
        P4ImpliesAdj | P4ImpliesCommonNeighbor | P4ImpliesAdjOrCommonNeighbor => {
            let s3 = three_step_graph(g);
            let holds = s3.edges().all(|(u, v)| match kind {
                P4ImpliesAdj => g.has_edge(u, v),
                P4ImpliesCommonNeighbor => g.has_common_neighbor(u, v),
                _ => g.has_edge(u, v) || g.has_common_neighbor(u, v),
            });
            holds
        }
    }
}
