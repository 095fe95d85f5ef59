//! Simple undirected graphs on dense vertex indices.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Vertex index in `0..n`.
pub type Vertex = usize;

/// A finite simple undirected graph.
///
/// Adjacency is kept twice: as per-vertex bitsets for constant-time
/// membership and fast set intersection, and as sorted neighbor lists for
/// iteration. Graphs are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    nbrs: Vec<Vec<Vertex>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate pairs.
    ///
    /// Rejects self-loops and endpoints outside `0..n`.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![FixedBitSet::with_capacity(n); n])
    }

    /// Builds from a symmetric, loop-free adjacency matrix. Callers inside the
    /// crate guarantee both properties.
    pub(crate) fn from_adjacency(adj: Vec<FixedBitSet>) -> Self {
        let nbrs: Vec<Vec<Vertex>> = adj.iter().map(|row| row.ones().collect()).collect();
        let degree_sum: usize = nbrs.iter().map(Vec::len).sum();
        debug_assert!(adj.iter().enumerate().all(|(u, row)| !row.contains(u)));
        debug_assert_eq!(degree_sum % 2, 0);
        Graph {
            adj,
            nbrs,
            edge_count: degree_sum / 2,
            labels: None,
        }
    }

    /// Attaches per-vertex labels. The label count must equal the vertex count.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.nbrs[v]
    }

    /// Open neighborhood of `v` as a bitset.
    pub fn neighbor_set(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.nbrs[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.nbrs.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.nbrs.iter().any(Vec::is_empty)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.nbrs
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Whether `u` and `v` share at least one neighbor.
    pub fn has_common_neighbor(&self, u: Vertex, v: Vertex) -> bool {
        !self.adj[u].is_disjoint(&self.adj[v])
    }

    /// Whether some simple path `u x y v` on four distinct vertices exists.
    ///
    /// Rejects `u == v`: a vertex is never its own partner.
    pub fn has_p4_between(&self, u: Vertex, v: Vertex) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self.p4_witness_unchecked(u, v).is_some())
    }

    /// Inner vertices `(x, y)` of some path `u x y v`, if one exists.
    pub fn p4_witness(&self, u: Vertex, v: Vertex) -> Option<(Vertex, Vertex)> {
        if u == v || u >= self.n() || v >= self.n() {
            return None;
        }
        self.p4_witness_unchecked(u, v)
    }

    fn p4_witness_unchecked(&self, u: Vertex, v: Vertex) -> Option<(Vertex, Vertex)> {
        // y ranges over N(x) ∩ N(v); y != x and y != v hold automatically,
        // only y == u has to be excluded.
        for &x in &self.nbrs[u] {
            if x == v {
                continue;
            }
            let y = self.adj[x].intersection(&self.adj[v]).find(|&y| y != u);
            if let Some(y) = y {
                return Some((x, y));
            }
        }
        None
    }

    /// Single-source BFS distances; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in &self.nbrs[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.bfs_distances(u)[v]
    }

    /// Largest shortest-path distance, or `Infinite` for disconnected graphs.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.bfs_distances(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp: Vec<Vertex> = self
                .bfs_distances(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            comp.sort_unstable();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`, reindexed in the given order.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![FixedBitSet::with_capacity(k); k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j && self.has_edge(u, v) {
                    adj[i].insert(j);
                }
            }
        }
        let mut g = Graph::from_adjacency(adj);
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::NotAPermutation);
        }
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::NotAPermutation);
            }
            seen[p] = true;
        }
        Graph::from_edge_list(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange {
                u: v,
                v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Diameter of a possibly disconnected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}
