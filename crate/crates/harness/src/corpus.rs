//! Deterministic graph corpora for the structural claims. Random corpora
//! belong to the test suites, not here.

use eicolor_core::family::{complete, cycle, join, path};
use eicolor_core::{FamilySpec, Graph};

/// Every labeled graph on `n` vertices, in order of the edge bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "2^(n choose 2) labeled graphs; n is capped at 7");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edge_list(n, edges).expect("pairs are in range")
    })
}

/// Every labeled tree on `n` vertices, decoded from Prüfer sequences.
pub fn all_trees(n: usize) -> Vec<Graph> {
    match n {
        0 => return vec![],
        1 => return vec![Graph::empty(1)],
        2 => return vec![path(2)],
        _ => {}
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            prufer_tree(n, &seq)
        })
        .collect()
}

pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, edges).expect("Prüfer decoding yields a tree")
}

/// Small named connected graphs, each with at least one edge.
pub fn named_small() -> Vec<(&'static str, Graph)> {
    let diamond = Graph::from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    let paw = Graph::from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
    let bull = Graph::from_edge_list(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap();
    vec![
        ("P2", path(2)),
        ("P3", path(3)),
        ("P4", path(4)),
        ("P5", path(5)),
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("K4", complete(4)),
        ("diamond", diamond),
        ("paw", paw),
        ("bull", bull),
        ("K1,3", join(&Graph::empty(1), &Graph::empty(3))),
        ("K2,3", join(&Graph::empty(2), &Graph::empty(3))),
    ]
}

/// Regular bipartite graphs of degree at least 2.
pub fn regular_bipartite() -> Vec<FamilySpec> {
    [
        "cycle:4",
        "cycle:6",
        "cycle:10",
        "bipartite:2,2",
        "bipartite:3,3",
        "bipartite:4,4",
        "hypercube:3",
        "hypercube:4",
        "prism:4",
        "prism:6",
        "prism:8",
        "torus:4x4",
        "torus:4x6",
        "torus:6x8",
    ]
    .iter()
    .map(|s| s.parse().expect("corpus specs are valid"))
    .collect()
}
