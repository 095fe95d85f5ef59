//! Packing, open packing and 2-distance domination numbers by exhaustive
//! search with pruning. Disconnected graphs are handled per component and
//! the values summed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::transform::{square_graph, two_step_graph};

/// Largest graph the exhaustive searches accept.
pub const METRIC_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricResult {
    pub value: usize,
    pub witness: Vec<Vertex>,
}

impl MetricResult {
    fn from_sets(parts: Vec<Vec<Vertex>>) -> Self {
        let mut witness: Vec<Vertex> = parts.into_iter().flatten().collect();
        witness.sort_unstable();
        MetricResult {
            value: witness.len(),
            witness,
        }
    }
}

/// All three metrics of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub packing: MetricResult,
    pub open_packing: MetricResult,
    pub two_distance_domination: MetricResult,
}

pub fn all_metrics(g: &Graph) -> Result<Metrics> {
    Ok(Metrics {
        packing: packing_number(g)?,
        open_packing: open_packing_number(g)?,
        two_distance_domination: two_distance_domination_number(g)?,
    })
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > METRIC_CAP {
        Err(Error::TooLarge {
            n: g.n(),
            cap: METRIC_CAP,
        })
    } else {
        Ok(())
    }
}

/// Maximum set of vertices pairwise at distance at least 3, i.e. with
/// pairwise disjoint closed neighborhoods.
pub fn packing_number(g: &Graph) -> Result<MetricResult> {
    check_cap(g)?;
    let conflict = square_graph(g);
    Ok(per_component(g, |vs| max_independent(&conflict, vs)))
}

/// Maximum set of vertices with pairwise disjoint open neighborhoods.
pub fn open_packing_number(g: &Graph) -> Result<MetricResult> {
    check_cap(g)?;
    let conflict = two_step_graph(g);
    Ok(per_component(g, |vs| max_independent(&conflict, vs)))
}

/// Minimum set `D` with every vertex within distance 2 of `D`.
pub fn two_distance_domination_number(g: &Graph) -> Result<MetricResult> {
    check_cap(g)?;
    let sq = square_graph(g);
    Ok(per_component(g, |vs| min_dominating(&sq, vs)))
}

fn per_component(g: &Graph, solve: impl Fn(&[Vertex]) -> Vec<Vertex>) -> MetricResult {
    MetricResult::from_sets(g.components().iter().map(|c| solve(c)).collect())
}

fn mask_of(h: &Graph, v: Vertex) -> u64 {
    h.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)
}

/// Maximum independent set of `h` within `vs`.
fn max_independent(h: &Graph, vs: &[Vertex]) -> Vec<Vertex> {
    let adj: Vec<u64> = (0..h.n()).map(|v| mask_of(h, v)).collect();
    let all = vs.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut best = 0u64;
    mis_rec(&adj, all, 0, &mut best);
    bits(best)
}

fn mis_rec(adj: &[u64], cand: u64, chosen: u64, best: &mut u64) {
    if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    if cand == 0 {
        *best = chosen;
        return;
    }
    // Branch on the candidate with most candidate neighbors; a vertex with
    // none is always taken.
    let v = bits(cand)
        .into_iter()
        .max_by_key(|&v| ((adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
        .expect("cand is nonempty");
    let rest = cand & !(1 << v);
    mis_rec(adj, rest & !adj[v], chosen | 1 << v, best);
    if adj[v] & cand != 0 {
        mis_rec(adj, rest, chosen, best);
    }
}

/// Minimum set within `vs` whose closed neighborhoods in `h` cover `vs`.
fn min_dominating(h: &Graph, vs: &[Vertex]) -> Vec<Vertex> {
    let closed: Vec<u64> = (0..h.n()).map(|v| mask_of(h, v) | 1 << v).collect();
    let all = vs.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut best = all;
    dom_rec(&closed, all, 0, &mut best);
    bits(best)
}

fn dom_rec(closed: &[u64], uncovered: u64, chosen: u64, best: &mut u64) {
    if uncovered == 0 {
        if chosen.count_ones() < best.count_ones() {
            *best = chosen;
        }
        return;
    }
    let k = chosen.count_ones();
    if k + 1 >= best.count_ones() {
        return;
    }
    // Each new vertex covers at most this many.
    let reach = bits(uncovered)
        .into_iter()
        .map(|v| (closed[v] & uncovered).count_ones())
        .max()
        .unwrap_or(1)
        .max(1);
    if k + uncovered.count_ones().div_ceil(reach) >= best.count_ones() {
        return;
    }
    // Some dominator of the least-covered uncovered vertex must be chosen.
    let u = bits(uncovered)
        .into_iter()
        .min_by_key(|&u| (closed[u].count_ones(), u))
        .expect("uncovered is nonempty");
    let mut options = bits(closed[u]);
    options.sort_by_key(|&w| (std::cmp::Reverse((closed[w] & uncovered).count_ones()), w));
    for w in options {
        dom_rec(closed, uncovered & !closed[w], chosen | 1 << w, best);
    }
}

fn bits(mut m: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, cycle, path, FamilySpec};

    fn star(n: usize) -> Graph {
        FamilySpec::Star(n).generate().unwrap()
    }

    #[test]
    fn packing_examples() {
        assert_eq!(packing_number(&cycle(6)).unwrap().value, 2);
        assert_eq!(packing_number(&complete(5)).unwrap().value, 1);
        assert_eq!(packing_number(&Graph::empty(4)).unwrap().value, 4);
    }

    #[test]
    fn open_packing_examples() {
        assert_eq!(open_packing_number(&complete(2)).unwrap().value, 2);
        assert_eq!(open_packing_number(&cycle(4)).unwrap().value, 2);
        assert_eq!(open_packing_number(&star(3)).unwrap().value, 2);
    }

    #[test]
    fn domination_examples() {
        assert_eq!(two_distance_domination_number(&cycle(6)).unwrap().value, 2);
        assert_eq!(two_distance_domination_number(&star(5)).unwrap().value, 1);
        let p5 = two_distance_domination_number(&path(5)).unwrap();
        assert_eq!(
            p5,
            MetricResult {
                value: 1,
                witness: vec![2]
            }
        );
        assert_eq!(
            two_distance_domination_number(&Graph::empty(3))
                .unwrap()
                .value,
            3
        );
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            packing_number(&path(33)),
            Err(Error::TooLarge { .. })
        ));
        assert_eq!(packing_number(&path(32)).unwrap().value, 11);
        assert_eq!(two_distance_domination_number(&cycle(32)).unwrap().value, 7);
    }
}
