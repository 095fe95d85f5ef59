//! Exact and greedy coloring of derived graphs, coloring verification, and
//! an exhaustive oracle for small graphs.

use std::io::Write;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::coloring::{Coloring, Mode};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::transform::derived_graph;

/// Largest graph `brute_force_chromatic` accepts.
pub const BRUTE_FORCE_CAP: usize = 10;

/// Search limits. Whichever limit is hit first stops the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl Budget {
    pub const DEFAULT_TIME: Duration = Duration::from_secs(60);
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn unlimited() -> Self {
        Budget {
            time: None,
            nodes: None,
        }
    }

    pub fn nodes(n: u64) -> Self {
        Budget {
            time: None,
            nodes: Some(n),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            time: Some(Self::DEFAULT_TIME),
            nodes: Some(Self::DEFAULT_NODES),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Color assignments tried by the search, clique search included.
    pub nodes: u64,
    /// Wall time; kept out of serialized output so machine output is stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Outcome of an exact coloring search.
///
/// `chi` is `None` exactly when the budget ran out before the bounds met;
/// `certificate` then holds the best coloring found, with `upper_bound`
/// colors.
#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub mode: Mode,
    pub chi: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub exhausted: bool,
    #[serde(serialize_with = "colors_only")]
    pub certificate: Coloring,
    pub lower_bound_witness: Vec<Vertex>,
    pub stats: SolveStats,
}

fn colors_only<S: Serializer>(c: &Coloring, s: S) -> std::result::Result<S::Ok, S::Error> {
    c.colors().serialize(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Adjacent vertices share a color; witness `[u, v]`.
    Edge,
    /// Vertices with a common neighbor share a color; witness `[u, x, v]`.
    CommonNeighbor,
    /// Ends of a P4 share a color; witness `[u, x, y, v]`.
    P4Ends,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<Vertex>,
}

/// All constraint violations of `c` as a `mode`-coloring of `g`, at most one
/// per offending vertex pair. Works on `g` directly, not on a derived graph.
pub fn verify_coloring(g: &Graph, c: &Coloring, mode: Mode) -> Result<Vec<Violation>> {
    if c.len() != g.n() {
        return Err(Error::PartialColoring {
            expected: g.n(),
            got: c.len(),
        });
    }
    let col = c.colors();
    let common = |u: Vertex, v: Vertex| g.neighbor_set(u).intersection(g.neighbor_set(v)).next();
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if col[u] != col[v] {
                continue;
            }
            let edge = || {
                g.has_edge(u, v).then(|| Violation {
                    kind: ViolationKind::Edge,
                    witness: vec![u, v],
                })
            };
            let two_step = || {
                common(u, v).map(|x| Violation {
                    kind: ViolationKind::CommonNeighbor,
                    witness: vec![u, x, v],
                })
            };
            let found = match mode {
                Mode::Proper => edge(),
                Mode::Injective => two_step(),
                Mode::TwoDistance => edge().or_else(two_step),
                Mode::EInjective => g.p4_witness(u, v).map(|(x, y)| Violation {
                    kind: ViolationKind::P4Ends,
                    witness: vec![u, x, y, v],
                }),
            };
            out.extend(found);
        }
    }
    Ok(out)
}

/// First-fit coloring of the derived graph in the given vertex order.
pub fn greedy_coloring(g: &Graph, mode: Mode, order: &[Vertex]) -> Result<Coloring> {
    let h = derived_graph(g, mode);
    check_permutation(order, h.n())?;
    Coloring::new(first_fit(&h, order), mode)
}

fn check_permutation(order: &[Vertex], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPermutation);
        }
    }
    Ok(())
}

fn first_fit(h: &Graph, order: &[Vertex]) -> Vec<u32> {
    let mut color = vec![0u32; h.n()];
    let mut taken = vec![false; h.n() + 2];
    for &v in order {
        for &w in h.neighbors(v) {
            taken[color[w] as usize] = true;
        }
        let c = (1..)
            .find(|&c| !taken[c])
            .expect("some color below n + 2 is free");
        color[v] = c as u32;
        for &w in h.neighbors(v) {
            taken[color[w] as usize] = false;
        }
    }
    color
}

/// Exact `mode`-chromatic number of `g`: the chromatic number of the
/// derived graph, with a certificate coloring and a clique lower bound.
pub fn chromatic_number(g: &Graph, mode: Mode, budget: Budget) -> SolveResult {
    let h = derived_graph(g, mode);
    let mut result = solve_proper(&h, budget);
    result.certificate = result.certificate.with_mode(mode);
    result.mode = mode;
    result
}

/// Exact chromatic number of `h` itself.
pub fn solve_proper(h: &Graph, budget: Budget) -> SolveResult {
    let start = Instant::now();
    let mut search = Search::new(h, budget, start);
    let clique = search.max_clique();
    search.run(&clique);
    let Search {
        best,
        best_k,
        nodes,
        exhausted,
        ..
    } = search;
    let lower = clique.len();
    let chi = (!exhausted || best_k == lower).then_some(best_k);
    SolveResult {
        mode: Mode::Proper,
        chi,
        lower_bound: if chi.is_some() { best_k } else { lower },
        upper_bound: best_k,
        exhausted: chi.is_none(),
        certificate: Coloring::new(best, Mode::Proper).expect("search colors start at 1"),
        lower_bound_witness: clique,
        stats: SolveStats {
            nodes,
            elapsed: start.elapsed(),
        },
    }
}

/// A clique of `h`, maximum unless the budget runs out first.
pub fn max_clique_lower_bound(h: &Graph, budget: Budget) -> Vec<Vertex> {
    Search::new(h, budget, Instant::now()).max_clique()
}

struct Search<'a> {
    h: &'a Graph,
    budget: Budget,
    start: Instant,
    nodes: u64,
    exhausted: bool,
    color: Vec<u32>,
    /// `count[v * stride + c]`: colored neighbors of `v` with color `c`.
    count: Vec<u32>,
    stride: usize,
    saturation: Vec<usize>,
    best: Vec<u32>,
    best_k: usize,
    target: usize,
}

impl<'a> Search<'a> {
    fn new(h: &'a Graph, budget: Budget, start: Instant) -> Self {
        let n = h.n();
        Search {
            h,
            budget,
            start,
            nodes: 0,
            exhausted: false,
            color: vec![0; n],
            count: Vec::new(),
            stride: 0,
            saturation: vec![0; n],
            best: Vec::new(),
            best_k: 0,
            target: 0,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.exhausted {
            return false;
        }
        let over_nodes = self.budget.nodes.is_some_and(|cap| self.nodes > cap);
        // The clock is read only every 1024 nodes.
        let over_time = || {
            self.nodes.is_multiple_of(1024)
                && self.budget.time.is_some_and(|t| self.start.elapsed() >= t)
        };
        if over_nodes || over_time() {
            self.exhausted = true;
        }
        !self.exhausted
    }

    /// Branch and bound over cliques, candidates ordered by degree and
    /// bounded by a greedy coloring of the candidate set.
    fn max_clique(&mut self) -> Vec<Vertex> {
        let n = self.h.n();
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.h.degree(v)), v));
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.clique_rec(&mut current, order, &mut best);
        best.sort_unstable();
        best
    }

    fn clique_rec(&mut self, current: &mut Vec<Vertex>, cand: Vec<Vertex>, best: &mut Vec<Vertex>) {
        if cand.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        // Greedy color classes over the candidates: a clique takes at most
        // one vertex per class.
        let (order, bounds) = self.color_bound(&cand);
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] <= best.len() || !self.tick() {
                return;
            }
            let v = order[i];
            let next: Vec<Vertex> = order[..i]
                .iter()
                .copied()
                .filter(|&w| self.h.has_edge(v, w))
                .collect();
            current.push(v);
            self.clique_rec(current, next, best);
            current.pop();
        }
    }

    /// Candidates sorted by greedy class, with the class index (1-based) of
    /// each position as an upper bound on the clique extendable from it.
    fn color_bound(&self, cand: &[Vertex]) -> (Vec<Vertex>, Vec<usize>) {
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        for &v in cand {
            match classes
                .iter_mut()
                .find(|cls| cls.iter().all(|&w| !self.h.has_edge(v, w)))
            {
                Some(cls) => cls.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(cand.len());
        let mut bounds = Vec::with_capacity(cand.len());
        for (k, cls) in classes.into_iter().enumerate() {
            for v in cls {
                order.push(v);
                bounds.push(k + 1);
            }
        }
        (order, bounds)
    }

    fn run(&mut self, clique: &[Vertex]) {
        let n = self.h.n();
        let mut dsatur_order: Vec<Vertex> = (0..n).collect();
        dsatur_order.sort_by_key(|&v| (std::cmp::Reverse(self.h.degree(v)), v));
        self.best = first_fit(self.h, &dsatur_order);
        self.best_k = self.best.iter().copied().max().unwrap_or(0) as usize;
        self.target = clique.len();
        if self.best_k <= self.target || self.exhausted {
            return;
        }
        self.stride = self.best_k + 1;
        self.count = vec![0; n * self.stride];
        for (i, &v) in clique.iter().enumerate() {
            self.assign(v, i as u32 + 1);
        }
        self.branch(clique.len());
    }

    fn assign(&mut self, v: Vertex, c: u32) {
        self.color[v] = c;
        for &w in self.h.neighbors(v) {
            let slot = &mut self.count[w * self.stride + c as usize];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: Vertex) {
        let c = std::mem::replace(&mut self.color[v], 0);
        for &w in self.h.neighbors(v) {
            let slot = &mut self.count[w * self.stride + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// DSATUR choice: most saturated, then higher degree, then lower index.
    fn select(&self) -> Option<Vertex> {
        let mut pick: Option<Vertex> = None;
        for v in 0..self.h.n() {
            if self.color[v] != 0 {
                continue;
            }
            let better = match pick {
                None => true,
                Some(p) => {
                    (self.saturation[v], self.h.degree(v)) > (self.saturation[p], self.h.degree(p))
                }
            };
            if better {
                pick = Some(v);
            }
        }
        pick
    }

    /// Returns false when the search should stop altogether.
    fn branch(&mut self, used: usize) -> bool {
        let Some(v) = self.select() else {
            self.best = self.color.clone();
            self.best_k = used;
            return self.best_k > self.target;
        };
        let limit = (used + 1).min(self.best_k - 1) as u32;
        for c in 1..=limit {
            if self.count[v * self.stride + c as usize] != 0 {
                continue;
            }
            if c as usize > self.best_k - 1 {
                break;
            }
            if !self.tick() {
                return false;
            }
            self.assign(v, c);
            let go_on = self.branch(used.max(c as usize));
            self.unassign(v);
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Chromatic number by exhaustive enumeration of set partitions; shares no
/// code with the branch-and-bound search. Capped at [`BRUTE_FORCE_CAP`] vertices.
pub fn brute_force_chromatic(h: &Graph) -> Result<usize> {
    let n = h.n();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let edges: Vec<(Vertex, Vertex)> = h.edges().collect();
    let mut best = n;
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[..i]).
    let mut a = vec![0usize; n];
    loop {
        let k = a.iter().max().unwrap() + 1;
        if k < best && edges.iter().all(|&(u, v)| a[u] != a[v]) {
            best = k;
        }
        // Next string in lexicographic order.
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(best);
            }
            let prefix_max = *a[..i].iter().max().unwrap();
            if a[i] <= prefix_max {
                a[i] += 1;
                for x in &mut a[i + 1..] {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// k-colorability of `h` as DIMACS CNF. Variable `v * k + c + 1` means
/// vertex `v` has color `c` (0-based); clauses say each vertex has exactly
/// one color and adjacent vertices differ.
pub fn export_cnf<W: Write>(h: &Graph, k: usize, mut sink: W) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    let n = h.n();
    let var = |v: Vertex, c: usize| v * k + c + 1;
    let clauses = n + n * k * (k - 1) / 2 + h.edge_count() * k;
    writeln!(sink, "p cnf {} {}", n * k, clauses)?;
    for v in 0..n {
        let lits: Vec<String> = (0..k).map(|c| var(v, c).to_string()).collect();
        writeln!(sink, "{} 0", lits.join(" "))?;
        for c in 0..k {
            for d in c + 1..k {
                writeln!(sink, "-{} -{} 0", var(v, c), var(v, d))?;
            }
        }
    }
    for (u, v) in h.edges() {
        for c in 0..k {
            writeln!(sink, "-{} -{} 0", var(u, c), var(v, c))?;
        }
    }
    Ok(())
}
