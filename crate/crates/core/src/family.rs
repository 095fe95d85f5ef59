//! Parametric graph families, fixtures, products, join and disjoint union.
//!
//! Product vertices are indexed row-major: the pair `(i, j)` with `i` in the
//! first factor and `j` in the second becomes `i * |V(h)| + j`. Grid,
//! cylinder, torus, ladder and prism graphs are built as products, so vertex
//! `v_{i,j}` (1-based, row `i`, column `j`) sits at index `(i-1) * n + (j-1)`.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Planar fixtures with large e-injective number relative to maximum degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fixture {
    M3,
    M4,
    M5,
    M6,
    M7,
    M8,
}

impl Fixture {
    pub const ALL: [Fixture; 6] = [
        Fixture::M3,
        Fixture::M4,
        Fixture::M5,
        Fixture::M6,
        Fixture::M7,
        Fixture::M8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::M3 => "M3",
            Fixture::M4 => "M4",
            Fixture::M5 => "M5",
            Fixture::M6 => "M6",
            Fixture::M7 => "M7",
            Fixture::M8 => "M8",
        }
    }

    /// Maximum degree the fixture is drawn with.
    pub fn max_degree(self) -> usize {
        match self {
            Fixture::M3 => 3,
            Fixture::M4 => 4,
            Fixture::M5 => 5,
            Fixture::M6 => 6,
            Fixture::M7 => 7,
            Fixture::M8 => 8,
        }
    }

    fn source(self) -> &'static str {
        match self {
            Fixture::M3 => include_str!("../fixtures/m3.json"),
            Fixture::M4 => include_str!("../fixtures/m4.json"),
            Fixture::M5 => include_str!("../fixtures/m5.json"),
            Fixture::M6 => include_str!("../fixtures/m6.json"),
            Fixture::M7 => include_str!("../fixtures/m7.json"),
            Fixture::M8 => include_str!("../fixtures/m8.json"),
        }
    }

    pub fn data(self) -> FixtureData {
        serde_json::from_str(self.source()).expect("bundled fixture files are well-formed")
    }

    pub fn graph(self) -> Graph {
        let d = self.data();
        Graph::from_edge_list(d.n, d.edges.iter().map(|e| (e[0], e[1])))
            .and_then(|g| g.with_labels(d.labels))
            .expect("bundled fixture files are valid graphs")
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidFamily {
                spec: s.to_string(),
                reason: "fixtures are M3..M8".into(),
            })
    }
}

/// Contents of a bundled fixture file.
#[derive(Clone, Debug, Deserialize)]
pub struct FixtureData {
    pub name: String,
    pub note: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    /// Drawing coordinates, one per vertex.
    pub labels: Vec<String>,
    /// The coloring printed on the drawing, 1-based.
    pub reference_coloring: Vec<u32>,
    /// Clockwise neighbor order around each vertex in a plane embedding.
    pub rotation: Vec<Vec<usize>>,
}

/// True when `rotation` lists every vertex's neighbors exactly once and the
/// embedding it induces satisfies Euler's formula `V - E + F = 2` on every
/// component, i.e. it is a plane embedding of `g`.
pub fn is_plane_rotation(g: &Graph, rotation: &[Vec<usize>]) -> bool {
    if rotation.len() != g.n() {
        return false;
    }
    for (v, rot) in rotation.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return false;
        }
    }
    let pos = |v: usize, w: usize| rotation[v].iter().position(|&x| x == w).unwrap();
    let mut seen = std::collections::HashSet::new();
    let mut faces = 0;
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if seen.contains(&(u, v)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                let rot = &rotation[b];
                let next = rot[(pos(b, a) + 1) % rot.len()];
                (a, b) = (b, next);
            }
        }
    }
    let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
    let components = g.components().len();
    g.n() + faces + isolated == g.edge_count() + 2 * components
}

/// A named graph family with its parameters.
///
/// The text form is `name:params`, e.g. `cycle:7`, `torus:3x7`, `fan:2,3`,
/// `multipartite:2,2,3`, `fixture:M4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `n` leaves around one center.
    Star(usize),
    /// Two adjacent centers carrying `m` and `n` leaves.
    DoubleStar(usize, usize),
    /// Hub joined to a rim cycle of length `n`.
    Wheel(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// `m` independent vertices joined to a path on `n` vertices.
    Fan(usize, usize),
    Ladder(usize),
    Prism(usize),
    Grid(usize, usize),
    Cylinder(usize, usize),
    Torus(usize, usize),
    /// `K_m` and `K_n` joined by one edge.
    CliqueBridge(usize, usize),
    Fixture(Fixture),
    Hypercube(usize),
}

impl FamilySpec {
    /// Checks the parameter ranges; out-of-range values are rejected, never clamped.
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let fail = |reason: &str| {
            Err(Error::InvalidFamily {
                spec: self.to_string(),
                reason: reason.to_string(),
            })
        };
        let positive = |xs: &[usize]| xs.iter().all(|&x| x >= 1);
        match self {
            Path(n) | Complete(n) | Star(n) | Ladder(n) | Hypercube(n) if !positive(&[*n]) => {
                fail("size must be at least 1")
            }
            Cycle(n) | Prism(n) if *n < 3 => fail("cycle length must be at least 3"),
            Wheel(n) if *n < 3 => fail("rim length must be at least 3"),
            DoubleStar(m, n)
            | CompleteBipartite(m, n)
            | Fan(m, n)
            | Grid(m, n)
            | CliqueBridge(m, n)
                if !positive(&[*m, *n]) =>
            {
                fail("sizes must be at least 1")
            }
            Cylinder(m, n) if *m < 1 || *n < 3 => {
                fail("path length must be at least 1 and cycle length at least 3")
            }
            Torus(m, n) if *m < 3 || *n < 3 => fail("cycle lengths must be at least 3"),
            CompleteMultipartite(parts) if parts.len() < 2 => fail("need at least 2 parts"),
            CompleteMultipartite(parts) if !positive(parts) => fail("parts must be nonempty"),
            Hypercube(d) if *d > 16 => fail("dimension above 16 is not supported"),
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        use FamilySpec::*;
        let g = match self {
            Path(n) => path(*n),
            Cycle(n) => cycle(*n),
            Complete(n) => complete(*n),
            Star(n) => Graph::from_edge_list(n + 1, (1..=*n).map(|i| (0, i)))?,
            DoubleStar(m, n) => {
                let edges = std::iter::once((0, 1))
                    .chain((0..*m).map(|i| (0, 2 + i)))
                    .chain((0..*n).map(|i| (1, 2 + m + i)));
                Graph::from_edge_list(m + n + 2, edges)?
            }
            Wheel(n) => join(&Graph::empty(1), &cycle(*n)),
            CompleteBipartite(m, n) => join(&Graph::empty(*m), &Graph::empty(*n)),
            CompleteMultipartite(parts) => parts
                .iter()
                .map(|&p| Graph::empty(p))
                .reduce(|acc, part| join(&acc, &part))
                .expect("validated to have at least two parts"),
            Fan(m, n) => join(&Graph::empty(*m), &path(*n)),
            Ladder(n) => grid_labels(product(&path(2), &path(*n), ProductKind::Cartesian), 2, *n),
            Prism(n) => grid_labels(product(&path(2), &cycle(*n), ProductKind::Cartesian), 2, *n),
            Grid(m, n) => grid_labels(
                product(&path(*m), &path(*n), ProductKind::Cartesian),
                *m,
                *n,
            ),
            Cylinder(m, n) => grid_labels(
                product(&path(*m), &cycle(*n), ProductKind::Cartesian),
                *m,
                *n,
            ),
            Torus(m, n) => grid_labels(
                product(&cycle(*m), &cycle(*n), ProductKind::Cartesian),
                *m,
                *n,
            ),
            CliqueBridge(m, n) => {
                let u = disjoint_union(&complete(*m), &complete(*n));
                Graph::from_edge_list(m + n, u.edges().chain(std::iter::once((0, *m))))?
            }
            Fixture(f) => f.graph(),
            Hypercube(d) => {
                let n = 1usize << d;
                Graph::from_edge_list(
                    n,
                    (0..n).flat_map(|v| (0..*d).map(move |b| (v, v ^ (1 << b)))),
                )?
            }
        };
        Ok(g)
    }
}

fn grid_labels(g: Graph, rows: usize, cols: usize) -> Graph {
    let labels = (1..=rows)
        .flat_map(|i| (1..=cols).map(move |j| format!("v_{{{i},{j}}}")))
        .collect();
    g.with_labels(labels)
        .expect("label count matches rows * cols")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            Star(n) => write!(f, "star:{n}"),
            DoubleStar(m, n) => write!(f, "doublestar:{m},{n}"),
            Wheel(n) => write!(f, "wheel:{n}"),
            CompleteBipartite(m, n) => write!(f, "bipartite:{m},{n}"),
            CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            Fan(m, n) => write!(f, "fan:{m},{n}"),
            Ladder(n) => write!(f, "ladder:{n}"),
            Prism(n) => write!(f, "prism:{n}"),
            Grid(m, n) => write!(f, "grid:{m}x{n}"),
            Cylinder(m, n) => write!(f, "cylinder:{m}x{n}"),
            Torus(m, n) => write!(f, "torus:{m}x{n}"),
            CliqueBridge(m, n) => write!(f, "cliquebridge:{m},{n}"),
            Fixture(x) => write!(f, "fixture:{}", x.name()),
            Hypercube(d) => write!(f, "hypercube:{d}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidFamily {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| invalid("expected `name:params`"))?;
        let name = name.trim().to_ascii_lowercase();
        if name == "fixture" {
            return Ok(FamilySpec::Fixture(params.trim().parse()?));
        }
        let nums: Vec<usize> = params
            .split([',', 'x', 'X'])
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| invalid("parameters must be non-negative integers"))?;
        let one = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(invalid("expected one parameter")),
        };
        let two = || match nums.as_slice() {
            [m, n] => Ok((*m, *n)),
            _ => Err(invalid("expected two parameters")),
        };
        use FamilySpec::*;
        let spec = match name.as_str() {
            "path" => Path(one()?),
            "cycle" => Cycle(one()?),
            "complete" => Complete(one()?),
            "star" => Star(one()?),
            "doublestar" => {
                let (m, n) = two()?;
                DoubleStar(m, n)
            }
            "wheel" => Wheel(one()?),
            "bipartite" | "completebipartite" => {
                let (m, n) = two()?;
                CompleteBipartite(m, n)
            }
            "multipartite" | "completemultipartite" => CompleteMultipartite(nums.clone()),
            "fan" => {
                let (m, n) = two()?;
                Fan(m, n)
            }
            "ladder" => Ladder(one()?),
            "prism" => Prism(one()?),
            "grid" => {
                let (m, n) = two()?;
                Grid(m, n)
            }
            "cylinder" => {
                let (m, n) = two()?;
                Cylinder(m, n)
            }
            "torus" => {
                let (m, n) = two()?;
                Torus(m, n)
            }
            "cliquebridge" => {
                let (m, n) = two()?;
                CliqueBridge(m, n)
            }
            "hypercube" => Hypercube(one()?),
            _ => return Err(invalid("unknown family")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
}

pub fn path(n: usize) -> Graph {
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle length must be at least 3");
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edge_list(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        .expect("clique edges are valid")
}

/// Graph product with row-major vertex indexing `(i, j) -> i * |V(h)| + j`.
pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Graph {
    let (gn, hn) = (g.n(), h.n());
    let n = gn * hn;
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for a in 0..gn {
        for u in 0..hn {
            let row = &mut adj[a * hn + u];
            for b in 0..gn {
                for v in 0..hn {
                    let same_g = a == b;
                    let same_h = u == v;
                    let adj_g = g.has_edge(a, b);
                    let adj_h = h.has_edge(u, v);
                    let cartesian = (same_g && adj_h) || (adj_g && same_h);
                    let direct = adj_g && adj_h;
                    let joined = match kind {
                        ProductKind::Cartesian => cartesian,
                        ProductKind::Direct => direct,
                        ProductKind::Strong => cartesian || direct,
                    };
                    if joined {
                        row.insert(b * hn + v);
                    }
                }
            }
        }
    }
    Graph::from_adjacency(adj)
}

/// Disjoint copies of `g` (first) and `h` plus every cross edge.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let edges = g
        .edges()
        .chain(h.edges().map(|(u, v)| (u + off, v + off)))
        .chain((0..off).flat_map(|u| (0..h.n()).map(move |v| (u, v + off))))
        .collect::<Vec<_>>();
    Graph::from_edge_list(off + h.n(), edges).expect("join edges are valid")
}

/// Disjoint copies of `g` (first) and `h`, no cross edges.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let edges = g
        .edges()
        .chain(h.edges().map(|(u, v)| (u + off, v + off)))
        .collect::<Vec<_>>();
    Graph::from_edge_list(off + h.n(), edges).expect("union edges are valid")
}
