//! Graph serialization: JSON, DIMACS `.col`, and DOT.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Wire form of a graph: `{"n": 4, "edges": [[0,1],...], "labels": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let g = Graph::from_edge_list(j.n, j.edges.iter().map(|e| (e[0], e[1])))?;
        match j.labels {
            Some(labels) => g.with_labels(labels),
            None => Ok(g),
        }
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON is always serializable")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(text)?;
    Graph::try_from(j)
}

/// DIMACS edge format, 1-based: `p edge n m` then one `e u v` per edge.
pub fn write_dimacs_col<W: Write>(g: &Graph, mut w: W) -> io::Result<()> {
    writeln!(w, "p edge {} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn to_dimacs_col(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_dimacs_col(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("DIMACS output is ASCII")
}

pub fn from_dimacs_col(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let mut parts = line.split_whitespace();
        let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
        match parts.next() {
            None | Some("c") => {}
            Some("p") => {
                let _format = parts
                    .next()
                    .ok_or_else(|| bad("missing format in header"))?;
                let count = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| bad("bad vertex count in header"))?;
                n = Some(count);
            }
            Some("e") => {
                let mut endpoint = || {
                    parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .filter(|&x| x >= 1)
                        .ok_or_else(|| bad("edge endpoints must be positive integers"))
                };
                let u = endpoint()?;
                let v = endpoint()?;
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(bad(&format!("unexpected record `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing `p edge` header".into()))?;
    Graph::from_edge_list(n, edges)
}

/// Parses JSON when the first non-blank byte is `{`, DIMACS otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match text.trim_start().as_bytes().first() {
        Some(b'{') => from_json(text),
        Some(_) => from_dimacs_col(text),
        None => Err(Error::Parse("empty input".into())),
    }
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match g.label(v) {
            Some(l) => out.push_str(&format!("  {v} [label=\"{}\"];\n", l.replace('"', "\\\""))),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn json_shape() {
        let g = p4();
        assert_eq!(to_json(&g), r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#);
        assert_eq!(from_json(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn json_rejects_loops() {
        assert!(from_json(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn dimacs_is_one_based() {
        let text = to_dimacs_col(&p4());
        assert_eq!(text, "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
        assert_eq!(from_dimacs_col(&text).unwrap(), p4());
    }

    #[test]
    fn dimacs_errors() {
        assert!(from_dimacs_col("e 1 2\n").is_err());
        assert!(from_dimacs_col("p edge 2 1\ne 0 1\n").is_err());
        assert!(from_dimacs_col("p edge 2 1\nq\n").is_err());
    }

    #[test]
    fn autodetect() {
        let g = p4();
        assert_eq!(parse_graph(&format!("  \n{}", to_json(&g))).unwrap(), g);
        assert_eq!(
            parse_graph(&format!("c hi\n{}", to_dimacs_col(&g))).unwrap(),
            g
        );
        assert!(parse_graph("   ").is_err());
    }

    #[test]
    fn dot_lists_edges() {
        let dot = to_dot(&p4());
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("  2 -- 3;"));
    }
}
