//! Text formats: 0-based edge lists, DIMACS `p edge`, and a canonical JSON
//! object `{"n":..,"edges":[[u,v],..]}`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    EdgeList,
    Dimacs,
    Json,
}

impl FromStr for Format {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "el" => Ok(Format::EdgeList),
            "dimacs" | "col" => Ok(Format::Dimacs),
            "json" => Ok(Format::Json),
            other => Err(ParseError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown graph format `{0}`")]
    UnknownFormat(String),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_num(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| syntax(line, format!("expected a non-negative integer, found `{tok}`")))
}

pub fn parse(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
        Format::Json => parse_json(text),
    }
}

pub fn serialize(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Dimacs => to_dimacs(g),
        Format::Json => to_json(g),
    }
}

/// One `u v` pair per line, `#` starts a comment. An optional `n <count>`
/// header fixes the vertex count; otherwise it is one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["n", count] => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(syntax(line_no, "the `n` header must come first"));
                }
                declared = Some(parse_num(count, line_no)?);
            }
            [u, v] => edges.push((parse_num(u, line_no)?, parse_num(v, line_no)?)),
            _ => return Err(syntax(line_no, format!("expected `u v`, found `{line}`"))),
        }
    }
    let n = declared.unwrap_or_else(|| {
        edges
            .iter()
            .map(|&(u, v): &(Vertex, Vertex)| u.max(v) + 1)
            .max()
            .unwrap_or(0)
    });
    Ok(Graph::new(n, &edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// `p edge n m` followed by `e u v` lines with 1-based ids; `c` lines are
/// comments.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.as_slice() {
            [] | ["c", ..] => {}
            ["p", kind, n, m] => {
                if header.is_some() {
                    return Err(syntax(line_no, "repeated `p` line"));
                }
                if *kind != "edge" && *kind != "col" {
                    return Err(syntax(line_no, format!("unsupported problem `{kind}`")));
                }
                header = Some((parse_num(n, line_no)?, parse_num(m, line_no)?));
            }
            ["e", u, v] => {
                let Some((n, _)) = header else {
                    return Err(syntax(line_no, "edge before the `p` line"));
                };
                let (u, v) = (parse_num(u, line_no)?, parse_num(v, line_no)?);
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(syntax(line_no, format!("endpoint outside 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(syntax(line_no, format!("unrecognised line `{}`", raw.trim()))),
        }
    }
    let Some((n, m)) = header else {
        return Err(syntax(0, "missing `p edge n m` line"));
    };
    if m != edges.len() {
        return Err(syntax(
            0,
            format!("header announces {m} edges but {} were given", edges.len()),
        ));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

pub fn parse_json(text: &str) -> Result<Graph, ParseError> {
    let raw: JsonGraph = serde_json::from_str(text)?;
    let edges: Vec<_> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
    Ok(Graph::new(raw.n, &edges)?)
}

/// Canonical form: `u < v` in each pair, pairs sorted, no whitespace.
pub fn to_json(g: &Graph) -> String {
    let raw = JsonGraph {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments_and_header() {
        let g = parse_edge_list("# triangle plus isolated vertex\nn 4\n0 1\n1 2 # spoke\n\n0 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert_eq!(g.degree(3), 0);
        let g = parse_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_edge_list("0 1\n1 x\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1 2\n"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n0 5\n"),
            Err(ParseError::Graph(GraphError::EdgeOutOfRange(0, 5, 2)))
        ));
        assert!(matches!(
            parse_edge_list("0 1\n1 0\n"),
            Err(ParseError::Graph(GraphError::DuplicateEdge(0, 1)))
        ));
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = parse_dimacs("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
        assert_eq!(g, named::cycle(5));
        assert!(parse_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("p edge 3 2\ne 1 2\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
    }

    #[test]
    fn json_is_canonical() {
        let g = parse_json(r#"{"n": 3, "edges": [[2, 1], [0, 1]]}"#).unwrap();
        assert_eq!(to_json(&g), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(to_json(&Graph::empty(0)), r#"{"n":0,"edges":[]}"#);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..12).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let k = pairs.len();
            proptest::collection::vec(any::<bool>(), k).prop_map(move |mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(&mask)
                    .filter_map(|(&e, &b)| b.then_some(e))
                    .collect();
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip_all_formats(g in arb_graph()) {
            for format in [Format::EdgeList, Format::Dimacs, Format::Json] {
                let text = serialize(&g, format);
                prop_assert_eq!(&parse(&text, format).unwrap(), &g);
            }
        }
    }
}
