//! Plain-text graph and hypergraph files.
//!
//! ```text
//! graph <n> <m>
//! <u> <v>            (m lines)
//!
//! hypergraph <k> <n> <m>
//! <v1> ... <vk>      (m lines)
//! ```
//!
//! Everything after `#` on a line is a comment; blank lines are skipped.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Hypergraph, SimpleGraph};

/// A parsed file of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Graph(SimpleGraph),
    Hypergraph(Hypergraph),
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
        }
    }

    /// Next non-empty line with comments stripped, tagged with its 1-based number.
    fn next_content(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, raw) in self.inner.by_ref() {
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if !tokens.is_empty() {
                return Some((i + 1, tokens));
            }
        }
        None
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, tokens: &[&str]) -> Result<Vec<usize>> {
    tokens
        .iter()
        .map(|t| {
            t.parse::<usize>().map_err(|_| {
                parse_err(line, format!("expected a nonnegative integer, found `{t}`"))
            })
        })
        .collect()
}

/// Attach a line number to a structural error raised while building.
fn at_line(line: usize, err: Error) -> Error {
    match err {
        Error::Parse { .. } => err,
        other => parse_err(line, other.to_string()),
    }
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    match parse_document(text)? {
        Document::Graph(g) => Ok(g),
        Document::Hypergraph(_) => Err(parse_err(1, "expected a `graph` header")),
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    match parse_document(text)? {
        Document::Hypergraph(h) => Ok(h),
        Document::Graph(_) => Err(parse_err(1, "expected a `hypergraph` header")),
    }
}

/// Parses either file kind, dispatching on the header keyword.
pub fn parse_document(text: &str) -> Result<Document> {
    let mut lines = Lines::new(text);
    let (header_line, header) = lines
        .next_content()
        .ok_or_else(|| parse_err(1, "missing header"))?;
    let (arity, k, n, m) = match header[0] {
        "graph" if header.len() == 3 => {
            let nums = numbers(header_line, &header[1..])?;
            (2, None, nums[0], nums[1])
        }
        "hypergraph" if header.len() == 4 => {
            let nums = numbers(header_line, &header[1..])?;
            (nums[0], Some(nums[0]), nums[1], nums[2])
        }
        "graph" | "hypergraph" => {
            return Err(parse_err(header_line, "wrong number of header fields"))
        }
        other => return Err(parse_err(header_line, format!("unknown header `{other}`"))),
    };
    if n == 0 {
        return Err(parse_err(header_line, "vertex count must be positive"));
    }
    if arity < 2 {
        return Err(parse_err(header_line, "uniformity must be at least 2"));
    }

    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut seen = std::collections::HashMap::with_capacity(m);
    for _ in 0..m {
        let (line, tokens) = lines.next_content().ok_or_else(|| {
            parse_err(
                text.lines().count().max(1),
                format!("expected {m} edge lines"),
            )
        })?;
        if tokens.len() != arity {
            return Err(parse_err(
                line,
                format!("edge has {} vertices, expected {arity}", tokens.len()),
            ));
        }
        let mut e = numbers(line, &tokens)?;
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return Err(parse_err(
                line,
                format!("vertex {v} out of range for {n} vertices"),
            ));
        }
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(line, "repeated vertex in edge"));
        }
        if let Some(first) = seen.insert(e.clone(), line) {
            return Err(parse_err(
                line,
                format!("duplicate edge (first on line {first})"),
            ));
        }
        edges.push(e);
    }
    if let Some((line, _)) = lines.next_content() {
        return Err(parse_err(line, format!("more than {m} edge lines")));
    }

    match k {
        None => SimpleGraph::new(n, edges.into_iter().map(|e| (e[0], e[1])))
            .map(Document::Graph)
            .map_err(|e| at_line(header_line, e)),
        Some(k) => Hypergraph::new(k, n, edges)
            .map(Document::Hypergraph)
            .map_err(|e| at_line(header_line, e)),
    }
}

pub fn serialize_graph(g: &SimpleGraph) -> String {
    let mut out = format!("graph {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("hypergraph {} {} {}\n", h.k(), h.n(), h.m());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn serialize_document(doc: &Document) -> String {
    match doc {
        Document::Graph(g) => serialize_graph(g),
        Document::Hypergraph(h) => serialize_hypergraph(h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_minimal_files() {
        let g = parse_graph("graph 2 1\n0 1").unwrap();
        assert_eq!(g, SimpleGraph::new(2, [(0, 1)]).unwrap());
        let h = parse_hypergraph("hypergraph 4 4 1\n0 1 2 3").unwrap();
        assert_eq!(h, Hypergraph::new(4, 4, [vec![0, 1, 2, 3]]).unwrap());
    }

    #[test]
    fn comments_and_canonical_output() {
        let text = "# triangle\ngraph 3 3 # header\n2 1\n\n0 2\n1 0\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(serialize_graph(&g), "graph 3 3\n0 1\n0 2\n1 2\n");
    }

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of(parse_graph("grph 2 1\n0 1").unwrap_err()), 1);
        assert_eq!(line_of(parse_graph("graph 2\n0 1").unwrap_err()), 1);
        assert_eq!(
            line_of(parse_graph("graph 3 2\n0 1\n0 1 2").unwrap_err()),
            3
        );
        assert_eq!(line_of(parse_graph("graph 3 2\n0 1\n0 5").unwrap_err()), 3);
        assert_eq!(
            line_of(parse_graph("graph 3 2\n0 1\n\n1 0").unwrap_err()),
            4
        );
        assert_eq!(line_of(parse_graph("graph 3 1\n1 1").unwrap_err()), 2);
        assert_eq!(line_of(parse_graph("graph 3 1\n0 1\n1 2").unwrap_err()), 3);
        assert_eq!(
            line_of(parse_hypergraph("hypergraph 4 5 1\n0 1 2").unwrap_err()),
            2
        );
        assert_eq!(line_of(parse_graph("graph 3 1\n0 x").unwrap_err()), 2);
        assert!(parse_graph("").is_err());
        assert!(parse_graph("graph 3 2\n0 1").is_err());
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (2usize..6, 6usize..12).prop_flat_map(|(k, n)| {
            proptest::collection::vec(
                proptest::sample::subsequence((0..n).collect::<Vec<_>>(), k),
                0..10,
            )
            .prop_map(move |edges| {
                let mut edges = edges;
                edges.sort();
                edges.dedup();
                Hypergraph::new(k, n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn hypergraph_round_trip(h in arb_hypergraph()) {
            let text = serialize_hypergraph(&h);
            let back = parse_hypergraph(&text).unwrap();
            prop_assert_eq!(serialize_hypergraph(&back), text);
            prop_assert_eq!(back, h);
        }

        #[test]
        fn graph_round_trip(n in 2usize..10, bits in any::<u64>()) {
            let edges = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)))
                .enumerate()
                .filter(|(b, _)| bits >> (b % 64) & 1 == 1)
                .map(|(_, e)| e);
            let g = SimpleGraph::new(n, edges).unwrap();
            prop_assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
        }
    }
}
