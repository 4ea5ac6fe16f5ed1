//! The `.hg` text format.
//!
//! First line: `r n`. Each following line is one edge as space-separated
//! 1-based vertex labels. `#` starts a comment, blank lines are ignored.
//! Serialization writes edges in lexicographic order, so
//! parse-then-serialize round trips are bit-exact.

use crate::error::GraphError;
use crate::hypergraph::Hypergraph;

pub fn write_hg(g: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", g.r(), g.n());
    for e in g.edges_lex() {
        let labels: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_hg(text: &str) -> Result<Hypergraph, GraphError> {
    let mut lines = text.lines().filter_map(|line| {
        let line = match line.find('#') {
            Some(k) => &line[..k],
            None => line,
        };
        let line = line.trim();
        if line.is_empty() {
            None
        } else {
            Some(line)
        }
    });
    let header = lines
        .next()
        .ok_or_else(|| GraphError::Parse("empty .hg input".into()))?;
    let mut head = header.split_whitespace();
    let r: usize = head
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::Parse(format!("bad header line `{header}`")))?;
    let n: usize = head
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::Parse(format!("bad header line `{header}`")))?;
    if head.next().is_some() {
        return Err(GraphError::Parse(format!(
            "header line `{header}` has trailing tokens"
        )));
    }
    let mut edges = Vec::new();
    for line in lines {
        let mut edge = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| GraphError::Parse(format!("bad vertex token `{tok}`")))?;
            edge.push(v);
        }
        edges.push(edge);
    }
    Hypergraph::build(r, n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_with_comments() {
        let text = "# a matching\n3 6\n1 2 3  # first edge\n\n4 5 6\n";
        let g = parse_hg(text).unwrap();
        assert_eq!(g, crate::family::matching(3, 2).unwrap());
        let written = write_hg(&g);
        assert_eq!(written, "3 6\n1 2 3\n4 5 6\n");
        assert_eq!(parse_hg(&written).unwrap(), g);
        assert_eq!(write_hg(&parse_hg(&written).unwrap()), written);
    }

    #[test]
    fn lexicographic_edge_order() {
        let g = Hypergraph::build(3, 5, &[vec![3, 4, 5], vec![1, 2, 5], vec![1, 2, 3]]).unwrap();
        assert_eq!(write_hg(&g), "3 5\n1 2 3\n1 2 5\n3 4 5\n");
    }

    #[test]
    fn parse_errors() {
        assert!(parse_hg("").is_err());
        assert!(parse_hg("3\n").is_err());
        assert!(parse_hg("2 3\n1 4\n").is_err());
        assert!(parse_hg("2 3\n1 x\n").is_err());
    }
}
