//! graph6 and plain edge-list formats.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes in graph6: order byte(s), then the upper triangle column by
/// column, six bits per printable character offset by 63.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse("graph6 contains a character outside 63..=126".into()));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] => {
            // 36-bit order; anything that needs it is far beyond the cap
            if rest.len() < 6 {
                return Err(Error::Parse("truncated graph6 order".into()));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("truncated graph6 order".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::OrderCap(n));
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(Error::Parse(format!(
            "graph6 body has {} characters, expected {needed} for order {n}",
            body.len()
        )));
    }
    let mut bits = body
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |k| (b - 63) >> k & 1 == 1));
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bits.next() == Some(true) {
                edges.push((i, j));
            }
        }
    }
    if bits.any(|b| b) {
        return Err(Error::Parse("nonzero graph6 padding bits".into()));
    }
    Graph::from_edges(n, edges)
}

/// One `u v` pair per line, preceded by a `# n=<order>` comment so that
/// isolated vertices survive a round trip.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("# n={}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses whitespace-separated `u v` pairs, one per line. Blank lines and
/// `#` comments are ignored, except a `# n=<order>` comment which fixes the
/// order; otherwise the order is one more than the largest index.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut order = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("n=") {
                let n = n
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("line {}: bad order: {e}", lineno + 1)))?;
                order = Some(n);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields: Vec<_> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(Error::Parse(format!(
                "line {}: expected two vertex indices",
                lineno + 1
            )));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| Error::Parse(format!("line {}: `{s}`: {e}", lineno + 1)))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = order.unwrap_or(implied);
    if n > MAX_ORDER {
        return Err(Error::OrderCap(n));
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::graph::{build_named, GraphName};

    #[test]
    fn known_strings() {
        let k2 = build_named(GraphName::Complete, &[2]).unwrap();
        assert_eq!(emit_graph6(&k2), "A_");
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), k2);
    }

    #[test]
    fn long_order_prefix() {
        let g = build_named(GraphName::Path, &[64]).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_graph6() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A").is_err());
        assert!(parse_graph6("A_?").is_err());
        assert!(parse_graph6("A`").is_err(), "padding bit set");
        assert!(matches!(parse_graph6("~?@@"), Err(Error::OrderCap(65))));
    }

    #[test]
    fn edgelist_basics() {
        let p3 = parse_edgelist("0 1\n1 2").unwrap();
        assert_eq!(p3, build_named(GraphName::Path, &[3]).unwrap());
        let g = build_named(GraphName::Ex32G, &[]).unwrap();
        assert_eq!(parse_edgelist(&emit_edgelist(&g)).unwrap(), g);
        assert!(parse_edgelist("0 1 2").is_err());
        assert!(parse_edgelist("0 x").is_err());
        assert!(parse_edgelist("1 1").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn formats_round_trip(g in arb_graph()) {
            prop_assert_eq!(&parse_graph6(&emit_graph6(&g)).unwrap(), &g);
            prop_assert_eq!(&parse_edgelist(&emit_edgelist(&g)).unwrap(), &g);
        }
    }
}
