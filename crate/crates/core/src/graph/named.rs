use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Built-in graph families and fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphName {
    Path,
    Cycle,
    Complete,
    Empty,
    CompleteBipartite,
    /// Rook's graph `Kₛ □ Kₛ`.
    GridLattice,
    /// The 4-regular 10-vertex pair with different `Z` and `Z₊`.
    Fig1Left,
    Fig1Right,
    /// `C₆ ∪ K₁`.
    Ex32G,
    /// Spider with three legs of length two; cospectral with `C₆ ∪ K₁`.
    Ex32GPrime,
    /// `circulant n s₁ s₂ …`: `i ~ i ± sⱼ (mod n)`.
    Circulant,
}

pub const NAMED_GRAPHS: &[(&str, GraphName)] = &[
    ("path", GraphName::Path),
    ("cycle", GraphName::Cycle),
    ("complete", GraphName::Complete),
    ("empty", GraphName::Empty),
    ("complete_bipartite", GraphName::CompleteBipartite),
    ("grid_lattice", GraphName::GridLattice),
    ("fig1_left", GraphName::Fig1Left),
    ("fig1_right", GraphName::Fig1Right),
    ("ex32_G", GraphName::Ex32G),
    ("ex32_Gprime", GraphName::Ex32GPrime),
    ("circulant", GraphName::Circulant),
];

impl GraphName {
    pub fn as_str(self) -> &'static str {
        NAMED_GRAPHS.iter().find(|(_, g)| *g == self).map(|(s, _)| *s).unwrap()
    }
}

impl fmt::Display for GraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NAMED_GRAPHS
            .iter()
            .find(|(name, _)| name.eq_ignore_ascii_case(s))
            .map(|&(_, g)| g)
            .ok_or_else(|| Error::UnknownGraph(s.to_string()))
    }
}

const CYCLE6: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];

const FIG1_LEFT_CHORDS: [(usize, usize); 14] = [
    (6, 1),
    (6, 2),
    (6, 5),
    (6, 9),
    (7, 0),
    (7, 1),
    (7, 3),
    (7, 8),
    (8, 2),
    (8, 3),
    (8, 4),
    (9, 0),
    (9, 4),
    (9, 5),
];

const FIG1_RIGHT_CHORDS: [(usize, usize); 14] = [
    (6, 0),
    (6, 1),
    (6, 3),
    (6, 9),
    (7, 1),
    (7, 2),
    (7, 5),
    (7, 8),
    (8, 2),
    (8, 3),
    (8, 4),
    (9, 0),
    (9, 4),
    (9, 5),
];

const SPIDER: [(usize, usize); 6] = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)];

/// Builds a named graph. Parameter counts:
/// `path n`, `cycle n`, `complete n`, `empty n`, `complete_bipartite m n`,
/// `grid_lattice s`, `circulant n s…`; the fixtures take none.
pub fn build_named(name: GraphName, params: &[usize]) -> Result<Graph> {
    let label = name.as_str();
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::bad_params(
                label,
                format!("expected {k} parameter(s), got {}", params.len()),
            ))
        }
    };
    let order_ok = |n: usize, min: usize| {
        if n < min {
            Err(Error::bad_params(
                label,
                format!("order {n} is below the minimum {min}"),
            ))
        } else if n > MAX_ORDER {
            Err(Error::OrderCap(n))
        } else {
            Ok(n)
        }
    };
    match name {
        GraphName::Path => {
            arity(1)?;
            let n = order_ok(params[0], 1)?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        GraphName::Cycle => {
            arity(1)?;
            let n = order_ok(params[0], 3)?;
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        GraphName::Complete => {
            arity(1)?;
            let n = order_ok(params[0], 1)?;
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        GraphName::Empty => {
            arity(1)?;
            Graph::empty(order_ok(params[0], 0)?)
        }
        GraphName::CompleteBipartite => {
            arity(2)?;
            let (a, b) = (params[0], params[1]);
            if a == 0 || b == 0 {
                return Err(Error::bad_params(label, "both sides must be non-empty"));
            }
            order_ok(a + b, 2)?;
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        GraphName::GridLattice => {
            arity(1)?;
            let s = params[0];
            if s == 0 {
                return Err(Error::bad_params(label, "side must be positive"));
            }
            let k = build_named(GraphName::Complete, &[s])?;
            k.cartesian(&k)
        }
        GraphName::Fig1Left => {
            arity(0)?;
            Graph::from_edges(10, CYCLE6.into_iter().chain(FIG1_LEFT_CHORDS))
        }
        GraphName::Fig1Right => {
            arity(0)?;
            Graph::from_edges(10, CYCLE6.into_iter().chain(FIG1_RIGHT_CHORDS))
        }
        GraphName::Ex32G => {
            arity(0)?;
            Graph::from_edges(7, CYCLE6)
        }
        GraphName::Ex32GPrime => {
            arity(0)?;
            Graph::from_edges(7, SPIDER)
        }
        GraphName::Circulant => {
            let Some((&n, jumps)) = params.split_first() else {
                return Err(Error::bad_params(label, "expected the order followed by jumps"));
            };
            let n = order_ok(n, 1)?;
            let mut edges = Vec::new();
            for &s in jumps {
                let s = s % n;
                if s == 0 {
                    return Err(Error::bad_params(label, "jump must be nonzero modulo n"));
                }
                edges.extend((0..n).map(|i| (i, (i + s) % n)).filter(|(a, b)| a != b));
            }
            Graph::from_edges(n, edges)
        }
    }
}

/// Builds a graph from `name` or `name:p1,p2,…`, e.g. `cycle:6`.
pub fn named_graph(spec: &str) -> Result<Graph> {
    let (name, params) = parse_spec(spec)?;
    build_named(name, &params)
}

/// Parses `name` or `name:p1,p2,…`.
pub(crate) fn parse_spec(spec: &str) -> Result<(GraphName, Vec<usize>)> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let name: GraphName = name.trim().parse()?;
    let params = params
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad parameter `{p}`: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((name, params))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let k3 = build_named(GraphName::Complete, &[3]).unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        let p = build_named(GraphName::Path, &[5]).unwrap();
        assert_eq!(p.size(), 4);
        let c = build_named(GraphName::Circulant, &[5, 2]).unwrap();
        assert_eq!(c.regular_degree(), Some(2));
        assert_eq!(build_named(GraphName::GridLattice, &[4]).unwrap().order(), 16);
    }

    #[test]
    fn figure_fixtures() {
        for name in [GraphName::Fig1Left, GraphName::Fig1Right] {
            let g = build_named(name, &[]).unwrap();
            assert_eq!((g.order(), g.size(), g.regular_degree()), (10, 20, Some(4)));
            assert!(g.is_connected());
        }
        let g = build_named(GraphName::Ex32G, &[]).unwrap();
        assert_eq!((g.order(), g.size(), g.degree(6)), (7, 6, 0));
        let s = build_named(GraphName::Ex32GPrime, &[]).unwrap();
        assert_eq!((s.order(), s.size(), s.degree(0)), (7, 6, 3));
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            build_named(GraphName::Cycle, &[2]),
            Err(Error::BadParams { .. })
        ));
        assert!(matches!(
            build_named(GraphName::Path, &[]),
            Err(Error::BadParams { .. })
        ));
        assert!(matches!(
            build_named(GraphName::Complete, &[65]),
            Err(Error::OrderCap(65))
        ));
        assert!(matches!(
            build_named(GraphName::GridLattice, &[9]),
            Err(Error::OrderCap(81))
        ));
        assert!(matches!("petersen".parse::<GraphName>(), Err(Error::UnknownGraph(_))));
    }

    #[test]
    fn spec_strings() {
        assert_eq!(parse_spec("cycle:6").unwrap(), (GraphName::Cycle, vec![6]));
        assert_eq!(parse_spec("fig1_left").unwrap(), (GraphName::Fig1Left, vec![]));
        assert_eq!(
            parse_spec("complete_bipartite:2, 3").unwrap(),
            (GraphName::CompleteBipartite, vec![2, 3])
        );
    }
}
