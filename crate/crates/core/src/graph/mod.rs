//! Simple undirected graphs on at most 64 vertices.
//!
//! Every row of the adjacency matrix is a single `u64` mask, so neighborhood
//! queries, set intersections and popcounts are single machine instructions.
//! Graphs are immutable once built; all operators return new graphs.
//!
//! Product graphs use row-major vertex order: the vertex `(u, u')` of a
//! product of `g` and `h` gets index `u * h.order() + u'`. Joins and
//! disjoint unions place the vertices of the left operand first.

mod io;
mod iso;
mod named;
pub mod random;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use io::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph6};
pub use iso::{find_isomorphism, is_isomorphic};
pub use named::{build_named, named_graph, GraphName, NAMED_GRAPHS};

/// Largest supported order: one adjacency row per machine word.
pub const MAX_ORDER: usize = 64;

/// A subset of the vertices of a host graph, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// Builds a set checked against a host of order `n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in indices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            bits |= 1 << v;
        }
        Ok(VertexSet(bits))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[must_use]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(d)?;
        VertexSet::from_indices(MAX_ORDER, items).map_err(serde::de::Error::custom)
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Debug)]
pub struct Bits(u64);

impl Bits {
    pub const fn new(mask: u64) -> Self {
        Bits(mask)
    }
}

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

/// Immutable simple undirected graph.
///
/// Equality compares the adjacency structure only; vertex labels are
/// provenance metadata.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.order(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Serialized as a graph6 string.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&emit_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderCap(n));
        }
        Ok(Graph {
            adj: vec![0; n],
            labels: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = Self::empty(n)?.adj;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds from adjacency rows, validating symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::OrderCap(n));
        }
        let full = VertexSet::full(n).bits();
        for (u, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let v = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            for v in Bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::Parse(format!("asymmetric adjacency between {u} and {v}")));
                }
            }
        }
        Ok(Graph {
            adj: rows,
            labels: None,
        })
    }

    /// Caller guarantees symmetric, loop-free rows of length <= 64.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Self::from_rows(rows.clone()).is_ok());
        Graph {
            adj: rows,
            labels: None,
        }
    }

    #[must_use]
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degs = self.adj.iter().map(|r| r.count_ones() as usize);
        let d = degs.next().unwrap_or(0);
        degs.all(|x| x == d).then_some(d)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| Bits(row & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::Parse("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        if perm.len() != n {
            return Err(Error::Parse("permutation length differs from order".into()));
        }
        let mut rows = vec![0u64; n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Induced subgraph on `set`, with the map from new to old indices.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map = set.to_vec();
        let rows = map
            .iter()
            .map(|&old| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(old, w))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        let mut sub = Graph::from_rows_unchecked(rows);
        if let Some(labels) = &self.labels {
            sub.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        (sub, map)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.order()).bits();
        let rows = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, &r)| !r & full & !(1 << u))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.glue(other, false)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.glue(other, true)
    }

    fn glue(&self, other: &Graph, cross: bool) -> Result<Graph> {
        let (n, m) = (self.order(), other.order());
        if n + m > MAX_ORDER {
            return Err(Error::OrderCap(n + m));
        }
        let left = VertexSet::full(n).bits();
        let right = VertexSet::full(m).bits() << n;
        let mut rows = Vec::with_capacity(n + m);
        rows.extend(self.adj.iter().map(|&r| r | if cross { right } else { 0 }));
        rows.extend(other.adj.iter().map(|&r| r << n | if cross { left } else { 0 }));
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// `G` joined with itself `k` times: `∨₀G = G`, `∨ₖ₊₁G = (∨ₖG) ∨ G`.
    pub fn iterated_join(&self, k: usize) -> Result<Graph> {
        (0..k).try_fold(self.clone(), |acc, _| acc.join(self))
    }

    /// Tensor (categorical) product; adjacency matrix is the Kronecker product.
    pub fn tensor(&self, other: &Graph) -> Result<Graph> {
        self.product(other, |g, h, (u, u2), (v, v2)| g.has_edge(u, v) && h.has_edge(u2, v2))
    }

    pub fn cartesian(&self, other: &Graph) -> Result<Graph> {
        self.product(other, |g, h, (u, u2), (v, v2)| {
            (u == v && h.has_edge(u2, v2)) || (u2 == v2 && g.has_edge(u, v))
        })
    }

    fn product<F>(&self, other: &Graph, adjacent: F) -> Result<Graph>
    where
        F: Fn(&Graph, &Graph, (usize, usize), (usize, usize)) -> bool,
    {
        let (n, m) = (self.order(), other.order());
        let total = n * m;
        if total > MAX_ORDER {
            return Err(Error::OrderCap(total));
        }
        let rows = (0..total)
            .map(|a| {
                (0..total)
                    .filter(|&b| a != b && adjacent(self, other, (a / m, a % m), (b / m, b % m)))
                    .fold(0u64, |row, b| row | 1 << b)
            })
            .collect();
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Result<Graph> {
        let edges: Vec<_> = self.edges().collect();
        if edges.len() > MAX_ORDER {
            return Err(Error::OrderCap(edges.len()));
        }
        let mut rows = vec![0u64; edges.len()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = self.vertices().bits();
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen & unseen.wrapping_neg();
            let comp = self.reach(start, unseen);
            unseen &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// Components together with their induced subgraphs.
    pub fn component_subgraphs(&self) -> Vec<Component> {
        self.components()
            .into_iter()
            .map(|vertices| {
                let (graph, map) = self.induced(vertices);
                Component { vertices, graph, map }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Vertices reachable from `seed` using only vertices of `within`.
    pub(crate) fn reach(&self, seed: u64, within: u64) -> u64 {
        let mut comp = seed & within;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.order();
        (0..n)
            .map(|u| (0..n).map(|v| i64::from(self.has_edge(u, v))).collect())
            .collect()
    }
}

/// One connected component of a host graph.
#[derive(Clone, Debug)]
pub struct Component {
    pub vertices: VertexSet,
    pub graph: Graph,
    /// `map[i]` is the host index of component vertex `i`.
    pub map: Vec<usize>,
}

#[inline]
pub(crate) const fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}
