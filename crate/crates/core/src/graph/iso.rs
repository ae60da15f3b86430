//! Isomorphism testing by colour refinement with individualisation.
//!
//! Both graphs are coloured together as one disjoint union, so colour ids
//! mean the same thing on both sides. Each refinement step is isomorphism
//! invariant; a branch dies as soon as the two sides' colour histograms
//! disagree. When every colour class is a singleton the induced bijection
//! is checked edge by edge.

use crate::graph::{Bits, Graph};

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Returns `map` with `g.has_edge(u, v) == h.has_edge(map[u], map[v])`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let union = Union::new(g, h);
    let colors = union.refine(vec![0; 2 * n])?;
    union.search(colors)
}

struct Union<'a> {
    n: usize,
    g: &'a Graph,
    h: &'a Graph,
    nbrs: Vec<Vec<usize>>,
}

impl<'a> Union<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> Self {
        let n = g.order();
        let mut nbrs: Vec<Vec<usize>> = g.rows().iter().map(|&r| Bits::new(r).collect()).collect();
        nbrs.extend(h.rows().iter().map(|&r| Bits::new(r).map(|v| v + n).collect()));
        Union { n, g, h, nbrs }
    }

    fn balanced(&self, colors: &[u32], classes: usize) -> bool {
        let mut hist = vec![0i32; classes];
        for (v, &c) in colors.iter().enumerate() {
            hist[c as usize] += if v < self.n { 1 } else { -1 };
        }
        hist.iter().all(|&x| x == 0)
    }

    /// Refines to the coarsest equitable colouring, or `None` if the two
    /// halves become distinguishable.
    fn refine(&self, mut colors: Vec<u32>) -> Option<Vec<u32>> {
        let mut classes = count_classes(&colors);
        loop {
            let mut sigs: Vec<(u32, Vec<u32>)> = (0..colors.len())
                .map(|v| {
                    let mut around: Vec<u32> = self.nbrs[v].iter().map(|&w| colors[w]).collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let next: Vec<u32> = sigs
                .drain(..)
                .map(|s| distinct.binary_search(&s).unwrap() as u32)
                .collect();
            let next_classes = distinct.len();
            if !self.balanced(&next, next_classes) {
                return None;
            }
            colors = next;
            if next_classes == classes {
                return Some(colors);
            }
            classes = next_classes;
        }
    }

    fn search(&self, colors: Vec<u32>) -> Option<Vec<usize>> {
        let n = self.n;
        let classes = count_classes(&colors);
        let mut size = vec![0usize; classes];
        for &c in &colors[..n] {
            size[c as usize] += 1;
        }
        let target = (0..classes).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c));
        let Some(target) = target else {
            return self.check(&colors);
        };
        let target = target as u32;
        let v = (0..n).find(|&v| colors[v] == target)?;
        let fresh = classes as u32;
        for w in (n..2 * n).filter(|&w| colors[w] == target) {
            let mut next = colors.clone();
            next[v] = fresh;
            next[w] = fresh;
            if let Some(refined) = self.refine(next) {
                if let Some(map) = self.search(refined) {
                    return Some(map);
                }
            }
        }
        None
    }

    fn check(&self, colors: &[u32]) -> Option<Vec<usize>> {
        let n = self.n;
        let mut by_color = vec![usize::MAX; 2 * n];
        for w in n..2 * n {
            by_color[colors[w] as usize] = w - n;
        }
        let map: Vec<usize> = (0..n).map(|v| by_color[colors[v] as usize]).collect();
        let ok = self.g.edges().all(|(u, v)| self.h.has_edge(map[u], map[v])) && self.g.size() == self.h.size();
        ok.then_some(map)
    }
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().max().map_or(0, |&m| m as usize + 1)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::graph::{build_named, GraphName};

    fn named(name: GraphName, p: &[usize]) -> Graph {
        build_named(name, p).unwrap()
    }

    fn assert_mapping(g: &Graph, h: &Graph, map: &[usize]) {
        for u in 0..g.order() {
            for v in 0..g.order() {
                assert_eq!(g.has_edge(u, v), h.has_edge(map[u], map[v]));
            }
        }
    }

    #[test]
    fn figure_pair_is_not_isomorphic() {
        assert!(!is_isomorphic(
            &named(GraphName::Fig1Left, &[]),
            &named(GraphName::Fig1Right, &[])
        ));
    }

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let c6 = named(GraphName::Cycle, &[6]);
        let mut perm: Vec<usize> = (0..6).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(7));
        let h = c6.permute(&perm).unwrap();
        let map = find_isomorphism(&c6, &h).unwrap();
        assert_mapping(&c6, &h, &map);
    }

    #[test]
    fn vertex_transitive_graphs_need_individualisation() {
        // refinement alone cannot split regular graphs
        let a = named(GraphName::GridLattice, &[4]);
        let perm: Vec<usize> = (0..16).map(|i| (i * 5 + 3) % 16).collect();
        let b = a.permute(&perm).unwrap();
        let map = find_isomorphism(&a, &b).unwrap();
        assert_mapping(&a, &b, &map);

        let c33 = named(GraphName::Cycle, &[3])
            .cartesian(&named(GraphName::Cycle, &[3]))
            .unwrap();
        let k33 = named(GraphName::Complete, &[3])
            .cartesian(&named(GraphName::Complete, &[3]))
            .unwrap();
        assert!(is_isomorphic(&c33, &k33));
        // C6 and two triangles are both 2-regular on 6 vertices
        let two_triangles = named(GraphName::Complete, &[3])
            .disjoint_union(&named(GraphName::Complete, &[3]))
            .unwrap();
        assert!(!is_isomorphic(&named(GraphName::Cycle, &[6]), &two_triangles));
    }

    #[test]
    fn trivial_orders() {
        let e0 = Graph::empty(0).unwrap();
        assert_eq!(find_isomorphism(&e0, &e0), Some(vec![]));
        assert!(!is_isomorphic(
            &named(GraphName::Path, &[3]),
            &named(GraphName::Complete, &[3])
        ));
    }

    fn arb_graph_and_perm() -> impl Strategy<Value = (Graph, Vec<usize>)> {
        (1usize..=14).prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
                .prop_map(move |(bits, perm)| {
                    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                    let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
                    (Graph::from_edges(n, edges).unwrap(), perm)
                })
        })
    }

    proptest! {
        #[test]
        fn invariant_under_relabelling((g, perm) in arb_graph_and_perm()) {
            prop_assert!(is_isomorphic(&g, &g));
            let h = g.permute(&perm).unwrap();
            let map = find_isomorphism(&g, &h);
            prop_assert!(map.is_some());
            let map = map.unwrap();
            for (u, v) in g.edges() {
                prop_assert!(h.has_edge(map[u], map[v]));
            }
        }
    }
}
