//! Exact minimum forcing sets.
//!
//! The value is additive over connected components (no rule forces across
//! components), so each component is solved on its own. Within a component
//! subsets are tried by increasing size; subsets of one size are visited in
//! increasing numeric order of their bit masks, split by highest set bit so
//! that workers can take disjoint slices while the first hit in that order
//! stays the reported witness.

use rayon::prelude::*;
use serde::Serialize;

use super::{closure, closure_mask, ForcingCertificate, Rule};
use crate::error::{Error, Result};
use crate::graph::{low_mask, Graph, VertexSet};

/// Environment variable overriding [`SearchConfig::max_closures`].
pub const BUDGET_ENV: &str = "ZFFORGE_BUDGET";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Closure evaluations allowed over a whole solve. A size class is only
    /// entered if all of it fits in what is left.
    pub max_closures: u64,
    /// Largest component the exhaustive search will take on.
    pub max_component_order: usize,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_closures: 100_000_000,
            max_component_order: 24,
            parallel: true,
        }
    }
}

impl SearchConfig {
    /// Defaults, with the closure budget taken from `ZFFORGE_BUDGET` if set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = SearchConfig::default();
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            cfg.max_closures = v
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("{BUDGET_ENV}={v}: {e}")))?;
        }
        Ok(cfg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZfResult {
    pub rule: Rule,
    pub value: usize,
    /// Minimum forcing set with its deterministic forcing chronology.
    pub witness: ForcingCertificate,
    /// Closure evaluations a sequential search makes to reach the witness;
    /// identical whether or not the search ran in parallel.
    pub explored: u64,
}

/// Exact `Z`, `Z₋` or `Z₊` with default limits.
pub fn zero_forcing_number(g: &Graph, rule: Rule) -> Result<ZfResult> {
    zero_forcing_number_with(g, rule, &SearchConfig::default())
}

pub fn zero_forcing_number_with(g: &Graph, rule: Rule, cfg: &SearchConfig) -> Result<ZfResult> {
    let mut remaining = cfg.max_closures;
    let mut explored = 0u64;
    let mut witness = 0u64;
    for comp in g.component_subgraphs() {
        let order = comp.graph.order();
        if order > cfg.max_component_order {
            return Err(Error::BudgetExceeded(format!(
                "component of order {order} exceeds the per-component cap of {}",
                cfg.max_component_order
            )));
        }
        let found = min_forcing_mask(comp.graph.rows(), rule, cfg.parallel, &mut remaining)?;
        explored += found.explored;
        for (i, &v) in comp.map.iter().enumerate() {
            if found.mask >> i & 1 == 1 {
                witness |= 1 << v;
            }
        }
    }
    let initial = VertexSet::from_bits(witness);
    let run = closure(g, rule, initial)?;
    assert_eq!(run.blue, g.vertices(), "component witnesses must close the whole graph");
    Ok(ZfResult {
        rule,
        value: initial.len(),
        witness: run.certificate,
        explored,
    })
}

struct Found {
    mask: u64,
    explored: u64,
}

fn min_forcing_mask(rows: &[u64], rule: Rule, parallel: bool, remaining: &mut u64) -> Result<Found> {
    let n = rows.len();
    let full = low_mask(n);
    let closes = |s: u64| closure_mask(rows, rule, s) == full;
    let mut explored = 0u64;
    for k in 0..=n {
        let count = binomial(n, k);
        if count > *remaining {
            return Err(Error::BudgetExceeded(format!(
                "{rule} search on a component of order {n} needs {count} more closures at size {k}, \
                 {} left",
                *remaining
            )));
        }
        *remaining -= count;
        let hit = if k == 0 {
            closes(0).then_some((0, 1, 0))
        } else {
            let slice = |h: usize| scan_slice(h, k, &closes);
            if parallel {
                (k - 1..n).into_par_iter().find_map_first(slice)
            } else {
                (k - 1..n).find_map(slice)
            }
        };
        if let Some((h, idx, mask)) = hit {
            // slices below `h` were scanned completely
            let before = if k == 0 { 0 } else { binomial(h, k) };
            return Ok(Found {
                mask,
                explored: explored + before + idx,
            });
        }
        explored += count;
    }
    unreachable!("the full vertex set always closes")
}

/// Size-`k` subsets whose highest element is `h`, in increasing order.
/// Returns `(h, 1-based position, mask)` of the first forcing set.
fn scan_slice(h: usize, k: usize, closes: &impl Fn(u64) -> bool) -> Option<(usize, u64, u64)> {
    let top = 1u64 << h;
    let rest = k - 1;
    let mut idx = 0u64;
    if rest == 0 {
        return closes(top).then_some((h, 1, top));
    }
    let limit = top;
    let mut s = low_mask(rest);
    while s < limit {
        idx += 1;
        if closes(s | top) {
            return Some((h, idx, s | top));
        }
        // Gosper's hack: next larger integer with the same popcount
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    None
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::forcing::verify_certificate;
    use crate::graph::{build_named, GraphName};

    fn named(name: GraphName, p: &[usize]) -> Graph {
        build_named(name, p).unwrap()
    }

    fn z(g: &Graph, rule: Rule) -> usize {
        zero_forcing_number(g, rule).unwrap().value
    }

    /// Brute force over all subsets, smallest first; no components, no
    /// ordering tricks.
    fn brute_force(g: &Graph, rule: Rule) -> usize {
        let n = g.order();
        (0u64..1 << n)
            .filter(|&s| closure_mask(g.rows(), rule, s) == low_mask(n))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(24, 12), 2_704_156);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn paths_need_one() {
        for n in 2..=10 {
            assert_eq!(z(&named(GraphName::Path, &[n]), Rule::Standard), 1);
        }
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=8 {
            let k = named(GraphName::Complete, &[n]);
            assert_eq!(z(&k, Rule::Standard), n - 1);
            assert_eq!(z(&k, Rule::Psd), n - 1);
        }
    }

    #[test]
    fn isolated_vertices_count_under_every_rule() {
        let k1 = named(GraphName::Complete, &[1]);
        for rule in Rule::ALL {
            assert_eq!(z(&k1, rule), 1);
        }
        assert_eq!(z(&named(GraphName::Empty, &[4]), Rule::Skew), 4);
        assert_eq!(z(&Graph::empty(0).unwrap(), Rule::Standard), 0);
        // a skew edge forces itself from nothing
        assert_eq!(z(&named(GraphName::Complete, &[2]), Rule::Skew), 0);
    }

    #[test]
    fn witness_is_certified() {
        let g = named(GraphName::Fig1Left, &[]);
        let r = zero_forcing_number(&g, Rule::Standard).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.witness.initial.len(), 6);
        assert!(verify_certificate(&g, &r.witness));
    }

    #[test]
    fn parallel_and_sequential_agree_exactly() {
        let g = named(GraphName::Fig1Right, &[])
            .join(&named(GraphName::Path, &[4]))
            .unwrap();
        for rule in Rule::ALL {
            let par = zero_forcing_number(&g, rule).unwrap();
            let seq = zero_forcing_number_with(
                &g,
                rule,
                &SearchConfig {
                    parallel: false,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(par, seq);
        }
    }

    #[test]
    fn explored_counts_a_sequential_scan() {
        // P3 = 0-1-2: size 0 fails, then {0} is the first singleton
        let r = zero_forcing_number(&named(GraphName::Path, &[3]), Rule::Standard).unwrap();
        assert_eq!(r.explored, 2);
        // K3 needs two; sizes 0 and 1 fail (1 + 3) and {0,1} is first
        let r = zero_forcing_number(&named(GraphName::Complete, &[3]), Rule::Standard).unwrap();
        assert_eq!(r.explored, 5);
        assert_eq!(r.witness.initial.to_vec(), vec![0, 1]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = named(GraphName::Complete, &[10]);
        let tight = SearchConfig {
            max_closures: 100,
            ..Default::default()
        };
        assert!(matches!(
            zero_forcing_number_with(&g, Rule::Standard, &tight),
            Err(Error::BudgetExceeded(_))
        ));
        let small_cap = SearchConfig {
            max_component_order: 8,
            ..Default::default()
        };
        assert!(matches!(
            zero_forcing_number_with(&g, Rule::Standard, &small_cap),
            Err(Error::BudgetExceeded(_))
        ));
    }

    fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bool::weighted(0.4), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn solver_matches_brute_force(g in arb_graph(9)) {
            for rule in Rule::ALL {
                let r = zero_forcing_number(&g, rule).unwrap();
                prop_assert_eq!(r.value, brute_force(&g, rule));
                prop_assert!(verify_certificate(&g, &r.witness));
            }
        }

        #[test]
        fn psd_and_skew_never_exceed_standard(g in arb_graph(8)) {
            let zs = z(&g, Rule::Standard);
            prop_assert!(z(&g, Rule::Psd) <= zs);
            prop_assert!(z(&g, Rule::Skew) <= zs);
        }
    }
}
