//! Colour-change rules, closures and forcing certificates.
//!
//! A closure starts from a set of blue vertices and applies a rule until
//! nothing changes:
//!
//! * **standard**: a blue vertex with exactly one white neighbour forces it;
//! * **skew**: any vertex, blue or white, with exactly one white neighbour
//!   forces it;
//! * **psd**: a blue vertex forces a white neighbour `w` when `w` is its
//!   only white neighbour inside the component of the white subgraph that
//!   contains `w`.
//!
//! For all three rules the final set does not depend on the order in which
//! forces are applied, so the search uses a fast batched closure while
//! certificates fire one force at a time, always the lowest-index eligible
//! `(actor, target)` pair.

mod search;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{low_mask, Bits, Graph, VertexSet};

pub use search::{zero_forcing_number, zero_forcing_number_with, SearchConfig, ZfResult, BUDGET_ENV};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    Standard,
    Skew,
    Psd,
}

impl Rule {
    pub const ALL: [Rule; 3] = [Rule::Standard, Rule::Skew, Rule::Psd];

    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Standard => "standard",
            Rule::Skew => "skew",
            Rule::Psd => "psd",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "standard" | "z" => Ok(Rule::Standard),
            "skew" | "z-" => Ok(Rule::Skew),
            "psd" | "z+" => Ok(Rule::Psd),
            _ => Err(Error::Parse(format!(
                "unknown rule `{s}` (expected standard, skew or psd)"
            ))),
        }
    }
}

/// An initial blue set plus the ordered forces of its closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingCertificate {
    pub rule: Rule,
    pub initial: VertexSet,
    /// `(actor, target)` pairs in firing order.
    pub forces: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub blue: VertexSet,
    pub certificate: ForcingCertificate,
}

/// Closure of `initial` under `rule`, with a deterministic certificate.
pub fn closure(g: &Graph, rule: Rule, initial: VertexSet) -> Result<Closure> {
    check_subset(g, initial)?;
    let rows = g.rows();
    let mut blue = initial.bits();
    let mut forces = Vec::new();
    while let Some((u, w)) = next_force(rows, rule, blue) {
        blue |= 1 << w;
        forces.push((u, w));
    }
    Ok(Closure {
        blue: VertexSet::from_bits(blue),
        certificate: ForcingCertificate { rule, initial, forces },
    })
}

/// Lowest-index eligible force, if any.
fn next_force(rows: &[u64], rule: Rule, blue: u64) -> Option<(usize, usize)> {
    let n = rows.len();
    let white = low_mask(n) & !blue;
    if white == 0 {
        return None;
    }
    match rule {
        Rule::Standard | Rule::Skew => {
            let actors = if rule == Rule::Standard { blue } else { low_mask(n) };
            Bits::new(actors).find_map(|u| {
                let w = rows[u] & white;
                single(w).then(|| (u, w.trailing_zeros() as usize))
            })
        }
        Rule::Psd => Bits::new(blue).find_map(|u| {
            Bits::new(rows[u] & white).find_map(|w| {
                let comp = white_component(rows, 1 << w, white);
                (rows[u] & comp == 1 << w).then_some((u, w))
            })
        }),
    }
}

#[inline]
fn single(mask: u64) -> bool {
    mask != 0 && mask & (mask - 1) == 0
}

fn white_component(rows: &[u64], seed: u64, white: u64) -> u64 {
    let mut comp = seed;
    let mut frontier = seed;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits::new(frontier) {
            next |= rows[v];
        }
        next &= white & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

/// Final blue mask of a closure, without recording forces. Forces that are
/// available simultaneously stay valid after any of them fires, so they
/// are applied in sweeps.
pub(crate) fn closure_mask(rows: &[u64], rule: Rule, initial: u64) -> u64 {
    let full = low_mask(rows.len());
    let mut blue = initial;
    match rule {
        Rule::Standard | Rule::Skew => {
            // vertices with no white neighbour can never force again
            let mut live = if rule == Rule::Standard { blue } else { full };
            loop {
                let mut changed = false;
                let mut settled = 0u64;
                for u in Bits::new(live) {
                    let w = rows[u] & !blue;
                    if w == 0 {
                        settled |= 1 << u;
                    } else if w & (w - 1) == 0 {
                        blue |= w;
                        settled |= 1 << u;
                        if rule == Rule::Standard {
                            live |= w;
                        }
                        changed = true;
                    }
                }
                live &= !settled;
                if !changed {
                    return blue;
                }
            }
        }
        Rule::Psd => loop {
            let white = full & !blue;
            if white == 0 {
                return blue;
            }
            let mut forced = 0u64;
            let mut rest = white;
            while rest != 0 {
                let comp = white_component(rows, rest & rest.wrapping_neg(), white);
                rest &= !comp;
                for u in Bits::new(blue) {
                    let hit = rows[u] & comp;
                    if single(hit) {
                        forced |= hit;
                    }
                }
            }
            if forced == 0 {
                return blue;
            }
            blue |= forced;
        },
    }
}

/// Whether `set` is a forcing set of `g` under `rule`.
pub fn is_forcing_set(g: &Graph, rule: Rule, set: VertexSet) -> Result<bool> {
    check_subset(g, set)?;
    Ok(closure_mask(g.rows(), rule, set.bits()) == g.vertices().bits())
}

fn check_subset(g: &Graph, set: VertexSet) -> Result<()> {
    let extra = set.difference(g.vertices());
    match extra.first() {
        Some(v) => Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        }),
        None => Ok(()),
    }
}

/// Why a certificate replay failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReplayError {
    VertexOutOfRange(usize),
    TargetAlreadyBlue {
        step: usize,
        target: usize,
    },
    NotAdjacent {
        step: usize,
        actor: usize,
        target: usize,
    },
    ActorNotBlue {
        step: usize,
        actor: usize,
    },
    /// The actor has another white neighbour (standard, skew) or another
    /// white neighbour in the target's white component (psd).
    Ambiguous {
        step: usize,
        actor: usize,
        target: usize,
    },
}

/// Replays a certificate force by force and returns the final blue set.
///
/// Written separately from the closure engine, with plain neighbour
/// scans and an explicit breadth-first search, so that it can audit it.
pub fn replay(g: &Graph, cert: &ForcingCertificate) -> Result<VertexSet, ReplayError> {
    let n = g.order();
    let mut is_blue = vec![false; n];
    for v in cert.initial.iter() {
        if v >= n {
            return Err(ReplayError::VertexOutOfRange(v));
        }
        is_blue[v] = true;
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&w| g.has_edge(v, w)).collect()).collect();
    for (step, &(actor, target)) in cert.forces.iter().enumerate() {
        if actor >= n || target >= n {
            return Err(ReplayError::VertexOutOfRange(actor.max(target)));
        }
        if is_blue[target] {
            return Err(ReplayError::TargetAlreadyBlue { step, target });
        }
        if !nbrs[actor].contains(&target) {
            return Err(ReplayError::NotAdjacent { step, actor, target });
        }
        if cert.rule != Rule::Skew && !is_blue[actor] {
            return Err(ReplayError::ActorNotBlue { step, actor });
        }
        let competing: Vec<usize> = match cert.rule {
            Rule::Standard | Rule::Skew => nbrs[actor].iter().copied().filter(|&w| !is_blue[w]).collect(),
            Rule::Psd => {
                let mut seen = vec![false; n];
                let mut queue = VecDeque::from([target]);
                seen[target] = true;
                while let Some(v) = queue.pop_front() {
                    for &w in &nbrs[v] {
                        if !is_blue[w] && !seen[w] {
                            seen[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
                nbrs[actor].iter().copied().filter(|&w| seen[w]).collect()
            }
        };
        if competing != [target] {
            return Err(ReplayError::Ambiguous { step, actor, target });
        }
        is_blue[target] = true;
    }
    VertexSet::from_indices(n, (0..n).filter(|&v| is_blue[v])).map_err(|_| ReplayError::VertexOutOfRange(n))
}

/// True iff every force is legal when replayed and all vertices end blue.
pub fn verify_certificate(g: &Graph, cert: &ForcingCertificate) -> bool {
    replay(g, cert).is_ok_and(|blue| blue == g.vertices())
}

/// Exact value on a join versus `min{n + Z(h), n' + Z(g)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinFormulaCheck {
    pub rule: Rule,
    pub formula: usize,
    pub exact: usize,
}

impl JoinFormulaCheck {
    pub fn holds(&self) -> bool {
        self.formula == self.exact
    }
}

/// Compares the exact standard or skew number of `g ∨ h` with the join
/// formula. Both graphs must be connected, and not both single vertices:
/// `K₁ ∨ K₁ = K₂` has `Z = 1` and `Z₋ = 0`, below the formula's 2.
pub fn zf_join_formula_check(g: &Graph, h: &Graph, rule: Rule, cfg: &SearchConfig) -> Result<JoinFormulaCheck> {
    if rule == Rule::Psd {
        return Err(Error::precondition(
            "the join formula covers the standard and skew rules only",
        ));
    }
    let mut problems = Vec::new();
    for (label, x) in [("first", g), ("second", h)] {
        if x.order() == 0 || !x.is_connected() {
            problems.push(format!("{label} graph is not connected"));
        }
    }
    if g.order() == 1 && h.order() == 1 {
        problems.push("the formula fails for two single vertices".to_string());
    }
    if !problems.is_empty() {
        return Err(Error::Preconditions(problems));
    }
    let zg = zero_forcing_number_with(g, rule, cfg)?.value;
    let zh = zero_forcing_number_with(h, rule, cfg)?.value;
    let formula = (g.order() + zh).min(h.order() + zg);
    let exact = zero_forcing_number_with(&g.join(h)?, rule, cfg)?.value;
    Ok(JoinFormulaCheck { rule, formula, exact })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::graph::{build_named, GraphName};

    fn named(name: GraphName, p: &[usize]) -> Graph {
        build_named(name, p).unwrap()
    }

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn path_from_an_endpoint() {
        let p3 = named(GraphName::Path, &[3]);
        let c = closure(&p3, Rule::Standard, set(3, &[0])).unwrap();
        assert_eq!(c.blue, p3.vertices());
        assert_eq!(c.certificate.forces, vec![(0, 1), (1, 2)]);
        assert!(verify_certificate(&p3, &c.certificate));
    }

    #[test]
    fn skew_cycle_from_nothing_stalls() {
        let c6 = named(GraphName::Cycle, &[6]);
        let c = closure(&c6, Rule::Skew, VertexSet::EMPTY).unwrap();
        assert_eq!(c.blue, VertexSet::EMPTY);
        assert!(c.certificate.forces.is_empty());
    }

    #[test]
    fn skew_lets_white_vertices_force() {
        // K2 with nothing blue: each endpoint's only white neighbour is the other
        let k2 = named(GraphName::Complete, &[2]);
        let c = closure(&k2, Rule::Skew, VertexSet::EMPTY).unwrap();
        assert_eq!(c.blue, k2.vertices());
        assert_eq!(c.certificate.forces, vec![(0, 1), (1, 0)]);
        assert!(verify_certificate(&k2, &c.certificate));
        // an isolated vertex is never forced
        let k1 = named(GraphName::Complete, &[1]);
        assert_eq!(
            closure(&k1, Rule::Skew, VertexSet::EMPTY).unwrap().blue,
            VertexSet::EMPTY
        );
    }

    #[test]
    fn psd_star_from_centre() {
        let star = named(GraphName::CompleteBipartite, &[1, 3]);
        let c = closure(&star, Rule::Psd, set(4, &[0])).unwrap();
        assert_eq!(c.blue, star.vertices());
        assert_eq!(c.certificate.forces, vec![(0, 1), (0, 2), (0, 3)]);
        assert!(verify_certificate(&star, &c.certificate));
        // standard rule cannot start: the centre has three white neighbours
        assert_eq!(closure(&star, Rule::Standard, set(4, &[0])).unwrap().blue, set(4, &[0]));
    }

    #[test]
    fn rejects_forged_certificates() {
        let p3 = named(GraphName::Path, &[3]);
        // middle vertex has two white neighbours
        let bad = ForcingCertificate {
            rule: Rule::Standard,
            initial: set(3, &[1]),
            forces: vec![(1, 0)],
        };
        assert!(matches!(replay(&p3, &bad), Err(ReplayError::Ambiguous { .. })));
        assert!(!verify_certificate(&p3, &bad));
        // legal but incomplete
        let partial = ForcingCertificate {
            rule: Rule::Standard,
            initial: set(3, &[0]),
            forces: vec![(0, 1)],
        };
        assert_eq!(replay(&p3, &partial), Ok(set(3, &[0, 1])));
        assert!(!verify_certificate(&p3, &partial));
        let twice = ForcingCertificate {
            rule: Rule::Standard,
            initial: set(3, &[0]),
            forces: vec![(0, 1), (0, 1)],
        };
        assert!(matches!(
            replay(&p3, &twice),
            Err(ReplayError::TargetAlreadyBlue { .. })
        ));
        let white_actor = ForcingCertificate {
            rule: Rule::Standard,
            initial: set(3, &[]),
            forces: vec![(0, 1)],
        };
        assert!(matches!(
            replay(&p3, &white_actor),
            Err(ReplayError::ActorNotBlue { .. })
        ));
    }

    #[test]
    fn out_of_range_sets_are_errors() {
        let p3 = named(GraphName::Path, &[3]);
        assert!(closure(&p3, Rule::Standard, VertexSet::from_bits(1 << 5)).is_err());
    }

    #[test]
    fn join_formula_small_cases() {
        let cfg = SearchConfig::default();
        let p3 = named(GraphName::Path, &[3]);
        let r = zf_join_formula_check(&p3, &p3, Rule::Standard, &cfg).unwrap();
        assert_eq!((r.formula, r.exact), (4, 4));
        let k2 = named(GraphName::Complete, &[2]);
        let r = zf_join_formula_check(&k2, &k2, Rule::Standard, &cfg).unwrap();
        assert_eq!((r.formula, r.exact), (3, 3));
        assert!(zf_join_formula_check(&k2, &k2, Rule::Psd, &cfg).is_err());
        let split = named(GraphName::Empty, &[2]);
        assert!(matches!(
            zf_join_formula_check(&split, &k2, Rule::Skew, &cfg),
            Err(Error::Preconditions(_))
        ));
        let k1 = named(GraphName::Complete, &[1]);
        assert!(zf_join_formula_check(&k1, &k1, Rule::Standard, &cfg).is_err());
        let r = zf_join_formula_check(&k1, &k2, Rule::Skew, &cfg).unwrap();
        assert!(r.holds());
    }

    fn arb_case() -> impl Strategy<Value = (Graph, Rule, u64, u64)> {
        (1usize..=10).prop_flat_map(|n| {
            (
                proptest::collection::vec(proptest::bool::weighted(0.35), n * (n - 1) / 2),
                prop_oneof![Just(Rule::Standard), Just(Rule::Skew), Just(Rule::Psd)],
                0..(1u64 << n),
                0..(1u64 << n),
            )
                .prop_map(move |(bits, rule, s, t)| {
                    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                    let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
                    (Graph::from_edges(n, edges).unwrap(), rule, s, s | t)
                })
        })
    }

    proptest! {
        #[test]
        fn batched_and_certified_closures_agree((g, rule, s, _t) in arb_case()) {
            let c = closure(&g, rule, VertexSet::from_bits(s)).unwrap();
            prop_assert_eq!(c.blue.bits(), closure_mask(g.rows(), rule, s));
            let replayed = replay(&g, &c.certificate);
            prop_assert_eq!(replayed, Ok(c.blue));
            let mut targets: Vec<usize> = c.certificate.forces.iter().map(|f| f.1).collect();
            targets.sort_unstable();
            targets.dedup();
            prop_assert_eq!(targets.len(), c.certificate.forces.len());
            prop_assert!(targets.iter().all(|&t| s >> t & 1 == 0));
        }

        #[test]
        fn closure_is_monotone_extensive_idempotent((g, rule, s, t) in arb_case()) {
            let cs = closure_mask(g.rows(), rule, s);
            let ct = closure_mask(g.rows(), rule, t);
            prop_assert_eq!(cs & !ct, 0, "monotone");
            prop_assert_eq!(s & !cs, 0, "extensive");
            prop_assert_eq!(closure_mask(g.rows(), rule, cs), cs, "idempotent");
        }
    }
}
