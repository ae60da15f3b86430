//! Godsil–McKay switching.
//!
//! A partition `X₁ … X_ℓ, Y` of the vertices is a switching partition when
//! each vertex of a part `Xᵢ` has the same number of neighbours in every
//! `Xⱼ`, and each vertex of `Y` sees none, half or all of every `Xᵢ`.
//! Switching complements the adjacency between each `y ∈ Y` and every part
//! it sees exactly half of; the result is cospectral with the input (and so
//! are the complements).

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SwitchingViolation {
    EmptyPart {
        part: usize,
    },
    Overlap {
        vertex: usize,
    },
    /// `vertex` in part `part` has `count` neighbours in part `other`,
    /// while the first vertex of `part` has `expected`.
    IrregularParts {
        part: usize,
        other: usize,
        vertex: usize,
        count: usize,
        expected: usize,
    },
    /// Outside `vertex` sees `count` of the `size` vertices of `part`.
    OutsideCount {
        vertex: usize,
        part: usize,
        count: usize,
        size: usize,
    },
}

impl fmt::Display for SwitchingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SwitchingViolation::EmptyPart { part } => write!(f, "part {part} is empty"),
            SwitchingViolation::Overlap { vertex } => write!(f, "vertex {vertex} lies in two parts"),
            SwitchingViolation::IrregularParts {
                part,
                other,
                vertex,
                count,
                expected,
            } => write!(
                f,
                "vertex {vertex} of part {part} has {count} neighbours in part {other}, expected {expected}"
            ),
            SwitchingViolation::OutsideCount {
                vertex,
                part,
                count,
                size,
            } => write!(
                f,
                "outside vertex {vertex} has {count} neighbours in part {part} of size {size}; \
                 needs 0, {} or {size}",
                if size % 2 == 0 {
                    (size / 2).to_string()
                } else {
                    "half".into()
                }
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutsideCounts {
    pub vertex: usize,
    /// Neighbours in each part.
    pub counts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwitchingValidation {
    /// `part_degrees[i][j]`: neighbours in part `j` of any vertex of part
    /// `i`, or `None` when that count varies over part `i`.
    pub part_degrees: Vec<Vec<Option<usize>>>,
    pub outside_counts: Vec<OutsideCounts>,
    pub violations: Vec<SwitchingViolation>,
}

impl SwitchingValidation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwitchingPartition {
    pub parts: Vec<VertexSet>,
    pub rest: VertexSet,
    /// Checked against the graph the partition was built for.
    pub validation: SwitchingValidation,
}

impl SwitchingPartition {
    /// Builds the partition `parts ∪ {rest}` of `g` and validates it.
    ///
    /// Fails only when `parts` is not a family of disjoint non-empty vertex
    /// sets of `g`; switching conditions are recorded in `validation`.
    pub fn new(g: &Graph, parts: Vec<VertexSet>) -> Result<Self> {
        let all = g.vertices();
        let mut seen = VertexSet::EMPTY;
        for (i, &p) in parts.iter().enumerate() {
            if let Some(v) = p.difference(all).first() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: g.order(),
                });
            }
            if p.is_empty() {
                return Err(Error::InvalidSwitching(SwitchingViolation::EmptyPart { part: i }));
            }
            if let Some(v) = p.intersection(seen).first() {
                return Err(Error::InvalidSwitching(SwitchingViolation::Overlap { vertex: v }));
            }
            seen = seen.union(p);
        }
        let validation = validate(g, &parts);
        Ok(SwitchingPartition {
            rest: all.difference(seen),
            parts,
            validation,
        })
    }

    pub fn is_valid(&self) -> bool {
        self.validation.is_valid()
    }
}

fn validate(g: &Graph, parts: &[VertexSet]) -> SwitchingValidation {
    let covered = parts.iter().fold(VertexSet::EMPTY, |a, &p| a.union(p));
    let mut violations = Vec::new();
    let mut part_degrees = Vec::with_capacity(parts.len());
    for (i, &pi) in parts.iter().enumerate() {
        let mut row = Vec::with_capacity(parts.len());
        for (j, &pj) in parts.iter().enumerate() {
            let mut vs = pi.iter();
            let first = vs.next().expect("parts are non-empty");
            let expected = g.neighbors(first).intersection(pj).len();
            let mut constant = true;
            for v in vs {
                let count = g.neighbors(v).intersection(pj).len();
                if count != expected {
                    constant = false;
                    violations.push(SwitchingViolation::IrregularParts {
                        part: i,
                        other: j,
                        vertex: v,
                        count,
                        expected,
                    });
                    break;
                }
            }
            row.push(constant.then_some(expected));
        }
        part_degrees.push(row);
    }
    let mut outside_counts = Vec::new();
    for v in g.vertices().difference(covered) {
        let counts: Vec<usize> = parts.iter().map(|&p| g.neighbors(v).intersection(p).len()).collect();
        for (part, (&count, &p)) in counts.iter().zip(parts).enumerate() {
            let size = p.len();
            if !(count == 0 || count == size || 2 * count == size) {
                violations.push(SwitchingViolation::OutsideCount {
                    vertex: v,
                    part,
                    count,
                    size,
                });
            }
        }
        outside_counts.push(OutsideCounts { vertex: v, counts });
    }
    SwitchingValidation {
        part_degrees,
        outside_counts,
        violations,
    }
}

/// Switches `g` with respect to `p`, which is revalidated against `g`.
///
/// Switching twice on the same partition gives back `g`.
pub fn gm_switch(g: &Graph, p: &SwitchingPartition) -> Result<Graph> {
    let p = SwitchingPartition::new(g, p.parts.clone())?;
    if let Some(v) = p.validation.violations.first() {
        return Err(Error::InvalidSwitching(v.clone()));
    }
    let mut rows = g.rows().to_vec();
    for y in p.rest {
        for &part in &p.parts {
            if 2 * g.neighbors(y).intersection(part).len() == part.len() {
                rows[y] ^= part.bits();
                for x in part {
                    rows[x] ^= 1 << y;
                }
            }
        }
    }
    let out = Graph::from_rows(rows)?;
    Ok(match g.labels() {
        Some(l) => out.with_labels(l.to_vec()),
        None => out,
    })
}

/// A random graph on `n >= 3` vertices with a planted switching set.
///
/// The set `X` has even size, induces either a coclique or a clique, and
/// every other vertex sees none, a random half, or all of it. Edges outside
/// `X` are drawn with probability one half.
pub fn planted_switching<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<(Graph, SwitchingPartition)> {
    if !(3..=crate::graph::MAX_ORDER).contains(&n) {
        return Err(Error::bad_params(
            "planted_switching",
            format!("order {n} outside 3..=64"),
        ));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let half = rng.gen_range(1..=(n - 1) / 2);
    let x: Vec<usize> = order[..2 * half].to_vec();
    let outside: Vec<usize> = order[2 * half..].to_vec();
    let clique = rng.gen_bool(0.5);

    let mut edges = Vec::new();
    if clique {
        for (i, &u) in x.iter().enumerate() {
            edges.extend(x[i + 1..].iter().map(|&v| (u, v)));
        }
    }
    for &y in &outside {
        match rng.gen_range(0..3) {
            0 => {}
            1 => edges.extend(x.iter().map(|&v| (y, v))),
            _ => edges.extend(x.choose_multiple(rng, half).map(|&v| (y, v))),
        }
    }
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i + 1..] {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges)?;
    let part = VertexSet::from_indices(n, x)?;
    let p = SwitchingPartition::new(&g, vec![part])?;
    debug_assert!(p.is_valid());
    Ok((g, p))
}
