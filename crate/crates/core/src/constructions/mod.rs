//! Cospectral pairs with different zero forcing numbers.
//!
//! Every builder returns plain graphs plus the values it expects the exact
//! solver to find, each tagged with where the expectation comes from. The
//! builders never trust those values themselves; checking them is the job
//! of the claim suite.

mod families;
mod switching;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;

pub use families::{
    circulant_h, grid_shrikhande_pair, grid_shrikhande_report, join_family, path_join_pair, path_join_pair_default,
    regular_construction, rook_graph_diagonal, shrikhande_graph, tensor_family, tensor_family_pair, torus_gap_family,
    torus_zero_forcing, zf_h_check, GridShrikhandeReport, HCheck, TensorFamily, TorusGapFamily,
};
pub use switching::{
    gm_switch, planted_switching, OutsideCounts, SwitchingPartition, SwitchingValidation, SwitchingViolation,
};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Stated in the published result, or its formula evaluated here.
    Published,
    /// Not stated in print; obtained by exact computation.
    Derived,
    /// Follows from the definitions alone.
    Elementary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    AtMost,
}

impl Relation {
    pub fn holds(self, computed: usize, expected: usize) -> bool {
        match self {
            Relation::Equal => computed == expected,
            Relation::AtMost => computed <= expected,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    /// For example `"Z(G')"`.
    pub quantity: String,
    pub relation: Relation,
    pub value: usize,
    pub provenance: Provenance,
}

impl Expected {
    pub(crate) fn eq(quantity: impl Into<String>, value: usize, provenance: Provenance) -> Self {
        Expected {
            quantity: quantity.into(),
            relation: Relation::Equal,
            value,
            provenance,
        }
    }

    pub(crate) fn at_most(quantity: impl Into<String>, value: usize, provenance: Provenance) -> Self {
        Expected {
            quantity: quantity.into(),
            relation: Relation::AtMost,
            value,
            provenance,
        }
    }
}

/// Two graphs of the same order plus how they were made. Graphs serialize
/// as graph6 strings.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructionPair {
    pub construction: String,
    pub params: BTreeMap<String, usize>,
    pub g: Graph,
    pub g_prime: Graph,
    /// Partition taking `g` to `g_prime`, when the pair is a switching pair.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub switching: Option<SwitchingPartition>,
    pub expected: Vec<Expected>,
}

impl ConstructionPair {
    pub(crate) fn new(construction: &str, params: &[(&str, usize)], g: Graph, g_prime: Graph) -> Self {
        assert_eq!(g.order(), g_prime.order(), "pair members must have the same order");
        ConstructionPair {
            construction: construction.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            g,
            g_prime,
            switching: None,
            expected: Vec::new(),
        }
    }
}
