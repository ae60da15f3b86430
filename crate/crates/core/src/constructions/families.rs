use serde::Serialize;

use super::{gm_switch, ConstructionPair, Expected, Provenance, SwitchingPartition};
use crate::error::{Error, Result};
use crate::forcing::{closure, zero_forcing_number, ForcingCertificate, Rule};
use crate::graph::{build_named, Graph, GraphName, VertexSet, MAX_ORDER};
use crate::skew_rank::{max_nullity_witness_search, SkewWitness, WitnessSearch};
use crate::spectra::{cospectral, MatrixKind};

fn named(name: GraphName, params: &[usize]) -> Result<Graph> {
    build_named(name, params)
}

fn z(g: &Graph, rule: Rule) -> Result<usize> {
    Ok(zero_forcing_number(g, rule)?.value)
}

/// `G' = (G₁ ∨ Pₘ) ∪ G₂` and `G'' = (G₂ ∨ Pₘ) ∪ G₁`.
///
/// Both graphs list `G₁`, then `Pₘ`, then `G₂`. They are related by
/// switching on `X = V(G₁) ∪ V(G₂)`: `X` induces a `k`-regular graph and
/// each path vertex sees exactly half of it. Cospectrality of `G₁` and `G₂`
/// is not needed. The expected values are `n + Z(G₂) + 1` and
/// `n + Z(G₁) + 1`, so the pair separates `Z` whenever `Z(G₁) ≠ Z(G₂)`.
pub fn path_join_pair(g1: &Graph, g2: &Graph, m: usize) -> Result<ConstructionPair> {
    let mut problems = Vec::new();
    for (name, g) in [("G1", g1), ("G2", g2)] {
        if g.order() == 0 || !g.is_connected() {
            problems.push(format!("{name} is not connected"));
        }
        if g.regular_degree().is_none() {
            problems.push(format!("{name} is not regular"));
        }
    }
    if let (Some(a), Some(b)) = (g1.regular_degree(), g2.regular_degree()) {
        if a != b {
            problems.push(format!("degrees differ ({a} vs {b})"));
        }
    }
    let n = g1.order();
    if n != g2.order() {
        problems.push(format!("orders differ ({n} vs {})", g2.order()));
    }
    if m < n {
        problems.push(format!("path length m = {m} is below n = {n}"));
    }
    if !problems.is_empty() {
        return Err(Error::Preconditions(problems));
    }
    let total = 2 * n + m;
    if total > MAX_ORDER {
        return Err(Error::OrderCap(total));
    }
    let path = named(GraphName::Path, &[m])?;
    let g_first = g1.join(&path)?.disjoint_union(g2)?;
    let g_second = g1.disjoint_union(&path.join(g2)?)?;

    let x = VertexSet::from_indices(total, (0..n).chain(n + m..total))?;
    let partition = SwitchingPartition::new(&g_first, vec![x])?;
    let switched = gm_switch(&g_first, &partition)?;
    assert_eq!(switched, g_second, "switching on V(G1) ∪ V(G2) must swap the join");

    let (z1, z2) = (z(g1, Rule::Standard)?, z(g2, Rule::Standard)?);
    let mut pair = ConstructionPair::new("theorem51", &[("n", n), ("m", m)], g_first, g_second);
    pair.switching = Some(partition);
    pair.expected = vec![
        Expected::eq("Z(G1)", z1, Provenance::Derived),
        Expected::eq("Z(G2)", z2, Provenance::Derived),
        Expected::eq("Z(G')", n + z2 + 1, Provenance::Published),
        Expected::eq("Z(G'')", n + z1 + 1, Provenance::Published),
    ];
    Ok(pair)
}

/// The smallest known input: the two 4-regular graphs on ten vertices with
/// `Z` equal to 6 and 4, and a path on ten vertices.
pub fn path_join_pair_default() -> Result<ConstructionPair> {
    path_join_pair(
        &named(GraphName::Fig1Left, &[])?,
        &named(GraphName::Fig1Right, &[])?,
        10,
    )
}

/// Zero forcing number of the torus `C_s □ C_t` from the closed formula:
/// `2s - 1` when `s = t` is odd, `2s` otherwise (`3 <= s <= t`).
pub fn torus_zero_forcing(s: usize, t: usize) -> Result<usize> {
    let (s, t) = (s.min(t), s.max(t));
    if s < 3 {
        return Err(Error::bad_params("torus", "both cycles need at least 3 vertices"));
    }
    Ok(if s == t && s % 2 == 1 { 2 * s - 1 } else { 2 * s })
}

/// Parameters of the torus pair `C₄ □ C_{c²}` and `C_{2c} □ C_{2c}`.
#[derive(Clone, Debug, Serialize)]
pub struct TorusGapFamily {
    pub c: usize,
    /// Common order `4c²`; both graphs are 4-regular.
    pub order: usize,
    pub g1_cycles: (usize, usize),
    pub g2_cycles: (usize, usize),
    pub z_g1: usize,
    pub z_g2: usize,
    /// `Z(G'') - Z(G')` after the path-join assembly: `4c - 8`.
    pub gap: usize,
    /// The factors, when they fit the order cap.
    pub g1: Option<Graph>,
    pub g2: Option<Graph>,
    /// Why the assembled pair was not built.
    pub assembly_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assembled: Option<ConstructionPair>,
}

/// Reports the torus family for `c >= 3`. The assembled pair has at least
/// `12c²` vertices, so it never fits; the report says so instead of failing.
pub fn torus_gap_family(c: usize) -> Result<TorusGapFamily> {
    if c < 3 {
        return Err(Error::bad_params("corollary52", "c must be at least 3"));
    }
    let order = 4 * c * c;
    let (g1_cycles, g2_cycles) = ((4, c * c), (2 * c, 2 * c));
    let z_g1 = torus_zero_forcing(g1_cycles.0, g1_cycles.1)?;
    let z_g2 = torus_zero_forcing(g2_cycles.0, g2_cycles.1)?;
    let torus = |(s, t): (usize, usize)| -> Result<Graph> {
        named(GraphName::Cycle, &[s])?.cartesian(&named(GraphName::Cycle, &[t])?)
    };
    let (g1, g2) = if order <= MAX_ORDER {
        (Some(torus(g1_cycles)?), Some(torus(g2_cycles)?))
    } else {
        (None, None)
    };
    let (assembled, assembly_error) = match (&g1, &g2) {
        (Some(a), Some(b)) => match path_join_pair(a, b, order) {
            Ok(p) => (Some(p), None),
            Err(e) => (None, Some(e.to_string())),
        },
        _ => (None, Some(Error::OrderCap(3 * order).to_string())),
    };
    Ok(TorusGapFamily {
        c,
        order,
        g1_cycles,
        g2_cycles,
        z_g1,
        z_g2,
        gap: z_g2 - z_g1,
        g1,
        g2,
        assembly_error,
        assembled,
    })
}

/// Circulant on `3k - 1` vertices, `i ~ k+i, …, 2k+i-1 (mod 3k-1)`.
pub fn circulant_h(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::bad_params("circulant_h", "k must be at least 2"));
    }
    let n = 3 * k - 1;
    let jumps: Vec<usize> = std::iter::once(n).chain(k..2 * k).collect();
    named(GraphName::Circulant, &jumps)
}

#[derive(Clone, Debug, Serialize)]
pub struct HCheck {
    pub k: usize,
    pub exact: usize,
    pub expected: usize,
    /// `{0, 2, 3, …, 2k-2}`.
    pub witness: VertexSet,
    pub witness_closes: bool,
    pub certificate: ForcingCertificate,
}

impl HCheck {
    pub fn holds(&self) -> bool {
        self.exact == self.expected && self.witness_closes
    }
}

/// Exact `Z(H)` against `2k - 2`, and the explicit witness replayed.
pub fn zf_h_check(k: usize) -> Result<HCheck> {
    let h = circulant_h(k)?;
    let witness = VertexSet::from_indices(h.order(), std::iter::once(0).chain(2..=2 * k - 2))?;
    let run = closure(&h, Rule::Standard, witness)?;
    Ok(HCheck {
        k,
        exact: z(&h, Rule::Standard)?,
        expected: 2 * k - 2,
        witness,
        witness_closes: run.blue == h.vertices(),
        certificate: run.certificate,
    })
}

/// The `2k`-regular switching pair on `6k` vertices.
///
/// Vertex order: `H` as `0..3k-1`, then `a₀…a_k` (a clique), `b₀…b_k` and
/// `c₁…c_{k-1}` (cocliques). Cross edges:
///
/// * `aᵢ ~ bⱼ` for `i ≠ j`;
/// * every `cᵢ` sees `0` and `k, …, 3k-2` of `H`;
/// * `bᵢ ~ 1, …, k-1` for `i < k`, and `b_k ~ 2k, …, 3k-2`;
/// * `bᵢ ~ k+i-1` for `1 <= i <= k`, and `b₀ ~ 0`.
///
/// `G'` switches `G` on `X = V(A) ∪ V(H)`. Regularity and the switching
/// conditions are checked and a failure is an error, since either would
/// mean the rules above were misread.
pub fn regular_construction(k: usize) -> Result<ConstructionPair> {
    if k < 2 {
        return Err(Error::bad_params("regular6k", "k must be at least 2"));
    }
    let n = 6 * k;
    if n > MAX_ORDER {
        return Err(Error::OrderCap(n));
    }
    let hn = 3 * k - 1;
    let a = |i: usize| hn + i;
    let b = |i: usize| hn + k + 1 + i;
    let c = |i: usize| hn + 2 * (k + 1) + i - 1;

    let h = circulant_h(k)?;
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    for i in 0..=k {
        edges.extend((i + 1..=k).map(|j| (a(i), a(j))));
        edges.extend((0..=k).filter(|&j| j != i).map(|j| (a(i), b(j))));
    }
    for i in 1..k {
        edges.push((c(i), 0));
        edges.extend((k..=3 * k - 2).map(|v| (c(i), v)));
    }
    for i in 0..k {
        edges.extend((1..k).map(|v| (b(i), v)));
    }
    edges.extend((2 * k..=3 * k - 2).map(|v| (b(k), v)));
    edges.extend((1..=k).map(|i| (b(i), k + i - 1)));
    edges.push((b(0), 0));

    let labels = (0..hn)
        .map(|i| format!("h{i}"))
        .chain((0..=k).map(|i| format!("a{i}")))
        .chain((0..=k).map(|i| format!("b{i}")))
        .chain((1..k).map(|i| format!("c{i}")))
        .collect();
    let g = Graph::from_edges(n, edges)?.with_labels(labels);
    if g.regular_degree() != Some(2 * k) {
        let bad = (0..n).find(|&v| g.degree(v) != 2 * k).unwrap_or(0);
        return Err(Error::precondition(format!(
            "construction is not {}-regular: vertex {bad} has degree {}",
            2 * k,
            g.degree(bad)
        )));
    }
    let x = VertexSet::from_indices(n, (0..hn).chain((0..=k).map(a)))?;
    let partition = SwitchingPartition::new(&g, vec![x])?;
    if let Some(v) = partition.validation.violations.first() {
        return Err(Error::InvalidSwitching(v.clone()));
    }
    let g_prime = gm_switch(&g, &partition)?;
    let mut pair = ConstructionPair::new("regular6k", &[("k", k)], g, g_prime);
    pair.switching = Some(partition);
    pair.expected = vec![
        Expected::eq("Z(G)", 4 * k - 2, Provenance::Published),
        Expected::at_most("Z(G')", 4 * k - 3, Provenance::Published),
        Expected::eq("Z(H)", 2 * k - 2, Provenance::Published),
    ];
    Ok(pair)
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorFamily {
    pub r: usize,
    pub graph: Graph,
    /// `g × K_r`.
    pub product: Graph,
    pub z_skew: usize,
    /// Certifies `M₋(g) = Z₋(g)`.
    pub witness: SkewWitness,
    pub expected: Vec<Expected>,
}

/// `g × K_r` with expected `Z = Z₋ = (r-2)n + 2Z₋(g)`.
///
/// The formula needs `M₋(g) = Z₋(g)`; a skew witness reaching `Z₋(g)` is
/// searched for and its absence is an error.
pub fn tensor_family(g: &Graph, r: usize) -> Result<TensorFamily> {
    if r < 3 {
        return Err(Error::bad_params("tensor-family", "r must be at least 3"));
    }
    let n = g.order();
    if n * r > MAX_ORDER {
        return Err(Error::OrderCap(n * r));
    }
    let z_skew = z(g, Rule::Skew)?;
    let witness = max_nullity_witness_search(g, &WitnessSearch::default())?;
    if !witness.certified {
        return Err(Error::precondition(format!(
            "could not certify M-(g) = Z-(g): best nullity {} against Z- = {z_skew}",
            witness.achieved_nullity
        )));
    }
    let product = g.tensor(&named(GraphName::Complete, &[r])?)?;
    let value = (r - 2) * n + 2 * z_skew;
    Ok(TensorFamily {
        r,
        graph: g.clone(),
        product,
        z_skew,
        witness,
        expected: vec![
            Expected::eq("Z(G x K_r)", value, Provenance::Published),
            Expected::eq("Z-(G x K_r)", value, Provenance::Published),
        ],
    })
}

/// Both tensor products of a pair, e.g. the 7-vertex pair `C₆ ∪ K₁` and the
/// spider with `Z₋` equal to 3 and 1.
pub fn tensor_family_pair(g1: &Graph, g2: &Graph, r: usize) -> Result<ConstructionPair> {
    if g1.order() != g2.order() {
        return Err(Error::precondition("the pair must have equal orders"));
    }
    let (t1, t2) = (tensor_family(g1, r)?, tensor_family(g2, r)?);
    let tag = |e: &Expected, side: &str| Expected {
        quantity: e.quantity.replace('G', side),
        ..e.clone()
    };
    let mut expected: Vec<Expected> = t1.expected.iter().map(|e| tag(e, "G")).collect();
    expected.extend(t2.expected.iter().map(|e| tag(e, "G'")));
    let mut pair = ConstructionPair::new("tensor-family", &[("n", g1.order()), ("r", r)], t1.product, t2.product);
    pair.expected = expected;
    Ok(pair)
}

/// `(g1 ∨ K_r, g2 ∨ K_r)`, Laplacian-cospectral whenever the inputs are,
/// with expected `Z(gᵢ ∨ K_r) = r + Z(gᵢ)`.
pub fn join_family(g1: &Graph, g2: &Graph, r: usize) -> Result<ConstructionPair> {
    let mut problems = Vec::new();
    for (name, g) in [("G1", g1), ("G2", g2)] {
        if g.order() == 0 || !g.is_connected() {
            problems.push(format!("{name} is not connected"));
        }
    }
    if r == 0 {
        problems.push("r must be positive".to_string());
    }
    if g1.order() != g2.order() || !cospectral(g1, g2, MatrixKind::Laplacian) {
        problems.push("G1 and G2 are not Laplacian-cospectral".to_string());
    }
    if !problems.is_empty() {
        return Err(Error::Preconditions(problems));
    }
    let (z1, z2) = (z(g1, Rule::Standard)?, z(g2, Rule::Standard)?);
    if z1 == z2 && z(g1, Rule::Skew)? == z(g2, Rule::Skew)? {
        return Err(Error::precondition("G1 and G2 have the same Z and Z-"));
    }
    let kr = named(GraphName::Complete, &[r])?;
    let mut pair = ConstructionPair::new(
        "join-family",
        &[("n", g1.order()), ("r", r)],
        g1.join(&kr)?,
        g2.join(&kr)?,
    );
    pair.expected = vec![
        Expected::eq("Z(G1 v K_r)", r + z1, Provenance::Published),
        Expected::eq("Z(G2 v K_r)", r + z2, Provenance::Published),
    ];
    Ok(pair)
}

/// The diagonal `{(i, i)}` of the 4×4 rook graph: a 4-coclique that every
/// other vertex meets exactly twice.
pub fn rook_graph_diagonal() -> VertexSet {
    VertexSet::from_bits((0..4).fold(0, |acc, i| acc | 1 << (5 * i)))
}

/// The Shrikhande graph, as the switch of `K₄ □ K₄` on its diagonal.
pub fn shrikhande_graph() -> Result<Graph> {
    Ok(grid_shrikhande_pair()?.g_prime)
}

pub fn grid_shrikhande_pair() -> Result<ConstructionPair> {
    let grid = named(GraphName::GridLattice, &[4])?;
    let partition = SwitchingPartition::new(&grid, vec![rook_graph_diagonal()])?;
    let shrikhande = gm_switch(&grid, &partition)?;
    let mut pair = ConstructionPair::new("grid-shrikhande", &[("r", 4)], grid, shrikhande);
    pair.switching = Some(partition);
    pair.expected = vec![
        Expected::eq("Z+(G)", 10, Provenance::Published),
        Expected::eq("Z+(G')", 9, Provenance::Published),
    ];
    Ok(pair)
}

#[derive(Clone, Debug, Serialize)]
pub struct GridShrikhandeReport {
    pub r: usize,
    pub z_plus_grid: usize,
    pub z_plus_shrikhande: usize,
    /// `min{r·Z₊(Shrikhande), 16(r-1)}`, an upper bound for the
    /// Shrikhande side of the product with `K_r`.
    pub shrikhande_upper: usize,
    /// `Z₊(grid)·(r-1)`, a lower bound for the grid side.
    pub grid_lower: usize,
    /// `shrikhande_upper < grid_lower`; from `r = 11` on.
    pub separated: bool,
}

/// Exact `Z₊` of the 16-vertex pair, then bound arithmetic for the products
/// with `K_r` (which are never solved).
pub fn grid_shrikhande_report(r: usize) -> Result<GridShrikhandeReport> {
    if r < 2 {
        return Err(Error::bad_params("grid-shrikhande", "r must be at least 2"));
    }
    let pair = grid_shrikhande_pair()?;
    let z_plus_grid = z(&pair.g, Rule::Psd)?;
    let z_plus_shrikhande = z(&pair.g_prime, Rule::Psd)?;
    let shrikhande_upper = (r * z_plus_shrikhande).min(16 * (r - 1));
    let grid_lower = z_plus_grid * (r - 1);
    Ok(GridShrikhandeReport {
        r,
        z_plus_grid,
        z_plus_shrikhande,
        shrikhande_upper,
        grid_lower,
        separated: shrikhande_upper < grid_lower,
    })
}
