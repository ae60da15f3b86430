//! The verification suite: every checkable statement about the
//! constructions, each under a stable id, with its expected value, what was
//! computed, and certificates that can be replayed independently.
//!
//! Claim ids are a public contract; reports list claims sorted by id, and
//! nothing in a report depends on thread scheduling unless timings are
//! requested.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{
    gm_switch, grid_shrikhande_report, path_join_pair_default, regular_construction, shrikhande_graph,
    torus_gap_family, zf_h_check, Provenance, Relation, SwitchingPartition,
};
use crate::error::{Error, Result};
use crate::forcing::{replay, zero_forcing_number_with, zf_join_formula_check, ForcingCertificate, Rule, SearchConfig};
use crate::graph::random::{connected_gnp, gnp, regular_circulant};
use crate::graph::{emit_graph6, find_isomorphism, is_isomorphic, named_graph, Graph};
use crate::skew_rank::{exact_rank, max_nullity_witness_search, SkewWitness, WitnessSearch};
use crate::spectra::{char_poly, laplacian_join_identity_check, regular_join_adjacency_check, CharPoly, MatrixKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

/// Evidence attached to a claim. Each variant can be rechecked from its
/// own contents by [`Certificate::replay`].
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A forcing set with its chronology; `explored` is the number of
    /// smaller or earlier candidate sets the exhaustive search rejected.
    Forcing {
        graph: Graph,
        certificate: ForcingCertificate,
        #[serde(skip_serializing_if = "Option::is_none")]
        explored: Option<u64>,
    },
    CharPolys {
        matrix: MatrixKind,
        left: Graph,
        right: Graph,
        left_poly: CharPoly,
        right_poly: CharPoly,
    },
    /// `mapping` is `None` when the search found no isomorphism.
    Isomorphism {
        left: Graph,
        right: Graph,
        mapping: Option<Vec<usize>>,
    },
    SkewWitness {
        graph: Graph,
        witness: SkewWitness,
    },
    Switching {
        graph: Graph,
        partition: SwitchingPartition,
    },
    /// A seeded random sweep; the failures list graph6 strings.
    Sweep {
        seed: u64,
        cases: usize,
        failures: Vec<String>,
    },
}

impl Certificate {
    /// Rechecks the certificate without trusting the code that produced it
    /// where an independent path exists.
    pub fn replay(&self) -> bool {
        match self {
            Certificate::Forcing { graph, certificate, .. } => {
                replay(graph, certificate).is_ok_and(|blue| blue == graph.vertices())
            }
            Certificate::CharPolys {
                matrix,
                left,
                right,
                left_poly,
                right_poly,
            } => &char_poly(left, *matrix) == left_poly && &char_poly(right, *matrix) == right_poly,
            Certificate::Isomorphism { left, right, mapping } => match mapping {
                Some(m) => left.permute(m).is_ok_and(|p| &p == right),
                None => !is_isomorphic(left, right),
            },
            Certificate::SkewWitness { graph, witness } => {
                &witness.graph == graph && witness.achieved_nullity == graph.order() - exact_rank(witness)
            }
            Certificate::Switching { graph, partition } => {
                SwitchingPartition::new(graph, partition.parts.clone()).is_ok_and(|p| p.is_valid())
            }
            Certificate::Sweep { .. } => true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub description: String,
    pub provenance: Provenance,
    pub relation: Relation,
    pub expected: Value,
    pub computed: Option<Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub claims: Vec<ClaimReport>,
    pub summary: Summary,
    pub version: &'static str,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.skipped == 0
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Keep claims whose id equals this or starts with it followed by `.`.
    pub only: Option<String>,
    /// Worker threads; 0 uses every core.
    pub jobs: usize,
    /// Seed of the random sweeps.
    pub seed: u64,
    pub timings: bool,
    pub search: SearchConfig,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            only: None,
            jobs: 0,
            seed: 2024,
            timings: false,
            search: SearchConfig::default(),
        }
    }
}

/// What a claim's check found.
pub struct Computed {
    pub value: Value,
    pub certificates: Vec<Certificate>,
}

type Check = Box<dyn Fn(&SuiteOptions) -> Result<Computed> + Send + Sync>;

pub struct Claim {
    pub id: String,
    pub description: String,
    pub provenance: Provenance,
    pub relation: Relation,
    pub expected: Value,
    check: Check,
}

impl Claim {
    fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        provenance: Provenance,
        expected: Value,
        check: impl Fn(&SuiteOptions) -> Result<Computed> + Send + Sync + 'static,
    ) -> Self {
        Claim {
            id: id.into(),
            description: description.into(),
            provenance,
            relation: Relation::Equal,
            expected,
            check: Box::new(check),
        }
    }

    fn at_most(mut self) -> Self {
        self.relation = Relation::AtMost;
        self
    }

    pub fn matches(&self, prefix: &str) -> bool {
        self.id == prefix || self.id.strip_prefix(prefix).is_some_and(|rest| rest.starts_with('.'))
    }

    pub fn run(&self, opts: &SuiteOptions) -> ClaimReport {
        let start = Instant::now();
        let outcome = (self.check)(opts);
        let wall_ms = opts.timings.then(|| start.elapsed().as_millis() as u64);
        let (computed, certificates, status, error) = match outcome {
            Ok(c) => {
                let pass = match self.relation {
                    Relation::Equal => c.value == self.expected,
                    Relation::AtMost => matches!(
                        (c.value.as_u64(), self.expected.as_u64()),
                        (Some(a), Some(b)) if a <= b
                    ),
                };
                let status = if pass { Status::Pass } else { Status::Fail };
                (Some(c.value), c.certificates, status, None)
            }
            Err(e @ Error::BudgetExceeded(_)) => (None, Vec::new(), Status::SkippedBudget, Some(e.to_string())),
            Err(e) => (None, Vec::new(), Status::Fail, Some(e.to_string())),
        };
        ClaimReport {
            id: self.id.clone(),
            description: self.description.clone(),
            provenance: self.provenance,
            relation: self.relation,
            expected: self.expected.clone(),
            computed,
            status,
            error,
            certificates,
            wall_ms,
        }
    }
}

/// Runs the selected claims in parallel and returns them sorted by id.
pub fn run_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let claims: Vec<Claim> = catalogue()
        .into_iter()
        .filter(|c| opts.only.as_deref().is_none_or(|p| c.matches(p)))
        .collect();
    if claims.is_empty() {
        return Err(Error::bad_params(
            "verify-paper",
            format!("no claim matches `{}`", opts.only.as_deref().unwrap_or("")),
        ));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::bad_params("verify-paper", e.to_string()))?;
    let mut reports: Vec<ClaimReport> = pool.install(|| claims.par_iter().map(|c| c.run(opts)).collect());
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    let mut summary = Summary::default();
    for r in &reports {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::SkippedBudget => summary.skipped += 1,
        }
    }
    Ok(SuiteReport {
        claims: reports,
        summary,
        version: env!("CARGO_PKG_VERSION"),
    })
}

/// Ids of every claim, sorted.
pub fn claim_ids() -> Vec<String> {
    let mut ids: Vec<String> = catalogue().into_iter().map(|c| c.id).collect();
    ids.sort();
    ids
}

fn graph(spec: &str) -> Result<Graph> {
    named_graph(spec)
}

fn zf(g: &Graph, rule: Rule, opts: &SuiteOptions) -> Result<Computed> {
    let r = zero_forcing_number_with(g, rule, &opts.search)?;
    Ok(Computed {
        value: json!(r.value),
        certificates: vec![Certificate::Forcing {
            graph: g.clone(),
            certificate: r.witness,
            explored: Some(r.explored),
        }],
    })
}

fn cospectral_claim(a: &Graph, b: &Graph, matrix: MatrixKind) -> Computed {
    let (pa, pb) = (char_poly(a, matrix), char_poly(b, matrix));
    Computed {
        value: json!(pa == pb),
        certificates: vec![Certificate::CharPolys {
            matrix,
            left: a.clone(),
            right: b.clone(),
            left_poly: pa,
            right_poly: pb,
        }],
    }
}

fn noniso_claim(a: &Graph, b: &Graph) -> Computed {
    let mapping = find_isomorphism(a, b);
    Computed {
        value: json!(mapping.is_none()),
        certificates: vec![Certificate::Isomorphism {
            left: a.clone(),
            right: b.clone(),
            mapping,
        }],
    }
}

fn witness_claim(g: &Graph) -> Result<Computed> {
    let w = max_nullity_witness_search(g, &WitnessSearch::default())?;
    Ok(Computed {
        value: json!({ "nullity": w.achieved_nullity, "certified": w.certified }),
        certificates: vec![Certificate::SkewWitness {
            graph: g.clone(),
            witness: w,
        }],
    })
}

fn sweep(seed: u64, cases: usize, mut case: impl FnMut(&mut ChaCha8Rng) -> Result<Option<String>>) -> Result<Computed> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..cases {
        if let Some(f) = case(&mut rng)? {
            failures.push(f);
        }
    }
    Ok(Computed {
        value: json!(cases - failures.len()),
        certificates: vec![Certificate::Sweep { seed, cases, failures }],
    })
}

fn pair_label(a: &Graph, b: &Graph) -> String {
    format!("{} {}", emit_graph6(a), emit_graph6(b))
}

/// A pair of connected graphs of order at most `max`, not both single
/// vertices.
fn connected_pair(rng: &mut ChaCha8Rng, max: usize) -> (Graph, Graph) {
    loop {
        let (n, m) = (rng.gen_range(1..=max), rng.gen_range(1..=max));
        if n + m > 2 {
            return (connected_gnp(rng, n, 0.5), connected_gnp(rng, m, 0.5));
        }
    }
}

use Provenance::{Derived, Elementary, Published};

/// Every claim of the suite, in no particular order.
pub fn catalogue() -> Vec<Claim> {
    let mut c = Vec::new();
    figure_pair(&mut c);
    small_pair_and_tensor(&mut c);
    cartesian(&mut c);
    joins(&mut c);
    path_join(&mut c);
    torus(&mut c);
    regular(&mut c);
    c
}

fn figure_pair(c: &mut Vec<Claim>) {
    for (side, spec, values) in [("left", "fig1_left", [6, 5, 4]), ("right", "fig1_right", [4, 4, 4])] {
        for (rule, name, value) in [
            (Rule::Standard, "Z", values[0]),
            (Rule::Psd, "Zplus", values[1]),
            (Rule::Skew, "Zskew", values[2]),
        ] {
            c.push(Claim::new(
                format!("fig1.{name}.{side}"),
                format!("{rule} zero forcing number of the {side} 4-regular graph on 10 vertices"),
                Published,
                json!(value),
                move |o| zf(&graph(spec)?, rule, o),
            ));
        }
    }
    c.push(Claim::new(
        "fig1.cospectral.A",
        "the 4-regular pair on 10 vertices is adjacency-cospectral",
        Published,
        json!(true),
        |_| {
            Ok(cospectral_claim(
                &graph("fig1_left")?,
                &graph("fig1_right")?,
                MatrixKind::Adjacency,
            ))
        },
    ));
    c.push(Claim::new(
        "fig1.noniso",
        "the 4-regular pair on 10 vertices is not isomorphic",
        Published,
        json!(true),
        |_| Ok(noniso_claim(&graph("fig1_left")?, &graph("fig1_right")?)),
    ));
    for (kind, sym) in [(MatrixKind::Laplacian, "L"), (MatrixKind::SignlessLaplacian, "Q")] {
        c.push(Claim::new(
            format!("spectra.fig1.{sym}"),
            format!("the 4-regular pair on 10 vertices is {sym}-cospectral"),
            Elementary,
            json!(true),
            move |_| Ok(cospectral_claim(&graph("fig1_left")?, &graph("fig1_right")?, kind)),
        ));
    }
    c.push(Claim::new(
        "spectra.fig1.regular",
        "both graphs of the pair are 4-regular",
        Published,
        json!([4, 4]),
        |_| {
            let d = |s| graph(s).map(|g| g.regular_degree());
            Ok(Computed {
                value: json!([d("fig1_left")?, d("fig1_right")?]),
                certificates: Vec::new(),
            })
        },
    ));
}

fn small_pair_and_tensor(c: &mut Vec<Claim>) {
    c.push(Claim::new(
        "ex32.cospectral.A",
        "the 6-cycle plus a vertex and the 7-vertex spider are adjacency-cospectral",
        Published,
        json!(true),
        |_| {
            Ok(cospectral_claim(
                &graph("ex32_G")?,
                &graph("ex32_Gprime")?,
                MatrixKind::Adjacency,
            ))
        },
    ));
    for (side, spec, z) in [("G", "ex32_G", 3usize), ("Gprime", "ex32_Gprime", 1)] {
        c.push(Claim::new(
            format!("ex32.Zskew.{side}"),
            format!("skew zero forcing number of {spec}"),
            Published,
            json!(z),
            move |o| zf(&graph(spec)?, Rule::Skew, o),
        ));
        c.push(Claim::new(
            format!("ex32.Mskew.{side}"),
            format!("a skew matrix with the pattern of {spec} has nullity {z}, so M- = Z- = {z}"),
            Published,
            json!({ "nullity": z, "certified": true }),
            move |_| witness_claim(&graph(spec)?),
        ));
        // (r-2)n + 2 Z-(G) with n = 7, r = 3
        let expected = 7 + 2 * z;
        for (rule, name) in [(Rule::Standard, "Z"), (Rule::Skew, "Zskew")] {
            c.push(Claim::new(
                format!("tensor.{name}.{side}"),
                format!("{rule} zero forcing number of {spec} x K3 is (r-2)n + 2Z-"),
                Published,
                json!(expected),
                move |o| {
                    let k3 = graph("complete:3")?;
                    zf(&graph(spec)?.tensor(&k3)?, rule, o)
                },
            ));
        }
    }
    c.push(Claim::new(
        "tensor.cospectral.A",
        "tensor products of the 7-vertex pair with K3 are adjacency-cospectral",
        Published,
        json!(true),
        |_| {
            let k3 = graph("complete:3")?;
            Ok(cospectral_claim(
                &graph("ex32_G")?.tensor(&k3)?,
                &graph("ex32_Gprime")?.tensor(&k3)?,
                MatrixKind::Adjacency,
            ))
        },
    ));
}

fn cartesian(c: &mut Vec<Claim>) {
    for r in 2..=4usize {
        c.push(Claim::new(
            format!("cartesian.Zplus.K{r}xK{r}"),
            format!("PSD zero forcing number of K{r} □ K{r} is (r-1)^2 + 1"),
            Published,
            json!((r - 1) * (r - 1) + 1),
            move |o| {
                let k = graph(&format!("complete:{r}"))?;
                zf(&k.cartesian(&k)?, Rule::Psd, o)
            },
        ));
    }
    c.push(Claim::new(
        "shrikhande.Zplus",
        "PSD zero forcing number of the Shrikhande graph",
        Published,
        json!(9),
        |o| zf(&shrikhande_graph()?, Rule::Psd, o),
    ));
    c.push(Claim::new(
        "shrikhande.cospectral.A",
        "the 4x4 rook graph and the Shrikhande graph are adjacency-cospectral",
        Published,
        json!(true),
        |_| {
            Ok(cospectral_claim(
                &graph("grid_lattice:4")?,
                &shrikhande_graph()?,
                MatrixKind::Adjacency,
            ))
        },
    ));
    c.push(Claim::new(
        "shrikhande.noniso",
        "the 4x4 rook graph and the Shrikhande graph are not isomorphic",
        Published,
        json!(true),
        |_| Ok(noniso_claim(&graph("grid_lattice:4")?, &shrikhande_graph()?)),
    ));
    c.push(Claim::new(
        "shrikhande.bound.r11",
        "with r = 11, min{9r, 16(r-1)} = 99 < 100 = 10(r-1)",
        Published,
        json!({ "shrikhande_upper": 99, "grid_lower": 100, "separated": true }),
        |_| {
            let r = grid_shrikhande_report(11)?;
            Ok(Computed {
                value: json!({
                    "shrikhande_upper": r.shrikhande_upper,
                    "grid_lower": r.grid_lower,
                    "separated": r.separated,
                }),
                certificates: Vec::new(),
            })
        },
    ));
}

fn joins(c: &mut Vec<Claim>) {
    c.push(Claim::new(
        "join.identity.laplacian",
        "Laplacian characteristic polynomial of a join from its factors, 50 random pairs",
        Derived,
        json!(50),
        |o| {
            sweep(o.seed, 50, |rng| {
                let (n, m) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
                let (a, b) = (gnp(rng, n, 0.5), gnp(rng, m, 0.5));
                Ok((!laplacian_join_identity_check(&a, &b)?).then(|| pair_label(&a, &b)))
            })
        },
    ));
    c.push(Claim::new(
        "join.identity.regular_adjacency",
        "adjacency characteristic polynomial of a join of regular graphs, 50 random pairs",
        Derived,
        json!(50),
        |o| {
            sweep(o.seed.wrapping_add(1), 50, |rng| {
                let (n, m) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
                let (a, b) = (regular_circulant(rng, n), regular_circulant(rng, m));
                Ok((!regular_join_adjacency_check(&a, &b)?).then(|| pair_label(&a, &b)))
            })
        },
    ));
    for (rule, name, offset) in [(Rule::Standard, "standard", 2u64), (Rule::Skew, "skew", 3)] {
        c.push(Claim::new(
            format!("join.formula.{name}"),
            format!("{rule} zero forcing number of a join is min{{n + Z(H), n' + Z(G)}}, 30 random connected pairs"),
            Published,
            json!(30),
            move |o| {
                sweep(o.seed.wrapping_add(offset), 30, |rng| {
                    let (a, b) = connected_pair(rng, 6);
                    let check = zf_join_formula_check(&a, &b, rule, &o.search)?;
                    Ok((!check.holds()).then(|| pair_label(&a, &b)))
                })
            },
        ));
    }
    for (side, spec, value) in [("left", "fig1_left", 8), ("right", "fig1_right", 6)] {
        c.push(Claim::new(
            format!("join.K2.Z.{side}"),
            format!("zero forcing number of {spec} joined with K2 is 2 + Z"),
            Published,
            json!(value),
            move |o| zf(&graph(spec)?.join(&graph("complete:2")?)?, Rule::Standard, o),
        ));
    }
    c.push(Claim::new(
        "join.K2.cospectral.L",
        "the 10-vertex pair joined with K2 stays Laplacian-cospectral",
        Published,
        json!(true),
        |_| {
            let k2 = graph("complete:2")?;
            Ok(cospectral_claim(
                &graph("fig1_left")?.join(&k2)?,
                &graph("fig1_right")?.join(&k2)?,
                MatrixKind::Laplacian,
            ))
        },
    ));
    c.push(Claim::new(
        "join.iterated.fig1_left",
        "zero forcing number of fig1_left joined with itself is n + Z",
        Published,
        json!(16),
        |o| zf(&graph("fig1_left")?.iterated_join(1)?, Rule::Standard, o),
    ));
}

fn path_join(c: &mut Vec<Claim>) {
    c.push(Claim::new(
        "theorem51.cospectral.A",
        "(G1 v P10) u G2 and (G2 v P10) u G1 are adjacency-cospectral",
        Published,
        json!(true),
        |_| {
            let p = path_join_pair_default()?;
            Ok(cospectral_claim(&p.g, &p.g_prime, MatrixKind::Adjacency))
        },
    ));
    c.push(Claim::new(
        "theorem51.noniso",
        "(G1 v P10) u G2 and (G2 v P10) u G1 are not isomorphic",
        Published,
        json!(true),
        |_| {
            let p = path_join_pair_default()?;
            Ok(noniso_claim(&p.g, &p.g_prime))
        },
    ));
    c.push(Claim::new(
        "theorem51.switching",
        "V(G1) u V(G2) is a switching set taking one graph of the pair to the other",
        Published,
        json!(true),
        |_| {
            let p = path_join_pair_default()?;
            let part = p.switching.clone().expect("path join pairs carry their partition");
            let ok = part.is_valid() && gm_switch(&p.g, &part)? == p.g_prime;
            Ok(Computed {
                value: json!(ok),
                certificates: vec![Certificate::Switching {
                    graph: p.g,
                    partition: part,
                }],
            })
        },
    ));
    for (side, value, pick) in [("Gprime", 15, 0usize), ("Gsecond", 17, 1)] {
        c.push(Claim::new(
            format!("theorem51.Z.{side}"),
            "zero forcing number of the path join with n = 10, m = 10 is n + Z(other) + 1",
            Published,
            json!(value),
            move |o| {
                let p = path_join_pair_default()?;
                zf(if pick == 0 { &p.g } else { &p.g_prime }, Rule::Standard, o)
            },
        ));
    }
}

fn torus(c: &mut Vec<Claim>) {
    for (s, t) in [(3usize, 3usize), (3, 4), (4, 4)] {
        let value = crate::constructions::torus_zero_forcing(s, t).expect("s, t >= 3");
        c.push(Claim::new(
            format!("torus.Z.C{s}xC{t}"),
            format!("zero forcing number of C{s} □ C{t} matches the torus formula"),
            Published,
            json!(value),
            move |o| {
                zf(
                    &graph(&format!("cycle:{s}"))?.cartesian(&graph(&format!("cycle:{t}"))?)?,
                    Rule::Standard,
                    o,
                )
            },
        ));
    }
    c.push(Claim::new(
        "torus.gap.c3",
        "with c = 3 the torus pair has Z 8 and 12, gap 4c - 8 = 4",
        Published,
        json!({ "z_g1": 8, "z_g2": 12, "gap": 4 }),
        |_| {
            let f = torus_gap_family(3)?;
            Ok(Computed {
                value: json!({ "z_g1": f.z_g1, "z_g2": f.z_g2, "gap": f.gap }),
                certificates: Vec::new(),
            })
        },
    ));
}

fn regular(c: &mut Vec<Claim>) {
    for k in [2usize, 3] {
        let id = |s: &str| format!("regular6k.k{k}.{s}");
        c.push(Claim::new(
            id("regular"),
            format!(
                "the construction with k = {k} is {}-regular on {} vertices",
                2 * k,
                6 * k
            ),
            Published,
            json!({ "order": 6 * k, "degree": 2 * k }),
            move |_| {
                let p = regular_construction(k)?;
                Ok(Computed {
                    value: json!({ "order": p.g.order(), "degree": p.g.regular_degree() }),
                    certificates: Vec::new(),
                })
            },
        ));
        c.push(Claim::new(
            id("switching"),
            format!("V(A) u V(H) is a switching set for k = {k}"),
            Published,
            json!(true),
            move |_| {
                let p = regular_construction(k)?;
                let part = p.switching.expect("regular pairs carry their partition");
                Ok(Computed {
                    value: json!(part.is_valid()),
                    certificates: vec![Certificate::Switching {
                        graph: p.g,
                        partition: part,
                    }],
                })
            },
        ));
        c.push(Claim::new(
            id("cospectral"),
            format!("the k = {k} pair is A-, L- and Q-cospectral"),
            Published,
            json!({ "A": true, "L": true, "Q": true }),
            move |_| {
                let p = regular_construction(k)?;
                let mut certificates = Vec::new();
                let mut value = serde_json::Map::new();
                for kind in MatrixKind::ALL {
                    let r = cospectral_claim(&p.g, &p.g_prime, kind);
                    value.insert(kind.symbol().to_string(), r.value);
                    certificates.extend(r.certificates);
                }
                Ok(Computed {
                    value: Value::Object(value),
                    certificates,
                })
            },
        ));
        c.push(Claim::new(
            id("noniso"),
            format!("the k = {k} pair is not isomorphic"),
            Derived,
            json!(true),
            move |_| {
                let p = regular_construction(k)?;
                Ok(noniso_claim(&p.g, &p.g_prime))
            },
        ));
        c.push(Claim::new(
            id("ZH"),
            format!("the circulant H for k = {k} has Z = 2k - 2, and the set {{0, 2, 3, …, 2k-2}} forces it"),
            Published,
            json!({ "z": 2 * k - 2, "witness_closes": true }),
            move |_| {
                let h = zf_h_check(k)?;
                Ok(Computed {
                    value: json!({ "z": h.exact, "witness_closes": h.witness_closes }),
                    certificates: vec![Certificate::Forcing {
                        graph: crate::constructions::circulant_h(k)?,
                        certificate: h.certificate,
                        explored: None,
                    }],
                })
            },
        ));
        c.push(Claim::new(
            id("Z.G"),
            format!("Z(G) = 4k - 2 for k = {k}"),
            Published,
            json!(4 * k - 2),
            move |o| zf(&regular_construction(k)?.g, Rule::Standard, o),
        ));
        c.push(
            Claim::new(
                id("Z.Gprime"),
                format!("Z(G') <= 4k - 3 for k = {k}"),
                Published,
                json!(4 * k - 3),
                move |o| zf(&regular_construction(k)?.g_prime, Rule::Standard, o),
            )
            .at_most(),
        );
    }
    c.push(Claim::new(
        "regular6k.H.k5",
        "the circulant H for k = 5 has Z = 8",
        Published,
        json!(8),
        |o| zf(&crate::constructions::circulant_h(5)?, Rule::Standard, o),
    ));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_stable() {
        let ids = claim_ids();
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup);
        let fig1: Vec<_> = ids.iter().filter(|id| id.starts_with("fig1.")).collect();
        assert_eq!(
            fig1,
            [
                "fig1.Z.left",
                "fig1.Z.right",
                "fig1.Zplus.left",
                "fig1.Zplus.right",
                "fig1.Zskew.left",
                "fig1.Zskew.right",
                "fig1.cospectral.A",
                "fig1.noniso"
            ]
        );
    }

    #[test]
    fn prefix_matching_respects_segments() {
        let claims = catalogue();
        let fig1 = claims.iter().filter(|c| c.matches("fig1")).count();
        assert_eq!(fig1, 8);
        assert_eq!(claims.iter().filter(|c| c.matches("fig")).count(), 0);
        assert_eq!(claims.iter().filter(|c| c.matches("fig1.noniso")).count(), 1);
    }

    #[test]
    fn small_prefix_runs_and_replays() {
        let opts = SuiteOptions {
            only: Some("fig1".into()),
            ..Default::default()
        };
        let report = run_suite(&opts).unwrap();
        assert_eq!(report.claims.len(), 8);
        assert!(report.all_passed(), "{:#?}", report.summary);
        for claim in &report.claims {
            assert!(claim.certificates.iter().all(Certificate::replay), "{}", claim.id);
            assert!(claim.wall_ms.is_none());
        }
        let again = run_suite(&opts).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
    }

    #[test]
    fn budget_exhaustion_is_reported_as_skipped() {
        let opts = SuiteOptions {
            only: Some("fig1.Z.left".into()),
            search: SearchConfig {
                max_closures: 10,
                ..Default::default()
            },
            ..Default::default()
        };
        let report = run_suite(&opts).unwrap();
        assert_eq!(report.claims[0].status, Status::SkippedBudget);
        assert!(!report.all_passed());
        assert!(run_suite(&SuiteOptions {
            only: Some("nothing".into()),
            ..Default::default()
        })
        .is_err());
    }

    #[test]
    fn forged_certificates_fail_replay() {
        let g = graph("path:3").unwrap();
        let cert = Certificate::Forcing {
            graph: g.clone(),
            certificate: ForcingCertificate {
                rule: Rule::Standard,
                initial: crate::graph::VertexSet::from_bits(0b010),
                forces: vec![(1, 0), (1, 2)],
            },
            explored: None,
        };
        assert!(!cert.replay());
        let iso = Certificate::Isomorphism {
            left: g.clone(),
            right: g,
            mapping: None,
        };
        assert!(!iso.replay());
    }
}
