//! Acceptance run: nine criteria, each with its own time limit, one
//! PASS/FAIL line apiece. Exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zfforge::claims::{run_suite, Certificate, Status, SuiteOptions};
use zfforge::constructions::{gm_switch, planted_switching};
use zfforge::forcing::{closure, is_forcing_set, replay, zero_forcing_number, Rule};
use zfforge::graph::random::gnp;
use zfforge::graph::{Graph, VertexSet};
use zfforge::skew_rank::{exact_rank, SkewWitness};
use zfforge::spectra::{char_poly, cospectral, graph_matrix, MatrixKind};

type Check = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs the suite claims under the given id prefixes; every claim must pass
/// and every certificate must replay.
fn claims(prefixes: &[&str]) -> Check {
    let mut count = 0;
    for prefix in prefixes {
        let report = run_suite(&SuiteOptions {
            only: Some(prefix.to_string()),
            ..Default::default()
        })
        .map_err(|e| e.to_string())?;
        for c in &report.claims {
            ensure(c.status == Status::Pass, || {
                format!(
                    "{} expected {} computed {:?} {:?}",
                    c.id, c.expected, c.computed, c.error
                )
            })?;
            ensure(c.certificates.iter().all(Certificate::replay), || {
                format!("{}: certificate does not replay", c.id)
            })?;
        }
        count += report.claims.len();
    }
    Ok(format!("{count} claims pass, certificates replay"))
}

fn criterion(n: usize, name: &str, limit: Duration, check: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(check));
    let elapsed = start.elapsed();
    let (mut ok, mut detail) = match outcome {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(p) => (
            false,
            p.downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()),
        ),
    };
    if elapsed > limit {
        ok = false;
        detail += " (over the time limit)";
    }
    println!(
        "{} criterion {n} [{name}]: {detail}; {:.2}s of {}s",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    ok
}

fn random_graph(rng: &mut ChaCha8Rng, max: usize) -> Graph {
    let n = rng.gen_range(1..=max);
    let p = rng.gen_range(0.2..0.7);
    gnp(rng, n, p)
}

fn closure_properties(rng: &mut ChaCha8Rng) -> Check {
    for i in 0..500 {
        let g = random_graph(rng, 12);
        let rule = Rule::ALL[rng.gen_range(0..3)];
        let all = g.vertices().bits();
        let s = VertexSet::from_bits(rng.gen::<u64>() & all);
        let t = s.union(VertexSet::from_bits(rng.gen::<u64>() & all));
        let cs = closure(&g, rule, s).unwrap();
        let ct = closure(&g, rule, t).unwrap();
        let again = closure(&g, rule, cs.blue).unwrap();
        ensure(s.is_subset(cs.blue), || format!("case {i}: not extensive"))?;
        ensure(again.blue == cs.blue, || format!("case {i}: not idempotent"))?;
        ensure(cs.blue.is_subset(ct.blue), || format!("case {i}: not monotone"))?;
        ensure(replay(&g, &cs.certificate) == Ok(cs.blue), || {
            format!("case {i}: replay differs")
        })?;
    }
    Ok("500 closure triples".into())
}

fn rule_ordering(rng: &mut ChaCha8Rng) -> Check {
    for i in 0..100 {
        let g = random_graph(rng, 8);
        let z = |r| zero_forcing_number(&g, r).unwrap().value;
        let zs = z(Rule::Standard);
        ensure(z(Rule::Psd) <= zs && z(Rule::Skew) <= zs, || {
            format!("graph {i}: {g:?}")
        })?;
    }
    Ok("100 graphs with Z+ <= Z, Z- <= Z".into())
}

/// Minimum over every subset of the whole graph, ignoring components.
fn brute_force(g: &Graph, rule: Rule) -> usize {
    (0u64..1 << g.order())
        .filter(|&s| is_forcing_set(g, rule, VertexSet::from_bits(s)).unwrap())
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn component_additivity(rng: &mut ChaCha8Rng) -> Check {
    for i in 0..50 {
        let a = random_graph(rng, 5);
        let b = random_graph(rng, 5);
        let g = a.disjoint_union(&b).unwrap();
        for rule in Rule::ALL {
            let whole = zero_forcing_number(&g, rule).unwrap().value;
            let parts = zero_forcing_number(&a, rule).unwrap().value + zero_forcing_number(&b, rule).unwrap().value;
            ensure(whole == parts && whole == brute_force(&g, rule), || {
                format!("fixture {i}, {rule}: {whole} vs {parts}")
            })?;
        }
    }
    Ok("50 disconnected fixtures".into())
}

fn switching_instances(rng: &mut ChaCha8Rng) -> Check {
    for i in 0..100 {
        let n = rng.gen_range(3..=14);
        let (g, p) = planted_switching(rng, n).unwrap();
        let h = gm_switch(&g, &p).unwrap();
        ensure(gm_switch(&h, &p).unwrap() == g, || {
            format!("instance {i}: not an involution")
        })?;
        ensure(cospectral(&g, &h, MatrixKind::Adjacency), || {
            format!("instance {i}: spectra differ")
        })?;
        ensure(
            cospectral(&g.complement(), &h.complement(), MatrixKind::Adjacency),
            || format!("instance {i}: complement spectra differ"),
        )?;
    }
    Ok("100 planted switchings".into())
}

fn skew_parity(rng: &mut ChaCha8Rng) -> Check {
    for i in 0..100 {
        let g = random_graph(rng, 9);
        let entries = g
            .edges()
            .map(|e| {
                let p = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
                (e, BigRational::new(BigInt::from(p), BigInt::from(rng.gen_range(1..=4))))
            })
            .collect();
        let w = SkewWitness::new(g, entries).unwrap();
        ensure(exact_rank(&w).is_multiple_of(2), || format!("witness {i}: odd rank"))?;
    }
    Ok("100 skew ranks even".into())
}

/// `det(M)` by Gaussian elimination over the rationals.
fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut acc = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        acc *= m[c][c].clone();
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            let pivot = m[c].clone();
            for (x, p) in m[r].iter_mut().zip(&pivot).skip(c) {
                *x -= &f * p;
            }
        }
    }
    acc
}

fn char_poly_cross_check(rng: &mut ChaCha8Rng) -> Check {
    for i in 0..50 {
        let g = random_graph(rng, 9);
        let n = g.order();
        for kind in MatrixKind::ALL {
            let m = graph_matrix(&g, kind);
            let p = char_poly(&g, kind);
            // n + 1 points pin down a degree-n polynomial
            for t in 0..=n as i64 {
                let shifted: Vec<Vec<BigRational>> = (0..n)
                    .map(|r| {
                        (0..n)
                            .map(|c| {
                                let diag = if r == c { t } else { 0 };
                                BigRational::from_integer(BigInt::from(diag - m[r][c]))
                            })
                            .collect()
                    })
                    .collect();
                let want = det(shifted);
                let got = BigRational::from_integer(p.poly().eval(&BigInt::from(t)));
                ensure(want == got, || format!("graph {i}, {kind}, x = {t}"))?;
            }
        }
    }
    Ok("50 graphs, char polys match determinants".into())
}

fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_917);
    let parts = [
        closure_properties(&mut rng)?,
        rule_ordering(&mut rng)?,
        component_additivity(&mut rng)?,
        switching_instances(&mut rng)?,
        skew_parity(&mut rng)?,
        char_poly_cross_check(&mut rng)?,
    ];
    Ok(parts.join(", "))
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        criterion(1, "4-regular pair on 10 vertices", secs(5), || {
            claims(&["fig1", "spectra.fig1"])
        }),
        criterion(2, "7-vertex pair and skew witnesses", secs(30), || claims(&["ex32"])),
        criterion(3, "tensor products with K3", secs(600), || claims(&["tensor"])),
        criterion(4, "rook graph, Shrikhande graph, PSD", secs(120), || {
            claims(&["cartesian", "shrikhande"])
        }),
        criterion(5, "joins", secs(600), || claims(&["join"])),
        criterion(6, "path-join switching pair", secs(600), || claims(&["theorem51"])),
        criterion(7, "torus formula", secs(300), || claims(&["torus"])),
        criterion(8, "2k-regular switching pair", secs(960), || {
            let start = Instant::now();
            let small = claims(&["regular6k.k2"])?;
            let k2 = start.elapsed();
            ensure(k2 <= secs(60), || format!("k = 2 took {:.1}s", k2.as_secs_f64()))?;
            let large = claims(&["regular6k.k3", "regular6k.H"])?;
            let k3 = start.elapsed() - k2;
            ensure(k3 <= secs(900), || format!("k = 3 took {:.1}s", k3.as_secs_f64()))?;
            Ok(format!(
                "k = 2: {small} in {:.2}s; k = 3: {large} in {:.2}s",
                k2.as_secs_f64(),
                k3.as_secs_f64()
            ))
        }),
        criterion(9, "property suites", secs(600), properties),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
