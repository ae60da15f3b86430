//! Joins: Laplacian cospectrality survives `∨ K_r`, and so does a gap in
//! `Z`. Also checks the join formula for `Z` on small random pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zfforge::constructions::join_family;
use zfforge::forcing::{zero_forcing_number, zf_join_formula_check, Rule, SearchConfig};
use zfforge::graph::named_graph;
use zfforge::graph::random::connected_gnp;
use zfforge::spectra::{cospectral, MatrixKind};

fn main() -> zfforge::Result<()> {
    let (left, right) = (named_graph("fig1_left")?, named_graph("fig1_right")?);
    for r in 1..=3 {
        let pair = join_family(&left, &right, r)?;
        let z = zero_forcing_number(&pair.g, Rule::Standard)?.value;
        let z_prime = zero_forcing_number(&pair.g_prime, Rule::Standard)?.value;
        println!(
            "r = {r}: L-cospectral {}, Z {z} vs {z_prime}",
            cospectral(&pair.g, &pair.g_prime, MatrixKind::Laplacian)
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = SearchConfig::default();
    let mut checked = 0;
    while checked < 20 {
        let (a, b) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        if a == 1 && b == 1 {
            continue;
        }
        let (g, h) = (connected_gnp(&mut rng, a, 0.5), connected_gnp(&mut rng, b, 0.5));
        for rule in [Rule::Standard, Rule::Skew] {
            let check = zf_join_formula_check(&g, &h, rule, &cfg)?;
            assert!(check.holds(), "{rule}: {check:?}");
        }
        checked += 1;
    }
    println!("join formula holds on {checked} random pairs");

    // the one pair where it does not
    let k1 = named_graph("complete:1")?;
    println!(
        "K1 ∨ K1: {}",
        zf_join_formula_check(&k1, &k1, Rule::Standard, &cfg).unwrap_err()
    );
    Ok(())
}
