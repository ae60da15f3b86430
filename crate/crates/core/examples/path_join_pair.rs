//! Cospectral switching pairs `(G1 ∨ Pm) ∪ G2` and `(G2 ∨ Pm) ∪ G1` whose
//! zero forcing numbers differ, and the torus family built the same way.

use std::env;

use zfforge::constructions::{path_join_pair, torus_gap_family, torus_zero_forcing};
use zfforge::forcing::{zero_forcing_number, Rule};
use zfforge::graph::named_graph;
use zfforge::spectra::{cospectral, MatrixKind};

fn main() -> zfforge::Result<()> {
    let m: usize = env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let pair = path_join_pair(&named_graph("fig1_left")?, &named_graph("fig1_right")?, m)?;
    println!(
        "order {}, cospectral: {}",
        pair.g.order(),
        cospectral(&pair.g, &pair.g_prime, MatrixKind::Adjacency)
    );

    let computed = [
        zero_forcing_number(&pair.g, Rule::Standard)?.value,
        zero_forcing_number(&pair.g_prime, Rule::Standard)?.value,
    ];
    for e in &pair.expected {
        println!("{:8} expected {} ({:?})", e.quantity, e.value, e.provenance);
    }
    println!("computed Z(G') = {}, Z(G'') = {}", computed[0], computed[1]);

    // rejected inputs list every problem at once
    match path_join_pair(&named_graph("cycle:5")?, &named_graph("complete:4")?, 3) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    println!(
        "\nZ(C3 □ C3) = {}, Z(C4 □ C6) = {}",
        torus_zero_forcing(3, 3)?,
        torus_zero_forcing(4, 6)?
    );
    for c in 3..=5 {
        let fam = torus_gap_family(c)?;
        println!(
            "c = {c}: C{}□C{} vs C{}□C{}, Z {} vs {}, gap {}",
            fam.g1_cycles.0, fam.g1_cycles.1, fam.g2_cycles.0, fam.g2_cycles.1, fam.z_g1, fam.z_g2, fam.gap
        );
    }
    Ok(())
}
