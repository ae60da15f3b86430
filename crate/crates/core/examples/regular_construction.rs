//! The `2k`-regular cospectral pair on `6k` vertices in which switching
//! lowers `Z`, and the circulant it is built around.

use std::env;

use zfforge::constructions::{regular_construction, zf_h_check};
use zfforge::forcing::{zero_forcing_number, Rule};
use zfforge::graph::is_isomorphic;
use zfforge::spectra::{cospectral, MatrixKind};

fn main() -> zfforge::Result<()> {
    let k: usize = env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let pair = regular_construction(k)?;
    let g = &pair.g;
    println!("k = {k}: order {}, degree {:?}", g.order(), g.regular_degree());
    if let Some(labels) = g.labels() {
        println!("vertices: {}", labels.join(" "));
    }
    let switching = pair.switching.as_ref().expect("the pair comes with its switching set");
    println!("switching set valid: {}", switching.is_valid());
    println!("cospectral: {}", cospectral(g, &pair.g_prime, MatrixKind::Adjacency));
    println!("isomorphic: {}", is_isomorphic(g, &pair.g_prime));

    let h = zf_h_check(k)?;
    println!(
        "Z(H) = {} (expected {}), witness {:?} closes: {}",
        h.exact,
        h.expected,
        h.witness.to_vec(),
        h.witness_closes
    );

    let z = zero_forcing_number(g, Rule::Standard)?.value;
    let z_prime = zero_forcing_number(&pair.g_prime, Rule::Standard)?.value;
    println!("Z(G) = {z}, Z(G') = {z_prime}");
    for e in &pair.expected {
        println!("  {} {:?} {}", e.quantity, e.relation, e.value);
    }
    Ok(())
}
