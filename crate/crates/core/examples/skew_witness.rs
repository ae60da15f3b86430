//! Skew-symmetric matrices with a given graph: exact rank, a search for
//! one of maximum nullity, and the tensor-product family it certifies.

use num_bigint::BigInt;
use num_rational::BigRational;
use zfforge::constructions::tensor_family_pair;
use zfforge::forcing::{zero_forcing_number, Rule};
use zfforge::graph::named_graph;
use zfforge::skew_rank::{exact_rank, max_nullity_witness_search, SkewWitness, WitnessSearch};

fn main() -> zfforge::Result<()> {
    // all entries 1 on C6 is nonsingular; negating one edge drops the rank
    // to 4
    let c6 = named_graph("cycle:6")?;
    let ones = SkewWitness::ones(c6.clone());
    println!("C6, all ones: rank {}", exact_rank(&ones));
    let entries = c6
        .edges()
        .map(|e| {
            let x = if e == (0, 5) { -1 } else { 1 };
            (e, BigRational::from_integer(BigInt::from(x)))
        })
        .collect();
    println!(
        "C6, one edge negated: rank {}",
        exact_rank(&SkewWitness::new(c6, entries)?)
    );

    for name in ["ex32_G", "ex32_Gprime", "fig1_left"] {
        let g = named_graph(name)?;
        let w = max_nullity_witness_search(&g, &WitnessSearch::default())?;
        let z_skew = zero_forcing_number(&g, Rule::Skew)?.value;
        println!(
            "{name}: nullity {} with Z- = {z_skew}, certified {}",
            w.achieved_nullity, w.certified
        );
    }

    let pair = tensor_family_pair(&named_graph("ex32_G")?, &named_graph("ex32_Gprime")?, 3)?;
    println!("\ntensor products with K3, order {}", pair.g.order());
    for e in &pair.expected {
        println!("  {} = {}", e.quantity, e.value);
    }
    let w = max_nullity_witness_search(&named_graph("ex32_Gprime")?, &WitnessSearch::default())?;
    println!("witness: {}", serde_json::to_string(&w)?);
    Ok(())
}
