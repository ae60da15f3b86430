//! Characteristic polynomials of A, L and Q, computed exactly, and the
//! cospectrality checks built on them.

use zfforge::graph::{is_isomorphic, named_graph};
use zfforge::spectra::{
    char_poly, laplacian_join_identity_check, regular_cospectral_report, regular_join_adjacency_check, MatrixKind,
};

fn main() -> zfforge::Result<()> {
    let left = named_graph("fig1_left")?;
    let right = named_graph("fig1_right")?;

    for kind in MatrixKind::ALL {
        let (p, q) = (char_poly(&left, kind), char_poly(&right, kind));
        println!("{kind}: {p}");
        println!("   same for both: {}", p == q);
    }
    println!("isomorphic: {}", is_isomorphic(&left, &right));

    let report = regular_cospectral_report(&left, &right);
    println!("{}", serde_json::to_string_pretty(&report)?);

    // the join identities hold for any pair; regularity is needed for A
    let c5 = named_graph("cycle:5")?;
    let p4 = named_graph("path:4")?;
    println!("L identity on C5 ∨ P4: {}", laplacian_join_identity_check(&c5, &p4)?);
    println!(
        "A identity on C5 ∨ fig1_left: {}",
        regular_join_adjacency_check(&c5, &left)?
    );

    // integer roots come straight off the polynomial
    let l = char_poly(&named_graph("complete:4")?, MatrixKind::Laplacian);
    println!(
        "Laplacian roots of K4 (root, multiplicity): {:?}",
        l.poly().integer_roots(10)
    );
    Ok(())
}
