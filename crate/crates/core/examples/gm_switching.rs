//! Godsil-McKay switching: the 4×4 rook graph switched on its diagonal is
//! the Shrikhande graph. Also shows what an invalid partition reports.

use zfforge::constructions::{gm_switch, grid_shrikhande_report, rook_graph_diagonal, SwitchingPartition};
use zfforge::forcing::{zero_forcing_number, Rule};
use zfforge::graph::{is_isomorphic, named_graph};
use zfforge::spectra::{cospectral, MatrixKind};
use zfforge::VertexSet;

fn main() -> zfforge::Result<()> {
    let rook = named_graph("grid_lattice:4")?;
    let partition = SwitchingPartition::new(&rook, vec![rook_graph_diagonal()])?;
    println!("valid: {}", partition.is_valid());
    let shrikhande = gm_switch(&rook, &partition)?;

    println!("cospectral: {}", cospectral(&rook, &shrikhande, MatrixKind::Adjacency));
    println!("isomorphic: {}", is_isomorphic(&rook, &shrikhande));
    println!(
        "switching twice gives back the rook graph: {}",
        gm_switch(&shrikhande, &partition)? == rook
    );
    for (name, g) in [("rook", &rook), ("Shrikhande", &shrikhande)] {
        println!("Z+({name}) = {}", zero_forcing_number(g, Rule::Psd)?.value);
    }

    let report = grid_shrikhande_report(11)?;
    println!(
        "with K11: Shrikhande side at most {}, grid side at least {}",
        report.shrikhande_upper, report.grid_lower
    );

    // on P4 the set {0, 1, 2} is not regular inside
    let p4 = named_graph("path:4")?;
    let bad = SwitchingPartition::new(&p4, vec![VertexSet::from_indices(4, [0, 1, 2])?])?;
    for v in &bad.validation.violations {
        println!("violation: {v}");
    }
    assert!(gm_switch(&p4, &bad).is_err());
    Ok(())
}
