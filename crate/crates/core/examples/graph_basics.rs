//! Building graphs: named families, products and joins, graph6 and edge
//! lists, isomorphism.

use zfforge::graph::{emit_edgelist, emit_graph6, find_isomorphism, named_graph, parse_edgelist, parse_graph6};

fn main() -> zfforge::Result<()> {
    let c4 = named_graph("cycle:4")?;
    let k2 = named_graph("complete:2")?;

    // C4 □ K2 is the cube; C4 × K2 is two disjoint 4-cycles
    let cube = c4.cartesian(&k2)?;
    let tensor = c4.tensor(&k2)?;
    println!(
        "C4 □ K2: order {}, size {}, degree {:?}",
        cube.order(),
        cube.size(),
        cube.regular_degree()
    );
    println!("C4 × K2: {} components", tensor.components().len());

    let join = c4.join(&named_graph("path:3")?)?;
    println!("C4 ∨ P3: size {} = 4 + 2 + 4·3", join.size());

    let g6 = emit_graph6(&cube);
    let back = parse_graph6(&g6)?;
    assert_eq!(back, cube);
    println!("graph6: {g6}");

    let text = emit_edgelist(&cube);
    assert_eq!(parse_edgelist(&text)?, cube);
    print!("edge list:\n{text}");

    // relabel the cube and recover the relabelling
    let shuffled = cube.permute(&[3, 7, 0, 5, 1, 6, 2, 4])?;
    let map = find_isomorphism(&cube, &shuffled).expect("a relabelling is an isomorphism");
    println!("isomorphism found: {map:?}");
    Ok(())
}
