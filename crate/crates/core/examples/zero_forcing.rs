//! Exact zero forcing numbers under the three colour-change rules, with
//! certificates that replay independently.

use zfforge::forcing::{closure, replay, zero_forcing_number, zero_forcing_number_with, Rule, SearchConfig};
use zfforge::graph::named_graph;
use zfforge::{Error, VertexSet};

fn main() -> zfforge::Result<()> {
    for name in ["fig1_left", "fig1_right", "ex32_G", "ex32_Gprime"] {
        let g = named_graph(name)?;
        let values: Vec<String> = Rule::ALL
            .iter()
            .map(|&r| zero_forcing_number(&g, r).map(|z| format!("{r} {}", z.value)))
            .collect::<Result<_, _>>()?;
        println!("{name:12} {}", values.join(", "));
    }

    let g = named_graph("fig1_left")?;
    let z = zero_forcing_number(&g, Rule::Standard)?;
    println!(
        "\nminimum forcing set {:?}, {} closures explored",
        z.witness.initial.to_vec(),
        z.explored
    );
    for (u, w) in &z.witness.forces {
        println!("  {u} forces {w}");
    }
    assert_eq!(replay(&g, &z.witness), Ok(g.vertices()));

    // one vertex short of the minimum stalls
    let mut short = z.witness.initial.to_vec();
    short.pop();
    let stalled = closure(&g, Rule::Standard, VertexSet::from_indices(g.order(), short)?)?;
    println!("without the last vertex: {} of {} blue", stalled.blue.len(), g.order());

    // a tight budget turns into an error instead of a long run
    let tight = SearchConfig {
        max_closures: 50,
        ..SearchConfig::default()
    };
    match zero_forcing_number_with(&g, Rule::Standard, &tight) {
        Err(Error::BudgetExceeded(why)) => println!("budget of 50: {why}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
