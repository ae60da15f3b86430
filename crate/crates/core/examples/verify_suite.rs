//! Runs part of the claim suite in-process and replays its certificates.
//! Pass an id prefix (default `theorem51`), or `all`.

use std::env;

use zfforge::claims::{claim_ids, run_suite, Certificate, SuiteOptions};

fn main() -> zfforge::Result<()> {
    let prefix = env::args().nth(1).unwrap_or_else(|| "theorem51".into());
    if prefix == "list" {
        claim_ids().iter().for_each(|id| println!("{id}"));
        return Ok(());
    }
    let opts = SuiteOptions {
        only: (prefix != "all").then_some(prefix),
        timings: true,
        ..SuiteOptions::default()
    };
    let report = run_suite(&opts)?;
    for c in &report.claims {
        let replays = c.certificates.iter().all(Certificate::replay);
        println!(
            "{:?} {} ({:?}): expected {}, computed {}, certificates replay: {replays}, {} ms",
            c.status,
            c.id,
            c.provenance,
            c.expected,
            c.computed.as_ref().map_or("-".into(), ToString::to_string),
            c.wall_ms.unwrap_or(0)
        );
    }
    let s = report.summary;
    println!("{} passed, {} failed, {} skipped", s.pass, s.fail, s.skipped);
    Ok(())
}
