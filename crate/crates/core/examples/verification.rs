//! Runs a few verification suites over small isoclasses and prints a summary.

use graph_hopf::verify::{run_suite, VerifyConfig};

fn main() -> graph_hopf::Result<()> {
    let cfg = VerifyConfig { max_vertices: 2, modes: vec![false], ..VerifyConfig::default() };
    for suite in ["hopf-fg", "hopf-qp", "morphisms", "cointeraction-fg"] {
        let report = run_suite(suite, &cfg)?;
        println!("{suite}: {} cases, {} failed", report.cases(), report.failures());
        for c in report.checks.iter().filter(|c| !c.passed()) {
            println!("  {}: {}/{} failed, e.g. {:?}", c.name, c.failures, c.cases, c.examples.first());
        }
    }
    Ok(())
}
