//! Run the whole verification suite on one hypergraph and print the report,
//! the same thing `cuhg check` does.
//!
//!     cargo run --example theorem_suite

use cuhg::analysis::{run_full_suite, summarize, Verdict};
use cuhg::generate::{gen_random, PhaseMode};

fn main() {
    let g = gen_random(8, 6, 0.5, PhaseMode::Continuous, 99).unwrap().graph;
    let reports = run_full_suite(&g, 1);
    for r in &reports {
        let status = match &r.verdict {
            Verdict::Pass => "pass".to_string(),
            Verdict::Fail => "FAIL".to_string(),
            Verdict::Skipped(reason) => format!("skip ({reason})"),
        };
        println!("{:40} {status}", r.check_name);
        if r.verdict.is_fail() {
            for m in &r.measured {
                println!("    {} = {}", m.label, m.value);
            }
        }
    }
    let (passed, failed, skipped) = summarize(&reports);
    println!("\n{passed} passed, {failed} failed, {skipped} skipped");
}
