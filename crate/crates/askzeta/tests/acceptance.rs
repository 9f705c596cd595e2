use std::process::ExitCode;

use askzeta::verify::{default_budget, run_suite, SUITES};

fn main() -> ExitCode {
    let budget = default_budget();
    let mut failed = 0;
    for (i, name) in SUITES.iter().enumerate() {
        let r = run_suite(name, budget).expect("known suite");
        let verdict = if r.ok() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {:<13} {verdict} ({}/{} cases)", i + 1, name, r.passed, r.cases);
        for n in &r.notes {
            println!("    note: {n}");
        }
        for f in r.failures.iter().take(5) {
            println!("    fail: {f}");
        }
        failed += usize::from(!r.ok());
    }
    println!("acceptance: {}/{} criteria passed", SUITES.len() - failed, SUITES.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
