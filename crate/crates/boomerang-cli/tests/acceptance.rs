//! End-to-end acceptance gate: runs every criterion of the verification
//! suite and prints one pass/fail line per criterion.

use boomerang_cli::suite::{run, SuiteOptions};

#[test]
fn acceptance() {
    let checks = run(&SuiteOptions { seed: 0, fast: false });
    let mut failures = 0usize;
    for (i, c) in checks.iter().enumerate() {
        if c.passed() {
            println!("[{:02}] PASS {}", i + 1, c.name);
        } else {
            failures += 1;
            println!(
                "[{:02}] FAIL {}: {}",
                i + 1,
                c.name,
                c.witness.as_deref().unwrap_or("(no witness)")
            );
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
