//! Acceptance suite: runs every verification criterion at its full scope and
//! prints one pass/fail line per criterion.
//!
//! Scopes: closed-form coefficients against the known table for n = 1..25,
//! exhaustive census for n = 1..10, oracle triangle up to 8 points, bijection
//! round trip and block coherence up to length 9, no-duplicated-holdings
//! comparisons up to 10, asymptotics at the published tolerances.

use semiorders::verify::{run_verification, VerifyOptions};

#[test]
fn acceptance_criteria() {
    let results = run_verification(&VerifyOptions::standard());
    let mut all_passed = true;
    for r in &results {
        println!(
            "criterion {:2} [{}] {} — {}",
            r.index,
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        all_passed &= r.passed;
    }
    assert!(all_passed, "at least one acceptance criterion failed");
}
