//! Reporting and verification-suite plumbing shared by the `boomerang`
//! binary and the acceptance tests.

pub mod report;
pub mod suite;
