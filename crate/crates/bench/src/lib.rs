//! Benchmark inputs shared by the criterion suites.

use thrall_core::{Partition, StandardTableau};

/// Partitions spanning every solved class at sizes where a run takes milliseconds.
pub const EXPANSION_INPUTS: [&str; 6] = ["4,2", "3,3", "4,4", "3,3,2,2,1", "5,5", "4,1,1,1"];

pub const TRACE_TABLEAU: &str = "1 2 4 7 9/3 5 10/6 8";

pub fn partition(s: &str) -> Partition {
    s.parse().expect("benchmark partition")
}

pub fn trace_tableau() -> StandardTableau {
    TRACE_TABLEAU.parse().expect("benchmark tableau")
}
