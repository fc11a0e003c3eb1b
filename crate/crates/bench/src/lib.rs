//! Shared workloads for the benchmarks.

use bicm::graph::Graph;
use bicm::ideal::{matching_power, SquarefreeIdeal};

/// Named matching powers of increasing size.
pub fn matching_power_workloads() -> Vec<(String, SquarefreeIdeal)> {
    let mut out = Vec::new();
    for n in [6, 7, 8] {
        let k = Graph::complete(n).expect("small order");
        let pc = Graph::path(n).expect("small order").complement();
        for (name, g) in [("K", k), ("Pc", pc)] {
            for power in 1..=2 {
                let i = matching_power(&g, power).expect("k >= 1");
                out.push((format!("{name}{n}^[{power}]"), i));
            }
        }
    }
    out
}
