//! Graphs shared by the benchmarks.

use symdef_core::{Family, Graph};

/// Named families of increasing size, cheap enough for repeated runs.
pub fn fixtures() -> Vec<Graph> {
    ["K4", "C7", "T3", "F2", "K5", "C9"]
        .iter()
        .map(|s| s.parse::<Family>().and_then(Family::build).expect("fixture family builds"))
        .collect()
}
