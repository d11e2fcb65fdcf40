//! Exhaustive odd-cycle enumeration for small graphs.

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by the exhaustive cycle routines.
pub const EXHAUSTIVE_VERTEX_LIMIT: usize = 16;

impl Graph {
    fn check_exhaustive_budget(&self) -> Result<()> {
        if self.n > EXHAUSTIVE_VERTEX_LIMIT {
            Err(Error::TooLargeForExhaustiveCheck {
                n: self.n,
                limit: EXHAUSTIVE_VERTEX_LIMIT,
            })
        } else {
            Ok(())
        }
    }

    /// Vertex sets (as bitmasks) of all simple cycles of odd length.
    ///
    /// For each start vertex `s` the routine tracks, for every vertex set
    /// `S` whose minimum is `s`, the endpoints `v` of simple paths from `s`
    /// that visit exactly `S`. A set carries a cycle when one of those
    /// endpoints is adjacent to `s`.
    pub fn odd_cycle_vertex_sets(&self) -> Result<Vec<u32>> {
        self.check_exhaustive_budget()?;
        let n = self.n;
        let adj: Vec<u32> = (0..n)
            .map(|v| self.adj[v].iter().fold(0u32, |m, &w| m | (1 << w)))
            .collect();
        let mut found = Vec::new();
        for s in 0..n {
            // relative masks over vertices s..n, bit 0 is s itself
            let width = n - s;
            let size = 1usize << width;
            let mut ends = vec![0u32; size];
            ends[1] = 1;
            for rel in 1..size {
                if rel & 1 == 0 || ends[rel] == 0 {
                    continue;
                }
                let e = ends[rel];
                let len = rel.count_ones();
                if len >= 3 && len % 2 == 1 {
                    let closes = (0..width).any(|v| e >> v & 1 == 1 && adj[s + v] >> s & 1 == 1);
                    if closes {
                        found.push((rel as u32) << s);
                    }
                }
                for v in 0..width {
                    if e >> v & 1 == 0 {
                        continue;
                    }
                    let nbrs = adj[s + v] >> s;
                    for w in 1..width {
                        if nbrs >> w & 1 == 1 && rel >> w & 1 == 0 {
                            ends[rel | (1 << w)] |= 1 << w;
                        }
                    }
                }
            }
        }
        found.sort_unstable();
        Ok(found)
    }

    /// Whether every vertex lies on or next to every odd cycle.
    ///
    /// A vertex on a cycle counts as adjacent to it.
    pub fn every_vertex_adjacent_to_every_odd_cycle(&self) -> Result<bool> {
        let cycles = self.odd_cycle_vertex_sets()?;
        let closed: Vec<u32> = (0..self.n)
            .map(|v| self.adj[v].iter().fold(1u32 << v, |m, &w| m | (1 << w)))
            .collect();
        Ok(cycles
            .iter()
            .all(|&c| closed.iter().all(|&nb| nb & c != 0)))
    }
}
