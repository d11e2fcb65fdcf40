//! The triangle-with-tail family `T_n` and the recursion
//! `sdefect(J(T_n), 2) = sdefect(J(T_{n-1}), 2) + μ(J(P)^2)`
//! for a path `P` whose size depends on how "path of length n-4" is read.

use std::fmt;

use serde::Serialize;

use super::{sdefect_brute, Limits};
use crate::cover::cover_ideal;
use crate::error::Result;
use crate::graph::Family;

/// How the path size in the recursion is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathConvention {
    /// `P_{n-4}` has `n - 4` vertices.
    VertexCount,
    /// `P_{n-4}` has `n - 4` edges, so `n - 3` vertices.
    EdgeCount,
}

impl PathConvention {
    pub const ALL: [PathConvention; 2] = [PathConvention::VertexCount, PathConvention::EdgeCount];

    pub fn path_vertices(self, n: usize) -> usize {
        match self {
            PathConvention::VertexCount => n - 4,
            PathConvention::EdgeCount => n - 3,
        }
    }
}

impl fmt::Display for PathConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathConvention::VertexCount => f.write_str("vertex_count"),
            PathConvention::EdgeCount => f.write_str("edge_count"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleTailRecursion {
    /// `sdefect(J(T_{n-1}), 2)`.
    pub previous: u64,
    /// `(convention, μ(J(P)^2), whether lhs == previous + μ)`.
    pub terms: Vec<(PathConvention, u64, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleTailReport {
    pub n: usize,
    /// `sdefect(J(T_n), 2)` by brute force.
    pub sdefect: u64,
    /// `None` below `n = 5`, where the recursion does not apply.
    pub recursion: Option<TriangleTailRecursion>,
}

impl TriangleTailReport {
    /// Conventions under which the recursion held.
    pub fn holding_conventions(&self) -> Vec<PathConvention> {
        self.recursion
            .iter()
            .flat_map(|r| r.terms.iter())
            .filter(|(_, _, ok)| *ok)
            .map(|(c, _, _)| *c)
            .collect()
    }

    pub fn holds_under(&self, convention: PathConvention) -> bool {
        self.holding_conventions().contains(&convention)
    }
}

/// Computes both sides of the triangle-tail recursion by brute force, under
/// both path conventions.
pub fn verify_triangle_tail(n: usize, limits: Limits) -> Result<TriangleTailReport> {
    let lhs = sdefect_brute(&Family::TriangleTail(n).build()?, 2, limits)?.value;
    if n < 5 {
        return Ok(TriangleTailReport {
            n,
            sdefect: lhs,
            recursion: None,
        });
    }
    let previous = sdefect_brute(&Family::TriangleTail(n - 1).build()?, 2, limits)?.value;
    let terms = PathConvention::ALL
        .iter()
        .map(|&c| {
            let path = Family::Path(c.path_vertices(n)).build()?;
            let mu = cover_ideal(&path).power_capped(2, limits.max_gens)?.mu() as u64;
            Ok((c, mu, lhs == previous + mu))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TriangleTailReport {
        n,
        sdefect: lhs,
        recursion: Some(TriangleTailRecursion { previous, terms }),
    })
}
