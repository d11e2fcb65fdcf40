use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families, written as a letter followed by a size
/// (`K5`, `C7`, `P4`, `T3`, `F2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `K_n`.
    Complete(usize),
    /// `C_n`, edges `{i, i+1}` mod `n`.
    Cycle(usize),
    /// Path on `n` vertices (so `n - 1` edges).
    Path(usize),
    /// Triangle `x1 x2 x3` with a path `y1 .. yn` hanging off `x3`:
    /// vertices `0,1,2` are the triangle and `3..3+n` the tail.
    TriangleTail(usize),
    /// `k` triangles glued at vertex 0 (windmill graph).
    Friendship(usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        let g = match self {
            Family::Complete(n) => {
                let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                Graph::new(n, edges)?
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidGraph(format!("cycle needs at least 3 vertices, got {n}")));
                }
                Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?
            }
            Family::Path(n) => Graph::new(n, (1..n).map(|i| (i - 1, i)))?,
            Family::TriangleTail(n) => {
                let mut edges = vec![(0, 1), (0, 2), (1, 2)];
                if n > 0 {
                    edges.push((2, 3));
                }
                edges.extend((1..n).map(|i| (2 + i, 3 + i)));
                Graph::new(n + 3, edges)?
            }
            Family::Friendship(k) => {
                let edges = (0..k).flat_map(|t| {
                    let a = 1 + 2 * t;
                    [(0, a), (0, a + 1), (a, a + 1)]
                });
                Graph::new(2 * k + 1, edges)?
            }
        };
        Ok(g.with_name(self.to_string()))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Path(n) => write!(f, "P{n}"),
            Family::TriangleTail(n) => write!(f, "T{n}"),
            Family::Friendship(k) => write!(f, "F{k}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty family string".into()))?;
        let size: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("family {s:?} must be a letter followed by a size")))?;
        match letter.to_ascii_uppercase() {
            'K' => Ok(Family::Complete(size)),
            'C' => Ok(Family::Cycle(size)),
            'P' => Ok(Family::Path(size)),
            'T' => Ok(Family::TriangleTail(size)),
            'F' => Ok(Family::Friendship(size)),
            other => Err(Error::Parse(format!("unknown graph family {other:?}"))),
        }
    }
}
