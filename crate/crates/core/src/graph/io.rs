use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// On-disk graph format: `{"n": 4, "edges": [[1, 2], [2, 3]]}` with
/// 1-based vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn into_graph(self) -> Result<Graph> {
        let edges = self
            .edges
            .iter()
            .map(|&[a, b]| {
                if a == 0 || b == 0 {
                    Err(Error::InvalidGraph("vertex indices are 1-based".into()))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Graph::new(self.n, edges)
    }
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        }
    }
}

impl Graph {
    pub fn from_json_str(s: &str) -> Result<Graph> {
        let file: GraphFile =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
        file.into_graph()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph file serializes")
    }
}
