//! Accumulated directed influence matrices.
//!
//! Rows are leaders, columns are followers: `matrix[j, i]` accumulates the
//! weight of evidence that agent `j` influenced agent `i`. Row sums are
//! therefore leadership (out-degree) scores and column sums followership
//! (in-degree) scores.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::trajectory::AgentId;

/// Dense n×n nonnegative influence matrix with an agent-id index map.
#[derive(Debug, Clone, PartialEq)]
pub struct InfluenceMatrix {
    ids: Vec<AgentId>,
    data: Vec<f64>,
}

/// One directed edge of the influence network.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Edge {
    pub src: AgentId,
    pub dst: AgentId,
    pub weight: f64,
}

/// Leadership and followership degree scores for one agent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Centrality {
    pub agent: AgentId,
    /// Row sum: how strongly the agent acted as a leader.
    pub out_score: f64,
    /// Column sum: how strongly the agent acted as a follower.
    pub in_score: f64,
}

impl InfluenceMatrix {
    /// Zero matrix over the given agents. Ids must be sorted and unique.
    pub fn zeros(ids: Vec<AgentId>) -> Result<Self> {
        if ids.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "influence matrix ids must be sorted and unique".into(),
            ));
        }
        let n = ids.len();
        Ok(Self {
            ids,
            data: vec![0.0; n * n],
        })
    }

    pub fn agent_count(&self) -> usize {
        self.ids.len()
    }

    /// Agent ids in row/column order.
    pub fn agent_ids(&self) -> &[AgentId] {
        &self.ids
    }

    pub fn index_of(&self, id: AgentId) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn get_at(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.ids.len() + col]
    }

    /// Entry for an ordered (leader, follower) pair of agent ids.
    pub fn get(&self, leader: AgentId, follower: AgentId) -> Option<f64> {
        Some(self.get_at(self.index_of(leader)?, self.index_of(follower)?))
    }

    /// Adds weight at [leader row, follower column]. The diagonal stays
    /// zero; weights must be finite and nonnegative.
    pub fn add_at(&mut self, row: usize, col: usize, weight: f64) {
        debug_assert!(row != col, "diagonal must stay zero");
        debug_assert!(weight.is_finite() && weight >= 0.0);
        self.data[row * self.ids.len() + col] += weight;
    }

    /// Per-agent (out_score, in_score) degree centralities.
    pub fn centralities(&self) -> Vec<Centrality> {
        let n = self.ids.len();
        self.ids
            .iter()
            .enumerate()
            .map(|(i, &agent)| {
                let mut out_score = 0.0;
                let mut in_score = 0.0;
                for j in 0..n {
                    out_score += self.data[i * n + j];
                    in_score += self.data[j * n + i];
                }
                Centrality {
                    agent,
                    out_score,
                    in_score,
                }
            })
            .collect()
    }

    /// All nonzero off-diagonal entries, ordered by (src, dst).
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.ids.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let w = self.data[i * n + j];
                if i != j && w != 0.0 {
                    out.push(Edge {
                        src: self.ids[i],
                        dst: self.ids[j],
                        weight: w,
                    });
                }
            }
        }
        out
    }

    /// CSV with a header row and leading column of agent ids.
    pub fn to_csv_string(&self) -> String {
        let n = self.ids.len();
        let mut out = String::from("agent_id");
        for id in &self.ids {
            out.push(',');
            out.push_str(&id.to_string());
        }
        out.push('\n');
        for i in 0..n {
            out.push_str(&self.ids[i].to_string());
            for j in 0..n {
                out.push(',');
                out.push_str(&format!("{}", self.data[i * n + j]));
            }
            out.push('\n');
        }
        out
    }

    /// JSON edge list `[{"src": .., "dst": .., "weight": ..}, ..]`.
    pub fn to_edge_json(&self) -> String {
        serde_json::to_string_pretty(&self.edges()).expect("edge list serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[u32]) -> Vec<AgentId> {
        v.iter().map(|&i| AgentId(i)).collect()
    }

    #[test]
    fn zero_matrix_has_zero_centralities() {
        let m = InfluenceMatrix::zeros(ids(&[0, 1, 2])).unwrap();
        for c in m.centralities() {
            assert_eq!((c.out_score, c.in_score), (0.0, 0.0));
        }
        assert!(m.edges().is_empty());
    }

    #[test]
    fn single_edge_centralities() {
        let mut m = InfluenceMatrix::zeros(ids(&[3, 9])).unwrap();
        m.add_at(0, 1, 3.0);
        let c = m.centralities();
        assert_eq!((c[0].out_score, c[0].in_score), (3.0, 0.0));
        assert_eq!((c[1].out_score, c[1].in_score), (0.0, 3.0));
        assert_eq!(m.get(AgentId(3), AgentId(9)), Some(3.0));
        assert_eq!(
            m.edges(),
            vec![Edge {
                src: AgentId(3),
                dst: AgentId(9),
                weight: 3.0
            }]
        );
    }

    #[test]
    fn unsorted_ids_rejected() {
        assert!(InfluenceMatrix::zeros(ids(&[2, 1])).is_err());
        assert!(InfluenceMatrix::zeros(ids(&[1, 1])).is_err());
    }

    #[test]
    fn csv_export_shape() {
        let mut m = InfluenceMatrix::zeros(ids(&[0, 5])).unwrap();
        m.add_at(1, 0, 1.5);
        let csv = m.to_csv_string();
        assert_eq!(csv, "agent_id,0,5\n0,0,0\n5,1.5,0\n");
    }
}
