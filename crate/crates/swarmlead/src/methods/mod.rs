//! Leader-follower detection methods.
//!
//! All three methods share the same protocol: slide a window over the
//! aligned kinematics, score every ordered pair of agents inside each
//! window, threshold the score, and accumulate surviving weights into an
//! [`InfluenceMatrix`](crate::InfluenceMatrix) at [leader row, follower
//! column], recording one detection event per thresholded edge per window.
//! Sharing the window grid keeps the per-agent detection histograms
//! comparable across methods.

pub mod netinfer;
pub mod te;
pub mod tlmi;

use std::fmt;

use serde::Serialize;

use crate::influence::InfluenceMatrix;
use crate::trajectory::AgentId;

pub use netinfer::{infer, lagged_pearson, window_influence, NetInferConfig};
pub use te::{ksg_cmi, te_infer, transfer_entropy, TeConfig};
pub use tlmi::{binned_mi, lag_scan, tlmi_infer, TlmiConfig};

/// Which detection method produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MethodKind {
    NetInfer,
    Te,
    Tlmi,
}

impl MethodKind {
    pub const ALL: [MethodKind; 3] = [MethodKind::NetInfer, MethodKind::Te, MethodKind::Tlmi];

    pub fn as_str(self) -> &'static str {
        match self {
            MethodKind::NetInfer => "netinfer",
            MethodKind::Te => "te",
            MethodKind::Tlmi => "tlmi",
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for MethodKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "netinfer" => Ok(MethodKind::NetInfer),
            "te" => Ok(MethodKind::Te),
            "tlmi" => Ok(MethodKind::Tlmi),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

/// One thresholded edge in one window: evidence that `source` led `target`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectionEvent {
    pub window_index: usize,
    pub source: AgentId,
    pub target: AgentId,
    pub weight: f64,
}

/// An influence matrix plus the per-window detection events behind it.
#[derive(Debug, Clone)]
pub struct MethodOutput {
    pub matrix: InfluenceMatrix,
    pub events: Vec<DetectionEvent>,
    pub window_count: usize,
}

/// Exact degeneracy test: a segment has zero standard deviation iff all its
/// samples are equal.
pub(crate) fn is_constant(s: &[f64]) -> bool {
    s.windows(2).all(|w| w[0] == w[1])
}

/// Start offsets of windows spanning `span` samples with the given stride:
/// `0, stride, 2·stride, …` while the window still fits.
pub(crate) fn window_starts(series_len: usize, span: usize, stride: usize) -> Vec<usize> {
    assert!(stride > 0);
    let mut starts = Vec::new();
    let mut t = 0;
    while t + span <= series_len {
        starts.push(t);
        t += stride;
    }
    starts
}
