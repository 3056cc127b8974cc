//! Leader-follower network inference via windowed time-lagged correlation.
//!
//! For every ordered pair (candidate leader `j`, follower `i`) and every
//! configured kinematic variable, the leader's window `s_j[t, t+W)` is
//! correlated against the follower's lagged window `s_i[t+τ, t+W+τ)`. Each
//! Pearson coefficient above the threshold counts as evidence and their sum
//! is the window's influence weight `w_ij`; positive weights accumulate
//! into the matrix at [leader row, follower column] across all windows.
//! Heading windows are unwrapped first so the 0/360 seam cannot corrupt the
//! correlation. Zero-variance segments are treated as non-significant, not
//! as errors.

use std::borrow::Cow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::influence::InfluenceMatrix;
use crate::methods::{is_constant, window_starts, DetectionEvent, MethodOutput};
use crate::trajectory::{unwrap_heading, Kinematics, KinematicWindow, TrajectorySet, Variable};

#[derive(Debug, Clone)]
pub struct NetInferConfig {
    /// Correlation window length W, in kinematic ticks.
    pub window: usize,
    /// Time lag τ between leader and follower windows.
    pub lag: usize,
    /// Pearson threshold θ; only r > θ counts (strict, one-sided).
    pub threshold: f64,
    /// Kinematic variables entering the influence sum.
    pub variables: Vec<Variable>,
    /// Offset between consecutive windows; `None` means non-overlapping
    /// windows (stride = W).
    pub stride: Option<usize>,
    /// Unwrap heading windows before correlating. Unwrapping protects
    /// genuinely coupled pairs whose headings straddle the 0/360 seam, but
    /// it also turns wandering headings into unbounded random walks, whose
    /// windowed correlations are spuriously large between unrelated agents.
    /// Raw headings only discard pairs that straddle the seam, which is the
    /// conservative direction.
    pub unwrap_heading: bool,
}

impl Default for NetInferConfig {
    fn default() -> Self {
        Self {
            window: 50,
            lag: 1,
            threshold: 0.85,
            variables: Variable::ALL.to_vec(),
            stride: None,
            unwrap_heading: true,
        }
    }
}

impl NetInferConfig {
    pub fn effective_stride(&self) -> usize {
        self.stride.unwrap_or(self.window)
    }

    pub fn validate(&self) -> Result<()> {
        if self.window < 3 {
            return Err(Error::InvalidConfig("window must be >= 3".into()));
        }
        if self.lag < 1 {
            return Err(Error::InvalidConfig("lag must be >= 1".into()));
        }
        if !(self.threshold > 0.0 && self.threshold < 1.0) {
            return Err(Error::InvalidConfig("threshold must be in (0, 1)".into()));
        }
        if self.variables.is_empty() {
            return Err(Error::InvalidConfig("variables must be nonempty".into()));
        }
        if self.effective_stride() == 0 {
            return Err(Error::InvalidConfig("stride must be >= 1".into()));
        }
        Ok(())
    }
}

/// Pearson correlation of `leader[0..n-lag)` against `follower[lag..n)`.
///
/// Returns `Ok(None)` when either aligned segment has zero standard
/// deviation (all samples equal), per the estimator's degeneracy guard.
pub fn lagged_pearson(leader: &[f64], follower: &[f64], lag: usize) -> Result<Option<f64>> {
    if leader.len() != follower.len() {
        return Err(Error::Alignment(format!(
            "lagged series lengths differ: {} vs {}",
            leader.len(),
            follower.len()
        )));
    }
    let n = leader.len().saturating_sub(lag);
    if n < 2 {
        return Err(Error::InsufficientData {
            what: "aligned samples for correlation",
            required: lag + 2,
            actual: leader.len(),
        });
    }
    Ok(pearson_guarded(&leader[..n], &follower[lag..lag + n]))
}

/// Plain Pearson with the zero-variance guard. Zero standard deviation is
/// detected exactly: a segment is degenerate iff all its samples are equal.
fn pearson_guarded(x: &[f64], y: &[f64]) -> Option<f64> {
    if is_constant(x) || is_constant(y) {
        return None;
    }
    let n = x.len() as f64;
    let mean_x = x.iter().sum::<f64>() / n;
    let mean_y = y.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        let dx = xi - mean_x;
        let dy = yi - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx.sqrt() * syy.sqrt()))
}

/// Influence weight of `leader` on `follower` over one window: the sum of
/// per-variable correlations that pass the threshold. Both windows must
/// span `W + lag` ticks. Undefined correlations contribute 0.
pub fn window_influence(
    leader: &KinematicWindow<'_>,
    follower: &KinematicWindow<'_>,
    cfg: &NetInferConfig,
) -> Result<f64> {
    if leader.len() != follower.len() || leader.len() != cfg.window + cfg.lag {
        return Err(Error::Alignment(format!(
            "window spans must equal W + lag = {}: got {} and {}",
            cfg.window + cfg.lag,
            leader.len(),
            follower.len()
        )));
    }
    let lead_ch = prepare_channels(leader, cfg);
    let foll_ch = prepare_channels(follower, cfg);
    Ok(influence_from_channels(&lead_ch, &foll_ch, cfg))
}

fn prepare_channels<'a>(
    window: &KinematicWindow<'a>,
    cfg: &NetInferConfig,
) -> Vec<Cow<'a, [f64]>> {
    cfg.variables
        .iter()
        .map(|&var| {
            let raw = window.channel(var);
            if var == Variable::Heading && cfg.unwrap_heading {
                Cow::Owned(unwrap_heading(raw))
            } else {
                Cow::Borrowed(raw)
            }
        })
        .collect()
}

fn influence_from_channels(
    leader: &[Cow<'_, [f64]>],
    follower: &[Cow<'_, [f64]>],
    cfg: &NetInferConfig,
) -> f64 {
    let mut w = 0.0;
    for (lead, foll) in leader.iter().zip(follower) {
        if let Ok(Some(r)) = lagged_pearson(lead, foll, cfg.lag) {
            if r > cfg.threshold {
                w += r;
            }
        }
    }
    w
}

/// Runs the full windowed inference over a trajectory set and returns the
/// accumulated influence matrix with its detection events.
pub fn infer(ts: &TrajectorySet, cfg: &NetInferConfig) -> Result<MethodOutput> {
    cfg.validate()?;
    let kin = ts.derive_kinematics()?;
    infer_kinematics(&kin, cfg)
}

/// [`infer`] on pre-derived kinematics.
pub fn infer_kinematics(kin: &Kinematics, cfg: &NetInferConfig) -> Result<MethodOutput> {
    cfg.validate()?;
    let span = cfg.window + cfg.lag;
    if kin.len() < span {
        return Err(Error::InsufficientData {
            what: "aligned kinematic ticks (need window + lag)",
            required: span,
            actual: kin.len(),
        });
    }
    let starts = window_starts(kin.len(), span, cfg.effective_stride());
    let n = kin.agent_count();

    // Per-window, per-agent channel views; heading is unwrapped per window.
    let prepared: Vec<Vec<Vec<Cow<'_, [f64]>>>> = starts
        .iter()
        .map(|&t0| {
            (0..n)
                .map(|a| {
                    let w = kin
                        .series_at(a)
                        .window(t0, span)
                        .expect("window grid is in range");
                    prepare_channels(&w, cfg)
                })
                .collect()
        })
        .collect();

    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..n).filter(move |&i| i != j).map(move |i| (j, i)))
        .collect();

    // Each ordered pair owns one matrix entry; windows accumulate in
    // ascending order so results are bit-reproducible under any parallel
    // schedule.
    let per_pair: Vec<(f64, Vec<DetectionEvent>)> = pairs
        .par_iter()
        .map(|&(j, i)| {
            let mut total = 0.0;
            let mut events = Vec::new();
            for (w_idx, windows) in prepared.iter().enumerate() {
                let w = influence_from_channels(&windows[j], &windows[i], cfg);
                if w > 0.0 {
                    total += w;
                    events.push(DetectionEvent {
                        window_index: w_idx,
                        source: kin.agent_ids()[j],
                        target: kin.agent_ids()[i],
                        weight: w,
                    });
                }
            }
            (total, events)
        })
        .collect();

    let mut matrix = InfluenceMatrix::zeros(kin.agent_ids().to_vec())?;
    let mut events = Vec::new();
    for (&(j, i), (total, pair_events)) in pairs.iter().zip(per_pair) {
        if total > 0.0 {
            matrix.add_at(j, i, total);
        }
        events.extend(pair_events);
    }
    Ok(MethodOutput {
        matrix,
        events,
        window_count: starts.len(),
    })
}
