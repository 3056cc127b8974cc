//! Time-lagged mutual information with equal-width binning.
//!
//! MI is the plug-in estimate over a joint histogram: each series is
//! discretized independently into equal-width bins spanning its own
//! min–max range, and `MI = Σ p(a,b)·log2(p(a,b)/(p(a)p(b)))` over occupied
//! cells, in bits. Cell terms are summed in value order, which makes the
//! estimator exactly symmetric in its arguments.
//!
//! The estimator itself is symmetric, so direction comes from the lag
//! structure: scanning positive lags pairs the follower's present with the
//! leader candidate's past, and an edge j→i requires both the peak MI to
//! clear the threshold and a strict asymmetry `m_{j→i} > m_{i→j}`. A tie
//! carries no directional evidence and yields no edge.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::influence::InfluenceMatrix;
use crate::methods::{window_starts, DetectionEvent, MethodOutput};
use crate::trajectory::{AgentId, Kinematics, TrajectorySet, Variable};

#[derive(Debug, Clone)]
pub struct TlmiConfig {
    /// Equal-width bin count per series per window.
    pub bins: usize,
    /// Lag scan range; negative lags appear in diagnostics profiles only.
    pub lag_min: i64,
    pub lag_max: i64,
    /// Peak MI must exceed this (bits) for an edge.
    pub mi_threshold: f64,
    /// Window length in kinematic ticks.
    pub window: usize,
    /// `None` = non-overlapping windows.
    pub stride: Option<usize>,
    /// Scalar variables entering the per-pair average.
    pub variables: Vec<Variable>,
}

impl Default for TlmiConfig {
    fn default() -> Self {
        Self {
            bins: 5,
            lag_min: -5,
            lag_max: 5,
            mi_threshold: 0.3,
            window: 50,
            stride: None,
            variables: Variable::SCALAR.to_vec(),
        }
    }
}

impl TlmiConfig {
    pub fn effective_stride(&self) -> usize {
        self.stride.unwrap_or(self.window)
    }

    pub fn validate(&self) -> Result<()> {
        if self.bins < 2 {
            return Err(Error::InvalidConfig("bins must be >= 2".into()));
        }
        if !(self.lag_min <= 0 && 0 <= self.lag_max) {
            return Err(Error::InvalidConfig(
                "lag range must satisfy lag_min <= 0 <= lag_max".into(),
            ));
        }
        let spread = (self.lag_max - self.lag_min) as usize;
        if self.window <= spread + 2 {
            return Err(Error::InvalidConfig(format!(
                "window must exceed lag_max - lag_min + 2 = {}",
                spread + 2
            )));
        }
        if self.variables.is_empty() {
            return Err(Error::InvalidConfig("variables must be nonempty".into()));
        }
        if let Some(v) = self
            .variables
            .iter()
            .find(|v| !Variable::SCALAR.contains(v))
        {
            return Err(Error::InvalidConfig(format!(
                "tlmi operates on scalar variables only, got {v}"
            )));
        }
        if self.effective_stride() == 0 {
            return Err(Error::InvalidConfig("stride must be >= 1".into()));
        }
        Ok(())
    }
}

fn bin_indices(series: &[f64], bins: usize) -> Vec<usize> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in series {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if hi == lo {
        return vec![0; series.len()];
    }
    let width = (hi - lo) / bins as f64;
    series
        .iter()
        .map(|&v| (((v - lo) / width) as usize).min(bins - 1))
        .collect()
}

/// Plug-in mutual information in bits over equal-width bins. Exactly
/// symmetric in its arguments and clamped into `[0, log2 bins]`.
pub fn binned_mi(x: &[f64], y: &[f64], bins: usize) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::Alignment(format!(
            "mi inputs must share a length: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if bins < 2 {
        return Err(Error::InvalidConfig("bins must be >= 2".into()));
    }
    let n = x.len();
    if n < bins {
        return Err(Error::InsufficientData {
            what: "samples for binned MI",
            required: bins,
            actual: n,
        });
    }
    for series in [x, y] {
        if series.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite sample in mi input".into()));
        }
    }

    let bx = bin_indices(x, bins);
    let by = bin_indices(y, bins);
    let mut joint = vec![0u64; bins * bins];
    let mut marg_x = vec![0u64; bins];
    let mut marg_y = vec![0u64; bins];
    for (&a, &b) in bx.iter().zip(&by) {
        joint[a * bins + b] += 1;
        marg_x[a] += 1;
        marg_y[b] += 1;
    }

    let nf = n as f64;
    let mut terms = Vec::with_capacity(bins * bins);
    for a in 0..bins {
        for b in 0..bins {
            let c = joint[a * bins + b];
            if c > 0 {
                let p = c as f64 / nf;
                let ratio = (c as f64 * nf) / (marg_x[a] as f64 * marg_y[b] as f64);
                terms.push(p * ratio.log2());
            }
        }
    }
    // Value-ordered summation: the term multiset is invariant under
    // argument swap, so the sum is bit-identical either way.
    terms.sort_by(|u, v| u.total_cmp(v));
    let mi: f64 = terms.iter().sum();
    Ok(mi.clamp(0.0, (bins as f64).log2()))
}

/// Full lag profile `I_τ(X;Y)` for τ in `[lag_min, lag_max]`, pairing `x_t`
/// with `y_{t−τ}` and trimming |τ| samples per lag.
pub fn lag_scan(x: &[f64], y: &[f64], cfg: &TlmiConfig) -> Result<Vec<(i64, f64)>> {
    if x.len() != y.len() {
        return Err(Error::Alignment(format!(
            "lag scan inputs must share a length: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    let n = x.len();
    let mut out = Vec::with_capacity((cfg.lag_max - cfg.lag_min + 1) as usize);
    for tau in cfg.lag_min..=cfg.lag_max {
        let k = tau.unsigned_abs() as usize;
        if n <= k {
            return Err(Error::InsufficientData {
                what: "samples for the lag scan",
                required: k + 1,
                actual: n,
            });
        }
        let mi = if tau >= 0 {
            binned_mi(&x[k..], &y[..n - k], cfg.bins)?
        } else {
            binned_mi(&x[..n - k], &y[k..], cfg.bins)?
        };
        out.push((tau, mi));
    }
    Ok(out)
}

/// Peak MI over strictly positive lags of "follower present vs leader
/// past"; the direction signal of the method.
fn peak_positive_lag_mi(
    leader: &[f64],
    follower: &[f64],
    bins: usize,
    lag_max: i64,
) -> Result<f64> {
    let n = follower.len();
    let mut best = 0.0f64;
    for tau in 1..=lag_max {
        let k = tau as usize;
        let mi = binned_mi(&follower[k..], &leader[..n - k], bins)?;
        best = best.max(mi);
    }
    Ok(best)
}

/// Windowed time-lagged MI inference over a trajectory set.
pub fn tlmi_infer(ts: &TrajectorySet, cfg: &TlmiConfig) -> Result<MethodOutput> {
    cfg.validate()?;
    let kin = ts.derive_kinematics()?;
    tlmi_infer_kinematics(&kin, cfg)
}

/// [`tlmi_infer`] on pre-derived kinematics.
pub fn tlmi_infer_kinematics(kin: &Kinematics, cfg: &TlmiConfig) -> Result<MethodOutput> {
    cfg.validate()?;
    if cfg.lag_max < 1 {
        return Err(Error::InvalidConfig(
            "direction inference needs lag_max >= 1".into(),
        ));
    }
    if kin.len() < cfg.window {
        return Err(Error::InsufficientData {
            what: "aligned kinematic ticks (need one window)",
            required: cfg.window,
            actual: kin.len(),
        });
    }
    let starts = window_starts(kin.len(), cfg.window, cfg.effective_stride());
    let n = kin.agent_count();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();

    let per_pair: Result<Vec<(f64, f64, Vec<DetectionEvent>)>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let mut weight_ab = 0.0;
            let mut weight_ba = 0.0;
            let mut events = Vec::new();
            for (w_idx, &t0) in starts.iter().enumerate() {
                let mut m_ab = 0.0;
                let mut m_ba = 0.0;
                for &var in &cfg.variables {
                    let sa = &kin.series_at(a).channel(var)[t0..t0 + cfg.window];
                    let sb = &kin.series_at(b).channel(var)[t0..t0 + cfg.window];
                    m_ab += peak_positive_lag_mi(sa, sb, cfg.bins, cfg.lag_max)?;
                    m_ba += peak_positive_lag_mi(sb, sa, cfg.bins, cfg.lag_max)?;
                }
                let vars = cfg.variables.len() as f64;
                let m_ab = m_ab / vars;
                let m_ba = m_ba / vars;
                if m_ab > cfg.mi_threshold && m_ab > m_ba {
                    weight_ab += m_ab;
                    events.push(DetectionEvent {
                        window_index: w_idx,
                        source: kin.agent_ids()[a],
                        target: kin.agent_ids()[b],
                        weight: m_ab,
                    });
                } else if m_ba > cfg.mi_threshold && m_ba > m_ab {
                    weight_ba += m_ba;
                    events.push(DetectionEvent {
                        window_index: w_idx,
                        source: kin.agent_ids()[b],
                        target: kin.agent_ids()[a],
                        weight: m_ba,
                    });
                }
            }
            Ok((weight_ab, weight_ba, events))
        })
        .collect();
    let per_pair = per_pair?;

    let mut matrix = InfluenceMatrix::zeros(kin.agent_ids().to_vec())?;
    let mut events = Vec::new();
    for (&(a, b), (weight_ab, weight_ba, pair_events)) in pairs.iter().zip(per_pair) {
        if weight_ab > 0.0 {
            matrix.add_at(a, b, weight_ab);
        }
        if weight_ba > 0.0 {
            matrix.add_at(b, a, weight_ba);
        }
        events.extend(pair_events);
    }
    Ok(MethodOutput {
        matrix,
        events,
        window_count: starts.len(),
    })
}

/// Per-pair, per-variable lag profiles averaged across windows; diagnostics
/// behind the optional profile export.
#[derive(Debug, Clone)]
pub struct LagProfile {
    pub src: AgentId,
    pub dst: AgentId,
    pub variable: Variable,
    /// `(lag, mean MI across windows)` for every lag in the configured range.
    pub profile: Vec<(i64, f64)>,
}

pub fn lag_profiles(ts: &TrajectorySet, cfg: &TlmiConfig) -> Result<Vec<LagProfile>> {
    cfg.validate()?;
    let kin = ts.derive_kinematics()?;
    if kin.len() < cfg.window {
        return Err(Error::InsufficientData {
            what: "aligned kinematic ticks (need one window)",
            required: cfg.window,
            actual: kin.len(),
        });
    }
    let starts = window_starts(kin.len(), cfg.window, cfg.effective_stride());
    let n = kin.agent_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for &var in &cfg.variables {
                let mut sums: Vec<(i64, f64)> =
                    (cfg.lag_min..=cfg.lag_max).map(|tau| (tau, 0.0)).collect();
                for &t0 in &starts {
                    // x = destination present, y = source past.
                    let sx = &kin.series_at(b).channel(var)[t0..t0 + cfg.window];
                    let sy = &kin.series_at(a).channel(var)[t0..t0 + cfg.window];
                    for (slot, (_, mi)) in lag_scan(sx, sy, cfg)?.into_iter().enumerate() {
                        sums[slot].1 += mi;
                    }
                }
                let count = starts.len() as f64;
                for s in &mut sums {
                    s.1 /= count;
                }
                out.push(LagProfile {
                    src: kin.agent_ids()[a],
                    dst: kin.agent_ids()[b],
                    variable: var,
                    profile: sums,
                });
            }
        }
    }
    Ok(out)
}
