//! Transfer entropy via k-nearest-neighbor conditional mutual information.
//!
//! With a history length of 1, the transfer entropy from source Y to
//! destination X is the conditional mutual information
//! `I(X_t ; Y_{t-1} | X_{t-1})`, estimated without discretization by
//! neighbor counting: for each sample, take the distance to its k-th
//! nearest neighbor in the joint space under the max-norm, count strictly
//! closer points in the (x,z), (y,z), and (z) marginal spaces, and average
//! digamma terms:
//!
//! ```text
//! CMI ≈ ψ(k) + ⟨ ψ(n_z + 1) − ψ(n_xz + 1) − ψ(n_yz + 1) ⟩
//! ```
//!
//! Values are in nats. A deterministic, data-hashed jitter of 1e-10 of each
//! coordinate's range is added before counting so that exact ties from
//! discretized simulator output break reproducibly.
//!
//! Edge detection mirrors the network-inference protocol: per window,
//! ordered pair, and variable, the net flow `ΔTE = TE_{j→i} − TE_{i→j}` is
//! thresholded, and the passing deltas sum into the window's edge weight at
//! [leader row, follower column]. Thresholding per variable parallels the
//! correlation method's per-variable evidence rule; averaging first would
//! let one degenerate channel (a constant-speed agent has no speed or
//! acceleration information) drown the channels that do carry signal.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::influence::InfluenceMatrix;
use crate::methods::{is_constant, window_starts, DetectionEvent, MethodOutput};
use crate::trajectory::{Kinematics, TrajectorySet, Variable};

#[derive(Debug, Clone)]
pub struct TeConfig {
    /// History length of the conditioning past. Only 1 is implemented;
    /// higher embeddings are a config hook, not a supported path.
    pub embedding: usize,
    /// Neighbor count k of the estimator.
    pub k_neighbors: usize,
    /// Net-flow threshold: an edge needs ΔTE > delta_threshold (nats).
    pub delta_threshold: f64,
    /// Window length in kinematic ticks.
    pub window: usize,
    /// `None` = non-overlapping windows.
    pub stride: Option<usize>,
    /// Scalar variables entering the per-pair average.
    pub variables: Vec<Variable>,
}

impl Default for TeConfig {
    fn default() -> Self {
        Self {
            embedding: 1,
            k_neighbors: 4,
            delta_threshold: 0.2,
            window: 50,
            stride: None,
            variables: Variable::SCALAR.to_vec(),
        }
    }
}

impl TeConfig {
    pub fn effective_stride(&self) -> usize {
        self.stride.unwrap_or(self.window)
    }

    pub fn validate(&self) -> Result<()> {
        if self.embedding < 1 {
            return Err(Error::InvalidConfig("embedding must be >= 1".into()));
        }
        if self.k_neighbors < 1 {
            return Err(Error::InvalidConfig("k_neighbors must be >= 1".into()));
        }
        if self.window <= self.k_neighbors + self.embedding + 2 {
            return Err(Error::InvalidConfig(format!(
                "window must exceed k_neighbors + embedding + 2 = {}",
                self.k_neighbors + self.embedding + 2
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
                "transfer entropy operates on scalar variables only, got {v}"
            )));
        }
        if self.effective_stride() == 0 {
            return Err(Error::InvalidConfig("stride must be >= 1".into()));
        }
        Ok(())
    }
}

const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

/// ψ(m) for integers 1..=max via the harmonic recurrence
/// ψ(1) = −γ, ψ(m+1) = ψ(m) + 1/m.
fn digamma_table(max: usize) -> Vec<f64> {
    let mut table = vec![0.0; max + 1];
    if max >= 1 {
        table[1] = -EULER_MASCHERONI;
    }
    for m in 1..max {
        table[m + 1] = table[m] + 1.0 / m as f64;
    }
    table
}

fn fnv1a_mix(mut hash: u64, value: u64) -> u64 {
    for byte in value.to_le_bytes() {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x100_0000_01b3);
    }
    hash
}

/// Deterministic tie-breaking jitter: each coordinate vector is perturbed
/// by uniforms in `[0, 1e-10 · range)` seeded from a hash of its own bits
/// and its role in the triple.
fn jittered(values: &[f64], role: u64) -> Vec<f64> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let range = hi - lo;
    if range == 0.0 {
        return values.to_vec();
    }
    let mut hash = fnv1a_mix(0xcbf2_9ce4_8422_2325, role);
    for &v in values {
        hash = fnv1a_mix(hash, v.to_bits());
    }
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(hash);
    values
        .iter()
        .map(|&v| v + rng.gen::<f64>() * 1e-10 * range)
        .collect()
}

/// Conditional mutual information I(X;Y|Z) in nats, estimated by neighbor
/// counting with strict-inequality radii. Points at exactly the k-th
/// neighbor distance are excluded from the marginal counts; the jitter
/// makes such ties vanishingly rare.
pub fn ksg_cmi(x: &[f64], y: &[f64], z: &[f64], k: usize) -> Result<f64> {
    let n = x.len();
    if y.len() != n || z.len() != n {
        return Err(Error::Alignment(format!(
            "cmi inputs must share a length: {} / {} / {}",
            n,
            y.len(),
            z.len()
        )));
    }
    if k < 1 {
        return Err(Error::InvalidConfig("k must be >= 1".into()));
    }
    if n < k + 2 {
        return Err(Error::InsufficientData {
            what: "samples for the kNN estimator",
            required: k + 2,
            actual: n,
        });
    }
    for series in [x, y, z] {
        if series.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("non-finite sample in cmi input".into()));
        }
    }

    let xj = jittered(x, 0);
    let yj = jittered(y, 1);
    let zj = jittered(z, 2);
    let psi = digamma_table(n);

    let mut dx = vec![0.0; n];
    let mut dy = vec![0.0; n];
    let mut dz = vec![0.0; n];
    let mut joint = vec![0.0; n];
    let mut scratch = vec![0.0; n];
    let mut acc = 0.0;
    for i in 0..n {
        let (xi, yi, zi) = (xj[i], yj[i], zj[i]);
        for j in 0..n {
            let ax = (xj[j] - xi).abs();
            let ay = (yj[j] - yi).abs();
            let az = (zj[j] - zi).abs();
            dx[j] = ax;
            dy[j] = ay;
            dz[j] = az;
            joint[j] = ax.max(ay).max(az);
        }
        joint[i] = f64::INFINITY;
        scratch.copy_from_slice(&joint);
        let (_, kth, _) =
            scratch.select_nth_unstable_by(k - 1, |a, b| a.partial_cmp(b).expect("finite"));
        let radius = *kth;

        let mut n_xz = 0usize;
        let mut n_yz = 0usize;
        let mut n_z = 0usize;
        for j in 0..n {
            if j == i {
                continue;
            }
            if dz[j] < radius {
                n_z += 1;
                if dx[j] < radius {
                    n_xz += 1;
                }
                if dy[j] < radius {
                    n_yz += 1;
                }
            }
        }
        acc += psi[n_z + 1] - psi[n_xz + 1] - psi[n_yz + 1];
    }
    Ok(psi[k] + acc / n as f64)
}

/// Transfer entropy TE_{source→dest} in nats over one window, clipped below
/// at 0. A constant source or destination is degenerate and yields 0.
pub fn transfer_entropy(source: &[f64], dest: &[f64], cfg: &TeConfig) -> Result<f64> {
    if cfg.embedding != 1 {
        return Err(Error::InvalidConfig(
            "only embedding 1 is implemented".into(),
        ));
    }
    if source.len() != dest.len() {
        return Err(Error::Alignment(format!(
            "source and dest lengths differ: {} vs {}",
            source.len(),
            dest.len()
        )));
    }
    let n = dest.len();
    if n < cfg.k_neighbors + 3 {
        return Err(Error::InsufficientData {
            what: "window samples for transfer entropy",
            required: cfg.k_neighbors + 3,
            actual: n,
        });
    }
    if is_constant(source) || is_constant(dest) {
        return Ok(0.0);
    }
    let x_future = &dest[1..];
    let y_past = &source[..n - 1];
    let x_past = &dest[..n - 1];
    let cmi = ksg_cmi(x_future, y_past, x_past, cfg.k_neighbors)?;
    Ok(cmi.max(0.0))
}

/// Windowed net-transfer-entropy inference over a trajectory set.
pub fn te_infer(ts: &TrajectorySet, cfg: &TeConfig) -> Result<MethodOutput> {
    cfg.validate()?;
    let kin = ts.derive_kinematics()?;
    te_infer_kinematics(&kin, cfg)
}

/// [`te_infer`] on pre-derived kinematics.
pub fn te_infer_kinematics(kin: &Kinematics, cfg: &TeConfig) -> Result<MethodOutput> {
    cfg.validate()?;
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

    // Each unordered pair owns both directed entries; ΔTE is computed once
    // from the same two estimates, so antisymmetry is exact.
    let per_pair: Result<Vec<(f64, f64, Vec<DetectionEvent>)>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let mut weight_ab = 0.0;
            let mut weight_ba = 0.0;
            let mut events = Vec::new();
            for (w_idx, &t0) in starts.iter().enumerate() {
                // Per-variable net flow; each passing delta is evidence,
                // summed into the window's edge weight (both estimates are
                // reused for both directions, so ΔTE is exactly
                // antisymmetric).
                let mut win_ab = 0.0;
                let mut win_ba = 0.0;
                for &var in &cfg.variables {
                    let sa = &kin.series_at(a).channel(var)[t0..t0 + cfg.window];
                    let sb = &kin.series_at(b).channel(var)[t0..t0 + cfg.window];
                    let te_ab = transfer_entropy(sa, sb, cfg)?;
                    let te_ba = transfer_entropy(sb, sa, cfg)?;
                    let delta = te_ab - te_ba;
                    if delta > cfg.delta_threshold {
                        win_ab += delta;
                    } else if -delta > cfg.delta_threshold {
                        win_ba += -delta;
                    }
                }
                if win_ab > 0.0 {
                    weight_ab += win_ab;
                    events.push(DetectionEvent {
                        window_index: w_idx,
                        source: kin.agent_ids()[a],
                        target: kin.agent_ids()[b],
                        weight: win_ab,
                    });
                }
                if win_ba > 0.0 {
                    weight_ba += win_ba;
                    events.push(DetectionEvent {
                        window_index: w_idx,
                        source: kin.agent_ids()[b],
                        target: kin.agent_ids()[a],
                        weight: win_ba,
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
