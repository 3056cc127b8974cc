//! Trajectory data model and kinematics.
//!
//! A [`TrajectorySet`] holds per-agent position tracks plus role labels and
//! is the interchange currency between simulators and detection methods.
//! Analysis never consumes raw positions directly: [`TrajectorySet::derive_kinematics`]
//! turns tracks into per-tick velocity components, scalar speed, acceleration
//! and heading, aligned across agents so every method sees identical sample
//! counts.
//!
//! The trajectory CSV schema is `tick,agent_id,role,x,y`, one row per
//! `(tick, agent)`, rows sorted by tick then agent id, floats written with
//! 17 significant digits so a write/read round trip is bit-exact.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write as _};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Identifier of one agent, unique within a [`TrajectorySet`] and stable
/// across a whole run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AgentId(pub u32);

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Role label attached by the simulators and carried through the CSV format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Role {
    Leader,
    Follower,
    Alpha,
    Pack,
    Independent,
    Sheep,
    None,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Leader => "leader",
            Role::Follower => "follower",
            Role::Alpha => "alpha",
            Role::Pack => "pack",
            Role::Independent => "independent",
            Role::Sheep => "sheep",
            Role::None => "none",
        }
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "leader" => Ok(Role::Leader),
            "follower" => Ok(Role::Follower),
            "alpha" => Ok(Role::Alpha),
            "pack" => Ok(Role::Pack),
            "independent" => Ok(Role::Independent),
            "sheep" => Ok(Role::Sheep),
            "none" => Ok(Role::None),
            other => Err(format!("unknown role {other:?}")),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A position in world units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

/// The kinematic variables derived from positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Variable {
    Vx,
    Vy,
    Speed,
    Acc,
    Heading,
}

impl Variable {
    /// All five variables in canonical order.
    pub const ALL: [Variable; 5] = [
        Variable::Vx,
        Variable::Vy,
        Variable::Speed,
        Variable::Acc,
        Variable::Heading,
    ];

    /// The scalar subset used by the information-theoretic baselines.
    pub const SCALAR: [Variable; 3] = [Variable::Speed, Variable::Acc, Variable::Heading];

    pub fn as_str(self) -> &'static str {
        match self {
            Variable::Vx => "vx",
            Variable::Vy => "vy",
            Variable::Speed => "speed",
            Variable::Acc => "acc",
            Variable::Heading => "heading",
        }
    }
}

impl FromStr for Variable {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "vx" => Ok(Variable::Vx),
            "vy" => Ok(Variable::Vy),
            "speed" | "vel" => Ok(Variable::Speed),
            "acc" => Ok(Variable::Acc),
            "heading" | "dir" => Ok(Variable::Heading),
            other => Err(format!("unknown variable {other:?}")),
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One tick of derived kinematics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicRecord {
    /// x velocity component, units/tick.
    pub vx: f64,
    /// y velocity component, units/tick.
    pub vy: f64,
    /// Scalar speed, `hypot(vx, vy)`.
    pub speed: f64,
    /// Speed change since the previous tick.
    pub acc: f64,
    /// Movement direction in degrees, `[0, 360)`.
    pub heading: f64,
}

/// One agent's aligned kinematic series, stored column-wise so methods can
/// slice a variable without copying.
#[derive(Debug, Clone, PartialEq)]
pub struct KinematicSeries {
    vx: Vec<f64>,
    vy: Vec<f64>,
    speed: Vec<f64>,
    acc: Vec<f64>,
    heading: Vec<f64>,
}

impl KinematicSeries {
    /// Assembles a series from raw channels; lengths must match.
    #[cfg(test)]
    pub(crate) fn from_channels(
        vx: Vec<f64>,
        vy: Vec<f64>,
        speed: Vec<f64>,
        acc: Vec<f64>,
        heading: Vec<f64>,
    ) -> Self {
        assert!(
            vx.len() == vy.len()
                && vx.len() == speed.len()
                && vx.len() == acc.len()
                && vx.len() == heading.len()
        );
        Self {
            vx,
            vy,
            speed,
            acc,
            heading,
        }
    }

    pub fn len(&self) -> usize {
        self.vx.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vx.is_empty()
    }

    pub fn record(&self, t: usize) -> KinematicRecord {
        KinematicRecord {
            vx: self.vx[t],
            vy: self.vy[t],
            speed: self.speed[t],
            acc: self.acc[t],
            heading: self.heading[t],
        }
    }

    /// The full column for one variable.
    pub fn channel(&self, var: Variable) -> &[f64] {
        match var {
            Variable::Vx => &self.vx,
            Variable::Vy => &self.vy,
            Variable::Speed => &self.speed,
            Variable::Acc => &self.acc,
            Variable::Heading => &self.heading,
        }
    }

    /// Exactly `len` consecutive records starting at `start`, as a borrowed
    /// view. Extraction never copies or mutates the series.
    pub fn window(&self, start: usize, len: usize) -> Result<KinematicWindow<'_>> {
        if start.checked_add(len).map_or(true, |end| end > self.len()) {
            return Err(Error::WindowRange {
                start,
                len,
                series_len: self.len(),
            });
        }
        Ok(KinematicWindow {
            series: self,
            start,
            len,
        })
    }
}

/// A borrowed window of a [`KinematicSeries`].
#[derive(Debug, Clone, Copy)]
pub struct KinematicWindow<'a> {
    series: &'a KinematicSeries,
    start: usize,
    len: usize,
}

impl<'a> KinematicWindow<'a> {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn record(&self, i: usize) -> KinematicRecord {
        assert!(i < self.len);
        self.series.record(self.start + i)
    }

    pub fn channel(&self, var: Variable) -> &'a [f64] {
        &self.series.channel(var)[self.start..self.start + self.len]
    }
}

/// Aligned kinematics for a set of agents: every series has the same length
/// and covers original ticks `2..T` (the first two ticks are consumed by
/// differencing).
#[derive(Debug, Clone)]
pub struct Kinematics {
    ids: Vec<AgentId>,
    series: Vec<KinematicSeries>,
    len: usize,
}

impl Kinematics {
    /// Agent ids in ascending order, parallel to [`Kinematics::series_at`].
    pub fn agent_ids(&self) -> &[AgentId] {
        &self.ids
    }

    pub fn agent_count(&self) -> usize {
        self.ids.len()
    }

    /// Shared length of every series.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn series_at(&self, idx: usize) -> &KinematicSeries {
        &self.series[idx]
    }

    pub fn series_for(&self, id: AgentId) -> Option<&KinematicSeries> {
        let idx = self.ids.binary_search(&id).ok()?;
        Some(&self.series[idx])
    }
}

/// One agent's track: id, role label, and positions for contiguous ticks
/// starting at 0. Tracks may end early (a consumed prey agent stops
/// producing records).
#[derive(Debug, Clone, PartialEq)]
pub struct AgentTrack {
    id: AgentId,
    role: Role,
    positions: Vec<Point>,
}

impl AgentTrack {
    pub fn new(id: AgentId, role: Role, positions: Vec<Point>) -> Self {
        Self {
            id,
            role,
            positions,
        }
    }

    pub fn id(&self) -> AgentId {
        self.id
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// Per-agent time-indexed positions plus roles; immutable after
/// construction, so any number of workers may read it concurrently.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySet {
    tracks: Vec<AgentTrack>,
    tick_count: usize,
}

impl TrajectorySet {
    /// Builds a set from tracks; ids must be unique. Tracks are kept in
    /// ascending id order.
    pub fn from_tracks(mut tracks: Vec<AgentTrack>) -> Result<Self> {
        tracks.sort_by_key(|t| t.id);
        for pair in tracks.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(Error::InvalidInput(format!(
                    "duplicate agent id {}",
                    pair[0].id
                )));
            }
        }
        let tick_count = tracks.iter().map(|t| t.len()).max().unwrap_or(0);
        Ok(Self { tracks, tick_count })
    }

    /// Number of ticks covered by the longest track.
    pub fn tick_count(&self) -> usize {
        self.tick_count
    }

    pub fn agent_count(&self) -> usize {
        self.tracks.len()
    }

    /// Tracks in ascending agent-id order.
    pub fn tracks(&self) -> &[AgentTrack] {
        &self.tracks
    }

    pub fn track_for(&self, id: AgentId) -> Option<&AgentTrack> {
        let idx = self.tracks.binary_search_by_key(&id, |t| t.id).ok()?;
        Some(&self.tracks[idx])
    }

    pub fn agent_ids(&self) -> Vec<AgentId> {
        self.tracks.iter().map(|t| t.id).collect()
    }

    /// A new set containing only the tracks accepted by `keep`. The source
    /// set is untouched.
    pub fn select(&self, keep: impl Fn(&AgentTrack) -> bool) -> TrajectorySet {
        let tracks: Vec<AgentTrack> = self.tracks.iter().filter(|t| keep(t)).cloned().collect();
        let tick_count = tracks.iter().map(|t| t.len()).max().unwrap_or(0);
        TrajectorySet { tracks, tick_count }
    }

    /// Subset by role label.
    pub fn select_roles(&self, roles: &[Role]) -> TrajectorySet {
        self.select(|t| roles.contains(&t.role()))
    }

    /// Derives aligned kinematics by backward finite differences with
    /// Δt = 1 tick:
    ///
    /// * `vx_t = x_t − x_{t−1}`, `vy_t = y_t − y_{t−1}`
    /// * `speed_t = hypot(vx_t, vy_t)`
    /// * `acc_t = speed_t − speed_{t−1}`
    /// * `heading_t = atan2(vy_t, vx_t)` in degrees `[0, 360)`; when
    ///   `speed_t = 0` the previous heading is retained (0 at the start of a
    ///   stationary track) so undefined directions never inject jumps.
    ///
    /// All series are aligned on original ticks `2..T`, giving every agent
    /// the same `T − 2` samples.
    pub fn derive_kinematics(&self) -> Result<Kinematics> {
        let min_len = self.tracks.iter().map(|t| t.len()).min().unwrap_or(0);
        if min_len != self.tick_count {
            let detail: Vec<String> = self
                .tracks
                .iter()
                .filter(|t| t.len() != self.tick_count)
                .take(4)
                .map(|t| format!("agent {} has {} ticks of {}", t.id, t.len(), self.tick_count))
                .collect();
            return Err(Error::Alignment(detail.join("; ")));
        }
        if !self.tracks.is_empty() && self.tick_count < 3 {
            return Err(Error::InsufficientData {
                what: "position samples per agent",
                required: 3,
                actual: self.tick_count,
            });
        }

        let mut ids = Vec::with_capacity(self.tracks.len());
        let mut series = Vec::with_capacity(self.tracks.len());
        for track in &self.tracks {
            ids.push(track.id);
            series.push(derive_series(track.positions()));
        }
        let len = self.tick_count.saturating_sub(2);
        Ok(Kinematics { ids, series, len })
    }
}

fn derive_series(positions: &[Point]) -> KinematicSeries {
    let t = positions.len();
    let out_len = t.saturating_sub(2);
    let mut series = KinematicSeries {
        vx: Vec::with_capacity(out_len),
        vy: Vec::with_capacity(out_len),
        speed: Vec::with_capacity(out_len),
        acc: Vec::with_capacity(out_len),
        heading: Vec::with_capacity(out_len),
    };
    let mut prev_speed = 0.0;
    let mut prev_heading = 0.0;
    for i in 1..t {
        let vx = positions[i].x - positions[i - 1].x;
        let vy = positions[i].y - positions[i - 1].y;
        let speed = vx.hypot(vy);
        let heading = if speed > 0.0 {
            vy.atan2(vx).to_degrees().rem_euclid(360.0)
        } else {
            prev_heading
        };
        if i >= 2 {
            series.vx.push(vx);
            series.vy.push(vy);
            series.speed.push(speed);
            series.acc.push(speed - prev_speed);
            series.heading.push(heading);
        }
        prev_speed = speed;
        prev_heading = heading;
    }
    series
}

/// Unwraps a heading window so consecutive differences have magnitude
/// ≤ 180°, making the circular variable safe for linear correlation. The
/// first value is kept; each later step is adjusted by ±360° as needed. A
/// raw step of exactly ±180° is left unadjusted.
pub fn unwrap_heading(values: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(values.len());
    let Some(&first) = values.first() else {
        return out;
    };
    out.push(first);
    for i in 1..values.len() {
        let mut d = values[i] - values[i - 1];
        if d > 180.0 {
            d -= 360.0;
        } else if d < -180.0 {
            d += 360.0;
        }
        out.push(out[i - 1] + d);
    }
    out
}

const CSV_HEADER: &str = "tick,agent_id,role,x,y";

fn format_float(v: f64) -> String {
    // 17 significant digits: lossless for every finite f64.
    format!("{v:.16e}")
}

/// Serializes a trajectory set in the interchange CSV schema. Rows are
/// sorted by tick then agent id.
pub fn trajectory_to_csv_string(set: &TrajectorySet) -> String {
    let mut out = String::with_capacity(64 + set.tracks.len() * set.tick_count * 48);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for tick in 0..set.tick_count {
        for track in &set.tracks {
            if let Some(p) = track.positions().get(tick) {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    tick,
                    track.id(),
                    track.role(),
                    format_float(p.x),
                    format_float(p.y)
                ));
            }
        }
    }
    out
}

pub fn write_trajectory_csv(set: &TrajectorySet, path: &Path) -> Result<()> {
    let file = File::create(path)?;
    let mut w = BufWriter::new(file);
    w.write_all(trajectory_to_csv_string(set).as_bytes())?;
    w.flush()?;
    Ok(())
}

pub fn read_trajectory_csv(path: &Path) -> Result<TrajectorySet> {
    let file = File::open(path)?;
    trajectory_from_csv(BufReader::new(file), &path.display().to_string())
}

/// Parses the trajectory CSV schema from any reader. `label` names the
/// source in error messages.
pub fn trajectory_from_csv(reader: impl BufRead, label: &str) -> Result<TrajectorySet> {
    let parse_err = |line: usize, msg: String| Error::CsvParse {
        path: label.to_string(),
        line,
        msg,
    };
    let schema_err = |msg: String| Error::CsvSchema {
        path: label.to_string(),
        msg,
    };

    let mut lines = reader.lines();
    let header = match lines.next() {
        Some(h) => h?,
        None => return Err(schema_err("empty file, expected header".into())),
    };
    if header.trim_end() != CSV_HEADER {
        return Err(parse_err(
            1,
            format!("bad header {header:?}, expected {CSV_HEADER:?}"),
        ));
    }

    struct Partial {
        role: Role,
        rows: Vec<(usize, Point)>,
    }
    let mut agents: BTreeMap<u32, Partial> = BTreeMap::new();

    for (idx, line) in lines.enumerate() {
        let line_no = idx + 2;
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(parse_err(
                line_no,
                format!("expected 5 fields, got {}", fields.len()),
            ));
        }
        let tick: usize = fields[0]
            .parse()
            .map_err(|e| parse_err(line_no, format!("bad tick {:?}: {e}", fields[0])))?;
        let agent: u32 = fields[1]
            .parse()
            .map_err(|e| parse_err(line_no, format!("bad agent_id {:?}: {e}", fields[1])))?;
        let role: Role = fields[2]
            .parse()
            .map_err(|e| parse_err(line_no, format!("bad role: {e}")))?;
        let x: f64 = fields[3]
            .parse()
            .map_err(|e| parse_err(line_no, format!("bad x {:?}: {e}", fields[3])))?;
        let y: f64 = fields[4]
            .parse()
            .map_err(|e| parse_err(line_no, format!("bad y {:?}: {e}", fields[4])))?;

        let entry = agents.entry(agent).or_insert_with(|| Partial {
            role,
            rows: Vec::new(),
        });
        if entry.role != role {
            return Err(schema_err(format!(
                "agent {agent} has conflicting roles {} and {}",
                entry.role, role
            )));
        }
        entry.rows.push((tick, Point { x, y }));
    }

    let mut tracks = Vec::with_capacity(agents.len());
    for (id, mut partial) in agents {
        partial.rows.sort_by_key(|(tick, _)| *tick);
        let mut positions = Vec::with_capacity(partial.rows.len());
        for (expected, (tick, p)) in partial.rows.iter().enumerate() {
            match tick.cmp(&expected) {
                std::cmp::Ordering::Less => {
                    return Err(schema_err(format!(
                        "duplicate record for agent {id} at tick {tick}"
                    )))
                }
                std::cmp::Ordering::Greater => {
                    return Err(schema_err(format!(
                        "agent {id} ticks not contiguous from 0: missing tick {expected}"
                    )))
                }
                std::cmp::Ordering::Equal => positions.push(*p),
            }
        }
        tracks.push(AgentTrack::new(AgentId(id), partial.role, positions));
    }
    TrajectorySet::from_tracks(tracks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn track(id: u32, role: Role, pts: &[(f64, f64)]) -> AgentTrack {
        AgentTrack::new(
            AgentId(id),
            role,
            pts.iter().map(|&(x, y)| Point { x, y }).collect(),
        )
    }

    #[test]
    fn stationary_agent_has_zero_kinematics_and_heading_zero() {
        let set =
            TrajectorySet::from_tracks(vec![track(0, Role::None, &[(0.0, 0.0); 3])]).unwrap();
        let kin = set.derive_kinematics().unwrap();
        let r = kin.series_at(0).record(0);
        assert_eq!((r.vx, r.vy, r.speed, r.acc, r.heading), (0.0, 0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn straight_line_east_and_north() {
        let set = TrajectorySet::from_tracks(vec![
            track(0, Role::None, &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]),
            track(1, Role::None, &[(0.0, 0.0), (0.0, 1.0), (0.0, 2.0)]),
        ])
        .unwrap();
        let kin = set.derive_kinematics().unwrap();
        let east = kin.series_for(AgentId(0)).unwrap().record(0);
        assert_eq!((east.vx, east.vy, east.speed, east.acc), (1.0, 0.0, 1.0, 0.0));
        assert_eq!(east.heading, 0.0);
        let north = kin.series_for(AgentId(1)).unwrap().record(0);
        assert_eq!(north.heading, 90.0);
        assert_eq!(north.speed, 1.0);
    }

    #[test]
    fn too_few_samples_is_an_error() {
        let set =
            TrajectorySet::from_tracks(vec![track(0, Role::None, &[(0.0, 0.0), (1.0, 0.0)])])
                .unwrap();
        assert!(matches!(
            set.derive_kinematics(),
            Err(Error::InsufficientData { required: 3, .. })
        ));
    }

    #[test]
    fn ragged_tracks_are_an_alignment_error() {
        let set = TrajectorySet::from_tracks(vec![
            track(0, Role::None, &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]),
            track(1, Role::None, &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (3.0, 0.0)]),
        ])
        .unwrap();
        assert!(matches!(set.derive_kinematics(), Err(Error::Alignment(_))));
    }

    #[test]
    fn speed_matches_hypot_on_a_random_walk() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut pts = vec![(0.0, 0.0)];
        for _ in 0..200 {
            let (x, y) = *pts.last().unwrap();
            pts.push((x + rng.gen_range(-1.0..1.0), y + rng.gen_range(-1.0..1.0)));
        }
        let set = TrajectorySet::from_tracks(vec![track(0, Role::None, &pts)]).unwrap();
        let kin = set.derive_kinematics().unwrap();
        let s = kin.series_at(0);
        for t in 0..s.len() {
            let r = s.record(t);
            assert!((r.speed - r.vx.hypot(r.vy)).abs() <= 1e-9);
            assert!((0.0..360.0).contains(&r.heading));
        }
    }

    #[test]
    fn window_identity_and_range_error() {
        let set = TrajectorySet::from_tracks(vec![track(
            0,
            Role::None,
            &(0..12).map(|i| (i as f64, 0.0)).collect::<Vec<_>>(),
        )])
        .unwrap();
        let kin = set.derive_kinematics().unwrap();
        let s = kin.series_at(0);
        assert_eq!(s.len(), 10);
        let w = s.window(0, 10).unwrap();
        assert_eq!(w.len(), 10);
        assert_eq!(w.channel(Variable::Vx), s.channel(Variable::Vx));
        assert!(matches!(
            s.window(5, 10),
            Err(Error::WindowRange { start: 5, len: 10, series_len: 10 })
        ));
    }

    #[test]
    fn unwrap_heading_examples() {
        assert_eq!(unwrap_heading(&[350.0, 10.0, 30.0]), vec![350.0, 370.0, 390.0]);
        assert_eq!(unwrap_heading(&[10.0, 20.0, 30.0]), vec![10.0, 20.0, 30.0]);
        // A tie at exactly 180 is resolved toward no adjustment.
        assert_eq!(unwrap_heading(&[0.0, 180.0, 0.0]), vec![0.0, 180.0, 0.0]);
    }

    #[test]
    fn csv_round_trip_is_identity() {
        let set = TrajectorySet::from_tracks(vec![
            track(0, Role::Leader, &[(0.0, 0.25), (1.5, -2.0), (3.125, 0.1)]),
            track(7, Role::Follower, &[(10.0, 10.0), (9.5, 8.25), (9.0, 7.0)]),
        ])
        .unwrap();
        let text = trajectory_to_csv_string(&set);
        let back = trajectory_from_csv(text.as_bytes(), "mem").unwrap();
        assert_eq!(set, back);
        assert_eq!(trajectory_to_csv_string(&back), text);
    }

    #[test]
    fn empty_set_serializes_to_header_only() {
        let set = TrajectorySet::from_tracks(vec![]).unwrap();
        assert_eq!(trajectory_to_csv_string(&set), "tick,agent_id,role,x,y\n");
    }

    #[test]
    fn malformed_row_reports_line_number() {
        let text = "tick,agent_id,role,x,y\n0,0,none,0.0,0.0\n1,0,none,oops,0.0\n";
        match trajectory_from_csv(text.as_bytes(), "mem") {
            Err(Error::CsvParse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_record_is_a_schema_error() {
        let text = "tick,agent_id,role,x,y\n0,0,none,0.0,0.0\n0,0,none,1.0,1.0\n";
        assert!(matches!(
            trajectory_from_csv(text.as_bytes(), "mem"),
            Err(Error::CsvSchema { .. })
        ));
    }

    #[test]
    fn ragged_csv_reads_back_with_roles() {
        // A consumed prey track simply stops early; ingestion carries it.
        let text = "tick,agent_id,role,x,y\n\
                    0,0,sheep,0.0e0,0.0e0\n0,100,alpha,1.0e0,1.0e0\n\
                    1,100,alpha,2.0e0,1.0e0\n";
        let set = trajectory_from_csv(text.as_bytes(), "mem").unwrap();
        assert_eq!(set.agent_count(), 2);
        assert_eq!(set.track_for(AgentId(0)).unwrap().len(), 1);
        assert_eq!(set.track_for(AgentId(100)).unwrap().role(), Role::Alpha);
        assert_eq!(set.select_roles(&[Role::Alpha]).agent_count(), 1);
    }
}
