//! Sectioned key–value config files (INI style).
//!
//! One section per concern: `[simulation]` for the model and its
//! parameters, one section per method (`[netinfer]`, `[te]`, `[tlmi]`),
//! `[evaluation]` for the ranked subset and k list, and `[benchmark]` for
//! seeds and the method list. Keys are validated strictly so typos fail
//! loudly instead of silently falling back to defaults.

use std::collections::BTreeMap;
use std::path::Path;

use swarmlead::error::{Error, Result};
use swarmlead::evaluation::{BenchmarkSpec, MethodSpec, SimSpec};
use swarmlead::methods::{MethodKind, NetInferConfig, TeConfig, TlmiConfig};
use swarmlead::sim::{VicsekConfig, WolfSheepConfig};
use swarmlead::trajectory::{Role, Variable};

#[derive(Debug, Default, Clone)]
pub struct FileConfig {
    sections: BTreeMap<String, BTreeMap<String, String>>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidConfig(msg.into())
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text).map_err(|e| e.with_context(path.display().to_string()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut sections: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        let mut current: Option<String> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find(['#', ';']) {
                Some(cut) => &raw[..cut],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[') {
                let name = name
                    .strip_suffix(']')
                    .ok_or_else(|| bad(format!("line {line_no}: unterminated section header")))?
                    .trim()
                    .to_lowercase();
                if sections.contains_key(&name) {
                    return Err(bad(format!("line {line_no}: duplicate section [{name}]")));
                }
                sections.insert(name.clone(), BTreeMap::new());
                current = Some(name);
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("line {line_no}: expected `key = value`")))?;
            let section = current
                .as_ref()
                .ok_or_else(|| bad(format!("line {line_no}: key outside any section")))?;
            let prev = sections
                .get_mut(section)
                .unwrap()
                .insert(key.trim().to_lowercase(), value.trim().to_string());
            if prev.is_some() {
                return Err(bad(format!(
                    "line {line_no}: duplicate key {} in [{}]",
                    key.trim(),
                    section
                )));
            }
        }
        Ok(Self { sections })
    }

    fn section(&self, name: &str) -> Option<&BTreeMap<String, String>> {
        self.sections.get(name)
    }

    pub fn has_section(&self, name: &str) -> bool {
        self.sections.contains_key(name)
    }
}

/// Typed accessor over one section with strict key checking.
struct Keys<'a> {
    section: &'a str,
    entries: Option<&'a BTreeMap<String, String>>,
    allowed: &'a [&'a str],
}

impl<'a> Keys<'a> {
    fn new(cfg: &'a FileConfig, section: &'a str, allowed: &'a [&'a str]) -> Result<Self> {
        let entries = cfg.section(section);
        if let Some(entries) = entries {
            for key in entries.keys() {
                if !allowed.contains(&key.as_str()) {
                    return Err(bad(format!(
                        "unknown key `{key}` in [{section}]; allowed: {}",
                        allowed.join(", ")
                    )));
                }
            }
        }
        Ok(Self {
            section,
            entries,
            allowed,
        })
    }

    fn raw(&self, key: &str) -> Option<&'a str> {
        debug_assert!(self.allowed.contains(&key));
        self.entries.and_then(|e| e.get(key)).map(String::as_str)
    }

    fn parse<T: std::str::FromStr>(&self, key: &str, into: &mut T) -> Result<()>
    where
        T::Err: std::fmt::Display,
    {
        if let Some(raw) = self.raw(key) {
            *into = raw
                .parse()
                .map_err(|e| bad(format!("[{}] {key} = {raw:?}: {e}", self.section)))?;
        }
        Ok(())
    }

    fn parse_list<T: std::str::FromStr>(&self, key: &str) -> Result<Option<Vec<T>>>
    where
        T::Err: std::fmt::Display,
    {
        match self.raw(key) {
            None => Ok(None),
            Some(raw) => raw
                .split(',')
                .map(|item| {
                    item.trim()
                        .parse()
                        .map_err(|e| bad(format!("[{}] {key} item {item:?}: {e}", self.section)))
                })
                .collect::<Result<Vec<T>>>()
                .map(Some),
        }
    }
}

const SIM_KEYS: &[&str] = &[
    "model",
    "steps",
    "seed",
    "world_size",
    // vicsek
    "n_leaders",
    "n_followers",
    "interaction_radius",
    "leader_weight",
    "speed_adjust_rate",
    "noise_half_angle",
    "leader_noise",
    "leaders_align",
    "drift_ticks",
    // wolf-sheep
    "n_sheep",
    "n_pack",
    "n_independent",
    "patrol_speed",
    "hunt_speed",
    "detect_radius",
    "capture_radius",
    "trigger_prob",
    "pack_speed_factor",
    "sheep_speed",
    "sheep_turn",
    "patrol_turn",
    "pack_jitter",
    "formation_distance",
];

/// The `[simulation]` section. `model` may be overridden by the CLI.
pub fn sim_spec(cfg: &FileConfig, model_override: Option<&str>) -> Result<SimSpec> {
    let keys = Keys::new(cfg, "simulation", SIM_KEYS)?;
    let model = model_override
        .or_else(|| keys.raw("model"))
        .ok_or_else(|| bad("no simulation model named (cli argument or [simulation] model)"))?;
    match model {
        "vicsek" => {
            let mut c = VicsekConfig::default();
            keys.parse("n_leaders", &mut c.n_leaders)?;
            keys.parse("n_followers", &mut c.n_followers)?;
            keys.parse("world_size", &mut c.world_size)?;
            keys.parse("interaction_radius", &mut c.interaction_radius)?;
            keys.parse("leader_weight", &mut c.leader_weight)?;
            keys.parse("speed_adjust_rate", &mut c.speed_adjust_rate)?;
            keys.parse("noise_half_angle", &mut c.noise_half_angle)?;
            keys.parse("leader_noise", &mut c.leader_noise)?;
            keys.parse("leaders_align", &mut c.leaders_align)?;
            keys.parse("drift_ticks", &mut c.drift_ticks)?;
            keys.parse("steps", &mut c.steps)?;
            keys.parse("seed", &mut c.seed)?;
            Ok(SimSpec::Vicsek(c))
        }
        "wolfsheep" => {
            let mut c = WolfSheepConfig::default();
            keys.parse("n_sheep", &mut c.n_sheep)?;
            keys.parse("n_pack", &mut c.n_pack)?;
            keys.parse("n_independent", &mut c.n_independent)?;
            keys.parse("world_size", &mut c.world_size)?;
            keys.parse("patrol_speed", &mut c.patrol_speed)?;
            keys.parse("hunt_speed", &mut c.hunt_speed)?;
            keys.parse("detect_radius", &mut c.detect_radius)?;
            keys.parse("capture_radius", &mut c.capture_radius)?;
            keys.parse("trigger_prob", &mut c.trigger_prob)?;
            keys.parse("pack_speed_factor", &mut c.pack_speed_factor)?;
            keys.parse("sheep_speed", &mut c.sheep_speed)?;
            keys.parse("sheep_turn", &mut c.sheep_turn)?;
            keys.parse("patrol_turn", &mut c.patrol_turn)?;
            keys.parse("pack_jitter", &mut c.pack_jitter)?;
            keys.parse("formation_distance", &mut c.formation_distance)?;
            keys.parse("steps", &mut c.steps)?;
            keys.parse("seed", &mut c.seed)?;
            Ok(SimSpec::WolfSheep(c))
        }
        other => Err(bad(format!(
            "unknown model {other:?}, expected vicsek or wolfsheep"
        ))),
    }
}

pub fn method_spec(cfg: &FileConfig, kind: MethodKind) -> Result<MethodSpec> {
    match kind {
        MethodKind::NetInfer => {
            let keys = Keys::new(
                cfg,
                "netinfer",
                &["window", "lag", "threshold", "stride", "variables", "unwrap_heading"],
            )?;
            let mut c = NetInferConfig::default();
            keys.parse("window", &mut c.window)?;
            keys.parse("lag", &mut c.lag)?;
            keys.parse("threshold", &mut c.threshold)?;
            keys.parse("unwrap_heading", &mut c.unwrap_heading)?;
            if let Some(stride) = keys.raw("stride") {
                c.stride = Some(
                    stride
                        .parse()
                        .map_err(|e| bad(format!("[netinfer] stride = {stride:?}: {e}")))?,
                );
            }
            if let Some(vars) = keys.parse_list::<Variable>("variables")? {
                c.variables = vars;
            }
            c.validate()?;
            Ok(MethodSpec::NetInfer(c))
        }
        MethodKind::Te => {
            let keys = Keys::new(
                cfg,
                "te",
                &["window", "embedding", "k_neighbors", "delta_threshold", "stride", "variables"],
            )?;
            let mut c = TeConfig::default();
            keys.parse("window", &mut c.window)?;
            keys.parse("embedding", &mut c.embedding)?;
            keys.parse("k_neighbors", &mut c.k_neighbors)?;
            keys.parse("delta_threshold", &mut c.delta_threshold)?;
            if let Some(stride) = keys.raw("stride") {
                c.stride = Some(
                    stride
                        .parse()
                        .map_err(|e| bad(format!("[te] stride = {stride:?}: {e}")))?,
                );
            }
            if let Some(vars) = keys.parse_list::<Variable>("variables")? {
                c.variables = vars;
            }
            c.validate()?;
            Ok(MethodSpec::Te(c))
        }
        MethodKind::Tlmi => {
            let keys = Keys::new(
                cfg,
                "tlmi",
                &["window", "bins", "lag_min", "lag_max", "mi_threshold", "stride", "variables"],
            )?;
            let mut c = TlmiConfig::default();
            keys.parse("window", &mut c.window)?;
            keys.parse("bins", &mut c.bins)?;
            keys.parse("lag_min", &mut c.lag_min)?;
            keys.parse("lag_max", &mut c.lag_max)?;
            keys.parse("mi_threshold", &mut c.mi_threshold)?;
            if let Some(stride) = keys.raw("stride") {
                c.stride = Some(
                    stride
                        .parse()
                        .map_err(|e| bad(format!("[tlmi] stride = {stride:?}: {e}")))?,
                );
            }
            if let Some(vars) = keys.parse_list::<Variable>("variables")? {
                c.variables = vars;
            }
            c.validate()?;
            Ok(MethodSpec::Tlmi(c))
        }
    }
}

/// Roles of the analyzed/ranked subset per `[evaluation] roles`; `None`
/// means every agent with a complete track.
pub fn evaluation_roles(cfg: &FileConfig) -> Result<Option<Vec<Role>>> {
    let keys = Keys::new(cfg, "evaluation", &["roles", "topk"])?;
    keys.parse_list::<Role>("roles")
}

pub fn evaluation_topk(cfg: &FileConfig) -> Result<Vec<usize>> {
    let keys = Keys::new(cfg, "evaluation", &["roles", "topk"])?;
    Ok(keys
        .parse_list::<usize>("topk")?
        .unwrap_or_else(|| vec![1, 3, 5, 10]))
}

/// Assembles the full benchmark description from `[simulation]`,
/// `[benchmark]`, `[evaluation]`, and the per-method sections.
pub fn benchmark_spec(cfg: &FileConfig, seeds_override: Option<Vec<u64>>) -> Result<BenchmarkSpec> {
    let keys = Keys::new(cfg, "benchmark", &["seeds", "methods"])?;
    let seeds = match seeds_override {
        Some(seeds) => seeds,
        None => keys
            .parse_list::<u64>("seeds")?
            .ok_or_else(|| bad("[benchmark] seeds missing (or pass --seeds)"))?,
    };
    let kinds: Vec<MethodKind> = keys
        .parse_list::<MethodKind>("methods")?
        .unwrap_or_else(|| MethodKind::ALL.to_vec());
    let methods = kinds
        .into_iter()
        .map(|kind| method_spec(cfg, kind))
        .collect::<Result<Vec<MethodSpec>>>()?;
    Ok(BenchmarkSpec {
        sim: sim_spec(cfg, None)?,
        methods,
        seeds,
        analysis_roles: evaluation_roles(cfg)?,
        topk: evaluation_topk(cfg)?,
    })
}
