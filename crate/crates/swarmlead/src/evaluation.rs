//! Leadership rankings, top-k statistics, detection histograms, and the
//! multi-seed benchmark harness.
//!
//! A benchmark run simulates one model under a list of seeds, applies every
//! configured detection method to the analyzed agent subset, ranks agents
//! by out-degree, and aggregates how often the true leaders (role `leader`
//! or `alpha`) land in the top k. Seeds execute concurrently; aggregation
//! is a deterministic fold in seed order, so identical inputs produce
//! byte-identical summaries.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::influence::InfluenceMatrix;
use crate::methods::{
    netinfer, te, tlmi, DetectionEvent, MethodKind, MethodOutput, NetInferConfig, TeConfig,
    TlmiConfig,
};
use crate::sim::{VicsekConfig, VicsekSim, WolfSheepConfig, WolfSheepSim};
use crate::trajectory::{AgentId, Kinematics, Role, TrajectorySet};

/// One agent's place in a leadership ranking.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RankedAgent {
    pub agent: AgentId,
    pub out_score: f64,
    /// 1-based rank; rank 1 is the strongest leader.
    pub rank: usize,
}

/// Ordered leadership scores for one method on one run.
#[derive(Debug, Clone, Serialize)]
pub struct RankingReport {
    pub method: MethodKind,
    pub seed: u64,
    /// Agents ordered by out-score descending, ties broken by ascending id.
    pub ordered: Vec<RankedAgent>,
    /// The true leaders' entries from `ordered`.
    pub true_leader_ranks: Vec<RankedAgent>,
    pub analyzed_agents: Vec<AgentId>,
}

impl RankingReport {
    pub fn rank_of(&self, agent: AgentId) -> Option<usize> {
        self.ordered
            .iter()
            .find(|r| r.agent == agent)
            .map(|r| r.rank)
    }
}

/// Orders a subset of the matrix agents by out-score descending, ties by
/// ascending agent id, with 1-based ranks.
pub fn rank_agents(matrix: &InfluenceMatrix, subset: &[AgentId]) -> Result<Vec<RankedAgent>> {
    if subset.is_empty() {
        return Err(Error::InvalidInput("ranking subset is empty".into()));
    }
    let centralities = matrix.centralities();
    let mut rows = Vec::with_capacity(subset.len());
    for &agent in subset {
        let idx = matrix
            .index_of(agent)
            .ok_or_else(|| Error::InvalidInput(format!("agent {agent} not in matrix")))?;
        rows.push((agent, centralities[idx].out_score));
    }
    rows.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    Ok(rows
        .into_iter()
        .enumerate()
        .map(|(i, (agent, out_score))| RankedAgent {
            agent,
            out_score,
            rank: i + 1,
        })
        .collect())
}

/// Builds a full report, recording where each true leader landed.
pub fn build_ranking_report(
    method: MethodKind,
    seed: u64,
    matrix: &InfluenceMatrix,
    subset: &[AgentId],
    true_leaders: &BTreeSet<AgentId>,
) -> Result<RankingReport> {
    let ordered = rank_agents(matrix, subset)?;
    let true_leader_ranks = ordered
        .iter()
        .filter(|r| true_leaders.contains(&r.agent))
        .copied()
        .collect();
    Ok(RankingReport {
        method,
        seed,
        ordered,
        true_leader_ranks,
        analyzed_agents: subset.to_vec(),
    })
}

/// Hit statistics for one k.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TopKStat {
    pub k: usize,
    pub hits: usize,
    pub opportunities: usize,
    pub rate: f64,
}

/// Counts (leader, run) pairs ranked within the top k across reports.
/// Opportunities are `|true_leaders| × reports`.
pub fn topk_rate(reports: &[RankingReport], true_leaders: &BTreeSet<AgentId>, k: usize) -> TopKStat {
    let mut hits = 0;
    for report in reports {
        for &leader in true_leaders {
            if report.rank_of(leader).is_some_and(|r| r <= k) {
                hits += 1;
            }
        }
    }
    let opportunities = reports.len() * true_leaders.len();
    TopKStat {
        k,
        hits,
        opportunities,
        rate: if opportunities == 0 {
            0.0
        } else {
            hits as f64 / opportunities as f64
        },
    }
}

/// Cumulative leadership-detection count for one agent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HistogramEntry {
    pub agent: AgentId,
    pub count: u64,
}

/// Per-agent cumulative detection counts: each thresholded edge in a window
/// counts once for its source agent.
pub fn leadership_histogram(events: &[DetectionEvent], agents: &[AgentId]) -> Vec<HistogramEntry> {
    let mut entries: Vec<HistogramEntry> = agents
        .iter()
        .map(|&agent| HistogramEntry { agent, count: 0 })
        .collect();
    for event in events {
        if let Ok(idx) = agents.binary_search(&event.source) {
            entries[idx].count += 1;
        }
    }
    entries
}

/// Which simulation a benchmark drives.
#[derive(Debug, Clone)]
pub enum SimSpec {
    Vicsek(VicsekConfig),
    WolfSheep(WolfSheepConfig),
}

impl SimSpec {
    pub fn name(&self) -> &'static str {
        match self {
            SimSpec::Vicsek(_) => "vicsek",
            SimSpec::WolfSheep(_) => "wolfsheep",
        }
    }

    /// Runs the simulation with the given seed substituted into the config.
    pub fn run_with_seed(&self, seed: u64) -> Result<TrajectorySet> {
        match self {
            SimSpec::Vicsek(cfg) => {
                let mut cfg = cfg.clone();
                cfg.seed = seed;
                VicsekSim::run(cfg)
            }
            SimSpec::WolfSheep(cfg) => {
                let mut cfg = cfg.clone();
                cfg.seed = seed;
                WolfSheepSim::run(cfg)
            }
        }
    }
}

/// One configured detection method.
#[derive(Debug, Clone)]
pub enum MethodSpec {
    NetInfer(NetInferConfig),
    Te(TeConfig),
    Tlmi(TlmiConfig),
}

impl MethodSpec {
    pub fn kind(&self) -> MethodKind {
        match self {
            MethodSpec::NetInfer(_) => MethodKind::NetInfer,
            MethodSpec::Te(_) => MethodKind::Te,
            MethodSpec::Tlmi(_) => MethodKind::Tlmi,
        }
    }

    pub fn run(&self, ts: &TrajectorySet) -> Result<MethodOutput> {
        match self {
            MethodSpec::NetInfer(cfg) => netinfer::infer(ts, cfg),
            MethodSpec::Te(cfg) => te::te_infer(ts, cfg),
            MethodSpec::Tlmi(cfg) => tlmi::tlmi_infer(ts, cfg),
        }
    }

    pub fn run_kinematics(&self, kin: &Kinematics) -> Result<MethodOutput> {
        match self {
            MethodSpec::NetInfer(cfg) => netinfer::infer_kinematics(kin, cfg),
            MethodSpec::Te(cfg) => te::te_infer_kinematics(kin, cfg),
            MethodSpec::Tlmi(cfg) => tlmi::tlmi_infer_kinematics(kin, cfg),
        }
    }
}

/// Full benchmark description: one simulation, several methods, many seeds.
#[derive(Debug, Clone)]
pub struct BenchmarkSpec {
    pub sim: SimSpec,
    pub methods: Vec<MethodSpec>,
    pub seeds: Vec<u64>,
    /// Roles entering analysis and ranking; `None` analyzes every agent
    /// whose track covers the whole run.
    pub analysis_roles: Option<Vec<Role>>,
    /// k values reported in the summary.
    pub topk: Vec<usize>,
}

/// One method's artifacts for one seed.
#[derive(Debug, Clone)]
pub struct MethodSeedResult {
    pub method: MethodKind,
    pub seed: u64,
    pub output: MethodOutput,
    pub report: RankingReport,
    pub histogram: Vec<HistogramEntry>,
}

/// Everything produced for one seed.
#[derive(Debug, Clone)]
pub struct SeedResult {
    pub seed: u64,
    pub trajectories: TrajectorySet,
    pub methods: Vec<MethodSeedResult>,
}

/// Leader ranks of one seed, for the summary tables.
#[derive(Debug, Clone, Serialize)]
pub struct SeedRanks {
    pub seed: u64,
    pub leader_ranks: Vec<RankedAgent>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MethodSummary {
    pub method: MethodKind,
    pub topk: Vec<TopKStat>,
    pub per_seed: Vec<SeedRanks>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchmarkSummary {
    pub simulation: String,
    pub seeds: Vec<u64>,
    pub true_leaders: Vec<AgentId>,
    pub analyzed_agent_count: usize,
    pub methods: Vec<MethodSummary>,
}

/// Summary plus per-seed artifacts.
#[derive(Debug, Clone)]
pub struct BenchmarkRun {
    pub summary: BenchmarkSummary,
    pub seeds: Vec<SeedResult>,
}

/// Selects the agents a method actually analyzes.
pub fn analysis_subset(ts: &TrajectorySet, roles: Option<&[Role]>) -> TrajectorySet {
    match roles {
        Some(roles) => ts.select_roles(roles),
        None => {
            let full_len = ts.tick_count();
            ts.select(|t| t.len() == full_len)
        }
    }
}

/// True leaders carry the `leader` or `alpha` role.
pub fn true_leaders_of(ts: &TrajectorySet) -> BTreeSet<AgentId> {
    ts.tracks()
        .iter()
        .filter(|t| matches!(t.role(), Role::Leader | Role::Alpha))
        .map(|t| t.id())
        .collect()
}

/// Runs the whole benchmark: simulate per seed, run every method, rank,
/// aggregate. Deterministic given (spec, seeds).
pub fn run_benchmark(spec: &BenchmarkSpec) -> Result<BenchmarkRun> {
    if spec.seeds.is_empty() {
        return Err(Error::InvalidConfig("benchmark needs at least one seed".into()));
    }
    if spec.methods.is_empty() {
        return Err(Error::InvalidConfig("benchmark needs at least one method".into()));
    }

    let seed_results: Result<Vec<SeedResult>> = spec
        .seeds
        .par_iter()
        .map(|&seed| run_seed(spec, seed).map_err(|e| e.with_context(format!("seed {seed}"))))
        .collect();
    let seed_results = seed_results?;

    let first = &seed_results[0];
    let true_leaders: BTreeSet<AgentId> = first
        .methods
        .first()
        .map(|m| m.report.true_leader_ranks.iter().map(|r| r.agent).collect())
        .unwrap_or_default();
    let analyzed_agent_count = first
        .methods
        .first()
        .map(|m| m.report.analyzed_agents.len())
        .unwrap_or(0);

    let mut methods = Vec::with_capacity(spec.methods.len());
    for (m_idx, method) in spec.methods.iter().enumerate() {
        let reports: Vec<RankingReport> = seed_results
            .iter()
            .map(|s| s.methods[m_idx].report.clone())
            .collect();
        let topk = spec
            .topk
            .iter()
            .map(|&k| topk_rate(&reports, &true_leaders, k))
            .collect();
        let per_seed = reports
            .iter()
            .map(|r| SeedRanks {
                seed: r.seed,
                leader_ranks: r.true_leader_ranks.clone(),
            })
            .collect();
        methods.push(MethodSummary {
            method: method.kind(),
            topk,
            per_seed,
        });
    }

    Ok(BenchmarkRun {
        summary: BenchmarkSummary {
            simulation: spec.sim.name().to_string(),
            seeds: spec.seeds.clone(),
            true_leaders: true_leaders.into_iter().collect(),
            analyzed_agent_count,
            methods,
        },
        seeds: seed_results,
    })
}

fn run_seed(spec: &BenchmarkSpec, seed: u64) -> Result<SeedResult> {
    let full = spec.sim.run_with_seed(seed)?;
    let analyzed = analysis_subset(&full, spec.analysis_roles.as_deref());
    let true_leaders = true_leaders_of(&full);
    let kin = analyzed.derive_kinematics()?;
    let subset = analyzed.agent_ids();

    let mut methods = Vec::with_capacity(spec.methods.len());
    for method in &spec.methods {
        let kind = method.kind();
        let output = method
            .run_kinematics(&kin)
            .map_err(|e| e.with_context(format!("method {kind}")))?;
        let report = build_ranking_report(kind, seed, &output.matrix, &subset, &true_leaders)?;
        let histogram = leadership_histogram(&output.events, &subset);
        methods.push(MethodSeedResult {
            method: kind,
            seed,
            output,
            report,
            histogram,
        });
    }
    Ok(SeedResult {
        seed,
        trajectories: full,
        methods,
    })
}

/// Human-readable aligned table of per-seed leader ranks and top-k rates.
pub fn render_summary_table(summary: &BenchmarkSummary) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "simulation: {}   seeds: {}   analyzed agents: {}\n",
        summary.simulation,
        summary.seeds.len(),
        summary.analyzed_agent_count
    ));
    let leaders: Vec<String> = summary.true_leaders.iter().map(|a| a.to_string()).collect();
    out.push_str(&format!("true leaders: {}\n\n", leaders.join(", ")));

    // Per-seed leader ranks, one column per method.
    let mut headers = vec!["seed".to_string()];
    headers.extend(summary.methods.iter().map(|m| m.method.to_string()));
    let mut rows: Vec<Vec<String>> = Vec::new();
    for (s_idx, &seed) in summary.seeds.iter().enumerate() {
        let mut row = vec![seed.to_string()];
        for m in &summary.methods {
            let cell = m.per_seed[s_idx]
                .leader_ranks
                .iter()
                .map(|r| format!("{}:{}", r.agent, r.rank))
                .collect::<Vec<_>>()
                .join(" ");
            row.push(cell);
        }
        rows.push(row);
    }
    out.push_str("per-seed ranks of the true leaders (agent:rank)\n");
    out.push_str(&render_aligned(&headers, &rows));

    let mut headers = vec!["".to_string()];
    headers.extend(summary.methods.iter().map(|m| m.method.to_string()));
    let mut rows: Vec<Vec<String>> = Vec::new();
    if let Some(first) = summary.methods.first() {
        for (k_idx, stat) in first.topk.iter().enumerate() {
            let mut row = vec![format!("top {}", stat.k)];
            for m in &summary.methods {
                let s = &m.topk[k_idx];
                row.push(format!("{}/{} = {:.0}%", s.hits, s.opportunities, s.rate * 100.0));
            }
            rows.push(row);
        }
    }
    out.push_str("\ntop-k leader hit rates\n");
    out.push_str(&render_aligned(&headers, &rows));
    out
}

fn render_aligned(headers: &[String], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for c in 0..cols {
            widths[c] = widths[c].max(row[c].len());
        }
    }
    let mut out = String::new();
    let render_row = |cells: &[String], widths: &[usize]| -> String {
        cells
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect::<Vec<_>>()
            .join(" | ")
    };
    out.push_str(&render_row(headers, &widths));
    out.push('\n');
    out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 3 * (cols - 1)));
    out.push('\n');
    for row in rows {
        out.push_str(&render_row(row, &widths));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::influence::InfluenceMatrix;

    fn ids(v: &[u32]) -> Vec<AgentId> {
        v.iter().map(|&i| AgentId(i)).collect()
    }

    #[test]
    fn zero_matrix_ranks_by_id() {
        let m = InfluenceMatrix::zeros(ids(&[0, 1, 2])).unwrap();
        let ranked = rank_agents(&m, &ids(&[0, 1, 2])).unwrap();
        let order: Vec<u32> = ranked.iter().map(|r| r.agent.0).collect();
        assert_eq!(order, vec![0, 1, 2]);
        let ranks: Vec<usize> = ranked.iter().map(|r| r.rank).collect();
        assert_eq!(ranks, vec![1, 2, 3]);
    }

    #[test]
    fn subset_excludes_other_agents() {
        let mut m = InfluenceMatrix::zeros(ids(&[0, 1, 2, 3])).unwrap();
        m.add_at(2, 0, 4.0);
        m.add_at(0, 1, 1.0);
        let ranked = rank_agents(&m, &ids(&[2, 3])).unwrap();
        assert_eq!(ranked[0].agent, AgentId(2));
        assert_eq!(ranked[0].rank, 1);
        assert_eq!(ranked.len(), 2);
    }

    #[test]
    fn empty_subset_is_an_error() {
        let m = InfluenceMatrix::zeros(ids(&[0])).unwrap();
        assert!(rank_agents(&m, &[]).is_err());
    }

    fn synthetic_report(seed: u64, leader_rank: usize, n: usize) -> RankingReport {
        let ordered: Vec<RankedAgent> = (0..n)
            .map(|i| {
                let agent = if i + 1 == leader_rank {
                    AgentId(100)
                } else if i + 1 < leader_rank {
                    AgentId(i as u32)
                } else {
                    AgentId(i as u32 - 1)
                };
                RankedAgent {
                    agent,
                    out_score: (n - i) as f64,
                    rank: i + 1,
                }
            })
            .collect();
        let true_leader_ranks = ordered
            .iter()
            .filter(|r| r.agent == AgentId(100))
            .copied()
            .collect();
        RankingReport {
            method: MethodKind::NetInfer,
            seed,
            analyzed_agents: ordered.iter().map(|r| r.agent).collect(),
            true_leader_ranks,
            ordered,
        }
    }

    #[test]
    fn topk_rates_match_hand_counts() {
        let leaders: BTreeSet<AgentId> = [AgentId(100)].into_iter().collect();
        // Ranks over ten runs, landing top-5 four times.
        let ranks = [1, 7, 3, 12, 2, 9, 30, 4, 8, 6];
        let reports: Vec<RankingReport> = ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| synthetic_report(i as u64, r, 30))
            .collect();
        let top5 = topk_rate(&reports, &leaders, 5);
        assert_eq!((top5.hits, top5.opportunities), (4, 10));
        assert!((top5.rate - 0.4).abs() < 1e-12);
        // Monotone in k.
        let mut prev = 0;
        for k in 1..=30 {
            let stat = topk_rate(&reports, &leaders, k);
            assert!(stat.hits >= prev);
            prev = stat.hits;
        }
        // 28 of 50 -> 56%.
        let mut reports = Vec::new();
        for i in 0..50 {
            reports.push(synthetic_report(i as u64, if i < 28 { 1 } else { 20 }, 30));
        }
        let stat = topk_rate(&reports, &leaders, 5);
        assert_eq!(stat.hits, 28);
        assert!((stat.rate - 0.56).abs() < 1e-12);
    }

    #[test]
    fn histogram_counts_events_per_source() {
        let agents = ids(&[0, 1, 2]);
        let events = vec![
            DetectionEvent {
                window_index: 0,
                source: AgentId(1),
                target: AgentId(0),
                weight: 1.0,
            },
            DetectionEvent {
                window_index: 1,
                source: AgentId(1),
                target: AgentId(2),
                weight: 2.0,
            },
        ];
        let hist = leadership_histogram(&events, &agents);
        let counts: Vec<u64> = hist.iter().map(|h| h.count).collect();
        assert_eq!(counts, vec![0, 2, 0]);
        let total: u64 = hist.iter().map(|h| h.count).sum();
        assert_eq!(total as usize, events.len());
        assert!(leadership_histogram(&[], &agents).iter().all(|h| h.count == 0));
    }

    fn tiny_wolfsheep_spec() -> BenchmarkSpec {
        BenchmarkSpec {
            sim: SimSpec::WolfSheep(WolfSheepConfig {
                n_sheep: 12,
                n_pack: 3,
                n_independent: 3,
                steps: 120,
                ..Default::default()
            }),
            methods: vec![MethodSpec::NetInfer(NetInferConfig {
                window: 20,
                ..Default::default()
            })],
            seeds: vec![1, 2],
            analysis_roles: Some(vec![Role::Alpha, Role::Pack, Role::Independent]),
            topk: vec![1, 3, 5],
        }
    }

    #[test]
    fn benchmark_is_deterministic_and_well_formed() {
        let spec = tiny_wolfsheep_spec();
        let a = run_benchmark(&spec).unwrap();
        let b = run_benchmark(&spec).unwrap();
        let ja = serde_json::to_string(&a.summary).unwrap();
        let jb = serde_json::to_string(&b.summary).unwrap();
        assert_eq!(ja, jb);

        assert_eq!(a.summary.analyzed_agent_count, 7);
        assert_eq!(a.summary.true_leaders, vec![AgentId(12)]);
        for seed_result in &a.seeds {
            for m in &seed_result.methods {
                let ranks: BTreeSet<usize> =
                    m.report.ordered.iter().map(|r| r.rank).collect();
                assert_eq!(ranks.len(), 7);
                assert_eq!(*ranks.iter().max().unwrap(), 7);
                // Scores non-increasing down the order.
                for pair in m.report.ordered.windows(2) {
                    assert!(pair[0].out_score >= pair[1].out_score);
                }
                let total: u64 = m.histogram.iter().map(|h| h.count).sum();
                assert_eq!(total as usize, m.output.events.len());
            }
        }
        // The table renderer covers every method and seed.
        let table = render_summary_table(&a.summary);
        assert!(table.contains("netinfer"));
        assert!(table.contains("top 5"));
    }

    #[test]
    fn single_seed_single_method_report() {
        let mut spec = tiny_wolfsheep_spec();
        spec.seeds = vec![9];
        let run = run_benchmark(&spec).unwrap();
        assert_eq!(run.seeds.len(), 1);
        assert_eq!(run.seeds[0].methods.len(), 1);
        assert_eq!(run.summary.methods[0].per_seed.len(), 1);
    }
}
