//! Artifact writers and the reproducibility manifest.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use swarmlead::error::Result;
use swarmlead::evaluation::{HistogramEntry, RankingReport};
use swarmlead::influence::InfluenceMatrix;
use swarmlead::methods::tlmi::LagProfile;

/// Collects every artifact written under one output directory and renders
/// the MANIFEST with content digests.
pub struct ArtifactSink {
    root: PathBuf,
    written: Vec<(String, String)>,
}

impl ArtifactSink {
    pub fn new(root: &Path) -> Result<Self> {
        fs::create_dir_all(root)?;
        Ok(Self {
            root: root.to_path_buf(),
            written: Vec::new(),
        })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn write(&mut self, name: &str, contents: &str) -> Result<PathBuf> {
        let path = self.root.join(name);
        fs::write(&path, contents)?;
        let digest = Sha256::digest(contents.as_bytes());
        self.written.push((format!("{digest:x}"), name.to_string()));
        Ok(path)
    }

    /// Writes the MANIFEST listing every artifact with its sha256. `status`
    /// is `complete` or `partial`; a partial manifest carries the error.
    pub fn finish(&self, status: &str, error: Option<&str>) -> Result<PathBuf> {
        let mut text = format!("status={status}\n");
        if let Some(err) = error {
            let one_line = err.replace('\n', " ");
            let _ = writeln!(text, "error={one_line}");
        }
        let mut rows = self.written.clone();
        rows.sort_by(|a, b| a.1.cmp(&b.1));
        for (digest, name) in rows {
            let _ = writeln!(text, "{digest}  {name}");
        }
        let path = self.root.join("MANIFEST");
        fs::write(&path, text)?;
        Ok(path)
    }
}

pub fn ranking_csv(report: &RankingReport) -> String {
    let mut out = String::from("rank,agent_id,out_score,true_leader\n");
    let leaders: Vec<_> = report.true_leader_ranks.iter().map(|r| r.agent).collect();
    for r in &report.ordered {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.rank,
            r.agent,
            r.out_score,
            leaders.contains(&r.agent)
        );
    }
    out
}

pub fn histogram_csv(histogram: &[HistogramEntry]) -> String {
    let mut out = String::from("agent_id,detections\n");
    for h in histogram {
        let _ = writeln!(out, "{},{}", h.agent, h.count);
    }
    out
}

pub fn profiles_csv(profiles: &[LagProfile]) -> String {
    let mut out = String::from("src,dst,variable,lag,mi\n");
    for p in profiles {
        for &(lag, mi) in &p.profile {
            let _ = writeln!(out, "{},{},{},{},{}", p.src, p.dst, p.variable, lag, mi);
        }
    }
    out
}

pub fn matrix_files(matrix: &InfluenceMatrix) -> (String, String) {
    (matrix.to_csv_string(), matrix.to_edge_json())
}
