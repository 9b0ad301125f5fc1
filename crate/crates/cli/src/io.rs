//! JSON files exchanged with the command line.

use std::f64::consts::TAU;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use pgcover::geom::Instance;

/// Sensors in the caller's coordinates plus the disk they live in.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    pub center: [f64; 2],
    pub radius: f64,
    pub sensors: Vec<[f64; 2]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    MinmaxDecision,
    Minmax,
    MinsumBoundary,
    MinsumApprox,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::MinmaxDecision => "minmax-decision",
            Problem::Minmax => "minmax",
            Problem::MinsumBoundary => "minsum-boundary",
            Problem::MinsumApprox => "minsum-approx",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
}

/// Result of a solve, in the instance file's units.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub problem: Problem,
    pub objective: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feasible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub placement_offset: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
}

impl InstanceFile {
    /// Unit-disk instance centred at the origin.
    pub fn to_instance(&self) -> Result<Instance> {
        if self.sensors.len() != self.n {
            bail!("instance declares n = {} but lists {} sensors", self.n, self.sensors.len());
        }
        let pts: Vec<(f64, f64)> = self.sensors.iter().map(|p| (p[0], p[1])).collect();
        Instance::normalized(&pts, (self.center[0], self.center[1]), self.radius).context("invalid instance")
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    /// Vertex `j` of the polygon with the given offset, in file coordinates.
    pub fn vertex(&self, offset: f64, j: usize) -> [f64; 2] {
        let a = offset - j as f64 * TAU / self.n as f64;
        [self.center[0] + self.radius * a.cos(), self.center[1] + self.radius * a.sin()]
    }

    /// Distance each sensor travels under `assignment`, in file units.
    pub fn moves(&self, offset: f64, assignment: &[usize]) -> Vec<f64> {
        self.sensors
            .iter()
            .zip(assignment)
            .map(|(s, &j)| {
                let v = self.vertex(offset, j);
                (s[0] - v[0]).hypot(s[1] - v[1])
            })
            .collect()
    }
}

impl SolutionFile {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
