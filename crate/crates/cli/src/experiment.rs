use std::fs::OpenOptions;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;
use tritile::bounds::bound_table;
use tritile::generators::{random_coloring, random_min_degree_graph, stream_seed};
use tritile::solver::{heuristic_tiling, max_mono_tiling_exact_with, verify_tiling};
use tritile::{ColoredGraph, Exact, Mode};

use crate::commands::{extremal_certificate, parse_rational};
use crate::{CliError, ExperimentArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstanceKind {
    Random,
    Extremal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Exact,
    Heuristic,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub n: Vec<usize>,
    pub delta: Vec<usize>,
    #[serde(default = "default_p_red")]
    pub p_red: Vec<f64>,
    pub seeds: Vec<u64>,
}

fn default_p_red() -> Vec<f64> {
    vec![0.5]
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default = "beta_default")]
    pub beta: String,
    #[serde(default = "eps_default")]
    pub eps: String,
    #[serde(default = "zero")]
    pub gamma: String,
    #[serde(default = "zero")]
    pub c_f2: String,
}

fn beta_default() -> String {
    "3/10".into()
}
fn eps_default() -> String {
    "1/100".into()
}
fn zero() -> String {
    "0".into()
}

impl Default for Params {
    fn default() -> Self {
        Params { beta: beta_default(), eps: eps_default(), gamma: zero(), c_f2: zero() }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "kind_default")]
    pub kind: InstanceKind,
    #[serde(default = "modes_default")]
    pub modes: Vec<String>,
    #[serde(default = "solver_default")]
    pub solver: SolverKind,
    #[serde(default = "budget_default")]
    pub budget: u64,
    #[serde(default = "iters_default")]
    pub heuristic_iters: usize,
    pub csv: Option<PathBuf>,
    pub grid: Grid,
    #[serde(default)]
    pub params: Params,
}

fn kind_default() -> InstanceKind {
    InstanceKind::Random
}
fn modes_default() -> Vec<String> {
    vec!["weak".into()]
}
fn solver_default() -> SolverKind {
    SolverKind::Exact
}
fn budget_default() -> u64 {
    10_000_000
}
fn iters_default() -> usize {
    200
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub n: usize,
    pub delta: usize,
    pub seed: u64,
    pub size: usize,
    pub exact: bool,
    #[serde(rename = "thm3_lower")]
    pub guaranteed_lower: String,
    #[serde(rename = "remarkA_upper")]
    pub construction_upper: String,
    pub bft_weak: String,
    pub mode: String,
    pub p_red: f64,
    pub runtime_ms: u128,
}

struct Cell {
    n: usize,
    delta: usize,
    p_red: f64,
    seed: u64,
    mode: Mode,
}

fn parse_mode(s: &str) -> Result<Mode, CliError> {
    match s {
        "weak" => Ok(Mode::Weak),
        "strong" => Ok(Mode::Strong),
        other => Err(CliError::Input(format!("unknown mode {other:?}"))),
    }
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Input(format!("config: {e}")))
    }

    /// Every grid cell in row order, after checking all preconditions.
    fn cells(&self) -> Result<Vec<Cell>, CliError> {
        let modes = self.modes.iter().map(|m| parse_mode(m)).collect::<Result<Vec<_>, _>>()?;
        if modes.is_empty() || self.grid.seeds.is_empty() || self.grid.n.is_empty() || self.grid.delta.is_empty() {
            return Err(CliError::Input("grid and modes must be nonempty".into()));
        }
        for &p in &self.grid.p_red {
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::Input(format!("p_red {p} not in [0, 1]")));
            }
        }
        for name in [&self.params.beta, &self.params.eps, &self.params.gamma, &self.params.c_f2] {
            parse_rational(name, "params")?;
        }
        let mut out = Vec::new();
        for &n in &self.grid.n {
            for &delta in &self.grid.delta {
                if n == 0 || delta >= n {
                    return Err(CliError::Input(format!("delta {delta} invalid for n = {n}")));
                }
                if self.kind == InstanceKind::Extremal && 2 * delta < n {
                    return Err(CliError::Input(format!("extremal instances need delta >= n/2, got ({n}, {delta})")));
                }
                for &p_red in &self.grid.p_red {
                    for &seed in &self.grid.seeds {
                        for &mode in &modes {
                            out.push(Cell { n, delta, p_red, seed, mode });
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn instance(&self, c: &Cell) -> Result<ColoredGraph, CliError> {
        match self.kind {
            InstanceKind::Random => {
                let g = random_min_degree_graph(c.n, c.delta, stream_seed(c.seed, 0))?;
                Ok(random_coloring(&g, c.p_red, stream_seed(c.seed, 1))?)
            }
            InstanceKind::Extremal => Ok(extremal_certificate(c.n, c.delta, c.seed)?.0),
        }
    }

    fn row(&self, c: &Cell, gamma: &Exact, parallel: bool) -> Result<Row, CliError> {
        let g = self.instance(c)?;
        let start = Instant::now();
        let (tiling, exact) = match self.solver {
            SolverKind::Exact => {
                let r = max_mono_tiling_exact_with(&g, c.mode, self.budget, parallel);
                (r.tiling, r.exact)
            }
            SolverKind::Heuristic => (heuristic_tiling(&g, c.mode, self.heuristic_iters, stream_seed(c.seed, 2)), false),
        };
        let runtime_ms = start.elapsed().as_millis();
        if !verify_tiling(&g, &tiling) {
            return Err(CliError::Internal("solver produced an invalid tiling".into()));
        }
        let b = bound_table(c.n, c.delta, Some(gamma.clone()), None, None)?;
        Ok(Row {
            n: c.n,
            delta: c.delta,
            seed: c.seed,
            size: tiling.len(),
            exact,
            guaranteed_lower: b.guaranteed_lower.to_string(),
            construction_upper: b.construction_upper.map_or("n/a".into(), |x| x.to_string()),
            bft_weak: b.bft_weak.to_string(),
            mode: c.mode.to_string(),
            p_red: c.p_red,
            runtime_ms,
        })
    }

    /// All rows in grid order; cells run on the rayon pool when `parallel`.
    pub fn rows(&self, parallel: bool) -> Result<Vec<Row>, CliError> {
        let cells = self.cells()?;
        let gamma = parse_rational(&self.params.gamma, "gamma")?;
        if parallel {
            cells.par_iter().map(|c| self.row(c, &gamma, true)).collect()
        } else {
            cells.iter().map(|c| self.row(c, &gamma, false)).collect()
        }
    }
}

pub fn run(a: &ExperimentArgs, parallel: bool) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&a.config).map_err(|e| CliError::Input(format!("{}: {e}", a.config.display())))?;
    let cfg = ExperimentConfig::parse(&text)?;
    let csv_path = a
        .out
        .clone()
        .or_else(|| cfg.csv.clone())
        .ok_or_else(|| CliError::Input("no CSV path: set `csv` in the config or pass --out".into()))?;
    let rows = cfg.rows(parallel)?;
    let fresh = std::fs::metadata(&csv_path).map(|m| m.len() == 0).unwrap_or(true);
    let file = OpenOptions::new().create(true).append(true).open(&csv_path)?;
    let mut w = csv::WriterBuilder::new().has_headers(fresh).from_writer(file);
    for r in &rows {
        w.serialize(r).map_err(|e| CliError::Input(e.to_string()))?;
    }
    w.flush()?;
    println!(
        "{}",
        json!({
            "rows": rows.len(),
            "csv": csv_path.display().to_string(),
            "params": { "beta": cfg.params.beta, "eps": cfg.params.eps, "gamma": cfg.params.gamma, "C_F2": cfg.params.c_f2 },
        })
    );
    Ok(())
}
