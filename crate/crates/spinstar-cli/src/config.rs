use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::CliError;
use crate::RunArgs;

/// Container format for row-oriented output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Optional values read from a JSON config file; explicit flags override
/// them, and built-in defaults fill whatever remains.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n_bath: Option<u32>,
    pub k: Option<u32>,
    pub k_range: Option<String>,
    pub ms: Option<i32>,
    pub alpha: Option<f64>,
    pub omega: Option<f64>,
    pub t_max: Option<f64>,
    pub points: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::invalid(format!("cannot read config {}: {e}", path.display()))
        })?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::invalid(format!("config {}: {e}", path.display())))
    }
}

/// Fully resolved run parameters shared by `evolve`, `scan`, `figures` and
/// `verify`. The time axis is dimensionless alpha*t: the grid spans
/// [0, t_max] in those units and real times are alpha_t / alpha.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n_bath: u32,
    pub k: Option<u32>,
    pub k_range: Option<(u32, u32)>,
    pub m_s: i32,
    pub alpha: f64,
    pub omega: f64,
    pub t_max: f64,
    pub points: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    /// Merge flags over the optional config file over per-command defaults,
    /// then validate the result.
    pub fn resolve(
        args: &RunArgs,
        default_n_bath: u32,
        default_points: usize,
    ) -> Result<Self, CliError> {
        let file = match &args.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let format = match args.format {
            Some(f) => f,
            None => match file.format.as_deref() {
                None => OutputFormat::Csv,
                Some(s) => parse_format(s)?,
            },
        };
        let k_range =
            args.k_range.as_deref().or(file.k_range.as_deref()).map(parse_k_range).transpose()?;
        let cfg = RunConfig {
            n_bath: args.n_bath.or(file.n_bath).unwrap_or(default_n_bath),
            k: args.k.or(file.k),
            k_range,
            m_s: args.ms.or(file.ms).unwrap_or(1),
            alpha: args.alpha.or(file.alpha).unwrap_or(1.0),
            omega: args.omega.or(file.omega).unwrap_or(0.0),
            t_max: args.t_max.or(file.t_max).unwrap_or(spinstar::DEFAULT_T_MAX),
            points: args.points.or(file.points).unwrap_or(default_points),
            out: args.out.clone().or(file.out),
            format,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.points < 1 {
            return Err(CliError::invalid("points must be at least 1"));
        }
        if !self.t_max.is_finite() || self.t_max <= 0.0 {
            return Err(CliError::invalid(format!("t-max must be positive (got {})", self.t_max)));
        }
        if !self.alpha.is_finite() || self.alpha <= 0.0 {
            return Err(CliError::invalid(format!(
                "alpha must be positive since the grid is in alpha*t units (got {})",
                self.alpha
            )));
        }
        if !self.omega.is_finite() {
            return Err(CliError::invalid("omega must be finite"));
        }
        if !matches!(self.m_s, -1..=1) {
            return Err(CliError::invalid(format!("ms must be -1, 0 or +1 (got {})", self.m_s)));
        }
        if let Some(k) = self.k {
            if k > self.n_bath {
                return Err(CliError::invalid(format!(
                    "k = {k} exceeds the number of bath spins {}",
                    self.n_bath
                )));
            }
        }
        if let Some((lo, hi)) = self.k_range {
            if lo > hi {
                return Err(CliError::invalid(format!("empty k-range {lo}..{hi}")));
            }
            if hi > self.n_bath {
                return Err(CliError::invalid(format!(
                    "k-range {lo}..{hi} exceeds the number of bath spins {}",
                    self.n_bath
                )));
            }
        }
        Ok(())
    }

    /// The alpha*t output grid and the matching real times.
    pub fn grids(&self) -> (Vec<f64>, Vec<f64>) {
        let alpha_t = spinstar::uniform_grid(self.t_max, self.points);
        let ts = alpha_t.iter().map(|&x| x / self.alpha).collect();
        (alpha_t, ts)
    }
}

fn parse_format(s: &str) -> Result<OutputFormat, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(CliError::invalid(format!("unknown format {other:?} (expected csv or json)"))),
    }
}

/// Inclusive k sweep of the form "A..B".
pub fn parse_k_range(s: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::invalid(format!("k-range {s:?} is not of the form A..B"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo = lo.trim().parse::<u32>().map_err(|_| bad())?;
    let hi = hi.trim().parse::<u32>().map_err(|_| bad())?;
    Ok((lo, hi))
}
