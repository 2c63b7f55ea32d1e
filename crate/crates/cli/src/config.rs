use std::fmt;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, ValueEnum};
use lattice_susy::shape::{builtin_model, CustomFamily, CustomFamilySpec, ShapeInvariantModel};
use lattice_susy::{SummationPolicy, Units};
use serde::{Deserialize, Serialize};

/// Invalid flags, config or model selection. Exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Flags shared by every subcommand. Unset flags fall back to the config
/// file, then to the built-in defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Model name: a built-in (coulomb, free) or the custom family from --config.
    #[arg(long, global = true)]
    pub model: Option<String>,
    /// Model parameter (ℓ for coulomb).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub l: Option<f64>,
    /// Number of lattice sites.
    #[arg(long, global = true)]
    pub window: Option<usize>,
    /// Largest kernel offset kept in assembled matrices (default: the window size).
    #[arg(long, global = true)]
    pub kernel_cutoff: Option<usize>,
    /// Number of spectrum levels.
    #[arg(long, global = true)]
    pub levels: Option<usize>,
    /// Pass/fail tolerance; each command documents its default.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Secondary output file (sampled wavefunction or eigenvectors).
    #[arg(long, global = true)]
    pub emit: Option<PathBuf>,
    /// TOML run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Wave number in units of π for the semigroup suite.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub k: Option<f64>,
    /// Number of series coefficients for ground-state.
    #[arg(long, global = true)]
    pub terms: Option<usize>,
    /// Paired-summation cutoff for kernel sums.
    #[arg(long, global = true)]
    pub sum_cutoff: Option<usize>,
    #[arg(long, global = true)]
    pub lattice_constant: Option<f64>,
    #[arg(long, global = true)]
    pub hbar: Option<f64>,
    #[arg(long, global = true)]
    pub two_m: Option<f64>,
}

/// Contents of a `--config` file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct FileConfig {
    model: Option<String>,
    l: Option<f64>,
    window: Option<usize>,
    kernel_cutoff: Option<usize>,
    levels: Option<usize>,
    tol: Option<f64>,
    format: Option<Format>,
    k: Option<f64>,
    terms: Option<usize>,
    units: Option<Units>,
    summation: Option<SummationPolicy>,
    custom: Option<CustomFamilySpec>,
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub model: String,
    pub l: f64,
    /// `None` lets the command pick its own default.
    pub window: Option<usize>,
    pub kernel_cutoff: Option<usize>,
    pub levels: usize,
    pub tol: Option<f64>,
    pub format: Format,
    pub k: f64,
    pub terms: usize,
    pub units: Units,
    pub summation: SummationPolicy,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub custom: Option<CustomFamilySpec>,
    #[serde(skip)]
    pub emit: Option<PathBuf>,
}

pub const DEFAULT_LEVELS: usize = 3;
pub const DEFAULT_K: f64 = 0.3;
pub const DEFAULT_TERMS: usize = 40;

impl RunConfig {
    pub fn resolve(flags: &Flags) -> anyhow::Result<Self> {
        let file = match &flags.config {
            Some(path) => read_config(path)?,
            None => FileConfig::default(),
        };
        let mut units = file.units.unwrap_or_default();
        if let Some(v) = flags.lattice_constant {
            units.lattice_constant = v;
        }
        if let Some(v) = flags.hbar {
            units.hbar = v;
        }
        if let Some(v) = flags.two_m {
            units.two_m = v;
        }
        units.validate().map_err(|e| usage(e.to_string()))?;

        let mut summation = file.summation.unwrap_or_default();
        if let Some(c) = flags.sum_cutoff {
            summation.cutoff = c;
        }
        summation.validate().map_err(|e| usage(e.to_string()))?;

        let model = flags
            .model
            .clone()
            .or(file.model)
            .or_else(|| file.custom.as_ref().map(|c| c.name.clone()))
            .unwrap_or_else(|| "coulomb".to_string());

        let cfg = Self {
            model,
            l: flags.l.or(file.l).unwrap_or(0.0),
            window: flags.window.or(file.window),
            kernel_cutoff: flags.kernel_cutoff.or(file.kernel_cutoff),
            levels: flags.levels.or(file.levels).unwrap_or(DEFAULT_LEVELS),
            tol: flags.tol.or(file.tol),
            format: flags.format.or(file.format).unwrap_or_default(),
            k: flags.k.or(file.k).unwrap_or(DEFAULT_K),
            terms: flags.terms.or(file.terms).unwrap_or(DEFAULT_TERMS),
            units,
            summation,
            custom: file.custom,
            emit: flags.emit.clone(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> anyhow::Result<()> {
        if !self.l.is_finite() {
            return Err(usage("--l must be finite"));
        }
        if self.window == Some(0) {
            return Err(usage("--window must be at least 1"));
        }
        if self.kernel_cutoff == Some(0) {
            return Err(usage("--kernel-cutoff must be at least 1"));
        }
        if let Some(t) = self.tol {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(usage("--tol must be a non-negative number"));
            }
        }
        if !self.k.is_finite() {
            return Err(usage("--k must be finite"));
        }
        if self.terms < 2 {
            return Err(usage("--terms must be at least 2"));
        }
        Ok(())
    }

    pub fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    pub fn window_or(&self, default: usize) -> usize {
        self.window.unwrap_or(default)
    }

    /// Kernel cutoff, defaulting to the window size.
    pub fn kernel_cutoff_for(&self, window: usize) -> usize {
        self.kernel_cutoff.unwrap_or(window)
    }

    pub fn model(&self) -> anyhow::Result<Box<dyn ShapeInvariantModel>> {
        if let Some(spec) = &self.custom {
            if self.model == spec.name || self.model == "custom" {
                let family = CustomFamily::from_spec(spec, &self.units)
                    .map_err(|e| usage(format!("custom model: {e}")))?;
                return Ok(Box::new(family));
            }
        }
        if self.model == "custom" {
            return Err(usage("--model custom needs a [custom] section in --config"));
        }
        builtin_model(&self.model, &self.units).map_err(|e| usage(e.to_string()))
    }
}

fn read_config(path: &Path) -> anyhow::Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))
        .map_err(|e| usage(format!("{e:#}")))?;
    toml::from_str(&text).map_err(|e| usage(format!("config {}: {e}", path.display())))
}
