//! `key = value` run configuration with flag overrides.

use std::path::PathBuf;

use nco_core::PhysicalParams;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("unknown key `{key}`")]
    UnknownKey { key: String },
    #[error("invalid value for `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Parameters a sweep may vary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepParam {
    Hbar,
    Mass,
    Omega,
    OmegaC,
    Alpha,
    Theta,
    Eta,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::Hbar => "hbar",
            SweepParam::Mass => "mass",
            SweepParam::Omega => "omega",
            SweepParam::OmegaC => "omega_c",
            SweepParam::Alpha => "alpha",
            SweepParam::Theta => "theta",
            SweepParam::Eta => "eta",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "hbar" => SweepParam::Hbar,
            "mass" | "m" => SweepParam::Mass,
            "omega" => SweepParam::Omega,
            "omega_c" | "omega-c" => SweepParam::OmegaC,
            "alpha" => SweepParam::Alpha,
            "theta" => SweepParam::Theta,
            "eta" => SweepParam::Eta,
            _ => return None,
        })
    }

    pub fn set(self, p: &mut PhysicalParams, v: f64) {
        match self {
            SweepParam::Hbar => p.hbar = v,
            SweepParam::Mass => p.mass = v,
            SweepParam::Omega => p.omega = v,
            SweepParam::OmegaC => p.omega_c = v,
            SweepParam::Alpha => p.alpha = v,
            SweepParam::Theta => p.theta = v,
            SweepParam::Eta => p.eta = v,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepAxis {
    pub param: SweepParam,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl SweepAxis {
    /// Evenly spaced values, endpoints included.
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|k| if k + 1 == self.count { self.stop } else { self.start + step * k as f64 })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub params: PhysicalParams,
    pub cutoff_xy: u32,
    pub cutoff_z: u32,
    pub deg_tol: f64,
    pub fd_step: f64,
    pub fd_levels: usize,
    /// Label window for correction tables.
    pub rows_xy: u32,
    pub rows_z: u32,
    /// Eigenvalues kept per sweep point.
    pub sweep_levels: usize,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub sweep: Option<SweepAxis>,
    pub workers: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            params: PhysicalParams::default(),
            cutoff_xy: 12,
            cutoff_z: 6,
            deg_tol: 1e-8,
            fd_step: 1e-4,
            fd_levels: 2,
            rows_xy: 4,
            rows_z: 1,
            sweep_levels: 10,
            out: None,
            format: Format::Csv,
            sweep: None,
            workers: 1,
        }
    }
}

pub const KEYS: &[&str] = &[
    "hbar", "mass", "omega", "omega_c", "alpha", "theta", "eta", "charge", "field", "light_speed", "cutoff_xy", "cutoff_z", "deg_tol", "fd_step",
    "fd_levels", "rows_xy", "rows_z", "sweep_levels", "out", "format", "sweep", "workers",
];

fn canonical_key(key: &str) -> Option<&'static str> {
    let k = key.trim().replace('-', "_");
    let k = match k.as_str() {
        "m" => "mass",
        "h" => "fd_step",
        "n_xy" => "cutoff_xy",
        "n_z" => "cutoff_z",
        other => other,
    };
    KEYS.iter().copied().find(|&c| c == k)
}

/// Splits config text into `(line, key, value)` triples.
pub fn parse_lines(text: &str) -> Result<Vec<(usize, String, String)>, ConfigError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(ConfigError::Parse { line: i + 1, reason: format!("expected `key = value`, got `{line}`") });
        };
        let (k, v) = (k.trim(), v.trim());
        if k.is_empty() {
            return Err(ConfigError::Parse { line: i + 1, reason: "missing key".into() });
        }
        out.push((i + 1, k.to_string(), v.to_string()));
    }
    Ok(out)
}

fn invalid(key: &str, reason: impl Into<String>) -> ConfigError {
    ConfigError::InvalidValue { key: key.to_string(), reason: reason.into() }
}

fn real(key: &str, v: &str) -> Result<f64, ConfigError> {
    let x: f64 = v.parse().map_err(|_| invalid(key, format!("`{v}` is not a number")))?;
    if !x.is_finite() {
        return Err(invalid(key, "must be finite"));
    }
    Ok(x)
}

fn positive(key: &str, v: &str) -> Result<f64, ConfigError> {
    let x = real(key, v)?;
    if x <= 0.0 {
        return Err(invalid(key, "must be positive"));
    }
    Ok(x)
}

fn count<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, ConfigError> {
    v.parse().map_err(|_| invalid(key, format!("`{v}` is not a non-negative integer")))
}

fn parse_sweep(v: &str) -> Result<SweepAxis, ConfigError> {
    let parts: Vec<&str> = v.split(':').map(str::trim).collect();
    let [param, start, stop, n] = parts[..] else {
        return Err(invalid("sweep", "expected `param:start:stop:count`"));
    };
    let param = SweepParam::parse(param).ok_or_else(|| invalid("sweep", format!("cannot sweep `{param}`")))?;
    let count: usize = count("sweep", n)?;
    if count == 0 {
        return Err(invalid("sweep", "count must be at least 1"));
    }
    Ok(SweepAxis { param, start: real("sweep", start)?, stop: real("sweep", stop)?, count })
}

/// Builds a config from file text, then applies `overrides` (flag values)
/// on top. Keys may use `-` or `_`.
pub fn parse_config(text: &str, overrides: &[(String, String)]) -> Result<RunConfig, ConfigError> {
    let mut cfg = RunConfig::default();
    let (mut charge, mut field, mut light) = (None, None, None);
    let mut explicit_omega_c = false;

    let file = parse_lines(text)?;
    let entries = file.iter().map(|(_, k, v)| (k.as_str(), v.as_str())).chain(overrides.iter().map(|(k, v)| (k.as_str(), v.as_str())));
    for (key, v) in entries {
        let key = canonical_key(key).ok_or_else(|| ConfigError::UnknownKey { key: key.to_string() })?;
        let p = &mut cfg.params;
        match key {
            "hbar" => p.hbar = positive(key, v)?,
            "mass" => p.mass = positive(key, v)?,
            "omega" => p.omega = positive(key, v)?,
            "omega_c" => {
                p.omega_c = real(key, v)?;
                explicit_omega_c = true;
            }
            "alpha" => {
                let a = real(key, v)?;
                if !(a > 0.0 && a <= 1.0) {
                    return Err(invalid(key, format!("{a} is outside (0, 1]")));
                }
                p.alpha = a;
            }
            "theta" => p.theta = real(key, v)?,
            "eta" => p.eta = real(key, v)?,
            "charge" => charge = Some(real(key, v)?),
            "field" => field = Some(real(key, v)?),
            "light_speed" => light = Some(positive(key, v)?),
            "cutoff_xy" => cfg.cutoff_xy = count(key, v)?,
            "cutoff_z" => cfg.cutoff_z = count(key, v)?,
            "deg_tol" => cfg.deg_tol = positive(key, v)?,
            "fd_step" => cfg.fd_step = positive(key, v)?,
            "fd_levels" => {
                cfg.fd_levels = count(key, v)?;
                if cfg.fd_levels == 0 {
                    return Err(invalid(key, "must be at least 1"));
                }
            }
            "rows_xy" => cfg.rows_xy = count(key, v)?,
            "rows_z" => cfg.rows_z = count(key, v)?,
            "sweep_levels" => cfg.sweep_levels = count(key, v)?,
            "out" => cfg.out = if v.is_empty() { None } else { Some(PathBuf::from(v)) },
            "format" => {
                cfg.format = match v.to_ascii_lowercase().as_str() {
                    "csv" => Format::Csv,
                    "json" => Format::Json,
                    _ => return Err(invalid(key, format!("`{v}` is not csv or json"))),
                }
            }
            "sweep" => cfg.sweep = Some(parse_sweep(v)?),
            "workers" => {
                cfg.workers = count(key, v)?;
                if cfg.workers == 0 {
                    return Err(invalid(key, "must be at least 1"));
                }
            }
            _ => unreachable!("key list and match arms disagree"),
        }
    }

    match (charge, field, light) {
        (None, None, None) => {}
        (Some(q), Some(b), Some(c)) => {
            if explicit_omega_c {
                return Err(invalid("omega_c", "give either omega_c or charge/field/light_speed, not both"));
            }
            cfg.params.omega_c = PhysicalParams::cyclotron_frequency(q, b, cfg.params.mass, c).map_err(|e| invalid("charge", e.to_string()))?;
        }
        _ => return Err(invalid("charge", "charge, field and light_speed must be given together")),
    }
    cfg.params.validate().map_err(|e| invalid("params", e.to_string()))?;
    Ok(cfg)
}
