//! Scenario files.
//!
//! A scenario is a TOML document. Top-level keys:
//!
//! ```toml
//! schema_version = 1
//! name = "closeness"            # optional, labels report rows
//! seed = 42                     # master seed, 0 ..= 2^63-1
//! replications = 1000
//! variants = ["two_round_sum", { kind = "conditional_second_round", margin_threshold = 0.1 }]
//!
//! [electorate]
//! voters = 2000
//! options = 2
//! # optional behavior coefficients, all 0 when absent
//!
//! [rule]
//! kind = "plurality"
//!
//! [sweep]                       # optional parameter grid
//! "electorate.closeness" = [0.0, 0.5, 1.0]
//! ```

use std::fmt;
use std::path::{Path, PathBuf};

use repeatvote::{Error as CoreError, ScenarioConfig, SweepValue};
use serde::Deserialize;
use toml::Value;

/// A config that could not be read, parsed or validated.
#[derive(Debug)]
pub struct ConfigError {
    /// File the config came from, if any.
    pub origin: Option<PathBuf>,
    /// Dotted path of the offending field; empty for syntax errors.
    pub field: String,
    pub message: String,
}

impl ConfigError {
    fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        ConfigError {
            origin: None,
            field: field.into(),
            message: message.into(),
        }
    }

    fn at(mut self, origin: &Path) -> Self {
        self.origin = Some(origin.to_path_buf());
        self
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(origin) = &self.origin {
            write!(f, "{}: ", origin.display())?;
        }
        if self.field.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.field, self.message)
        }
    }
}

impl std::error::Error for ConfigError {}

impl From<CoreError> for ConfigError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::BadSpec { field, message } => ConfigError::new(field, message),
            other => ConfigError::new("", other.to_string()),
        }
    }
}

/// Reads, parses and validates a scenario file.
pub fn parse_config(path: impl AsRef<Path>) -> Result<ScenarioConfig, ConfigError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError::new("", format!("cannot read: {e}")).at(path))?;
    parse_config_str(&text).map_err(|e| e.at(path))
}

/// Parses and validates scenario text.
pub fn parse_config_str(text: &str) -> Result<ScenarioConfig, ConfigError> {
    let cfg: ScenarioConfig = toml::from_str(text).map_err(de_error)?;
    cfg.validate()?;
    Ok(cfg)
}

/// Renders a config back to scenario text.
pub fn to_config_string(cfg: &ScenarioConfig) -> Result<String, ConfigError> {
    toml::to_string(cfg).map_err(|e| ConfigError::new("", e.to_string()))
}

fn de_error(e: toml::de::Error) -> ConfigError {
    // The rendered error carries line, column and the offending snippet.
    ConfigError::new("", e.to_string().trim_end())
}

/// One point of a sweep grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridPoint {
    /// Scenario name with the axis values appended, e.g. `base[electorate.closeness=0.5]`.
    pub label: String,
    pub config: ScenarioConfig,
}

/// Expands the `[sweep]` table into the cross product of its axes.
///
/// Axes vary in key order, the last axis fastest. A config without a sweep
/// yields itself as the only point.
pub fn expand_sweep(cfg: &ScenarioConfig) -> Result<Vec<GridPoint>, ConfigError> {
    let mut base = cfg.clone();
    let axes: Vec<(String, Vec<SweepValue>)> =
        std::mem::take(&mut base.sweep).into_iter().collect();
    if axes.is_empty() {
        return Ok(vec![GridPoint {
            label: base.name.clone(),
            config: base,
        }]);
    }
    // TOML integers are signed; the seed bypasses the round trip.
    let seed = std::mem::take(&mut base.master_seed);
    let base_value = Value::try_from(&base).map_err(|e| ConfigError::new("", e.to_string()))?;
    let total: usize = axes.iter().map(|(_, vs)| vs.len()).product();
    let mut points = Vec::with_capacity(total);
    let mut index = vec![0usize; axes.len()];
    for _ in 0..total {
        let mut value = base_value.clone();
        let mut parts = Vec::with_capacity(axes.len());
        for ((key, values), &i) in axes.iter().zip(&index) {
            set_path(&mut value, key, to_toml(&values[i]))?;
            parts.push(format!("{key}={}", values[i]));
        }
        let mut config = ScenarioConfig::deserialize(value)
            .map_err(|e| ConfigError::new(format!("sweep[{}]", parts.join(";")), e.to_string()))?;
        config.master_seed = seed;
        config.validate().map_err(|e| {
            let mut e = ConfigError::from(e);
            e.message = format!("{} (at sweep point {})", e.message, parts.join(";"));
            e
        })?;
        points.push(GridPoint {
            label: format!("{}[{}]", base.name, parts.join(";")),
            config,
        });
        for d in (0..axes.len()).rev() {
            index[d] += 1;
            if index[d] < axes[d].1.len() {
                break;
            }
            index[d] = 0;
        }
    }
    Ok(points)
}

fn to_toml(v: &SweepValue) -> Value {
    match v {
        SweepValue::Bool(b) => Value::Boolean(*b),
        SweepValue::Int(i) => Value::Integer(*i),
        SweepValue::Float(x) => Value::Float(*x),
        SweepValue::Text(s) => Value::String(s.clone()),
    }
}

fn set_path(root: &mut Value, path: &str, new: Value) -> Result<(), ConfigError> {
    let field = format!("sweep.{path}");
    let keys: Vec<&str> = path.split('.').collect();
    if keys.iter().any(|k| k.is_empty()) {
        return Err(ConfigError::new(field, "malformed key path"));
    }
    if keys[0] == "sweep" {
        return Err(ConfigError::new(field, "cannot sweep the sweep table"));
    }
    let (last, parents) = keys.split_last().expect("non-empty path");
    let mut node = root;
    for k in parents {
        node = node
            .as_table_mut()
            .and_then(|t| t.get_mut(*k))
            .ok_or_else(|| {
                ConfigError::new(field.clone(), format!("no table `{k}` in the scenario"))
            })?;
    }
    let table = node
        .as_table_mut()
        .ok_or_else(|| ConfigError::new(field.clone(), "parent is not a table"))?;
    // Integers are accepted where the scenario holds a float.
    let new = match (table.get(*last), new) {
        (Some(Value::Float(_)), Value::Integer(i)) => Value::Float(i as f64),
        (_, v) => v,
    };
    table.insert((*last).to_string(), new);
    Ok(())
}
