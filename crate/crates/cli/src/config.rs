//! Analysis configuration: JSON config file plus command-line overrides.

use std::path::Path;

use anyhow::{bail, Context, Result};
use mcda_core::segment::{ThresholdPolicy, Thresholds};
use serde::Deserialize;

/// Tolerance accepted when validating manually supplied weights; they are
/// renormalized exactly afterwards.
pub const MANUAL_WEIGHT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    Minmax,
    Vector,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Saw,
    Topsis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Aggregation {
    Copeland,
    None,
}

/// Config file schema; every field is optional and defaults apply.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub weights: Option<Vec<f64>>,
    pub normalize: Option<Normalization>,
    pub methods: Option<Vec<Method>>,
    pub aggregate: Option<Aggregation>,
    pub thresholds: Option<ThresholdsSpec>,
    pub tie_tolerance: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ThresholdsSpec {
    Named(String),
    Fixed([f64; 2]),
}

/// Resolved analysis configuration.
#[derive(Debug, Clone)]
pub struct AnalysisConfig {
    /// `None` means entropy weighting; `Some` holds validated manual
    /// weights (already renormalized to an exact simplex).
    pub manual_weights: Option<Vec<f64>>,
    pub normalize: Normalization,
    pub methods: Vec<Method>,
    /// `None` means "aggregate when both methods run".
    pub aggregate: Option<Aggregation>,
    pub thresholds: ThresholdPolicy,
    pub tie_tolerance: f64,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            manual_weights: None,
            normalize: Normalization::Minmax,
            methods: vec![Method::Saw, Method::Topsis],
            aggregate: None,
            thresholds: ThresholdPolicy::Median,
            tie_tolerance: mcda_core::DEFAULT_TIE_TOLERANCE,
        }
    }
}

impl AnalysisConfig {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let mut config = AnalysisConfig::default();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read config '{}'", path.display()))?;
            let file: ConfigFile = serde_json::from_str(&text)
                .with_context(|| format!("invalid config '{}'", path.display()))?;
            if let Some(weights) = file.weights {
                config.manual_weights = Some(validate_manual_weights(&weights)?);
            }
            if let Some(normalize) = file.normalize {
                config.normalize = normalize;
            }
            if let Some(methods) = file.methods {
                config.set_methods(methods)?;
            }
            if let Some(aggregate) = file.aggregate {
                config.aggregate = Some(aggregate);
            }
            if let Some(thresholds) = file.thresholds {
                config.thresholds = parse_thresholds_spec(&thresholds)?;
            }
            if let Some(tie) = file.tie_tolerance {
                if !tie.is_finite() || tie < 0.0 {
                    bail!("tie_tolerance must be finite and >= 0, got {tie}");
                }
                config.tie_tolerance = tie;
            }
        }
        Ok(config)
    }

    pub fn set_methods(&mut self, methods: Vec<Method>) -> Result<()> {
        if methods.is_empty() {
            bail!("at least one method (saw, topsis) is required");
        }
        let mut deduped = Vec::new();
        for method in methods {
            if !deduped.contains(&method) {
                deduped.push(method);
            }
        }
        self.methods = deduped;
        Ok(())
    }

    /// Resolve whether Copeland aggregation runs, rejecting the
    /// contradictory "aggregate one method" configuration.
    pub fn aggregation_enabled(&self) -> Result<bool> {
        match self.aggregate {
            Some(Aggregation::Copeland) => {
                if self.methods.len() < 2 {
                    bail!(
                        "config contradiction: copeland aggregation needs both methods, \
                         but only {:?} was requested",
                        self.methods
                    );
                }
                Ok(true)
            }
            Some(Aggregation::None) => Ok(false),
            None => Ok(self.methods.len() >= 2),
        }
    }
}

/// `w1,w2,...` from the command line.
pub fn parse_weights_flag(text: &str) -> Result<Vec<f64>> {
    let weights = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .with_context(|| format!("invalid weight '{part}'"))
        })
        .collect::<Result<Vec<f64>>>()?;
    validate_manual_weights(&weights)
}

fn validate_manual_weights(weights: &[f64]) -> Result<Vec<f64>> {
    if weights.is_empty() {
        bail!("manual weights cannot be empty");
    }
    for &w in weights {
        if !w.is_finite() || w < 0.0 {
            bail!("manual weights must be finite and >= 0, got {w}");
        }
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > MANUAL_WEIGHT_TOLERANCE {
        bail!(
            "manual weights must sum to 1 within {MANUAL_WEIGHT_TOLERANCE} \
             (got sum {sum})"
        );
    }
    // renormalize so the core simplex check (1e-9) always holds
    Ok(weights.iter().map(|w| w / sum).collect())
}

/// `median` or `t_f,t_c` from the command line or config.
pub fn parse_thresholds_flag(text: &str) -> Result<ThresholdPolicy> {
    if text.eq_ignore_ascii_case("median") {
        return Ok(ThresholdPolicy::Median);
    }
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        bail!("thresholds must be 'median' or 't_f,t_c', got '{text}'");
    }
    let firm: f64 = parts[0]
        .trim()
        .parse()
        .with_context(|| format!("invalid firm threshold '{}'", parts[0]))?;
    let customer: f64 = parts[1]
        .trim()
        .parse()
        .with_context(|| format!("invalid customer threshold '{}'", parts[1]))?;
    if !firm.is_finite() || !customer.is_finite() {
        bail!("thresholds must be finite");
    }
    Ok(ThresholdPolicy::Fixed(Thresholds { firm, customer }))
}

fn parse_thresholds_spec(spec: &ThresholdsSpec) -> Result<ThresholdPolicy> {
    match spec {
        ThresholdsSpec::Named(name) => parse_thresholds_flag(name),
        ThresholdsSpec::Fixed([firm, customer]) => {
            parse_thresholds_flag(&format!("{firm},{customer}"))
        }
    }
}
