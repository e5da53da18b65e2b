//! Run configuration: precisions, tolerances, seeding, choice strategy.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::numerics::Scalar;

/// How "arbitrary" choices in macros are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChoiceStrategy {
    /// Deterministic defaults: split parameter 1/2, fixed trial angles.
    Half,
    /// Seeded pseudo-random choices; still fully reproducible per seed.
    Random,
}

impl fmt::Display for ChoiceStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChoiceStrategy::Half => write!(f, "half"),
            ChoiceStrategy::Random => write!(f, "random"),
        }
    }
}

impl FromStr for ChoiceStrategy {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "half" => Ok(ChoiceStrategy::Half),
            "random" => Ok(ChoiceStrategy::Random),
            other => Err(ConfigError::BadChoiceStrategy(other.to_owned())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    /// Working precision for all board arithmetic.
    pub precision_bits: usize,
    /// Hard cap for predicate escalation.
    pub max_precision_bits: usize,
    /// Predicate-level tolerance (equality bands).
    pub epsilon_eq: Scalar,
    /// End-to-end tolerance for oracle comparison.
    pub epsilon_cmp: Scalar,
    pub seed: u64,
    pub choice_strategy: ChoiceStrategy,
    /// Significant decimal digits used when serializing coordinates.
    pub output_digits: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            precision_bits: 256,
            max_precision_bits: 4096,
            epsilon_eq: Scalar::pow2(-128, 64),
            epsilon_cmp: Scalar::pow2(-64, 64),
            seed: 42,
            choice_strategy: ChoiceStrategy::Half,
            output_digits: 40,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.precision_bits < 64 {
            return Err(ConfigError::Invalid("precision_bits must be at least 64".into()));
        }
        if self.precision_bits > self.max_precision_bits {
            return Err(ConfigError::Invalid(
                "precision_bits must not exceed max_precision_bits".into(),
            ));
        }
        let one = Scalar::one(64);
        if !self.epsilon_eq.is_positive()
            || self.epsilon_eq >= self.epsilon_cmp
            || self.epsilon_cmp >= one
        {
            return Err(ConfigError::Invalid(
                "tolerances must satisfy 0 < epsilon_eq < epsilon_cmp < 1".into(),
            ));
        }
        if self.output_digits < 8 {
            return Err(ConfigError::Invalid("output_digits must be at least 8".into()));
        }
        Ok(())
    }

    /// Parse an epsilon given either as `2^-128` or as a decimal literal.
    pub fn parse_epsilon(text: &str) -> Result<Scalar, ConfigError> {
        let t = text.trim();
        if let Some(exp) = t.strip_prefix("2^") {
            let e: i32 = exp
                .parse()
                .map_err(|_| ConfigError::Invalid(format!("bad epsilon exponent {t:?}")))?;
            return Ok(Scalar::pow2(e, 64));
        }
        Scalar::from_decimal(t, 192).map_err(|e| ConfigError::Invalid(e.to_string()))
    }
}

/// On-disk form of [`Config`]; every field optional so partial files work.
#[derive(Debug, Default, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub precision_bits: Option<usize>,
    pub max_precision_bits: Option<usize>,
    pub epsilon_eq: Option<String>,
    pub epsilon_cmp: Option<String>,
    pub seed: Option<u64>,
    pub choice_strategy: Option<ChoiceStrategy>,
    pub output_digits: Option<usize>,
}

impl ConfigFile {
    pub fn apply(&self, base: Config) -> Result<Config, ConfigError> {
        let mut c = base;
        if let Some(v) = self.precision_bits {
            c.precision_bits = v;
        }
        if let Some(v) = self.max_precision_bits {
            c.max_precision_bits = v;
        }
        if let Some(v) = &self.epsilon_eq {
            c.epsilon_eq = Config::parse_epsilon(v)?;
        }
        if let Some(v) = &self.epsilon_cmp {
            c.epsilon_cmp = Config::parse_epsilon(v)?;
        }
        if let Some(v) = self.seed {
            c.seed = v;
        }
        if let Some(v) = self.choice_strategy {
            c.choice_strategy = v;
        }
        if let Some(v) = self.output_digits {
            c.output_digits = v;
        }
        c.validate()?;
        Ok(c)
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum ConfigError {
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("unknown choice strategy {0:?} (expected \"half\" or \"random\")")]
    BadChoiceStrategy(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        Config::default().validate().unwrap();
    }

    #[test]
    fn epsilon_notations() {
        let a = Config::parse_epsilon("2^-128").unwrap();
        assert_eq!(a, Scalar::pow2(-128, 64));
        let b = Config::parse_epsilon("0.25").unwrap();
        assert_eq!(b, Scalar::pow2(-2, 64));
    }

    #[test]
    fn partial_file_overrides() {
        let f: ConfigFile = serde_json::from_str(r#"{"seed": 7, "epsilon_eq": "2^-100"}"#).unwrap();
        let c = f.apply(Config::default()).unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!(c.epsilon_eq, Scalar::pow2(-100, 64));
        assert_eq!(c.precision_bits, 256);
    }
}
