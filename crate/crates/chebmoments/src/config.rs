//! Run configuration: sieve ceiling, default weight parameter, quadrature
//! tolerances, and the unspecified absolute constants, which are always
//! configuration inputs echoed into reports — never baked into assertions.
//!
//! Configuration is TOML (sections of key = value pairs); every field can
//! be overridden by an environment variable prefixed `CHEBM_`.

use serde::Deserialize;

use crate::error::{Error, Result};

/// Hard upper bound on the configurable sieve ceiling.
pub const MAX_SIEVE_CEILING: u64 = 1_000_000_000;

#[derive(Debug, Clone, Deserialize)]
#[serde(default)]
pub struct Config {
    pub sieve: SieveSection,
    pub weights: WeightsSection,
    pub quadrature: QuadratureSection,
    pub constants: ConstantsSection,
    pub run: RunSection,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(default)]
pub struct SieveSection {
    /// largest prime the shared table may reach
    pub ceiling: u64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(default)]
pub struct WeightsSection {
    /// default δ for the weight class
    pub delta: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(default)]
pub struct QuadratureSection {
    /// absolute tolerance on normalized moment integrals
    pub tol: f64,
    /// η window truncation tolerance in ψ_η
    pub support_tol: f64,
}

/// The absolute constants the theory leaves unspecified. They are echoed
/// into reports; no test asserts a value for them.
#[derive(Debug, Clone, Deserialize)]
#[serde(default)]
pub struct ConstantsSection {
    pub kappa_eta: f64,
    pub kappa_prime: f64,
    /// character-bound constants 0 < q < 1, k ≥ 1, b > 0
    pub roichman_q: f64,
    pub roichman_k: f64,
    pub roichman_b: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(default)]
pub struct RunSection {
    pub threads: usize,
    pub out_dir: String,
}

impl Default for SieveSection {
    fn default() -> Self {
        Self { ceiling: 100_000_000 }
    }
}

impl Default for WeightsSection {
    fn default() -> Self {
        Self { delta: 0.25 }
    }
}

impl Default for QuadratureSection {
    fn default() -> Self {
        Self { tol: 1e-8, support_tol: 1e-12 }
    }
}

impl Default for ConstantsSection {
    fn default() -> Self {
        Self {
            kappa_eta: 1.0,
            kappa_prime: 1.0,
            roichman_q: 0.5,
            roichman_k: 1.0,
            roichman_b: 1.0,
        }
    }
}

impl Default for RunSection {
    fn default() -> Self {
        Self { threads: 1, out_dir: ".".into() }
    }
}

impl Default for Config {
    fn default() -> Self {
        Self {
            sieve: SieveSection::default(),
            weights: WeightsSection::default(),
            quadrature: QuadratureSection::default(),
            constants: ConstantsSection::default(),
            run: RunSection::default(),
        }
    }
}

impl Config {
    /// Parse TOML text, then apply `CHEBM_*` environment overrides and
    /// validate.
    pub fn from_toml(text: &str) -> Result<Self> {
        let mut cfg: Config =
            toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        cfg.apply_env();
        cfg.validate()?;
        Ok(cfg)
    }

    /// The default configuration with environment overrides applied.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Config::default();
        cfg.apply_env();
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply_env(&mut self) {
        fn num<T: std::str::FromStr>(name: &str, slot: &mut T) {
            if let Ok(v) = std::env::var(name) {
                if let Ok(parsed) = v.trim().parse::<T>() {
                    *slot = parsed;
                }
            }
        }
        num("CHEBM_SIEVE_CEILING", &mut self.sieve.ceiling);
        num("CHEBM_DELTA", &mut self.weights.delta);
        num("CHEBM_QUAD_TOL", &mut self.quadrature.tol);
        num("CHEBM_SUPPORT_TOL", &mut self.quadrature.support_tol);
        num("CHEBM_KAPPA_ETA", &mut self.constants.kappa_eta);
        num("CHEBM_KAPPA_PRIME", &mut self.constants.kappa_prime);
        num("CHEBM_ROICHMAN_Q", &mut self.constants.roichman_q);
        num("CHEBM_ROICHMAN_K", &mut self.constants.roichman_k);
        num("CHEBM_ROICHMAN_B", &mut self.constants.roichman_b);
        num("CHEBM_THREADS", &mut self.run.threads);
        if let Ok(v) = std::env::var("CHEBM_OUT_DIR") {
            self.run.out_dir = v;
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sieve.ceiling > MAX_SIEVE_CEILING {
            return Err(Error::Parse(format!(
                "sieve ceiling {} exceeds the hard limit {MAX_SIEVE_CEILING}",
                self.sieve.ceiling
            )));
        }
        for (name, v) in [
            ("weights.delta", self.weights.delta),
            ("quadrature.tol", self.quadrature.tol),
            ("quadrature.support_tol", self.quadrature.support_tol),
            ("constants.kappa_eta", self.constants.kappa_eta),
            ("constants.kappa_prime", self.constants.kappa_prime),
            ("constants.roichman_b", self.constants.roichman_b),
        ] {
            if !(v > 0.0) {
                return Err(Error::Parse(format!("{name} must be positive, got {v}")));
            }
        }
        if !(self.constants.roichman_q > 0.0 && self.constants.roichman_q < 1.0) {
            return Err(Error::Parse(format!(
                "constants.roichman_q must lie in (0, 1), got {}",
                self.constants.roichman_q
            )));
        }
        if self.constants.roichman_k < 1.0 {
            return Err(Error::Parse(format!(
                "constants.roichman_k must be >= 1, got {}",
                self.constants.roichman_k
            )));
        }
        if self.run.threads == 0 {
            return Err(Error::Parse("run.threads must be >= 1".into()));
        }
        Ok(())
    }
}
