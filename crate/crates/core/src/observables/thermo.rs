//! Canonical-ensemble thermodynamics of a finite discrete spectrum.

use alloc::vec::Vec;

/// Largest `ln Z` that still fits in an `f64`.
pub const MAX_LN_PARTITION: f64 = 709.78;

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum ThermoError {
    #[error("spectrum has no levels")]
    Empty,
    #[error("level {index}: degeneracy {value} is not positive")]
    NonPositiveDegeneracy { index: usize, value: f64 },
    #[error("level {index}: energy is not finite")]
    NonFinite { index: usize },
    #[error("temperature and Boltzmann constant must be positive")]
    NonPositiveTemperature,
    #[error("ln Z = {0} overflows")]
    Overflow(f64),
}

/// Levels `(E, N)` sorted by energy.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    levels: Vec<(f64, f64)>,
}

impl Spectrum {
    pub fn new(mut levels: Vec<(f64, f64)>) -> Result<Self, ThermoError> {
        if levels.is_empty() {
            return Err(ThermoError::Empty);
        }
        for (index, &(e, n)) in levels.iter().enumerate() {
            if !e.is_finite() {
                return Err(ThermoError::NonFinite { index });
            }
            if !(n > 0.0 && n.is_finite()) {
                return Err(ThermoError::NonPositiveDegeneracy { index, value: n });
            }
        }
        levels.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(Spectrum { levels })
    }

    pub fn levels(&self) -> &[(f64, f64)] {
        &self.levels
    }

    fn log_weights(&self, beta: f64) -> impl Iterator<Item = f64> + '_ {
        self.levels
            .iter()
            .map(move |&(e, n)| libm::log(n) - beta * e)
    }

    /// `ln Z`, shifted by the largest exponent.
    pub fn ln_partition(&self, beta: f64) -> f64 {
        let max = self.log_weights(beta).fold(f64::NEG_INFINITY, f64::max);
        let sum: f64 = self.log_weights(beta).map(|w| libm::exp(w - max)).sum();
        max + libm::log(sum)
    }

    pub fn partition(&self, beta: f64) -> Result<f64, ThermoError> {
        let ln_z = self.ln_partition(beta);
        if ln_z > MAX_LN_PARTITION {
            return Err(ThermoError::Overflow(ln_z));
        }
        Ok(libm::exp(ln_z))
    }

    /// Level occupation `N e^{-bE} / Z`.
    pub fn probability(&self, beta: f64) -> Vec<f64> {
        let ln_z = self.ln_partition(beta);
        self.log_weights(beta)
            .map(|w| libm::exp(w - ln_z))
            .collect()
    }

    pub fn avg_energy(&self, beta: f64) -> f64 {
        self.probability(beta)
            .iter()
            .zip(&self.levels)
            .map(|(p, &(e, _))| p * e)
            .sum()
    }

    pub fn fluctuation(&self, beta: f64) -> f64 {
        let mean = self.avg_energy(beta);
        self.probability(beta)
            .iter()
            .zip(&self.levels)
            .map(|(p, &(e, _))| p * (e - mean) * (e - mean))
            .sum()
    }

    /// `-k sum p ln p` over the `N`-weighted microstates.
    pub fn entropy(&self, beta: f64, k_b: f64) -> f64 {
        let ln_z = self.ln_partition(beta);
        let s: f64 = self
            .probability(beta)
            .iter()
            .zip(&self.levels)
            .map(|(p, &(e, _))| p * (-beta * e - ln_z))
            .sum();
        -k_b * s
    }

    fn beta_of(theta: f64, k_b: f64) -> Result<f64, ThermoError> {
        if theta > 0.0 && k_b > 0.0 {
            Ok(1.0 / (k_b * theta))
        } else {
            Err(ThermoError::NonPositiveTemperature)
        }
    }

    pub fn heat_capacity(&self, theta: f64, k_b: f64) -> Result<f64, ThermoError> {
        let beta = Self::beta_of(theta, k_b)?;
        Ok(self.fluctuation(beta) / (k_b * theta * theta))
    }

    pub fn free_energy(&self, theta: f64, k_b: f64) -> Result<f64, ThermoError> {
        let beta = Self::beta_of(theta, k_b)?;
        Ok(-k_b * theta * self.ln_partition(beta))
    }

    /// Every function at one `beta`; temperature-based entries need
    /// `beta > 0`.
    pub fn report(&self, beta: f64, k_b: f64) -> ThermoReport {
        let theta = (beta > 0.0 && k_b > 0.0).then(|| 1.0 / (k_b * beta));
        let ln_z = self.ln_partition(beta);
        ThermoReport {
            beta,
            k_b,
            theta,
            ln_partition: ln_z,
            partition: self.partition(beta).ok(),
            avg_energy: self.avg_energy(beta),
            fluctuation: self.fluctuation(beta),
            entropy: self.entropy(beta, k_b),
            heat_capacity: theta.and_then(|t| self.heat_capacity(t, k_b).ok()),
            free_energy: theta.and_then(|t| self.free_energy(t, k_b).ok()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoReport {
    pub beta: f64,
    pub k_b: f64,
    pub theta: Option<f64>,
    pub ln_partition: f64,
    /// `None` on overflow.
    pub partition: Option<f64>,
    pub avg_energy: f64,
    pub fluctuation: f64,
    pub entropy: f64,
    pub heat_capacity: Option<f64>,
    pub free_energy: Option<f64>,
}
