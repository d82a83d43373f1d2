//! Apparent time `hbar / dE` and the interaction it indicates.

use crate::reaction::Interaction;

/// Reduced Planck constant in GeV s.
pub const HBAR_GEV_S: f64 = 6.584e-25;

/// Characteristic time of each interaction, in seconds.
pub const DECADES: [(f64, Interaction); 3] = [
    (1e-10, Interaction::Weak),
    (1e-16, Interaction::Electromagnetic),
    (1e-23, Interaction::Strong),
];

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum TimeError {
    #[error("energy {0} GeV is not positive")]
    NonPositiveEnergy(f64),
    #[error("time {0} s is not positive")]
    NonPositiveTime(f64),
}

impl TimeError {
    pub fn name(&self) -> &'static str {
        match self {
            TimeError::NonPositiveEnergy(_) => "NonPositiveEnergy",
            TimeError::NonPositiveTime(_) => "NonPositiveTime",
        }
    }
}

pub fn apparent_time(delta_e_gev: f64) -> Result<f64, TimeError> {
    if delta_e_gev.is_nan() || delta_e_gev <= 0.0 {
        return Err(TimeError::NonPositiveEnergy(delta_e_gev));
    }
    Ok(HBAR_GEV_S / delta_e_gev)
}

/// Nearest characteristic time in log space.
pub fn classify_interaction(t_seconds: f64) -> Result<Interaction, TimeError> {
    if t_seconds.is_nan() || t_seconds <= 0.0 {
        return Err(TimeError::NonPositiveTime(t_seconds));
    }
    let lt = libm::log10(t_seconds);
    let distance = |t: f64| libm::fabs(libm::log10(t) - lt);
    let mut best = DECADES[0];
    for d in DECADES {
        if distance(d.0) < distance(best.0) {
            best = d;
        }
    }
    Ok(best.1)
}
