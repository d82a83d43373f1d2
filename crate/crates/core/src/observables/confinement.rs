//! Confinement from sampled point and continuous spectra.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct SamplePoint {
    pub label: String,
    pub point_spectrum: Vec<f64>,
    pub continuous_spectrum: Vec<(f64, f64)>,
}

impl SamplePoint {
    /// The union of eigenspaces is nontrivial exactly when some eigenvalue
    /// exists.
    pub fn has_bound_states(&self) -> bool {
        !self.point_spectrum.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DescriptorError {
    #[error("descriptor has no sample points")]
    Empty,
    #[error("point {label:?}: interval ({lo}, {hi}) is reversed or not finite")]
    BadInterval { label: String, lo: f64, hi: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDescriptor {
    points: Vec<SamplePoint>,
}

impl SpectralDescriptor {
    pub fn new(points: Vec<SamplePoint>) -> Result<Self, DescriptorError> {
        if points.is_empty() {
            return Err(DescriptorError::Empty);
        }
        for p in &points {
            for &(lo, hi) in &p.continuous_spectrum {
                if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                    return Err(DescriptorError::BadInterval {
                        label: p.label.clone(),
                        lo,
                        hi,
                    });
                }
            }
        }
        Ok(SpectralDescriptor { points })
    }

    pub fn points(&self) -> &[SamplePoint] {
        &self.points
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfinementClass {
    Confined,
    ConfinedDeconfinable,
    /// Labels of the points without bound states.
    PartiallyConfined(Vec<String>),
    Deconfined,
}

impl ConfinementClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConfinementClass::Confined => "confined",
            ConfinementClass::ConfinedDeconfinable => "confined-deconfinable",
            ConfinementClass::PartiallyConfined(_) => "partially-confined",
            ConfinementClass::Deconfined => "deconfined",
        }
    }
}

impl fmt::Display for ConfinementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())?;
        if let ConfinementClass::PartiallyConfined(labels) = self {
            write!(f, " ({})", labels.join(", "))?;
        }
        Ok(())
    }
}

pub fn confinement(d: &SpectralDescriptor) -> ConfinementClass {
    let open: Vec<String> = d
        .points
        .iter()
        .filter(|p| !p.has_bound_states())
        .map(|p| p.label.clone())
        .collect();
    if open.len() == d.points.len() {
        ConfinementClass::Deconfined
    } else if !open.is_empty() {
        ConfinementClass::PartiallyConfined(open)
    } else if d.points.iter().all(|p| !p.continuous_spectrum.is_empty()) {
        ConfinementClass::ConfinedDeconfinable
    } else {
        ConfinementClass::Confined
    }
}
