//! Conservation analysis and interaction-regime classification.

use alloc::collections::BTreeMap;
use core::fmt;
use core::str::FromStr;

use num_traits::{Signed, Zero};

use super::Reaction;
use crate::numbers::{Law, LawVector};
use crate::particle::{MassSource, ParseTagError};
use crate::rational::{int, Rational};

/// Relative tolerance between annotated and mass-derived energy release.
pub const ENERGY_TOLERANCE: f64 = 0.10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Conserved,
    WeakAllowedViolation,
    Violated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Conserved => "conserved",
            Verdict::WeakAllowedViolation => "weak-allowed-violation",
            Verdict::Violated => "violated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    AllowedStrong,
    AllowedElectromagnetic,
    AllowedWeak,
    QExotic,
    Forbidden,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::AllowedStrong => "allowed-strong",
            Classification::AllowedElectromagnetic => "allowed-electromagnetic",
            Classification::AllowedWeak => "allowed-weak",
            Classification::QExotic => "Q-exotic",
            Classification::Forbidden => "forbidden",
        }
    }

    /// Q-exotic or forbidden.
    pub fn is_anomalous(self) -> bool {
        matches!(self, Classification::QExotic | Classification::Forbidden)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Classification {
    type Err = ParseTagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "allowed-strong" => Classification::AllowedStrong,
            "allowed-electromagnetic" => Classification::AllowedElectromagnetic,
            "allowed-weak" => Classification::AllowedWeak,
            "Q-exotic" => Classification::QExotic,
            "forbidden" => Classification::Forbidden,
            other => return Err(ParseTagError(other.into())),
        })
    }
}

/// Final-state rest mass exceeds the available energy: the products can only
/// appear as virtual intermediates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MassNote {
    SubThresholdVirtual,
}

impl MassNote {
    pub fn as_str(self) -> &'static str {
        "sub-threshold-virtual"
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyCheck {
    pub annotated_mev: f64,
    /// `(sum reactant masses - sum product masses) * c^2` in MeV.
    pub mass_defect_mev: f64,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConservationReport {
    /// `products - reactants` per law.
    pub deltas: LawVector,
    /// `Q(reactants) - Q(products)`.
    pub lost_charge: Rational,
    pub verdicts: BTreeMap<Law, Verdict>,
    pub classification: Classification,
    pub mass_note: Option<MassNote>,
    pub energy: Option<EnergyCheck>,
}

impl ConservationReport {
    pub fn delta(&self, law: Law) -> Rational {
        self.deltas[law]
    }
}

fn verdict(law: Law, delta: Rational) -> Verdict {
    if delta.is_zero() {
        Verdict::Conserved
    } else if law.is_always_conserved() || (law == Law::Strangeness && delta.abs() > int(1)) {
        Verdict::Violated
    } else {
        Verdict::WeakAllowedViolation
    }
}

/// `Q(reactants) - Q(products)`; nonzero marks a Q-exotic reaction.
pub fn lost_charge(r: &Reaction) -> Rational {
    r.reactants.total()[Law::Charge] - r.products.total()[Law::Charge]
}

/// Notes when the products' rest mass exceeds `available_energy_gev`.
pub fn mass_threshold(r: &Reaction, available_energy_gev: f64) -> Option<MassNote> {
    let needed = r.products.total_mass_gev();
    let slack = 1e-12 * needed.max(available_energy_gev).max(1.0);
    (needed > available_energy_gev + slack).then_some(MassNote::SubThresholdVirtual)
}

fn energy_check(r: &Reaction) -> Option<EnergyCheck> {
    let annotated_mev = r.energy_release_mev?;
    let known = r
        .participants()
        .all(|p| p.mass_source != MassSource::Assumed);
    if !known {
        return None;
    }
    let mass_defect_mev = (r.reactants.total_mass_gev() - r.products.total_mass_gev()) * 1000.0;
    let consistent =
        libm::fabs(mass_defect_mev - annotated_mev) <= ENERGY_TOLERANCE * libm::fabs(annotated_mev);
    Some(EnergyCheck {
        annotated_mev,
        mass_defect_mev,
        consistent,
    })
}

/// Evaluates every conservation law and classifies the reaction.
///
/// Classification order: Q-exotic when charge changes; forbidden when another
/// always-conserved law fails; then the first regime that admits it among
/// strong (flavour conserved, no leptons, photons or massive gauge bosons),
/// electromagnetic (photons present, flavour conserved) and weak
/// (`|dS'| <= 1`).
pub fn check(r: &Reaction) -> ConservationReport {
    let deltas = r.deltas();
    let verdicts: BTreeMap<Law, Verdict> = Law::ALL
        .iter()
        .map(|&l| (l, verdict(l, deltas[l])))
        .collect();

    let always_ok = |skip_charge: bool| {
        Law::ALWAYS
            .iter()
            .filter(|&&l| !(skip_charge && l == Law::Charge))
            .all(|l| verdicts[l] == Verdict::Conserved)
    };
    let flavor_ok = Law::STRONG_ONLY
        .iter()
        .all(|l| verdicts[l] == Verdict::Conserved);
    let has_leptons = r.participants().any(|p| p.is_lepton());
    let has_photons = r.participants().any(|p| p.is_photon());
    let has_weak_carriers = r.participants().any(|p| p.is_weak_carrier());

    let classification = if !deltas[Law::Charge].is_zero() {
        Classification::QExotic
    } else if !always_ok(true) {
        Classification::Forbidden
    } else if flavor_ok && !has_leptons && !has_photons && !has_weak_carriers {
        Classification::AllowedStrong
    } else if flavor_ok && has_photons {
        Classification::AllowedElectromagnetic
    } else if verdicts[&Law::Strangeness] != Verdict::Violated {
        Classification::AllowedWeak
    } else {
        Classification::Forbidden
    };

    ConservationReport {
        lost_charge: -deltas[Law::Charge],
        mass_note: mass_threshold(r, r.reactants.total_mass_gev()),
        energy: energy_check(r),
        deltas,
        verdicts,
        classification,
    }
}
