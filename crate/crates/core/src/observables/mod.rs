//! Scalar observables over finite spectra and simple descriptors.

mod confinement;
mod mass;
mod spin;
mod thermo;
mod time;

pub use confinement::{
    confinement, ConfinementClass, DescriptorError, SamplePoint, SpectralDescriptor,
};
pub use mass::{
    mass_from_torsion, reduced_mass, regge, regge_exact, spin_root, torsion_mass, MassBudget,
};
pub use spin::{spin_classify, spin_of, SpinClass, SpinError, SPIN_TOLERANCE};
pub use thermo::{Spectrum, ThermoError, ThermoReport, MAX_LN_PARTITION};
pub use time::{apparent_time, classify_interaction, TimeError, DECADES, HBAR_GEV_S};
