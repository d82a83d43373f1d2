//! Particle records and the quark-content derivation of flavour numbers.

use alloc::format;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_traits::{Signed, Zero};

use crate::numbers::{gmn_check, FlavorNumbers, QuantumNumbers};
use crate::rational::{int, is_half_multiple, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    Up,
    Down,
    Strange,
    Charm,
    Bottom,
    Top,
}

impl Flavor {
    pub const ALL: [Flavor; 6] = [
        Flavor::Up,
        Flavor::Down,
        Flavor::Strange,
        Flavor::Charm,
        Flavor::Bottom,
        Flavor::Top,
    ];

    pub fn symbol(self) -> char {
        match self {
            Flavor::Up => 'u',
            Flavor::Down => 'd',
            Flavor::Strange => 's',
            Flavor::Charm => 'c',
            Flavor::Bottom => 'b',
            Flavor::Top => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Flavor> {
        Flavor::ALL.into_iter().find(|f| f.symbol() == c)
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Quark and antiquark counts per flavour.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QuarkContent {
    quarks: [u32; 6],
    antiquarks: [u32; 6],
}

impl QuarkContent {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_quark(mut self, flavor: Flavor, count: u32) -> Self {
        self.quarks[flavor.index()] += count;
        self
    }

    pub fn with_antiquark(mut self, flavor: Flavor, count: u32) -> Self {
        self.antiquarks[flavor.index()] += count;
        self
    }

    pub fn quarks(&self, flavor: Flavor) -> u32 {
        self.quarks[flavor.index()]
    }

    pub fn antiquarks(&self, flavor: Flavor) -> u32 {
        self.antiquarks[flavor.index()]
    }

    /// `n_f - nbar_f`.
    pub fn net(&self, flavor: Flavor) -> i64 {
        i64::from(self.quarks(flavor)) - i64::from(self.antiquarks(flavor))
    }

    /// Quarks become antiquarks and vice versa.
    pub fn swapped(&self) -> Self {
        QuarkContent {
            quarks: self.antiquarks,
            antiquarks: self.quarks,
        }
    }
}

/// Numbers implied by a quark content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedFlavor {
    pub baryon: Rational,
    pub flavor: FlavorNumbers,
    pub hypercharge: Rational,
    pub charge: Rational,
}

/// Derives `B, I3, S', C', B', T', Y, Q` from quark counts.
pub fn derive_flavor(qc: &QuarkContent) -> DerivedFlavor {
    use Flavor::*;
    let total: i64 = Flavor::ALL.iter().map(|&f| qc.net(f)).sum();
    let baryon = ratio(total, 3);
    let flavor = FlavorNumbers {
        isospin3: ratio(qc.net(Up) - qc.net(Down), 2),
        strangeness: -qc.net(Strange),
        charm: qc.net(Charm),
        bottomness: -qc.net(Bottom),
        topness: qc.net(Top),
    };
    let hypercharge =
        baryon + int(flavor.strangeness + flavor.charm + flavor.bottomness + flavor.topness);
    let charge = flavor.isospin3 + hypercharge * ratio(1, 2);
    DerivedFlavor {
        baryon,
        flavor,
        hypercharge,
        charge,
    }
}

/// `Y = (1/3)[du + dd - 2(ds + db) + 4(dc + dt)]`, the closed form over net counts.
pub fn hypercharge_closed_form(qc: &QuarkContent) -> Rational {
    use Flavor::*;
    let n = |f| qc.net(f);
    ratio(
        n(Up) + n(Down) - 2 * (n(Strange) + n(Bottom)) + 4 * (n(Charm) + n(Top)),
        3,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Category {
    Lepton,
    Quark,
    GaugeBoson,
    Meson,
    Baryon,
    Nuclide,
    QuasiParticle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TopologyTag {
    ConnectedSimplyConnected,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MassSource {
    /// Value quoted in the reference tables this project reproduces.
    Tabulated,
    /// Standard value from outside the reference tables.
    External,
    /// Placeholder for states with no measured mass (superpartners).
    Assumed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseTagError(pub String);

impl fmt::Display for ParseTagError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unrecognised tag {:?}", self.0)
    }
}

impl core::error::Error for ParseTagError {}

macro_rules! string_enum {
    ($ty:ident { $($variant:ident => $text:literal),* $(,)? }) => {
        impl $ty {
            pub fn as_str(self) -> &'static str {
                match self { $($ty::$variant => $text),* }
            }
        }
        impl FromStr for $ty {
            type Err = ParseTagError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok($ty::$variant),)*
                    other => Err(ParseTagError(other.into())),
                }
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

string_enum!(Category {
    Lepton => "lepton",
    Quark => "quark",
    GaugeBoson => "gauge-boson",
    Meson => "meson",
    Baryon => "baryon",
    Nuclide => "nuclide",
    QuasiParticle => "quasi-particle",
});

string_enum!(TopologyTag {
    ConnectedSimplyConnected => "connected-simply-connected",
    Other => "other",
});

string_enum!(MassSource {
    Tabulated => "tabulated",
    External => "external",
    Assumed => "assumed",
});

/// Atomic number and mass number of a nucleus `^A_Z X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nuclide {
    pub z: i64,
    pub a: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    pub id: String,
    pub display: String,
    pub mass_gev: f64,
    pub mass_source: MassSource,
    pub numbers: QuantumNumbers,
    pub quarks: Option<QuarkContent>,
    /// Registered antiparticle id; `Some(self.id)` for self-conjugate states.
    pub antiparticle: Option<String>,
    pub susy_partner: Option<String>,
    pub is_susy: bool,
    pub nuclide: Option<Nuclide>,
    pub topology: TopologyTag,
    pub category: Category,
}

/// A violated record invariant.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantViolation {
    #[error("mass must be finite and non-negative")]
    Mass,
    #[error("spin must be a non-negative multiple of 1/2")]
    Spin,
    #[error("isospin must be non-negative")]
    Isospin,
    #[error("lepton number L={stored} differs from Le+Lmu+Ltau={sum}")]
    LeptonSum { stored: i64, sum: i64 },
    #[error("hypercharge Y={stored} differs from B+S'+C'+B'+T'={derived}")]
    Hypercharge { stored: Rational, derived: Rational },
    #[error("Gell-Mann-Nishijima residual Q-I3-Y/2 is {0}, expected 0")]
    GellMannNishijima(Rational),
    #[error("quark content implies {field}={derived}, record stores {stored}")]
    QuarkContent {
        field: &'static str,
        derived: Rational,
        stored: Rational,
    },
    #[error("nuclide must have Q=Z and B=A (Z={z}, A={a})")]
    Nuclide { z: i64, a: i64 },
    #[error("mass number A={a} smaller than atomic number Z={z}")]
    MassNumber { z: i64, a: i64 },
}

impl Particle {
    pub fn charge(&self) -> Rational {
        self.numbers.charge
    }

    pub fn is_lepton(&self) -> bool {
        self.category == Category::Lepton
    }

    pub fn is_photon(&self) -> bool {
        self.category == Category::GaugeBoson && self.mass_gev == 0.0 && !self.is_susy
    }

    /// Massive gauge bosons (and their partners) mediate the weak interaction.
    pub fn is_weak_carrier(&self) -> bool {
        self.category == Category::GaugeBoson && self.mass_gev > 0.0
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.antiparticle.as_deref() == Some(self.id.as_str())
    }

    /// Checks every record invariant; the first failure is reported.
    pub fn validate(&self) -> Result<(), InvariantViolation> {
        if !self.mass_gev.is_finite() || self.mass_gev < 0.0 {
            return Err(InvariantViolation::Mass);
        }
        let n = &self.numbers;
        if !is_half_multiple(&n.spin) {
            return Err(InvariantViolation::Spin);
        }
        if n.isospin.is_some_and(|i| i.is_negative()) {
            return Err(InvariantViolation::Isospin);
        }
        let sum = n.lepton_e + n.lepton_mu + n.lepton_tau;
        if n.lepton != sum {
            return Err(InvariantViolation::LeptonSum {
                stored: n.lepton,
                sum,
            });
        }
        let derived = n.hypercharge_from_flavor();
        if derived != n.hypercharge {
            return Err(InvariantViolation::Hypercharge {
                stored: n.hypercharge,
                derived,
            });
        }
        let residual = gmn_check(n);
        if !residual.is_zero() {
            return Err(InvariantViolation::GellMannNishijima(residual));
        }
        if let Some(qc) = &self.quarks {
            let d = derive_flavor(qc);
            let pairs: [(&'static str, Rational, Rational); 6] = [
                ("B", d.baryon, n.baryon),
                ("I3", d.flavor.isospin3, n.flavor.isospin3),
                ("S'", int(d.flavor.strangeness), int(n.flavor.strangeness)),
                ("C'", int(d.flavor.charm), int(n.flavor.charm)),
                ("B'", int(d.flavor.bottomness), int(n.flavor.bottomness)),
                ("T'", int(d.flavor.topness), int(n.flavor.topness)),
            ];
            for (field, derived, stored) in pairs {
                if derived != stored {
                    return Err(InvariantViolation::QuarkContent {
                        field,
                        derived,
                        stored,
                    });
                }
            }
        }
        if let Some(Nuclide { z, a }) = self.nuclide {
            if a < z || z < 0 {
                return Err(InvariantViolation::MassNumber { z, a });
            }
            if n.charge != int(z) || n.baryon != int(a) {
                return Err(InvariantViolation::Nuclide { z, a });
            }
        }
        Ok(())
    }

    /// Charge-conjugate record with id `anti:<id>` (or the id with the prefix
    /// stripped). Registry links are not consulted; see
    /// [`Registry::antiparticle`](crate::registry::Registry::antiparticle).
    pub fn conjugated(&self) -> Particle {
        let id = match self.id.strip_prefix("anti:") {
            Some(rest) => String::from(rest),
            None => format!("anti:{}", self.id),
        };
        let display = match self.display.strip_prefix("anti-") {
            Some(rest) => String::from(rest),
            None => format!("anti-{}", self.display),
        };
        Particle {
            antiparticle: Some(self.id.clone()),
            id,
            display,
            mass_gev: self.mass_gev,
            mass_source: self.mass_source,
            numbers: self.numbers.conjugate(),
            quarks: self.quarks.as_ref().map(QuarkContent::swapped),
            susy_partner: None,
            is_susy: self.is_susy,
            nuclide: None,
            topology: self.topology,
            category: self.category,
        }
    }
}
