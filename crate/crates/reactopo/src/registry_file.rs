//! Registry files: JSON Lines, one particle object per line.
//!
//! Rational fields are strings such as `"2/3"` or `"-1"`; integers are also
//! accepted. Blank lines and lines starting with `#` are skipped.

use reactopo_core::numbers::{FlavorNumbers, QuantumNumbers};
use reactopo_core::particle::{
    Category, Flavor, MassSource, Nuclide, Particle, QuarkContent, TopologyTag,
};
use reactopo_core::rational::{format_rational, int, parse_rational, Rational};
use reactopo_core::registry::Registry;
use serde::{Deserialize, Serialize};

use crate::error::LoadError;

pub const BUNDLED_REGISTRY: &str = include_str!("../data/registry.jsonl");

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Int(i64),
    Text(String),
}

impl RationalText {
    pub(crate) fn value(&self) -> Result<Rational, String> {
        match self {
            RationalText::Int(i) => Ok(int(*i)),
            RationalText::Text(s) => parse_rational(s).map_err(|e| e.to_string()),
        }
    }

    fn of(r: Rational) -> Self {
        RationalText::Text(format_rational(&r))
    }
}

impl Default for RationalText {
    fn default() -> Self {
        RationalText::Int(0)
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NuclideRecord {
    pub z: i64,
    pub a: i64,
}

/// On-disk form of one particle.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParticleRecord {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub display: Option<String>,
    pub mass_gev: f64,
    pub mass_source: String,
    pub category: String,
    #[serde(default)]
    pub charge: RationalText,
    #[serde(default)]
    pub baryon: RationalText,
    #[serde(default)]
    pub lepton_e: i64,
    #[serde(default)]
    pub lepton_mu: i64,
    #[serde(default)]
    pub lepton_tau: i64,
    /// Defaults to the sum of the three family numbers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lepton: Option<i64>,
    #[serde(default)]
    pub isospin3: RationalText,
    #[serde(default)]
    pub strangeness: i64,
    #[serde(default)]
    pub charm: i64,
    #[serde(default)]
    pub bottomness: i64,
    #[serde(default)]
    pub topness: i64,
    #[serde(default)]
    pub hypercharge: RationalText,
    #[serde(default)]
    pub spin: RationalText,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isospin: Option<RationalText>,
    /// Quark letters, e.g. `"uud"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quarks: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antiquarks: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antiparticle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub susy_partner: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub is_susy: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nuclide: Option<NuclideRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub topology: Option<String>,
}

fn letters(text: &str) -> Result<Vec<Flavor>, String> {
    text.chars()
        .map(|c| Flavor::from_symbol(c).ok_or_else(|| format!("unknown quark flavour {c:?}")))
        .collect()
}

impl ParticleRecord {
    pub fn to_particle(&self) -> Result<Particle, String> {
        let field = |name: &str, r: &RationalText| r.value().map_err(|e| format!("{name}: {e}"));
        let mut quarks = None;
        if self.quarks.is_some() || self.antiquarks.is_some() {
            let mut qc = QuarkContent::new();
            for f in letters(self.quarks.as_deref().unwrap_or(""))? {
                qc = qc.with_quark(f, 1);
            }
            for f in letters(self.antiquarks.as_deref().unwrap_or(""))? {
                qc = qc.with_antiquark(f, 1);
            }
            quarks = Some(qc);
        }
        let numbers = QuantumNumbers {
            charge: field("charge", &self.charge)?,
            baryon: field("baryon", &self.baryon)?,
            lepton_e: self.lepton_e,
            lepton_mu: self.lepton_mu,
            lepton_tau: self.lepton_tau,
            lepton: self
                .lepton
                .unwrap_or(self.lepton_e + self.lepton_mu + self.lepton_tau),
            flavor: FlavorNumbers {
                isospin3: field("isospin3", &self.isospin3)?,
                strangeness: self.strangeness,
                charm: self.charm,
                bottomness: self.bottomness,
                topness: self.topness,
            },
            hypercharge: field("hypercharge", &self.hypercharge)?,
            spin: field("spin", &self.spin)?,
            isospin: self
                .isospin
                .as_ref()
                .map(|i| field("isospin", i))
                .transpose()?,
        };
        Ok(Particle {
            id: self.id.clone(),
            display: self.display.clone().unwrap_or_else(|| self.id.clone()),
            mass_gev: self.mass_gev,
            mass_source: self
                .mass_source
                .parse::<MassSource>()
                .map_err(|e| e.to_string())?,
            numbers,
            quarks,
            antiparticle: self.antiparticle.clone(),
            susy_partner: self.susy_partner.clone(),
            is_susy: self.is_susy,
            nuclide: self.nuclide.map(|n| Nuclide { z: n.z, a: n.a }),
            topology: match &self.topology {
                Some(t) => t.parse::<TopologyTag>().map_err(|e| e.to_string())?,
                None => TopologyTag::ConnectedSimplyConnected,
            },
            category: self
                .category
                .parse::<Category>()
                .map_err(|e| e.to_string())?,
        })
    }

    pub fn from_particle(p: &Particle) -> Self {
        let n = &p.numbers;
        let quark_letters = |anti: bool| {
            let qc = p.quarks.as_ref()?;
            let s: String = Flavor::ALL
                .iter()
                .flat_map(|&f| {
                    let k = if anti { qc.antiquarks(f) } else { qc.quarks(f) };
                    std::iter::repeat_n(f.symbol(), k as usize)
                })
                .collect();
            (!s.is_empty()).then_some(s)
        };
        ParticleRecord {
            id: p.id.clone(),
            display: (p.display != p.id).then(|| p.display.clone()),
            mass_gev: p.mass_gev,
            mass_source: p.mass_source.to_string(),
            category: p.category.to_string(),
            charge: RationalText::of(n.charge),
            baryon: RationalText::of(n.baryon),
            lepton_e: n.lepton_e,
            lepton_mu: n.lepton_mu,
            lepton_tau: n.lepton_tau,
            lepton: None,
            isospin3: RationalText::of(n.flavor.isospin3),
            strangeness: n.flavor.strangeness,
            charm: n.flavor.charm,
            bottomness: n.flavor.bottomness,
            topness: n.flavor.topness,
            hypercharge: RationalText::of(n.hypercharge),
            spin: RationalText::of(n.spin),
            isospin: n.isospin.map(RationalText::of),
            quarks: quark_letters(false),
            antiquarks: quark_letters(true),
            antiparticle: p.antiparticle.clone(),
            susy_partner: p.susy_partner.clone(),
            is_susy: p.is_susy,
            nuclide: p.nuclide.map(|n| NuclideRecord { z: n.z, a: n.a }),
            topology: (p.topology != TopologyTag::ConnectedSimplyConnected)
                .then(|| p.topology.to_string()),
        }
    }
}

/// Parses a registry file and checks every record and link.
pub fn parse_registry(text: &str, source_name: &str) -> Result<Registry, LoadError> {
    let mut registry = Registry::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let record: ParticleRecord =
            serde_json::from_str(trimmed).map_err(|e| LoadError::at(source_name, i + 1, e))?;
        let particle = record.to_particle().map_err(|e| {
            LoadError::at(source_name, i + 1, format!("particle {:?}: {e}", record.id))
        })?;
        registry
            .insert(particle)
            .map_err(|e| LoadError::at(source_name, i + 1, e))?;
    }
    registry
        .check_links()
        .map_err(|e| LoadError::whole(source_name, e))?;
    Ok(registry)
}

pub fn bundled_registry() -> Registry {
    parse_registry(BUNDLED_REGISTRY, "registry.jsonl").expect("bundled registry is valid")
}

/// One line per particle, in id order.
pub fn write_registry(registry: &Registry) -> String {
    let mut out = String::new();
    for p in registry.iter() {
        out.push_str(
            &serde_json::to_string(&ParticleRecord::from_particle(p)).expect("records serialize"),
        );
        out.push('\n');
    }
    out
}
