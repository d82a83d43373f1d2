//! Immutable particle registry with name resolution.
//!
//! Names resolve in this order: exact registered id, `anti:<name>`,
//! `susy:<name>`, then nuclide notation `<Element>-<A>` (e.g. `He-4`, `D-2`).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};

use crate::particle::{InvariantViolation, Nuclide, Particle};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RegistryError {
    #[error("unknown particle {0:?}")]
    UnknownParticle(String),
    #[error("no supersymmetric partner registered for {0:?}")]
    NoPartner(String),
    #[error("duplicate particle id {0:?}")]
    Duplicate(String),
    #[error("particle {id:?}: {violation}")]
    Invalid {
        id: String,
        violation: InvariantViolation,
    },
    #[error("particle {id:?} links to unregistered {link:?}")]
    DanglingLink { id: String, link: String },
}

/// Element symbol to atomic number. `D` and `T` name hydrogen isotopes.
pub const ELEMENTS: &[(&str, i64)] = &[
    ("H", 1),
    ("D", 1),
    ("T", 1),
    ("He", 2),
    ("Li", 3),
    ("Be", 4),
    ("B", 5),
    ("C", 6),
    ("N", 7),
    ("O", 8),
];

pub fn atomic_number(symbol: &str) -> Option<i64> {
    ELEMENTS.iter().find(|(s, _)| *s == symbol).map(|&(_, z)| z)
}

/// Splits `He-4` into `(2, 4)`.
pub fn parse_nuclide_name(name: &str) -> Option<Nuclide> {
    let (symbol, mass) = name.rsplit_once('-')?;
    if mass.is_empty() || !mass.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let z = atomic_number(symbol)?;
    let a: i64 = mass.parse().ok()?;
    Some(Nuclide { z, a })
}

#[derive(Debug, Clone, Default)]
pub struct Registry {
    particles: BTreeMap<String, Particle>,
    nuclides: BTreeMap<Nuclide, String>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a particle after checking its invariants.
    pub fn insert(&mut self, particle: Particle) -> Result<(), RegistryError> {
        particle
            .validate()
            .map_err(|violation| RegistryError::Invalid {
                id: particle.id.clone(),
                violation,
            })?;
        if self.particles.contains_key(&particle.id) {
            return Err(RegistryError::Duplicate(particle.id));
        }
        if let Some(n) = particle.nuclide {
            self.nuclides.insert(n, particle.id.clone());
        }
        self.particles.insert(particle.id.clone(), particle);
        Ok(())
    }

    /// Checks that every antiparticle and partner link points at a registered id.
    pub fn check_links(&self) -> Result<(), RegistryError> {
        for p in self.particles.values() {
            for link in [&p.antiparticle, &p.susy_partner].into_iter().flatten() {
                if !self.particles.contains_key(link) {
                    return Err(RegistryError::DanglingLink {
                        id: p.id.clone(),
                        link: link.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&Particle> {
        self.particles.get(id)
    }

    pub fn len(&self) -> usize {
        self.particles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.particles.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Particle> {
        self.particles.values()
    }

    pub fn nuclide(&self, nuclide: Nuclide) -> Option<&Particle> {
        self.nuclides.get(&nuclide).and_then(|id| self.get(id))
    }

    /// Resolves a DSL name to a particle record.
    pub fn resolve(&self, name: &str) -> Result<Particle, RegistryError> {
        if let Some(p) = self.get(name) {
            return Ok(p.clone());
        }
        if let Some(rest) = name.strip_prefix("anti:") {
            let base = self.resolve(rest)?;
            return Ok(self.antiparticle(&base));
        }
        if let Some(rest) = name.strip_prefix("susy:") {
            let base = self.resolve(rest)?;
            return self.susy_partner(&base);
        }
        parse_nuclide_name(name)
            .and_then(|n| self.nuclide(n))
            .cloned()
            .ok_or_else(|| RegistryError::UnknownParticle(name.to_string()))
    }

    /// Antiparticle: the registered link when present, otherwise the
    /// conjugated record. Involutive in both cases.
    pub fn antiparticle(&self, p: &Particle) -> Particle {
        if let Some(anti) = p.antiparticle.as_deref().and_then(|id| self.get(id)) {
            return anti.clone();
        }
        let mut anti = p.conjugated();
        if let Some(original) = self.get(&anti.id) {
            return original.clone();
        }
        // partner(anti x) = anti partner(x)
        anti.susy_partner = p
            .susy_partner
            .as_deref()
            .and_then(|id| self.resolve(id).ok())
            .map(|partner| self.antiparticle_id(&partner));
        anti
    }

    fn antiparticle_id(&self, p: &Particle) -> String {
        match &p.antiparticle {
            Some(id) => id.clone(),
            None => p.conjugated().id,
        }
    }

    pub fn susy_partner(&self, p: &Particle) -> Result<Particle, RegistryError> {
        let link = p
            .susy_partner
            .as_deref()
            .ok_or_else(|| RegistryError::NoPartner(p.id.clone()))?;
        if link == p.id {
            return Err(RegistryError::NoPartner(p.id.clone()));
        }
        self.resolve(link)
            .map_err(|_| RegistryError::NoPartner(format!("{} (dangling {link})", p.id)))
    }
}
