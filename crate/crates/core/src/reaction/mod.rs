//! Reactions between multisets of particles.

mod check;
mod crossing;
mod dsl;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use check::{
    check, lost_charge, mass_threshold, Classification, ConservationReport, EnergyCheck, MassNote,
    Verdict, ENERGY_TOLERANCE,
};
pub use crossing::{
    conjugate, cross_move, crossing_closure, reverse, susy_reaction, CrossingError,
};
pub use dsl::{parse, render, ParseError};

use crate::numbers::LawVector;
use crate::particle::Particle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Reactants,
    Products,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Reactants => Side::Products,
            Side::Products => Side::Reactants,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Interaction {
    Strong,
    Electromagnetic,
    Weak,
}

impl Interaction {
    pub fn as_str(self) -> &'static str {
        match self {
            Interaction::Strong => "strong",
            Interaction::Electromagnetic => "electromagnetic",
            Interaction::Weak => "weak",
        }
    }
}

impl fmt::Display for Interaction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub particle: Particle,
    pub count: u32,
}

/// Multiset of particles, kept in first-insertion order for printing.
#[derive(Debug, Clone, Default)]
pub struct ReactionSide {
    terms: Vec<Term>,
}

impl ReactionSide {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` copies, merging with an existing entry of the same id.
    pub fn add(&mut self, particle: Particle, count: u32) {
        if count == 0 {
            return;
        }
        match self.terms.iter_mut().find(|t| t.particle.id == particle.id) {
            Some(t) => t.count += count,
            None => self.terms.push(Term { particle, count }),
        }
    }

    /// Removes one copy; `false` when the id is absent.
    pub fn remove_one(&mut self, id: &str) -> bool {
        let Some(pos) = self.terms.iter().position(|t| t.particle.id == id) else {
            return false;
        };
        if self.terms[pos].count > 1 {
            self.terms[pos].count -= 1;
        } else {
            self.terms.remove(pos);
        }
        true
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of particles counted with multiplicity.
    pub fn multiplicity(&self) -> u32 {
        self.terms.iter().map(|t| t.count).sum()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.terms.iter().any(|t| t.particle.id == id)
    }

    /// Each particle repeated by its multiplicity.
    pub fn particles(&self) -> impl Iterator<Item = &Particle> {
        self.terms
            .iter()
            .flat_map(|t| core::iter::repeat_n(&t.particle, t.count as usize))
    }

    pub fn total(&self) -> LawVector {
        self.terms
            .iter()
            .map(|t| t.particle.numbers.vector() * i64::from(t.count))
            .sum()
    }

    pub fn total_mass_gev(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.particle.mass_gev * f64::from(t.count))
            .sum()
    }

    /// Sorted `(id, count)` pairs; equal keys mean equal multisets.
    pub fn key(&self) -> Vec<(String, u32)> {
        let mut key: Vec<_> = self
            .terms
            .iter()
            .map(|t| (t.particle.id.clone(), t.count))
            .collect();
        key.sort();
        key
    }

    pub fn map(&self, mut f: impl FnMut(&Particle) -> Particle) -> ReactionSide {
        let mut out = ReactionSide::new();
        for t in &self.terms {
            out.add(f(&t.particle), t.count);
        }
        out
    }

    pub fn try_map<E>(
        &self,
        mut f: impl FnMut(&Particle) -> Result<Particle, E>,
    ) -> Result<ReactionSide, E> {
        let mut out = ReactionSide::new();
        for t in &self.terms {
            out.add(f(&t.particle)?, t.count);
        }
        Ok(out)
    }
}

impl PartialEq for ReactionSide {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl FromIterator<Particle> for ReactionSide {
    fn from_iter<I: IntoIterator<Item = Particle>>(iter: I) -> Self {
        let mut side = ReactionSide::new();
        for p in iter {
            side.add(p, 1);
        }
        side
    }
}

/// Dedup key of a reaction: both sides as sorted multisets.
pub type ReactionKey = (Vec<(String, u32)>, Vec<(String, u32)>);

#[derive(Debug, Clone, PartialEq)]
pub struct Reaction {
    pub reactants: ReactionSide,
    pub products: ReactionSide,
    pub energy_release_mev: Option<f64>,
    pub declared_interaction: Option<Interaction>,
}

impl Reaction {
    pub fn new(reactants: ReactionSide, products: ReactionSide) -> Self {
        Reaction {
            reactants,
            products,
            energy_release_mev: None,
            declared_interaction: None,
        }
    }

    pub fn side(&self, side: Side) -> &ReactionSide {
        match side {
            Side::Reactants => &self.reactants,
            Side::Products => &self.products,
        }
    }

    pub fn side_mut(&mut self, side: Side) -> &mut ReactionSide {
        match side {
            Side::Reactants => &mut self.reactants,
            Side::Products => &mut self.products,
        }
    }

    pub fn key(&self) -> ReactionKey {
        (self.reactants.key(), self.products.key())
    }

    pub fn participants(&self) -> impl Iterator<Item = &Particle> {
        self.reactants.particles().chain(self.products.particles())
    }

    /// `products - reactants` for every law.
    pub fn deltas(&self) -> LawVector {
        self.products.total() - self.reactants.total()
    }
}

impl fmt::Display for Reaction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}
