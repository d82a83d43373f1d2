//! Crossing, charge conjugation, reversal and superpartner reactions.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Reaction, Side};
use crate::registry::{Registry, RegistryError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CrossingError {
    #[error("particle {id:?} does not occur among the {side:?}")]
    NotPresent { id: String, side: Side },
    #[error("moving {id:?} would leave the {side:?} empty")]
    EmptySide { id: String, side: Side },
    #[error("no supersymmetric partner registered for {0:?}")]
    NoPartner(String),
}

/// Moves one `id` from `from` to the other side as its antiparticle.
///
/// Every conservation delta is unchanged by the move.
pub fn cross_move(
    r: &Reaction,
    registry: &Registry,
    id: &str,
    from: Side,
) -> Result<Reaction, CrossingError> {
    let source = r.side(from);
    let particle = source
        .terms()
        .iter()
        .find(|t| t.particle.id == id)
        .map(|t| t.particle.clone())
        .ok_or_else(|| CrossingError::NotPresent {
            id: id.into(),
            side: from,
        })?;
    if source.multiplicity() == 1 {
        return Err(CrossingError::EmptySide {
            id: id.into(),
            side: from,
        });
    }
    let mut out = r.clone();
    out.side_mut(from).remove_one(id);
    out.side_mut(from.other())
        .add(registry.antiparticle(&particle), 1);
    out.energy_release_mev = None;
    Ok(out)
}

/// Replaces every participant by its antiparticle. Negates every delta.
pub fn conjugate(r: &Reaction, registry: &Registry) -> Reaction {
    Reaction {
        reactants: r.reactants.map(|p| registry.antiparticle(p)),
        products: r.products.map(|p| registry.antiparticle(p)),
        energy_release_mev: r.energy_release_mev,
        declared_interaction: r.declared_interaction,
    }
}

/// Swaps reactants and products. Negates every delta and the energy release.
pub fn reverse(r: &Reaction) -> Reaction {
    Reaction {
        reactants: r.products.clone(),
        products: r.reactants.clone(),
        energy_release_mev: r.energy_release_mev.map(|e| -e),
        declared_interaction: r.declared_interaction,
    }
}

/// Reactions reachable from `r` in at most `max_moves` applications of
/// [`cross_move`], [`conjugate`] or [`reverse`], deduplicated as multisets.
/// `r` comes first; the rest follow in breadth-first order.
pub fn crossing_closure(r: &Reaction, registry: &Registry, max_moves: usize) -> Vec<Reaction> {
    let mut seen = BTreeSet::new();
    seen.insert(r.key());
    let mut all = alloc::vec![r.clone()];
    let mut frontier = alloc::vec![r.clone()];
    for _ in 0..max_moves {
        let mut next = Vec::new();
        for current in &frontier {
            let mut candidates = alloc::vec![conjugate(current, registry), reverse(current)];
            for side in [Side::Reactants, Side::Products] {
                let ids: Vec<String> = current
                    .side(side)
                    .terms()
                    .iter()
                    .map(|t| t.particle.id.clone())
                    .collect();
                for id in ids {
                    if let Ok(moved) = cross_move(current, registry, &id, side) {
                        candidates.push(moved);
                    }
                }
            }
            for c in candidates {
                if seen.insert(c.key()) {
                    next.push(c);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Replaces every participant by its superpartner.
pub fn susy_reaction(r: &Reaction, registry: &Registry) -> Result<Reaction, CrossingError> {
    let partner = |p: &crate::particle::Particle| {
        registry.susy_partner(p).map_err(|e| match e {
            RegistryError::NoPartner(_) => CrossingError::NoPartner(p.id.clone()),
            _ => CrossingError::NoPartner(p.id.clone()),
        })
    };
    Ok(Reaction {
        reactants: r.reactants.try_map(partner)?,
        products: r.products.try_map(partner)?,
        energy_release_mev: None,
        declared_interaction: r.declared_interaction,
    })
}
