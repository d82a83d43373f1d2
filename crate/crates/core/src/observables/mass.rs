//! Reduced mass, its torsion form, and the Regge-type relation.

use crate::rational::{int, Rational};

/// `m`, the correction `delta`, and the two subtracted masses.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MassBudget {
    pub m: f64,
    pub delta: f64,
    pub m_copyright: f64,
    pub m_maltese: f64,
}

/// `M = m + delta/2 - m_copyright - m_maltese`.
pub fn reduced_mass(b: &MassBudget) -> f64 {
    b.m + 0.5 * b.delta - b.m_copyright - b.m_maltese
}

/// `M = S2 / 2` for torsion norm squared `S2`.
pub fn torsion_mass(s2: f64) -> f64 {
    0.5 * s2
}

/// The `m` whose budget reduces to [`torsion_mass`] of `s2`.
pub fn mass_from_torsion(s2: f64, delta: f64, m_copyright: f64, m_maltese: f64) -> MassBudget {
    MassBudget {
        m: 0.5 * s2 - 0.5 * delta + m_copyright + m_maltese,
        delta,
        m_copyright,
        m_maltese,
    }
}

/// `J = 4 M^2`.
pub fn regge(mass: f64) -> f64 {
    4.0 * mass * mass
}

pub fn regge_exact(mass: Rational) -> Rational {
    int(4) * mass * mass
}

/// `sqrt(J)`, equal to the torsion norm squared.
pub fn spin_root(j: f64) -> f64 {
    libm::sqrt(j)
}
