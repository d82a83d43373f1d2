//! Additive quantum numbers and the conservation laws built on them.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use crate::rational::{int, ratio, Rational};

/// Flavour block `(I3, S', C', B', T')`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlavorNumbers {
    pub isospin3: Rational,
    pub strangeness: i64,
    pub charm: i64,
    pub bottomness: i64,
    pub topness: i64,
}

impl FlavorNumbers {
    pub fn zero() -> Self {
        FlavorNumbers {
            isospin3: int(0),
            strangeness: 0,
            charm: 0,
            bottomness: 0,
            topness: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub charge: Rational,
    pub baryon: Rational,
    pub lepton_e: i64,
    pub lepton_mu: i64,
    pub lepton_tau: i64,
    pub lepton: i64,
    pub flavor: FlavorNumbers,
    pub hypercharge: Rational,
    /// Non-negative multiple of 1/2, in units of hbar.
    pub spin: Rational,
    pub isospin: Option<Rational>,
}

impl QuantumNumbers {
    /// All additive numbers zero, spin zero.
    pub fn neutral() -> Self {
        QuantumNumbers {
            charge: int(0),
            baryon: int(0),
            lepton_e: 0,
            lepton_mu: 0,
            lepton_tau: 0,
            lepton: 0,
            flavor: FlavorNumbers::zero(),
            hypercharge: int(0),
            spin: int(0),
            isospin: None,
        }
    }

    /// `Y = B + S' + C' + B' + T'`.
    pub fn hypercharge_from_flavor(&self) -> Rational {
        let f = &self.flavor;
        self.baryon + int(f.strangeness + f.charm + f.bottomness + f.topness)
    }

    /// Negates every additive number; spin and isospin magnitude are kept.
    pub fn conjugate(&self) -> Self {
        QuantumNumbers {
            charge: -self.charge,
            baryon: -self.baryon,
            lepton_e: -self.lepton_e,
            lepton_mu: -self.lepton_mu,
            lepton_tau: -self.lepton_tau,
            lepton: -self.lepton,
            flavor: FlavorNumbers {
                isospin3: -self.flavor.isospin3,
                strangeness: -self.flavor.strangeness,
                charm: -self.flavor.charm,
                bottomness: -self.flavor.bottomness,
                topness: -self.flavor.topness,
            },
            hypercharge: -self.hypercharge,
            spin: self.spin,
            isospin: self.isospin,
        }
    }

    pub fn vector(&self) -> LawVector {
        let mut v = LawVector::zero();
        for law in Law::ALL {
            v[law] = law.value(self);
        }
        v
    }
}

/// Residual `Q - I3 - Y/2`; zero when the Gell-Mann-Nishijima relation holds
/// (and with it the squared form `Q^2 = (I3 + Y/2)^2`).
pub fn gmn_check(numbers: &QuantumNumbers) -> Rational {
    numbers.charge - numbers.flavor.isospin3 - numbers.hypercharge * ratio(1, 2)
}

/// An additive conservation law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    Charge,
    Baryon,
    Lepton,
    LeptonE,
    LeptonMu,
    LeptonTau,
    Isospin3,
    Strangeness,
    Charm,
    Bottomness,
    Topness,
    Hypercharge,
}

impl Law {
    pub const ALL: [Law; 12] = [
        Law::Charge,
        Law::Baryon,
        Law::Lepton,
        Law::LeptonE,
        Law::LeptonMu,
        Law::LeptonTau,
        Law::Isospin3,
        Law::Strangeness,
        Law::Charm,
        Law::Bottomness,
        Law::Topness,
        Law::Hypercharge,
    ];

    /// Laws conserved in every interaction.
    pub const ALWAYS: [Law; 6] = [
        Law::Charge,
        Law::Baryon,
        Law::Lepton,
        Law::LeptonE,
        Law::LeptonMu,
        Law::LeptonTau,
    ];

    /// Laws conserved only by the strong (and electromagnetic) interaction.
    pub const STRONG_ONLY: [Law; 6] = [
        Law::Isospin3,
        Law::Strangeness,
        Law::Charm,
        Law::Bottomness,
        Law::Topness,
        Law::Hypercharge,
    ];

    pub fn is_always_conserved(self) -> bool {
        Law::ALWAYS.contains(&self)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Law::Charge => "Q",
            Law::Baryon => "B",
            Law::Lepton => "L",
            Law::LeptonE => "Le",
            Law::LeptonMu => "Lmu",
            Law::LeptonTau => "Ltau",
            Law::Isospin3 => "I3",
            Law::Strangeness => "S'",
            Law::Charm => "C'",
            Law::Bottomness => "B'",
            Law::Topness => "T'",
            Law::Hypercharge => "Y",
        }
    }

    pub fn value(self, n: &QuantumNumbers) -> Rational {
        match self {
            Law::Charge => n.charge,
            Law::Baryon => n.baryon,
            Law::Lepton => int(n.lepton),
            Law::LeptonE => int(n.lepton_e),
            Law::LeptonMu => int(n.lepton_mu),
            Law::LeptonTau => int(n.lepton_tau),
            Law::Isospin3 => n.flavor.isospin3,
            Law::Strangeness => int(n.flavor.strangeness),
            Law::Charm => int(n.flavor.charm),
            Law::Bottomness => int(n.flavor.bottomness),
            Law::Topness => int(n.flavor.topness),
            Law::Hypercharge => n.hypercharge,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownLaw;

impl fmt::Display for UnknownLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown conservation law")
    }
}

impl core::error::Error for UnknownLaw {}

impl FromStr for Law {
    type Err = UnknownLaw;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let law = match s {
            "Q" => Law::Charge,
            "B" => Law::Baryon,
            "L" => Law::Lepton,
            "Le" => Law::LeptonE,
            "Lmu" => Law::LeptonMu,
            "Ltau" => Law::LeptonTau,
            "I3" => Law::Isospin3,
            "S'" | "S" | "Sp" => Law::Strangeness,
            "C'" | "C" | "Cp" => Law::Charm,
            "B'" | "Bp" => Law::Bottomness,
            "T'" | "T" | "Tp" => Law::Topness,
            "Y" => Law::Hypercharge,
            _ => return Err(UnknownLaw),
        };
        Ok(law)
    }
}

/// One exact value per [`Law`]; the "quantum vector" of a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LawVector([Rational; 12]);

impl LawVector {
    pub fn zero() -> Self {
        LawVector([int(0); 12])
    }

    pub fn get(&self, law: Law) -> Rational {
        self.0[law.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(crate::rational::is_zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Law, Rational)> + '_ {
        Law::ALL.iter().map(move |&l| (l, self.get(l)))
    }
}

impl Default for LawVector {
    fn default() -> Self {
        LawVector::zero()
    }
}

impl core::ops::Index<Law> for LawVector {
    type Output = Rational;
    fn index(&self, law: Law) -> &Rational {
        &self.0[law.index()]
    }
}

impl core::ops::IndexMut<Law> for LawVector {
    fn index_mut(&mut self, law: Law) -> &mut Rational {
        &mut self.0[law.index()]
    }
}

impl Add for LawVector {
    type Output = LawVector;
    fn add(mut self, rhs: LawVector) -> LawVector {
        self += rhs;
        self
    }
}

impl AddAssign for LawVector {
    fn add_assign(&mut self, rhs: LawVector) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Sub for LawVector {
    type Output = LawVector;
    fn sub(self, rhs: LawVector) -> LawVector {
        self + (-rhs)
    }
}

impl Neg for LawVector {
    type Output = LawVector;
    fn neg(mut self) -> LawVector {
        for a in self.0.iter_mut() {
            *a = -*a;
        }
        self
    }
}

impl Mul<i64> for LawVector {
    type Output = LawVector;
    fn mul(mut self, k: i64) -> LawVector {
        for a in self.0.iter_mut() {
            *a *= int(k);
        }
        self
    }
}

impl core::iter::Sum for LawVector {
    fn sum<I: Iterator<Item = LawVector>>(iter: I) -> LawVector {
        iter.fold(LawVector::zero(), |acc, v| acc + v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up() -> QuantumNumbers {
        QuantumNumbers {
            charge: ratio(2, 3),
            baryon: ratio(1, 3),
            flavor: FlavorNumbers {
                isospin3: ratio(1, 2),
                ..FlavorNumbers::zero()
            },
            hypercharge: ratio(1, 3),
            spin: ratio(1, 2),
            ..QuantumNumbers::neutral()
        }
    }

    #[test]
    fn gmn_residual_of_up_quark_is_zero() {
        assert_eq!(gmn_check(&up()), int(0));
    }

    #[test]
    fn gmn_residual_of_photon_is_zero() {
        assert_eq!(gmn_check(&QuantumNumbers::neutral()), int(0));
    }

    #[test]
    fn conjugation_negates_residual() {
        let mut off = up();
        off.charge = int(1);
        assert_eq!(gmn_check(&off.conjugate()), -gmn_check(&off));
        assert_eq!(off.conjugate().conjugate(), off);
    }

    #[test]
    fn law_symbols_round_trip() {
        for law in Law::ALL {
            assert_eq!(law.symbol().parse::<Law>().unwrap(), law);
        }
    }

    #[test]
    fn vector_arithmetic() {
        let u = up().vector();
        let twice = u.clone() * 2;
        assert_eq!(twice.clone() - u.clone(), u);
        assert_eq!(twice[Law::Charge], ratio(4, 3));
        assert!((u.clone() - u).is_zero());
    }
}
