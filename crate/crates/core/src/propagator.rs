//! Propagators as chains of elementary cobordisms between Cauchy data.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::handle::{Base, Dim, HandlePresentation, Piece};
use crate::numbers::{Law, LawVector};
use crate::particle::{Particle, TopologyTag};
use crate::rational::Rational;

/// Dimension of a Cauchy datum unless declared otherwise.
pub const DATUM_DIM: Dim = Dim::new(3, 3);

/// One constituent of a datum: a registered particle or a declared virtual
/// state.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub label: String,
    pub numbers: LawVector,
    /// `None` for virtual states of unspecified mass, which count as massive.
    pub mass_gev: Option<f64>,
    pub topology: TopologyTag,
}

impl Component {
    pub fn virtual_state(
        label: impl Into<String>,
        numbers: LawVector,
        mass_gev: Option<f64>,
    ) -> Self {
        Component {
            label: label.into(),
            numbers,
            mass_gev,
            topology: TopologyTag::ConnectedSimplyConnected,
        }
    }

    pub fn is_massive(&self) -> bool {
        self.mass_gev.is_none_or(|m| m > 0.0)
    }
}

impl From<&Particle> for Component {
    fn from(p: &Particle) -> Self {
        Component {
            label: p.id.clone(),
            numbers: p.numbers.vector(),
            mass_gev: Some(p.mass_gev),
            topology: p.topology,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DatumTopology {
    Sphere,
    Disk,
    UnionOfDisks,
    Other,
}

impl DatumTopology {
    pub fn as_str(self) -> &'static str {
        match self {
            DatumTopology::Sphere => "sphere",
            DatumTopology::Disk => "disk",
            DatumTopology::UnionOfDisks => "union-of-disks",
            DatumTopology::Other => "other",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "sphere" => DatumTopology::Sphere,
            "disk" => DatumTopology::Disk,
            "union-of-disks" => DatumTopology::UnionOfDisks,
            "other" => DatumTopology::Other,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CauchyDatum {
    pub name: String,
    pub dim: Dim,
    pub components: Vec<Component>,
    pub topology: DatumTopology,
    pub connected_simply_connected: bool,
    /// Overrides the mass-based Higgs membership when set.
    pub in_higgs: Option<bool>,
    pub charge_gap: bool,
}

impl CauchyDatum {
    /// Datum of dimension `3|3`. Topology and connectivity default from the
    /// component count and the components' own tags.
    pub fn new(name: impl Into<String>, components: Vec<Component>) -> Self {
        let single = components.len() == 1;
        let connected_simply_connected =
            single && components[0].topology == TopologyTag::ConnectedSimplyConnected;
        CauchyDatum {
            name: name.into(),
            dim: DATUM_DIM,
            topology: if single {
                DatumTopology::Disk
            } else {
                DatumTopology::UnionOfDisks
            },
            connected_simply_connected,
            components,
            in_higgs: None,
            charge_gap: false,
        }
    }

    pub fn total(&self) -> LawVector {
        self.components.iter().map(|c| c.numbers.clone()).sum()
    }

    pub fn charge(&self) -> Rational {
        self.total()[Law::Charge]
    }

    /// Declared membership, else every component massive.
    pub fn in_higgs(&self) -> bool {
        self.in_higgs
            .unwrap_or_else(|| self.components.iter().all(Component::is_massive))
    }

    fn piece(&self) -> Option<Piece> {
        match self.topology {
            DatumTopology::Sphere => Some(Piece::Sphere(self.dim)),
            DatumTopology::Disk => Some(Piece::Disk(self.dim)),
            DatumTopology::UnionOfDisks => Piece::union(
                self.components
                    .iter()
                    .map(|_| Piece::Disk(self.dim))
                    .collect(),
            )
            .ok(),
            DatumTopology::Other => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepKind {
    Collar,
    Handle(Dim),
    HandleUnion(Vec<Dim>),
}

impl StepKind {
    pub fn indices(&self) -> &[Dim] {
        match self {
            StepKind::Collar => &[],
            StepKind::Handle(d) => core::slice::from_ref(d),
            StepKind::HandleUnion(ds) => ds,
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Collar => f.write_str("collar"),
            StepKind::Handle(d) => write!(f, "h({d})"),
            StepKind::HandleUnion(ds) => {
                let parts: Vec<String> = ds.iter().map(|d| alloc::format!("h({d})")).collect();
                f.write_str(&parts.join(" u "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementaryCobordism {
    pub label: String,
    pub source: String,
    pub target: String,
    pub kind: StepKind,
    /// Lateral leakage emitted during this step.
    pub leakage: Option<LawVector>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropagatorPresentation {
    pub name: String,
    pub n0: CauchyDatum,
    pub n1: CauchyDatum,
    pub intermediates: Vec<CauchyDatum>,
    pub steps: Vec<ElementaryCobordism>,
    /// Declared pairing with the lateral boundary `P`.
    pub leakage: Option<LawVector>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Violation {
    #[error("presentation has no steps")]
    EmptyChain,
    #[error("step {step}: source {found:?} does not continue from {expected:?}")]
    Chaining {
        step: usize,
        expected: String,
        found: String,
    },
    #[error("step {step}: unknown datum {name:?}")]
    UnknownDatum { step: usize, name: String },
    #[error("step {step}: index {index} illegal in dimension {total}")]
    IndexOutOfRange { step: usize, index: Dim, total: Dim },
    #[error("step {step}: index {index} follows {previous}")]
    NonMonotone {
        step: usize,
        previous: Dim,
        index: Dim,
    },
    #[error("step {step}: handle union members differ")]
    UnequalUnion { step: usize },
    #[error("datum {datum:?} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        datum: String,
        expected: Dim,
        found: Dim,
    },
}

/// An intermediate whose always-conserved totals drift from the initial datum.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassViolation {
    pub datum: String,
    pub law: Law,
    pub expected: Rational,
    pub found: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PropagatorError {
    #[error(
        "datum {datum:?} is neutral, connected and simply connected but flagged charge-gapped"
    )]
    NeutralTrivialTopologyInChargeGapRegion { datum: String },
}

impl PropagatorError {
    pub fn name(&self) -> &'static str {
        match self {
            PropagatorError::NeutralTrivialTopologyInChargeGapRegion { .. } => {
                "NeutralTrivialTopologyInChargeGapRegion"
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldstoneCrossing {
    /// Higgs membership changes somewhere along the chain.
    pub crosses_mass: bool,
    pub crosses_charge: bool,
}

impl PropagatorPresentation {
    pub fn total_dim(&self) -> Dim {
        self.n0.dim + Dim::ONE
    }

    fn datum(&self, name: &str) -> Option<&CauchyDatum> {
        [&self.n0, &self.n1]
            .into_iter()
            .chain(&self.intermediates)
            .find(|d| d.name == name)
    }

    fn index_legal(total: Dim, index: Dim) -> bool {
        if total.is_classic() && index.n != 0 {
            return false;
        }
        index == Dim::ZERO
            || (index.m >= 1
                && (total.is_classic() || index.n >= 1)
                && index.componentwise_le(total))
    }

    /// Chaining, index legality, monotonicity and dimension checks. Empty
    /// means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.steps.is_empty() {
            out.push(Violation::EmptyChain);
            return out;
        }
        let total = self.total_dim();
        for d in core::iter::once(&self.n1).chain(&self.intermediates) {
            if d.dim != self.n0.dim {
                out.push(Violation::DimensionMismatch {
                    datum: d.name.clone(),
                    expected: self.n0.dim,
                    found: d.dim,
                });
            }
        }
        let mut expected = self.n0.name.clone();
        let mut previous: Option<Dim> = None;
        for (i, step) in self.steps.iter().enumerate() {
            let at = i + 1;
            if step.source != expected {
                out.push(Violation::Chaining {
                    step: at,
                    expected: expected.clone(),
                    found: step.source.clone(),
                });
            }
            for name in [&step.source, &step.target] {
                if self.datum(name).is_none() {
                    out.push(Violation::UnknownDatum {
                        step: at,
                        name: name.clone(),
                    });
                }
            }
            if let StepKind::HandleUnion(ds) = &step.kind {
                if ds.is_empty() || ds.iter().any(|d| *d != ds[0]) {
                    out.push(Violation::UnequalUnion { step: at });
                }
            }
            for &index in step.kind.indices() {
                if !Self::index_legal(total, index) {
                    out.push(Violation::IndexOutOfRange {
                        step: at,
                        index,
                        total,
                    });
                }
                if let Some(prev) = previous.filter(|p| !p.componentwise_le(index)) {
                    out.push(Violation::NonMonotone {
                        step: at,
                        previous: prev,
                        index,
                    });
                }
                previous = Some(index);
            }
            expected = step.target.clone();
        }
        if expected != self.n1.name {
            out.push(Violation::Chaining {
                step: self.steps.len() + 1,
                expected,
                found: self.n1.name.clone(),
            });
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn declared_leakage(&self, law: Law) -> Rational {
        self.leakage
            .as_ref()
            .map_or_else(Rational::zero, |p| p[law])
    }

    /// `<a,N0> - <a,N1> + <a,P>`; zero when the pairing law holds.
    pub fn pairing_residual(&self, law: Law) -> Rational {
        self.n0.total()[law] - self.n1.total()[law] + self.declared_leakage(law)
    }

    /// Lost charge `Q(N0) - Q(N1)`.
    pub fn lost_charge(&self) -> Rational {
        self.n0.charge() - self.n1.charge()
    }

    pub fn is_q_exotic(&self) -> bool {
        !self.lost_charge().is_zero()
    }

    /// Checks each datum reached by a step against `N0` plus the leakage
    /// emitted so far, on the always-conserved laws. Without per-step
    /// leakage the declared total is emitted on the last step.
    pub fn exchangion_class_check(&self) -> Vec<ClassViolation> {
        let initial = self.n0.total();
        let per_step = self.steps.iter().any(|s| s.leakage.is_some());
        let total_leak = self.leakage.clone().unwrap_or_else(LawVector::zero);
        let mut leaked = LawVector::zero();
        let mut out = Vec::new();
        for (i, step) in self.steps.iter().enumerate() {
            if per_step {
                if let Some(l) = &step.leakage {
                    leaked += l.clone();
                }
            } else if i + 1 == self.steps.len() {
                leaked = total_leak.clone();
            }
            let Some(datum) = self.datum(&step.target) else {
                continue;
            };
            // N1 = N0 + P
            let expected = initial.clone() + leaked.clone();
            let found = datum.total();
            for law in Law::ALWAYS {
                if found[law] != expected[law] {
                    out.push(ClassViolation {
                        datum: datum.name.clone(),
                        law,
                        expected: expected[law],
                        found: found[law],
                    });
                }
            }
        }
        out
    }

    fn check_charge_gap(&self, d: &CauchyDatum) -> Result<(), PropagatorError> {
        if d.charge_gap && d.charge().is_zero() && d.connected_simply_connected {
            return Err(PropagatorError::NeutralTrivialTopologyInChargeGapRegion {
                datum: d.name.clone(),
            });
        }
        Ok(())
    }

    pub fn goldstone_crossing(&self) -> Result<GoldstoneCrossing, PropagatorError> {
        let chain: Vec<&CauchyDatum> = core::iter::once(&self.n0)
            .chain(&self.intermediates)
            .chain(core::iter::once(&self.n1))
            .collect();
        for d in &chain {
            self.check_charge_gap(d)?;
        }
        let higgs = self.n0.in_higgs();
        Ok(GoldstoneCrossing {
            crosses_mass: chain.iter().any(|d| d.in_higgs() != higgs),
            crosses_charge: self.n0.charge_gap != self.n1.charge_gap,
        })
    }

    /// A single `0|0` handle: the propagator is a disk.
    pub fn is_elementary(&self) -> bool {
        matches!(self.steps.as_slice(), [s] if s.kind == StepKind::Handle(Dim::ZERO))
    }

    /// Initial and final data differ in topology or component count.
    pub fn is_singular(&self) -> bool {
        self.n0.topology != self.n1.topology || self.n0.components.len() != self.n1.components.len()
    }

    /// The chain as a handle presentation; the base is a collar of `N0` when
    /// the chain opens with one.
    pub fn handle_presentation(&self) -> Option<HandlePresentation> {
        let base = match self.steps.first().map(|s| &s.kind) {
            Some(StepKind::Collar) => Base::Collar(self.n0.piece()?),
            _ => Base::Empty,
        };
        let mut pres = HandlePresentation::new(self.total_dim(), base).ok()?;
        for step in &self.steps {
            if !step.kind.indices().is_empty() {
                pres = pres.attach_union(step.kind.indices()).ok()?.0;
            }
        }
        Some(pres)
    }

    /// Short shape summary such as `disk with two handles`.
    pub fn shape(&self) -> String {
        if self.is_elementary() {
            return "elementary disk".into();
        }
        let indices: Vec<Dim> = self
            .steps
            .iter()
            .flat_map(|s| s.kind.indices())
            .copied()
            .collect();
        let (head, rest) = match (self.steps.first().map(|s| &s.kind), indices.first()) {
            (Some(StepKind::Collar), _) => ("collar", indices.len()),
            (_, Some(&Dim::ZERO)) => ("disk", indices.len() - 1),
            _ => ("chain", indices.len()),
        };
        match rest {
            0 => head.into(),
            1 => alloc::format!("{head} with one handle"),
            k => alloc::format!("{head} with {} handles", count_word(k)),
        }
    }

    /// Per-law pairing residuals on the always-conserved laws.
    pub fn pairing_report(&self) -> BTreeMap<Law, Rational> {
        Law::ALWAYS
            .iter()
            .map(|&l| (l, self.pairing_residual(l)))
            .collect()
    }
}

fn count_word(k: usize) -> String {
    const WORDS: [&str; 9] = [
        "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    ];
    WORDS
        .get(k)
        .map_or_else(|| alloc::format!("{k}"), |w| String::from(*w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use alloc::vec;

    fn charged(label: &str, q: i64, b: i64) -> Component {
        let mut v = LawVector::zero();
        v[Law::Charge] = int(q);
        v[Law::Baryon] = int(b);
        Component::virtual_state(label, v, Some(1.0))
    }

    fn step(source: &str, target: &str, kind: StepKind) -> ElementaryCobordism {
        ElementaryCobordism {
            label: alloc::format!("{source}->{target}"),
            source: source.into(),
            target: target.into(),
            kind,
            leakage: None,
        }
    }

    fn two_to_two() -> PropagatorPresentation {
        PropagatorPresentation {
            name: "t".into(),
            n0: CauchyDatum::new("N0", vec![charged("a", 1, 1), charged("b", 1, 0)]),
            n1: CauchyDatum::new("N1", vec![charged("c", 1, 1), charged("d", 1, 0)]),
            intermediates: vec![
                CauchyDatum::new("M1", vec![charged("x", 1, 1), charged("y", 1, 0)]),
                CauchyDatum::new("M2", vec![charged("z", 2, 1)]),
            ],
            steps: vec![
                step("N0", "M1", StepKind::Collar),
                step("M1", "M2", StepKind::Handle(Dim::ONE)),
                step("M2", "N1", StepKind::HandleUnion(vec![Dim::ONE, Dim::ONE])),
            ],
            leakage: None,
        }
    }

    #[test]
    fn three_step_chain_validates() {
        let p = two_to_two();
        assert_eq!(p.validate(), vec![]);
        assert!(p.exchangion_class_check().is_empty());
        assert_eq!(p.pairing_residual(Law::Charge), int(0));
        assert_eq!(p.handle_presentation().unwrap().handles().count(), 3);
    }

    #[test]
    fn decreasing_indices_are_rejected() {
        let mut p = two_to_two();
        p.steps[1].kind = StepKind::Handle(Dim::new(2, 2));
        assert!(matches!(
            p.validate()[0],
            Violation::NonMonotone { step: 3, .. }
        ));
    }

    #[test]
    fn broken_chain_is_reported() {
        let mut p = two_to_two();
        p.steps[2].source = "M1".into();
        assert!(matches!(
            p.validate()[0],
            Violation::Chaining { step: 3, .. }
        ));
    }

    #[test]
    fn unequal_union_is_reported() {
        let mut p = two_to_two();
        p.steps[2].kind = StepKind::HandleUnion(vec![Dim::ONE, Dim::new(2, 2)]);
        assert!(p.validate().contains(&Violation::UnequalUnion { step: 3 }));
    }

    #[test]
    fn missing_charge_in_intermediate() {
        let mut p = two_to_two();
        p.intermediates[1].components = vec![charged("z", 1, 1)];
        let v = p.exchangion_class_check();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].law, Law::Charge);
    }

    #[test]
    fn neutral_simple_datum_cannot_be_charge_gapped() {
        let mut p = two_to_two();
        p.intermediates[1].components = vec![charged("z0", 0, 0)];
        p.intermediates[1].connected_simply_connected = true;
        p.intermediates[1].charge_gap = true;
        assert_eq!(
            p.goldstone_crossing(),
            Err(PropagatorError::NeutralTrivialTopologyInChargeGapRegion { datum: "M2".into() })
        );
    }

    #[test]
    fn elementary_disk() {
        let mut p = two_to_two();
        p.intermediates.clear();
        p.steps = vec![step("N0", "N1", StepKind::Handle(Dim::ZERO))];
        assert!(p.is_elementary());
        assert_eq!(p.handle_presentation().unwrap().euler_characteristic(), 1);
        assert_eq!(p.shape(), "elementary disk");
    }
}
