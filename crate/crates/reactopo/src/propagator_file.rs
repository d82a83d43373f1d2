//! Propagator corpus files (JSON).
//!
//! ```json
//! { "schema": 1, "propagators": [ {
//!     "name": "...", "reaction": "a + b -> c",
//!     "initial": { "components": ["a", "b"] },
//!     "final": { "components": ["c"], "charge_gap": false },
//!     "intermediates": [ { "name": "M1", "components": [
//!         { "virtual": "X", "numbers": { "Q": "2" }, "mass_gev": null } ] } ],
//!     "steps": [ { "from": "N0", "to": "M1", "kind": "collar" },
//!                { "from": "M1", "to": "N1", "kind": "h(1|1) u h(1|1)" } ],
//!     "leakage": { "Q": "1" } } ] }
//! ```

use std::collections::BTreeMap;

use reactopo_core::handle::{parse_presentation, Dim};
use reactopo_core::numbers::{Law, LawVector};
use reactopo_core::propagator::{
    CauchyDatum, Component, DatumTopology, ElementaryCobordism, PropagatorPresentation, StepKind,
};
use reactopo_core::reaction::{parse, Reaction};
use reactopo_core::registry::Registry;
use serde::Deserialize;

use crate::error::LoadError;
use crate::registry_file::RationalText;

pub const BUNDLED_PROPAGATORS: &str = include_str!("../data/propagators.json");
pub const PROPAGATOR_SCHEMA: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRecord {
    schema: u32,
    propagators: Vec<PropagatorRecord>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PropagatorRecord {
    name: String,
    reaction: String,
    initial: DatumRecord,
    #[serde(rename = "final")]
    final_: DatumRecord,
    #[serde(default)]
    intermediates: Vec<DatumRecord>,
    steps: Vec<StepRecord>,
    #[serde(default)]
    leakage: Option<BTreeMap<String, RationalText>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DatumRecord {
    #[serde(default)]
    name: Option<String>,
    components: Vec<ComponentRecord>,
    #[serde(default)]
    dim: Option<String>,
    #[serde(default)]
    topology: Option<String>,
    #[serde(default)]
    connected_simply_connected: Option<bool>,
    #[serde(default)]
    in_higgs: Option<bool>,
    #[serde(default)]
    charge_gap: bool,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ComponentRecord {
    Particle(String),
    Virtual {
        #[serde(rename = "virtual")]
        label: String,
        #[serde(default)]
        numbers: BTreeMap<String, RationalText>,
        #[serde(default)]
        mass_gev: Option<f64>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepRecord {
    #[serde(default)]
    label: Option<String>,
    from: String,
    to: String,
    kind: String,
    #[serde(default)]
    leakage: Option<BTreeMap<String, RationalText>>,
}

/// A presentation together with the reaction it realizes.
#[derive(Debug, Clone)]
pub struct PropagatorEntry {
    pub reaction_text: String,
    pub reaction: Reaction,
    pub presentation: PropagatorPresentation,
}

fn law_vector(map: &BTreeMap<String, RationalText>) -> Result<LawVector, String> {
    let mut v = LawVector::zero();
    for (key, value) in map {
        let law: Law = key.parse().map_err(|_| format!("unknown law {key:?}"))?;
        v[law] = value.value()?;
    }
    Ok(v)
}

fn datum(
    record: &DatumRecord,
    default_name: &str,
    registry: &Registry,
) -> Result<CauchyDatum, String> {
    let components = record
        .components
        .iter()
        .map(|c| match c {
            ComponentRecord::Particle(name) => registry
                .resolve(name)
                .map(|p| Component::from(&p))
                .map_err(|e| e.to_string()),
            ComponentRecord::Virtual {
                label,
                numbers,
                mass_gev,
            } => Ok(Component::virtual_state(
                label.clone(),
                law_vector(numbers)?,
                *mass_gev,
            )),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let name = record
        .name
        .clone()
        .unwrap_or_else(|| default_name.to_owned());
    let mut d = CauchyDatum::new(name, components);
    if let Some(dim) = &record.dim {
        d.dim = dim.parse::<Dim>().map_err(|e| e.to_string())?;
    }
    if let Some(t) = &record.topology {
        d.topology = DatumTopology::parse(t).ok_or_else(|| format!("unknown topology {t:?}"))?;
    }
    if let Some(flag) = record.connected_simply_connected {
        d.connected_simply_connected = flag;
    }
    d.in_higgs = record.in_higgs;
    d.charge_gap = record.charge_gap;
    Ok(d)
}

/// `collar`, `h(p|q)`, or equal-index unions `h(p|q) u h(p|q)`.
pub fn parse_step_kind(text: &str) -> Result<StepKind, String> {
    let text = text.trim();
    if text == "collar" {
        return Ok(StepKind::Collar);
    }
    let pres = parse_presentation(text).map_err(|e| e.to_string())?;
    match pres.steps() {
        [single] if single.len() == 1 => Ok(StepKind::Handle(single[0])),
        [union] => Ok(StepKind::HandleUnion(union.clone())),
        _ => Err(format!("expected one handle or one union, found {text:?}")),
    }
}

fn entry(record: &PropagatorRecord, registry: &Registry) -> Result<PropagatorEntry, String> {
    let reaction = parse(&record.reaction, registry).map_err(|e| e.to_string())?;
    let steps = record
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| {
            Ok(ElementaryCobordism {
                label: s.label.clone().unwrap_or_else(|| format!("V{}", i + 1)),
                source: s.from.clone(),
                target: s.to.clone(),
                kind: parse_step_kind(&s.kind).map_err(|e| format!("step {}: {e}", i + 1))?,
                leakage: s.leakage.as_ref().map(law_vector).transpose()?,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let intermediates = record
        .intermediates
        .iter()
        .enumerate()
        .map(|(i, d)| datum(d, &format!("M{}", i + 1), registry))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PropagatorEntry {
        reaction_text: record.reaction.clone(),
        reaction,
        presentation: PropagatorPresentation {
            name: record.name.clone(),
            n0: datum(&record.initial, "N0", registry)?,
            n1: datum(&record.final_, "N1", registry)?,
            intermediates,
            steps,
            leakage: record.leakage.as_ref().map(law_vector).transpose()?,
        },
    })
}

pub fn parse_propagators(
    text: &str,
    registry: &Registry,
    source_name: &str,
) -> Result<Vec<PropagatorEntry>, LoadError> {
    let file: FileRecord =
        serde_json::from_str(text).map_err(|e| LoadError::at(source_name, e.line(), e))?;
    if file.schema != PROPAGATOR_SCHEMA {
        return Err(LoadError::whole(
            source_name,
            format!("unsupported schema {}", file.schema),
        ));
    }
    file.propagators
        .iter()
        .map(|r| {
            entry(r, registry)
                .map_err(|e| LoadError::whole(source_name, format!("propagator {:?}: {e}", r.name)))
        })
        .collect()
}

pub fn bundled_propagators(registry: &Registry) -> Vec<PropagatorEntry> {
    parse_propagators(BUNDLED_PROPAGATORS, registry, "propagators.json")
        .expect("bundled propagators parse")
}
