//! Spectrum files (two columns `E N`) and spectral descriptors (JSON).

use reactopo_core::observables::{SamplePoint, SpectralDescriptor, Spectrum};
use serde::{Deserialize, Serialize};

use crate::error::LoadError;

pub fn parse_spectrum(text: &str, source_name: &str) -> Result<Spectrum, LoadError> {
    let mut levels = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let cols: Vec<&str> = content.split_whitespace().collect();
        let [e, n] = cols.as_slice() else {
            return Err(LoadError::at(
                source_name,
                i + 1,
                format!("expected 2 columns, found {}", cols.len()),
            ));
        };
        let num = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| LoadError::at(source_name, i + 1, format!("not a number: {s:?}")))
        };
        levels.push((num(e)?, num(n)?));
    }
    Spectrum::new(levels).map_err(|e| LoadError::whole(source_name, e))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplePointRecord {
    pub label: String,
    #[serde(default)]
    pub point_spectrum: Vec<f64>,
    #[serde(default)]
    pub continuous_spectrum: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorRecord {
    pub points: Vec<SamplePointRecord>,
}

pub fn parse_descriptor(text: &str, source_name: &str) -> Result<SpectralDescriptor, LoadError> {
    let record: DescriptorRecord =
        serde_json::from_str(text).map_err(|e| LoadError::at(source_name, e.line(), e))?;
    SpectralDescriptor::new(
        record
            .points
            .into_iter()
            .map(|p| SamplePoint {
                label: p.label,
                point_spectrum: p.point_spectrum,
                continuous_spectrum: p.continuous_spectrum,
            })
            .collect(),
    )
    .map_err(|e| LoadError::whole(source_name, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_with_comments() {
        let s = parse_spectrum("# E N\n0 1\n\n1.5 2 # excited\n", "s").unwrap();
        assert_eq!(s.levels(), &[(0.0, 1.0), (1.5, 2.0)]);
    }

    #[test]
    fn spectrum_errors_point_at_line() {
        let e = parse_spectrum("0 1\n1 x\n", "s").unwrap_err();
        assert_eq!(e.line, Some(2));
        let e = parse_spectrum("0 1 2\n", "s").unwrap_err();
        assert_eq!(e.line, Some(1));
    }

    #[test]
    fn descriptor_round() {
        let d =
            parse_descriptor(r#"{"points":[{"label":"a","point_spectrum":[1.0]}]}"#, "d").unwrap();
        assert_eq!(d.points().len(), 1);
        assert!(parse_descriptor(r#"{"points":[]}"#, "d").is_err());
    }
}
