//! Classification of spin-squared spectra.

use alloc::vec::Vec;

pub const SPIN_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinClass {
    Bosonic,
    Fermionic,
    Unpolarized,
    Mixt,
}

impl SpinClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SpinClass::Bosonic => "bosonic",
            SpinClass::Fermionic => "fermionic",
            SpinClass::Unpolarized => "unpolarized",
            SpinClass::Mixt => "mixt",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum SpinError {
    #[error("spin value {0} is negative or not finite")]
    NegativeValue(f64),
    #[error("no spin values given")]
    Empty,
    #[error("hbar must be positive")]
    NonPositiveHbar,
}

/// Root `s >= 0` of `hbar^2 s (s + 1) = v`.
pub fn spin_of(v: f64, hbar: f64) -> f64 {
    0.5 * (-1.0 + libm::sqrt(1.0 + 4.0 * v / (hbar * hbar)))
}

/// Bosonic or fermionic when every value has an integer or every value a
/// half-odd spin, unpolarized when none has either, mixt otherwise.
pub fn spin_classify(values: &[f64], hbar: f64) -> Result<SpinClass, SpinError> {
    if values.is_empty() {
        return Err(SpinError::Empty);
    }
    if hbar.is_nan() || hbar <= 0.0 {
        return Err(SpinError::NonPositiveHbar);
    }
    let kinds: Vec<Option<bool>> = values
        .iter()
        .map(|&v| {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(SpinError::NegativeValue(v));
            }
            let twice = 2.0 * spin_of(v, hbar);
            let k = libm::round(twice);
            Ok((libm::fabs(twice - k) <= SPIN_TOLERANCE).then_some((k as u64).is_multiple_of(2)))
        })
        .collect::<Result<_, _>>()?;
    let all = |want: Option<bool>| kinds.iter().all(|&k| k == want);
    Ok(if all(Some(true)) {
        SpinClass::Bosonic
    } else if all(Some(false)) {
        SpinClass::Fermionic
    } else if all(None) {
        SpinClass::Unpolarized
    } else {
        SpinClass::Mixt
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        assert_eq!(spin_classify(&[2.0], 1.0), Ok(SpinClass::Bosonic));
        assert_eq!(spin_classify(&[0.75], 1.0), Ok(SpinClass::Fermionic));
        assert_eq!(spin_classify(&[1.0], 1.0), Ok(SpinClass::Unpolarized));
        assert_eq!(spin_classify(&[2.0, 0.75], 1.0), Ok(SpinClass::Mixt));
        assert_eq!(
            spin_classify(&[0.0, 2.0, 6.0, 12.0], 1.0),
            Ok(SpinClass::Bosonic)
        );
        assert_eq!(spin_classify(&[0.75, 3.75], 1.0), Ok(SpinClass::Fermionic));
    }

    #[test]
    fn hbar_scales_values() {
        assert_eq!(spin_classify(&[8.0], 2.0), Ok(SpinClass::Bosonic));
    }

    #[test]
    fn errors() {
        assert_eq!(
            spin_classify(&[-1.0], 1.0),
            Err(SpinError::NegativeValue(-1.0))
        );
        assert_eq!(spin_classify(&[], 1.0), Err(SpinError::Empty));
    }
}
