//! Number formatting shared by the JSON, CSV and plain-text writers.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// A float written with 17 significant digits, which round-trips exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct F17(pub f64);

/// "1.2345678901234567e-3" style text; non-finite values spell themselves out.
pub fn fmt_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        format!("{v}")
    }
}

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_str(&fmt_f64(self.0));
        }
        let raw = RawValue::from_string(fmt_f64(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

pub fn f17_vec(v: &[f64]) -> Vec<F17> {
    v.iter().copied().map(F17).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 6.0, 1e22] {
            let text = fmt_f64(v);
            assert_eq!(text.parse::<f64>().unwrap(), v);
            let digits = text.split('e').next().unwrap().replace(['-', '.'], "");
            assert_eq!(digits.len(), 17);
        }
        assert_eq!(serde_json::to_string(&F17(0.5)).unwrap(), "5.0000000000000000e-1");
        assert_eq!(serde_json::to_string(&F17(f64::NAN)).unwrap(), "\"NaN\"");
        let back: f64 = serde_json::from_str(&serde_json::to_string(&F17(0.1)).unwrap()).unwrap();
        assert_eq!(back, 0.1);
    }
}
