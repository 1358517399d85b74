//! Fixed 17-significant-digit serialization of reals, so reports are
//! byte-reproducible and every `f64` survives a round trip.

pub(crate) fn format_sig17(x: f64) -> String {
    format!("{x:.16e}")
}

pub(crate) mod sig17 {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::value::RawValue;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if !x.is_finite() {
            return Err(serde::ser::Error::custom(format!(
                "cannot serialize non-finite {x}"
            )));
        }
        let raw =
            RawValue::from_string(super::format_sig17(*x)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        f64::deserialize(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(serde::Serialize, serde::Deserialize, PartialEq, Debug)]
    struct Wrap {
        #[serde(with = "sig17")]
        x: f64,
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_sig17(0.1), "1.0000000000000001e-1");
        assert_eq!(format_sig17(0.0), "0.0000000000000000e0");
        assert_eq!(format_sig17(-2.5), "-2.5000000000000000e0");
    }

    #[test]
    fn round_trips_through_json() {
        for x in [0.1, 1.0 / 3.0, 1e-300, 12345.678, f64::MAX, -0.0] {
            let s = serde_json::to_string(&Wrap { x }).unwrap();
            let back: Wrap = serde_json::from_str(&s).unwrap();
            assert_eq!(back.x.to_bits(), x.to_bits(), "{s}");
        }
        assert!(serde_json::to_string(&Wrap { x: f64::NAN }).is_err());
    }
}
