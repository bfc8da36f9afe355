//! Poset wire form:
//! `{"elements":["e0",...],"covers":[["e0","e1"],...],"bottom":"e0","top":"ek"}`.
//! Ranks are inferred and validated on load.

use super::{GradedPoset, PosetError};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
struct PosetWire {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
    bottom: String,
    top: String,
}

impl Serialize for GradedPoset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let wire = PosetWire {
            elements: self.names().to_vec(),
            covers: self
                .covers()
                .iter()
                .map(|&(a, b)| (self.name(a).to_string(), self.name(b).to_string()))
                .collect(),
            bottom: self.name(self.bottom()).to_string(),
            top: self.name(self.top()).to_string(),
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedPoset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let wire = PosetWire::deserialize(d)?;
        let find = |name: &str| -> Result<usize, D::Error> {
            wire.elements
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| D::Error::custom(format!("unknown element {name:?}")))
        };
        let mut covers = Vec::with_capacity(wire.covers.len());
        for (a, b) in &wire.covers {
            covers.push((find(a)?, find(b)?));
        }
        let bottom = find(&wire.bottom)?;
        let top = find(&wire.top)?;
        GradedPoset::new(wire.elements, covers, bottom, top)
            .map_err(|e: PosetError| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{generate, DEFAULT_MAX_ELEMENTS};
    use super::*;

    #[test]
    fn round_trip_through_json() {
        let p = generate("polygon:5", DEFAULT_MAX_ELEMENTS).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        let back: GradedPoset = serde_json::from_str(&text).unwrap();
        assert_eq!(back.names(), p.names());
        assert_eq!(back.covers(), p.covers());
        assert_eq!(back.bottom(), p.bottom());
        assert_eq!(back.top(), p.top());
    }

    #[test]
    fn loading_validates_structure() {
        let bad = r#"{"elements":["a","b","c"],"covers":[["a","b"],["b","c"],["a","c"]],"bottom":"a","top":"c"}"#;
        assert!(serde_json::from_str::<GradedPoset>(bad).is_err());
        let unknown = r#"{"elements":["a","b"],"covers":[["a","b"]],"bottom":"a","top":"z"}"#;
        assert!(serde_json::from_str::<GradedPoset>(unknown).is_err());
    }

    #[test]
    fn minimal_valid_poset_loads() {
        let text = r#"{"elements":["lo","hi"],"covers":[["lo","hi"]],"bottom":"lo","top":"hi"}"#;
        let p: GradedPoset = serde_json::from_str(text).unwrap();
        assert_eq!(p.height(), 1);
    }
}
