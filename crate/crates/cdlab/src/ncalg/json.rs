//! JSON wire form: `{"alphabet":"cd","terms":[{"word":"cddc","coeff":3},...]}`
//! with terms in canonical order. Coefficients are emitted as exact JSON
//! integers of any size (serde_json's arbitrary-precision numbers).

use super::{Alphabet, NcError, NcPolynomial, Word};
use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::str::FromStr;

impl Serialize for Alphabet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Alphabet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        match text.as_str() {
            "ab" => Ok(Alphabet::Ab),
            "cd" => Ok(Alphabet::Cd),
            other => Err(D::Error::custom(format!("unknown alphabet {other:?}"))),
        }
    }
}

fn coeff_to_number<E: serde::ser::Error>(c: &BigInt) -> Result<serde_json::Number, E> {
    serde_json::Number::from_str(&c.to_string())
        .map_err(|e| E::custom(format!("coefficient not representable: {e}")))
}

struct TermRef<'a>(&'a Word, &'a BigInt);

impl Serialize for TermRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("word", &self.0.to_string())?;
        m.serialize_entry("coeff", &coeff_to_number::<S::Error>(self.1)?)?;
        m.end()
    }
}

impl Serialize for NcPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("alphabet", &self.alphabet())?;
        struct Terms<'a>(&'a NcPolynomial);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.num_terms()))?;
                for (w, c) in self.0.terms() {
                    seq.serialize_element(&TermRef(w, c))?;
                }
                seq.end()
            }
        }
        m.serialize_entry("terms", &Terms(self))?;
        m.end()
    }
}

#[derive(Deserialize)]
struct TermDe {
    word: String,
    coeff: serde_json::Number,
}

#[derive(Deserialize)]
struct PolyDe {
    alphabet: Alphabet,
    terms: Vec<TermDe>,
}

impl<'de> Deserialize<'de> for NcPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyDe::deserialize(d)?;
        let mut poly = NcPolynomial::zero(raw.alphabet);
        for t in raw.terms {
            let word = super::parse_word(&t.word, raw.alphabet)
                .map_err(|e: NcError| D::Error::custom(e.to_string()))?;
            let coeff = BigInt::from_str(&t.coeff.to_string())
                .map_err(|e| D::Error::custom(format!("bad coefficient: {e}")))?;
            poly.add_term(word, &coeff);
        }
        Ok(poly)
    }
}
