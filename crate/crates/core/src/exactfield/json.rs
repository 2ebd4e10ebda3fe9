//! JSON encodings. A [`FieldElement`] is written as `{"a":"p/q","b":"r/s","d":u}`;
//! a [`Scalar`] is written as a bare `"p/q"` string when rational and as the
//! object form otherwise. Both forms are accepted when reading either type.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cspec::{parse_cspec, parse_rational};
use super::element::{format_rational, FieldElement};

#[derive(Serialize, Deserialize)]
struct SurdRepr {
    a: String,
    b: String,
    d: u64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyRepr {
    Text(String),
    Surd(SurdRepr),
}

impl From<&FieldElement> for SurdRepr {
    fn from(x: &FieldElement) -> Self {
        SurdRepr {
            a: format_rational(x.a()),
            b: format_rational(x.b()),
            d: x.raw_radicand(),
        }
    }
}

impl AnyRepr {
    fn into_element<E: serde::de::Error>(self) -> Result<FieldElement, E> {
        match self {
            AnyRepr::Text(s) => parse_cspec(&s).map_err(E::custom),
            AnyRepr::Surd(r) => {
                let a = parse_rational(&r.a).map_err(E::custom)?;
                let b = parse_rational(&r.b).map_err(E::custom)?;
                FieldElement::new(a, b, r.d).map_err(E::custom)
            }
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SurdRepr::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        AnyRepr::deserialize(deserializer)?.into_element()
    }
}

/// A field element with the compact JSON form used inside larger documents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(pub FieldElement);

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.as_rational() {
            Some(q) => serializer.serialize_str(&format_rational(q)),
            None => SurdRepr::from(&self.0).serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        AnyRepr::deserialize(deserializer)?
            .into_element()
            .map(Scalar)
    }
}
