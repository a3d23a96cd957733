//! JSON forms of polynomials and root sets.
//!
//! ```json
//! {"var":"z","coeffs":["0","0","3","1"]}
//! {"var":"lambda","coeffs":[{"b_exps":{"0":1}},{"b_exps":{"1":2}},{"b_exps":{"0":1}}]}
//! {"degree":2,"all_real_certified":"yes","roots":[{"re":-1.0,"im":0.0,"residual":0.0}, ...]}
//! ```

use super::bsym::{BSymPoly, Laurent};
use super::exact::{parse_rational, ExactPoly};
use super::roots::{Certified, RootSet};
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::ToPrimitive;
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub coeffs: Vec<String>,
}

impl PolyJson {
    pub fn from_poly(p: &ExactPoly, var: &str) -> Self {
        PolyJson {
            var: var.to_string(),
            coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_poly(&self) -> Result<ExactPoly> {
        Ok(ExactPoly::new(
            self.coeffs
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<_>>()?,
        ))
    }
}

/// One Laurent coefficient: exponent of `b` → integer. Exponents are
/// written in increasing order; integers that do not fit in 64 bits are
/// written as strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BExps(pub Laurent);

impl Serialize for BExps {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.0.terms();
        let mut map = s.serialize_map(Some(terms.len()))?;
        for (e, c) in terms {
            match c.to_i64() {
                Some(small) => map.serialize_entry(&e.to_string(), &small)?,
                None => map.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for BExps {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = BExps;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from exponent to integer")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut m: A,
            ) -> std::result::Result<BExps, A::Error> {
                let mut l = Laurent::zero();
                while let Some((k, v)) = m.next_entry::<String, serde_json::Value>()? {
                    let e: i64 = k.parse().map_err(de::Error::custom)?;
                    let c: BigInt = match &v {
                        serde_json::Value::Number(n) => n
                            .as_i64()
                            .map(BigInt::from)
                            .ok_or_else(|| de::Error::custom("non-integer coefficient"))?,
                        serde_json::Value::String(s) => s.parse().map_err(de::Error::custom)?,
                        _ => return Err(de::Error::custom("coefficient must be an integer")),
                    };
                    l.add_term(e, c);
                }
                Ok(BExps(l))
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub b_exps: BExps,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BSymJson {
    pub var: String,
    pub coeffs: Vec<LaurentJson>,
}

impl BSymJson {
    pub fn from_poly(p: &BSymPoly) -> Self {
        BSymJson {
            var: "lambda".into(),
            coeffs: p
                .coeffs()
                .iter()
                .map(|l| LaurentJson {
                    b_exps: BExps(l.clone()),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> BSymPoly {
        BSymPoly::new(self.coeffs.iter().map(|c| c.b_exps.0.clone()).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootJson {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSetJson {
    pub degree: usize,
    pub all_real_certified: Certified,
    pub roots: Vec<RootJson>,
}

impl From<&RootSet> for RootSetJson {
    fn from(r: &RootSet) -> Self {
        RootSetJson {
            degree: r.len(),
            all_real_certified: r.all_real_certified,
            roots: r
                .roots
                .iter()
                .zip(&r.residuals)
                .map(|(z, &residual)| RootJson {
                    re: z.re,
                    im: z.im,
                    residual,
                })
                .collect(),
        }
    }
}

/// Either polynomial form, as found in an input document.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly {
    Exact(ExactPoly),
    Symbolic(BSymPoly),
}

/// Read a polynomial document of either shape.
pub fn parse_poly_json(text: &str) -> Result<AnyPoly> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("polynomial JSON: {e}")))?;
    let symbolic = v
        .get("coeffs")
        .and_then(|c| c.as_array())
        .is_some_and(|a| a.iter().any(|x| x.is_object()));
    if symbolic {
        let j: BSymJson =
            serde_json::from_value(v).map_err(|e| Error::Parse(format!("polynomial JSON: {e}")))?;
        Ok(AnyPoly::Symbolic(j.to_poly()))
    } else {
        let j: PolyJson =
            serde_json::from_value(v).map_err(|e| Error::Parse(format!("polynomial JSON: {e}")))?;
        Ok(AnyPoly::Exact(j.to_poly()?))
    }
}
