//! Exact rational helpers and their `"p/q"` string serialization.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qi(n: &BigInt) -> Q {
    BigRational::from_integer(n.clone())
}

pub fn frac(p: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// Lowest-terms rendering; integers print without a denominator.
pub fn fmt(x: &Q) -> String {
    x.to_string()
}

pub fn parse(s: &str) -> Result<Q> {
    let s = s.trim();
    let r = BigRational::from_str(s).map_err(|_| Error::Invalid {
        field: "rational",
        detail: format!("cannot parse {s:?} as p/q"),
    })?;
    Ok(r)
}

/// Returns the integer value when `x` has denominator one.
pub fn as_integer(x: &Q) -> Option<BigInt> {
    if x.is_integer() {
        Some(x.to_integer())
    } else {
        None
    }
}

pub fn is_nonnegative(x: &Q) -> bool {
    !x.is_negative()
}

pub fn sign_power(k: i64) -> Q {
    if k.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt(x))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Text(String),
        Int(i64),
    }
    match Raw::deserialize(d)? {
        Raw::Text(s) => parse(&s).map_err(de::Error::custom),
        Raw::Int(n) => Ok(q(n)),
    }
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&fmt(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse(s).map_err(de::Error::custom))
            .collect()
    }
}
