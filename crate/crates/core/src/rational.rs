//! Exact rationals and their text form `"p/q"`.

use num::{BigInt, BigRational, BigUint, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

/// Always `"p/q"` with `q > 0` and the fraction in lowest terms.
pub fn format(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"`, an integer, or a finite decimal such as `"0.25"`.
pub fn parse(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidParameters(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::InvalidParameters(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int: BigInt = if int.is_empty() || int == "-" { BigInt::zero() } else { int.parse().map_err(|_| bad())? };
        let frac_num: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num::pow(BigInt::from(10), frac.len());
        let mut r = BigRational::new(frac_num, scale);
        if negative {
            r = -r;
        }
        return Ok(BigRational::from_integer(int) + r);
    }
    Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?))
}

pub fn from_uint(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

pub fn from_i64(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format(r))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
    let s = String::deserialize(d)?;
    parse(&s).map_err(serde::de::Error::custom)
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigRational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Big unsigned integers as decimal strings.
pub mod uint {
    use super::*;

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for n in v {
                seq.serialize_element(&n.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigUint>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| s.parse().map_err(serde::de::Error::custom))
                .collect()
        }
    }
}
