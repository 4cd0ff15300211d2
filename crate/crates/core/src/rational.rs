//! Exact rational numbers and points of the hypersimplex slice.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};

pub type Rational = BigRational;

#[must_use]
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[must_use]
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Always `p/q`, including integers (`2/1`).
#[must_use]
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// A point of R^n whose coordinates sum to 2, indexed from 1 in labels and from 0 here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let sum: Rational = coords.iter().sum();
        if sum != int(2) {
            return Err(Error::NotOnSlice(format_rational(&sum)));
        }
        Ok(Self(coords))
    }

    pub fn from_fractions(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    /// The barycenter `(2/n, ..., 2/n)`.
    #[must_use]
    pub fn barycenter(n: usize) -> Self {
        Self(vec![rat(2, n as i64); n])
    }

    /// Vertex with ones at `i` and `j` (0-based).
    #[must_use]
    pub fn vertex(n: usize, i: usize, j: usize) -> Self {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v[j] = Rational::one();
        Self(v)
    }

    #[must_use]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[must_use]
    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// Sum of the coordinates in a 0-based bitmask.
    #[must_use]
    pub fn mass(&self, mask: u32) -> Rational {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, c)| c)
            .sum()
    }

    /// Coordinates permuted so that entry `perm[i]` of the result is entry `i` here.
    #[must_use]
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = vec![Rational::zero(); self.0.len()];
        for (i, c) in self.0.iter().enumerate() {
            out[perm[i]] = c.clone();
        }
        Self(out)
    }

    #[must_use]
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }

    pub fn parse(coords: &[String]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_>>()?,
        )
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        Self::parse(&raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_and_parses() {
        assert_eq!(format_rational(&rat(4, 10)), "2/5");
        assert_eq!(format_rational(&int(1)), "1/1");
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn point_must_lie_on_slice() {
        assert!(RationalPoint::from_fractions(&[(1, 2); 4]).is_ok());
        assert!(RationalPoint::from_fractions(&[(1, 2); 5]).is_err());
        let p = RationalPoint::barycenter(5);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["2/5","2/5","2/5","2/5","2/5"]"#);
        assert_eq!(serde_json::from_str::<RationalPoint>(&json).unwrap(), p);
    }
}
