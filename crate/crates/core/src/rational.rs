//! Exact rationals for configuration values and 128-bit circle fractions.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number.
///
/// Parses from `"p/q"`, from a terminating decimal such as `"1.25"` or
/// `"-0.5"` (read exactly, never through binary floating point) and from
/// plain JSON integers. Serializes as `"p/q"` (or `"p"` when integral).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact value of a finite double.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Rational)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Config(format!("cannot parse rational {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Config(format!("zero denominator in {s:?}")));
            }
            return Ok(Rational(BigRational::new(p, q)));
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part
            .bytes()
            .chain(frac_part.bytes())
            .all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut num: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        if neg {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10u32), frac_part.len());
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Rational::from_integer(n)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// A point of the circle `R/Z` stored exactly as `value / 2^128`.
///
/// Addition is wrapping addition of the raw `u128`, so rotations are exact
/// modular arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fraction128(pub u128);

/// `floor(2^128 * (sqrt(5) - 1) / 2)`, the golden-ratio conjugate
/// 0.6180339887498948482... truncated to 128 bits.
pub const GOLDEN_CONJUGATE: Fraction128 = Fraction128(0x9e37_79b9_7f4a_7c15_f39c_c060_5ced_c834);

impl Fraction128 {
    pub const ZERO: Fraction128 = Fraction128(0);
    pub const HALF: Fraction128 = Fraction128(1 << 127);

    /// `floor(2^128 * {r})` where `{r}` is the fractional part of `r`.
    pub fn from_rational(r: &Rational) -> Self {
        let num = r.numer();
        let den = r.denom();
        // fractional part: num mod den in [0, den)
        let rem = num.mod_floor(den);
        let scaled: BigInt = rem << 128;
        let q = scaled.div_floor(den);
        let (_, digits) = q.to_u64_digits();
        let mut v: u128 = 0;
        for (i, d) in digits.iter().enumerate().take(2) {
            v |= (*d as u128) << (64 * i);
        }
        Fraction128(v)
    }

    /// Exact rational value `raw / 2^128`.
    pub fn to_rational(self) -> Rational {
        let num = BigInt::from_biguint(Sign::Plus, BigUint::from(self.0));
        let den = BigInt::one() << 128;
        Rational(BigRational::new(num, den))
    }

    pub fn to_f64(self) -> f64 {
        // top 64 bits carry more than the 53 a double can hold
        (self.0 >> 64) as u64 as f64 * (1.0 / 18_446_744_073_709_551_616.0)
            + (self.0 as u64) as f64
                * (1.0 / 18_446_744_073_709_551_616.0 / 18_446_744_073_709_551_616.0)
    }

    /// `(m * self) mod 1`, exact.
    #[inline]
    pub fn times(self, m: u64) -> Fraction128 {
        Fraction128(self.0.wrapping_mul(m as u128))
    }

    /// Distance on the circle, `min({x - y}, 1 - {x - y})`.
    #[inline]
    pub fn circle_distance(self, other: Fraction128) -> f64 {
        let d = self.0.wrapping_sub(other.0);
        let d = d.min(d.wrapping_neg());
        Fraction128(d).to_f64()
    }

    pub fn to_hex(self) -> String {
        format!("0x{:032x}", self.0)
    }
}

impl std::ops::Add for Fraction128 {
    type Output = Fraction128;

    #[inline]
    fn add(self, other: Fraction128) -> Fraction128 {
        Fraction128(self.0.wrapping_add(other.0))
    }
}

impl fmt::Display for Fraction128 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl FromStr for Fraction128 {
    type Err = Error;

    /// Accepts `"golden"`, a raw hex fraction `"0x..."` (at most 32 digits,
    /// read as `value / 2^128`), or any [`Rational`] syntax, reduced mod 1.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("golden") {
            return Ok(GOLDEN_CONJUGATE);
        }
        if let Some(hex) = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
            if hex.is_empty() || hex.len() > 32 {
                return Err(Error::Config(format!(
                    "hex fraction {t:?} must have 1..=32 digits"
                )));
            }
            let v = u128::from_str_radix(hex, 16)
                .map_err(|_| Error::Config(format!("bad hex fraction {t:?}")))?;
            // left-align so that "0x8" reads as 1/2
            return Ok(Fraction128(v << (4 * (32 - hex.len()))));
        }
        let r: Rational = t.parse()?;
        Ok(Fraction128::from_rational(&r))
    }
}

impl Serialize for Fraction128 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for Fraction128 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Compare a measured double with an exact rational bound.
pub fn cmp_f64(x: f64, bound: &BigRational) -> Option<std::cmp::Ordering> {
    BigRational::from_float(x).map(|v| v.cmp(bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("3/2".parse::<Rational>().unwrap(), Rational::new(3, 2));
        assert_eq!("1.5".parse::<Rational>().unwrap(), Rational::new(3, 2));
        assert_eq!("-0.25".parse::<Rational>().unwrap(), Rational::new(-1, 4));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_integer(7));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("1e3".parse::<Rational>().is_err());
    }

    #[test]
    fn decimal_is_exact() {
        // 0.1 must not pick up binary rounding
        let r: Rational = "0.1".parse().unwrap();
        assert_eq!(r, Rational::new(1, 10));
    }

    #[test]
    fn serde_roundtrip() {
        let r = Rational::new(-7, 3);
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(js, "\"-7/3\"");
        let back: Rational = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
        let from_int: Rational = serde_json::from_str("4").unwrap();
        assert_eq!(from_int, Rational::from_integer(4));
    }

    #[test]
    fn golden_constant_matches_integer_sqrt() {
        // floor((isqrt(5 * 2^256) - 2^128) / 2), computed with big integers
        let five: BigUint = BigUint::from(5u32) << 256;
        let root = five.sqrt();
        let g = (root - (BigUint::one() << 128)) >> 1;
        assert_eq!(g, BigUint::from(GOLDEN_CONJUGATE.0));
        assert!((GOLDEN_CONJUGATE.to_f64() - 0.618_033_988_749_894_9).abs() < 1e-16);
    }

    #[test]
    fn fraction_parsing() {
        assert_eq!("1/4".parse::<Fraction128>().unwrap(), Fraction128(1 << 126));
        assert_eq!("0x8".parse::<Fraction128>().unwrap(), Fraction128::HALF);
        assert_eq!("5/4".parse::<Fraction128>().unwrap(), Fraction128(1 << 126));
        assert_eq!(
            "-1/4".parse::<Fraction128>().unwrap(),
            Fraction128(3 << 126)
        );
        assert_eq!("golden".parse::<Fraction128>().unwrap(), GOLDEN_CONJUGATE);
    }

    #[test]
    fn rotation_arithmetic() {
        let a = Fraction128(1 << 126);
        assert_eq!(a.times(3), Fraction128(3 << 126));
        assert_eq!(a.times(4), Fraction128::ZERO);
        assert_eq!(a.to_rational(), Rational::new(1, 4));
        assert!((Fraction128::ZERO.circle_distance(Fraction128(3 << 126)) - 0.25).abs() < 1e-18);
    }
}
