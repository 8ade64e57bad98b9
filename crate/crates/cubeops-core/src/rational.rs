//! Exact rational scalars with `"p/q"` string (de)serialization.
//!
//! `Rational` wraps an arbitrary-precision rational kept in lowest terms.
//! The string form is `"p/q"`, with `/q` omitted when the denominator is 1;
//! that is the only form emitted by `Display`/`Serialize`, and `FromStr`/
//! `Deserialize` accept exactly that form (plus plain JSON integers).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "denominator must be non-zero");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn half() -> Self {
        Rational::new(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Lies in the closed unit interval `[0, 1]`.
    pub fn in_unit(&self) -> bool {
        !self.is_negative() && self <= &Rational::one()
    }

    /// Lies strictly between 0 and 1.
    pub fn in_open_unit(&self) -> bool {
        self.is_positive() && self < &Rational::one()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn min(a: &Rational, b: &Rational) -> Rational {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max(a: &Rational, b: &Rational) -> Rational {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// `floor(self * scale + 1/2)` as an exact integer — used to map exact
    /// coordinates onto deterministic integer canvases (SVG), never for math.
    pub fn scaled_round(&self, scale: u64) -> BigInt {
        let num = self.0.numer() * BigInt::from(scale) * 2u8 + self.0.denom();
        let den = self.0.denom() * 2u8;
        num.div_floor(&den)
    }

    /// Like [`scaled_round`](Self::scaled_round) but clamped to `i64`.
    pub fn scaled_round_i64(&self, scale: u64) -> i64 {
        self.scaled_round(scale).to_i64().unwrap_or(i64::MAX)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |part: &str| {
            part.trim()
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("bad integer {part:?}: {e}")))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((num, den)) => {
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Rational(BigRational::new(parse_int(num)?, den)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RatVisitor;

        impl de::Visitor<'_> for RatVisitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as \"p/q\" (or \"p\"), or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                v.parse().map_err(|e| E::custom(format!("{e}")))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational(BigRational::from_integer(BigInt::from(v))))
            }
        }

        deserializer.deserialize_any(RatVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(num, den)
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(&q(1, 3) + &q(1, 6), q(1, 2));
        assert_eq!(&q(1, 2) * &q(2, 3), q(1, 3));
        assert_eq!(&q(1, 2) - &q(3, 4), q(-1, 4));
        assert_eq!(&q(1, 2) / &q(1, 4), q(2, 1));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["0", "1", "-3", "1/2", "-7/12", "4096/4097"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!(q(2, 4).to_string(), "1/2");
        assert_eq!(q(3, 1).to_string(), "3");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
    }

    #[test]
    fn serde_uses_strings() {
        let r = q(-5, 8);
        assert_eq!(serde_json::to_string(&r).unwrap(), "\"-5/8\"");
        let back: Rational = serde_json::from_str("\"-5/8\"").unwrap();
        assert_eq!(back, r);
        let from_int: Rational = serde_json::from_str("3").unwrap();
        assert_eq!(from_int, q(3, 1));
    }

    #[test]
    fn unit_interval_predicates() {
        assert!(q(0, 1).in_unit());
        assert!(q(1, 1).in_unit());
        assert!(!q(0, 1).in_open_unit());
        assert!(q(1, 4096).in_open_unit());
        assert!(!q(-1, 2).in_unit());
        assert!(!q(5, 4).in_unit());
    }

    #[test]
    fn scaled_round_matches_hand_values() {
        assert_eq!(q(1, 2).scaled_round_i64(1000), 500);
        assert_eq!(q(1, 3).scaled_round_i64(1000), 333);
        assert_eq!(q(2, 3).scaled_round_i64(1000), 667);
        assert_eq!(q(1, 2048).scaled_round_i64(1000), 0);
        assert_eq!(q(3, 2048).scaled_round_i64(1000), 1);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-200i64..200, 1i64..50).prop_map(|(n, d)| Rational::new(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

        #[test]
        fn add_commutes(a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn mul_distributes(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn parse_round_trips(a in arb_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
