use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::{IBig, UBig};
use num_bigint::{BigInt, Sign};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

pub type Float = FBig<HalfEven, 2>;

/// Extra decimal digits carried beyond the requested budget.
pub const GUARD_DIGITS: u32 = 10;

/// Largest digit budget accepted by the constant routines unless raised.
pub const DEFAULT_MAX_DIGITS: u32 = 50;

pub fn working_bits(digits: u32) -> usize {
    ((digits + GUARD_DIGITS) as f64 * std::f64::consts::LOG2_10).ceil() as usize + 8
}

pub fn big_to_ibig(n: &BigInt) -> IBig {
    let (sign, bytes) = n.to_bytes_le();
    let u = IBig::from(UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -u
    } else {
        u
    }
}

/// High-precision real carrying the number of decimal places it is trusted to.
#[derive(Clone, Debug)]
pub struct HPReal {
    value: Float,
    digits: u32,
}

impl HPReal {
    pub fn from_float(value: Float, digits: u32) -> HPReal {
        HPReal { value, digits }
    }

    pub fn from_rational(r: &Rational, digits: u32) -> HPReal {
        let bits = working_bits(digits);
        let n = Float::from(big_to_ibig(r.numer())).with_precision(bits).value();
        let d = Float::from(big_to_ibig(r.denom())).with_precision(bits).value();
        HPReal { value: n / d, digits }
    }

    pub fn from_i64(n: i64, digits: u32) -> HPReal {
        HPReal::from_float(Float::from(n).with_precision(working_bits(digits)).value(), digits)
    }

    pub fn zero(digits: u32) -> HPReal {
        HPReal::from_i64(0, digits)
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn with_digits(mut self, digits: u32) -> HPReal {
        self.digits = digits;
        self
    }

    pub fn ln(&self) -> Result<HPReal> {
        if self.value <= Float::ZERO {
            return Err(Error::Domain("logarithm of a non-positive number".into()));
        }
        Ok(HPReal::from_float(self.value.ln(), self.digits))
    }

    pub fn abs(&self) -> HPReal {
        if self.value < Float::ZERO {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn powi(&self, e: u32) -> HPReal {
        let mut acc = HPReal::from_i64(1, self.digits);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.value == Float::ZERO
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    /// Decimal string rounded to `places` digits after the point.
    pub fn to_fixed(&self, places: u32) -> String {
        let bits = self.value.precision().max(working_bits(places));
        let scale = Float::from(IBig::from(10u8).pow(places as usize)).with_precision(bits).value();
        let scaled = self.value.clone().with_precision(bits).value() * scale;
        let int: IBig = scaled.round().to_int().value();
        let neg = int < IBig::ZERO;
        let mut s = if neg { (-int).to_string() } else { int.to_string() };
        let places = places as usize;
        if places > 0 {
            if s.len() <= places {
                s = format!("{}{}", "0".repeat(places + 1 - s.len()), s);
            }
            s.insert(s.len() - places, '.');
        }
        if neg && s.chars().any(|c| c.is_ascii_digit() && c != '0') {
            s.insert(0, '-');
        }
        s
    }

    /// Decimal string with `sig` significant digits.
    pub fn to_sig(&self, sig: u32) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let est = self.to_f64().abs().log10().floor() as i64;
        let mut places = (sig as i64 - 1 - est).max(0) as u32;
        for _ in 0..2 {
            let s = self.to_fixed(places);
            let digits: String = s.chars().filter(|c| c.is_ascii_digit()).collect();
            let significant = digits.trim_start_matches('0').len() as i64;
            match significant.cmp(&(sig as i64)) {
                Ordering::Equal => return s,
                Ordering::Greater if places > 0 => places -= 1,
                Ordering::Less => places += 1,
                _ => return s,
            }
        }
        self.to_fixed(places)
    }

    pub fn parse(text: &str, digits: u32) -> Result<HPReal> {
        let bits = working_bits(digits);
        let v: Float = text
            .trim()
            .parse::<dashu_float::DBig>()
            .map_err(|_| Error::Parse { pos: 0, msg: format!("invalid decimal {text:?}") })?
            .with_precision(digits as usize + GUARD_DIGITS as usize)
            .value()
            .to_binary()
            .value()
            .with_rounding::<HalfEven>()
            .with_precision(bits)
            .value();
        Ok(HPReal::from_float(v, digits))
    }
}

impl fmt::Display for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = f.precision().map(|p| p as u32).unwrap_or(self.digits);
        write!(f, "{}", self.to_fixed(places))
    }
}

impl PartialEq for HPReal {
    fn eq(&self, other: &HPReal) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for HPReal {
    fn partial_cmp(&self, other: &HPReal) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

#[derive(Serialize, Deserialize)]
struct HPRealRepr {
    value: String,
    digits: u32,
}

impl Serialize for HPReal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HPRealRepr { value: self.to_fixed(self.digits), digits: self.digits }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HPReal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = HPRealRepr::deserialize(d)?;
        HPReal::parse(&r.value, r.digits).map_err(serde::de::Error::custom)
    }
}

macro_rules! hp_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<&HPReal> for &HPReal {
            type Output = HPReal;
            fn $f(self, rhs: &HPReal) -> HPReal {
                HPReal {
                    value: (&self.value).$f(&rhs.value),
                    digits: self.digits.min(rhs.digits),
                }
            }
        }
        impl $tr<HPReal> for HPReal {
            type Output = HPReal;
            fn $f(self, rhs: HPReal) -> HPReal {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&HPReal> for HPReal {
            type Output = HPReal;
            fn $f(self, rhs: &HPReal) -> HPReal {
                (&self).$f(rhs)
            }
        }
    };
}

hp_binop!(Add, add);
hp_binop!(Sub, sub);
hp_binop!(Mul, mul);
hp_binop!(Div, div);

impl Neg for HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        HPReal { value: -self.value, digits: self.digits }
    }
}

impl Neg for &HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        -self.clone()
    }
}
