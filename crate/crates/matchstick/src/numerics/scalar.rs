//! Multi-precision binary floating-point scalars.
//!
//! All plane coordinates and lengths are [`Scalar`]s: arbitrary-precision
//! binary floats with an explicit precision in bits. Arithmetic on two scalars
//! rounds to the larger of the two precisions, so values never silently lose
//! precision when mixed.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_float::ops::SquareRoot;
use dashu_float::round::mode::HalfEven;
use dashu_float::{DBig, FBig};
use dashu_base::BitTest;
use dashu_int::UBig;

type Raw = FBig<HalfEven, 2>;

/// Arbitrary-precision binary float. Always finite.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar(Raw);

impl Scalar {
    pub fn zero(bits: usize) -> Self {
        Scalar(Raw::ZERO.with_precision(bits).value())
    }

    pub fn one(bits: usize) -> Self {
        Scalar(Raw::ONE.with_precision(bits).value())
    }

    pub fn from_i64(n: i64, bits: usize) -> Self {
        Scalar(Raw::from(n).with_precision(bits).value())
    }

    /// 2^exp, exactly representable at any precision.
    pub fn pow2(exp: i32, bits: usize) -> Self {
        let raw = if exp >= 0 {
            Raw::ONE << exp as isize
        } else {
            Raw::ONE >> (-exp) as isize
        };
        Scalar(raw.with_precision(bits).value())
    }

    /// Exact conversion; every finite f64 is a dyadic rational.
    pub fn from_f64(x: f64, bits: usize) -> Self {
        assert!(x.is_finite(), "scalar from non-finite f64");
        Scalar(Raw::try_from(x).expect("finite f64").with_precision(bits).value())
    }

    /// Parse a decimal literal such as `-6.4` or `1.25e-3`.
    ///
    /// The decimal is widened well past `bits` worth of digits before the
    /// base conversion so that short literals do not truncate the binary
    /// value (dashu keeps the literal's own digit count as its precision).
    pub fn from_decimal(text: &str, bits: usize) -> Result<Self, ScalarParseError> {
        let dec = DBig::from_str(text.trim()).map_err(|e| ScalarParseError {
            text: text.to_owned(),
            reason: e.to_string(),
        })?;
        // Scale the integer significand by the ten-power directly in binary;
        // this is far cheaper than a full decimal base conversion. Guard bits
        // cover the rounding of the power and the final multiply.
        let repr = dec.into_repr();
        let exp10 = repr.exponent();
        let mant = Raw::from(repr.significand().clone());
        let guard = bits + 64;
        let mant = mant.with_precision(guard).value();
        if exp10 == 0 {
            return Ok(Scalar(mant.with_precision(bits).value()));
        }
        let pow = Self::pow10_raw(exp10.unsigned_abs(), guard);
        let raw = if exp10 > 0 { mant * pow } else { mant / pow };
        Ok(Scalar(raw.with_precision(bits).value()))
    }

    /// 10^exp at the given binary precision, by squaring.
    fn pow10_raw(mut exp: usize, bits: usize) -> Raw {
        let mut base = Raw::from(10).with_precision(bits).value();
        let mut acc = Raw::ONE.with_precision(bits).value();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (acc * &base).with_precision(bits).value();
            }
            exp >>= 1;
            if exp > 0 {
                base = (base.clone() * &base).with_precision(bits).value();
            }
        }
        acc
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    pub fn with_precision(&self, bits: usize) -> Self {
        Scalar(self.0.clone().with_precision(bits).value())
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() { -self } else { self.clone() }
    }

    pub fn sqrt(&self) -> Self {
        Scalar(self.0.sqrt())
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn half(&self) -> Self {
        Scalar(self.0.clone() / Raw::from(2).with_precision(self.precision()).value())
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Raw::ZERO
    }

    pub fn is_negative(&self) -> bool {
        self.0 < Raw::ZERO
    }

    pub fn is_positive(&self) -> bool {
        self.0 > Raw::ZERO
    }

    /// Nearest f64; used only for planning heuristics, never for results.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// Canonical decimal rendering at `digits` significant digits.
    ///
    /// Trailing zeros are trimmed; the output parses back (via
    /// [`Scalar::from_decimal`]) to a value within one decimal ulp, and
    /// re-rendering that value yields the identical string.
    ///
    /// Implemented with integer arithmetic on the significand rather than
    /// dashu's base conversion, which is orders of magnitude slower and sits
    /// on the hot path (every executed instruction renders its parameters and
    /// result claims).
    pub fn to_decimal_string(&self, digits: usize) -> String {
        assert!(digits > 0);
        if self.is_zero() {
            return "0".to_owned();
        }
        let repr = self.0.repr();
        let sig = repr.significand();
        let exp = repr.exponent();
        let (_, mag) = sig.clone().into_parts();
        // First guess at the decimal exponent from the binary magnitude.
        let log2 = (mag.bit_len() as f64 - 1.0) + exp as f64;
        let mut e10 = (log2 * std::f64::consts::LOG10_2).floor() as i64;
        let rounded = loop {
            // n = value · 10^(digits − 1 − e10), rounded to an integer,
            // should have exactly `digits` digits; adjust e10 until it does.
            let p = digits as i64 - 1 - e10;
            let mut num = mag.clone();
            let mut den = UBig::ONE;
            if exp >= 0 {
                num <<= exp as usize;
            } else {
                den <<= (-exp) as usize;
            }
            if p >= 0 {
                num *= UBig::from(10u8).pow(p as usize);
            } else {
                den *= UBig::from(10u8).pow((-p) as usize);
            }
            let q = &num / &den;
            let r = num - &q * &den;
            let mut n = q;
            match (r << 1usize).cmp(&den) {
                Ordering::Greater => n += UBig::ONE,
                Ordering::Equal => {
                    // Ties to even.
                    if n.bit(0) {
                        n += UBig::ONE;
                    }
                }
                Ordering::Less => {}
            }
            let text = n.to_string();
            match text.len() as i64 - digits as i64 {
                0 => break text,
                d if d > 0 => e10 += d,
                d => e10 += d,
            }
        };
        let trimmed = rounded.trim_end_matches('0');
        let trimmed = if trimmed.is_empty() { "0" } else { trimmed };
        let sign = if self.is_negative() { "-" } else { "" };
        if (0..=20).contains(&e10) {
            let int_len = (e10 + 1) as usize;
            if trimmed.len() <= int_len {
                format!("{sign}{trimmed}{}", "0".repeat(int_len - trimmed.len()))
            } else {
                format!("{sign}{}.{}", &trimmed[..int_len], &trimmed[int_len..])
            }
        } else if (-8..0).contains(&e10) {
            format!("{sign}0.{}{}", "0".repeat((-e10 - 1) as usize), trimmed)
        } else if trimmed.len() == 1 {
            format!("{sign}{trimmed}e{e10}")
        } else {
            format!("{sign}{}.{}e{}", &trimmed[..1], &trimmed[1..], e10)
        }
    }
}

/// Failed to parse a decimal literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarParseError {
    pub text: String,
    pub reason: String,
}

impl fmt::Display for ScalarParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid decimal literal {:?}: {}", self.text, self.reason)
    }
}

impl std::error::Error for ScalarParseError {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.partial_cmp(&other.0).expect("scalars are finite")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(30))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(40))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_takes_larger_precision() {
        let a = Scalar::from_i64(3, 64);
        let b = Scalar::from_i64(5, 256);
        assert_eq!((&a + &b).precision(), 256);
        assert_eq!((&a * &b).precision(), 256);
    }

    #[test]
    fn decimal_round_trip_is_idempotent() {
        for text in ["6.4", "-0.3333333333333333", "123.456", "0", "1e-20"] {
            let x = Scalar::from_decimal(text, 256).unwrap();
            let s1 = x.to_decimal_string(40);
            let y = Scalar::from_decimal(&s1, 256).unwrap();
            let s2 = y.to_decimal_string(40);
            assert_eq!(s1, s2, "canonical form of {text} must be stable");
        }
    }

    #[test]
    fn sqrt_two_squared_is_near_two() {
        let two = Scalar::from_i64(2, 256);
        let r = two.sqrt();
        let back = r.square();
        let err = (&back - &two).abs();
        assert!(err < Scalar::pow2(-250, 64), "residual {err:?}");
    }

    #[test]
    fn pow2_is_exact() {
        let eps = Scalar::pow2(-128, 64);
        let one = Scalar::one(64);
        let sum = Scalar::pow2(-128, 64) * Scalar::pow2(128, 64);
        assert_eq!(sum, one);
        assert!(eps.is_positive());
    }

    #[test]
    fn short_literals_keep_full_precision() {
        // 6.4 parsed at 256 bits must not collapse to a 2-digit value.
        let x = Scalar::from_decimal("6.4", 256).unwrap();
        let lo = Scalar::from_decimal("6.399999999", 256).unwrap();
        let hi = Scalar::from_decimal("6.400000001", 256).unwrap();
        assert!(x > lo && x < hi);
        assert_eq!(x.to_decimal_string(40), "6.4");
    }
}
