//! Exact values of the form `b1^e1 * b2^e2 * ...` with integer bases and
//! rational exponents.
//!
//! Square roots, `p^(1/(p-1))` and friends are never approximated for a
//! verdict. Two products are ordered by raising their quotient to the least
//! common multiple `L` of the exponent denominators, which turns the question
//! into one integer comparison. A floating-point estimate of the logarithm is
//! tried first and trusted only when it separates the two sides by a wide
//! margin.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::exact::{Integer, Rational};

/// A positive real `∏ base^exponent`. Bases are distinct and at least 2,
/// exponents are nonzero; the empty product is `1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PowerProduct {
    factors: BTreeMap<BigUint, Rational>,
}

impl PowerProduct {
    pub fn one() -> Self {
        Self::default()
    }

    /// Collects `(base, exponent)` pairs, merging equal bases. Bases equal
    /// to one are dropped; a zero base is rejected.
    pub fn from_factors<I, B>(factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (B, Rational)>,
        B: Into<BigUint>,
    {
        let mut out = Self::one();
        for (base, exp) in factors {
            out.push(base.into(), exp)?;
        }
        Ok(out)
    }

    /// `base^exponent`.
    pub fn power(base: impl Into<BigUint>, exponent: Rational) -> Result<Self> {
        Self::from_factors([(base.into(), exponent)])
    }

    /// The positive integer `value` as a one-factor product.
    pub fn integer(value: impl Into<BigUint>) -> Result<Self> {
        Self::power(value, Rational::one())
    }

    /// `num / den` for positive integers.
    pub fn fraction(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Result<Self> {
        Self::from_factors([(num.into(), Rational::one()), (den.into(), -Rational::one())])
    }

    /// Positive rational as a product.
    pub fn from_rational(value: &Rational) -> Result<Self> {
        if !value.is_positive() {
            return Err(Error::InvalidPowerProduct(format!("{value} is not positive")));
        }
        let num = value.numer().magnitude().clone();
        let den = value.denom().magnitude().clone();
        Self::fraction(num, den)
    }

    /// Positive integer from a signed `Integer`.
    pub fn from_integer(value: &Integer) -> Result<Self> {
        if !value.is_positive() {
            return Err(Error::InvalidPowerProduct(format!("{value} is not positive")));
        }
        Self::integer(value.magnitude().clone())
    }

    fn push(&mut self, base: BigUint, exp: Rational) -> Result<()> {
        if base.is_zero() {
            return Err(Error::InvalidPowerProduct("zero base".into()));
        }
        if base.is_one() || exp.is_zero() {
            return Ok(());
        }
        let cancelled = {
            let entry = self.factors.entry(base.clone()).or_insert_with(Rational::zero);
            *entry += exp;
            entry.is_zero()
        };
        if cancelled {
            self.factors.remove(&base);
        }
        Ok(())
    }

    /// Multiplies in `base^exponent`.
    pub fn with(mut self, base: impl Into<BigUint>, exponent: Rational) -> Result<Self> {
        self.push(base.into(), exponent)?;
        Ok(self)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.factors.iter()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, e) in &other.factors {
            out.push(b.clone(), e.clone()).expect("bases are valid");
        }
        out
    }

    pub fn recip(&self) -> Self {
        Self {
            factors: self.factors.iter().map(|(b, e)| (b.clone(), -e)).collect(),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    pub fn pow(&self, exponent: &Rational) -> Self {
        if exponent.is_zero() {
            return Self::one();
        }
        Self {
            factors: self.factors.iter().map(|(b, e)| (b.clone(), e * exponent)).collect(),
        }
    }

    /// Least common multiple of the exponent denominators.
    pub fn clearing_power(&self) -> BigUint {
        self.factors
            .values()
            .fold(BigUint::one(), |l, e| l.lcm(e.denom().magnitude()))
    }

    /// `(num, den)` with `self^L = num / den` for `L = clearing_power()`.
    pub fn cleared(&self) -> (BigUint, BigUint, u32) {
        let l = self.clearing_power();
        let l_int = Integer::from(l.clone());
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (b, e) in &self.factors {
            let k = (e * &l_int).to_integer();
            let k_abs = k.magnitude().to_u32().expect("cleared exponent fits in u32");
            let term = num_traits::pow(b.clone(), k_abs as usize);
            if k.is_positive() {
                num *= term;
            } else {
                den *= term;
            }
        }
        (num, den, l.to_u32().expect("clearing power fits in u32"))
    }

    /// Floating estimate of `log2(self)`.
    pub fn log2_estimate(&self) -> f64 {
        self.factors
            .iter()
            .map(|(b, e)| e.to_f64().unwrap_or(f64::NAN) * log2_biguint(b))
            .sum()
    }

    /// Floating approximation of the value, for display.
    pub fn approx(&self) -> f64 {
        self.log2_estimate().exp2()
    }

    /// Exact comparison against `1`, by exponent clearing alone.
    pub fn cmp_one_exact(&self) -> Ordering {
        let (num, den, _) = self.cleared();
        num.cmp(&den)
    }

    /// Comparison against `1`: floating separation first, exact on overlap.
    pub fn cmp_one(&self) -> Ordering {
        if self.is_one() {
            return Ordering::Equal;
        }
        let (estimate, scale) = self.factors.iter().fold((0.0f64, 0.0f64), |(s, m), (b, e)| {
            let t = e.to_f64().unwrap_or(f64::NAN) * log2_biguint(b);
            (s + t, m + t.abs())
        });
        let margin = 1e-9 * (scale + 1.0);
        if estimate.is_finite() && estimate.abs() > margin {
            if estimate > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else {
            self.cmp_one_exact()
        }
    }

    /// `floor(self * 10^shift)` computed exactly.
    fn scaled_floor(&self, shift: i64) -> BigUint {
        let (mut num, mut den, l) = self.cleared();
        let ten_pow = num_traits::pow(BigUint::from(10u32), (shift.unsigned_abs() * l as u64) as usize);
        if shift >= 0 {
            num *= ten_pow;
        } else {
            den *= ten_pow;
        }
        // floor((N/M)^(1/L)) == floor(floor(N/M)^(1/L))
        (num / den).nth_root(l)
    }

    /// Decimal rendering truncated to `digits` significant digits, e.g.
    /// `3.08494841744254291186162088932e0`. Display only; verdicts never
    /// consult it.
    pub fn decimal_hint(&self, digits: usize) -> String {
        let digits = digits.max(1) as i64;
        let estimate = (self.log2_estimate() * std::f64::consts::LOG10_2).floor() as i64;
        let mut shift = digits - 1 - estimate;
        let mut value = self.scaled_floor(shift);
        // the floating estimate may be off by one decade near powers of ten
        loop {
            let len = value.to_string().len() as i64;
            if len > digits {
                shift -= len - digits;
            } else if len < digits && !value.is_zero() {
                shift += digits - len;
            } else if value.is_zero() {
                shift += digits;
            } else {
                break;
            }
            value = self.scaled_floor(shift);
        }
        let text = value.to_string();
        let exponent = text.len() as i64 - 1 - shift;
        let (head, tail) = text.split_at(1);
        if tail.is_empty() {
            format!("{head}e{exponent}")
        } else {
            format!("{head}.{tail}e{exponent}")
        }
    }
}

fn log2_biguint(b: &BigUint) -> f64 {
    let bits = b.bits();
    if bits <= 64 {
        return b.to_u64().expect("fits").to_f64().unwrap().log2();
    }
    let shift = bits - 64;
    let top = (b >> shift).to_u64().expect("64 bits");
    (top as f64).log2() + shift as f64
}

/// Exact ordering of two positive products. Tries a floating-point
/// separation first and falls back to exponent clearing on overlap.
pub fn compare_power_products(lhs: &PowerProduct, rhs: &PowerProduct) -> Ordering {
    lhs.div(rhs).cmp_one()
}

/// Same verdict as [`compare_power_products`] but always by exponent
/// clearing.
pub fn compare_power_products_exact(lhs: &PowerProduct, rhs: &PowerProduct) -> Ordering {
    lhs.div(rhs).cmp_one_exact()
}

impl fmt::Display for PowerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (b, e) in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if e.is_one() {
                write!(f, "{b}")?;
            } else if e.is_integer() {
                write!(f, "{b}^{e}")?;
            } else {
                write!(f, "{b}^({e})")?;
            }
        }
        Ok(())
    }
}

impl Serialize for PowerProduct {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.factors.len()))?;
        for (b, e) in &self.factors {
            seq.serialize_element(&[b.to_string(), e.to_string()])?;
        }
        seq.end()
    }
}
