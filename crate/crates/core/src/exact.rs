//! Arbitrary-precision integers and rationals.
//!
//! Thin layer over `num-bigint` / `num-rational`: every value here is exact,
//! rationals are always kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Builds a normalized fraction `num / den`.
pub fn make_rational(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

pub fn factorial(n: u64) -> Integer {
    (2..=n).fold(Integer::one(), |acc, k| acc * k)
}

/// `(2s - 1)!!`, the product of the odd numbers below `2s`; `1` for `s = 0`.
pub fn semifactorial(s: u64) -> Integer {
    (1..=s).fold(Integer::one(), |acc, k| acc * (2 * k - 1))
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // exact at every step: acc is C(n, i) before this line
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Positive greatest common divisor.
pub fn gcd(a: &Integer, b: &Integer) -> Result<Integer> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    Ok(a.gcd(b))
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(value: &Integer, p: u64) -> u64 {
    assert!(p >= 2, "valuation base must be at least 2");
    assert!(!value.is_zero(), "valuation of zero");
    let p = Integer::from(p);
    let mut v = value.abs();
    let mut count = 0;
    loop {
        let (q, r) = v.div_rem(&p);
        if !r.is_zero() {
            return count;
        }
        v = q;
        count += 1;
    }
}

/// Canonical text form: `p/q`, or just `p` when the denominator is one.
pub fn fraction_string(x: &Rational) -> String {
    x.to_string()
}

/// Parses `p`, `p/q` or a plain decimal such as `1.5`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if let Some((num, den)) = text.split_once('/') {
        let num: Integer = num.trim().parse().map_err(|_| bad())?;
        let den: Integer = den.trim().parse().map_err(|_| bad())?;
        return make_rational(num, den);
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: Integer = if whole.is_empty() || whole == "-" {
            Integer::zero()
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let scale = num_traits::pow(Integer::from(10), frac.len());
        let frac: Integer = frac.parse().map_err(|_| bad())?;
        let mut num = whole.abs() * &scale + frac;
        if negative {
            num = -num;
        }
        return make_rational(num, scale);
    }
    let whole: Integer = text.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(whole))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn make_rational_normalizes() {
        let r = make_rational(int(10), int(4)).unwrap();
        assert_eq!((r.numer().clone(), r.denom().clone()), (int(5), int(2)));
        let r = make_rational(int(655), int(191)).unwrap();
        assert_eq!(fraction_string(&r), "655/191");
        let r = make_rational(int(-3), int(-6)).unwrap();
        assert_eq!(fraction_string(&r), "1/2");
        assert_eq!(make_rational(int(1), int(0)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        // product oracle 1*2*...*29, evaluated independently
        let oracle: Integer = "8841761993739701954543616000000".parse().unwrap();
        assert_eq!(factorial(29), oracle);
    }

    #[test]
    fn semifactorial_values() {
        assert_eq!(semifactorial(0), int(1));
        assert_eq!(semifactorial(3), int(15));
        assert_eq!(semifactorial(8), int(15 * 13 * 11 * 9 * 7 * 5 * 3));
        assert_eq!(semifactorial(8), int(2027025));
    }

    #[test]
    fn gcd_values() {
        assert_eq!(gcd(&int(36), &int(10)).unwrap(), int(2));
        assert_eq!(gcd(&int(7), &int(1)).unwrap(), int(1));
        assert_eq!(gcd(&int(138), &int(36)).unwrap(), int(6));
        assert_eq!(gcd(&int(0), &int(-4)).unwrap(), int(4));
        assert_eq!(gcd(&int(0), &int(0)), Err(Error::GcdOfZeros));
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![int(1)];
        for n in 1..=40u64 {
            let mut next = vec![int(1)];
            for k in 1..n as usize {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(int(1));
            for (k, v) in next.iter().enumerate() {
                assert_eq!(&binomial(n, k as u64), v, "C({n},{k})");
            }
            row = next;
        }
        assert_eq!(binomial(3, 5), int(0));
    }

    #[test]
    fn valuation_counts_factors() {
        assert_eq!(valuation(&int(2027025), 3), 4);
        assert_eq!(valuation(&int(-48), 2), 4);
        assert_eq!(valuation(&int(7), 2), 0);
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(fraction_string(&parse_rational("3/6").unwrap()), "1/2");
        assert_eq!(fraction_string(&parse_rational("2").unwrap()), "2");
        assert_eq!(fraction_string(&parse_rational("1.25").unwrap()), "5/4");
        assert_eq!(fraction_string(&parse_rational("-0.5").unwrap()), "-1/2");
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    proptest! {
        #[test]
        fn scaling_does_not_change_value(a in -10_000i64..10_000, b in 1i64..10_000, k in -500i64..500) {
            prop_assume!(k != 0);
            let lhs = make_rational(int(a * k), int(b * k)).unwrap();
            let rhs = make_rational(int(a), int(b)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn factorial_steps(n in 0u64..120) {
            prop_assert_eq!(factorial(n + 1), factorial(n) * (n + 1));
            prop_assert_eq!(semifactorial(n + 1), semifactorial(n) * (2 * n + 1));
        }
    }
}
