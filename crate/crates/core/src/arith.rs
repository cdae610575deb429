//! Prime structure of `c` and of the gcd sequence `d_n`.

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Integer, Rational};
use crate::power_product::PowerProduct;

pub const DEFAULT_FACTOR_LIMIT: u64 = 1_000_000_000;

/// Trial-division factorization, `(prime, exponent)` in increasing order.
pub fn factorize(c: u64, limit: u64) -> Result<Vec<(u64, u32)>> {
    if c == 0 {
        return Err(Error::NonPositiveC);
    }
    if c > limit {
        return Err(Error::FactorizationLimit { value: c, limit });
    }
    let mut out = Vec::new();
    let mut rest = c;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(out)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    matches!(factorize(p, u64::MAX).as_deref(), Ok([(q, 1)]) if *q == p)
}

/// Distinct odd primes of `c` plus its 2- and 3-adic exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddPrimeSupport {
    pub c: u64,
    pub primes: Vec<u64>,
    pub two_adic_exponent: u32,
    pub three_adic_exponent: u32,
}

impl OddPrimeSupport {
    pub fn of(c: u64) -> Result<Self> {
        Self::with_limit(c, DEFAULT_FACTOR_LIMIT)
    }

    pub fn with_limit(c: u64, limit: u64) -> Result<Self> {
        let factors = factorize(c, limit)?;
        let exponent_of = |p: u64| factors.iter().find(|(q, _)| *q == p).map_or(0, |(_, e)| *e);
        Ok(Self {
            c,
            primes: factors.iter().map(|(p, _)| *p).filter(|p| p % 2 == 1).collect(),
            two_adic_exponent: exponent_of(2),
            three_adic_exponent: exponent_of(3),
        })
    }

    /// Number of distinct odd primes.
    pub fn j(&self) -> usize {
        self.primes.len()
    }

    pub fn smallest_prime(&self) -> Option<u64> {
        if self.two_adic_exponent > 0 {
            Some(2)
        } else {
            self.primes.first().copied()
        }
    }

    /// `∏ p^(1/(p-1))` over the odd primes.
    pub fn root_product(&self) -> PowerProduct {
        let mut out = PowerProduct::one();
        for &p in &self.primes {
            out = out
                .with(p, Rational::new(Integer::one(), Integer::from(p - 1)))
                .expect("prime base");
        }
        out
    }
}

/// `a_n ≡ c^n (mod p)` for an odd prime `p` dividing `n`.
pub fn multiple_congruence_check(c: u64, p: u64, n: u64, a_n: &Integer) -> Result<bool> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    if !n.is_multiple_of(p) {
        return Err(Error::Precondition(format!("{p} does not divide {n}")));
    }
    let modulus = Integer::from(p);
    let lhs = a_n.mod_floor(&modulus);
    let rhs = Integer::from(c).modpow(&Integer::from(n), &modulus);
    Ok(lhs == rhs)
}

/// Every prime factor of `d` is 2 or one of the odd primes of `c`.
pub fn support_check(d: &Integer, support: &OddPrimeSupport) -> bool {
    let mut rest = d.magnitude().clone();
    if rest.is_zero() {
        return false;
    }
    let strip = |rest: &mut BigUint, p: u64| {
        let p = BigUint::from(p);
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            *rest = q;
        }
    };
    strip(&mut rest, 2);
    for &p in &support.primes {
        strip(&mut rest, p);
    }
    rest.is_one()
}

/// Count of odd multiples of `p^k` up to `2n - 1`, summed over `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationBound {
    pub prime: u64,
    pub n: u64,
    /// Largest `k` with `p^k <= 2n - 1`.
    pub t: u32,
    pub m: u64,
}

/// `m = Σ_{k=1}^{t} floor(((2n - 1) + p^k) / (2 p^k))`, the exact `p`-adic
/// valuation of `(2n - 1)!!`.
pub fn semifactorial_valuation_bound(p: u64, n: u64) -> Result<ValuationBound> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    if n == 0 {
        return Err(Error::UndefinedIndex { index: 0, min: 1 });
    }
    let top = 2 * n - 1;
    let mut t = 0;
    let mut m = 0;
    let mut pk = p;
    while pk <= top {
        t += 1;
        m += (top + pk) / (2 * pk);
        match pk.checked_mul(p) {
            Some(next) => pk = next,
            None => break,
        }
    }
    Ok(ValuationBound { prime: p, n, t, m })
}

/// `2^{n-1} (∏ p^(1/(p-1)))^{n-2} (2n-3)^{j/2}`.
pub fn gcd_upper_bound(n: u64, support: &OddPrimeSupport) -> Result<PowerProduct> {
    if n < 2 {
        return Err(Error::UndefinedIndex { index: n as usize, min: 2 });
    }
    let j = support.j() as i64;
    let bound = PowerProduct::power(2u32, Rational::from_integer(Integer::from(n - 1)))?
        .mul(&support.root_product().pow(&Rational::from_integer(Integer::from(n - 2))))
        .with(2 * n - 3, Rational::new(j.into(), 2.into()))?;
    Ok(bound)
}

/// `d <= gcd_upper_bound(n)`, decided exactly.
pub fn gcd_bound_holds(d: &Integer, n: u64, support: &OddPrimeSupport) -> Result<bool> {
    let bound = gcd_upper_bound(n, support)?;
    let lhs = PowerProduct::from_integer(d)?;
    Ok(crate::power_product::compare_power_products(&lhs, &bound).is_le())
}

/// Product of prime powers.
pub fn reconstruct(factors: &[(u64, u32)]) -> u64 {
    factors.iter().map(|&(p, e)| p.pow(e)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{semifactorial, valuation};
    use crate::sequence::build_table;
    use std::cmp::Ordering;

    #[test]
    fn factorizations() {
        assert_eq!(factorize(1, DEFAULT_FACTOR_LIMIT).unwrap(), vec![]);
        assert_eq!(factorize(12, DEFAULT_FACTOR_LIMIT).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(15, DEFAULT_FACTOR_LIMIT).unwrap(), vec![(3, 1), (5, 1)]);
        let s = OddPrimeSupport::of(15).unwrap();
        assert_eq!((s.j(), s.primes.clone()), (2, vec![3, 5]));
        assert!(matches!(factorize(2_000_000_000, DEFAULT_FACTOR_LIMIT), Err(Error::FactorizationLimit { .. })));
        for c in 1..2000u64 {
            assert_eq!(reconstruct(&factorize(c, DEFAULT_FACTOR_LIMIT).unwrap()), c);
        }
        let s = OddPrimeSupport::of(72).unwrap();
        assert_eq!((s.two_adic_exponent, s.three_adic_exponent, s.smallest_prime()), (3, 2, Some(2)));
    }

    #[test]
    fn congruence_examples() {
        assert!(multiple_congruence_check(2, 3, 3, &Integer::from(14)).unwrap());
        assert!(multiple_congruence_check(1, 5, 5, &Integer::from(26)).unwrap());
        assert!(multiple_congruence_check(3, 3, 3, &Integer::from(36)).unwrap());
        assert!(!multiple_congruence_check(3, 3, 3, &Integer::from(37)).unwrap());
        assert!(multiple_congruence_check(3, 2, 4, &Integer::from(1)).is_err());
        assert!(multiple_congruence_check(3, 9, 9, &Integer::from(1)).is_err());
        assert!(multiple_congruence_check(3, 5, 7, &Integer::from(1)).is_err());
    }

    #[test]
    fn support_examples() {
        let s3 = OddPrimeSupport::of(3).unwrap();
        assert!(support_check(&Integer::from(6), &s3));
        assert!(support_check(&Integer::from(1), &s3));
        assert!(!support_check(&Integer::from(10), &s3));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(semifactorial_valuation_bound(3, 8).unwrap(), ValuationBound { prime: 3, n: 8, t: 2, m: 4 });
        assert_eq!(semifactorial_valuation_bound(5, 3).unwrap(), ValuationBound { prime: 5, n: 3, t: 1, m: 1 });
        assert_eq!(semifactorial_valuation_bound(7, 1).unwrap(), ValuationBound { prime: 7, n: 1, t: 0, m: 0 });
        assert!(semifactorial_valuation_bound(9, 3).is_err());
    }

    #[test]
    fn valuation_is_exact_against_direct_factorization() {
        for p in (3..50u64).filter(|&p| is_prime(p)) {
            for n in 1..=200u64 {
                let direct = valuation(&semifactorial(n), p);
                assert_eq!(semifactorial_valuation_bound(p, n).unwrap().m, direct, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn gcd_bound_examples() {
        let s1 = OddPrimeSupport::of(1).unwrap();
        let s8 = OddPrimeSupport::of(8).unwrap();
        for n in 2..20u64 {
            let two = PowerProduct::power(2u32, Rational::from_integer(Integer::from(n - 1))).unwrap();
            assert_eq!(gcd_upper_bound(n, &s1).unwrap(), two);
            assert_eq!(gcd_upper_bound(n, &s8).unwrap(), two);
        }
        let s3 = OddPrimeSupport::of(3).unwrap();
        // 2^3 * (3^(1/2))^2 * 5^(1/2) = 24 sqrt(5)
        let expected = PowerProduct::from_factors([
            (BigUint::from(24u32), Rational::one()),
            (BigUint::from(5u32), Rational::new(1.into(), 2.into())),
        ])
        .unwrap();
        let bound = gcd_upper_bound(4, &s3).unwrap();
        assert_eq!(crate::power_product::compare_power_products(&bound, &expected), Ordering::Equal);
        assert!(gcd_bound_holds(&Integer::from(6), 4, &s3).unwrap());
        assert_eq!(gcd_upper_bound(2, &s3).unwrap(), PowerProduct::integer(2u32).unwrap());
        let t = build_table(3, 2).unwrap();
        assert!(gcd_bound_holds(t.d(2).unwrap(), 2, &s3).unwrap());
    }
}
