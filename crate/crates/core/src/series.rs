//! Truncated formal power series over the rationals.
//!
//! The exponential generating function `F(x) = Σ a_n x^n / n!` of the
//! companion sequence is `exp(cx + x^2/2)`. It solves
//! `F'' = (c + x) F' + F` with `F(0) = 1`, `F'(0) = c`, and satisfies
//! `F(x) F(-x) = exp(x^2)`.

use std::ops::Index;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, Integer, Rational};

/// Coefficients `0..=order`; coefficient `k` multiplies `x^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients
    /// are kept.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(
            coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `F(-x)`.
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(Integer::from(k)))
                .collect(),
        }
    }
}

impl Index<usize> for TruncatedSeries {
    type Output = Rational;

    fn index(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }
}

/// Cauchy product, truncated to the common order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    let order = a.order();
    let coeffs = (0..=order)
        .map(|k| {
            (0..=k)
                .filter(|&i| !a[i].is_zero() && !b[k - i].is_zero())
                .fold(Rational::zero(), |acc, i| acc + &a[i] * &b[k - i])
        })
        .collect();
    Ok(TruncatedSeries { coeffs })
}

/// `exp(g)` for `g(0) = 0`, from `(exp g)' = g' exp g`:
/// `(k + 1) h_{k+1} = Σ_{i=0}^{k} (i + 1) g_{i+1} h_{k-i}`.
pub fn series_exp(g: &TruncatedSeries) -> Result<TruncatedSeries> {
    if !g[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let order = g.order();
    // weighted[i] = (i + 1) g_{i+1}
    let weighted: Vec<Rational> = (0..order)
        .map(|i| &g[i + 1] * Rational::from_integer(Integer::from(i + 1)))
        .collect();
    let mut h = Vec::with_capacity(order + 1);
    h.push(Rational::one());
    for k in 0..order {
        let sum = (0..=k)
            .filter(|&i| !weighted[i].is_zero())
            .fold(Rational::zero(), |acc, i| acc + &weighted[i] * &h[k - i]);
        h.push(sum / Rational::from_integer(Integer::from(k + 1)));
    }
    Ok(TruncatedSeries { coeffs: h })
}

/// `exp(cx + x^2/2)` to the given order.
pub fn egf(c: u64, order: usize) -> TruncatedSeries {
    let exponent = TruncatedSeries::new(
        vec![
            Rational::zero(),
            Rational::from_integer(Integer::from(c)),
            Rational::new(1.into(), 2.into()),
        ],
        order,
    );
    series_exp(&exponent).expect("constant term is zero")
}

/// `F'' - (c + x) F' - F`, truncated to `order - 2`. Fails when the initial
/// conditions `F(0) = 1`, `F'(0) = c` do not hold.
pub fn cauchy_residual(f: &TruncatedSeries, c: u64) -> Result<TruncatedSeries> {
    if f.order() < 2 {
        return Err(Error::OrderTooSmall { order: f.order(), min: 2 });
    }
    let ci = Rational::from_integer(Integer::from(c));
    if !f[0].is_one() {
        return Err(Error::InitialCondition(format!("F(0) = {}, expected 1", f[0])));
    }
    if f[1] != ci {
        return Err(Error::InitialCondition(format!("F'(0) = {}, expected {c}", f[1])));
    }
    let out_order = f.order() - 2;
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let coeffs = (0..=out_order)
        .map(|k| {
            let shifted = if k == 0 {
                Rational::zero()
            } else {
                d1[k - 1].clone()
            };
            &d2[k] - &ci * &d1[k] - shifted - &f[k]
        })
        .collect();
    Ok(TruncatedSeries::new(coeffs, out_order))
}

/// `a_n = n! [x^n] F`.
pub fn coefficients_to_a(f: &TruncatedSeries) -> Result<Vec<Integer>> {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(n, coeff)| {
            let scaled = coeff * Rational::from_integer(factorial(n as u64));
            if scaled.is_integer() {
                Ok(scaled.to_integer())
            } else {
                Err(Error::NonIntegralCoefficient { index: n })
            }
        })
        .collect()
}

/// `Σ_{m+r=2n} (-1)^r C(2n, m) a_m a_r`, which equals `2^n (2n-1)!!`.
pub fn alternating_convolution(a: &[Integer], n: usize) -> Result<Integer> {
    if n == 0 {
        return Err(Error::UndefinedIndex { index: 0, min: 1 });
    }
    let top = 2 * n;
    if a.len() <= top {
        return Err(Error::InsufficientTerms { needed: top, have: a.len().saturating_sub(1) });
    }
    let mut total = Integer::zero();
    for m in 0..=top {
        let r = top - m;
        let term = binomial(top as u64, m as u64) * &a[m] * &a[r];
        if r % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    Ok(total)
}

/// `exp(x^2)` truncated: coefficient of `x^{2k}` is `1/k!`.
pub fn exp_of_square(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|k| {
            if k % 2 == 0 {
                Rational::new(Integer::one(), factorial((k / 2) as u64))
            } else {
                Rational::zero()
            }
        })
        .collect();
    TruncatedSeries { coeffs }
}

/// `F(x) F(-x)`, which should equal [`exp_of_square`].
pub fn reflected_product(f: &TruncatedSeries) -> TruncatedSeries {
    series_mul(f, &f.reflect()).expect("same order")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{make_rational, semifactorial};
    use crate::sequence::build_table;

    fn q(n: i64, d: i64) -> Rational {
        make_rational(n.into(), d.into()).unwrap()
    }

    /// Taylor oracle for exp(x): 1/k!.
    fn exp_x(order: usize) -> TruncatedSeries {
        TruncatedSeries::new(
            (0..=order).map(|k| Rational::new(1.into(), factorial(k as u64))).collect(),
            order,
        )
    }

    #[test]
    fn multiplication() {
        let a = TruncatedSeries::from_integers(&[1, 1], 2);
        let b = TruncatedSeries::from_integers(&[1, -1], 2);
        assert_eq!(series_mul(&a, &b).unwrap(), TruncatedSeries::from_integers(&[1, 0, -1], 2));
        let e = exp_x(10);
        assert_eq!(series_mul(&e, &e.reflect()).unwrap(), TruncatedSeries::one(10));
        let f = egf(1, 6);
        let expected = TruncatedSeries::new(vec![q(1, 1), q(0, 1), q(1, 1), q(0, 1), q(1, 2), q(0, 1), q(1, 6)], 6);
        assert_eq!(reflected_product(&f), expected);
        assert_eq!(
            series_mul(&TruncatedSeries::one(2), &TruncatedSeries::one(3)),
            Err(Error::OrderMismatch(2, 3))
        );
    }

    #[test]
    fn exponential() {
        assert_eq!(series_exp(&TruncatedSeries::zero(5)).unwrap(), TruncatedSeries::one(5));
        assert_eq!(
            egf(1, 4),
            TruncatedSeries::new(vec![q(1, 1), q(1, 1), q(1, 1), q(2, 3), q(5, 12)], 4)
        );
        let x = TruncatedSeries::from_integers(&[0, 1], 3);
        assert_eq!(
            series_exp(&x).unwrap(),
            TruncatedSeries::new(vec![q(1, 1), q(1, 1), q(1, 2), q(1, 6)], 3)
        );
        assert_eq!(
            series_exp(&TruncatedSeries::one(3)),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn cauchy_problem() {
        assert!(cauchy_residual(&egf(1, 10), 1).unwrap().is_zero());
        let r = cauchy_residual(&egf(3, 20), 3).unwrap();
        assert_eq!(r.order(), 18);
        assert!(r.is_zero());
        // e^x: e^x - (1 + x) e^x - e^x = -(1 + x) e^x
        let r = cauchy_residual(&exp_x(8), 1).unwrap();
        assert!(!r.is_zero());
        let expected: Vec<Rational> = (0..=6u64)
            .map(|k| {
                let own = Rational::new(1.into(), factorial(k));
                let shifted = if k == 0 { q(0, 1) } else { Rational::new(1.into(), factorial(k - 1)) };
                -(own + shifted)
            })
            .collect();
        assert_eq!(r, TruncatedSeries::new(expected, 6));
        assert!(matches!(
            cauchy_residual(&egf(2, 1), 2),
            Err(Error::OrderTooSmall { .. })
        ));
        assert!(matches!(cauchy_residual(&egf(2, 5), 3), Err(Error::InitialCondition(_))));
    }

    #[test]
    fn coefficients_recover_a() {
        let to_i64 = |v: Vec<Integer>| v.iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(to_i64(coefficients_to_a(&egf(1, 4)).unwrap()), [1, 1, 2, 4, 10]);
        assert_eq!(to_i64(coefficients_to_a(&egf(3, 2)).unwrap()), [1, 3, 10]);
        assert_eq!(to_i64(coefficients_to_a(&egf(7, 0)).unwrap()), [1]);
        let bad = TruncatedSeries::new(vec![q(1, 1), q(1, 3)], 1);
        assert_eq!(coefficients_to_a(&bad), Err(Error::NonIntegralCoefficient { index: 1 }));
    }

    #[test]
    fn convolution_values() {
        for c in 1..6 {
            let a = build_table(c, 2).unwrap().a_values();
            assert_eq!(alternating_convolution(&a, 1).unwrap(), Integer::from(2));
        }
        let a = build_table(1, 4).unwrap().a_values();
        assert_eq!(alternating_convolution(&a, 2).unwrap(), Integer::from(12));
        let a = build_table(2, 6).unwrap().a_values();
        // direct sum oracle over m + r = 6 with a = [1, 2, 5, 14, 43, 142, 499]
        let av = [1i64, 2, 5, 14, 43, 142, 499];
        let c6 = [1i64, 6, 15, 20, 15, 6, 1];
        let oracle: i64 = (0..=6).map(|m| if (6 - m) % 2 == 1 { -1 } else { 1 } * c6[m] * av[m] * av[6 - m]).sum();
        assert_eq!(oracle, 120);
        assert_eq!(alternating_convolution(&a, 3).unwrap(), Integer::from(oracle));
        assert_eq!(Integer::from(8) * semifactorial(3), Integer::from(120));
        assert!(matches!(alternating_convolution(&a, 4), Err(Error::InsufficientTerms { .. })));
    }

    #[test]
    fn product_identity_reaches_exp_of_square() {
        for c in 1..5 {
            assert_eq!(reflected_product(&egf(c, 30)), exp_of_square(30));
        }
    }
}
