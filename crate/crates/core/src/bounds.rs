//! Inequalities that pin the orbit away from the integers.
//!
//! Two independent lines of evidence live here. The first is analytic:
//! `x_n` sits strictly between the fixed points `y_{n-1}` and `y_n` of
//! `x -> c + n/x`, and the resulting window for `(2x_n - c)^2` holds no
//! square of the right parity. The second is arithmetic: the reduced
//! denominator `D_n` is at least `a_{n-1} / d_n`, which is bounded below by
//! one of four closed forms. Once such a bound reaches a threshold and its
//! step ratio is at least one, every later index is covered.
//!
//! Every verdict is an exact rational or [`PowerProduct`] comparison.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::arith::OddPrimeSupport;
use crate::error::{Error, Result};
use crate::exact::{factorial, Integer, Rational};
use crate::power_product::{compare_power_products, PowerProduct};
use crate::sequence::SequenceTable;

pub const DEFAULT_SCAN_LIMIT: usize = 1_000_000;
pub const HINT_DIGITS: usize = 30;

/// Closed-form lower bounds for `a_{n-1} / d_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundVariant {
    /// `sqrt((n-1)!) / (2^{n-1} P^{n-2} (2n-3)^{j/2})`, `P = ∏ p^(1/(p-1))`.
    Factorial,
    /// `(c/2)^{n/2} / (2n-3)^{j/2}`, for even `c`.
    EvenC,
    /// `c^{3n/4 - 1/2} / (2^{n-1} (2n-3)^{j/2})`, for `c` free of 2 and
    /// either free of 3 or divisible by 9.
    ThreeQuarters,
    /// `c^{3n/5 - 1/5} / (2^{n-1} (2n-3)^{j/2})`, for odd `c` with exactly
    /// one factor 3 and another odd prime.
    ThreeFifths,
}

impl BoundVariant {
    pub const ALL: [BoundVariant; 4] = [
        BoundVariant::Factorial,
        BoundVariant::EvenC,
        BoundVariant::ThreeQuarters,
        BoundVariant::ThreeFifths,
    ];

    /// Case split on the smallest prime of `c` and its 3-adic exponent.
    pub fn auto(support: &OddPrimeSupport) -> Self {
        match support.smallest_prime() {
            None => BoundVariant::Factorial,
            Some(2) => BoundVariant::EvenC,
            Some(3) if support.three_adic_exponent >= 2 => BoundVariant::ThreeQuarters,
            Some(3) if support.j() > 1 => BoundVariant::ThreeFifths,
            Some(3) => BoundVariant::Factorial,
            Some(_) => BoundVariant::ThreeQuarters,
        }
    }

    /// Whether the closed form is a valid lower bound for this `c`. The
    /// factorial form holds for every `c`; the others only in their case.
    pub fn applies_to(self, support: &OddPrimeSupport) -> bool {
        self == BoundVariant::Factorial || self == Self::auto(support)
    }

    pub fn label(self) -> &'static str {
        match self {
            BoundVariant::Factorial => "E",
            BoundVariant::EvenC => "E2",
            BoundVariant::ThreeQuarters => "E3",
            BoundVariant::ThreeFifths => "E4",
        }
    }
}

impl fmt::Display for BoundVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BoundVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown bound variant {s:?}")))
    }
}

impl Serialize for BoundVariant {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

fn int(v: u64) -> Integer {
    Integer::from(v)
}

fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `y_{n-1} < x_n < y_n`, checked as `4(n-1) + c^2 < (2x_n - c)^2 < 4n + c^2`
/// on the numerator and denominator of `x_n`.
pub fn fixed_point_interval_check(c: u64, n: u64, x_n: &Rational) -> bool {
    if n == 0 {
        return false;
    }
    let (p, q) = (x_n.numer(), x_n.denom());
    let t = p * int(2) - q * int(c);
    // squaring is order-preserving only on the positive side
    if !t.is_positive() {
        return false;
    }
    let t_sq = &t * &t;
    let q_sq = q * q;
    let c_sq = int(c) * int(c);
    let lower = (int(4 * (n - 1)) + &c_sq) * &q_sq;
    let upper = (int(4 * n) + &c_sq) * &q_sq;
    lower < t_sq && t_sq < upper
}

/// The open window `(4(n-1) + c^2, 4n + c^2)` and whether it holds a square
/// `t^2` with `t ≡ c (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowEvidence {
    pub n: u64,
    pub c: u64,
    pub lower: u128,
    pub upper: u128,
    pub excluded: bool,
}

/// Brackets the window by integer square roots; no congruence reasoning.
pub fn window_excludes_integer(c: u64, n: u64) -> Result<WindowEvidence> {
    if n == 0 {
        return Err(Error::UndefinedIndex { index: 0, min: 1 });
    }
    let c_sq = (c as u128) * (c as u128);
    let lower = 4 * (n as u128 - 1) + c_sq;
    let upper = 4 * n as u128 + c_sq;
    let mut t = lower.isqrt() + 1;
    let mut excluded = true;
    while t * t < upper {
        if t % 2 == (c % 2) as u128 {
            excluded = false;
            break;
        }
        t += 1;
    }
    Ok(WindowEvidence { n, c, lower, upper, excluded })
}

/// `a_n >= sqrt(n!)`, as `a_n^2 >= n!`.
pub fn factorial_root_check(a_n: &Integer, n: u64) -> bool {
    a_n * a_n >= factorial(n)
}

/// The closed-form value of `variant` at `n`.
pub fn bound_value(n: u64, support: &OddPrimeSupport, variant: BoundVariant) -> Result<PowerProduct> {
    if n < 2 {
        return Err(Error::UndefinedIndex { index: n as usize, min: 2 });
    }
    let c = support.c;
    let j = support.j() as i64;
    let n_i = n as i64;
    let odd_part = PowerProduct::power(2 * n - 3, ratio(-j, 2))?;
    let value = match variant {
        BoundVariant::Factorial => {
            let root = factorial(n - 1).to_biguint().expect("positive");
            PowerProduct::power(root, ratio(1, 2))?
                .with(2u32, ratio(1 - n_i, 1))?
                .mul(&support.root_product().pow(&ratio(2 - n_i, 1)))
        }
        BoundVariant::EvenC => PowerProduct::power(c, ratio(n_i, 2))?.with(2u32, ratio(-n_i, 2))?,
        BoundVariant::ThreeQuarters => {
            PowerProduct::power(c, ratio(3 * n_i - 2, 4))?.with(2u32, ratio(1 - n_i, 1))?
        }
        BoundVariant::ThreeFifths => {
            PowerProduct::power(c, ratio(3 * n_i - 1, 5))?.with(2u32, ratio(1 - n_i, 1))?
        }
    };
    Ok(value.mul(&odd_part))
}

/// Closed form of `bound(n + 1) / bound(n)`.
pub fn bound_ratio(n: u64, support: &OddPrimeSupport, variant: BoundVariant) -> Result<PowerProduct> {
    if n < 2 {
        return Err(Error::UndefinedIndex { index: n as usize, min: 2 });
    }
    let c = support.c;
    let j = support.j() as i64;
    let odd_step = PowerProduct::from_factors([
        (int(2 * n - 3).to_biguint().unwrap(), ratio(j, 2)),
        (int(2 * n - 1).to_biguint().unwrap(), ratio(-j, 2)),
    ])?;
    let head = match variant {
        BoundVariant::Factorial => PowerProduct::power(n, ratio(1, 2))?
            .with(2u32, ratio(-1, 1))?
            .mul(&support.root_product().recip()),
        BoundVariant::EvenC => PowerProduct::power(c, ratio(1, 2))?.with(2u32, ratio(-1, 2))?,
        BoundVariant::ThreeQuarters => PowerProduct::power(c, ratio(3, 4))?.with(2u32, ratio(-1, 1))?,
        BoundVariant::ThreeFifths => PowerProduct::power(c, ratio(3, 5))?.with(2u32, ratio(-1, 1))?,
    };
    Ok(head.mul(&odd_step))
}

/// Published numeric claims attached to specific bound rows.
pub fn claimed_value(c: u64, n: u64, variant: BoundVariant) -> Option<&'static str> {
    match (c, n, variant) {
        (1, 10, BoundVariant::Factorial) => Some("E(n) >= 2 for all n >= 10"),
        (3, 30, BoundVariant::Factorial) => Some("E(30)^2 >= 0.423"),
        (3, 31, BoundVariant::Factorial) => Some("E(31) > 1"),
        _ => None,
    }
}

/// One evaluated lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub n: u64,
    pub variant: BoundVariant,
    pub value: PowerProduct,
    #[serde(serialize_with = "serialize_display")]
    pub threshold: Rational,
    pub verdict_ge_threshold: bool,
    pub decimal_hint: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claimed: Option<String>,
}

pub(crate) fn serialize_display<T: fmt::Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

fn ge_threshold(value: &PowerProduct, threshold: &Rational) -> Result<bool> {
    let threshold = PowerProduct::from_rational(threshold)?;
    Ok(compare_power_products(value, &threshold) != Ordering::Less)
}

/// Evaluates the chosen (or case-selected) bound at `n` and decides
/// `bound >= threshold` exactly.
pub fn denominator_lower_bound(
    n: u64,
    support: &OddPrimeSupport,
    variant: Option<BoundVariant>,
    threshold: &Rational,
) -> Result<BoundRow> {
    let variant = variant.unwrap_or_else(|| BoundVariant::auto(support));
    let value = bound_value(n, support, variant)?;
    let verdict = ge_threshold(&value, threshold)?;
    Ok(BoundRow {
        n,
        variant,
        decimal_hint: value.decimal_hint(HINT_DIGITS),
        value,
        threshold: threshold.clone(),
        verdict_ge_threshold: verdict,
        claimed: claimed_value(support.c, n, variant).map(str::to_owned),
    })
}

/// `a_{n-1} / d_n >= bound(n)`, with `D_n` read from the table.
pub fn chain_holds(table: &SequenceTable, n: usize, support: &OddPrimeSupport, variant: BoundVariant) -> Result<bool> {
    let row = table.row(n)?;
    let reduced = row
        .reduced_den
        .as_ref()
        .ok_or(Error::UndefinedIndex { index: n, min: 1 })?;
    let quotient = Rational::new(table.a(n - 1)?.clone(), table.d(n)?.clone());
    if quotient != Rational::from_integer(reduced.clone()) {
        return Ok(false);
    }
    let lhs = PowerProduct::from_rational(&quotient)?;
    let bound = bound_value(n as u64, support, variant)?;
    Ok(compare_power_products(&lhs, &bound) != Ordering::Less)
}

/// Small integer polynomial, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Poly(pub Vec<i64>);

impl Poly {
    fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (k, b) in other.0.iter().enumerate() {
                out[i + k] += a * b;
            }
        }
        Poly(out)
    }

    fn sub(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let at = |p: &Poly, i: usize| p.0.get(i).copied().unwrap_or(0);
        let mut out: Vec<i64> = (0..len).map(|i| at(self, i) - at(other, i)).collect();
        while out.len() > 1 && out.last() == Some(&0) {
            out.pop();
        }
        Poly(out)
    }

    /// Nonnegative coefficients with a positive constant term: positive for
    /// every `n >= 0`.
    pub fn dominates_zero(&self) -> bool {
        self.0.iter().all(|&a| a >= 0) && self.0.first().is_some_and(|&a| a > 0)
    }
}

/// Why the step ratio never decreases once `n >= 2`.
///
/// Each ratio is a constant times `n^alpha` times `((2n-3)/(2n-1))^{j/2}`.
/// The first factor grows because `alpha >= 0` and `(n+1) - n > 0`; the
/// second because `(2n-1)^2 - (2n-3)(2n+1)` is a positive polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TailCertificate {
    #[serde(serialize_with = "serialize_display")]
    pub n_exponent: Rational,
    pub n_step_gap: Poly,
    pub odd_step_gap: Poly,
    pub nondecreasing: bool,
}

pub fn tail_certificate(variant: BoundVariant) -> TailCertificate {
    let n_exponent = match variant {
        BoundVariant::Factorial => ratio(1, 2),
        _ => Rational::zero(),
    };
    // (n + 1) - n
    let n_step_gap = Poly(vec![1, 1]).sub(&Poly(vec![0, 1]));
    // (2(n+1) - 3)(2n - 1) - (2n - 3)(2(n+1) - 1)
    let odd_step_gap = Poly(vec![-1, 2])
        .mul(&Poly(vec![-1, 2]))
        .sub(&Poly(vec![-3, 2]).mul(&Poly(vec![1, 2])));
    let nondecreasing = !n_exponent.is_negative() && n_step_gap.dominates_zero() && odd_step_gap.dominates_zero();
    TailCertificate { n_exponent, n_step_gap, odd_step_gap, nondecreasing }
}

/// Least `n0 >= 2` from which the bound stays at or above the threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossoverCertificate {
    pub c: u64,
    pub variant: BoundVariant,
    #[serde(serialize_with = "serialize_display")]
    pub threshold: Rational,
    pub index: u64,
    pub bound_at_index: BoundRow,
    pub bound_before_index: Option<BoundRow>,
    pub ratio_at_index: String,
    pub tail: TailCertificate,
}

/// `2` for `c = 1`, `1` otherwise.
pub fn default_threshold(c: u64) -> Rational {
    if c == 1 {
        Rational::from_integer(int(2))
    } else {
        Rational::one()
    }
}

/// Scans for the least `n0 >= 2` with `bound(n0) >= threshold` and
/// `ratio(n0) >= 1`; the tail certificate extends the ratio condition to
/// every `n >= n0`.
pub fn crossover_index(
    support: &OddPrimeSupport,
    threshold: &Rational,
    variant: Option<BoundVariant>,
    scan_limit: usize,
) -> Result<CrossoverCertificate> {
    if threshold < &Rational::one() {
        return Err(Error::Precondition(format!("threshold {threshold} is below 1")));
    }
    let variant = variant.unwrap_or_else(|| BoundVariant::auto(support));
    let tail = tail_certificate(variant);
    if !tail.nondecreasing {
        return Err(Error::Precondition(format!("no monotone tail for {variant}")));
    }
    let one = PowerProduct::one();
    for n in 2..=scan_limit.max(2) as u64 {
        let step = bound_ratio(n, support, variant)?;
        if compare_power_products(&step, &one) == Ordering::Less {
            continue;
        }
        let value = bound_value(n, support, variant)?;
        if !ge_threshold(&value, threshold)? {
            continue;
        }
        let bound_at_index = denominator_lower_bound(n, support, Some(variant), threshold)?;
        let bound_before_index = if n > 2 {
            Some(denominator_lower_bound(n - 1, support, Some(variant), threshold)?)
        } else {
            None
        };
        return Ok(CrossoverCertificate {
            c: support.c,
            variant,
            threshold: threshold.clone(),
            index: n,
            bound_at_index,
            bound_before_index,
            ratio_at_index: step.decimal_hint(HINT_DIGITS),
            tail,
        });
    }
    Err(Error::ScanExhausted { limit: scan_limit })
}

/// Least `n0 >= 1` such that `pred` holds on every index from `n0` to the
/// end of the table.
pub fn first_index_from<F>(table: &SequenceTable, start: usize, mut pred: F) -> Option<usize>
where
    F: FnMut(usize) -> bool,
{
    let mut first = None;
    for n in (start..=table.n_max()).rev() {
        if pred(n) {
            first = Some(n);
        } else {
            break;
        }
    }
    first
}

/// First index of interval containment `y_{n-1} < x_n < y_n` that persists
/// through the end of the table.
pub fn first_interval_index(table: &SequenceTable) -> Option<usize> {
    let c = table.c();
    first_index_from(table, 1, |n| {
        fixed_point_interval_check(c, n as u64, table.x(n).expect("row present"))
    })
}

/// `n - 1 < x_n^2 - c x_n < n`.
pub fn quadratic_in_window(table: &SequenceTable, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::UndefinedIndex { index: n, min: 2 });
    }
    let x = table.x(n)?;
    let (p, q) = (x.numer(), x.denom());
    let scaled = p * (p - q * int(table.c()));
    let q_sq = q * q;
    Ok(&q_sq * int(n as u64 - 1) < scaled && scaled < q_sq * int(n as u64))
}

pub fn first_quadratic_index(table: &SequenceTable) -> Option<usize> {
    first_index_from(table, 2, |n| quadratic_in_window(table, n).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::make_rational;
    use crate::sequence::build_table;

    fn q(n: i64, d: i64) -> Rational {
        make_rational(n.into(), d.into()).unwrap()
    }

    #[test]
    fn interval_examples() {
        // (2 * 43/14 - 2)^2 = 841/49, inside (16, 20)
        assert!(fixed_point_interval_check(2, 4, &q(43, 14)));
        // c = 1: x_2 = y_2 = 2 exactly
        assert!(!fixed_point_interval_check(1, 2, &q(2, 1)));
        // (2 * 5/2 - 1)^2 = 16 inside (13, 17)
        assert!(fixed_point_interval_check(1, 4, &q(5, 2)));
        assert!(!fixed_point_interval_check(5, 1, &q(5, 1)));
        assert!(!fixed_point_interval_check(5, 3, &q(1, 1)));
    }

    #[test]
    fn window_examples() {
        let w = window_excludes_integer(1, 5).unwrap();
        assert_eq!((w.lower, w.upper, w.excluded), (17, 21, true));
        let w = window_excludes_integer(2, 10).unwrap();
        assert_eq!((w.lower, w.upper, w.excluded), (40, 44, true));
        assert!(window_excludes_integer(3, 0).is_err());
        for c in 1..=20 {
            for n in 1..=2000 {
                assert!(window_excludes_integer(c, n).unwrap().excluded);
            }
        }
    }

    #[test]
    fn factorial_root_examples() {
        assert!(factorial_root_check(&Integer::one(), 0));
        assert!(factorial_root_check(&Integer::from(10), 4));
        assert!(factorial_root_check(&Integer::from(4_685_949_792u64), 15));
        assert!(!factorial_root_check(&Integer::from(4), 4));
    }

    #[test]
    fn variant_selection() {
        let v = |c| BoundVariant::auto(&OddPrimeSupport::of(c).unwrap());
        assert_eq!(v(1), BoundVariant::Factorial);
        assert_eq!(v(2), BoundVariant::EvenC);
        assert_eq!(v(8), BoundVariant::EvenC);
        assert_eq!(v(6), BoundVariant::EvenC);
        assert_eq!(v(3), BoundVariant::Factorial);
        assert_eq!(v(5), BoundVariant::ThreeQuarters);
        assert_eq!(v(9), BoundVariant::ThreeQuarters);
        assert_eq!(v(15), BoundVariant::ThreeFifths);
        assert_eq!(v(21), BoundVariant::ThreeFifths);
        assert_eq!("e3".parse::<BoundVariant>().unwrap(), BoundVariant::ThreeQuarters);
        assert!("E5".parse::<BoundVariant>().is_err());
    }

    #[test]
    fn bound_rows() {
        let s1 = OddPrimeSupport::of(1).unwrap();
        let two = q(2, 1);
        let r12 = denominator_lower_bound(12, &s1, Some(BoundVariant::Factorial), &two).unwrap();
        assert!(r12.verdict_ge_threshold);
        assert!(r12.decimal_hint.starts_with("3.08"), "{}", r12.decimal_hint);
        let r11 = denominator_lower_bound(11, &s1, Some(BoundVariant::Factorial), &two).unwrap();
        assert!(!r11.verdict_ge_threshold);
        assert!(r11.decimal_hint.starts_with("1.86"), "{}", r11.decimal_hint);
        let r10 = denominator_lower_bound(10, &s1, None, &two).unwrap();
        assert!(r10.claimed.is_some());

        let s6 = OddPrimeSupport::of(6).unwrap();
        let r = denominator_lower_bound(2, &s6, Some(BoundVariant::EvenC), &Rational::one()).unwrap();
        assert_eq!(compare_power_products(&r.value, &PowerProduct::integer(3u32).unwrap()), Ordering::Equal);
        assert!(r.verdict_ge_threshold);

        // E(30)^2 = 29! / (4^29 3^28 57) < 1
        let s3 = OddPrimeSupport::of(3).unwrap();
        let r = denominator_lower_bound(30, &s3, None, &Rational::one()).unwrap();
        assert_eq!(r.variant, BoundVariant::Factorial);
        assert!(!r.verdict_ge_threshold);
        let squared = r.value.pow(&q(2, 1));
        let direct = PowerProduct::from_factors([
            (factorial(29).to_biguint().unwrap(), q(1, 1)),
            (4u32.into(), q(-29, 1)),
            (3u32.into(), q(-28, 1)),
            (57u32.into(), q(-1, 1)),
        ])
        .unwrap();
        assert_eq!(compare_power_products(&squared, &direct), Ordering::Equal);
        assert!(squared.decimal_hint(5).starts_with("2.3524"), "{}", squared.decimal_hint(5));
    }

    #[test]
    fn ratio_examples() {
        let s3 = OddPrimeSupport::of(3).unwrap();
        let r = bound_ratio(30, &s3, BoundVariant::Factorial).unwrap().pow(&q(2, 1));
        let expected = PowerProduct::fraction(1710u32, 708u32).unwrap();
        assert_eq!(compare_power_products(&r, &expected), Ordering::Equal);

        let s6 = OddPrimeSupport::of(6).unwrap();
        for n in 2..200 {
            let r = bound_ratio(n, &s6, BoundVariant::EvenC).unwrap();
            assert_ne!(r.cmp_one(), Ordering::Less, "n={n}");
        }
        let s1 = OddPrimeSupport::of(1).unwrap();
        assert_eq!(bound_ratio(4, &s1, BoundVariant::Factorial).unwrap().cmp_one(), Ordering::Equal);
    }

    #[test]
    fn ratio_closed_form_matches_quotient() {
        for c in 1..=20 {
            let s = OddPrimeSupport::of(c).unwrap();
            for variant in BoundVariant::ALL {
                for n in 2..40 {
                    let closed = bound_ratio(n, &s, variant).unwrap();
                    let quotient = bound_value(n + 1, &s, variant)
                        .unwrap()
                        .div(&bound_value(n, &s, variant).unwrap());
                    assert_eq!(
                        compare_power_products(&closed, &quotient),
                        Ordering::Equal,
                        "c={c} {variant} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn tail_is_certified() {
        for v in BoundVariant::ALL {
            let t = tail_certificate(v);
            assert!(t.nondecreasing);
            assert_eq!(t.odd_step_gap, Poly(vec![4]));
            assert_eq!(t.n_step_gap, Poly(vec![1]));
        }
    }

    #[test]
    fn crossover_examples() {
        let s1 = OddPrimeSupport::of(1).unwrap();
        let x = crossover_index(&s1, &q(2, 1), Some(BoundVariant::Factorial), DEFAULT_SCAN_LIMIT).unwrap();
        assert_eq!(x.index, 12);
        let s2 = OddPrimeSupport::of(2).unwrap();
        let x = crossover_index(&s2, &q(1, 1), Some(BoundVariant::EvenC), DEFAULT_SCAN_LIMIT).unwrap();
        assert_eq!(x.index, 2);
        let s3 = OddPrimeSupport::of(3).unwrap();
        let x = crossover_index(&s3, &q(1, 1), None, DEFAULT_SCAN_LIMIT).unwrap();
        assert_eq!(x.index, 35);
        assert!(!x.bound_before_index.unwrap().verdict_ge_threshold);
        assert!(crossover_index(&s3, &q(1, 2), None, 100).is_err());
        assert_eq!(
            crossover_index(&s3, &q(1, 1), None, 20),
            Err(Error::ScanExhausted { limit: 20 })
        );
    }

    #[test]
    fn first_indices() {
        let t1 = build_table(1, 200).unwrap();
        assert_eq!(first_interval_index(&t1), Some(4));
        assert_eq!(first_quadratic_index(&t1), Some(4));
        for c in 2..=20 {
            let t = build_table(c, 200).unwrap();
            assert_eq!(first_interval_index(&t), Some(2), "c={c}");
            assert_eq!(first_quadratic_index(&t), Some(2), "c={c}");
        }
    }
}
