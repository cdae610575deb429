//! The orbit `x_0 = 1, x_{n+1} = c + n / x_n` and its integer companion
//! `a_0 = 1, a_1 = c, a_{n+2} = c a_{n+1} + (n + 1) a_n`, with
//! `x_n = a_n / a_{n-1}`.

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, gcd, semifactorial, Integer, Rational};

pub const DEFAULT_N_MAX: usize = 64;

/// One index of the orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    /// `x_n` in lowest terms.
    pub x: Rational,
    /// Unreduced numerator of `x_n`; `a_{n-1}` is the unreduced denominator.
    pub a: Integer,
    /// `gcd(a_n, a_{n-1})`, absent for `n = 0`.
    pub d: Option<Integer>,
    /// Reduced denominator of `x_n`, absent for `n = 0`.
    pub reduced_den: Option<Integer>,
}

/// Rows `0..=n_max` for a fixed `c`. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    c: u64,
    rows: Vec<Row>,
}

impl SequenceTable {
    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Result<&Row> {
        self.rows.get(n).ok_or(Error::MissingRow(n))
    }

    pub fn x(&self, n: usize) -> Result<&Rational> {
        Ok(&self.row(n)?.x)
    }

    pub fn a(&self, n: usize) -> Result<&Integer> {
        Ok(&self.row(n)?.a)
    }

    /// `a_0, ..., a_{n_max}`.
    pub fn a_values(&self) -> Vec<Integer> {
        self.rows.iter().map(|r| r.a.clone()).collect()
    }

    pub fn d(&self, n: usize) -> Result<&Integer> {
        self.row(n)?
            .d
            .as_ref()
            .ok_or(Error::UndefinedIndex { index: n, min: 1 })
    }

    pub fn is_integral(&self, n: usize) -> Result<bool> {
        Ok(self.row(n)?.x.is_integer())
    }

    /// Indices `n` whose `x_n` is an integer.
    pub fn integral_indices(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.x.is_integer()).map(|r| r.n).collect()
    }
}

/// Builds rows `0..=n_max`. `x_n` comes from the rational recurrence and
/// `a_n` from the integer one; the two are tied together by `d_n` and `D_n`.
pub fn build_table(c: u64, n_max: usize) -> Result<SequenceTable> {
    if c == 0 {
        return Err(Error::NonPositiveC);
    }
    let ci = Integer::from(c);
    let mut rows = Vec::with_capacity(n_max + 1);
    rows.push(Row {
        n: 0,
        x: Rational::one(),
        a: Integer::one(),
        d: None,
        reduced_den: None,
    });
    let mut x = Rational::one();
    let mut a_prev = Integer::one(); // a_{n-1}
    let mut a_cur = ci.clone(); // a_n
    for n in 1..=n_max {
        // x_n = c + (n - 1) / x_{n-1}; x_{n-1} > 0 for every n >= 1
        x = Rational::from_integer(ci.clone()) + Rational::from_integer(Integer::from(n - 1)) / &x;
        let d = gcd(&a_cur, &a_prev)?;
        let reduced_den = &a_prev / &d;
        rows.push(Row {
            n,
            x: x.clone(),
            a: a_cur.clone(),
            d: Some(d),
            reduced_den: Some(reduced_den),
        });
        let next = &ci * &a_cur + Integer::from(n) * &a_prev;
        a_prev = std::mem::replace(&mut a_cur, next);
    }
    Ok(SequenceTable { c, rows })
}

/// `a_n = Σ_{2s ≤ n} c^{n-2s} C(n, 2s) (2s-1)!!`.
pub fn a_closed_form(c: u64, n: u64) -> Integer {
    let ci = Integer::from(c);
    (0..=n / 2)
        .map(|s| num_traits::pow(ci.clone(), (n - 2 * s) as usize) * binomial(n, 2 * s) * semifactorial(s))
        .fold(Integer::zero(), |acc, t| acc + t)
}

/// `D_n`, the reduced denominator of `x_n`. Cross-checks `a_{n-1} / d_n`
/// against the denominator of the normalized `x_n`.
pub fn reduced_denominator(table: &SequenceTable, n: usize) -> Result<Integer> {
    if n == 0 {
        return Err(Error::UndefinedIndex { index: 0, min: 1 });
    }
    let row = table.row(n)?;
    let prev = table.row(n - 1)?;
    let d = row.d.as_ref().expect("d_n present for n >= 1");
    let (quot, rem) = prev.a.div_rem(d);
    assert!(rem.is_zero(), "d_{n} does not divide a_{}", n - 1);
    assert_eq!(&quot, row.x.denom(), "a_(n-1)/d_n differs from denominator of x_{n}");
    assert_eq!(Some(&quot), row.reduced_den.as_ref());
    Ok(quot)
}

/// `x_n^2 - c x_n`, which lies strictly between `n - 1` and `n` wherever the
/// orbit is away from the integers.
pub fn quadratic_residual(table: &SequenceTable, n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(Error::UndefinedIndex { index: n, min: 2 });
    }
    let x = table.x(n)?;
    let c = Rational::from_integer(Integer::from(table.c()));
    Ok(x * x - c * x)
}

/// Serializable `(n, a_n, d_n, D_n)` row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub x: String,
    pub a: String,
    pub d: Option<String>,
    #[serde(rename = "D")]
    pub reduced_den: Option<String>,
}

impl From<&Row> for TableRow {
    fn from(row: &Row) -> Self {
        Self {
            n: row.n,
            x: row.x.to_string(),
            a: row.a.to_string(),
            d: row.d.as_ref().map(|v| v.to_string()),
            reduced_den: row.reduced_den.as_ref().map(|v| v.to_string()),
        }
    }
}
