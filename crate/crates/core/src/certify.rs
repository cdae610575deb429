//! End-to-end decision procedure: find a crossover beyond which the
//! denominator bound rules out integers, then check every earlier index
//! exactly and record independent evidence for each one.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_integer::Integer as _;
use num_traits::One;
use serde::Serialize;

use crate::arith::{
    gcd_bound_holds, is_prime, multiple_congruence_check, reconstruct, semifactorial_valuation_bound,
    support_check, OddPrimeSupport,
};
use crate::bounds::{
    bound_value, chain_holds, crossover_index, default_threshold, factorial_root_check,
    first_interval_index, first_quadratic_index, fixed_point_interval_check, quadratic_in_window,
    serialize_display, window_excludes_integer, BoundVariant, CrossoverCertificate, DEFAULT_SCAN_LIMIT,
    HINT_DIGITS,
};
use crate::error::Result;
use crate::exact::{semifactorial, valuation, Integer, Rational};
use crate::power_product::{compare_power_products, PowerProduct};
use crate::sequence::{a_closed_form, build_table, reduced_denominator, TableRow, DEFAULT_N_MAX};
use crate::series::{alternating_convolution, cauchy_residual, coefficients_to_a, egf, exp_of_square, reflected_product};

/// Per-index facts, each computed on its own path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvidenceItem {
    pub n: usize,
    pub x: String,
    #[serde(rename = "D")]
    pub reduced_den: Option<String>,
    pub interval_ok: bool,
    pub window_excluded: bool,
    pub quadratic_in_window: bool,
    pub is_integer: bool,
}

impl EvidenceItem {
    /// Non-integrality follows from the window argument alone, without
    /// looking at `D_n`.
    pub fn justifies_non_integer(&self) -> bool {
        self.window_excluded && (self.interval_ok || self.quadratic_in_window)
    }
}

/// A published claim that exact evaluation contradicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub claim_ref: String,
    pub claimed: String,
    pub computed: String,
}

/// Which `x_n` are integers, and why no later one can be.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralityReport {
    pub c: u64,
    pub crossover: u64,
    pub threshold_variant: BoundVariant,
    #[serde(serialize_with = "serialize_display")]
    pub threshold: Rational,
    pub integral_indices: Vec<usize>,
    pub horizon_checked: usize,
    pub interval_first_index: Option<usize>,
    pub certificate: CrossoverCertificate,
    pub evidence: Vec<EvidenceItem>,
    pub discrepancies: Vec<Discrepancy>,
}

impl IntegralityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Knobs for [`certify_with`].
#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub horizon: Option<usize>,
    pub threshold: Option<Rational>,
    pub variant: Option<BoundVariant>,
    pub scan_limit: usize,
    pub factor_limit: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            horizon: None,
            threshold: None,
            variant: None,
            scan_limit: DEFAULT_SCAN_LIMIT,
            factor_limit: crate::arith::DEFAULT_FACTOR_LIMIT,
        }
    }
}

pub fn certify(c: u64, horizon: Option<usize>) -> Result<IntegralityReport> {
    certify_with(c, &CertifyOptions { horizon, ..CertifyOptions::default() })
}

pub fn certify_with(c: u64, opts: &CertifyOptions) -> Result<IntegralityReport> {
    let support = OddPrimeSupport::with_limit(c, opts.factor_limit)?;
    let threshold = opts.threshold.clone().unwrap_or_else(|| default_threshold(c));
    let certificate = crossover_index(&support, &threshold, opts.variant, opts.scan_limit)?;
    let crossover = certificate.index;
    let horizon = (crossover as usize - 1).max(opts.horizon.unwrap_or(DEFAULT_N_MAX));
    let table = build_table(c, horizon)?;

    let mut evidence = Vec::with_capacity(horizon + 1);
    for row in table.rows() {
        let n = row.n;
        let reduced = if n == 0 { None } else { Some(reduced_denominator(&table, n)?) };
        let is_integer = match &reduced {
            Some(d) => d.is_one(),
            None => row.x.is_integer(),
        };
        evidence.push(EvidenceItem {
            n,
            x: row.x.to_string(),
            reduced_den: reduced.as_ref().map(ToString::to_string),
            interval_ok: fixed_point_interval_check(c, n as u64, &row.x),
            window_excluded: n >= 1 && window_excludes_integer(c, n as u64)?.excluded,
            quadratic_in_window: n >= 2 && quadratic_in_window(&table, n)?,
            is_integer,
        });
    }
    let integral_indices = evidence.iter().filter(|e| e.is_integer).map(|e| e.n).collect();

    Ok(IntegralityReport {
        c,
        crossover,
        threshold_variant: certificate.variant,
        threshold,
        integral_indices,
        horizon_checked: horizon,
        interval_first_index: first_interval_index(&table),
        discrepancies: discrepancies(&support, opts.scan_limit)?,
        certificate,
        evidence,
    })
}

/// Published claims about this `c` that exact evaluation overturns.
pub fn discrepancies(support: &OddPrimeSupport, scan_limit: usize) -> Result<Vec<Discrepancy>> {
    let c = support.c;
    let mut out = Vec::new();

    // y_1 < c would need 4 + c^2 < c^2
    let y1_root = PowerProduct::power(4 + c * c, Rational::new(1.into(), 2.into()))?;
    let verdict = compare_power_products(&y1_root, &PowerProduct::integer(c)?);
    if verdict != Ordering::Less {
        out.push(Discrepancy {
            claim_ref: "interval induction base case".into(),
            claimed: "(c+sqrt(4+c^2))/2 < c".into(),
            computed: format!("false for c={c}: sqrt(4+c^2) > c, so (c+sqrt(4+c^2))/2 > c"),
        });
    }

    let factorial_form = Some(BoundVariant::Factorial);
    if c == 1 {
        let x = crossover_index(support, &Rational::from_integer(2.into()), factorial_form, scan_limit)?;
        let before = x.bound_before_index.as_ref().map_or(String::new(), |r| {
            format!(" (E({}) = {})", r.n, r.decimal_hint)
        });
        out.push(Discrepancy {
            claim_ref: "c=1 threshold for E(n) >= 2".into(),
            claimed: "E(n) = sqrt((n-1)!)/2^(n-1) >= 2 for all n >= 10".into(),
            computed: format!("least such n is {}{before}", x.index),
        });
    }
    if c == 3 {
        let e30 = bound_value(30, support, BoundVariant::Factorial)?;
        let squared = e30.pow(&Rational::from_integer(2.into()));
        out.push(Discrepancy {
            claim_ref: "c=3 value of E(30)^2".into(),
            claimed: "E(30)^2 = 29!/(4^29 3^28 57) >= 0.423".into(),
            computed: format!("E(30)^2 = {} < 1", squared.decimal_hint(HINT_DIGITS)),
        });
        let x = crossover_index(support, &Rational::one(), factorial_form, scan_limit)?;
        let before = x.bound_before_index.as_ref().map_or(String::new(), |r| {
            format!(" (E({}) = {})", r.n, r.decimal_hint)
        });
        out.push(Discrepancy {
            claim_ref: "c=3 crossover for E(n) > 1".into(),
            claimed: "E(n) > 1 for all n >= 31".into(),
            computed: format!("least n with E(m) >= 1 for all m >= n is {}{before}", x.index),
        });
    }
    Ok(out)
}

/// `(n, x_n, a_n, d_n, D_n)` rows.
pub fn reproduce_table(c: u64, n_max: usize) -> Result<Vec<TableRow>> {
    let table = build_table(c, n_max)?;
    Ok(table.rows().iter().map(TableRow::from).collect())
}

pub fn table_tsv(rows: &[TableRow]) -> String {
    let mut out = String::from("n\tx_n\ta_n\td_n\tD_n\n");
    for r in rows {
        let dash = || "-".to_string();
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.n,
            r.x,
            r.a,
            r.d.clone().unwrap_or_else(dash),
            r.reduced_den.clone().unwrap_or_else(dash)
        ));
    }
    out
}

/// Counters for one invariant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckCount {
    pub checked: u64,
    pub failed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

/// Per-invariant tallies over a range of `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub c_from: u64,
    pub c_to: u64,
    pub n_max: usize,
    pub checks: BTreeMap<&'static str, CheckCount>,
    pub all_pass: bool,
}

impl VerifySummary {
    fn record(&mut self, name: &'static str, ok: bool, context: impl FnOnce() -> String) {
        let entry = self.checks.entry(name).or_default();
        entry.checked += 1;
        if !ok {
            entry.failed += 1;
            if entry.first_failure.is_none() {
                entry.first_failure = Some(context());
            }
        }
    }

    pub fn failures(&self) -> u64 {
        self.checks.values().map(|c| c.failed).sum()
    }

    pub fn render(&self) -> String {
        let mut out = format!("verify c={}..={} n_max={}\n", self.c_from, self.c_to, self.n_max);
        for (name, count) in &self.checks {
            let status = if count.failed == 0 { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {name:<28} checked={:<8} failed={}", count.checked, count.failed));
            if let Some(f) = &count.first_failure {
                out.push_str(&format!("  first: {f}"));
            }
            out.push('\n');
        }
        out.push_str(if self.all_pass { "all invariants hold\n" } else { "invariant violations found\n" });
        out
    }
}

const C1_ORBIT: [&str; 10] = ["1", "1", "2", "2", "5/2", "13/5", "38/13", "58/19", "191/58", "655/191"];
const C3_A15: u64 = 4_685_949_792;

/// Runs every invariant for each `c` in the range. Violations are counted,
/// not raised.
pub fn verify_suite(c_from: u64, c_to: u64, n_max: usize) -> Result<VerifySummary> {
    let mut summary = VerifySummary { c_from, c_to, n_max, ..VerifySummary::default() };
    for c in c_from..=c_to {
        verify_one(c, n_max, &mut summary)?;
    }
    summary.all_pass = summary.failures() == 0;
    Ok(summary)
}

fn verify_one(c: u64, n_max: usize, s: &mut VerifySummary) -> Result<()> {
    let table = build_table(c, n_max)?;
    let support = OddPrimeSupport::of(c)?;
    let ci = Rational::from_integer(Integer::from(c));

    s.record("factorization", reconstruct(&crate::arith::factorize(c, u64::MAX)?) == c, || format!("c={c}"));

    // orbit and companion sequence
    for n in 0..n_max {
        let step = &ci + Rational::from_integer(Integer::from(n)) / table.x(n)?;
        s.record("x_recurrence", &step == table.x(n + 1)?, || format!("c={c} n={n}"));
    }
    for n in 0..=n_max {
        let a = table.a(n)?;
        s.record("closed_form", &a_closed_form(c, n as u64) == a, || format!("c={c} n={n}"));
        s.record("factorial_root", factorial_root_check(a, n as u64), || format!("c={c} n={n}"));
        if n >= 1 {
            let d = table.d(n)?;
            let prev = table.a(n - 1)?;
            let x = table.x(n)?;
            let fraction_ok = &(a / d) == x.numer() && &(prev / d) == x.denom();
            s.record("fraction_identity", fraction_ok, || format!("c={c} n={n}"));
            let by_division = a.is_multiple_of(prev);
            let by_denominator = reduced_denominator(&table, n)?.is_one();
            s.record("integer_cross_check", by_division == by_denominator, || format!("c={c} n={n}"));
            s.record("gcd_support", support_check(d, &support), || format!("c={c} n={n} d={d}"));
            if n < n_max {
                s.record("divisibility_chain", table.d(n + 1)?.is_multiple_of(d), || format!("c={c} n={n}"));
            }
            if c >= 2 && n < n_max {
                s.record("monotone_growth", table.a(n + 1)? > a, || format!("c={c} n={n}"));
            }
            s.record("window_exclusion", window_excludes_integer(c, n as u64)?.excluded, || format!("c={c} n={n}"));
        }
        if n >= 2 {
            s.record("gcd_upper_bound", gcd_bound_holds(table.d(n)?, n as u64, &support)?, || {
                format!("c={c} n={n}")
            });
            s.record("chain_factorial_bound", chain_holds(&table, n, &support, BoundVariant::Factorial)?, || {
                format!("c={c} n={n}")
            });
            let auto = BoundVariant::auto(&support);
            s.record("chain_case_bound", chain_holds(&table, n, &support, auto)?, || format!("c={c} {auto} n={n}"));
        }
    }

    // congruence at multiples of odd primes
    for p in (3..=97u64).filter(|&p| is_prime(p)) {
        for n in (p..=n_max as u64).step_by(p as usize) {
            let ok = multiple_congruence_check(c, p, n, table.a(n as usize)?)?;
            s.record("multiple_congruence", ok, || format!("c={c} p={p} n={n}"));
        }
    }
    if c == c_lowest(s) {
        for p in (3..50u64).filter(|&p| is_prime(p)) {
            for n in 1..=n_max as u64 {
                let direct = valuation(&semifactorial(n), p);
                let ok = semifactorial_valuation_bound(p, n)?.m == direct;
                s.record("semifactorial_valuation", ok, || format!("p={p} n={n}"));
            }
        }
    }

    // window and quadratic evidence from their first persistent index
    let expected_first = if c == 1 { 4 } else { 2 };
    let interval_first = first_interval_index(&table);
    s.record("interval_first_index", n_max < 4 || interval_first.is_some_and(|i| i <= expected_first), || {
        format!("c={c} first={interval_first:?}")
    });
    if let Some(first) = interval_first {
        for n in first..=n_max {
            let ok = fixed_point_interval_check(c, n as u64, table.x(n)?);
            s.record("interval_containment", ok, || format!("c={c} n={n}"));
        }
    }
    let quad_first = first_quadratic_index(&table);
    s.record("quadratic_first_index", n_max < 4 || quad_first == Some(expected_first), || {
        format!("c={c} first={quad_first:?}")
    });
    for n in expected_first.max(2)..=n_max {
        s.record("quadratic_window", quadratic_in_window(&table, n)?, || format!("c={c} n={n}"));
    }

    // generating function
    let f = egf(c, n_max);
    let from_series = coefficients_to_a(&f)?;
    s.record("egf_coefficients", from_series == table.a_values(), || format!("c={c}"));
    if n_max >= 2 {
        s.record("cauchy_residual", cauchy_residual(&f, c)?.is_zero(), || format!("c={c}"));
    }
    s.record("product_identity", reflected_product(&f) == exp_of_square(n_max), || format!("c={c}"));
    let a = table.a_values();
    for n in 1..=n_max / 2 {
        let expected = Integer::from(2u32).pow(n as u32) * semifactorial(n as u64);
        s.record("alternating_convolution", alternating_convolution(&a, n)? == expected, || {
            format!("c={c} n={n}")
        });
    }

    // anchors
    if c == 1 {
        for (n, expect) in C1_ORBIT.iter().enumerate().take(n_max + 1) {
            s.record("anchor_c1_orbit", table.x(n)?.to_string() == *expect, || format!("n={n}"));
        }
    }
    if c == 3 && n_max >= 15 {
        s.record("anchor_c3_a15", table.a(15)? == &Integer::from(C3_A15), || "a_15".into());
    }

    // the certificate itself
    let report = certify(c, Some(n_max))?;
    let expected: Vec<usize> = if c == 1 { vec![0, 1, 2, 3] } else { vec![0, 1] };
    s.record("certificate_integral_indices", report.integral_indices == expected, || {
        format!("c={c} got {:?}", report.integral_indices)
    });
    for e in report.evidence.iter().filter(|e| e.n >= 2 && (e.n as u64) < report.crossover) {
        s.record("evidence_justifies", e.is_integer != e.justifies_non_integer(), || {
            format!("c={c} n={}", e.n)
        });
    }
    Ok(())
}

fn c_lowest(s: &VerifySummary) -> u64 {
    s.c_from
}

/// Checks that the chosen bound reaches `10^6` somewhere below the limit.
pub fn bound_diverges(support: &OddPrimeSupport, variant: BoundVariant, limit: u64) -> Result<Option<u64>> {
    let million = PowerProduct::integer(1_000_000u32)?;
    for n in 2..=limit {
        if compare_power_products(&bound_value(n, support, variant)?, &million) == Ordering::Greater {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
