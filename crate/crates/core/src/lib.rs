//! Exact analysis of the orbit `x_0 = 1, x_{n+1} = c + n / x_n` for a
//! positive integer `c`, with certificates for which `x_n` are integers.
//!
//! Everything is computed with arbitrary-precision integers and rationals.
//! Irrational bounds are represented as products of rational powers of
//! integers ([`PowerProduct`]) and compared exactly.

pub mod arith;
pub mod bounds;
pub mod certify;
pub mod error;
pub mod exact;
pub mod power_product;
pub mod sequence;
pub mod series;

pub use arith::OddPrimeSupport;
pub use bounds::{crossover_index, denominator_lower_bound, BoundRow, BoundVariant, CrossoverCertificate};
pub use certify::{certify, certify_with, reproduce_table, verify_suite, CertifyOptions, IntegralityReport, VerifySummary};
pub use error::{Error, Result};
pub use exact::{Integer, Rational};
pub use power_product::{compare_power_products, PowerProduct};
pub use sequence::{build_table, SequenceTable};
pub use series::{egf, TruncatedSeries};
