// Crossover index for each c up to 20, with the bound variant chosen by
// the prime structure of c.

use integral_orbit::bounds::{default_threshold, BoundVariant, DEFAULT_SCAN_LIMIT};
use integral_orbit::{crossover_index, denominator_lower_bound, OddPrimeSupport};

fn main() -> integral_orbit::Result<()> {
    println!("{:>3}  {:>7}  {:>9}  {:>9}  bound at crossover", "c", "variant", "threshold", "crossover");
    for c in 1..=20 {
        let support = OddPrimeSupport::of(c)?;
        let threshold = default_threshold(c);
        let cert = crossover_index(&support, &threshold, None, DEFAULT_SCAN_LIMIT)?;
        println!(
            "{c:>3}  {:>7}  {:>9}  {:>9}  {}",
            cert.variant.label(),
            threshold.to_string(),
            cert.index,
            cert.bound_at_index.decimal_hint
        );
    }

    let s1 = OddPrimeSupport::of(1)?;
    for n in 9..=13 {
        let row = denominator_lower_bound(n, &s1, Some(BoundVariant::Factorial), &default_threshold(1))?;
        println!("c=1 E({n}) = {} >= 2: {}", row.decimal_hint, row.verdict_ge_threshold);
    }
    Ok(())
}
