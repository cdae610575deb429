// Which primes can divide gcd(a_n, a_{n-1}), and how large that gcd can get.

use integral_orbit::arith::{gcd_upper_bound, multiple_congruence_check, semifactorial_valuation_bound, support_check};
use integral_orbit::{build_table, OddPrimeSupport};

fn main() -> integral_orbit::Result<()> {
    let c = 15;
    let support = OddPrimeSupport::of(c)?;
    println!("c = {c}: odd primes {:?}, j = {}", support.primes, support.j());

    let table = build_table(c, 40)?;
    for n in [3usize, 5, 9, 15, 25, 27, 30] {
        let a = table.a(n)?;
        let checks: Vec<String> = [3u64, 5, 7]
            .iter()
            .filter(|&&p| (n as u64).is_multiple_of(p))
            .map(|&p| format!("p={p}: {}", multiple_congruence_check(c, p, n as u64, a).unwrap()))
            .collect();
        println!("a_{n} = c^n mod p ? {}", checks.join(", "));
    }

    for n in [2usize, 10, 20, 40] {
        let d = table.d(n)?;
        println!(
            "d_{n:<2} = {d:<6} supported: {}  bound ~ {}",
            support_check(d, &support),
            gcd_upper_bound(n as u64, &support)?.decimal_hint(8)
        );
    }

    for p in [3, 5, 7] {
        let v = semifactorial_valuation_bound(p, 40)?;
        println!("v_{p}(79!!) = {} (t = {})", v.m, v.t);
    }
    Ok(())
}
