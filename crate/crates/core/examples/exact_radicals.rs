// Decide comparisons between products of rational powers without floats.

use std::cmp::Ordering;

use integral_orbit::exact::{factorial, Rational};
use integral_orbit::power_product::compare_power_products_exact;
use integral_orbit::{compare_power_products, PowerProduct};

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

fn show(label: &str, lhs: &PowerProduct, rhs: &PowerProduct) {
    let fast = compare_power_products(lhs, rhs);
    let exact = compare_power_products_exact(lhs, rhs);
    assert_eq!(fast, exact);
    let sign = match exact {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    };
    println!("{label:<28} {lhs}  {sign}  {rhs}");
}

fn main() -> integral_orbit::Result<()> {
    let three = PowerProduct::integer(3u32)?;
    show("2^(3/2) vs 3", &PowerProduct::power(2u32, Rational::new(3.into(), 2.into()))?, &three);
    show("sqrt(9) vs 3", &PowerProduct::power(9u32, half())?, &three);

    // sqrt(11!) / 2^11 against 2
    let e12 = PowerProduct::from_integer(&factorial(11))?
        .pow(&half())
        .div(&PowerProduct::integer(2048u32)?);
    show("sqrt(11!)/2^11 vs 2", &e12, &PowerProduct::integer(2u32)?);
    println!("sqrt(11!)/2^11 ~ {}", e12.decimal_hint(20));

    // two nearly equal radicals: 10^(1/3) and 2^(1/3) 5^(1/3)
    let lhs = PowerProduct::power(10u32, Rational::new(1.into(), 3.into()))?;
    let rhs = PowerProduct::power(2u32, Rational::new(1.into(), 3.into()))?.with(5u32, Rational::new(1.into(), 3.into()))?;
    show("10^(1/3) vs 2^(1/3) 5^(1/3)", &lhs, &rhs);
    Ok(())
}
