// The companion sequence three ways: recurrence, closed form and the
// coefficients of exp(cx + x^2/2).

use integral_orbit::sequence::a_closed_form;
use integral_orbit::series::{cauchy_residual, coefficients_to_a, egf, exp_of_square, reflected_product};
use integral_orbit::build_table;

fn main() -> integral_orbit::Result<()> {
    let c = 3;
    let order = 15;
    let table = build_table(c, order)?;
    let f = egf(c, order);
    let from_series = coefficients_to_a(&f)?;

    for (n, series_value) in from_series.iter().enumerate() {
        let closed = a_closed_form(c, n as u64);
        println!("a_{n:<2} = {:>12}  closed form {:>12}  n! [x^n]F {:>12}", table.a(n)?, closed, series_value);
    }

    println!("F'' - (c + x)F' - F == 0: {}", cauchy_residual(&f, c)?.is_zero());
    println!("F(x)F(-x) == exp(x^2):    {}", reflected_product(&f) == exp_of_square(order));
    Ok(())
}
