// Prints the first terms of the orbit for c = 1 together with the integer
// companion sequence and the reduced denominators.

use integral_orbit::build_table;

fn main() -> integral_orbit::Result<()> {
    let table = build_table(1, 12)?;
    println!("{:>3}  {:>12}  {:>8}  {:>4}  {:>6}", "n", "x_n", "a_n", "d_n", "D_n");
    for row in table.rows() {
        let d = row.d.as_ref().map_or("-".into(), ToString::to_string);
        let den = row.reduced_den.as_ref().map_or("-".into(), ToString::to_string);
        println!("{:>3}  {:>12}  {:>8}  {:>4}  {:>6}", row.n, row.x.to_string(), row.a.to_string(), d, den);
    }
    println!("integral at n = {:?}", table.integral_indices());
    Ok(())
}
