// Runs every invariant for c = 1..=5 and prints the tally.

fn main() -> integral_orbit::Result<()> {
    let summary = integral_orbit::verify_suite(1, 5, 60)?;
    print!("{}", summary.render());
    if !summary.all_pass {
        std::process::exit(1);
    }
    Ok(())
}
