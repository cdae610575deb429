// Full integrality certificate for c = 3 as canonical JSON.

fn main() -> integral_orbit::Result<()> {
    let report = integral_orbit::certify(3, Some(40))?;
    println!("{}", report.to_json());
    eprintln!("integral indices: {:?}", report.integral_indices);
    Ok(())
}
