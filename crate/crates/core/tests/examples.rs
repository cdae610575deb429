// Every runnable example must finish without error.

mod orbit_table {
    include!("../examples/orbit_table.rs");
    pub fn run() -> integral_orbit::Result<()> {
        main()
    }
}
mod generating_function {
    include!("../examples/generating_function.rs");
    pub fn run() -> integral_orbit::Result<()> {
        main()
    }
}
mod exact_radicals {
    include!("../examples/exact_radicals.rs");
    pub fn run() -> integral_orbit::Result<()> {
        main()
    }
}
mod prime_structure {
    include!("../examples/prime_structure.rs");
    pub fn run() -> integral_orbit::Result<()> {
        main()
    }
}
mod crossover {
    include!("../examples/crossover.rs");
    pub fn run() -> integral_orbit::Result<()> {
        main()
    }
}
mod certificate {
    include!("../examples/certificate.rs");
    pub fn run() -> integral_orbit::Result<()> {
        main()
    }
}
mod verify_range {
    include!("../examples/verify_range.rs");
    pub fn run() -> integral_orbit::Result<()> {
        main()
    }
}

#[test]
fn examples_run() {
    orbit_table::run().unwrap();
    generating_function::run().unwrap();
    exact_radicals::run().unwrap();
    prime_structure::run().unwrap();
    crossover::run().unwrap();
    certificate::run().unwrap();
    verify_range::run().unwrap();
}
