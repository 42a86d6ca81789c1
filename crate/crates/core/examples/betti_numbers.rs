//! Betti numbers and Euler characteristics of the built-in triangulations.

use derham::cohomology::betti_numbers;
use derham::complex::CanonicalComplex;

fn main() -> derham::Result<()> {
    println!(
        "{:<18} {:>12} {:>6} {:>9}",
        "complex", "betti", "euler", "oriented"
    );
    for c in CanonicalComplex::CORPUS
        .iter()
        .chain([&CanonicalComplex::Sphere3])
    {
        let k = c.build()?;
        let betti = betti_numbers(&k);
        println!(
            "{:<18} {:>12} {:>6} {:>9}",
            c.name(),
            format!("{betti:?}"),
            k.euler_characteristic(),
            k.is_oriented()
        );
    }
    Ok(())
}
