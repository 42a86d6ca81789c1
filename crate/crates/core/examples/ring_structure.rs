//! Integration turns the wedge product into the cup product.

use derham::cohomology::homology;
use derham::complex::CanonicalComplex;
use derham::linalg::{format_rational, int};
use derham::theorems::{realize_periods_against, ring_check};

fn main() -> derham::Result<()> {
    let k = CanonicalComplex::Torus.build()?;
    let h1 = homology(&k, 1)?;
    let alpha = realize_periods_against(&k, &h1, &[int(1), int(0)])?;
    let beta = realize_periods_against(&k, &h1, &[int(0), int(1)])?;

    for (label, a, b) in [
        ("α∧β", &alpha, &beta),
        ("β∧α", &beta, &alpha),
        ("α∧α", &alpha, &alpha),
    ] {
        let verdict = ring_check(&k, a, b)?;
        let pairing = verdict
            .top_pairing
            .as_ref()
            .expect("top degree on an oriented surface");
        println!(
            "{label}: wedge {} cup {} cohomologous {}",
            format_rational(&pairing.wedge),
            format_rational(&pairing.cup),
            verdict.cohomologous
        );
    }
    Ok(())
}
