//! Cup products of degree-one classes on the torus.

use derham::cohomology::{cohomology, cup, pair};
use derham::complex::CanonicalComplex;
use derham::linalg::format_rational;

fn main() -> derham::Result<()> {
    let k = CanonicalComplex::Torus.build()?;
    let h1 = cohomology(&k, 1)?;
    let fundamental = k.fundamental_cycle()?;
    println!("H^1 of the torus has rank {}", h1.betti);
    for (i, a) in h1.cocycles.iter().enumerate() {
        for (j, b) in h1.cocycles.iter().enumerate() {
            let value = pair(&k, &cup(&k, a, b)?, &fundamental)?;
            println!("  <e{i} ∪ e{j}, [T]> = {}", format_rational(&value));
        }
    }
    Ok(())
}
