//! Integration over simplices commutes with the exterior derivative:
//! the integral of dω over a simplex equals the integral of ω over its boundary.

use derham::cohomology::coboundary;
use derham::complex::CanonicalComplex;
use derham::forms::derham_map;
use derham::sample;

fn main() -> derham::Result<()> {
    let mut rng = sample::seeded(2024);
    for c in CanonicalComplex::CORPUS {
        let k = c.build()?;
        let mut checked = 0;
        for p in 0..=k.dimension() {
            for _ in 0..25 {
                let omega = sample::random_form(&k, p, &mut rng);
                let lhs = derham_map(&k, &omega.d())?;
                let rhs = coboundary(&k, &derham_map(&k, &omega)?);
                assert_eq!(lhs, rhs, "{c}: degree {p}");
                checked += 1;
            }
        }
        println!("{:<18} {checked} random forms agree", c.name());
    }
    Ok(())
}
