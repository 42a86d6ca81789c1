//! Build closed forms with prescribed periods and read them back.

use derham::cohomology::homology;
use derham::complex::CanonicalComplex;
use derham::linalg::{format_rational, rat};
use derham::theorems::{derham_basis, is_invertible, period_matrix, periods, realize_periods};

fn list(v: &[derham::linalg::Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

fn main() -> derham::Result<()> {
    for c in [
        CanonicalComplex::Torus,
        CanonicalComplex::KleinBottle,
        CanonicalComplex::Circle(7),
    ] {
        let k = c.build()?;
        let b1 = homology(&k, 1)?.betti;
        let phi: Vec<_> = (0..b1).map(|i| rat(2 * i as i64 - 3, 2)).collect();
        let omega = realize_periods(&k, 1, &phi)?;
        let back = periods(&k, &omega)?.periods;
        println!(
            "{:<14} requested [{}] got [{}]",
            c.name(),
            list(&phi),
            list(&back)
        );

        let basis = derham_basis(&k, 1)?;
        let m = period_matrix(&k, &basis.closed_forms, &homology(&k, 1)?)?;
        println!(
            "{:<14} de Rham basis of size {} has invertible period matrix: {}",
            "",
            basis.betti,
            is_invertible(&m)
        );
    }
    Ok(())
}
