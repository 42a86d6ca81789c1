//! Whitney forms: lift a cochain to a piecewise-polynomial form and
//! integrate it back.

use derham::cohomology::{coboundary, Cochain};
use derham::complex::CanonicalComplex;
use derham::forms::{derham_map, whitney};
use derham::linalg::{format_rational, int};

fn main() -> derham::Result<()> {
    let k = CanonicalComplex::Circle(3).build()?;
    let f = Cochain::new(&k, 0, vec![int(1), int(4), int(-2)])?;
    let w = whitney(&k, &f);
    println!("W(f) for f = (1, 4, -2) on the vertices of a triangle:");
    for (facet, terms) in w.terms() {
        let rendered: Vec<String> = terms
            .iter()
            .map(|t| format!("{}·{:?}", format_rational(&t.coefficient), t.monomial))
            .collect();
        println!("  on {:?}: {}", facet.vertices(), rendered.join(" + "));
    }
    assert_eq!(derham_map(&k, &w)?, f);
    assert_eq!(whitney(&k, &coboundary(&k, &f)), w.d());
    let edge_values: Vec<String> = derham_map(&k, &w.d())?
        .values()
        .iter()
        .map(format_rational)
        .collect();
    println!(
        "integrals of dW(f) over the edges: {}",
        edge_values.join(", ")
    );
    println!("integration undoes the lift, and the lift commutes with d");
    Ok(())
}
