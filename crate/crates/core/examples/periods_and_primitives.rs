//! A closed form either has a primitive or a nonzero period.

use derham::cohomology::{coboundary, cohomology};
use derham::complex::{CanonicalComplex, SimplicialComplex};
use derham::forms::{whitney, PolyForm};
use derham::linalg::format_rational;
use derham::sample;
use derham::theorems::{find_primitive, periods};

fn show(label: &str, k: &SimplicialComplex, omega: &PolyForm) -> derham::Result<()> {
    let report = periods(k, omega)?;
    let values: Vec<String> = report.periods.iter().map(format_rational).collect();
    match find_primitive(k, omega)? {
        Some(beta) => {
            assert_eq!(beta.d(), *omega);
            let terms = beta.term_count();
            println!(
                "{label}: periods [{}], primitive with {terms} terms",
                values.join(", ")
            );
        }
        None => println!("{label}: periods [{}], no primitive", values.join(", ")),
    }
    Ok(())
}

fn main() -> derham::Result<()> {
    let k = CanonicalComplex::Torus.build()?;
    let mut rng = sample::seeded(9);

    let exact = whitney(
        &k,
        &coboundary(&k, &sample::random_cochain(&k, 0, &mut rng)),
    );
    show("exact 1-form", &k, &exact)?;

    let generator = whitney(&k, &cohomology(&k, 1)?.cocycles[0]);
    show("generator", &k, &generator)?;

    let mixed = generator.add(&exact);
    show("generator + exact", &k, &mixed)?;
    Ok(())
}
