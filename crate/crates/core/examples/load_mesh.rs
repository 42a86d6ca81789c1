//! Load a complex from a text or JSON file and summarize it.
//!
//! ```text
//! cargo run --example load_mesh -- crates/core/fixtures/torus.txt
//! ```

use std::fs::File;

use derham::cohomology::homology;
use derham::complex::{load_complex, ComplexFormat};

fn main() -> derham::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/sphere2.json").into());
    let format = if path.ends_with(".json") {
        ComplexFormat::Json
    } else {
        ComplexFormat::Text
    };
    let k = load_complex(File::open(&path)?, format)?;

    let s = k.summary();
    println!("{path}");
    println!(
        "  vertices {}, dimension {}, counts {:?}",
        s.vertex_count, s.dimension, s.simplex_counts
    );
    println!(
        "  closed manifold {}, oriented {}",
        s.is_closed_manifold, s.is_oriented
    );
    for p in 0..=k.dimension() {
        let h = homology(&k, p)?;
        println!("  H_{p}: rank {}", h.betti);
        for z in &h.cycles {
            let terms: Vec<String> = z
                .terms()
                .map(|(simplex, q)| format!("{q}·{:?}", simplex.vertices()))
                .collect();
            println!("    {}", terms.join(" + "));
        }
    }
    Ok(())
}
