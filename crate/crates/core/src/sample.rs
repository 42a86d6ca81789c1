//! Seeded generators for random cochains, forms and period vectors.
//!
//! All randomness flows through [`ChaCha8Rng`] so a seed reproduces the same
//! objects on every platform.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{coboundary, Cochain, CohomologyBasis};
use crate::complex::SimplicialComplex;
use crate::forms::{whitney, PolyForm};
use crate::linalg::{rat, Rational, Vector};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in `-6..=6` and denominator in `1..=4`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn random_nonzero<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let q = random_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn random_vector<R: Rng>(len: usize, rng: &mut R) -> Vector {
    (0..len).map(|_| random_rational(rng)).collect()
}

pub fn random_cochain<R: Rng>(k: &SimplicialComplex, p: usize, rng: &mut R) -> Cochain {
    Cochain::new(k, p, random_vector(k.count(p), rng)).expect("length matches")
}

/// Sum of one to three random global terms `c · λ^a dλ_{w1} ∧ … ∧ dλ_{wp}`,
/// each supported on the star of a randomly chosen facet. The result is
/// continuous by construction. Returns the zero form when no facet is large
/// enough to carry degree `p`.
pub fn random_form<R: Rng>(k: &SimplicialComplex, p: usize, rng: &mut R) -> PolyForm {
    let mut form = PolyForm::zero(k, p);
    let carriers: Vec<_> = k.facets().iter().filter(|f| f.dim() >= p).collect();
    if carriers.is_empty() {
        return form;
    }
    let count = rng.gen_range(1..=3);
    for _ in 0..count {
        let facet = carriers[rng.gen_range(0..carriers.len())];
        let mut vertices = facet.vertices().to_vec();
        vertices.shuffle(rng);
        let frame = &vertices[..p];
        let degree = rng.gen_range(0..=2);
        let monomial: Vec<(usize, u32)> = (0..degree)
            .map(|_| {
                (
                    facet.vertices()[rng.gen_range(0..facet.vertices().len())],
                    1,
                )
            })
            .collect();
        let term = PolyForm::global_term(k, random_nonzero(rng), &monomial, frame);
        form = form.add(&term);
    }
    form
}

/// A random cocycle: a combination of the cohomology representatives (unless
/// `exact`) plus a random coboundary.
pub fn random_cocycle<R: Rng>(
    k: &SimplicialComplex,
    basis: &CohomologyBasis,
    exact: bool,
    rng: &mut R,
) -> Cochain {
    let p = basis.dim;
    let mut f = if p == 0 {
        Cochain::zero(k, 0)
    } else {
        coboundary(k, &random_cochain(k, p - 1, rng))
    };
    if !exact {
        for rep in &basis.cocycles {
            f = f.add(&rep.scale(&random_rational(rng)));
        }
    }
    f
}

/// Whitney lift of [`random_cocycle`].
pub fn random_closed_whitney_form<R: Rng>(
    k: &SimplicialComplex,
    basis: &CohomologyBasis,
    exact: bool,
    rng: &mut R,
) -> PolyForm {
    whitney(k, &random_cocycle(k, basis, exact, rng))
}
