//! Cochains, the coboundary, (co)homology over the rationals and the
//! Alexander-Whitney cup product.

use num_traits::Zero;

use crate::complex::{Chain, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{self, quotient_basis, Rational, RationalMatrix, SubspaceBasis, Vector};

/// A `p`-cochain: one rational value per `p`-simplex, in the complex's sorted
/// simplex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    dim: usize,
    values: Vector,
}

impl Cochain {
    pub fn zero(k: &SimplicialComplex, dim: usize) -> Self {
        Self {
            dim,
            values: linalg::zero_vector(k.count(dim)),
        }
    }

    pub fn new(k: &SimplicialComplex, dim: usize, values: Vector) -> Result<Self> {
        if values.len() != k.count(dim) {
            return Err(Error::DimensionMismatch {
                expected: k.count(dim),
                found: values.len(),
            });
        }
        Ok(Self { dim, values })
    }

    /// The constant cochain on vertices.
    pub fn ones(k: &SimplicialComplex) -> Self {
        Self {
            dim: 0,
            values: vec![linalg::int(1); k.count(0)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vector {
        self.values
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vector(&self.values)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.dim, other.dim, "adding cochains of different degree");
        Cochain {
            dim: self.dim,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.scale(&linalg::int(-1)))
    }

    pub fn scale(&self, factor: &Rational) -> Cochain {
        Cochain {
            dim: self.dim,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }
}

/// Matrix of `δ: C^p → C^{p+1}`, the transpose of `∂_{p+1}`.
pub fn coboundary_matrix(k: &SimplicialComplex, p: usize) -> RationalMatrix {
    k.boundary_matrix(p + 1).transpose()
}

/// `δf`, defined by `δf(c) = f(∂c)`. The coboundary of a top cochain is the
/// empty cochain of degree `n + 1`.
pub fn coboundary(k: &SimplicialComplex, f: &Cochain) -> Cochain {
    Cochain {
        dim: f.dim + 1,
        values: coboundary_matrix(k, f.dim).mul_vec(&f.values),
    }
}

/// Some `x` with `δx = h`, or `None` when `h` is not a coboundary. Degree 0
/// has no preimages, so `None` is returned there as well.
pub fn coboundary_preimage(k: &SimplicialComplex, h: &Cochain) -> Option<Cochain> {
    if h.dim == 0 {
        return None;
    }
    linalg::solve(&coboundary_matrix(k, h.dim - 1), &h.values).map(|values| Cochain {
        dim: h.dim - 1,
        values,
    })
}

/// Whether `h ∈ δC^{p-1}`; in degree 0 only the zero cochain qualifies.
pub fn is_coboundary(k: &SimplicialComplex, h: &Cochain) -> bool {
    if h.dim == 0 {
        h.is_zero()
    } else {
        coboundary_preimage(k, h).is_some()
    }
}

/// Evaluation `f(c) = Σ f(σ) c(σ)`.
pub fn pair(k: &SimplicialComplex, f: &Cochain, c: &Chain) -> Result<Rational> {
    if f.dim != c.dim() {
        return Err(Error::DegreeMismatch {
            expected: f.dim,
            found: c.dim(),
        });
    }
    let mut total = Rational::zero();
    for (s, q) in c.terms() {
        let i = k
            .index_of(s)
            .ok_or_else(|| Error::SimplexNotInComplex(s.vertices().to_vec()))?;
        total += &f.values[i] * q;
    }
    Ok(total)
}

/// Cycle representatives of a basis of `H_p = ker ∂_p / im ∂_{p+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyBasis {
    pub dim: usize,
    pub cycles: Vec<Chain>,
    pub betti: usize,
}

/// Cocycle representatives of a basis of `H^p = ker δ_p / im δ_{p-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyBasis {
    pub dim: usize,
    pub cocycles: Vec<Cochain>,
    pub betti: usize,
}

fn check_degree(k: &SimplicialComplex, p: usize) -> Result<()> {
    if p > k.dimension() {
        return Err(Error::InvalidParameter(format!(
            "degree {p} exceeds complex dimension {}",
            k.dimension()
        )));
    }
    Ok(())
}

pub fn homology(k: &SimplicialComplex, p: usize) -> Result<HomologyBasis> {
    check_degree(k, p)?;
    let cycles = linalg::nullspace(&k.boundary_matrix(p));
    let boundaries = SubspaceBasis::column_space(&k.boundary_matrix(p + 1));
    let reps = quotient_basis(&cycles, &boundaries)?;
    let cycles: Vec<Chain> = reps
        .vectors()
        .iter()
        .map(|v| Chain::from_vector(k, p, v))
        .collect();
    Ok(HomologyBasis {
        dim: p,
        betti: cycles.len(),
        cycles,
    })
}

pub fn cohomology(k: &SimplicialComplex, p: usize) -> Result<CohomologyBasis> {
    check_degree(k, p)?;
    let cocycles = linalg::nullspace(&coboundary_matrix(k, p));
    let coboundaries = if p == 0 {
        SubspaceBasis::empty(k.count(0))
    } else {
        SubspaceBasis::column_space(&coboundary_matrix(k, p - 1))
    };
    let reps = quotient_basis(&cocycles, &coboundaries)?;
    let cocycles: Vec<Cochain> = reps
        .into_vectors()
        .into_iter()
        .map(|values| Cochain { dim: p, values })
        .collect();
    Ok(CohomologyBasis {
        dim: p,
        betti: cocycles.len(),
        cocycles,
    })
}

/// Betti numbers `b_0..=b_n` over the rationals.
pub fn betti_numbers(k: &SimplicialComplex) -> Vec<usize> {
    (0..=k.dimension())
        .map(|p| {
            let rank_p = linalg::rank(&k.boundary_matrix(p));
            let rank_next = linalg::rank(&k.boundary_matrix(p + 1));
            k.count(p) - rank_p - rank_next
        })
        .collect()
}

/// A cocycle taking the prescribed values `phi` on the cycles of `basis`.
///
/// Solves `δf = 0, f(z_i) = phi_i`, which always has a solution because
/// every functional on homology extends to a cocycle.
pub fn functional_to_cocycle(
    k: &SimplicialComplex,
    basis: &HomologyBasis,
    phi: &[Rational],
) -> Result<Cochain> {
    if phi.len() != basis.betti {
        return Err(Error::DimensionMismatch {
            expected: basis.betti,
            found: phi.len(),
        });
    }
    let p = basis.dim;
    let delta = coboundary_matrix(k, p);
    let evaluations: Vec<Vector> = basis
        .cycles
        .iter()
        .map(|z| z.to_vector(k))
        .collect::<Result<_>>()?;
    let system = delta.vstack(&RationalMatrix::from_dense_rows(k.count(p), &evaluations));
    let mut rhs = linalg::zero_vector(delta.rows());
    rhs.extend(phi.iter().cloned());
    let values = linalg::solve(&system, &rhs).ok_or(Error::InconsistentSubspace)?;
    Ok(Cochain { dim: p, values })
}

/// Alexander-Whitney cup product:
/// `(f ∪ g)[v0..v_{p+q}] = f[v0..v_p] · g[v_p..v_{p+q}]`.
pub fn cup(k: &SimplicialComplex, f: &Cochain, g: &Cochain) -> Result<Cochain> {
    let (p, q) = (f.dim, g.dim);
    let n = k.dimension();
    if p + q > n {
        return Err(Error::InvalidParameter(format!(
            "cup product degree {} exceeds dimension {n}",
            p + q
        )));
    }
    let values = k
        .simplices(p + q)
        .iter()
        .map(|s| {
            let a = &f.values[k.index_of(&s.front(p)).expect("face closure")];
            if a.is_zero() {
                return Rational::zero();
            }
            a * &g.values[k.index_of(&s.back(p)).expect("face closure")]
        })
        .collect();
    Ok(Cochain { dim: p + q, values })
}
