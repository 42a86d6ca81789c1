//! Periods of closed forms and the constructive de Rham theorems.
//!
//! Everything is decided by exact linear algebra inside the Whitney complex:
//! injectivity by solving `δy = Φ(ω)`, surjectivity by lifting a cocycle with
//! prescribed values, and product compatibility by comparing `Φ(α ∧ β)` with
//! `Φ(α) ∪ Φ(β)` up to a coboundary.

use num_traits::Zero;

use crate::cohomology::{
    self, coboundary_preimage, cohomology, cup, functional_to_cocycle, homology, Cochain,
    HomologyBasis,
};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::forms::{derham_map, integrate, whitney, PolyForm};
use crate::linalg::{self, Rational, RationalMatrix, Vector};

/// Periods of a closed form against an explicit homology basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodReport {
    pub dim: usize,
    pub homology_basis: HomologyBasis,
    pub periods: Vector,
}

/// Closed Whitney forms whose classes form a basis of the degree-`p` de Rham
/// group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeRhamBasis {
    pub dim: usize,
    pub closed_forms: Vec<PolyForm>,
    pub betti: usize,
}

fn require_closed(omega: &PolyForm) -> Result<()> {
    let d = omega.d();
    if d.is_zero() {
        Ok(())
    } else {
        Err(Error::NotClosed {
            degree: omega.degree(),
            derivative: Box::new(d),
        })
    }
}

fn check_form(k: &SimplicialComplex, omega: &PolyForm) -> Result<()> {
    omega.check_continuity(k)?;
    if omega.degree() > k.dimension() {
        return Err(Error::InvalidParameter(format!(
            "degree {} exceeds complex dimension {}",
            omega.degree(),
            k.dimension()
        )));
    }
    Ok(())
}

/// Periods of `omega` against the canonical homology basis of its degree.
pub fn periods(k: &SimplicialComplex, omega: &PolyForm) -> Result<PeriodReport> {
    check_form(k, omega)?;
    let basis = homology(k, omega.degree())?;
    periods_against(k, omega, basis)
}

/// Periods of a closed form against a caller-supplied basis of cycles.
pub fn periods_against(
    k: &SimplicialComplex,
    omega: &PolyForm,
    homology_basis: HomologyBasis,
) -> Result<PeriodReport> {
    if homology_basis.dim != omega.degree() {
        return Err(Error::DegreeMismatch {
            expected: omega.degree(),
            found: homology_basis.dim,
        });
    }
    require_closed(omega)?;
    let periods = homology_basis
        .cycles
        .iter()
        .map(|z| integrate(k, omega, z))
        .collect::<Result<Vec<_>>>()?;
    Ok(PeriodReport {
        dim: omega.degree(),
        homology_basis,
        periods,
    })
}

/// A form `β` with `dβ = ω` when every period of `ω` vanishes, `None`
/// otherwise.
///
/// `ω` must be closed and lie in the Whitney subspace, i.e. `ω = W(Φ(ω))`.
/// Degree 0 is rejected: there are no forms of degree `-1`.
pub fn find_primitive(k: &SimplicialComplex, omega: &PolyForm) -> Result<Option<PolyForm>> {
    check_form(k, omega)?;
    require_closed(omega)?;
    if omega.degree() == 0 {
        return Err(Error::InvalidParameter(
            "0-forms have no primitives (forms of degree -1 are zero)".into(),
        ));
    }
    let cochain = derham_map(k, omega)?;
    if whitney(k, &cochain) != *omega {
        return Err(Error::UnsupportedFormSpace);
    }
    let Some(y) = coboundary_preimage(k, &cochain) else {
        return Ok(None);
    };
    let beta = whitney(k, &y);
    debug_assert_eq!(beta.d(), *omega);
    Ok(Some(beta))
}

/// A closed form whose periods against `homology(k, p)` are exactly `phi`.
pub fn realize_periods(k: &SimplicialComplex, p: usize, phi: &[Rational]) -> Result<PolyForm> {
    let basis = homology(k, p)?;
    realize_periods_against(k, &basis, phi)
}

pub fn realize_periods_against(
    k: &SimplicialComplex,
    basis: &HomologyBasis,
    phi: &[Rational],
) -> Result<PolyForm> {
    let f = functional_to_cocycle(k, basis, phi)?;
    Ok(whitney(k, &f))
}

/// Whitney lifts of the cohomology representatives in degree `p`.
pub fn derham_basis(k: &SimplicialComplex, p: usize) -> Result<DeRhamBasis> {
    let h = cohomology(k, p)?;
    Ok(DeRhamBasis {
        dim: p,
        betti: h.betti,
        closed_forms: h.cocycles.iter().map(|f| whitney(k, f)).collect(),
    })
}

/// Matrix with entry `(i, j) = ∫_{z_j} ω_i`.
pub fn period_matrix(
    k: &SimplicialComplex,
    forms: &[PolyForm],
    homology_basis: &HomologyBasis,
) -> Result<RationalMatrix> {
    let rows = forms
        .iter()
        .map(|w| {
            homology_basis
                .cycles
                .iter()
                .map(|z| integrate(k, w, z))
                .collect::<Result<Vector>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalMatrix::from_dense_rows(homology_basis.betti, &rows))
}

/// Top-dimensional pairings against the fundamental cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopPairing {
    /// `∫_[M] α ∧ β`.
    pub wedge: Rational,
    /// `(Φ(α) ∪ Φ(β))[M]`.
    pub cup: Rational,
}

impl TopPairing {
    pub fn agree(&self) -> bool {
        self.wedge == self.cup
    }
}

/// Outcome of comparing the wedge product with the cup product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingVerdict {
    pub degrees: (usize, usize),
    /// `Φ(α ∧ β) - Φ(α) ∪ Φ(β)`; `None` when `p + q > n`, where both
    /// products vanish.
    pub difference: Option<Cochain>,
    /// Whether the difference is a coboundary.
    pub cohomologous: bool,
    /// Some `x` with `δx` equal to the difference.
    pub witness: Option<Cochain>,
    /// Present for closed oriented manifolds when `p + q = n`.
    pub top_pairing: Option<TopPairing>,
}

/// Checks that integration turns the wedge product into the cup product at
/// the level of cohomology.
pub fn ring_check(k: &SimplicialComplex, alpha: &PolyForm, beta: &PolyForm) -> Result<RingVerdict> {
    check_form(k, alpha)?;
    check_form(k, beta)?;
    require_closed(alpha)?;
    require_closed(beta)?;
    let (p, q) = (alpha.degree(), beta.degree());
    let n = k.dimension();
    if p + q > n {
        return Ok(RingVerdict {
            degrees: (p, q),
            difference: None,
            cohomologous: true,
            witness: None,
            top_pairing: None,
        });
    }
    let product = alpha.wedge(beta);
    let f = derham_map(k, alpha)?;
    let g = derham_map(k, beta)?;
    let fg = cup(k, &f, &g)?;
    let difference = derham_map(k, &product)?.sub(&fg);
    let witness = coboundary_preimage(k, &difference);
    let cohomologous = if difference.dim() == 0 {
        difference.is_zero()
    } else {
        witness.is_some()
    };
    let top_pairing = if p + q == n && k.is_oriented() {
        let fundamental = k.fundamental_cycle()?;
        Some(TopPairing {
            wedge: integrate(k, &product, &fundamental)?,
            cup: cohomology::pair(k, &fg, &fundamental)?,
        })
    } else {
        None
    };
    Ok(RingVerdict {
        degrees: (p, q),
        difference: Some(difference),
        cohomologous,
        witness,
        top_pairing,
    })
}

/// Whether a square period matrix is invertible.
pub fn is_invertible(m: &RationalMatrix) -> bool {
    m.rows() == m.cols() && linalg::determinant(m).is_some_and(|d| !d.is_zero())
}
