//! Piecewise polynomial differential forms in barycentric coordinates.
//!
//! A [`PolyForm`] stores, for every maximal simplex (facet) of a complex, a
//! polynomial in the barycentric coordinates `λ_v` of that facet times
//! constant frames `dλ_{w1} ∧ … ∧ dλ_{wk}`.
//!
//! Normal form on a facet with vertices `u0 < u1 < … < ud`: both `λ_{u0}` and
//! `dλ_{u0}` are eliminated through `λ_{u0} = 1 - Σ λ_{ui}` and
//! `dλ_{u0} = -Σ dλ_{ui}`. What remains is a polynomial form in the affine
//! coordinates `λ_{u1}, …, λ_{ud}`, so two forms are equal exactly when their
//! normal forms are.
//!
//! Integration is metric free: a `k`-simplex is the standard simplex in its
//! own barycentric coordinates and
//! `∫ λ_{w0}^{a0} ⋯ λ_{wk}^{ak} dλ_{w1} ∧ ⋯ ∧ dλ_{wk} = a0! ⋯ ak! / (k + Σa)!`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cohomology::Cochain;
use crate::complex::{Chain, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{self, Rational};

/// Exponents over the local vertices `0..=d` of a facet and a frame bitmask
/// (bit `i` stands for `dλ_i`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Monomial {
    exps: Vec<u32>,
    frame: u32,
}

type Poly = BTreeMap<Monomial, Rational>;

fn accumulate(poly: &mut Poly, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match poly.entry(m) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn parity(count: u32) -> i64 {
    if count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of `dλ_i ∧ dλ_F` once sorted, or `None` if `i ∈ F`.
fn prepend_sign(frame: u32, i: usize) -> Option<i64> {
    if frame & (1 << i) != 0 {
        return None;
    }
    Some(parity((frame & ((1 << i) - 1)).count_ones()))
}

/// Sign of `dλ_A ∧ dλ_B` once sorted, or `None` if the frames overlap.
fn wedge_sign(a: u32, b: u32) -> Option<i64> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(parity(inversions))
}

/// Brings raw terms over local coordinates `0..=d` into normal form.
fn reduce(d: usize, raw: Poly) -> Poly {
    let mut out = Poly::new();
    for (m, c) in raw {
        let mut stage: Vec<(Monomial, Rational)> = Vec::new();
        if m.frame & 1 != 0 {
            // dλ_0 sits first in the sorted frame; replace it by -dλ_i.
            let rest = m.frame & !1;
            for i in 1..=d {
                if let Some(sign) = prepend_sign(rest, i) {
                    let frame = rest | (1 << i);
                    stage.push((
                        Monomial {
                            exps: m.exps.clone(),
                            frame,
                        },
                        -(&c * Rational::from_integer(sign.into())),
                    ));
                }
            }
        } else {
            stage.push((m, c));
        }
        for (mut m, c) in stage {
            let power = std::mem::take(&mut m.exps[0]);
            let mut current = Poly::from([(m, c)]);
            for _ in 0..power {
                let mut next = Poly::new();
                for (mm, cc) in current {
                    for i in 1..=d {
                        let mut bumped = mm.clone();
                        bumped.exps[i] += 1;
                        accumulate(&mut next, bumped, -cc.clone());
                    }
                    accumulate(&mut next, mm, cc);
                }
                current = next;
            }
            for (mm, cc) in current {
                accumulate(&mut out, mm, cc);
            }
        }
    }
    out
}

fn derivative(d: usize, poly: &Poly) -> Poly {
    let mut out = Poly::new();
    for (m, c) in poly {
        for i in 1..=d {
            let a = m.exps[i];
            if a == 0 {
                continue;
            }
            let Some(sign) = prepend_sign(m.frame, i) else {
                continue;
            };
            let mut exps = m.exps.clone();
            exps[i] -= 1;
            let coeff = c * Rational::from_integer((i64::from(a) * sign).into());
            accumulate(
                &mut out,
                Monomial {
                    exps,
                    frame: m.frame | (1 << i),
                },
                coeff,
            );
        }
    }
    out
}

fn multiply(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let Some(sign) = wedge_sign(ma.frame, mb.frame) else {
                continue;
            };
            let exps = ma.exps.iter().zip(&mb.exps).map(|(x, y)| x + y).collect();
            let coeff = ca * cb * Rational::from_integer(sign.into());
            accumulate(
                &mut out,
                Monomial {
                    exps,
                    frame: ma.frame | mb.frame,
                },
                coeff,
            );
        }
    }
    out
}

/// Pullback of a normal-form polynomial on a `d`-facet to the face at local
/// `positions`, in the face's own normal form.
fn restrict(poly: &Poly, positions: &[usize]) -> Poly {
    let inside: u32 = positions.iter().map(|&p| 1u32 << p).sum();
    let mut raw = Poly::new();
    for (m, c) in poly {
        if m.frame & !inside != 0 {
            continue;
        }
        if m.exps
            .iter()
            .enumerate()
            .any(|(i, &a)| a > 0 && inside & (1 << i) == 0)
        {
            continue;
        }
        let exps = positions.iter().map(|&p| m.exps[p]).collect();
        let frame = positions
            .iter()
            .enumerate()
            .filter(|(_, &p)| m.frame & (1 << p) != 0)
            .map(|(j, _)| 1u32 << j)
            .sum();
        accumulate(&mut raw, Monomial { exps, frame }, c.clone());
    }
    reduce(positions.len() - 1, raw)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Integral over the standard `k`-simplex of a normal-form `k`-form.
fn integrate_top(k: usize, poly: &Poly) -> Rational {
    let full: u32 = (1..=k).map(|i| 1u32 << i).sum();
    let mut total = Rational::zero();
    for (m, c) in poly {
        if m.frame != full {
            continue;
        }
        let total_degree: u32 = m.exps.iter().sum();
        let numer = m
            .exps
            .iter()
            .fold(BigInt::one(), |acc, &a| acc * factorial(a));
        let denom = factorial(k as u32 + total_degree);
        total += c * Rational::new(numer, denom);
    }
    total
}

/// Local position of each vertex of `sub` inside `facet`, if `sub ⊆ facet`.
fn positions_in(facet: &Simplex, vertices: &[usize]) -> Option<Vec<usize>> {
    vertices
        .iter()
        .map(|v| facet.vertices().binary_search(v).ok())
        .collect()
}

/// One term `coefficient · Π λ_v^{e_v} · dλ_{w1} ∧ … ∧ dλ_{wk}` in global
/// vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarycentricTerm {
    pub coefficient: Rational,
    pub monomial: BTreeMap<usize, u32>,
    pub frame: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Piece {
    facet: Simplex,
    terms: Poly,
}

impl Piece {
    fn dim(&self) -> usize {
        self.facet.dim()
    }
}

/// A piecewise polynomial differential form of fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyForm {
    degree: usize,
    pieces: Vec<Piece>,
}

impl PolyForm {
    pub fn zero(k: &SimplicialComplex, degree: usize) -> Self {
        Self {
            degree,
            pieces: k
                .facets()
                .iter()
                .map(|f| Piece {
                    facet: f.clone(),
                    terms: Poly::new(),
                })
                .collect(),
        }
    }

    /// The constant 0-form `c`.
    pub fn constant(k: &SimplicialComplex, c: Rational) -> Self {
        Self::global_term(k, c, &[], &[])
    }

    /// The hat function `λ_v`, continuous on the whole complex.
    pub fn hat(k: &SimplicialComplex, v: usize) -> Self {
        Self::global_term(k, Rational::one(), &[(v, 1)], &[])
    }

    /// `c · Π λ_v^{e_v} · dλ_{w1} ∧ … ∧ dλ_{wk}` built from global hat
    /// functions. Frame vertices may be given in any order; a repeated frame
    /// vertex gives the zero form.
    pub fn global_term(
        k: &SimplicialComplex,
        c: Rational,
        monomial: &[(usize, u32)],
        frame: &[usize],
    ) -> Self {
        let mut form = Self::zero(k, frame.len());
        for piece in &mut form.pieces {
            let mut raw = Poly::new();
            if let Some(m) = local_monomial(&piece.facet, monomial, frame) {
                accumulate(&mut raw, m.0, &c * Rational::from_integer(m.1.into()));
            }
            piece.terms = reduce(piece.dim(), raw);
        }
        form
    }

    /// Builds a form from explicit per-facet terms, normalizing them and
    /// checking tangential continuity. Facets not listed are zero.
    pub fn from_terms(
        k: &SimplicialComplex,
        degree: usize,
        pieces: Vec<(Simplex, Vec<BarycentricTerm>)>,
    ) -> Result<Self> {
        let mut form = Self::zero(k, degree);
        let mut seen = vec![false; form.pieces.len()];
        for (facet, terms) in pieces {
            let idx = form
                .pieces
                .iter()
                .position(|p| p.facet == facet)
                .ok_or_else(|| {
                    Error::Invalid(format!("{facet:?} is not a maximal simplex of the complex"))
                })?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::DuplicateSimplex(facet.vertices().to_vec()));
            }
            let mut raw = Poly::new();
            for t in terms {
                if t.frame.len() != degree {
                    return Err(Error::DegreeMismatch {
                        expected: degree,
                        found: t.frame.len(),
                    });
                }
                let mono: Vec<(usize, u32)> = t.monomial.iter().map(|(&v, &e)| (v, e)).collect();
                let outside = mono
                    .iter()
                    .filter(|(_, e)| *e > 0)
                    .map(|(v, _)| v)
                    .chain(&t.frame)
                    .find(|v| facet.vertices().binary_search(v).is_err());
                if let Some(v) = outside {
                    return Err(Error::Invalid(format!(
                        "term refers to vertex {v} outside simplex {facet:?}"
                    )));
                }
                if let Some((m, sign)) = local_monomial(&facet, &mono, &t.frame) {
                    accumulate(
                        &mut raw,
                        m,
                        &t.coefficient * Rational::from_integer(sign.into()),
                    );
                }
            }
            form.pieces[idx].terms = reduce(facet.dim(), raw);
        }
        form.check_continuity(k)?;
        Ok(form)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.iter().all(|p| p.terms.is_empty())
    }

    /// Number of stored terms over all facets.
    pub fn term_count(&self) -> usize {
        self.pieces.iter().map(|p| p.terms.len()).sum()
    }

    /// Normal-form terms of every facet, in global vertex ids.
    pub fn terms(&self) -> Vec<(Simplex, Vec<BarycentricTerm>)> {
        self.pieces
            .iter()
            .map(|p| {
                let ids = p.facet.vertices();
                let terms = p
                    .terms
                    .iter()
                    .map(|(m, c)| BarycentricTerm {
                        coefficient: c.clone(),
                        monomial: m
                            .exps
                            .iter()
                            .enumerate()
                            .filter(|(_, &e)| e > 0)
                            .map(|(i, &e)| (ids[i], e))
                            .collect(),
                        frame: (0..ids.len())
                            .filter(|i| m.frame & (1 << i) != 0)
                            .map(|i| ids[i])
                            .collect(),
                    })
                    .collect();
                (p.facet.clone(), terms)
            })
            .collect()
    }

    fn assert_compatible(&self, other: &PolyForm) {
        assert!(
            self.pieces.len() == other.pieces.len()
                && self
                    .pieces
                    .iter()
                    .zip(&other.pieces)
                    .all(|(a, b)| a.facet == b.facet),
            "forms live on different complexes"
        );
    }

    pub fn add(&self, other: &PolyForm) -> PolyForm {
        self.assert_compatible(other);
        assert_eq!(
            self.degree, other.degree,
            "adding forms of different degree"
        );
        let mut out = self.clone();
        for (piece, theirs) in out.pieces.iter_mut().zip(&other.pieces) {
            for (m, c) in &theirs.terms {
                accumulate(&mut piece.terms, m.clone(), c.clone());
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> PolyForm {
        let mut out = self.clone();
        for piece in &mut out.pieces {
            piece.terms = if factor.is_zero() {
                Poly::new()
            } else {
                piece
                    .terms
                    .iter()
                    .map(|(m, c)| (m.clone(), c * factor))
                    .collect()
            };
        }
        out
    }

    pub fn sub(&self, other: &PolyForm) -> PolyForm {
        self.add(&other.scale(&linalg::int(-1)))
    }

    /// Exterior derivative; a degree-`n` form maps to the zero form of degree
    /// `n + 1`.
    pub fn d(&self) -> PolyForm {
        PolyForm {
            degree: self.degree + 1,
            pieces: self
                .pieces
                .iter()
                .map(|p| Piece {
                    facet: p.facet.clone(),
                    terms: derivative(p.dim(), &p.terms),
                })
                .collect(),
        }
    }

    /// Exterior product. Terms of degree above a facet's dimension vanish.
    pub fn wedge(&self, other: &PolyForm) -> PolyForm {
        self.assert_compatible(other);
        PolyForm {
            degree: self.degree + other.degree,
            pieces: self
                .pieces
                .iter()
                .zip(&other.pieces)
                .map(|(a, b)| Piece {
                    facet: a.facet.clone(),
                    terms: multiply(&a.terms, &b.terms),
                })
                .collect(),
        }
    }

    fn restrict_from(&self, facet_index: usize, s: &Simplex) -> Poly {
        let piece = &self.pieces[facet_index];
        let positions = positions_in(&piece.facet, s.vertices()).expect("simplex inside facet");
        restrict(&piece.terms, &positions)
    }

    /// Checks that the restrictions to every shared face agree.
    pub fn check_continuity(&self, k: &SimplicialComplex) -> Result<()> {
        self.check_complex(k)?;
        for p in self.degree..=k.dimension() {
            for s in k.simplices(p) {
                let hosts = k.facets_containing(s).expect("simplex of the complex");
                if hosts.len() < 2 {
                    continue;
                }
                let first = self.restrict_from(hosts[0], s);
                if hosts[1..]
                    .iter()
                    .any(|&h| self.restrict_from(h, s) != first)
                {
                    return Err(Error::Discontinuous(s.vertices().to_vec()));
                }
            }
        }
        Ok(())
    }

    fn check_complex(&self, k: &SimplicialComplex) -> Result<()> {
        let matches = self.pieces.len() == k.facets().len()
            && self
                .pieces
                .iter()
                .zip(k.facets())
                .all(|(p, f)| &p.facet == f);
        if matches {
            Ok(())
        } else {
            Err(Error::Invalid(
                "form was built on a different complex".into(),
            ))
        }
    }

    /// `∫_s ω` over one simplex oriented by increasing vertex order.
    pub fn integrate_simplex(&self, k: &SimplicialComplex, s: &Simplex) -> Result<Rational> {
        self.check_complex(k)?;
        if s.dim() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: s.dim(),
            });
        }
        let hosts = k
            .facets_containing(s)
            .ok_or_else(|| Error::SimplexNotInComplex(s.vertices().to_vec()))?;
        let poly = self.restrict_from(hosts[0], s);
        Ok(integrate_top(s.dim(), &poly))
    }

    pub fn to_file(&self) -> FormFile {
        FormFile {
            degree: self.degree,
            pieces: self
                .terms()
                .into_iter()
                .filter(|(_, t)| !t.is_empty())
                .map(|(simplex, terms)| PieceFile {
                    simplex: simplex.vertices().to_vec(),
                    terms: terms
                        .into_iter()
                        .map(|t| TermFile {
                            coefficient: linalg::format_rational(&t.coefficient),
                            monomial: t.monomial,
                            frame: t.frame,
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_file(k: &SimplicialComplex, file: &FormFile) -> Result<Self> {
        let pieces = file
            .pieces
            .iter()
            .map(|p| {
                let simplex = Simplex::new(p.simplex.clone())?;
                let terms = p
                    .terms
                    .iter()
                    .map(|t| {
                        Ok(BarycentricTerm {
                            coefficient: linalg::parse_rational(&t.coefficient)?,
                            monomial: t.monomial.clone(),
                            frame: t.frame.clone(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((simplex, terms))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(k, file.degree, pieces)
    }
}

/// Local monomial of a global term on `facet` and the sign from sorting the
/// frame; `None` when the term vanishes there.
fn local_monomial(
    facet: &Simplex,
    monomial: &[(usize, u32)],
    frame: &[usize],
) -> Option<(Monomial, i64)> {
    let mut exps = vec![0u32; facet.vertices().len()];
    for &(v, e) in monomial {
        if e == 0 {
            continue;
        }
        let i = facet.vertices().binary_search(&v).ok()?;
        exps[i] += e;
    }
    let positions = positions_in(facet, frame)?;
    let mut mask = 0u32;
    let mut sign = 1;
    for &i in &positions {
        sign *= prepend_sign(mask, i)?;
        mask |= 1 << i;
    }
    // Built by prepending, so the frame was read right to left; undo that.
    let len = positions.len() as u32;
    if (len * len.saturating_sub(1) / 2) % 2 == 1 {
        sign = -sign;
    }
    Some((Monomial { exps, frame: mask }, sign))
}

/// Serialized form: per-facet term lists in global vertex ids with rationals
/// written as `"num/den"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFile {
    pub degree: usize,
    pub pieces: Vec<PieceFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceFile {
    pub simplex: Vec<usize>,
    pub terms: Vec<TermFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub coefficient: String,
    #[serde(default)]
    pub monomial: BTreeMap<usize, u32>,
    #[serde(default)]
    pub frame: Vec<usize>,
}

pub fn exterior_derivative(omega: &PolyForm) -> PolyForm {
    omega.d()
}

pub fn wedge(alpha: &PolyForm, beta: &PolyForm) -> PolyForm {
    alpha.wedge(beta)
}

/// Whitney lift `W(f) = Σ_σ f(σ) W_σ` with
/// `W_σ = p! Σ_j (-1)^j λ_{vj} dλ_{v0} ∧ … (omit j) … ∧ dλ_{vp}`.
pub fn whitney(k: &SimplicialComplex, f: &Cochain) -> PolyForm {
    let p = f.dim();
    let mut form = PolyForm::zero(k, p);
    let scale = Rational::from_integer(factorial(p as u32));
    let mut raw: Vec<Poly> = vec![Poly::new(); form.pieces.len()];
    for (sigma, value) in k.simplices(p).iter().zip(f.values()) {
        if value.is_zero() {
            continue;
        }
        let weight = value * &scale;
        for &fi in k.facets_containing(sigma).expect("simplex of the complex") {
            let facet = &form.pieces[fi].facet;
            let pos = positions_in(facet, sigma.vertices()).expect("face of facet");
            let frame_all: u32 = pos.iter().map(|&i| 1u32 << i).sum();
            for (j, &pj) in pos.iter().enumerate() {
                let mut exps = vec![0u32; facet.vertices().len()];
                exps[pj] = 1;
                let sign = if j % 2 == 0 { 1 } else { -1 };
                accumulate(
                    &mut raw[fi],
                    Monomial {
                        exps,
                        frame: frame_all & !(1 << pj),
                    },
                    &weight * Rational::from_integer(sign.into()),
                );
            }
        }
    }
    for (piece, r) in form.pieces.iter_mut().zip(raw) {
        piece.terms = reduce(piece.facet.dim(), r);
    }
    form
}

/// `∫_c ω`, linear in the chain.
pub fn integrate(k: &SimplicialComplex, omega: &PolyForm, c: &Chain) -> Result<Rational> {
    if c.dim() != omega.degree() {
        return Err(Error::DegreeMismatch {
            expected: omega.degree(),
            found: c.dim(),
        });
    }
    let mut total = Rational::zero();
    for (s, q) in c.terms() {
        total += omega.integrate_simplex(k, s)? * q;
    }
    Ok(total)
}

/// The de Rham map: the cochain of integrals over every `p`-simplex.
pub fn derham_map(k: &SimplicialComplex, omega: &PolyForm) -> Result<Cochain> {
    let values = k
        .simplices(omega.degree())
        .iter()
        .map(|s| omega.integrate_simplex(k, s))
        .collect::<Result<Vec<_>>>()?;
    Cochain::new(k, omega.degree(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::coboundary;
    use crate::complex::CanonicalComplex;
    use crate::linalg::{int, rat};

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::from_maximal(3, vec![vec![0, 1, 2]]).unwrap()
    }

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn derivative_of_constant_vanishes() {
        let k = CanonicalComplex::Torus.build().unwrap();
        let one = PolyForm::constant(&k, rat(7, 3));
        assert!(one.d().is_zero());
        assert_eq!(one.d().degree(), 1);
    }

    #[test]
    fn derivative_of_hat_is_dlambda() {
        let k = CanonicalComplex::Sphere2.build().unwrap();
        for v in 0..4 {
            let dl = PolyForm::global_term(&k, int(1), &[], &[v]);
            assert_eq!(PolyForm::hat(&k, v).d(), dl);
        }
    }

    #[test]
    fn derivative_of_lambda0_dlambda1() {
        let k = triangle();
        let form = PolyForm::global_term(&k, int(1), &[(0, 1)], &[1]);
        let expected = PolyForm::global_term(&k, int(1), &[], &[1, 2]);
        assert_eq!(form.d(), expected);
        // Same thing written as dλ0 ∧ dλ1.
        assert_eq!(PolyForm::global_term(&k, int(1), &[], &[0, 1]), expected);
    }

    #[test]
    fn repeated_frame_vertex_vanishes() {
        let k = triangle();
        assert!(PolyForm::global_term(&k, int(1), &[], &[1, 1]).is_zero());
        let dl1 = PolyForm::global_term(&k, int(1), &[], &[1]);
        assert!(dl1.wedge(&dl1).is_zero());
    }

    #[test]
    fn frame_order_gives_sign() {
        let k = CanonicalComplex::Sphere3.build().unwrap();
        let a = PolyForm::global_term(&k, int(1), &[], &[1, 2, 3]);
        let b = PolyForm::global_term(&k, int(1), &[], &[2, 1, 3]);
        let c = PolyForm::global_term(&k, int(1), &[], &[3, 1, 2]);
        assert_eq!(a, b.scale(&int(-1)));
        assert_eq!(a, c);
    }

    #[test]
    fn barycentric_sum_is_one() {
        let k = triangle();
        let sum = (0..3).fold(PolyForm::zero(&k, 0), |acc, v| {
            acc.add(&PolyForm::hat(&k, v))
        });
        assert_eq!(sum, PolyForm::constant(&k, int(1)));
    }

    #[test]
    fn edge_integrals() {
        let k = SimplicialComplex::from_maximal(2, vec![vec![0, 1]]).unwrap();
        let dl1 = PolyForm::global_term(&k, int(1), &[], &[1]);
        assert_eq!(dl1.integrate_simplex(&k, &s(&[0, 1])).unwrap(), int(1));
        let dl0 = PolyForm::global_term(&k, int(1), &[], &[0]);
        assert_eq!(dl0.integrate_simplex(&k, &s(&[0, 1])).unwrap(), int(-1));
        let zero = PolyForm::zero(&k, 1);
        assert_eq!(zero.integrate_simplex(&k, &s(&[0, 1])).unwrap(), int(0));
        // ∫ λ1^2 dλ1 = 1/3
        let sq = PolyForm::global_term(&k, int(1), &[(1, 2)], &[1]);
        assert_eq!(sq.integrate_simplex(&k, &s(&[0, 1])).unwrap(), rat(1, 3));
    }

    #[test]
    fn dirichlet_on_triangle() {
        let k = triangle();
        let area = PolyForm::global_term(&k, int(1), &[], &[1, 2]);
        assert_eq!(
            area.integrate_simplex(&k, &s(&[0, 1, 2])).unwrap(),
            rat(1, 2)
        );
        // λ0 λ1 λ2 dλ1∧dλ2 integrates to 1!1!1!/5! = 1/120
        let bubble = PolyForm::global_term(&k, int(1), &[(0, 1), (1, 1), (2, 1)], &[1, 2]);
        assert_eq!(
            bubble.integrate_simplex(&k, &s(&[0, 1, 2])).unwrap(),
            rat(1, 120)
        );
    }

    #[test]
    fn whitney_of_vertex_indicator_is_hat() {
        let k = CanonicalComplex::Torus.build().unwrap();
        let mut values = linalg::zero_vector(k.count(0));
        values[4] = int(1);
        let f = Cochain::new(&k, 0, values).unwrap();
        assert_eq!(whitney(&k, &f), PolyForm::hat(&k, 4));
    }

    #[test]
    fn whitney_edge_derivative() {
        let k = SimplicialComplex::from_maximal(2, vec![vec![0, 1]]).unwrap();
        let k2 = triangle();
        for k in [k, k2] {
            let mut values = linalg::zero_vector(k.count(1));
            values[0] = int(1); // edge [0,1]
            let f = Cochain::new(&k, 1, values).unwrap();
            let w = whitney(&k, &f);
            let expected = PolyForm::global_term(&k, int(2), &[], &[0, 1]);
            assert_eq!(w.d(), expected);
        }
    }

    #[test]
    fn whitney_normalization() {
        for c in [
            CanonicalComplex::Sphere3,
            CanonicalComplex::Torus,
            CanonicalComplex::Circle(4),
        ] {
            let k = c.build().unwrap();
            for p in 0..=k.dimension() {
                for (i, sigma) in k.simplices(p).iter().enumerate() {
                    let mut values = linalg::zero_vector(k.count(p));
                    values[i] = int(1);
                    let w = whitney(&k, &Cochain::new(&k, p, values).unwrap());
                    assert_eq!(
                        w.integrate_simplex(&k, sigma).unwrap(),
                        int(1),
                        "{c} {sigma:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn whitney_commutes_with_d_on_sphere() {
        let k = CanonicalComplex::Sphere2.build().unwrap();
        let f = Cochain::new(&k, 0, vec![int(3), rat(-1, 2), int(0), int(5)]).unwrap();
        assert_eq!(whitney(&k, &coboundary(&k, &f)), whitney(&k, &f).d());
    }

    #[test]
    fn continuity_is_checked_on_load() {
        let k = SimplicialComplex::from_maximal(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let term = |v: usize| BarycentricTerm {
            coefficient: int(1),
            monomial: BTreeMap::from([(v, 1)]),
            frame: vec![],
        };
        // λ1 only on the first triangle jumps across edge [1,2].
        let bad = PolyForm::from_terms(&k, 0, vec![(s(&[0, 1, 2]), vec![term(1)])]);
        assert!(matches!(bad, Err(Error::Discontinuous(_))));
        let good = PolyForm::from_terms(
            &k,
            0,
            vec![
                (s(&[0, 1, 2]), vec![term(1)]),
                (s(&[1, 2, 3]), vec![term(1)]),
            ],
        )
        .unwrap();
        assert_eq!(good, PolyForm::hat(&k, 1));
    }

    #[test]
    fn file_round_trip() {
        let k = CanonicalComplex::Torus.build().unwrap();
        let form = PolyForm::global_term(&k, rat(-3, 4), &[(4, 2), (5, 1)], &[8]);
        let json = serde_json::to_string(&form.to_file()).unwrap();
        let back: FormFile = serde_json::from_str(&json).unwrap();
        assert_eq!(PolyForm::from_file(&k, &back).unwrap(), form);
    }

    #[test]
    fn load_rejects_bad_terms() {
        let k = triangle();
        let wrong_degree = FormFile {
            degree: 1,
            pieces: vec![PieceFile {
                simplex: vec![0, 1, 2],
                terms: vec![TermFile {
                    coefficient: "1".into(),
                    monomial: BTreeMap::new(),
                    frame: vec![],
                }],
            }],
        };
        assert!(matches!(
            PolyForm::from_file(&k, &wrong_degree),
            Err(Error::DegreeMismatch { .. })
        ));
        let not_facet = FormFile {
            degree: 0,
            pieces: vec![PieceFile {
                simplex: vec![0, 1],
                terms: vec![],
            }],
        };
        assert!(PolyForm::from_file(&k, &not_facet).is_err());
    }
}
