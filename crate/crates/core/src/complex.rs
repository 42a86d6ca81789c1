//! Simplicial complexes, oriented chains and the boundary operator.
//!
//! Every simplex is stored with strictly increasing vertex ids, which orients
//! it. A reversed orientation is written as a `-1` coefficient in a [`Chain`].

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::io::Read;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix, Vector};

/// An oriented simplex given by its strictly increasing vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Simplex(Vec<usize>);

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl TryFrom<Vec<usize>> for Simplex {
    type Error = Error;

    fn try_from(vertices: Vec<usize>) -> Result<Self> {
        Simplex::new(vertices)
    }
}

impl From<Simplex> for Vec<usize> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl Simplex {
    /// Sorts the vertex ids; repeated or missing vertices are an error.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.is_empty() {
            return Err(Error::Invalid("simplex with no vertices".into()));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid(format!(
                "repeated vertex in simplex {vertices:?}"
            )));
        }
        Ok(Self(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The facet obtained by dropping the vertex at position `i`.
    pub fn facet(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }

    /// `(sign, facet)` pairs of the alternating-face boundary.
    pub fn boundary_terms(&self) -> impl Iterator<Item = (i64, Simplex)> + '_ {
        let count = if self.dim() == 0 { 0 } else { self.0.len() };
        (0..count).map(move |i| (if i % 2 == 0 { 1 } else { -1 }, self.facet(i)))
    }

    /// Front face `[v0..=v_k]`.
    pub fn front(&self, k: usize) -> Simplex {
        Simplex(self.0[..=k].to_vec())
    }

    /// Back face `[v_k..]`.
    pub fn back(&self, k: usize) -> Simplex {
        Simplex(self.0[k..].to_vec())
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }
}

/// Per-dimension simplex counts and manifold flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub vertex_count: usize,
    pub dimension: usize,
    pub simplex_counts: Vec<usize>,
    pub euler_characteristic: i64,
    pub is_closed_manifold: bool,
    pub is_oriented: bool,
}

/// A finite simplicial complex, closed under faces.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Simplex>>,
    facets: Vec<Simplex>,
    // For each simplex, the facets that contain it (ascending).
    cofacets: Vec<Vec<Vec<usize>>>,
    closed_manifold: bool,
    orientation: Option<Vec<i64>>,
}

impl SimplicialComplex {
    /// Builds the face closure of the given simplices on vertices
    /// `0..vertex_count`. Every vertex id below `vertex_count` is a 0-simplex.
    pub fn from_maximal(vertex_count: usize, maximal: Vec<Vec<usize>>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Invalid("complex has no vertices".into()));
        }
        let mut listed = BTreeSet::new();
        for raw in maximal {
            let s = Simplex::new(raw)?;
            if let Some(&v) = s.vertices().iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                });
            }
            if !listed.insert(s.clone()) {
                return Err(Error::DuplicateSimplex(s.0));
            }
        }
        let top = listed.iter().map(Simplex::dim).max().unwrap_or(0);
        let mut by_dim: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); top + 1];
        for v in 0..vertex_count {
            by_dim[0].insert(Simplex(vec![v]));
        }
        for s in listed {
            insert_with_faces(&mut by_dim, s);
        }
        let simplices: Vec<Vec<Simplex>> = by_dim
            .into_iter()
            .map(|set| set.into_iter().collect())
            .collect();
        Ok(Self::assemble(vertex_count, simplices))
    }

    fn assemble(vertex_count: usize, simplices: Vec<Vec<Simplex>>) -> Self {
        let n = simplices.len() - 1;
        // A simplex is maximal when no coface of one dimension higher exists.
        let mut has_coface: Vec<Vec<bool>> =
            simplices.iter().map(|l| vec![false; l.len()]).collect();
        for p in 1..=n {
            for s in &simplices[p] {
                for (_, f) in s.boundary_terms() {
                    let i = simplices[p - 1].binary_search(&f).expect("face closure");
                    has_coface[p - 1][i] = true;
                }
            }
        }
        let facets: Vec<Simplex> = (0..=n)
            .flat_map(|p| {
                simplices[p]
                    .iter()
                    .zip(&has_coface[p])
                    .filter(|(_, &c)| !c)
                    .map(|(s, _)| s.clone())
            })
            .collect();

        let mut cofacets: Vec<Vec<Vec<usize>>> = simplices
            .iter()
            .map(|l| vec![Vec::new(); l.len()])
            .collect();
        for (fi, facet) in facets.iter().enumerate() {
            for sub in subsets(facet.vertices()) {
                let s = Simplex(sub);
                let p = s.dim();
                let i = simplices[p].binary_search(&s).expect("face closure");
                cofacets[p][i].push(fi);
            }
        }

        let mut complex = Self {
            vertex_count,
            simplices,
            facets,
            cofacets,
            closed_manifold: false,
            orientation: None,
        };
        complex.closed_manifold = complex.check_closed_manifold();
        if complex.closed_manifold {
            complex.orientation = complex.propagate_orientation();
        }
        complex
    }

    fn check_closed_manifold(&self) -> bool {
        let n = self.dimension();
        if n == 0 || self.facets.iter().any(|f| f.dim() != n) {
            return false;
        }
        self.cofacets[n - 1].iter().all(|c| c.len() == 2)
    }

    // Signs on top simplices so that every (n-1)-face cancels; `None` on a
    // contradiction. Each connected component is seeded with +1.
    fn propagate_orientation(&self) -> Option<Vec<i64>> {
        let n = self.dimension();
        let tops = &self.simplices[n];
        let mut incidence: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.simplices[n - 1].len()];
        for (t, s) in tops.iter().enumerate() {
            for (sign, f) in s.boundary_terms() {
                let i = self.index_of(&f).expect("face closure");
                incidence[i].push((t, sign));
            }
        }
        let mut faces_of: Vec<Vec<usize>> = vec![Vec::new(); tops.len()];
        for (fi, inc) in incidence.iter().enumerate() {
            for &(t, _) in inc {
                faces_of[t].push(fi);
            }
        }
        let mut orient = vec![0i64; tops.len()];
        for seed in 0..tops.len() {
            if orient[seed] != 0 {
                continue;
            }
            orient[seed] = 1;
            let mut queue = VecDeque::from([seed]);
            while let Some(t) = queue.pop_front() {
                for &fi in &faces_of[t] {
                    let inc = &incidence[fi];
                    let (a, b) = (inc[0], inc[1]);
                    let ((me, my_sign), (other, other_sign)) =
                        if a.0 == t { (a, b) } else { (b, a) };
                    // orient[me]*my_sign + orient[other]*other_sign == 0
                    let want = -orient[me] * my_sign * other_sign;
                    match orient[other] {
                        0 => {
                            orient[other] = want;
                            queue.push_back(other);
                        }
                        s if s != want => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(orient)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Top dimension `n`.
    pub fn dimension(&self) -> usize {
        self.simplices.len() - 1
    }

    /// Sorted `p`-simplices; empty outside `0..=n`.
    pub fn simplices(&self, p: usize) -> &[Simplex] {
        self.simplices.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, p: usize) -> usize {
        self.simplices(p).len()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.simplices(s.dim()).binary_search(s).ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    /// Maximal simplices, ordered by dimension then lexicographically.
    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Indices into [`facets`](Self::facets) of the facets containing `s`.
    pub fn facets_containing(&self, s: &Simplex) -> Option<&[usize]> {
        let i = self.index_of(s)?;
        Some(&self.cofacets[s.dim()][i])
    }

    pub fn is_closed_manifold(&self) -> bool {
        self.closed_manifold
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    /// Orientation sign of each top simplex, when oriented.
    pub fn orientation(&self) -> Option<&[i64]> {
        self.orientation.as_deref()
    }

    pub fn is_pure(&self) -> bool {
        let n = self.dimension();
        self.facets.iter().all(|f| f.dim() == n)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(p, l)| {
                if p % 2 == 0 {
                    l.len() as i64
                } else {
                    -(l.len() as i64)
                }
            })
            .sum()
    }

    pub fn summary(&self) -> ComplexSummary {
        ComplexSummary {
            vertex_count: self.vertex_count,
            dimension: self.dimension(),
            simplex_counts: self.simplices.iter().map(Vec::len).collect(),
            euler_characteristic: self.euler_characteristic(),
            is_closed_manifold: self.closed_manifold,
            is_oriented: self.is_oriented(),
        }
    }

    /// Matrix of `∂: C_p → C_{p-1}` in the sorted simplex bases.
    ///
    /// `p = 0` gives a matrix with no rows and `p = n + 1` one with no
    /// columns, since `C_{-1} = C_{n+1} = 0`.
    ///
    /// # Panics
    /// When `p > n + 1`.
    pub fn boundary_matrix(&self, p: usize) -> RationalMatrix {
        assert!(
            p <= self.dimension() + 1,
            "boundary_matrix: p = {p} out of range"
        );
        let rows = if p == 0 { 0 } else { self.count(p - 1) };
        let cols = self.count(p);
        if p == 0 {
            return RationalMatrix::zeros(rows, cols);
        }
        let lower = &self.simplices[p - 1];
        let triplets = self.simplices(p).iter().enumerate().flat_map(|(j, s)| {
            s.boundary_terms().map(move |(sign, f)| {
                let i = lower.binary_search(&f).expect("face closure");
                (i, j, Rational::from_integer(sign.into()))
            })
        });
        RationalMatrix::from_triplets(rows, cols, triplets)
    }

    /// The coherently oriented sum of top simplices.
    pub fn fundamental_cycle(&self) -> Result<Chain> {
        if !self.closed_manifold {
            return Err(Error::NotClosedManifold);
        }
        let orient = self.orientation.as_ref().ok_or(Error::NotOrientable)?;
        let n = self.dimension();
        Ok(Chain {
            dim: n,
            coeffs: self.simplices[n]
                .iter()
                .zip(orient)
                .map(|(s, &o)| (s.clone(), Rational::from_integer(o.into())))
                .collect(),
        })
    }

    /// `∂c`, linear extension of the alternating-face rule. The boundary of a
    /// 0-chain is the empty chain.
    pub fn boundary(&self, c: &Chain) -> Result<Chain> {
        for s in c.coeffs.keys() {
            if !self.contains(s) {
                return Err(Error::SimplexNotInComplex(s.0.clone()));
            }
        }
        let mut out = Chain::zero(c.dim.saturating_sub(1));
        if c.dim == 0 {
            return Ok(out);
        }
        for (s, q) in &c.coeffs {
            for (sign, f) in s.boundary_terms() {
                out.add_term(f, &(q * Rational::from_integer(sign.into())));
            }
        }
        Ok(out)
    }
}

fn insert_with_faces(by_dim: &mut [BTreeSet<Simplex>], s: Simplex) {
    let p = s.dim();
    if by_dim[p].contains(&s) {
        return;
    }
    if p > 0 {
        for i in 0..=p {
            insert_with_faces(by_dim, s.facet(i));
        }
    }
    by_dim[p].insert(s);
}

/// Nonempty subsets of a sorted vertex list, each sorted.
fn subsets(vertices: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (1u32..(1 << vertices.len())).map(move |mask| {
        vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// A `p`-chain: rational combination of oriented `p`-simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    dim: usize,
    coeffs: BTreeMap<Simplex, Rational>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn simplex(s: Simplex) -> Self {
        Self {
            dim: s.dim(),
            coeffs: BTreeMap::from([(s, Rational::one())]),
        }
    }

    /// Builds a chain from `(simplex, coefficient)` pairs; zeros are dropped.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Simplex, Rational)>,
    {
        let mut c = Self::zero(dim);
        for (s, q) in terms {
            if s.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: s.dim(),
                });
            }
            c.add_term(s, &q);
        }
        Ok(c)
    }

    /// Chain with coordinates `v` in the sorted `p`-simplex basis of `k`.
    pub fn from_vector(k: &SimplicialComplex, dim: usize, v: &[Rational]) -> Self {
        assert_eq!(v.len(), k.count(dim), "coordinate vector length");
        Self {
            dim,
            coeffs: k
                .simplices(dim)
                .iter()
                .zip(v)
                .filter(|(_, q)| !q.is_zero())
                .map(|(s, q)| (s.clone(), q.clone()))
                .collect(),
        }
    }

    pub fn to_vector(&self, k: &SimplicialComplex) -> Result<Vector> {
        let mut v = vec![Rational::zero(); k.count(self.dim)];
        for (s, q) in &self.coeffs {
            let i = k
                .index_of(s)
                .ok_or_else(|| Error::SimplexNotInComplex(s.0.clone()))?;
            v[i] = q.clone();
        }
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, s: &Simplex) -> Rational {
        self.coeffs.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, s: Simplex, q: &Rational) {
        if q.is_zero() {
            return;
        }
        match self.coeffs.entry(s) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(q.clone());
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.dim, other.dim, "adding chains of different dimension");
        let mut out = self.clone();
        for (s, q) in &other.coeffs {
            out.add_term(s.clone(), q);
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Chain {
        let mut out = Chain::zero(self.dim);
        for (s, q) in &self.coeffs {
            out.add_term(s.clone(), &(q * factor));
        }
        out
    }
}

/// Built-in triangulations used as the test corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CanonicalComplex {
    /// Boundary of a `k`-gon, `k ≥ 3`.
    Circle(usize),
    /// Path with `k ≥ 1` edges.
    Interval(usize),
    /// Boundary of the tetrahedron.
    Sphere2,
    /// Boundary of the 4-simplex.
    Sphere3,
    /// 3×3 grid with wraparound: 9 vertices, 27 edges, 18 triangles.
    Torus,
    /// The 7-vertex torus.
    Torus7,
    /// 6-vertex projective plane.
    ProjectivePlane,
    /// 3×3 grid with one twisted identification.
    KleinBottle,
}

impl CanonicalComplex {
    /// The fixtures every corpus-wide check runs over.
    pub const CORPUS: [CanonicalComplex; 8] = [
        CanonicalComplex::Circle(3),
        CanonicalComplex::Circle(7),
        CanonicalComplex::Interval(3),
        CanonicalComplex::Sphere2,
        CanonicalComplex::Torus,
        CanonicalComplex::Torus7,
        CanonicalComplex::ProjectivePlane,
        CanonicalComplex::KleinBottle,
    ];

    pub fn name(&self) -> String {
        match self {
            Self::Circle(k) => format!("circle:{k}"),
            Self::Interval(k) => format!("interval:{k}"),
            Self::Sphere2 => "sphere2".into(),
            Self::Sphere3 => "sphere3".into(),
            Self::Torus => "torus".into(),
            Self::Torus7 => "torus7".into(),
            Self::ProjectivePlane => "projective_plane".into(),
            Self::KleinBottle => "klein_bottle".into(),
        }
    }

    pub fn build(&self) -> Result<SimplicialComplex> {
        match *self {
            Self::Circle(k) => {
                if k < 3 {
                    return Err(Error::InvalidParameter(format!(
                        "circle needs k >= 3, got {k}"
                    )));
                }
                SimplicialComplex::from_maximal(k, (0..k).map(|i| vec![i, (i + 1) % k]).collect())
            }
            Self::Interval(k) => {
                if k < 1 {
                    return Err(Error::InvalidParameter("interval needs k >= 1".into()));
                }
                SimplicialComplex::from_maximal(k + 1, (0..k).map(|i| vec![i, i + 1]).collect())
            }
            Self::Sphere2 => SimplicialComplex::from_maximal(4, k_subsets(4, 3)),
            Self::Sphere3 => SimplicialComplex::from_maximal(5, k_subsets(5, 4)),
            Self::Torus => SimplicialComplex::from_maximal(9, grid_triangles(3, false)),
            Self::Torus7 => {
                let tris = (0..7)
                    .flat_map(|i| {
                        [
                            vec![i, (i + 1) % 7, (i + 3) % 7],
                            vec![i, (i + 2) % 7, (i + 3) % 7],
                        ]
                    })
                    .collect();
                SimplicialComplex::from_maximal(7, tris)
            }
            Self::ProjectivePlane => SimplicialComplex::from_maximal(
                6,
                vec![
                    vec![0, 1, 2],
                    vec![0, 2, 3],
                    vec![0, 3, 4],
                    vec![0, 4, 5],
                    vec![0, 5, 1],
                    vec![1, 2, 4],
                    vec![2, 3, 5],
                    vec![3, 4, 1],
                    vec![4, 5, 2],
                    vec![5, 1, 3],
                ],
            ),
            Self::KleinBottle => SimplicialComplex::from_maximal(9, grid_triangles(3, true)),
        }
    }
}

impl fmt::Display for CanonicalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for CanonicalComplex {
    type Err = Error;

    /// Accepts `circle:K`, `interval:K`, `sphere2`, `sphere3`, `torus`,
    /// `torus7`, `projective_plane` and `klein_bottle`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let count = |default: usize| -> Result<usize> {
            arg.map_or(Ok(default), |a| {
                a.parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad size {a:?} in {s:?}")))
            })
        };
        Ok(match name {
            "circle" => Self::Circle(count(3)?),
            "interval" => Self::Interval(count(1)?),
            "sphere2" => Self::Sphere2,
            "sphere3" => Self::Sphere3,
            "torus" => Self::Torus,
            "torus7" => Self::Torus7,
            "projective_plane" => Self::ProjectivePlane,
            "klein_bottle" => Self::KleinBottle,
            _ => return Err(Error::InvalidParameter(format!("unknown complex {s:?}"))),
        })
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    subsets(&(0..n).collect::<Vec<_>>())
        .filter(|s| s.len() == k)
        .collect()
}

// Square grid of side m with both pairs of sides glued; `twist` reverses the
// second coordinate across one gluing (Klein bottle).
fn grid_triangles(m: usize, twist: bool) -> Vec<Vec<usize>> {
    let id = |i: usize, j: usize| -> usize {
        let (i, j) = if i == m && twist {
            (0, (m - j % m) % m)
        } else {
            (i % m, j)
        };
        m * i + (j % m)
    };
    let mut tris = Vec::new();
    for i in 0..m {
        for j in 0..m {
            tris.push(vec![id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
            tris.push(vec![id(i, j), id(i, j + 1), id(i + 1, j + 1)]);
        }
    }
    tris
}

/// Input formats accepted by [`load_complex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexFormat {
    /// One `simplex v0 v1 ... vp` line per maximal simplex, `#` comments, and
    /// an optional `vertices N` line.
    Text,
    /// `{"vertices": N, "maximal_simplices": [[...], ...]}`.
    Json,
}

impl FromStr for ComplexFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" | "txt" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            _ => Err(Error::InvalidParameter(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: usize,
    pub maximal_simplices: Vec<Vec<usize>>,
}

/// Reads, face-closes and validates a complex.
pub fn load_complex<R: Read>(mut source: R, format: ComplexFormat) -> Result<SimplicialComplex> {
    let mut text = String::new();
    source
        .read_to_string(&mut text)
        .map_err(|e| match e.kind() {
            std::io::ErrorKind::InvalidData => Error::Parse {
                line: 0,
                column: 0,
                message: "input is not valid UTF-8".into(),
            },
            _ => Error::Io(e),
        })?;
    match format {
        ComplexFormat::Json => {
            let file: ComplexFile = serde_json::from_str(&text).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
            SimplicialComplex::from_maximal(file.vertices, file.maximal_simplices)
        }
        ComplexFormat::Text => parse_text(&text),
    }
}

fn parse_text(text: &str) -> Result<SimplicialComplex> {
    let mut declared = None;
    let mut maximal = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut words = trimmed.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        let column = line.len() - line.trim_start().len() + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            column,
            message,
        };
        let numbers: Vec<usize> = words
            .map(|w| {
                w.parse()
                    .map_err(|_| err(format!("expected a vertex id, found {w:?}")))
            })
            .collect::<Result<_>>()?;
        match keyword {
            "simplex" => {
                if numbers.is_empty() {
                    return Err(err("simplex line lists no vertices".into()));
                }
                let s = Simplex::new(numbers).map_err(|e| err(e.to_string()))?;
                maximal.push(s.0);
            }
            "vertices" => {
                if numbers.len() != 1 || declared.is_some() {
                    return Err(err("expected a single `vertices N` line".into()));
                }
                declared = Some(numbers[0]);
            }
            other => return Err(err(format!("unknown directive {other:?}"))),
        }
    }
    let inferred = maximal.iter().flatten().max().map_or(0, |m| m + 1);
    SimplicialComplex::from_maximal(declared.unwrap_or(inferred), maximal)
}
