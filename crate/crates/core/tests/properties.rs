//! Randomized algebraic identities checked with proptest.

mod common;

use derham::cohomology::{coboundary, cohomology, cup, homology, is_coboundary, pair};
use derham::complex::{CanonicalComplex, Chain, SimplicialComplex};
use derham::forms::{derham_map, integrate, whitney, PolyForm};
use derham::linalg::{
    int, nullspace, quotient_basis, rank, rat, solve, IncrementalEchelon, Rational, RationalMatrix,
    SubspaceBasis,
};
use derham::sample;
use num_traits::{One, Zero};
use proptest::prelude::*;

const COMPLEXES: [CanonicalComplex; 6] = [
    CanonicalComplex::Circle(3),
    CanonicalComplex::Interval(3),
    CanonicalComplex::Sphere2,
    CanonicalComplex::Torus,
    CanonicalComplex::ProjectivePlane,
    CanonicalComplex::KleinBottle,
];

fn sign(p: usize) -> Rational {
    if p.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn sparse_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=40, 1usize..=40).prop_flat_map(|(r, c)| {
        prop::collection::vec((0..r, 0..c, -5i64..=5, 1i64..=3), 0..=(r * c).min(120)).prop_map(
            move |entries| {
                RationalMatrix::from_triplets(
                    r,
                    c,
                    entries.into_iter().map(|(i, j, n, d)| (i, j, rat(n, d))),
                )
            },
        )
    })
}

fn complex_and_seed() -> impl Strategy<Value = (SimplicialComplex, u64)> {
    (0..COMPLEXES.len(), any::<u64>()).prop_map(|(i, seed)| (COMPLEXES[i].build().unwrap(), seed))
}

fn random_chain<R: rand::Rng>(k: &SimplicialComplex, p: usize, rng: &mut R) -> Chain {
    Chain::from_vector(k, p, &sample::random_vector(k.count(p), rng))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_column_count(a in sparse_matrix()) {
        let kernel = nullspace(&a);
        prop_assert_eq!(rank(&a) + kernel.len(), a.cols());
        for v in kernel.vectors() {
            prop_assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(rank(&a), rank(&a.transpose()));
    }

    #[test]
    fn solve_recovers_a_consistent_system(a in sparse_matrix(), seed in any::<u64>()) {
        let mut rng = sample::seeded(seed);
        let x0 = sample::random_vector(a.cols(), &mut rng);
        let b = a.mul_vec(&x0);
        let x = solve(&a, &b).expect("b lies in the column space");
        prop_assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn quotient_basis_is_independent_modulo_subspace(a in sparse_matrix()) {
        // Z = ker A, B = a subspace of Z spanned by sums of kernel vectors.
        let z = nullspace(&a);
        let pairs: Vec<_> = z
            .vectors()
            .windows(2)
            .map(|w| w[0].iter().zip(&w[1]).map(|(x, y)| x + y).collect::<Vec<_>>())
            .collect();
        let b = SubspaceBasis::from_spanning(a.cols(), pairs);
        let q = quotient_basis(&z, &b).unwrap();
        prop_assert_eq!(q.len() + b.len(), z.len());
        let mut echelon = IncrementalEchelon::new(a.cols());
        for v in b.vectors().iter().chain(q.vectors()) {
            prop_assert!(echelon.insert(v));
        }
    }

    #[test]
    fn coboundary_satisfies_leibniz_for_cup((k, seed) in complex_and_seed()) {
        let mut rng = sample::seeded(seed);
        let n = k.dimension();
        for p in 0..n {
            for q in 0..(n - p) {
                let f = sample::random_cochain(&k, p, &mut rng);
                let g = sample::random_cochain(&k, q, &mut rng);
                let lhs = coboundary(&k, &cup(&k, &f, &g).unwrap());
                let rhs = cup(&k, &coboundary(&k, &f), &g)
                    .unwrap()
                    .add(&cup(&k, &f, &coboundary(&k, &g)).unwrap().scale(&sign(p)));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn cup_is_associative((k, seed) in complex_and_seed()) {
        let mut rng = sample::seeded(seed);
        let n = k.dimension();
        for p in 0..=n {
            for q in 0..=(n - p) {
                let r = n - p - q;
                let f = sample::random_cochain(&k, p, &mut rng);
                let g = sample::random_cochain(&k, q, &mut rng);
                let h = sample::random_cochain(&k, r, &mut rng);
                let left = cup(&k, &cup(&k, &f, &g).unwrap(), &h).unwrap();
                let right = cup(&k, &f, &cup(&k, &g, &h).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn cup_descends_to_cohomology((k, seed) in complex_and_seed()) {
        let mut rng = sample::seeded(seed);
        let n = k.dimension();
        for p in 1..n {
            let q = n - p;
            let f = sample::random_cocycle(&k, &cohomology(&k, p).unwrap(), false, &mut rng);
            let g = sample::random_cocycle(&k, &cohomology(&k, q).unwrap(), false, &mut rng);
            let shift = coboundary(&k, &sample::random_cochain(&k, p - 1, &mut rng));
            let moved = cup(&k, &f.add(&shift), &g).unwrap();
            let base = cup(&k, &f, &g).unwrap();
            prop_assert!(is_coboundary(&k, &moved.sub(&base)));
            let swapped = cup(&k, &g, &f).unwrap().scale(&sign(p * q));
            prop_assert!(is_coboundary(&k, &base.sub(&swapped)));
        }
    }

    #[test]
    fn pairing_is_adjoint_to_boundary((k, seed) in complex_and_seed()) {
        let mut rng = sample::seeded(seed);
        for p in 0..k.dimension() {
            let f = sample::random_cochain(&k, p, &mut rng);
            let c = random_chain(&k, p + 1, &mut rng);
            let lhs = pair(&k, &f, &k.boundary(&c).unwrap()).unwrap();
            let rhs = pair(&k, &coboundary(&k, &f), &c).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn d_squares_to_zero_and_obeys_leibniz((k, seed) in complex_and_seed()) {
        let mut rng = sample::seeded(seed);
        let n = k.dimension();
        for p in 0..=n {
            let alpha = sample::random_form(&k, p, &mut rng);
            prop_assert!(alpha.d().d().is_zero());
            for q in 0..=(n - p) {
                let beta = sample::random_form(&k, q, &mut rng);
                let lhs = alpha.wedge(&beta).d();
                let rhs = alpha.d().wedge(&beta).add(&alpha.wedge(&beta.d()).scale(&sign(p)));
                prop_assert_eq!(lhs, rhs);
                let swapped = beta.wedge(&alpha).scale(&sign(p * q));
                prop_assert_eq!(alpha.wedge(&beta), swapped);
            }
        }
    }

    #[test]
    fn whitney_forms_are_continuous((k, seed) in complex_and_seed()) {
        let mut rng = sample::seeded(seed);
        for p in 0..=k.dimension() {
            let f = sample::random_cochain(&k, p, &mut rng);
            let w = whitney(&k, &f);
            prop_assert!(w.check_continuity(&k).is_ok());
            prop_assert_eq!(derham_map(&k, &w).unwrap(), f);
        }
    }

    #[test]
    fn periods_are_invariant_under_boundaries((k, seed) in complex_and_seed()) {
        let mut rng = sample::seeded(seed);
        for p in 0..k.dimension() {
            let basis = cohomology(&k, p).unwrap();
            let omega = sample::random_closed_whitney_form(&k, &basis, false, &mut rng);
            for z in homology(&k, p).unwrap().cycles {
                let c = random_chain(&k, p + 1, &mut rng);
                let moved = z.add(&k.boundary(&c).unwrap());
                prop_assert_eq!(
                    integrate(&k, &omega, &z).unwrap(),
                    integrate(&k, &omega, &moved).unwrap()
                );
            }
        }
    }
}

#[test]
fn sphere_has_exactly_two_unit_fundamental_cycles() {
    let k = CanonicalComplex::Sphere2.build().unwrap();
    let top = k.count(2);
    assert!(top <= 20);
    let boundary = k.boundary_matrix(2);
    let mut cycles = Vec::new();
    for mask in 0u32..(1 << top) {
        let v: Vec<Rational> = (0..top)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    int(1)
                } else {
                    int(-1)
                }
            })
            .collect();
        if boundary.mul_vec(&v).iter().all(Zero::is_zero) {
            cycles.push(v);
        }
    }
    assert_eq!(cycles.len(), 2);
    let fundamental = k.fundamental_cycle().unwrap().to_vector(&k).unwrap();
    assert!(cycles.contains(&fundamental));
    let negated: Vec<Rational> = fundamental.iter().map(|q| -q).collect();
    assert!(cycles.contains(&negated));
}

#[test]
fn top_cycles_form_a_line_on_orientable_surfaces() {
    for c in [
        CanonicalComplex::Torus,
        CanonicalComplex::Torus7,
        CanonicalComplex::Sphere3,
    ] {
        let k = c.build().unwrap();
        let n = k.dimension();
        let kernel = nullspace(&k.boundary_matrix(n));
        assert_eq!(kernel.len(), 1, "{c}");
        let fundamental = k.fundamental_cycle().unwrap();
        assert!(k.boundary(&fundamental).unwrap().is_zero());
        assert!(kernel.contains(&fundamental.to_vector(&k).unwrap()));
    }
    for c in [
        CanonicalComplex::ProjectivePlane,
        CanonicalComplex::KleinBottle,
    ] {
        let k = c.build().unwrap();
        assert!(nullspace(&k.boundary_matrix(2)).is_empty(), "{c}");
        assert!(k.fundamental_cycle().is_err());
    }
}

#[test]
fn constant_function_integrates_to_its_value_on_points() {
    let k = CanonicalComplex::Torus.build().unwrap();
    let omega = PolyForm::constant(&k, rat(5, 3));
    for v in k.simplices(0) {
        assert_eq!(omega.integrate_simplex(&k, v).unwrap(), rat(5, 3));
    }
    assert_eq!(common::betti_oracle(&k), vec![1, 2, 1]);
}
