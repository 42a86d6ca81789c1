//! Test-only oracles that do not go through the crate's elimination code.

#![allow(dead_code)]

use derham::complex::{CanonicalComplex, SimplicialComplex};
use num_bigint::BigInt;
use num_traits::Zero;

/// Dense integer matrix of ∂_p, rebuilt from the vertex lists by scanning
/// for each facet (linear search, no binary search over sorted lists).
pub fn dense_boundary(k: &SimplicialComplex, p: usize) -> Vec<Vec<i64>> {
    if p == 0 || p > k.dimension() {
        let rows = if p == 0 { 0 } else { k.count(p - 1) };
        return vec![vec![0; k.count(p)]; rows];
    }
    let lower = k.simplices(p - 1);
    let mut m = vec![vec![0i64; k.count(p)]; lower.len()];
    for (j, s) in k.simplices(p).iter().enumerate() {
        let vs = s.vertices();
        for skip in 0..vs.len() {
            let face: Vec<usize> = vs
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &v)| v)
                .collect();
            let i = lower
                .iter()
                .position(|f| f.vertices() == face.as_slice())
                .expect("face present");
            m[i][j] += if skip % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Fraction-free (Bareiss) rank over the integers.
pub fn bareiss_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Betti numbers by rank-nullity over the dense oracle matrices.
pub fn betti_oracle(k: &SimplicialComplex) -> Vec<usize> {
    (0..=k.dimension())
        .map(|p| {
            let r_p = bareiss_rank(&dense_boundary(k, p));
            let r_next = if p < k.dimension() {
                bareiss_rank(&dense_boundary(k, p + 1))
            } else {
                0
            };
            k.count(p) - r_p - r_next
        })
        .collect()
}

/// Every fixture plus the 3-sphere, so dimension 3 is exercised too.
pub fn full_corpus() -> Vec<(String, SimplicialComplex)> {
    CanonicalComplex::CORPUS
        .iter()
        .chain(std::iter::once(&CanonicalComplex::Sphere3))
        .map(|c| (c.name(), c.build().expect("corpus complex builds")))
        .collect()
}
