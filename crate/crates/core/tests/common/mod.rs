#![allow(dead_code)]

use fano_core::poly::frac;
use fano_core::{Monomial, Polynomial, Ring, Scalar};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub fn p3(s: &str) -> Polynomial {
    Polynomial::parse(&Ring::projective3(), s).unwrap()
}

pub fn small_scalar<R: Rng>(rng: &mut R) -> Scalar {
    let num = rng.random_range(-6..=6);
    let den = rng.random_range(1..=4);
    frac(num, den)
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let c = small_scalar(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Up to `max_terms` terms with exponents at most `max_exp`.
pub fn random_poly<R: Rng>(rng: &mut R, ring: &Ring, max_terms: usize, max_exp: u32) -> Polynomial {
    let n = rng.random_range(0..=max_terms);
    Polynomial::from_terms(
        ring,
        (0..n).map(|_| {
            let e = (0..ring.arity())
                .map(|_| rng.random_range(0..=max_exp))
                .collect();
            (Monomial::new(e), small_scalar(rng))
        }),
    )
}

pub fn random_nonzero_poly<R: Rng>(
    rng: &mut R,
    ring: &Ring,
    max_terms: usize,
    max_exp: u32,
) -> Polynomial {
    loop {
        let p = random_poly(rng, ring, max_terms, max_exp);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random weighted-homogeneous form of weighted degree `d` on `P(1,1,4,6)`.
pub fn random_weighted_form<R: Rng>(rng: &mut R, d: u64, max_terms: usize) -> Polynomial {
    let ws = fano_core::WeightSystem::new(vec![1, 1, 4, 6]).unwrap();
    let monos = fano_core::enumerate_monomials(&ws, d);
    let ring = Ring::weighted4();
    if monos.is_empty() {
        return Polynomial::zero(&ring);
    }
    let n = rng.random_range(1..=max_terms);
    Polynomial::from_terms(
        &ring,
        (0..n).map(|_| {
            let m = monos[rng.random_range(0..monos.len())].clone();
            (m, nonzero_scalar(rng))
        }),
    )
}

/// Rank by textbook Gauss-Jordan elimination over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn naive_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for j in 0..ncols {
            m[rank][j] = &m[rank][j] / &pivot;
        }
        for i in 0..m.len() {
            if i != rank {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let sub = &f * &m[rank][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of polynomials via a dense coefficient matrix built by hand.
pub fn naive_poly_rank(polys: &[Polynomial]) -> usize {
    let mut cols: Vec<Monomial> = Vec::new();
    for p in polys {
        for m in p.monomials() {
            if !cols.contains(m) {
                cols.push(m.clone());
            }
        }
    }
    let rows: Vec<Vec<BigRational>> = polys
        .iter()
        .map(|p| cols.iter().map(|m| p.coefficient(m)).collect())
        .collect();
    naive_rank(&rows)
}

/// Coefficients of `prod_i 1/(1 - t^{w_i})` up to `t^max`, by multiplying
/// truncated geometric series one factor at a time.
pub fn series_oracle(weights: &[u32], max: usize) -> Vec<u128> {
    let mut acc = vec![0u128; max + 1];
    acc[0] = 1;
    for &w in weights {
        let geom: Vec<u128> = (0..=max).map(|k| u128::from(k % w as usize == 0)).collect();
        let mut next = vec![0u128; max + 1];
        for (i, a) in acc.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, g) in geom.iter().enumerate().take(max + 1 - i) {
                next[i + j] += a * g;
            }
        }
        acc = next;
    }
    acc
}

pub fn one() -> Scalar {
    Scalar::one()
}
