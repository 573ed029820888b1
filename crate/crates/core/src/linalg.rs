//! Exact linear algebra over the rationals.
//!
//! Ranks are computed with Bareiss fraction-free elimination on integer rows.
//! Span membership uses [`SpanBasis`], a sparse fraction-free echelon form
//! keyed directly by monomials. Nullspaces use plain rational reduced row
//! echelon form.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{Monomial, Polynomial, Ring, Scalar};

/// Scales a rational row to a primitive integer row (content 1, first
/// nonzero entry positive).
pub fn primitive_integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut ints: Vec<BigInt> = row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    make_primitive(&mut ints);
    ints
}

fn make_primitive(entries: &mut [BigInt]) {
    let g = entries.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let flip = entries
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    let g = if flip { -g } else { g };
    if !g.is_one() {
        for x in entries.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank of a rational matrix by Bareiss fraction-free elimination.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| primitive_integer_row(r)).collect();
    bareiss_rank(&mut m)
}

/// Bareiss elimination in place; returns the rank.
pub fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..ncols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}

/// Basis of `{ v : rows * v = 0 }` for a matrix with `ncols` columns.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    (0..ncols)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); ncols];
            v[free] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][free].clone();
            }
            v
        })
        .collect()
}

/// Coefficient matrix of a list of polynomials with respect to the union of
/// their supports (columns ordered leading monomial first).
pub fn coefficient_matrix(polys: &[Polynomial]) -> (Vec<Monomial>, Vec<Vec<BigRational>>) {
    let support: BTreeSet<&Monomial> = polys.iter().flat_map(|p| p.monomials()).collect();
    let columns: Vec<Monomial> = support.into_iter().rev().cloned().collect();
    let rows = polys
        .iter()
        .map(|p| columns.iter().map(|m| p.coefficient(m)).collect())
        .collect();
    (columns, rows)
}

/// Rank of the span of `polys` over the rationals.
pub fn polynomial_rank(polys: &[Polynomial]) -> usize {
    rank(&coefficient_matrix(polys).1)
}

type IntRow = BTreeMap<Monomial, BigInt>;

fn to_int_row(p: &Polynomial) -> IntRow {
    let lcm = p
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut row: IntRow = p
        .terms()
        .map(|(m, c)| (m.clone(), c.numer() * (&lcm / c.denom())))
        .collect();
    normalize(&mut row);
    row
}

/// Content 1 and positive leading coefficient.
fn normalize(row: &mut IntRow) {
    let g = row.values().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let neg = row.values().next_back().is_some_and(|x| x.is_negative());
    let g = if neg { -g } else { g };
    if !g.is_one() {
        for x in row.values_mut() {
            *x = &*x / &g;
        }
    }
}

/// Incrementally built echelon basis of a span of polynomials, kept
/// fraction-free: every row is a primitive integer vector whose leading
/// monomial is distinct from every other row's.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    ring: Ring,
    // pivot monomial -> row; pivots are the rows' leading monomials
    rows: BTreeMap<Monomial, IntRow>,
}

impl SpanBasis {
    pub fn new(ring: &Ring) -> Self {
        SpanBasis {
            ring: ring.clone(),
            rows: BTreeMap::new(),
        }
    }

    pub fn from_polys<'a>(ring: &Ring, polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let mut b = Self::new(ring);
        for p in polys {
            b.insert(p);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: IntRow) -> IntRow {
        for (pivot, row) in self.rows.iter().rev() {
            let Some(a) = v.get(pivot).cloned() else {
                continue;
            };
            let b = &row[pivot];
            // v <- b*v - a*row, which clears the pivot entry
            for x in v.values_mut() {
                *x *= b;
            }
            for (m, r) in row {
                let entry = v.entry(m.clone()).or_insert_with(BigInt::zero);
                *entry -= &a * r;
                if entry.is_zero() {
                    v.remove(m);
                }
            }
            normalize(&mut v);
        }
        v
    }

    /// Whether `p` lies in the span.
    pub fn contains(&self, p: &Polynomial) -> bool {
        assert_eq!(p.ring(), &self.ring, "span basis ring mismatch");
        self.reduce(to_int_row(p)).is_empty()
    }

    /// Adds `p` to the span; returns false if it was already contained.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        assert_eq!(p.ring(), &self.ring, "span basis ring mismatch");
        let v = self.reduce(to_int_row(p));
        match v.keys().next_back().cloned() {
            None => false,
            Some(lead) => {
                self.rows.insert(lead, v);
                true
            }
        }
    }

    /// The echelon rows as polynomials.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.rows
            .values()
            .rev()
            .map(|row| {
                Polynomial::from_terms(
                    &self.ring,
                    row.iter()
                        .map(|(m, c)| (m.clone(), Scalar::from_integer(c.clone()))),
                )
            })
            .collect()
    }
}
