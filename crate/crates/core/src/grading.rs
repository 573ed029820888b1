//! Weighted gradings on polynomial rings.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::GradingError;
use crate::poly::{Monomial, Polynomial};

/// Positive integer weights, one per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem(Vec<u32>);

impl WeightSystem {
    pub fn new(weights: Vec<u32>) -> Result<Self, GradingError> {
        if weights.is_empty() {
            return Err(GradingError::Empty);
        }
        if weights.contains(&0) {
            return Err(GradingError::NonPositive(0));
        }
        Ok(WeightSystem(weights))
    }

    /// All weights equal to 1.
    pub fn standard(arity: usize) -> Self {
        WeightSystem(vec![1; arity.max(1)])
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&w| u64::from(w)).sum()
    }

    fn check_arity(&self, vars: usize) -> Result<(), GradingError> {
        if vars == self.arity() {
            Ok(())
        } else {
            Err(GradingError::Arity {
                weights: self.arity(),
                vars,
            })
        }
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for WeightSystem {
    type Err = GradingError;

    /// Parses `"1,1,4,6"` (surrounding parentheses optional).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Err(GradingError::Empty);
        }
        let mut ws = Vec::new();
        for part in body.split(',') {
            let n: i64 = part
                .trim()
                .parse()
                .map_err(|_| GradingError::NonPositive(0))?;
            if n <= 0 || n > i64::from(u32::MAX) {
                return Err(GradingError::NonPositive(n));
            }
            ws.push(n as u32);
        }
        WeightSystem::new(ws)
    }
}

/// Result of a weighted homogeneity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    AnyDegree,
    Degree(u64),
    Mixed,
}

impl Homogeneity {
    pub fn is_homogeneous(self) -> bool {
        !matches!(self, Homogeneity::Mixed)
    }

    /// True if homogeneous of degree `d` (the zero polynomial always is).
    pub fn has_degree(self, d: u64) -> bool {
        match self {
            Homogeneity::AnyDegree => true,
            Homogeneity::Degree(e) => e == d,
            Homogeneity::Mixed => false,
        }
    }
}

pub fn weighted_degree(m: &Monomial, ws: &WeightSystem) -> Result<u64, GradingError> {
    ws.check_arity(m.arity())?;
    Ok(m.exponents()
        .iter()
        .zip(ws.weights())
        .map(|(&e, &w)| u64::from(e) * u64::from(w))
        .sum())
}

pub fn is_homogeneous(f: &Polynomial, ws: &WeightSystem) -> Result<Homogeneity, GradingError> {
    ws.check_arity(f.ring().arity())?;
    let mut degree = None;
    for m in f.monomials() {
        let d = weighted_degree(m, ws)?;
        match degree {
            None => degree = Some(d),
            Some(e) if e != d => return Ok(Homogeneity::Mixed),
            Some(_) => {}
        }
    }
    Ok(degree.map_or(Homogeneity::AnyDegree, Homogeneity::Degree))
}

/// Every monomial of weighted degree exactly `d`, leading monomial first.
pub fn enumerate_monomials(ws: &WeightSystem, d: u64) -> Vec<Monomial> {
    fn descend(ws: &[u32], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == ws.len() {
            if left == 0 {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        let w = u64::from(ws[i]);
        for e in (0..=left / w).rev() {
            cur[i] = e as u32;
            descend(ws, i + 1, left - e * w, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    descend(ws.weights(), 0, d, &mut vec![0; ws.arity()], &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Number of monomials of weighted degree `d`, by the recurrence on the last
/// weight: `N(d; w1..wk) = sum_j N(d - j*wk; w1..w(k-1))`.
pub fn hilbert_count(ws: &WeightSystem, d: u64) -> u128 {
    fn count(ws: &[u32], d: u64, memo: &mut HashMap<(usize, u64), u128>) -> u128 {
        let Some((&last, rest)) = ws.split_last() else {
            return u128::from(d == 0);
        };
        if let Some(&n) = memo.get(&(ws.len(), d)) {
            return n;
        }
        let w = u64::from(last);
        let n = (0..=d / w).map(|j| count(rest, d - j * w, memo)).sum();
        memo.insert((ws.len(), d), n);
        n
    }
    count(ws.weights(), d, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn ws(w: &[u32]) -> WeightSystem {
        WeightSystem::new(w.to_vec()).unwrap()
    }

    #[test]
    fn weighted_degrees() {
        let w = ws(&[1, 1, 4, 6]);
        assert_eq!(
            weighted_degree(&Monomial::new(vec![0, 0, 0, 2]), &w),
            Ok(12)
        );
        assert_eq!(weighted_degree(&Monomial::one(4), &w), Ok(0));
        assert_eq!(
            weighted_degree(&Monomial::new(vec![0, 0, 1, 1]), &w),
            Ok(10)
        );
        assert!(matches!(
            weighted_degree(&Monomial::one(3), &w),
            Err(GradingError::Arity { .. })
        ));
    }

    #[test]
    fn homogeneity() {
        let r = Ring::projective3();
        let w = ws(&[1, 1, 4, 6]);
        let f = Polynomial::parse(&r, "x1 + x3").unwrap();
        assert_eq!(is_homogeneous(&f, &w), Ok(Homogeneity::Mixed));
        assert_eq!(
            is_homogeneous(&Polynomial::zero(&r), &w),
            Ok(Homogeneity::AnyDegree)
        );
        let g = Polynomial::parse(&r, "x4^2 + x3^3 + x1^12").unwrap();
        assert_eq!(is_homogeneous(&g, &w), Ok(Homogeneity::Degree(12)));
        assert_eq!(
            is_homogeneous(&g, &WeightSystem::standard(4)),
            Ok(Homogeneity::Mixed)
        );
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_monomials(&ws(&[1, 1, 4, 6]), 12).len(), 39);
        assert_eq!(enumerate_monomials(&ws(&[1, 1, 1, 3]), 6).len(), 39);
        assert_eq!(enumerate_monomials(&ws(&[2, 3]), 0), vec![Monomial::one(2)]);
        assert!(enumerate_monomials(&ws(&[2, 4]), 3).is_empty());
    }

    #[test]
    fn enumeration_is_sorted_leading_first() {
        let ms = enumerate_monomials(&ws(&[1, 1, 4, 6]), 12);
        assert!(ms.windows(2).all(|p| p[0] > p[1]));
        assert_eq!(ms[0], Monomial::new(vec![12, 0, 0, 0]));
        assert_eq!(ms.last().unwrap(), &Monomial::new(vec![0, 0, 0, 2]));
    }

    #[test]
    fn hilbert_counts() {
        assert_eq!(hilbert_count(&ws(&[1, 1, 4, 6]), 12), 39);
        assert_eq!(hilbert_count(&ws(&[1, 1]), 6), 7);
        assert_eq!(hilbert_count(&ws(&[1, 1, 4, 6]), 3), 4);
        assert_eq!(hilbert_count(&ws(&[5]), 0), 1);
        assert_eq!(hilbert_count(&ws(&[5]), 7), 0);
    }

    #[test]
    fn parse_weights() {
        assert_eq!("1,1,4,6".parse::<WeightSystem>(), Ok(ws(&[1, 1, 4, 6])));
        assert_eq!(
            "(1, 1, 1, 3)".parse::<WeightSystem>(),
            Ok(ws(&[1, 1, 1, 3]))
        );
        assert!("1,0".parse::<WeightSystem>().is_err());
        assert!("1,-2".parse::<WeightSystem>().is_err());
        assert!("".parse::<WeightSystem>().is_err());
        assert_eq!(WeightSystem::new(vec![]), Err(GradingError::Empty));
    }
}
