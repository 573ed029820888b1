//! Split vector bundles on the projective line and Hirzebruch surface
//! intersection numbers.
//!
//! A bundle `O(d1) + ... + O(dr)` is stored as its sorted list of twists.
//! For the projectivization `P(E)` with tautological class `L` and fibre class
//! `P`, sections of `aL + bP` are sections of `Sym^a(E)(b)` on the base line.

use std::fmt;

use crate::error::BundleError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitBundle {
    twists: Vec<i64>,
}

impl SplitBundle {
    pub fn new(mut twists: Vec<i64>) -> Result<Self, BundleError> {
        if twists.is_empty() {
            return Err(BundleError::Empty);
        }
        twists.sort_unstable();
        Ok(SplitBundle { twists })
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// `Sym^m`: one summand per multiset of `m` twists, with their sum.
    pub fn sym_power(&self, m: u32) -> SplitBundle {
        fn go(ts: &[i64], left: u32, acc: i64, out: &mut Vec<i64>) {
            match ts.split_first() {
                None => {
                    if left == 0 {
                        out.push(acc);
                    }
                }
                Some((&d, rest)) => {
                    for k in 0..=left {
                        go(rest, left - k, acc + i64::from(k) * d, out);
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(&self.twists, m, 0, &mut out);
        out.sort_unstable();
        SplitBundle { twists: out }
    }

    /// Tensor with `O(k)`.
    pub fn twist(&self, k: i64) -> SplitBundle {
        SplitBundle {
            twists: self.twists.iter().map(|d| d + k).collect(),
        }
    }

    /// Number of global sections: `sum max(0, d + 1)`.
    pub fn h0(&self) -> u64 {
        self.twists.iter().map(|&d| (d + 1).max(0) as u64).sum()
    }
}

impl fmt::Display for SplitBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.twists.iter().map(|d| format!("O({d})")).collect();
        f.write_str(&parts.join("+"))
    }
}

/// The divisor class `a*L + b*P` on a projectivized bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BundleSystemSpec {
    pub a: u32,
    pub b: i64,
}

/// Projective dimension of `|aL + bP|`; `-1` when there are no sections.
pub fn system_dim(bundle: &SplitBundle, spec: BundleSystemSpec) -> i64 {
    bundle.sym_power(spec.a).twist(spec.b).h0() as i64 - 1
}

/// The class `a*E + b*F` on the Hirzebruch surface `F_e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuledClass {
    pub e: u32,
    pub a: i64,
    pub b: i64,
}

impl RuledClass {
    pub fn new(e: u32, a: i64, b: i64) -> Self {
        RuledClass { e, a, b }
    }

    /// The negative section `E`.
    pub fn section(e: u32) -> Self {
        Self::new(e, 1, 0)
    }

    /// The ruling `F`.
    pub fn fibre(e: u32) -> Self {
        Self::new(e, 0, 1)
    }

    /// Intersection pairing with `E^2 = -e`, `E.F = 1`, `F^2 = 0`.
    pub fn intersect(&self, other: &RuledClass) -> Result<i64, BundleError> {
        if self.e != other.e {
            return Err(BundleError::MismatchedSurface(self.e, other.e));
        }
        let e = i64::from(self.e);
        Ok(-e * self.a * other.a + self.a * other.b + self.b * other.a)
    }
}

impl fmt::Display for RuledClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}E{:+}F on F_{}", self.a, self.b, self.e)
    }
}
