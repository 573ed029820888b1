//! Anticanonical data of weighted projective spaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::GradingError;
use crate::grading::{enumerate_monomials, WeightSystem};
use crate::poly::Monomial;

/// A well-formed weighted projective space `P(w0, ..., wn)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedProjectiveSpace {
    ws: WeightSystem,
}

impl WeightedProjectiveSpace {
    /// Rejects weight systems where some `n` of the `n + 1` weights share a
    /// common factor.
    pub fn new(ws: WeightSystem) -> Result<Self, GradingError> {
        let w = ws.weights();
        let well_formed = (0..w.len()).all(|skip| {
            w.iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .fold(0u32, |g, (_, &x)| g.gcd(&x))
                == 1
        });
        if !well_formed {
            return Err(GradingError::NotWellFormed(w.to_vec()));
        }
        Ok(WeightedProjectiveSpace { ws })
    }

    pub fn from_weights(weights: &[u32]) -> Result<Self, GradingError> {
        Self::new(WeightSystem::new(weights.to_vec())?)
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.ws
    }

    pub fn dimension(&self) -> usize {
        self.ws.arity() - 1
    }

    /// Degree of `-K`, i.e. the sum of the weights.
    pub fn anticanonical_weight(&self) -> u64 {
        self.ws.sum()
    }

    /// `(-K)^n = (sum w)^n / prod w`.
    pub fn anticanonical_selfintersection(&self) -> BigRational {
        let num = num_traits::pow(BigInt::from(self.ws.sum()), self.dimension());
        let den: BigInt = self.ws.weights().iter().map(|&w| BigInt::from(w)).product();
        BigRational::new(num, den)
    }

    /// Monomials of weighted degree `sum w`, leading first.
    pub fn anticanonical_basis(&self) -> Vec<Monomial> {
        enumerate_monomials(&self.ws, self.anticanonical_weight())
    }

    /// Dimension of the anticanonical linear system (basis size minus one).
    pub fn anticanonical_dim(&self) -> i64 {
        self.anticanonical_basis().len() as i64 - 1
    }
}
