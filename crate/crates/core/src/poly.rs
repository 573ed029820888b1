//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] lives in a [`Ring`], which is nothing more than an ordered
//! list of variable names. Terms are kept in a `BTreeMap` keyed by
//! [`Monomial`], whose ordering is graded lexicographic with respect to the
//! declared variable order, so iteration, printing and equality are all
//! deterministic. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;

/// Coefficient field. `BigRational` keeps fractions reduced with a positive
/// denominator.
pub type Scalar = BigRational;

/// Shorthand for an integer-valued [`Scalar`].
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `num / den`.
///
/// Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// An ordered list of variable names shared by all polynomials of a ring.
#[derive(Clone)]
pub struct Ring {
    vars: Arc<[String]>,
}

impl Ring {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(PolyError::InvalidRing(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::InvalidRing(format!("duplicate variable {v:?}")));
            }
        }
        Ok(Ring { vars: vars.into() })
    }

    /// Homogeneous coordinates `x1, x2, x3, x4` of ordinary projective 3-space.
    pub fn projective3() -> Self {
        Ring::new(["x1", "x2", "x3", "x4"]).expect("static ring")
    }

    /// Coordinates `y1, y2, y3, y4` of a four-variable weighted projective space.
    pub fn weighted4() -> Self {
        Ring::new(["y1", "y2", "y3", "y4"]).expect("static ring")
    }

    /// Ring `t, x1, x3, x4` used after substituting `x2 = t*x1`.
    pub fn pencil() -> Self {
        Ring::new(["t", "x1", "x3", "x4"]).expect("static ring")
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn names(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.vars[index]
    }

    pub(crate) fn ensure_same(&self, other: &Ring) -> Result<(), PolyError> {
        if self == other {
            Ok(())
        } else {
            Err(PolyError::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", &*self.vars)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.vars.join(","))
    }
}

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then lexicographically with earlier variables dominating.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Formats the monomial with the given ring's names, e.g. `x1^2*x3`.
    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, ring }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a Ring,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in canonical form: no zero coefficients, terms sorted by the
/// graded lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Scalar::one())
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::term(ring, Monomial::one(ring.arity()), c)
    }

    pub fn term(ring: &Ring, mono: Monomial, c: Scalar) -> Self {
        assert_eq!(
            mono.arity(),
            ring.arity(),
            "monomial arity does not match ring"
        );
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Ring, mono: Monomial) -> Self {
        Self::term(ring, mono, Scalar::one())
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.arity(), index))
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self, PolyError> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            assert_eq!(
                m.arity(),
                ring.arity(),
                "monomial arity does not match ring"
            );
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order (leading term first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of variable `index` occurring in any term.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(index))
            .max()
            .unwrap_or(0)
    }

    /// Indices of variables that occur with positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.arity())
            .filter(|&i| self.terms.keys().any(|m| m.exponent(i) > 0))
            .collect()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Rescales so that the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = Self::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a point given one value per ring variable.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar, PolyError> {
        if point.len() != self.ring.arity() {
            return Err(PolyError::Arity {
                expected: self.ring.arity(),
                found: point.len(),
            });
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Replaces variables by polynomials of a (possibly different) target ring.
    pub fn substitute(&self, sub: &Substitution) -> Result<Self, PolyError> {
        self.ring.ensure_same(&sub.source)?;
        for i in self.support_vars() {
            if sub.images[i].is_none() {
                return Err(PolyError::MissingImage(self.ring.name(i).to_string()));
            }
        }
        // Cache of powers per variable, grown on demand.
        let mut powers: Vec<Vec<Polynomial>> =
            vec![vec![Polynomial::one(&sub.target)]; self.ring.arity()];
        let mut out = Polynomial::zero(&sub.target);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(&sub.target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let image = sub.images[i].as_ref().expect("checked above");
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().expect("nonempty") * image;
                    cache.push(next);
                }
                prod = &prod * &cache[e as usize];
            }
            for (m2, c2) in prod.terms {
                out.add_term(m2, c2);
            }
        }
        Ok(out)
    }

    /// Returns `q` with `self = q * divisor`, or a divisibility error.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.ring.ensure_same(&divisor.ring)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        // Leading terms multiply under a monomial order, so an exact quotient
        // must cancel the remainder's leading term at every step.
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lead_m).ok_or(PolyError::NotDivisible)?;
            let qc = c / lead_c;
            let step = Polynomial::term(&self.ring, qm.clone(), qc.clone());
            rem = &rem - &(&step * divisor);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Divides by `var^k`, failing if some term has a smaller exponent.
    pub fn factor_out(&self, var: usize, k: u32) -> Result<Self, PolyError> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exponent(var) < k {
                return Err(PolyError::NotDivisible);
            }
            let mut e = m.0.clone();
            e[var] -= k;
            terms.insert(Monomial(e), c.clone());
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Parses the textual form, e.g. `"x1^2 - 3/2*x1*x2 + 7"`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self, PolyError> {
        crate::parse::parse_polynomial(ring, text)
    }

    pub(crate) fn insert_term(&mut self, m: Monomial, c: Scalar) {
        self.add_term(m, c);
    }
}

/// Images of the variables of a source ring in a target ring.
#[derive(Clone, Debug)]
pub struct Substitution {
    source: Ring,
    target: Ring,
    images: Vec<Option<Polynomial>>,
}

impl Substitution {
    pub fn new(source: &Ring, target: &Ring) -> Self {
        Substitution {
            source: source.clone(),
            target: target.clone(),
            images: vec![None; source.arity()],
        }
    }

    /// Sends each source variable to the target variable of the same name.
    /// Source variables absent from the target are left unmapped.
    pub fn by_name(source: &Ring, target: &Ring) -> Self {
        let mut s = Self::new(source, target);
        for (i, name) in source.names().iter().enumerate() {
            if let Some(j) = target.index_of(name) {
                s.images[i] = Some(Polynomial::var(target, j));
            }
        }
        s
    }

    pub fn identity(ring: &Ring) -> Self {
        Self::by_name(ring, ring)
    }

    pub fn set(mut self, var: &str, image: Polynomial) -> Result<Self, PolyError> {
        let i = self
            .source
            .index_of(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        self.target.ensure_same(image.ring())?;
        self.images[i] = Some(image);
        Ok(self)
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str("-")?,
                (_, false) => f.write_str("+")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.display(&self.ring))?;
            } else {
                write!(f, "{a}*{}", m.display(&self.ring))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self} in {})", self.ring)
    }
}

// Operator sugar. These panic on ring mismatch; use the `try_*` methods when
// the rings are not known to agree.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}
