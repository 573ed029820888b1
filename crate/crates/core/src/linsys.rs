//! Linear systems of surfaces in projective 3-space with coordinates
//! `x1, x2, x3, x4`.
//!
//! The distinguished line is `r: x1 = x2 = 0`, the distinguished point is
//! `q = [0,0,0,1]`, and the planes through `r` form the pencil `x2 = t*x1`.
//! A [`PencilCubic`] `xi(x1, x2)` picks out three planes of that pencil.
//!
//! Two systems are built here. The sextic system has generators
//! `x1*x2*x4*xi`, `x3*xi*m2`, `m6` and the degree-12 system has generators
//! `(x1*x2*x4*xi)^2`, `x1*x2*x4*xi*x3*xi*m2`, `x1*x2*x4*xi*m6`, `(x3*xi)^3`,
//! `(x3*xi)^2*m4`, `x3*xi*m8`, `m12`, where `mk` runs over binary forms of
//! degree `k` in `x1, x2`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{PolyError, SystemError};
use crate::grading::{enumerate_monomials, is_homogeneous, WeightSystem};
use crate::linalg::{nullspace, polynomial_rank, SpanBasis};
use crate::poly::{int, Monomial, Polynomial, Ring, Scalar, Substitution};

const X1: usize = 0;
const X2: usize = 1;
const X3: usize = 2;
const X4: usize = 3;

// Variable positions in the pencil ring (t, x1, x3, x4).
const PT: usize = 0;
const PX1: usize = 1;
const PX3: usize = 2;
const PX4: usize = 3;

fn x(i: usize) -> Polynomial {
    Polynomial::var(&Ring::projective3(), i)
}

fn p3_monomial(e: [u32; 4]) -> Monomial {
    Monomial::new(e.to_vec())
}

/// All monomials `x1^a * x2^b` with `a + b = k`, leading first.
pub fn binary_forms(k: u32) -> Vec<Polynomial> {
    let ring = Ring::projective3();
    enumerate_monomials(&WeightSystem::standard(2), u64::from(k))
        .into_iter()
        .map(|m| Polynomial::monomial(&ring, p3_monomial([m.exponent(0), m.exponent(1), 0, 0])))
        .collect()
}

/// A binary cubic `xi(x1, x2) = c * (x2 - t1*x1)(x2 - t2*x1)(x2 - t3*x1)`
/// with pairwise distinct, nonzero rational roots `t1, t2, t3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilCubic {
    form: Polynomial,
    roots: [Scalar; 3],
}

impl PencilCubic {
    pub fn from_roots(roots: [Scalar; 3]) -> Result<Self, SystemError> {
        Self::validate_roots(&roots)?;
        let (x1, x2) = (x(X1), x(X2));
        let form = roots
            .iter()
            .fold(Polynomial::one(&Ring::projective3()), |acc, t| {
                &acc * &(&x2 - &x1.scale(t))
            });
        Ok(PencilCubic { form, roots })
    }

    fn validate_roots(roots: &[Scalar; 3]) -> Result<(), SystemError> {
        if roots.iter().any(Zero::is_zero) {
            return Err(SystemError::InvalidCubic(
                "a root at t = 0 makes a plane coincide with x2 = 0".into(),
            ));
        }
        if roots[0] == roots[1] || roots[0] == roots[2] || roots[1] == roots[2] {
            return Err(SystemError::InvalidCubic("repeated root".into()));
        }
        Ok(())
    }

    /// Recovers the roots of a binary cubic given in the `x1..x4` ring.
    pub fn from_form(form: Polynomial) -> Result<Self, SystemError> {
        if form.ring() != &Ring::projective3() {
            return Err(SystemError::InvalidCubic(format!(
                "expected a form in {}, got {}",
                Ring::projective3(),
                form.ring()
            )));
        }
        if form.degree_in(X3) > 0 || form.degree_in(X4) > 0 {
            return Err(SystemError::InvalidCubic(
                "must only involve x1 and x2".into(),
            ));
        }
        if !is_homogeneous(&form, &WeightSystem::standard(4))?.has_degree(3) || form.is_zero() {
            return Err(SystemError::InvalidCubic(
                "must be homogeneous of degree 3".into(),
            ));
        }
        // xi(1, t) = sum c[k] t^k with c[k] the coefficient of x1^(3-k) x2^k
        let c: Vec<Scalar> = (0..4u32)
            .map(|k| form.coefficient(&p3_monomial([3 - k, k, 0, 0])))
            .collect();
        if c[3].is_zero() {
            return Err(SystemError::InvalidCubic(
                "x1 divides the cubic, so one plane coincides with x1 = 0".into(),
            ));
        }
        if c[0].is_zero() {
            return Err(SystemError::InvalidCubic(
                "x2 divides the cubic, so one plane coincides with x2 = 0".into(),
            ));
        }
        let mut roots = rational_roots(&c)?;
        if roots.len() != 3 {
            return Err(SystemError::InvalidCubic(format!(
                "needs three distinct rational roots, found {}",
                roots.len()
            )));
        }
        roots.sort();
        let roots: [Scalar; 3] = roots.try_into().expect("three roots");
        let monic = Self::from_roots(roots)?;
        // The factorization must reproduce the input up to the leading scalar.
        if monic.form.scale(&c[3]) != form {
            return Err(SystemError::InvalidCubic(
                "factorization check failed".into(),
            ));
        }
        Ok(PencilCubic {
            form,
            roots: monic.roots,
        })
    }

    pub fn parse(text: &str) -> Result<Self, SystemError> {
        Self::from_form(Polynomial::parse(&Ring::projective3(), text)?)
    }

    pub fn form(&self) -> &Polynomial {
        &self.form
    }

    pub fn roots(&self) -> &[Scalar; 3] {
        &self.roots
    }
}

impl Default for PencilCubic {
    /// `(x2 - x1)(x2 - 2*x1)(x2 - 3*x1)`.
    fn default() -> Self {
        Self::from_roots([int(1), int(2), int(3)]).expect("valid default roots")
    }
}

impl fmt::Display for PencilCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

/// Distinct rational roots of `sum c[k] t^k`, by the rational root theorem.
fn rational_roots(c: &[Scalar]) -> Result<Vec<Scalar>, SystemError> {
    let lcm = c.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = c.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let (Some(c0), Some(cn)) = (ints.first(), ints.last()) else {
        return Ok(Vec::new());
    };
    let ps = divisors(&c0.abs())?;
    let qs = divisors(&cn.abs())?;
    let mut roots: Vec<Scalar> = Vec::new();
    for p in &ps {
        for q in &qs {
            for cand in [
                Scalar::new(p.clone(), q.clone()),
                Scalar::new(-p.clone(), q.clone()),
            ] {
                if roots.contains(&cand) {
                    continue;
                }
                let v = c
                    .iter()
                    .rev()
                    .fold(Scalar::zero(), |acc, coeff| acc * &cand + coeff);
                if v.is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    Ok(roots)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, SystemError> {
    let n: u64 = n
        .try_into()
        .map_err(|_| SystemError::InvalidCubic("coefficients too large to factor".into()))?;
    if n > 1 << 40 {
        return Err(SystemError::InvalidCubic(
            "coefficients too large to factor".into(),
        ));
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

/// A linear system: the projectivized span of homogeneous generators of a
/// common degree. Generators are stored monic and without scalar duplicates.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    ring: Ring,
    degree: u32,
    generators: Vec<Polynomial>,
    span: OnceLock<SpanBasis>,
}

impl LinearSystem {
    pub fn new(ring: &Ring, degree: u32, generators: Vec<Polynomial>) -> Result<Self, SystemError> {
        let ws = WeightSystem::standard(ring.arity());
        let mut gens: Vec<Polynomial> = Vec::with_capacity(generators.len());
        for g in generators {
            ring.ensure_same(g.ring())?;
            if !is_homogeneous(&g, &ws)?.has_degree(u64::from(degree)) {
                return Err(SystemError::NotHomogeneous {
                    generator: g.to_string(),
                    degree,
                });
            }
            if g.is_zero() {
                continue;
            }
            let g = g.monic();
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(LinearSystem {
            ring: ring.clone(),
            degree,
            generators: gens,
            span: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn span(&self) -> &SpanBasis {
        self.span
            .get_or_init(|| SpanBasis::from_polys(&self.ring, &self.generators))
    }

    /// Rank of the generators over the rationals.
    pub fn rank(&self) -> usize {
        polynomial_rank(&self.generators)
    }

    /// Projective dimension: rank minus one (`-1` for the empty system).
    pub fn projective_dim(&self) -> i64 {
        self.rank() as i64 - 1
    }

    /// Whether `f` lies in the span. Forms of the wrong degree are never members.
    pub fn member(&self, f: &Polynomial) -> bool {
        if f.ring() != &self.ring {
            log::warn!(
                "membership test across rings: {} vs {}",
                f.ring(),
                self.ring
            );
            return false;
        }
        let ws = WeightSystem::standard(self.ring.arity());
        let homogeneous = is_homogeneous(f, &ws)
            .map(|h| h.has_degree(u64::from(self.degree)))
            .unwrap_or(false);
        if !homogeneous {
            log::warn!("{f} is not homogeneous of degree {}", self.degree);
            return false;
        }
        self.span().contains(f)
    }

    /// Same ambient ring, same degree and the same span.
    pub fn span_eq(&self, other: &LinearSystem) -> bool {
        self.ring == other.ring
            && self.degree == other.degree
            && self.span().rank() == other.span().rank()
            && other.generators.iter().all(|g| self.member(g))
    }

    /// A pseudo-random rational combination of the generators, reproducible
    /// from `seed`. Coefficients have numerators in `1..=9` (either sign) and
    /// denominators in `1..=5`.
    pub fn random_member(&self, seed: u64) -> Polynomial {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.generators
            .iter()
            .fold(Polynomial::zero(&self.ring), |acc, g| {
                let num: i64 = rng.random_range(1..=9) * if rng.random_bool(0.5) { -1 } else { 1 };
                let den: i64 = rng.random_range(1..=5);
                &acc + &g.scale(&crate::poly::frac(num, den))
            })
    }
}

fn require_p3(f: &Polynomial) -> Result<(), SystemError> {
    Ok(Ring::projective3().ensure_same(f.ring())?)
}

/// Order of vanishing along `r: x1 = x2 = 0`, i.e. the least
/// `(x1, x2)`-degree of a term.
pub fn multiplicity_along_r(f: &Polynomial) -> Result<u32, SystemError> {
    require_p3(f)?;
    f.monomials()
        .map(|m| m.exponent(X1) + m.exponent(X2))
        .min()
        .ok_or(SystemError::ZeroMultiplicity)
}

/// Substitutes `x2 = t*x1`, landing in the ring `(t, x1, x3, x4)`.
pub fn restrict_pencil(f: &Polynomial) -> Result<Polynomial, SystemError> {
    require_p3(f)?;
    let pencil = Ring::pencil();
    let tx1 = &Polynomial::var(&pencil, PT) * &Polynomial::var(&pencil, PX1);
    let sub = Substitution::by_name(f.ring(), &pencil).set("x2", tx1)?;
    Ok(f.substitute(&sub)?)
}

/// Specializes `t` to a rational value in a polynomial of the pencil ring.
pub fn at_pencil_parameter(g: &Polynomial, t: &Scalar) -> Result<Polynomial, SystemError> {
    let pencil = Ring::pencil();
    pencil.ensure_same(g.ring())?;
    let sub = Substitution::identity(&pencil).set("t", Polynomial::constant(&pencil, t.clone()))?;
    Ok(g.substitute(&sub)?)
}

/// Restriction of `f` to the plane `x2 = t*x1` for a fixed `t`.
pub fn restrict_to_pencil_plane(f: &Polynomial, t: &Scalar) -> Result<Polynomial, SystemError> {
    at_pencil_parameter(&restrict_pencil(f)?, t)
}

/// Divides by `x1^k` after restricting to the pencil: the residual curve in a
/// general plane through `r`.
pub fn pencil_residual(f: &Polynomial, k: u32) -> Result<Polynomial, SystemError> {
    Ok(restrict_pencil(f)?.factor_out(PX1, k)?)
}

/// True if every term of a pencil-ring polynomial has degree at most one in
/// `x1, x3, x4` (the parameter `t` is not counted).
pub fn is_at_most_linear_off_t(g: &Polynomial) -> bool {
    g.monomials()
        .all(|m| m.exponent(PX1) + m.exponent(PX3) + m.exponent(PX4) <= 1)
}

/// One of the two coordinate planes through `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordinatePlane {
    /// `x1 = 0`
    X1Zero,
    /// `x2 = 0`
    X2Zero,
}

impl CoordinatePlane {
    fn vanishing(self) -> usize {
        match self {
            CoordinatePlane::X1Zero => X1,
            CoordinatePlane::X2Zero => X2,
        }
    }

    fn surviving(self) -> usize {
        match self {
            CoordinatePlane::X1Zero => X2,
            CoordinatePlane::X2Zero => X1,
        }
    }
}

impl fmt::Display for CoordinatePlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordinatePlane::X1Zero => f.write_str("x1=0"),
            CoordinatePlane::X2Zero => f.write_str("x2=0"),
        }
    }
}

/// Restricts `f` to a coordinate plane and divides out the fifth power of the
/// remaining pencil coordinate, leaving the residual curve in that plane.
pub fn coordinate_plane_residual(
    f: &Polynomial,
    plane: CoordinatePlane,
) -> Result<Polynomial, SystemError> {
    require_p3(f)?;
    let ring = f.ring();
    let sub =
        Substitution::identity(ring).set(ring.name(plane.vanishing()), Polynomial::zero(ring))?;
    Ok(f.substitute(&sub)?.factor_out(plane.surviving(), 5)?)
}

/// On each coordinate plane through `r`, the residual of `f` is a linear
/// form (or zero) without an `x4` term, i.e. a line through `q = [0,0,0,1]`.
pub fn residual_lines_pass_through_q(f: &Polynomial) -> Result<bool, SystemError> {
    for plane in [CoordinatePlane::X1Zero, CoordinatePlane::X2Zero] {
        let residual = match coordinate_plane_residual(f, plane) {
            Ok(res) => res,
            Err(SystemError::Poly(PolyError::NotDivisible)) => return Ok(false),
            Err(e) => return Err(e),
        };
        let linear = residual.monomials().all(|m| m.degree() == 1);
        if !linear || residual.degree_in(X4) > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// At each root `t` of the cubic, the restriction of `f` to the plane
/// `x2 = t*x1` is a scalar multiple of `x1^6`.
pub fn restricts_to_r_at_roots(f: &Polynomial, xi: &PencilCubic) -> Result<bool, SystemError> {
    let x1_6 = Monomial::new(vec![0, 6, 0, 0]);
    for t in xi.roots() {
        let g = restrict_to_pencil_plane(f, t)?;
        if g.monomials().any(|m| m != &x1_6) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The degree-6 system with generators `x1*x2*x4*xi`, `x3*xi*m2`, `m6`.
pub fn build_system_s(xi: &PencilCubic) -> LinearSystem {
    let ring = Ring::projective3();
    let xi_f = xi.form();
    let x3xi = &x(X3) * xi_f;
    let mut gens = vec![&(&(&x(X1) * &x(X2)) * &x(X4)) * xi_f];
    gens.extend(binary_forms(2).iter().map(|m| &x3xi * m));
    gens.extend(binary_forms(6));
    LinearSystem::new(&ring, 6, gens).expect("generators are sextic forms")
}

/// The degree-12 system with 1 + 3 + 7 + 1 + 5 + 9 + 13 generators.
pub fn build_system_t(xi: &PencilCubic) -> LinearSystem {
    let ring = Ring::projective3();
    let xi_f = xi.form();
    let u = &(&(&x(X1) * &x(X2)) * &x(X4)) * xi_f; // weight-6 block
    let v = &x(X3) * xi_f; // weight-4 block
    let mut gens = vec![u.pow(2)];
    gens.extend(binary_forms(2).iter().map(|m| &(&u * &v) * m));
    gens.extend(binary_forms(6).iter().map(|m| &u * m));
    gens.push(v.pow(3));
    gens.extend(binary_forms(4).iter().map(|m| &v.pow(2) * m));
    gens.extend(binary_forms(8).iter().map(|m| &v * m));
    gens.extend(binary_forms(12));
    LinearSystem::new(&ring, 12, gens).expect("generators are degree-12 forms")
}

/// The sextic monomials with multiplicity at least 5 along `r`.
pub fn sprime_candidates() -> Vec<Polynomial> {
    let ring = Ring::projective3();
    enumerate_monomials(&WeightSystem::standard(4), 6)
        .into_iter()
        .filter(|m| m.exponent(X1) + m.exponent(X2) >= 5)
        .map(|m| Polynomial::monomial(&ring, m))
        .collect()
}

/// The linear conditions defining the constrained sextic system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SprimeCondition {
    /// On `x1 = 0`, no `x2^5*x4` term.
    LineThroughQ(CoordinatePlane),
    /// On `x2 = t_i*x1`, only `x1^6` survives (two conditions: the `x1^5*x3`
    /// and `x1^5*x4` coefficients vanish).
    OnlyRAtRoot(usize),
}

impl SprimeCondition {
    pub fn all() -> Vec<SprimeCondition> {
        vec![
            SprimeCondition::LineThroughQ(CoordinatePlane::X1Zero),
            SprimeCondition::LineThroughQ(CoordinatePlane::X2Zero),
            SprimeCondition::OnlyRAtRoot(0),
            SprimeCondition::OnlyRAtRoot(1),
            SprimeCondition::OnlyRAtRoot(2),
        ]
    }
}

/// Constraint matrix: one row per scalar condition, one column per candidate.
pub fn sprime_constraint_rows(
    xi: &PencilCubic,
    conditions: &[SprimeCondition],
    candidates: &[Polynomial],
) -> Result<Vec<Vec<Scalar>>, SystemError> {
    let mut rows = Vec::new();
    for cond in conditions {
        match *cond {
            SprimeCondition::LineThroughQ(plane) => {
                let mut e = [0u32; 4];
                e[plane.surviving()] = 5;
                e[X4] = 1;
                let target = p3_monomial(e);
                let ring = Ring::projective3();
                let sub = Substitution::identity(&ring)
                    .set(ring.name(plane.vanishing()), Polynomial::zero(&ring))?;
                let row = candidates
                    .iter()
                    .map(|g| Ok(g.substitute(&sub)?.coefficient(&target)))
                    .collect::<Result<Vec<_>, SystemError>>()?;
                rows.push(row);
            }
            SprimeCondition::OnlyRAtRoot(i) => {
                let t = xi
                    .roots()
                    .get(i)
                    .ok_or_else(|| SystemError::InvalidCubic(format!("no root with index {i}")))?;
                let restricted = candidates
                    .iter()
                    .map(|g| restrict_to_pencil_plane(g, t))
                    .collect::<Result<Vec<_>, _>>()?;
                for off_r in [[0, 5, 1, 0], [0, 5, 0, 1]] {
                    let target = Monomial::new(off_r.to_vec());
                    rows.push(restricted.iter().map(|h| h.coefficient(&target)).collect());
                }
            }
        }
    }
    Ok(rows)
}

/// Solves the chosen conditions over the candidate sextics and returns the
/// solution space as a linear system.
pub fn solve_sprime_with(
    xi: &PencilCubic,
    conditions: &[SprimeCondition],
) -> Result<LinearSystem, SystemError> {
    let candidates = sprime_candidates();
    let rows = sprime_constraint_rows(xi, conditions, &candidates)?;
    let basis = nullspace(&rows, candidates.len());
    let ring = Ring::projective3();
    let gens = basis
        .iter()
        .map(|v| {
            candidates
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .fold(Polynomial::zero(&ring), |acc, (g, c)| &acc + &g.scale(c))
        })
        .collect();
    LinearSystem::new(&ring, 6, gens)
}

/// The full constrained sextic system (all eight conditions).
pub fn solve_constraints_sprime(xi: &PencilCubic) -> Result<LinearSystem, SystemError> {
    solve_sprime_with(xi, &SprimeCondition::all())
}
