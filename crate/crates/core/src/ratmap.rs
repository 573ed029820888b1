//! Graded rational maps from projective 3-space into weighted projective
//! space, and pullback of weighted forms along them.

use crate::error::{GradingError, SystemError};
use crate::grading::{is_homogeneous, weighted_degree, Homogeneity, WeightSystem};
use crate::linalg::SpanBasis;
use crate::linsys::{build_system_t, LinearSystem, PencilCubic};
use crate::poly::{Monomial, Polynomial, Ring, Substitution};
use crate::wps::WeightedProjectiveSpace;

/// A map `[f_1 : ... : f_n]` into `P(w_1, ..., w_n)` where `f_i` is an
/// ordinary form of degree `multiplier * w_i`.
#[derive(Clone, Debug)]
pub struct GradedRationalMap {
    source: Ring,
    target: Ring,
    weights: WeightSystem,
    components: Vec<Polynomial>,
    multiplier: u32,
}

impl GradedRationalMap {
    pub fn new(
        target: &Ring,
        weights: WeightSystem,
        components: Vec<Polynomial>,
        multiplier: u32,
    ) -> Result<Self, SystemError> {
        if target.arity() != weights.arity() || components.len() != weights.arity() {
            return Err(GradingError::Arity {
                weights: weights.arity(),
                vars: components.len(),
            }
            .into());
        }
        let source = components
            .first()
            .map(|c| c.ring().clone())
            .ok_or(GradingError::Empty)?;
        let standard = WeightSystem::standard(source.arity());
        for (i, (c, &w)) in components.iter().zip(weights.weights()).enumerate() {
            source.ensure_same(c.ring())?;
            let expected = multiplier * w;
            let ok = !c.is_zero() && is_homogeneous(c, &standard)?.has_degree(u64::from(expected));
            if !ok {
                return Err(SystemError::DegreeMismatch {
                    index: i,
                    component: c.to_string(),
                    found: c.total_degree(),
                    expected,
                });
            }
        }
        Ok(GradedRationalMap {
            source,
            target: target.clone(),
            weights,
            components,
            multiplier,
        })
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn multiplier(&self) -> u32 {
        self.multiplier
    }

    /// Substitutes the components into a weighted-homogeneous form on the
    /// target. A form of weighted degree `k` pulls back to an ordinary form of
    /// degree `multiplier * k`.
    pub fn pullback(&self, g: &Polynomial) -> Result<Polynomial, SystemError> {
        self.target.ensure_same(g.ring())?;
        let k = match is_homogeneous(g, &self.weights)? {
            Homogeneity::AnyDegree => return Ok(Polynomial::zero(&self.source)),
            Homogeneity::Degree(k) => k,
            Homogeneity::Mixed => {
                return Err(SystemError::NotHomogeneous {
                    generator: g.to_string(),
                    degree: 0,
                })
            }
        };
        let mut sub = Substitution::new(&self.target, &self.source);
        for (name, c) in self.target.names().iter().zip(&self.components) {
            sub = sub.set(name, c.clone())?;
        }
        let out = g.substitute(&sub)?;
        let expected = u64::from(self.multiplier) * k;
        let standard = WeightSystem::standard(self.source.arity());
        if !is_homogeneous(&out, &standard)?.has_degree(expected) {
            return Err(SystemError::DegreeMismatch {
                index: 0,
                component: out.to_string(),
                found: out.total_degree(),
                expected: expected as u32,
            });
        }
        Ok(out)
    }

    /// The linear system spanned by the pullbacks of target monomials of a
    /// single weighted degree.
    pub fn pullback_system(&self, basis: &[Monomial]) -> Result<LinearSystem, SystemError> {
        let mut degree = None;
        for m in basis {
            let d = weighted_degree(m, &self.weights)?;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(GradingError::MixedDegrees(e, d).into()),
                Some(_) => {}
            }
        }
        let gens = basis
            .iter()
            .map(|m| self.pullback(&Polynomial::monomial(&self.target, m.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let degree = degree.unwrap_or(0) * u64::from(self.multiplier);
        LinearSystem::new(&self.source, degree as u32, gens)
    }
}

/// `eta = [x1 : x2 : x3*xi : x1*x2*x4*xi]` into `P(1,1,4,6)` for an
/// arbitrary binary form `xi`. Only a cubic `xi` gives a graded map.
pub fn eta_from_form(xi: &Polynomial) -> Result<GradedRationalMap, SystemError> {
    let ring = xi.ring().clone();
    let v = |name: &str| Polynomial::var_named(&ring, name);
    let components = vec![
        v("x1")?,
        v("x2")?,
        &v("x3")? * xi,
        &(&(&v("x1")? * &v("x2")?) * &v("x4")?) * xi,
    ];
    let weights = WeightSystem::new(vec![1, 1, 4, 6])?;
    GradedRationalMap::new(&Ring::weighted4(), weights, components, 1)
}

pub fn make_eta(xi: &PencilCubic) -> GradedRationalMap {
    eta_from_form(xi.form()).expect("a pencil cubic gives a graded map")
}

/// Outcome of comparing the pulled-back anticanonical system with a target
/// linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub pullback_generators: usize,
    pub pullback_rank: usize,
    pub system_rank: usize,
    pub union_rank: usize,
    /// Pulled-back forms that are literally generators of the target system.
    pub matched_generators: usize,
    /// Pullbacks outside the target span, in basis order.
    pub pullbacks_outside: Vec<String>,
    /// Target generators outside the pulled-back span.
    pub generators_outside: Vec<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.pullback_rank == self.pullback_generators
            && self.pullback_rank == self.system_rank
            && self.union_rank == self.system_rank
            && self.pullbacks_outside.is_empty()
            && self.generators_outside.is_empty()
    }
}

/// Compares `span(eta^* anticanonical monomials)` with `system` by mutual
/// membership and ranks.
pub fn compare_with_system(
    eta: &GradedRationalMap,
    system: &LinearSystem,
) -> Result<TheoremReport, SystemError> {
    let space = WeightedProjectiveSpace::new(eta.weights().clone())?;
    let basis = space.anticanonical_basis();
    let pulled = eta.pullback_system(&basis)?;
    let ring = system.ring();
    let pulled_span = SpanBasis::from_polys(ring, pulled.generators());
    let system_span = SpanBasis::from_polys(ring, system.generators());
    let mut union = system_span.clone();
    for g in pulled.generators() {
        union.insert(g);
    }
    let pullbacks_outside = pulled
        .generators()
        .iter()
        .filter(|g| !system_span.contains(g))
        .map(ToString::to_string)
        .collect();
    let generators_outside = system
        .generators()
        .iter()
        .filter(|g| !pulled_span.contains(g))
        .map(ToString::to_string)
        .collect();
    let matched_generators = pulled
        .generators()
        .iter()
        .filter(|g| system.generators().contains(g))
        .count();
    Ok(TheoremReport {
        pullback_generators: basis.len(),
        pullback_rank: pulled_span.rank(),
        system_rank: system_span.rank(),
        union_rank: union.rank(),
        matched_generators,
        pullbacks_outside,
        generators_outside,
    })
}

/// The anticanonical system of `P(1,1,4,6)` pulled back along `eta` spans
/// exactly the degree-12 system built from `xi`.
pub fn theorem_check(xi: &PencilCubic) -> TheoremReport {
    compare_with_system(&make_eta(xi), &build_system_t(xi)).expect("eta and T share a ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linsys::multiplicity_along_r;

    fn y(s: &str) -> Polynomial {
        Polynomial::parse(&Ring::weighted4(), s).unwrap()
    }

    fn p3(s: &str) -> Polynomial {
        Polynomial::parse(&Ring::projective3(), s).unwrap()
    }

    #[test]
    fn eta_grading() {
        let eta = make_eta(&PencilCubic::default());
        let degs: Vec<_> = eta
            .components()
            .iter()
            .map(|c| c.total_degree().unwrap())
            .collect();
        assert_eq!(degs, vec![1, 1, 4, 6]);
        assert_eq!(eta.weights().weights(), &[1, 1, 4, 6]);
        assert_eq!(eta.multiplier(), 1);
    }

    #[test]
    fn quadratic_xi_breaks_grading() {
        let err = eta_from_form(&p3("x2^2 - x1^2")).unwrap_err();
        assert!(matches!(
            err,
            SystemError::DegreeMismatch {
                index: 2,
                expected: 4,
                ..
            }
        ));
    }

    #[test]
    fn pullbacks() {
        let xi = PencilCubic::default();
        let eta = make_eta(&xi);
        let u = &p3("x1*x2*x4") * xi.form();
        assert_eq!(eta.pullback(&y("y4^2")).unwrap(), u.pow(2));
        assert_eq!(
            eta.pullback(&y("y3^3")).unwrap(),
            (&p3("x3") * xi.form()).pow(3)
        );
        assert_eq!(eta.pullback(&y("y1^5*y2^7")).unwrap(), p3("x1^5*x2^7"));
        assert!(eta.pullback(&y("y1 + y3")).is_err());
        assert!(eta.pullback(&y("0")).unwrap().is_zero());
    }

    #[test]
    fn pullback_of_anticanonical_basis() {
        let eta = make_eta(&PencilCubic::default());
        let basis = WeightedProjectiveSpace::from_weights(&[1, 1, 4, 6])
            .unwrap()
            .anticanonical_basis();
        let sys = eta.pullback_system(&basis).unwrap();
        assert_eq!(sys.generators().len(), 39);
        assert_eq!(sys.projective_dim(), 38);
        for g in sys.generators() {
            assert!(multiplicity_along_r(g).unwrap() >= 9);
        }
        let single = eta
            .pullback_system(&[Monomial::new(vec![12, 0, 0, 0])])
            .unwrap();
        assert_eq!(single.generators(), &[p3("x1^12")]);
        let mixed = [
            Monomial::new(vec![12, 0, 0, 0]),
            Monomial::new(vec![0, 0, 1, 0]),
        ];
        assert!(matches!(
            eta.pullback_system(&mixed),
            Err(SystemError::Grading(GradingError::MixedDegrees(12, 4)))
        ));
    }

    #[test]
    fn theorem_passes_for_default_and_alternate_cubic() {
        let r = theorem_check(&PencilCubic::default());
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.pullback_rank, r.system_rank, r.union_rank), (39, 39, 39));
        assert_eq!(r.matched_generators, 39);
        let alt = PencilCubic::parse("x2^3 - 13*x1*x2^2 + 47*x1^2*x2 - 35*x1^3").unwrap();
        assert!(theorem_check(&alt).passed());
    }

    #[test]
    fn tampered_system_fails() {
        let xi = PencilCubic::default();
        let t = build_system_t(&xi);
        let fewer = LinearSystem::new(t.ring(), 12, t.generators()[1..].to_vec()).unwrap();
        let r = compare_with_system(&make_eta(&xi), &fewer).unwrap();
        assert!(!r.passed());
        assert_eq!(r.system_rank, 38);
        assert_eq!(r.pullback_rank, 39);
        assert_eq!(r.pullbacks_outside.len(), 1);
    }
}
