//! Exact symbolic toolkit for the anticanonical model of the weighted
//! projective space `P(1,1,4,6)`.
//!
//! The crate checks, with exact rational arithmetic, that the degree-12
//! linear system on projective 3-space obtained from the cone over the
//! degree-8 scroll of `F_4` is the pullback of the anticanonical system of
//! `P(1,1,4,6)` along `eta = [x1 : x2 : x3*xi : x1*x2*x4*xi]`.
//!
//! - [`poly`]: sparse polynomials over the rationals, substitution, exact division
//! - [`grading`]: weighted degrees and monomial enumeration
//! - [`wps`]: anticanonical data of weighted projective spaces
//! - [`bundle`]: split bundles on the projective line, Hirzebruch intersections
//! - [`linsys`]: linear systems of surfaces and the constraint computations
//! - [`ratmap`]: graded rational maps and pullbacks
//! - [`verify`]: the full check pipeline and its report records

pub mod bundle;
pub mod error;
pub mod grading;
pub mod linalg;
pub mod linsys;
mod parse;
pub mod poly;
pub mod ratmap;
pub mod verify;
pub mod wps;

pub use bundle::{system_dim, BundleSystemSpec, RuledClass, SplitBundle};
pub use error::{BundleError, GradingError, PolyError, SystemError};
pub use grading::{
    enumerate_monomials, hilbert_count, is_homogeneous, weighted_degree, Homogeneity, WeightSystem,
};
pub use linsys::{
    build_system_s, build_system_t, solve_constraints_sprime, LinearSystem, PencilCubic,
};
pub use poly::{Monomial, Polynomial, Ring, Scalar, Substitution};
pub use ratmap::{make_eta, theorem_check, GradedRationalMap, TheoremReport};
pub use verify::{run_all, CheckRecord, Config, Status, Suite};
pub use wps::WeightedProjectiveSpace;
