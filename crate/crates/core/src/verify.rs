//! The verification pipeline: every check of every suite, run in a fixed
//! order and reported as [`CheckRecord`]s.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bundle::{system_dim, BundleSystemSpec, RuledClass, SplitBundle};
use crate::error::SystemError;
use crate::grading::{enumerate_monomials, hilbert_count, WeightSystem};
use crate::linalg::rank;
use crate::linsys::{
    build_system_s, build_system_t, is_at_most_linear_off_t, multiplicity_along_r, pencil_residual,
    residual_lines_pass_through_q, restricts_to_r_at_roots, solve_constraints_sprime,
    sprime_candidates, sprime_constraint_rows, PencilCubic, SprimeCondition,
};
use crate::poly::{Polynomial, Ring};
use crate::ratmap::{make_eta, theorem_check};
use crate::wps::WeightedProjectiveSpace;

/// Seed used for random members when none is configured.
pub const DEFAULT_SEED: u64 = 1146;

/// Second cubic the theorem suite always runs against.
pub const ALTERNATE_XI: &str = "x2^3-13*x1*x2^2+47*x1^2*x2-35*x1^3";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// One line of the report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub description: String,
    /// Short statement of the fact being checked, or `"plumbing"`.
    #[serde(rename = "paper_ref")]
    pub anchor: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    /// Wall-clock seconds.
    #[serde(with = "seconds")]
    pub elapsed: Duration,
}

impl CheckRecord {
    /// Equality ignoring `elapsed`.
    pub fn same_outcome(&self, other: &CheckRecord) -> bool {
        self.check_id == other.check_id
            && self.description == other.description
            && self.anchor == other.anchor
            && self.status == other.status
            && self.computed == other.computed
            && self.expected == other.expected
    }
}

mod seconds {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        Duration::try_from_secs_f64(secs).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Wps,
    Scroll,
    SystemS,
    SystemT,
    Theorem,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Wps,
        Suite::Scroll,
        Suite::SystemS,
        Suite::SystemT,
        Suite::Theorem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Wps => "wps",
            Suite::Scroll => "scroll",
            Suite::SystemS => "system-s",
            Suite::SystemT => "system-t",
            Suite::Theorem => "theorem",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("invalid cubic: {0}")]
    Cubic(#[from] SystemError),
    #[error("unknown suite {0:?} (expected one of wps, scroll, system-s, system-t, theorem, all)")]
    UnknownSuite(String),
}

#[derive(Clone, Debug)]
pub struct Config {
    pub xi: PencilCubic,
    pub seed: u64,
    /// Suites to run, in declaration order. Empty means all.
    pub suites: Vec<Suite>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            xi: PencilCubic::default(),
            seed: DEFAULT_SEED,
            suites: Vec::new(),
        }
    }
}

impl Config {
    /// Builds a configuration, validating the cubic text before anything runs.
    pub fn new(
        xi: Option<&str>,
        seed: Option<u64>,
        suite: Option<&str>,
    ) -> Result<Self, ConfigError> {
        let xi = match xi {
            Some(text) => PencilCubic::parse(text)?,
            None => PencilCubic::default(),
        };
        let suites = match suite {
            None | Some("all") => Vec::new(),
            Some(name) => vec![name.parse()?],
        };
        Ok(Config {
            xi,
            seed: seed.unwrap_or(DEFAULT_SEED),
            suites,
        })
    }

    fn selected(&self) -> Vec<Suite> {
        if self.suites.is_empty() {
            Suite::ALL.to_vec()
        } else {
            Suite::ALL
                .into_iter()
                .filter(|s| self.suites.contains(s))
                .collect()
        }
    }
}

type Outcome = Result<(String, String), String>;

struct Recorder {
    suite: Suite,
    records: Vec<CheckRecord>,
}

impl Recorder {
    fn check(&mut self, id: &str, description: &str, anchor: &str, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let (status, computed, expected) = match outcome {
            Ok((c, e)) if c == e => (Status::Pass, c, e),
            Ok((c, e)) => (Status::Fail, c, e),
            Err(msg) => (Status::Fail, format!("error: {msg}"), String::new()),
        };
        self.records.push(CheckRecord {
            check_id: format!("{}.{id}", self.suite),
            description: description.to_string(),
            anchor: anchor.to_string(),
            status,
            computed,
            expected,
            elapsed,
        });
    }
}

fn eq<T: ToString, U: ToString>(computed: T, expected: U) -> Outcome {
    Ok((computed.to_string(), expected.to_string()))
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

/// Runs the selected suites in declaration order.
pub fn run_all(config: &Config) -> Vec<CheckRecord> {
    config
        .selected()
        .into_iter()
        .flat_map(|suite| run_suite(suite, config))
        .collect()
}

pub fn run_suite(suite: Suite, config: &Config) -> Vec<CheckRecord> {
    let mut rec = Recorder {
        suite,
        records: Vec::new(),
    };
    match suite {
        Suite::Wps => wps_checks(&mut rec),
        Suite::Scroll => scroll_checks(&mut rec),
        Suite::SystemS => system_s_checks(&mut rec, config),
        Suite::SystemT => system_t_checks(&mut rec, config),
        Suite::Theorem => theorem_checks(&mut rec, config),
    }
    rec.records
}

fn wps(weights: &[u32]) -> Result<WeightedProjectiveSpace, String> {
    WeightedProjectiveSpace::from_weights(weights).map_err(err)
}

/// Counts of the anticanonical basis of `P(1,1,4,6)` grouped by the
/// exponents of `y3, y4`, in the order `y4^2, y3*y4, y4, y3^3, y3^2, y3, 1`.
pub fn anticanonical_block_sizes() -> Vec<usize> {
    let basis = WeightedProjectiveSpace::from_weights(&[1, 1, 4, 6])
        .expect("well-formed")
        .anticanonical_basis();
    [(0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)]
        .iter()
        .map(|&(e3, e4)| {
            basis
                .iter()
                .filter(|m| m.exponent(2) == e3 && m.exponent(3) == e4)
                .count()
        })
        .collect()
}

fn wps_checks(rec: &mut Recorder) {
    let w1146 = WeightSystem::new(vec![1, 1, 4, 6]).expect("static weights");
    rec.check(
        "hilbert-count",
        "number of weighted-degree-12 monomials for weights (1,1,4,6), by recurrence",
        "dim|-K| = 38 on P(1,1,4,6)",
        || eq(hilbert_count(&w1146, 12), 39),
    );
    rec.check(
        "hilbert-enumeration",
        "explicit enumeration agrees with the recurrence count",
        "dim|-K| = 38 on P(1,1,4,6)",
        || {
            eq(
                enumerate_monomials(&w1146, 12).len() as u128,
                hilbert_count(&w1146, 12),
            )
        },
    );
    rec.check(
        "anticanonical-weight",
        "-K = O(sum of weights) on P(1,1,4,6)",
        "-K = O(12), very ample",
        || eq(wps(&[1, 1, 4, 6])?.anticanonical_weight(), 12),
    );
    rec.check(
        "anticanonical-dim",
        "projective dimension of the anticanonical system of P(1,1,4,6)",
        "dim|-K| = 38 on P(1,1,4,6)",
        || eq(wps(&[1, 1, 4, 6])?.anticanonical_dim(), 38),
    );
    rec.check(
        "degree-1146",
        "(-K)^3 = (sum w)^3 / prod w for P(1,1,4,6)",
        "-K^3 = 72 on P(1,1,4,6)",
        || eq(wps(&[1, 1, 4, 6])?.anticanonical_selfintersection(), 72),
    );
    rec.check(
        "degree-1113",
        "(-K)^3 for P(1,1,1,3)",
        "-K^3 = 72 on P(1,1,1,3)",
        || eq(wps(&[1, 1, 1, 3])?.anticanonical_selfintersection(), 72),
    );
    rec.check(
        "basis-1113",
        "anticanonical basis size of P(1,1,1,3)",
        "P(1,1,1,3) embeds anticanonically in P^38",
        || eq(wps(&[1, 1, 1, 3])?.anticanonical_basis().len(), 39),
    );
    rec.check(
        "basis-shape",
        "anticanonical monomials grouped as y4^2, y3*y4*f2, y4*f6, y3^3, y3^2*f4, y3*f8, f12",
        "a*y4^2 + y3*y4*f2 + y4*f6 + b*y3^3 + y3^2*f4 + y3*f8 + f12",
        || {
            let sizes: Vec<String> = anticanonical_block_sizes()
                .iter()
                .map(usize::to_string)
                .collect();
            eq(sizes.join("+"), "1+3+7+1+5+9+13")
        },
    );
}

fn scroll_checks(rec: &mut Recorder) {
    let h = RuledClass::new(4, 1, 6);
    let e = RuledClass::section(4);
    let f = RuledClass::fibre(4);
    rec.check(
        "scroll-degree",
        "(E+6F)^2 on F_4",
        "|E+6F| embeds F_4 as a scroll of degree 8",
        || eq(h.intersect(&h).map_err(err)?, 8),
    );
    rec.check(
        "section-conic",
        "E.(E+6F) on F_4",
        "E maps to a conic",
        || eq(e.intersect(&h).map_err(err)?, 2),
    );
    rec.check(
        "ruling-lines",
        "F.(E+6F) on F_4",
        "the rulings F map to lines",
        || eq(f.intersect(&h).map_err(err)?, 1),
    );
    rec.check(
        "scroll-span",
        "h0(O(2)+O(6)) on the projective line",
        "Y spans P^9",
        || eq(SplitBundle::new(vec![2, 6]).map_err(err)?.h0(), 10),
    );
    rec.check(
        "cone-span",
        "dim |L| on P(O+O(2)+O(6))",
        "the cone X spans P^10",
        || {
            let b = SplitBundle::new(vec![0, 2, 6]).map_err(err)?;
            eq(system_dim(&b, BundleSystemSpec { a: 1, b: 0 }), 10)
        },
    );
    rec.check(
        "cubic-system-dim",
        "dim |3L - 6P| on P(O+O(2)+O(6))",
        "dim |3L-6P| = 38",
        || {
            let b = SplitBundle::new(vec![0, 2, 6]).map_err(err)?;
            eq(system_dim(&b, BundleSystemSpec { a: 3, b: -6 }), 38)
        },
    );
    rec.check(
        "dims-agree",
        "dim |3L - 6P| equals dim |-K| of P(1,1,4,6)",
        "dim |3L-6P| = 38 = dim|-K|",
        || {
            let b = SplitBundle::new(vec![0, 2, 6]).map_err(err)?;
            eq(
                system_dim(&b, BundleSystemSpec { a: 3, b: -6 }),
                wps(&[1, 1, 4, 6])?.anticanonical_dim(),
            )
        },
    );
}

fn system_s_checks(rec: &mut Recorder, config: &Config) {
    let xi = &config.xi;
    let s = build_system_s(xi);
    let generic = s.random_member(config.seed);
    rec.check(
        "generators",
        "number of generators x1*x2*x4*xi, x3*xi*m2, m6",
        "the sextic system has 11 free coefficients",
        || eq(s.generators().len(), 11),
    );
    rec.check(
        "dimension",
        "projective dimension of the sextic system",
        "dim S = 10",
        || eq(s.projective_dim(), 10),
    );
    rec.check(
        "degree",
        "every generator is a sextic form",
        "S consists of sextics",
        || {
            let bad = s
                .generators()
                .iter()
                .filter(|g| g.total_degree() != Some(6))
                .count();
            eq(
                format!("{bad} non-sextic generators"),
                "0 non-sextic generators",
            )
        },
    );
    rec.check(
        "multiplicity-r",
        "min multiplicity along r over generators, and multiplicity of a random member",
        "multiplicity 5 along r",
        || {
            let min = s
                .generators()
                .iter()
                .map(multiplicity_along_r)
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?
                .into_iter()
                .min()
                .unwrap_or(0);
            let gen = multiplicity_along_r(&generic).map_err(err)?;
            eq(format!("min={min} generic={gen}"), "min=5 generic=5")
        },
    );
    rec.check(
        "pencil-residual",
        "restricted to x2=t*x1, a random member is x1^5 times a form linear in x1,x3,x4",
        "the variable intersection with a plane of the pencil is a line",
        || {
            let residual = pencil_residual(&generic, 5).map_err(err)?;
            let linear = is_at_most_linear_off_t(&residual) && !residual.is_zero();
            eq(linear, true)
        },
    );
    rec.check(
        "lines-through-q",
        "on x1=0 and x2=0, residual lines omit x4 (all generators and a random member)",
        "surfaces meet alpha1, alpha2 off r in lines through q",
        || {
            let forms = s.generators().len() + 1;
            let mut failing = Vec::new();
            for g in s.generators().iter().chain(std::iter::once(&generic)) {
                if !residual_lines_pass_through_q(g).map_err(err)? {
                    failing.push(g.to_string());
                }
            }
            eq(
                format!(
                    "{} of {} forms, failing: [{}]",
                    forms - failing.len(),
                    forms,
                    failing.join("; ")
                ),
                format!("{forms} of {forms} forms, failing: []"),
            )
        },
    );
    rec.check(
        "r-at-roots",
        "at each root t of xi, restriction to x2=t*x1 is a multiple of x1^6 (all generators and a random member)",
        "surfaces meet alpha3, alpha4, alpha5 in r with multiplicity 6",
        || {
            let forms = s.generators().len() + 1;
            let mut failing = Vec::new();
            for g in s.generators().iter().chain(std::iter::once(&generic)) {
                if !restricts_to_r_at_roots(g, xi).map_err(err)? {
                    failing.push(g.to_string());
                }
            }
            eq(format!("{} of {} forms, failing: [{}]", forms - failing.len(), forms, failing.join("; ")), format!("{forms} of {forms} forms, failing: []"))
        },
    );
    rec.check(
        "sprime-conditions",
        "rank of the constraint matrix on the 19 candidate sextics (the bound argument counts at most 7)",
        "dim S' <= 10 implies S = S'",
        || {
            let cands = sprime_candidates();
            let rows = sprime_constraint_rows(xi, &SprimeCondition::all(), &cands).map_err(err)?;
            eq(
                format!("{} candidates, {} conditions, rank {}", cands.len(), rows.len(), rank(&rows)),
                "19 candidates, 8 conditions, rank 8",
            )
        },
    );
    rec.check(
        "sprime-dimension",
        "dimension of the solution space of the constraints",
        "S = S'",
        || eq(solve_constraints_sprime(xi).map_err(err)?.rank(), 11),
    );
    rec.check(
        "sprime-equals-s",
        "solution space spans the same system as the explicit generators",
        "S = S'",
        || {
            let sp = solve_constraints_sprime(xi).map_err(err)?;
            eq(sp.span_eq(&s) && s.span_eq(&sp), true)
        },
    );
}

fn system_t_checks(rec: &mut Recorder, config: &Config) {
    let xi = &config.xi;
    let t = build_system_t(xi);
    let p3 = Ring::projective3();
    rec.check(
        "generators",
        "number of generators in the degree-12 system",
        "the degree-12 system has 39 free coefficients",
        || eq(t.generators().len(), 39),
    );
    rec.check(
        "dimension",
        "projective dimension of the degree-12 system",
        "dim T = 38",
        || eq(t.projective_dim(), 38),
    );
    rec.check(
        "degree",
        "every generator has degree 12",
        "T consists of forms of degree 12",
        || {
            let bad = t
                .generators()
                .iter()
                .filter(|g| g.total_degree() != Some(12))
                .count();
            eq(
                format!("{bad} generators of other degree"),
                "0 generators of other degree",
            )
        },
    );
    rec.check(
        "multiplicity-r",
        "minimum multiplicity along r over all generators (at least 9 for every member)",
        "members of T vanish to order 9 along r",
        || {
            let min = t
                .generators()
                .iter()
                .map(multiplicity_along_r)
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?
                .into_iter()
                .min()
                .unwrap_or(0);
            // attained by x3^3*xi^3
            eq(min, 9)
        },
    );
    rec.check(
        "displayed-members",
        "x1^2*x2^2*x4^2*xi^2 and x3^3*xi^3 belong to the system",
        "x1^2 x2^2 x4^2 xi^2 = 0 belongs to T",
        || {
            let u = &Polynomial::parse(&p3, "x1*x2*x4").map_err(err)? * xi.form();
            let v = &Polynomial::parse(&p3, "x3").map_err(err)? * xi.form();
            eq(
                format!("{} {}", t.member(&u.pow(2)), t.member(&v.pow(3))),
                "true true",
            )
        },
    );
    rec.check(
        "divide-by-phi6",
        "a cubic-hypersurface section divided by a sextic binary form lands in the system",
        "dividing by phi6 gives a surface in T",
        || {
            let u = &Polynomial::parse(&p3, "x1*x2*x4").map_err(err)? * xi.form();
            let phi6 = Polynomial::parse(&p3, "x1^6 - 2*x1^3*x2^3 + 5*x2^6").map_err(err)?;
            let q = (&u.pow(2) * &phi6).exact_divide(&phi6).map_err(err)?;
            eq(t.member(&q) && q == u.pow(2), true)
        },
    );
    rec.check(
        "non-member",
        "x4^12 has multiplicity 0 along r and is not in the system",
        "members of T vanish to order 9 along r",
        || {
            eq(
                t.member(&Polynomial::parse(&p3, "x4^12").map_err(err)?),
                false,
            )
        },
    );
}

fn theorem_checks(rec: &mut Recorder, config: &Config) {
    let xi = &config.xi;
    rec.check(
        "eta-grading",
        "component degrees of eta = [x1, x2, x3*xi, x1*x2*x4*xi]",
        "eta maps into P(1,1,4,6)",
        || {
            let eta = make_eta(xi);
            let degs: Vec<String> = eta
                .components()
                .iter()
                .map(|c| c.total_degree().map_or("-".into(), |d| d.to_string()))
                .collect();
            eq(degs.join(","), "1,1,4,6")
        },
    );
    rec.check(
        "pullback-dimension",
        "projective dimension of the pulled-back anticanonical system",
        "dim|-K| = 38 on P(1,1,4,6)",
        || {
            let eta = make_eta(xi);
            let basis = wps(&[1, 1, 4, 6])?.anticanonical_basis();
            eq(
                eta.pullback_system(&basis).map_err(err)?.projective_dim(),
                38,
            )
        },
    );
    let theorem = |rec: &mut Recorder, id: &str, xi: &PencilCubic| {
        rec.check(
            id,
            &format!(
                "span of eta^*(anticanonical monomials) equals the degree-12 system for xi = {xi}"
            ),
            "phi_L = phi_{-K} o eta",
            || {
                let r = theorem_check(xi);
                let mut summary = format!(
                    "ranks {}/{}/{} matched {}",
                    r.pullback_rank, r.system_rank, r.union_rank, r.matched_generators
                );
                if let Some(g) = r.pullbacks_outside.first().or(r.generators_outside.first()) {
                    summary.push_str(&format!(" outside {g}"));
                }
                eq(summary, "ranks 39/39/39 matched 39")
            },
        );
    };
    theorem(rec, "span-identity", xi);
    match PencilCubic::parse(ALTERNATE_XI) {
        Ok(alt) => theorem(rec, "span-identity-alternate", &alt),
        Err(e) => rec.check(
            "span-identity-alternate",
            "alternate cubic",
            "plumbing",
            || Err(err(e)),
        ),
    }
}

/// Human-readable table, one row per record plus a summary line.
pub fn render_table(records: &[CheckRecord]) -> String {
    let width = records
        .iter()
        .map(|r| r.check_id.len())
        .max()
        .unwrap_or(8)
        .max(8);
    let mut out = String::new();
    for r in records {
        out.push_str(&format!(
            "{:<4}  {:<width$}  {}  [computed: {}]\n",
            r.status, r.check_id, r.description, r.computed
        ));
    }
    let passed = records.iter().filter(|r| r.status == Status::Pass).count();
    let failed = records.iter().filter(|r| r.status == Status::Fail).count();
    out.push_str(&format!(
        "{passed} passed, {failed} failed, {} total\n",
        records.len()
    ));
    out
}

pub fn all_passed(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let records = run_all(&Config::default());
        assert!(records.len() >= 25);
        for r in &records {
            assert_eq!(r.status, Status::Pass, "{r:?}");
            assert!(!r.anchor.is_empty());
        }
    }

    #[test]
    fn suite_filter() {
        let cfg = Config::new(None, None, Some("wps")).unwrap();
        let records = run_all(&cfg);
        assert!(!records.is_empty());
        assert!(records.iter().all(|r| r.check_id.starts_with("wps.")));
    }

    #[test]
    fn repeated_root_is_a_config_error() {
        let err = Config::new(Some("x2^3 - 4*x1*x2^2 + 5*x1^2*x2 - 2*x1^3"), None, None);
        assert!(matches!(err, Err(ConfigError::Cubic(_))));
        assert!(matches!(
            Config::new(None, None, Some("nope")),
            Err(ConfigError::UnknownSuite(_))
        ));
    }

    #[test]
    fn block_sizes() {
        assert_eq!(anticanonical_block_sizes(), vec![1, 3, 7, 1, 5, 9, 13]);
    }
}
