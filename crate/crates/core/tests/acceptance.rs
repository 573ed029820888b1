//! Acceptance suite. Every comparison is exact; each criterion also has a
//! wall-clock budget. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{random_nonzero_poly, random_poly, random_weighted_form, series_oracle};
use fano_core::linsys::{
    is_at_most_linear_off_t, multiplicity_along_r, pencil_residual, residual_lines_pass_through_q,
    restricts_to_r_at_roots,
};
use fano_core::poly::int;
use fano_core::verify::ALTERNATE_XI;
use fano_core::{
    build_system_s, build_system_t, enumerate_monomials, hilbert_count, make_eta,
    solve_constraints_sprime, system_dim, theorem_check, BundleSystemSpec, PencilCubic, Polynomial,
    Ring, RuledClass, SplitBundle, Substitution, WeightSystem, WeightedProjectiveSpace,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x1146_0072;
const PROPERTY_CASES: usize = 1000;
const TOTAL_BUDGET: Duration = Duration::from_secs(10);

type Verdict = Result<String, String>;

fn ensure(cond: bool, detail: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail.into())
    }
}

fn space(w: &[u32]) -> WeightedProjectiveSpace {
    WeightedProjectiveSpace::from_weights(w).unwrap()
}

fn ac1_hilbert() -> Verdict {
    let ws = WeightSystem::new(vec![1, 1, 4, 6]).unwrap();
    let count = hilbert_count(&ws, 12);
    let dim = space(&[1, 1, 4, 6]).anticanonical_dim();
    ensure(count == 39, format!("hilbert_count = {count}"))?;
    ensure(dim == 38, format!("embedding dimension = {dim}"))?;
    Ok(format!("count {count}, dim {dim}"))
}

fn ac2_degree() -> Verdict {
    let mut parts = Vec::new();
    for w in [[1, 1, 4, 6], [1, 1, 1, 3]] {
        let p = space(&w);
        let deg = p.anticanonical_selfintersection();
        let n = p.anticanonical_basis().len();
        ensure(deg == int(72), format!("{w:?}: -K^3 = {deg}"))?;
        ensure(deg.is_integer(), format!("{w:?}: -K^3 not integral"))?;
        ensure(n == 39, format!("{w:?}: basis size {n}"))?;
        parts.push(format!("{w:?}: {deg}/{n}"));
    }
    Ok(parts.join(", "))
}

fn ac3_bundle_dims() -> Verdict {
    let e = SplitBundle::new(vec![0, 2, 6]).unwrap();
    let cubic = system_dim(&e, BundleSystemSpec { a: 3, b: -6 });
    let hyper = system_dim(&e, BundleSystemSpec { a: 1, b: 0 });
    ensure(cubic == 38, format!("dim |3L-6P| = {cubic}"))?;
    ensure(hyper == 10, format!("dim |L| = {hyper}"))?;
    Ok(format!("|3L-6P| {cubic}, |L| {hyper}"))
}

fn ac4_scroll() -> Verdict {
    let h = RuledClass::new(4, 1, 6);
    let self_int = h.intersect(&h).unwrap();
    let conic = RuledClass::section(4).intersect(&h).unwrap();
    let line = RuledClass::fibre(4).intersect(&h).unwrap();
    let h0 = SplitBundle::new(vec![2, 6]).unwrap().h0();
    ensure(self_int == 8, format!("(E+6F)^2 = {self_int}"))?;
    ensure(conic == 2, format!("E.(E+6F) = {conic}"))?;
    ensure(line == 1, format!("F.(E+6F) = {line}"))?;
    ensure(h0 == 10, format!("h0 = {h0}"))?;
    Ok(format!("{self_int}, {conic}, {line}, h0 {h0}"))
}

fn ac5_system_s() -> Verdict {
    let xi = PencilCubic::default();
    let s = build_system_s(&xi);
    ensure(
        s.generators().len() == 11,
        format!("{} generators", s.generators().len()),
    )?;
    ensure(
        s.projective_dim() == 10,
        format!("dim {}", s.projective_dim()),
    )?;
    for g in s.generators() {
        ensure(g.total_degree() == Some(6), format!("{g} not sextic"))?;
        let m = multiplicity_along_r(g).map_err(|e| e.to_string())?;
        ensure(m >= 5, format!("{g} has multiplicity {m}"))?;
    }
    let generic = s.random_member(SEED);
    let m = multiplicity_along_r(&generic).map_err(|e| e.to_string())?;
    ensure(m == 5, format!("generic multiplicity {m}"))?;
    let residual = pencil_residual(&generic, 5).map_err(|e| e.to_string())?;
    ensure(
        is_at_most_linear_off_t(&residual) && !residual.is_zero(),
        format!("residual {residual}"),
    )?;
    Ok("11 generators, dim 10, generic mult 5, linear residual".into())
}

fn ac6_residuals() -> Verdict {
    let xi = PencilCubic::default();
    let s = build_system_s(&xi);
    let generic = s.random_member(SEED);
    let mut n = 0;
    for g in s.generators().iter().chain(std::iter::once(&generic)) {
        ensure(
            residual_lines_pass_through_q(g).map_err(|e| e.to_string())?,
            format!("{g}: residual line misses q"),
        )?;
        ensure(
            restricts_to_r_at_roots(g, &xi).map_err(|e| e.to_string())?,
            format!("{g}: restriction at a root is not a multiple of x1^6"),
        )?;
        n += 1;
    }
    Ok(format!("{n} forms checked"))
}

fn ac7_sprime() -> Verdict {
    let xi = PencilCubic::default();
    let sp = solve_constraints_sprime(&xi).map_err(|e| e.to_string())?;
    let s = build_system_s(&xi);
    ensure(sp.rank() == 11, format!("solution dimension {}", sp.rank()))?;
    // independent elimination route
    let union: Vec<Polynomial> = sp
        .generators()
        .iter()
        .chain(s.generators())
        .cloned()
        .collect();
    let naive = common::naive_poly_rank(&union);
    ensure(
        naive == 11,
        format!("rank of S' + S by naive elimination {naive}"),
    )?;
    ensure(sp.span_eq(&s) && s.span_eq(&sp), "spans differ")?;
    Ok(format!("dim {}, union rank {naive}", sp.rank()))
}

fn ac8_system_t() -> Verdict {
    let t = build_system_t(&PencilCubic::default());
    ensure(
        t.generators().len() == 39,
        format!("{} generators", t.generators().len()),
    )?;
    ensure(
        t.projective_dim() == 38,
        format!("dim {}", t.projective_dim()),
    )?;
    for g in t.generators() {
        ensure(
            g.total_degree() == Some(12),
            format!("{g} has wrong degree"),
        )?;
        let m = multiplicity_along_r(g).map_err(|e| e.to_string())?;
        ensure(m >= 9, format!("{g} has multiplicity {m}"))?;
    }
    Ok("39 generators, dim 38, degree 12, mult >= 9".into())
}

fn ac9_theorem() -> Verdict {
    let mut parts = Vec::new();
    for xi in [
        PencilCubic::default(),
        PencilCubic::parse(ALTERNATE_XI).unwrap(),
    ] {
        let r = theorem_check(&xi);
        ensure(r.passed(), format!("xi = {xi}: {r:?}"))?;
        ensure(
            r.pullback_rank == 39 && r.system_rank == 39 && r.union_rank == 39,
            format!(
                "ranks {}/{}/{}",
                r.pullback_rank, r.system_rank, r.union_rank
            ),
        )?;
        parts.push(format!(
            "roots {:?}: 39=39",
            xi.roots()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        ));
    }
    Ok(parts.join("; "))
}

fn ac10_properties() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let p3 = Ring::projective3();
    let pencil = Ring::pencil();

    for i in 0..PROPERTY_CASES {
        let f = random_poly(&mut rng, &p3, 4, 3);
        let g = random_poly(&mut rng, &p3, 4, 3);
        let h = random_poly(&mut rng, &p3, 4, 3);
        ensure(&f + &g == &g + &f, format!("case {i}: + not commutative"))?;
        ensure(&f * &g == &g * &f, format!("case {i}: * not commutative"))?;
        ensure(
            &(&f + &g) + &h == &f + &(&g + &h),
            format!("case {i}: + not associative"),
        )?;
        ensure(
            &(&f * &g) * &h == &f * &(&g * &h),
            format!("case {i}: * not associative"),
        )?;
        ensure(
            &f * &(&g + &h) == &(&f * &g) + &(&f * &h),
            format!("case {i}: not distributive"),
        )?;
        let reparsed = Polynomial::parse(&p3, &f.to_string()).map_err(|e| e.to_string())?;
        ensure(
            reparsed == f,
            format!("case {i}: canonical form not a fixpoint"),
        )?;
    }

    for i in 0..PROPERTY_CASES {
        let f = random_poly(&mut rng, &p3, 3, 3);
        let g = random_poly(&mut rng, &p3, 3, 3);
        let mut sub = Substitution::new(&p3, &pencil);
        for name in ["x1", "x2", "x3", "x4"] {
            sub = sub.set(name, random_poly(&mut rng, &pencil, 3, 2)).unwrap();
        }
        let s = |p: &Polynomial| p.substitute(&sub).unwrap();
        ensure(
            s(&(&f * &g)) == &s(&f) * &s(&g),
            format!("case {i}: substitution not multiplicative"),
        )?;
        ensure(
            s(&(&f + &g)) == &s(&f) + &s(&g),
            format!("case {i}: substitution not additive"),
        )?;
    }

    let eta = make_eta(&PencilCubic::default());
    for i in 0..PROPERTY_CASES {
        let (dg, dh) = (rng.random_range(0..=12u64), rng.random_range(0..=12u64));
        let g = random_weighted_form(&mut rng, dg, 3);
        let h = random_weighted_form(&mut rng, dh, 3);
        let pg = eta.pullback(&g).map_err(|e| e.to_string())?;
        let ph = eta.pullback(&h).map_err(|e| e.to_string())?;
        let pgh = eta.pullback(&(&g * &h)).map_err(|e| e.to_string())?;
        ensure(
            pgh == &pg * &ph,
            format!("case {i}: pullback not multiplicative"),
        )?;
        if !pgh.is_zero() {
            ensure(
                pgh.total_degree() == Some((dg + dh) as u32),
                format!("case {i}: pullback degree {:?}", pgh.total_degree()),
            )?;
        }
    }

    for i in 0..PROPERTY_CASES {
        let f = random_nonzero_poly(&mut rng, &p3, 4, 4);
        let g = random_nonzero_poly(&mut rng, &p3, 4, 4);
        let mf = multiplicity_along_r(&f).unwrap();
        let mg = multiplicity_along_r(&g).unwrap();
        let mfg = multiplicity_along_r(&(&f * &g)).unwrap();
        ensure(mfg == mf + mg, format!("case {i}: {mfg} != {mf} + {mg}"))?;
    }

    for i in 0..PROPERTY_CASES {
        let arity = rng.random_range(1..=4usize);
        let w: Vec<u32> = (0..arity).map(|_| rng.random_range(1..=6)).collect();
        let d = rng.random_range(0..=40u64);
        let ws = WeightSystem::new(w.clone()).unwrap();
        let count = hilbert_count(&ws, d);
        let listed = enumerate_monomials(&ws, d).len() as u128;
        let series = series_oracle(&w, d as usize)[d as usize];
        ensure(
            count == listed && count == series,
            format!("case {i}: {w:?} d={d}: {count} / {listed} / {series}"),
        )?;
    }

    Ok(format!("5 suites x {PROPERTY_CASES} cases"))
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    budget: Duration,
    run: fn() -> Verdict,
}

fn main() -> ExitCode {
    let instant = Duration::from_millis(250);
    let criteria = [
        Criterion {
            id: "AC-1",
            name: "hilbert count 39, anticanonical dim 38",
            budget: instant,
            run: ac1_hilbert,
        },
        Criterion {
            id: "AC-2",
            name: "-K^3 = 72 for (1,1,4,6) and (1,1,1,3), basis 39",
            budget: instant,
            run: ac2_degree,
        },
        Criterion {
            id: "AC-3",
            name: "dim|3L-6P| = 38, dim|L| = 10",
            budget: instant,
            run: ac3_bundle_dims,
        },
        Criterion {
            id: "AC-4",
            name: "scroll degree 8, conic, lines, P^9",
            budget: instant,
            run: ac4_scroll,
        },
        Criterion {
            id: "AC-5",
            name: "sextic system: 11 generators, dim 10, mult 5",
            budget: Duration::from_secs(1),
            run: ac5_system_s,
        },
        Criterion {
            id: "AC-6",
            name: "lines through q, r at the cubic's planes",
            budget: Duration::from_secs(1),
            run: ac6_residuals,
        },
        Criterion {
            id: "AC-7",
            name: "constrained sextics: dim 11, equal span",
            budget: Duration::from_secs(1),
            run: ac7_sprime,
        },
        Criterion {
            id: "AC-8",
            name: "degree-12 system: 39 generators, dim 38, mult >= 9",
            budget: Duration::from_secs(1),
            run: ac8_system_t,
        },
        Criterion {
            id: "AC-9",
            name: "pullback span identity for two cubics",
            budget: Duration::from_secs(2),
            run: ac9_theorem,
        },
        Criterion {
            id: "AC-10",
            name: "property suites, 1000 cases each",
            budget: Duration::from_secs(5),
            run: ac10_properties,
        },
    ];

    let start = Instant::now();
    let mut failures = 0;
    for c in &criteria {
        let t0 = Instant::now();
        let verdict = (c.run)();
        let elapsed = t0.elapsed();
        let (ok, detail) = match verdict {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {:?}", c.budget)),
            Err(e) => (false, e),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "{} {:<6} {:<52} {:>9.3?}  {}",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed,
            detail
        );
    }
    let total = start.elapsed();
    let total_ok = total <= TOTAL_BUDGET;
    if !total_ok {
        failures += 1;
    }
    println!(
        "{} total  {:.3?} (budget {:?}); {} of {} criteria passed",
        if total_ok { "PASS" } else { "FAIL" },
        total,
        TOTAL_BUDGET,
        criteria.len() - failures.min(criteria.len()),
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
