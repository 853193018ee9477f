//! One PASS/FAIL line per acceptance criterion; run with
//! `cargo test -p kw1 --test acceptance -- --nocapture` to see them.

#[path = "../../core/tests/common/props.rs"]
mod props;

use std::process::Command;
use std::time::{Duration, Instant};

use kw1_core::builtin;
use kw1_core::center::{
    center_basis_bounded, fraction_field_degree, in_p_center, monomials_up_to, rank_over_frobenius_subring,
    rank_over_p_center, RestrictedEnveloping, DEFAULT_MONOMIAL_CAP,
};
use kw1_core::field::Field;
use kw1_core::gf::{FiniteField, Gf};
use kw1_core::linalg::EchelonBasis;
use kw1_core::pbw::{EnvelopingElement, SymmetricPolynomial};
use kw1_core::redenv::max_irreducible_dim;
use kw1_core::rng::{self, extension_degree_for};
use kw1_core::verdict::{default_degree_bound, kw1_verdict, prepare, MUpper, Verdict};

const REMARK_PAIRS: &[(i64, i64)] = &[(1, 1), (1, 2), (2, 3)];
const PRIMES: &[u64] = &[3, 5, 7];

/// Expected indices, independent of the index code: abelian algebras are
/// their own stabilizers, nonabelian2 has an open coadjoint orbit, and the
/// three-dimensional ones have generic stabilizer of dimension one.
const VERDICT_SUITE: &[(&str, usize)] = &[
    ("abelian:2", 2),
    ("nonabelian2", 0),
    ("heisenberg", 1),
    ("sl2", 1),
    ("remark:1:1", 1),
    ("remark:1:2", 1),
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn remark_context(n: i64, m: i64, p: u64, d: u32) -> RestrictedEnveloping {
    let pres = builtin::remark(n, m).unwrap();
    RestrictedEnveloping::new(&prepare(&pres, p, None, d, 0).unwrap()).unwrap()
}

fn coefficient_vector(field: &FiniteField, monos: &[kw1_core::pbw::Monomial], a: &EnvelopingElement<Gf>) -> Vec<Gf> {
    monos
        .iter()
        .map(|m| a.coefficient(m).copied().unwrap_or_else(|| field.zero()))
        .collect()
}

/// The listed generators of the center for `g(n, m)`: `1`, `h^p - h`,
/// `x^p`, `y^p` and `x^i y^j` with `ni + mj ≡ 0 (mod p)`, `0 < i, j < p`.
fn listed_generators(ctx: &RestrictedEnveloping, n: i64, m: i64) -> Vec<EnvelopingElement<Gf>> {
    let pbw = ctx.pbw();
    let p = ctx.p();
    let k = ctx.field();
    let h = pbw.generator(0);
    let mut gens = vec![
        pbw.one(),
        pbw.pow(&h, p as u32).sub(k, &h),
        pbw.monomial(&[0, p as u32, 0]),
        pbw.monomial(&[0, 0, p as u32]),
    ];
    for i in 1..p as i64 {
        for j in 1..p as i64 {
            if (n * i + m * j).rem_euclid(p as i64) == 0 {
                gens.push(pbw.monomial(&[0, i as u32, j as u32]));
            }
        }
    }
    gens
}

/// Span of all products of the generators that stay within degree `d`.
fn products_up_to(ctx: &RestrictedEnveloping, gens: &[EnvelopingElement<Gf>], d: u32) -> Vec<EnvelopingElement<Gf>> {
    let pbw = ctx.pbw();
    let mut out = vec![pbw.one()];
    let mut frontier = vec![(pbw.one(), 0usize)];
    while let Some((a, start)) = frontier.pop() {
        for (i, g) in gens.iter().enumerate().skip(start) {
            if g.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = pbw.mul(&a, g);
            if b.degree().unwrap_or(0) <= d {
                out.push(b.clone());
                frontier.push((b, i));
            }
        }
    }
    out
}

fn span(field: &FiniteField, monos: &[kw1_core::pbw::Monomial], elems: &[EnvelopingElement<Gf>]) -> EchelonBasis<Gf> {
    let mut b = EchelonBasis::new(monos.len());
    for e in elems {
        b.insert(field, coefficient_vector(field, monos, e));
    }
    b
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    let mut beyond_list = Vec::new();
    for &(n, m) in REMARK_PAIRS {
        for &p in PRIMES {
            if (n * m) % p as i64 == 0 {
                continue;
            }
            let d = (2 * p - 2) as u32;
            let ctx = remark_context(n, m, p, d);
            let k = ctx.field();
            let cb = center_basis_bounded(&ctx, d, DEFAULT_MONOMIAL_CAP, 0).unwrap();
            let gens = listed_generators(&ctx, n, m);
            let monos = monomials_up_to(3, d);
            let computed = span(k, &monos, &cb.elements);
            let expected = span(k, &monos, &products_up_to(&ctx, &gens, d));
            for g in &gens {
                if !computed.contains(k, &coefficient_vector(k, &monos, g)) {
                    return outcome(false, format!("g({n},{m}) p={p}: {} not found central", ctx.render(g)));
                }
            }
            if computed.canonical_rows() != expected.canonical_rows() {
                return outcome(
                    false,
                    format!("g({n},{m}) p={p}: center dim {} vs generated {}", computed.rank(), expected.rank()),
                );
            }
            let literal = span(k, &monos, &gens).rank();
            beyond_list.push(format!("g({n},{m})@{p}:{}+{}", literal, computed.rank() - literal));
            checked += 1;
        }
    }
    outcome(
        checked == 8,
        format!(
            "{checked} algebra/prime pairs match the generated subalgebra in degree <= 2p-2 (listed + products: {})",
            beyond_list.join(" ")
        ),
    )
}

fn criterion_2_and_3() -> (Outcome, Outcome) {
    let mut verdicts = Vec::new();
    let mut oracle = Vec::new();
    let mut ok2 = true;
    let mut ok3 = true;
    for &(name, ind) in VERDICT_SUITE {
        let pres = builtin::lookup(name).unwrap();
        let dim = pres.dim();
        for p in [3u64, 5] {
            let d = default_degree_bound(dim, p);
            let alg = prepare(&pres, p, None, d, 0).unwrap();
            let r = kw1_verdict(&alg, d, 0, None).unwrap();
            let m = (p as u128).pow(((dim - ind) / 2) as u32);
            let good = r.verdict == Verdict::Verified
                && r.ind == ind
                && r.rank_z_over_zp == (p as u128).pow(ind as u32)
                && r.m_upper == MUpper::Exact(m)
                && r.m_lower == m;
            ok2 &= good;
            verdicts.push(format!("{name}@{p}:{}", if good { "ok" } else { "BAD" }));
            let est = max_irreducible_dim(&alg, 10, 0).unwrap();
            let good = est.m_est as u128 == m && !est.degraded;
            ok3 &= good;
            oracle.push(format!("{name}@{p}={}", est.m_est));
        }
    }
    let gl2 = prepare(&builtin::gl2(), 3, Some(1), 3, 0).unwrap();
    let est = max_irreducible_dim(&gl2, 10, 0).unwrap();
    ok3 &= est.m_est == 3 && !est.degraded;
    oracle.push(format!("gl2@3={}", est.m_est));
    (outcome(ok2, verdicts.join(" ")), outcome(ok3, oracle.join(" ")))
}

fn criterion_4() -> Outcome {
    let mut seen = Vec::new();
    let mut ok = true;
    for &(n, m) in REMARK_PAIRS {
        for &p in PRIMES {
            if (n * m) % p as i64 == 0 {
                continue;
            }
            let d = (2 * p - 2) as u32;
            let ctx = remark_context(n, m, p, d);
            let pbw = ctx.pbw();
            let phi = pbw.monomial(&[0, m as u32, 0]);
            let psi = pbw.monomial(&[0, 0, n as u32]);
            let fd = fraction_field_degree(&ctx, &phi, &psi, p as u32, 0).unwrap();
            let cb = center_basis_bounded(&ctx, d, DEFAULT_MONOMIAL_CAP, 0).unwrap();
            let r = rank_over_p_center(&ctx, &cb, 0).unwrap();
            ok &= fd as u64 == p && r as u64 == p;
            seen.push(format!("g({n},{m})@{p}:{fd}/{r}"));
        }
    }
    outcome(ok, seen.join(" "))
}

fn criterion_5() -> Outcome {
    let ctx = remark_context(1, 1, 3, 4);
    let k = ctx.field();
    let xy2 = ctx.pbw().monomial(&[0, 1, 2]);
    let not_in_zp = !in_p_center(&ctx, &xy2);
    let cb = center_basis_bounded(&ctx, 4, DEFAULT_MONOMIAL_CAP, 0).unwrap();
    let monos = monomials_up_to(3, 4);
    let in_center = span(k, &monos, &cb.elements).contains(k, &coefficient_vector(k, &monos, &xy2));
    outcome(not_in_zp && in_center, format!("x*y^2 outside Z_p: {not_in_zp}, central: {in_center}"))
}

fn criterion_6() -> Outcome {
    let mut seen = Vec::new();
    let mut ok = true;
    for p in [2u64, 3, 5] {
        let field = FiniteField::random(p, extension_degree_for(p, 4 * p * p * 8), &mut rng::stream(0, 1)).unwrap();
        let x = SymmetricPolynomial::generator(&field, 2, 0);
        let y = SymmetricPolynomial::generator(&field, 2, 1);
        let a = rank_over_frobenius_subring(&field, 2, &[x.clone()], 16, 0).unwrap();
        let b = rank_over_frobenius_subring(&field, 2, &[], 16, 0).unwrap();
        let c = rank_over_frobenius_subring(&field, 2, &[x, y], 16, 0).unwrap();
        ok &= a == p && b == p * p && c == 1;
        seen.push(format!("p={p}: {a}, {b}, {c}"));
    }
    outcome(ok, seen.join("; "))
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    for (name, suite) in props::SUITES {
        if let Err(e) = suite(props::CASES) {
            failures.push(format!("{name}: {e}"));
        }
    }
    let detail = if failures.is_empty() {
        format!("{} suites x {} cases", props::SUITES.len(), props::CASES)
    } else {
        failures.join("; ")
    };
    outcome(failures.is_empty(), detail)
}

fn kw1(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_kw1"))
        .args(args)
        .env_remove("KW1_CACHE_DIR")
        .output()
        .unwrap();
    out.stdout
}

fn criterion_8() -> Outcome {
    let mut runs: Vec<Vec<String>> = Vec::new();
    for &(n, m) in REMARK_PAIRS {
        let name = format!("remark:{n}:{m}");
        let primes: Vec<String> = PRIMES.iter().filter(|&&p| (n * m) % p as i64 != 0).map(|p| p.to_string()).collect();
        let primes = primes.join(",");
        for p in primes.split(',') {
            let d = (2 * p.parse::<u64>().unwrap() - 2).to_string();
            runs.push(["center", "--example", &name, "--prime", p, "--degree-bound", &d].map(String::from).to_vec());
            runs.push(["rank", "--example", &name, "--prime", p, "--degree-bound", &d].map(String::from).to_vec());
        }
    }
    for &(name, _) in VERDICT_SUITE {
        runs.push(["check", "--example", name, "--primes", "3,5", "--oracle"].map(String::from).to_vec());
    }
    runs.push(["oracle", "--example", "gl2", "--prime", "3"].map(String::from).to_vec());
    let mut differing = Vec::new();
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = kw1(&args);
        let b = kw1(&args);
        if a.is_empty() || a != b {
            differing.push(args.join(" "));
        }
    }
    // Library-level repeat for the fraction degrees, which have no subcommand.
    let first = criterion_4().detail;
    let second = criterion_4().detail;
    if first != second {
        differing.push("fraction degrees".into());
    }
    let detail = if differing.is_empty() {
        format!("{} CLI runs repeated byte-identically", runs.len())
    } else {
        differing.join("; ")
    };
    outcome(differing.is_empty(), detail)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

#[test]
fn acceptance() {
    let mut lines = Vec::new();
    let (c1, t1) = timed(criterion_1);
    lines.push((1, c1, t1, Duration::from_secs(60)));
    let ((c2, c3), t23) = timed(criterion_2_and_3);
    lines.push((2, c2, t23, Duration::from_secs(120)));
    lines.push((3, c3, t23, Duration::from_secs(180)));
    let (c4, t4) = timed(criterion_4);
    lines.push((4, c4, t4, Duration::MAX));
    let (c5, t5) = timed(criterion_5);
    lines.push((5, c5, t5, Duration::MAX));
    let (c6, t6) = timed(criterion_6);
    lines.push((6, c6, t6, Duration::MAX));
    let (c7, t7) = timed(criterion_7);
    lines.push((7, c7, t7, Duration::MAX));
    let (c8, t8) = timed(criterion_8);
    lines.push((8, c8, t8, Duration::MAX));
    let mut all = true;
    for (i, o, t, limit) in &lines {
        let pass = o.pass && t <= limit;
        all &= pass;
        println!(
            "criterion {i}: {} ({:.2}s) {}",
            if pass { "PASS" } else { "FAIL" },
            t.as_secs_f64(),
            o.detail
        );
    }
    assert!(all, "some acceptance criteria failed");
}
