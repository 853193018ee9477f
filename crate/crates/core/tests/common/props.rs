//! Randomized invariant checks, shared by the core property tests and the
//! acceptance run.

use kw1_core::builtin;
use kw1_core::center::{center_basis_bounded, rank_over_p_center, zp_coordinates, RestrictedEnveloping, DEFAULT_MONOMIAL_CAP};
use kw1_core::field::Field;
use kw1_core::gf::{FiniteField, Gf};
use kw1_core::lie::{base_change_into, index_modular, index_rational, LieAlgebraPresentation, ModularLieAlgebra};
use kw1_core::pbw::{principal_symbol, EnvelopingElement, Monomial, Pbw, SymmetricPolynomial};
use kw1_core::redenv::{reduced_algebra, regular_representation, split_simples, Character};
use kw1_core::rng::{self, WorkRng};
use kw1_core::verdict::working_extension_degree;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{RngSeed, TestCaseError, TestRunner};
use rand::Rng;

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    TestRunner::new(config(cases)).run(&strategy, test).map_err(|e| e.to_string())
}

/// Cases per suite.
pub const CASES: u32 = 128;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x6b77_0001),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

const SMALL: &[&str] = &["heisenberg", "sl2", "borel2", "nonabelian2", "remark:1:1", "remark:1:2", "remark:2:3", "abelian:2"];
const ALL: &[&str] = &["heisenberg", "sl2", "gl2", "borel2", "nonabelian2", "remark:1:1", "remark:1:2", "remark:2:3", "abelian:3"];

fn algebra(name: &str, p: u64, e: u32, seed: u64) -> ModularLieAlgebra {
    let pres = builtin::lookup(name).unwrap();
    let field = FiniteField::random(p, e, &mut rng::stream(seed, 99)).unwrap();
    base_change_into(&pres, &field).unwrap()
}

fn random_element(pbw: &Pbw<FiniteField>, r: &mut WorkRng, max_deg: u32, terms: usize) -> EnvelopingElement<Gf> {
    let k = pbw.field();
    let n = pbw.dim();
    EnvelopingElement::from_terms(
        k,
        n,
        (0..terms).map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..r.gen_range(0..=max_deg) {
                e[r.gen_range(0..n)] += 1;
            }
            (Monomial::new(e), k.random(r))
        }),
    )
}

fn random_homogeneous(k: &FiniteField, n: usize, r: &mut WorkRng, d: u32, terms: usize) -> SymmetricPolynomial<Gf> {
    SymmetricPolynomial::from_terms(
        k,
        n,
        (0..terms).map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..d {
                e[r.gen_range(0..n)] += 1;
            }
            (Monomial::new(e), k.random(r))
        }),
    )
}

/// A presentation rewritten in the basis `y = U x` for a random unimodular
/// integer matrix `U`, so its reduction mod any prime is the same algebra.
fn scrambled(pres: &LieAlgebraPresentation, r: &mut WorkRng) -> LieAlgebraPresentation {
    let n = pres.dim();
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let mut uinv = u.clone();
    for _ in 0..3 * n {
        let (a, b) = (r.gen_range(0..n), r.gen_range(0..n));
        if a == b {
            continue;
        }
        let c = r.gen_range(-2i64..=2);
        // row_a += c row_b on U, col_b -= c col_a on U^-1
        for j in 0..n {
            u[a][j] += c * u[b][j];
        }
        for row in uinv.iter_mut() {
            row[b] -= c * row[a];
        }
    }
    let consts = pres.constants();
    let mut out = LieAlgebraPresentation::new(pres.name(), pres.labels().to_vec());
    for a in 0..n {
        for b in a + 1..n {
            let mut x = vec![0i64; n];
            for (&(i, j, k), c) in consts {
                let c = c.to_integer();
                let c = i64::try_from(c).unwrap();
                x[k] += c * (u[a][i] * u[b][j] - u[a][j] * u[b][i]);
            }
            let y: Vec<(usize, BigRational)> = (0..n)
                .map(|l| (l, BigRational::from_integer((0..n).map(|k| x[k] * uinv[k][l]).sum::<i64>().into())))
                .collect();
            out.set_bracket(a, b, &y).unwrap();
        }
    }
    out
}

pub fn pbw_associativity(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0..ALL.len(), prop::sample::select(vec![2u64, 3, 5]),), |(seed, which, p,)| {
        let alg = algebra(ALL[which], p, 1, seed);
        let pbw = Pbw::new(alg.field().clone(), alg.table().clone());
        let mut r = rng::stream(seed, 7);
        let a = random_element(&pbw, &mut r, 3, 3);
        let b = random_element(&pbw, &mut r, 3, 3);
        let c = random_element(&pbw, &mut r, 2, 3);
        prop_assert_eq!(pbw.mul(&pbw.mul(&a, &b), &c), pbw.mul(&a, &pbw.mul(&b, &c)));
        Ok(())
    })
}

pub fn symbol_multiplicativity(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0..ALL.len(), prop::sample::select(vec![3u64, 5, 7]),), |(seed, which, p,)| {
        let alg = algebra(ALL[which], p, 1, seed);
        let k = alg.field();
        let pbw = Pbw::new(k.clone(), alg.table().clone());
        let mut r = rng::stream(seed, 7);
        let a = random_element(&pbw, &mut r, 3, 4);
        let b = random_element(&pbw, &mut r, 3, 4);
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = principal_symbol(k, &pbw.mul(&a, &b)).unwrap();
        let sa = principal_symbol(k, &a).unwrap();
        let sb = principal_symbol(k, &b).unwrap();
        prop_assert_eq!(ab, sa.mul(k, &sb));
        Ok(())
    })
}

pub fn bracket_degree_drop(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0..ALL.len(), prop::sample::select(vec![2u64, 3, 5]),), |(seed, which, p,)| {
        let alg = algebra(ALL[which], p, 1, seed);
        let pbw = Pbw::new(alg.field().clone(), alg.table().clone());
        let mut r = rng::stream(seed, 7);
        let a = random_element(&pbw, &mut r, 3, 3);
        let b = random_element(&pbw, &mut r, 3, 3);
        prop_assume!(!a.is_zero() && !b.is_zero());
        let c = pbw.bracket(&a, &b);
        if let Some(d) = c.degree() {
            prop_assert!(d + 1 <= a.degree().unwrap() + b.degree().unwrap());
        }
        Ok(())
    })
}

pub fn symmetrization_is_a_section(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0..ALL.len(), 1u32..5,), |(seed, which, d,)| {
        let alg = algebra(ALL[which], 7, 1, seed);
        let k = alg.field();
        let pbw = Pbw::new(k.clone(), alg.table().clone());
        let mut r = rng::stream(seed, 7);
        let f = random_homogeneous(k, alg.dim(), &mut r, d, 3);
        prop_assume!(!f.is_zero());
        let u = pbw.symmetrize(&f).unwrap();
        prop_assert_eq!(principal_symbol(k, &u).unwrap(), f);
        Ok(())
    })
}

pub fn p_center_is_central(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0..ALL.len(), prop::sample::select(vec![2u64, 3, 5]),), |(seed, which, p,)| {
        let alg = algebra(ALL[which], p, 1, seed).restrict().unwrap();
        let ctx = RestrictedEnveloping::new(&alg).unwrap();
        let pbw = ctx.pbw();
        let mut r = rng::stream(seed, 7);
        let a = random_element(pbw, &mut r, 2, 3);
        for xi in &ctx.xi().xi {
            prop_assert!(pbw.is_central(xi));
            prop_assert_eq!(pbw.mul(xi, &a), pbw.mul(&a, xi));
        }
        Ok(())
    })
}

pub fn zp_coordinates_reassemble(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0..ALL.len(), prop::sample::select(vec![2u64, 3]),), |(seed, which, p,)| {
        let alg = algebra(ALL[which], p, 1, seed).restrict().unwrap();
        let ctx = RestrictedEnveloping::new(&alg).unwrap();
        let mut r = rng::stream(seed, 7);
        let a = random_element(ctx.pbw(), &mut r, 3 * p as u32, 3);
        prop_assert_eq!(zp_coordinates(&ctx, &a).reassemble(&ctx), a);
        Ok(())
    })
}

pub fn p_map_semilinear(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0..ALL.len(), prop::sample::select(vec![2u64, 3, 5]),), |(seed, which, p,)| {
        let alg = algebra(ALL[which], p, 2, seed);
        let k = alg.field();
        let mut r = rng::stream(seed, 7);
        let v: Vec<Gf> = (0..alg.dim()).map(|_| k.random(&mut r)).collect();
        let c = k.random(&mut r);
        let cv: Vec<Gf> = v.iter().map(|x| k.mul(&c, x)).collect();
        let lhs = alg.p_power_of(&cv).unwrap();
        let cp = k.pow(&c, p);
        let rhs: Vec<Gf> = alg.p_power_of(&v).unwrap().iter().map(|x| k.mul(&cp, x)).collect();
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn rank_monotone_and_bounded(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0..SMALL.len(), 1u32..4,), |(seed, which, d,)| {
        let name = SMALL[which];
        let p = 3;
        let pres = builtin::lookup(name).unwrap();
        let e = working_extension_degree(p, pres.dim(), d + 1);
        let alg = algebra(name, p, e, seed).restrict().unwrap();
        let ctx = RestrictedEnveloping::new(&alg).unwrap();
        let ind = index_modular(&alg, 3, seed).unwrap().index;
        let r0 = rank_over_p_center(&ctx, &center_basis_bounded(&ctx, d, DEFAULT_MONOMIAL_CAP, seed).unwrap(), seed).unwrap();
        let r1 = rank_over_p_center(&ctx, &center_basis_bounded(&ctx, d + 1, DEFAULT_MONOMIAL_CAP, seed).unwrap(), seed).unwrap();
        prop_assert!(r0 <= r1);
        prop_assert!(r1 as u64 <= p.pow(ind as u32));
        Ok(())
    })
}

pub fn composition_dims_sum_to_dimension(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0..SMALL.len(), prop::sample::select(vec![2u64, 3]),), |(seed, which, p,)| {
        let alg = algebra(SMALL[which], p, 1, 0).restrict().unwrap();
        let k = alg.field();
        let chi = Character::random(k, alg.dim(), &mut rng::stream(seed, 7));
        let u = reduced_algebra(&alg, &chi).unwrap();
        let c = split_simples(&regular_representation(&u), seed).unwrap();
        prop_assert_eq!(c.factors.iter().sum::<usize>(), (p as usize).pow(alg.dim() as u32));
        prop_assert!(!c.degraded);
        Ok(())
    })
}

pub fn index_parity_and_reduction(cases: u32) -> Result<(), String> {
    run(cases, (any::<u64>(), 0..ALL.len(), 1i64..5, 1i64..5, prop::sample::select(vec![5u64, 7]),), |(seed, which, n, m, p,)| {
        let base = if ALL[which].starts_with("remark") {
            builtin::remark(n, m).unwrap_or_else(builtin::sl2)
        } else {
            builtin::lookup(ALL[which]).unwrap()
        };
        let mut r = rng::stream(seed, 8);
        let pres = scrambled(&base, &mut r);
        let q = index_rational(&pres, 3, seed).index;
        prop_assert_eq!((pres.dim() - q) % 2, 0);
        prop_assert_eq!(q, index_rational(&base, 3, seed).index);
        let field = FiniteField::prime(p).unwrap();
        let alg = base_change_into(&pres, &field).unwrap();
        prop_assert_eq!(index_modular(&alg, 3, seed).unwrap().index, q);
        Ok(())
    })
}

/// Every suite with its name; each takes the number of cases to run.
pub const SUITES: &[(&str, fn(u32) -> Result<(), String>)] = &[
    ("pbw_associativity", pbw_associativity),
    ("symbol_multiplicativity", symbol_multiplicativity),
    ("bracket_degree_drop", bracket_degree_drop),
    ("symmetrization_is_a_section", symmetrization_is_a_section),
    ("p_center_is_central", p_center_is_central),
    ("zp_coordinates_reassemble", zp_coordinates_reassemble),
    ("p_map_semilinear", p_map_semilinear),
    ("rank_monotone_and_bounded", rank_monotone_and_bounded),
    ("composition_dims_sum_to_dimension", composition_dims_sum_to_dimension),
    ("index_parity_and_reduction", index_parity_and_reduction),
];
