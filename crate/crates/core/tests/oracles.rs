//! Checks against independent computations written here: matrix
//! representations, brute force over small fields, plain modular
//! elimination.

use kw1_core::builtin;
use kw1_core::field::Field;
use kw1_core::gf::{FiniteField, Gf};
use kw1_core::lie::{base_change_into, index_modular, index_rational, ModularLieAlgebra};
use kw1_core::linalg::Matrix;
use kw1_core::pbw::{EnvelopingElement, Monomial, Pbw};
use kw1_core::redenv::{reduced_algebra, regular_representation, split_simples, Character};
use kw1_core::rng;
use rand::Rng;

fn modular(name: &str, p: u64) -> ModularLieAlgebra {
    let k = FiniteField::prime(p).unwrap();
    base_change_into(&builtin::lookup(name).unwrap(), &k).unwrap()
}

/// Rank of an integer matrix mod p by textbook elimination.
fn rank_mod_p(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let inv = |a: i64| (1..p).find(|b| a * b % p == 1).unwrap();
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let s = inv(m[rank][c]);
        for x in m[rank].iter_mut() {
            *x = *x * s % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in 0..cols {
                    m[r][j] = (m[r][j] - f * m[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim g - max_χ rank (χ([x_i, x_j]))` over every `χ ∈ F_p^n`.
fn brute_force_index(name: &str, p: i64) -> usize {
    let pres = builtin::lookup(name).unwrap();
    let n = pres.dim();
    let consts: Vec<((usize, usize, usize), i64)> = pres
        .constants()
        .iter()
        .map(|(&t, c)| (t, i64::try_from(c.to_integer()).unwrap()))
        .collect();
    let mut best = 0;
    for code in 0..p.pow(n as u32) {
        let chi: Vec<i64> = (0..n).map(|i| code / p.pow(i as u32) % p).collect();
        let mut b = vec![vec![0i64; n]; n];
        for &((i, j, k), c) in &consts {
            b[i][j] += c * chi[k];
            b[j][i] -= c * chi[k];
        }
        best = best.max(rank_mod_p(b, p));
    }
    n - best
}

#[test]
fn index_matches_brute_force_over_f5() {
    for name in ["abelian:4", "nonabelian2", "heisenberg", "sl2", "gl2", "borel2", "remark:1:1", "remark:1:2", "remark:2:3"] {
        let bf = brute_force_index(name, 5);
        assert_eq!(index_rational(&builtin::lookup(name).unwrap(), 3, 0).index, bf, "{name} over Q");
        assert_eq!(index_modular(&modular(name, 5), 3, 0).unwrap().index, bf, "{name} mod 5");
    }
    assert_eq!(brute_force_index("gl2", 5), 2);
    assert_eq!(brute_force_index("abelian:4", 5), 4);
    assert_eq!(brute_force_index("remark:1:1", 5), 1);
}

/// Evaluate a PBW element in a representation given by matrices for the
/// basis, multiplying the factors of each monomial in basis order.
fn evaluate(k: &FiniteField, rep: &[Matrix<Gf>], a: &EnvelopingElement<Gf>) -> Matrix<Gf> {
    let d = rep[0].rows();
    let mut out = Matrix::zeros(k, d, d);
    for (m, c) in a.iter() {
        let mut t = Matrix::identity(k, d);
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                t = t.mul(k, &rep[i]);
            }
        }
        out = out.add(k, &t.scale(k, c));
    }
    out
}

fn unit(k: &FiniteField, d: usize, entries: &[(usize, usize, i64)]) -> Matrix<Gf> {
    let mut m = Matrix::zeros(k, d, d);
    for &(i, j, c) in entries {
        m[(i, j)] = k.from_i64(c);
    }
    m
}

fn random_element(pbw: &Pbw<FiniteField>, r: &mut impl Rng) -> EnvelopingElement<Gf> {
    let k = pbw.field();
    let n = pbw.dim();
    EnvelopingElement::from_terms(
        k,
        n,
        (0..4).map(|_| (Monomial::new((0..n).map(|_| r.gen_range(0..3)).collect()), k.random(r))),
    )
}

#[test]
fn products_agree_with_matrix_representations() {
    let k = FiniteField::prime(7).unwrap();
    let cases: Vec<(&str, Vec<Matrix<Gf>>)> = vec![
        ("sl2", vec![unit(&k, 2, &[(0, 0, 1), (1, 1, -1)]), unit(&k, 2, &[(0, 1, 1)]), unit(&k, 2, &[(1, 0, 1)])]),
        ("heisenberg", vec![unit(&k, 3, &[(0, 1, 1)]), unit(&k, 3, &[(1, 2, 1)]), unit(&k, 3, &[(0, 2, 1)])]),
        (
            "gl2",
            vec![unit(&k, 2, &[(0, 0, 1)]), unit(&k, 2, &[(0, 1, 1)]), unit(&k, 2, &[(1, 0, 1)]), unit(&k, 2, &[(1, 1, 1)])],
        ),
        ("remark:1:2", vec![unit(&k, 3, &[(1, 1, 1), (2, 2, 2)]), unit(&k, 3, &[(0, 1, 1)]), unit(&k, 3, &[(0, 2, 1)])]),
    ];
    let mut r = rng::stream(11, 0);
    for (name, rep) in cases {
        let alg = base_change_into(&builtin::lookup(name).unwrap(), &k).unwrap();
        let pbw = Pbw::new(k.clone(), alg.table().clone());
        for _ in 0..20 {
            let a = random_element(&pbw, &mut r);
            let b = random_element(&pbw, &mut r);
            let lhs = evaluate(&k, &rep, &pbw.mul(&a, &b));
            let rhs = evaluate(&k, &rep, &a).mul(&k, &evaluate(&k, &rep, &b));
            assert_eq!(lhs, rhs, "{name}");
        }
    }
}

#[test]
fn reduced_relations_hold_in_regular_representation() {
    for (name, p) in [("sl2", 3u64), ("heisenberg", 3), ("remark:1:2", 3), ("gl2", 2), ("borel2", 3)] {
        let alg = modular(name, p).restrict().unwrap();
        let k = alg.field().clone();
        let n = alg.dim();
        for s in 0..3 {
            let chi = Character::random(&k, n, &mut rng::stream(s, 0));
            let m = regular_representation(&reduced_algebra(&alg, &chi).unwrap());
            let d = m.dim;
            for i in 0..n {
                let mut lhs = Matrix::identity(&k, d);
                for _ in 0..p {
                    lhs = lhs.mul(&k, &m.action[i]);
                }
                let pmap = &alg.restricted().unwrap().p_map[i];
                for (j, c) in pmap.iter().enumerate() {
                    lhs = lhs.add(&k, &m.action[j].scale(&k, &k.neg(c)));
                }
                let scalar = Matrix::identity(&k, d).scale(&k, &k.pow(&chi.chi[i], p));
                assert_eq!(lhs, scalar, "{name} p={p} x_{i}");
            }
        }
    }
}

#[test]
fn engel_at_zero_character() {
    for (name, p) in [("heisenberg", 3u64), ("heisenberg", 2), ("abelian:3", 3)] {
        let alg = modular(name, p).restrict().unwrap();
        let chi = Character::zero(alg.field(), alg.dim());
        let m = regular_representation(&reduced_algebra(&alg, &chi).unwrap());
        for a in &m.action {
            let mut t = Matrix::identity(alg.field(), m.dim);
            for _ in 0..m.dim {
                t = t.mul(alg.field(), a);
            }
            assert!(t.is_zero(alg.field()), "{name}: generators act nilpotently");
        }
        let c = split_simples(&m, 0).unwrap();
        assert!(c.factors.iter().all(|&f| f == 1), "{name} p={p}: {:?}", c.factors);
    }
}
