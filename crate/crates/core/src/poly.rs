//! Dense univariate polynomials over a finite field, with factorization
//! into irreducibles (square-free, distinct-degree, Cantor–Zassenhaus).
//!
//! Coefficients are stored lowest degree first and kept trimmed, so the zero
//! polynomial is the empty vector.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::field::Field;
use crate::gf::{FiniteField, Gf};
use crate::linalg::Matrix;

pub type Poly = Vec<Gf>;

pub fn trim(k: &FiniteField, mut f: Poly) -> Poly {
    while f.last().is_some_and(|c| k.is_zero(c)) {
        f.pop();
    }
    f
}

/// Degree; `None` for the zero polynomial.
pub fn degree(f: &Poly) -> Option<usize> {
    f.len().checked_sub(1)
}

pub fn x(k: &FiniteField) -> Poly {
    vec![k.zero(), k.one()]
}

pub fn one(k: &FiniteField) -> Poly {
    vec![k.one()]
}

pub fn is_one(k: &FiniteField, f: &Poly) -> bool {
    f.len() == 1 && k.is_one(&f[0])
}

pub fn add(k: &FiniteField, f: &Poly, g: &Poly) -> Poly {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| match (f.get(i), g.get(i)) {
            (Some(a), Some(b)) => k.add(a, b),
            (Some(a), None) | (None, Some(a)) => *a,
            (None, None) => unreachable!(),
        })
        .collect();
    trim(k, out)
}

pub fn sub(k: &FiniteField, f: &Poly, g: &Poly) -> Poly {
    let ng: Poly = g.iter().map(|c| k.neg(c)).collect();
    add(k, f, &ng)
}

pub fn scale(k: &FiniteField, f: &Poly, c: &Gf) -> Poly {
    trim(k, f.iter().map(|a| k.mul(a, c)).collect())
}

pub fn mul(k: &FiniteField, f: &Poly, g: &Poly) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if k.is_zero(a) {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] = k.mul_add(&out[i + j], a, b);
        }
    }
    trim(k, out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem(k: &FiniteField, f: &Poly, g: &Poly) -> (Poly, Poly) {
    let dg = degree(g).expect("division by zero polynomial");
    let lead_inv = k.inv(&g[dg]).expect("trimmed");
    let mut r = f.clone();
    if r.len() <= dg {
        return (Vec::new(), r);
    }
    let mut q = vec![k.zero(); r.len() - dg];
    for i in (dg..r.len()).rev() {
        if k.is_zero(&r[i]) {
            continue;
        }
        let c = k.mul(&r[i], &lead_inv);
        q[i - dg] = c;
        let c = k.neg(&c);
        for (j, b) in g.iter().enumerate() {
            r[i - dg + j] = k.mul_add(&r[i - dg + j], &c, b);
        }
    }
    r.truncate(dg);
    (trim(k, q), trim(k, r))
}

pub fn rem(k: &FiniteField, f: &Poly, g: &Poly) -> Poly {
    divrem(k, f, g).1
}

pub fn monic(k: &FiniteField, f: &Poly) -> Poly {
    match f.last() {
        None => Vec::new(),
        Some(c) => scale(k, f, &k.inv(c).expect("trimmed")),
    }
}

/// Monic greatest common divisor.
pub fn gcd(k: &FiniteField, f: &Poly, g: &Poly) -> Poly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

pub fn mulmod(k: &FiniteField, f: &Poly, g: &Poly, m: &Poly) -> Poly {
    rem(k, &mul(k, f, g), m)
}

pub fn powmod(k: &FiniteField, f: &Poly, mut e: u128, m: &Poly) -> Poly {
    let mut base = rem(k, f, m);
    let mut acc = rem(k, &one(k), m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(k, &acc, &base, m);
        }
        base = mulmod(k, &base, &base, m);
        e >>= 1;
    }
    acc
}

pub fn derivative(k: &FiniteField, f: &Poly) -> Poly {
    trim(
        k,
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| k.mul(c, &k.from_u64(i as u64)))
            .collect(),
    )
}

pub fn eval(k: &FiniteField, f: &Poly, a: &Gf) -> Gf {
    f.iter().rev().fold(k.zero(), |acc, c| k.mul_add(c, &acc, a))
}

/// `f(A)` for a square matrix `A`, by Horner's rule.
pub fn eval_matrix(k: &FiniteField, f: &Poly, a: &Matrix<Gf>) -> Matrix<Gf> {
    let n = a.rows();
    let mut acc = Matrix::zeros(k, n, n);
    for c in f.iter().rev() {
        acc = acc.mul(k, a);
        for i in 0..n {
            acc[(i, i)] = k.add(&acc[(i, i)], c);
        }
    }
    acc
}

/// `g` with `g(t)^p = f(t)`, for `f` with `f' = 0`.
fn pth_root(k: &FiniteField, f: &Poly) -> Poly {
    let p = k.p() as usize;
    let root_exp = k.order() / k.p();
    f.iter().step_by(p).map(|c| k.pow(c, root_exp)).collect()
}

/// Square-free factorization: pairs `(g, m)` with `f = c·Π g^m`, the `g`
/// square-free, monic and pairwise coprime.
pub fn square_free(k: &FiniteField, f: &Poly) -> Vec<(Poly, u32)> {
    let f = monic(k, f);
    let mut out = Vec::new();
    if degree(&f).unwrap_or(0) == 0 {
        return out;
    }
    let df = derivative(k, &f);
    let mut c = gcd(k, &f, &df);
    let mut w = divrem(k, &f, &c).0;
    let mut i = 1u32;
    while !is_one(k, &w) {
        let y = gcd(k, &w, &c);
        let fac = divrem(k, &w, &y).0;
        if degree(&fac).unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y.clone();
        c = divrem(k, &c, &y).0;
        i += 1;
    }
    if !is_one(k, &c) {
        let p = k.p() as u32;
        for (g, m) in square_free(k, &pth_root(k, &c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree factorization of a square-free monic `f`.
pub fn distinct_degree(k: &FiniteField, f: &Poly) -> Vec<(Poly, usize)> {
    let q = k.order() as u128;
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut h = x(k);
    let mut d = 1;
    while degree(&f).unwrap_or(0) >= 2 * d {
        h = powmod(k, &h, q, &f);
        let g = gcd(k, &sub(k, &h, &x(k)), &f);
        if !is_one(k, &g) {
            f = divrem(k, &f, &g).0;
            h = rem(k, &h, &f);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(df) = degree(&f).filter(|&df| df > 0) {
        out.push((f, df));
    }
    out
}

/// Split a product of distinct monic irreducibles of degree `d`.
pub fn equal_degree<R: Rng + ?Sized>(k: &FiniteField, f: &Poly, d: usize, rng: &mut R) -> Vec<Poly> {
    let n = degree(f).unwrap_or(0);
    if n <= d {
        return vec![f.clone()];
    }
    let q = k.order();
    loop {
        let a: Poly = trim(k, (0..n).map(|_| k.random(rng)).collect());
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            // a^{(q^d - 1)/2} = (a^{1 + q + … + q^{d-1}})^{(q-1)/2}
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = powmod(k, &t, q as u128, f);
                acc = mulmod(k, &acc, &t, f);
            }
            sub(k, &powmod(k, &acc, ((q - 1) / 2) as u128, f), &one(k))
        } else {
            // trace to F_2: a + a^2 + a^4 + … over log2(q)·d terms
            let terms = (q.trailing_zeros() as usize) * d;
            let mut t = rem(k, &a, f);
            let mut acc = t.clone();
            for _ in 1..terms {
                t = mulmod(k, &t, &t, f);
                acc = add(k, &acc, &t);
            }
            acc
        };
        let g = gcd(k, &b, f);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let h = divrem(k, f, &g).0;
            let mut out = equal_degree(k, &g, d, rng);
            out.extend(equal_degree(k, &monic(k, &h), d, rng));
            return out;
        }
    }
}

/// Monic irreducible factors with multiplicities, sorted by degree and then
/// by coefficients.
pub fn factor<R: Rng + ?Sized>(k: &FiniteField, f: &Poly, rng: &mut R) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    for (g, m) in square_free(k, f) {
        for (h, d) in distinct_degree(k, &g) {
            for irr in equal_degree(k, &h, d, rng) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().map(|c| k.to_code(*c)).cmp(b.iter().map(|c| k.to_code(*c))))
    });
    out
}

/// Characteristic polynomial `det(t·I - A)` via reduction to Hessenberg form.
pub fn charpoly(k: &FiniteField, a: &Matrix<Gf>) -> Poly {
    let n = a.rows();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !k.is_zero(&h[(i, m - 1)])) else {
            continue;
        };
        if i != m {
            for c in 0..n {
                let t = h[(i, c)];
                h[(i, c)] = h[(m, c)];
                h[(m, c)] = t;
            }
            for r in 0..n {
                let t = h[(r, i)];
                h[(r, i)] = h[(r, m)];
                h[(r, m)] = t;
            }
        }
        let t_inv = k.inv(&h[(m, m - 1)]).expect("pivot");
        for i in m + 1..n {
            let u = k.mul(&h[(i, m - 1)], &t_inv);
            if k.is_zero(&u) {
                continue;
            }
            let nu = k.neg(&u);
            for c in 0..n {
                let v = h[(m, c)];
                h[(i, c)] = k.mul_add(&h[(i, c)], &nu, &v);
            }
            for r in 0..n {
                let v = h[(r, i)];
                h[(r, m)] = k.mul_add(&h[(r, m)], &u, &v);
            }
        }
    }
    let mut ps: Vec<Poly> = vec![one(k)];
    for m in 1..=n {
        let lin = vec![k.neg(&h[(m - 1, m - 1)]), k.one()];
        let mut pm = mul(k, &lin, &ps[m - 1]);
        let mut t = k.one();
        for i in (1..m).rev() {
            t = k.mul(&t, &h[(i, i - 1)]);
            let c = k.mul(&h[(i - 1, m - 1)], &t);
            pm = sub(k, &pm, &scale(k, &ps[i - 1], &c));
        }
        ps.push(pm);
    }
    ps.pop().expect("nonempty")
}
