//! Finite fields `F_{p^e}` with table-driven arithmetic.
//!
//! Elements are stored as Zech logarithms relative to a primitive element
//! `α`: the code `0` is zero and `k + 1` is `α^k`. Multiplication is an
//! addition of logarithms and addition goes through the Zech table
//! `1 + α^d = α^{Z(d)}`. The field itself is `F_p[t] / (f)` for a monic
//! irreducible `f` of degree `e`; "digit codes" `Σ c_k p^k` identify the
//! polynomial `Σ c_k t^k` and are used for rendering and embeddings.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::field::{Field, FieldTag};

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field order {p}^{e} exceeds the table cap {MAX_FIELD_ORDER}")]
    TooLarge { p: u64, e: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("defining polynomial is not monic irreducible of degree {0}")]
    NotIrreducible(u32),
}

/// An element of a [`FiniteField`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf(u32);

impl Gf {
    pub const ZERO: Gf = Gf(0);

    pub fn raw(self) -> u32 {
        self.0
    }
}

struct Tables {
    p: u32,
    e: u32,
    q: u32,
    /// Monic, coefficients from low to high degree, length `e + 1`.
    modulus: Vec<u32>,
    /// Digit code of the primitive element.
    primitive: u32,
    /// `exp[k]` is the digit code of `α^k`, `k < q - 1`.
    exp: Vec<u32>,
    /// Digit code to element representation.
    from_code: Vec<u32>,
    /// `zech[d]` is the representation of `1 + α^d`.
    zech: Vec<u32>,
    fingerprint: u64,
}

/// `F_{p^e}` realised as `F_p[t] / (f)`; cheap to clone.
#[derive(Clone)]
pub struct FiniteField {
    t: Arc<Tables>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {})", self.t.p, self.t.e, self.defining_polynomial())
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.tag() == other.tag() && self.t.modulus == other.t.modulus
    }
}
impl Eq for FiniteField {}

impl FiniteField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::with_modulus(p, vec![0, 1])
    }

    /// Build `F_p[t]/(f)` from an explicit monic irreducible `f` (low to high).
    pub fn with_modulus(p: u64, modulus: Vec<u32>) -> Result<Self, FieldError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(FieldError::NotPrime(p));
        }
        let e = modulus.len().saturating_sub(1) as u32;
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        check_order(p, e)?;
        let pp = p as u32;
        let f: Vec<u64> = modulus.iter().map(|&c| (c % pp) as u64).collect();
        if *f.last().unwrap() != 1 || !fp::is_irreducible(&f, p) {
            return Err(FieldError::NotIrreducible(e));
        }
        Ok(Self::build(pp, e, f))
    }

    /// `F_{p^e}` with a defining polynomial drawn at random and certified
    /// irreducible by the Frobenius gcd test.
    pub fn random<R: Rng + ?Sized>(p: u64, e: u32, rng: &mut R) -> Result<Self, FieldError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        check_order(p, e)?;
        if e == 1 {
            return Ok(Self::build(p as u32, 1, vec![0, 1]));
        }
        loop {
            let mut f: Vec<u64> = (0..e).map(|_| rng.gen_range(0..p)).collect();
            f.push(1);
            if fp::is_irreducible(&f, p) {
                return Ok(Self::build(p as u32, e, f));
            }
        }
    }

    fn build(p: u32, e: u32, f: Vec<u64>) -> Self {
        let q = (p as u64).pow(e) as u32;
        let pu = p as u64;
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let mut primitive = 0u32;
        for cand in 1..q {
            let c = fp::from_code(cand, p, e);
            if fp::powmod(&c, order, &f, pu) != [1] {
                continue;
            }
            if factors
                .iter()
                .all(|&r| fp::powmod(&c, order / r, &f, pu) != [1])
            {
                primitive = cand;
                break;
            }
        }
        debug_assert!(primitive != 0);
        let alpha = fp::from_code(primitive, p, e);

        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut from_code = vec![0u32; q as usize];
        let mut cur: Vec<u64> = vec![1];
        for k in 0..q - 1 {
            let code = fp::to_code(&cur, p);
            exp.push(code);
            from_code[code as usize] = k + 1;
            cur = fp::mulmod(&cur, &alpha, &f, pu);
        }
        let zech = exp
            .iter()
            .map(|&code| {
                let d0 = code % p;
                let shifted = code - d0 + (d0 + 1) % p;
                from_code[shifted as usize]
            })
            .collect();

        let modulus: Vec<u32> = f.iter().map(|&c| c as u32).collect();
        let mut fingerprint: u64 = 0xcbf2_9ce4_8422_2325;
        for w in [p, e, primitive].iter().chain(modulus.iter()) {
            fingerprint ^= *w as u64;
            fingerprint = fingerprint.wrapping_mul(0x0100_0000_01b3);
        }
        FiniteField {
            t: Arc::new(Tables {
                p,
                e,
                q,
                modulus,
                primitive,
                exp,
                from_code,
                zech,
                fingerprint,
            }),
        }
    }

    pub fn p(&self) -> u64 {
        self.t.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.t.e
    }

    pub fn order(&self) -> u64 {
        self.t.q as u64
    }

    /// Defining polynomial coefficients, low to high degree.
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    /// Digit code of the primitive element used for the log tables.
    pub fn primitive_code(&self) -> u32 {
        self.t.primitive
    }

    /// Defining polynomial in the variable `t`, e.g. `t^2 + 2*t + 1`.
    pub fn defining_polynomial(&self) -> String {
        render_poly(&self.t.modulus, "t")
    }

    /// The polynomial `Σ c_k t^k` whose digit code is `code`.
    pub fn from_code(&self, code: u32) -> Gf {
        Gf(self.t.from_code[code as usize])
    }

    pub fn to_code(&self, a: Gf) -> u32 {
        if a.0 == 0 {
            0
        } else {
            self.t.exp[(a.0 - 1) as usize]
        }
    }

    /// Coefficients of `a` as a polynomial in `t`, low to high, length `e`.
    pub fn coefficients(&self, a: Gf) -> Vec<u32> {
        let mut code = self.to_code(a);
        (0..self.t.e)
            .map(|_| {
                let d = code % self.t.p;
                code /= self.t.p;
                d
            })
            .collect()
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Gf {
        let mut code = 0u32;
        for &c in coeffs.iter().rev() {
            code = code * self.t.p + c % self.t.p;
        }
        self.from_code(code)
    }

    /// The integer in `0..p` representing `a`, when `a` lies in the prime field.
    pub fn to_prime(&self, a: Gf) -> Option<u32> {
        let code = self.to_code(a);
        (code < self.t.p).then_some(code)
    }

    pub fn from_u64(&self, v: u64) -> Gf {
        Gf(self.t.from_code[(v % self.t.p as u64) as usize])
    }

    /// All elements, zero first.
    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.t.q).map(Gf)
    }

    /// The multiplicative generator `α`.
    pub fn generator(&self) -> Gf {
        Gf(if self.t.q == 2 { 1 } else { 2 })
    }

    #[inline]
    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let m = self.t.q - 1;
        let s = (a - 1) + (b - 1);
        (if s >= m { s - m } else { s }) + 1
    }

    #[inline]
    fn add_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let m = self.t.q - 1;
        let (la, lb) = (a - 1, b - 1);
        let d = if lb >= la { lb - la } else { lb + m - la };
        let z = self.t.zech[d as usize];
        if z == 0 {
            0
        } else {
            let s = la + z - 1;
            (if s >= m { s - m } else { s }) + 1
        }
    }

    #[inline]
    fn neg_raw(&self, a: u32) -> u32 {
        if a == 0 || self.t.p == 2 {
            return a;
        }
        let m = self.t.q - 1;
        let s = (a - 1) + m / 2;
        (if s >= m { s - m } else { s }) + 1
    }
}

fn check_order(p: u64, e: u32) -> Result<(), FieldError> {
    match p.checked_pow(e) {
        Some(q) if q <= MAX_FIELD_ORDER => Ok(()),
        _ => Err(FieldError::TooLarge { p, e }),
    }
}

impl Field for FiniteField {
    type Elem = Gf;

    fn tag(&self) -> FieldTag {
        FieldTag {
            characteristic: self.t.p as u64,
            degree: self.t.e,
            fingerprint: self.t.fingerprint,
        }
    }
    fn characteristic(&self) -> u64 {
        self.t.p as u64
    }
    #[inline]
    fn zero(&self) -> Gf {
        Gf(0)
    }
    #[inline]
    fn one(&self) -> Gf {
        Gf(1)
    }
    fn from_i64(&self, v: i64) -> Gf {
        let p = self.t.p as i64;
        self.from_u64(v.rem_euclid(p) as u64)
    }
    #[inline]
    fn is_zero(&self, a: &Gf) -> bool {
        a.0 == 0
    }
    #[inline]
    fn add(&self, a: &Gf, b: &Gf) -> Gf {
        Gf(self.add_raw(a.0, b.0))
    }
    #[inline]
    fn sub(&self, a: &Gf, b: &Gf) -> Gf {
        Gf(self.add_raw(a.0, self.neg_raw(b.0)))
    }
    #[inline]
    fn mul(&self, a: &Gf, b: &Gf) -> Gf {
        Gf(self.mul_raw(a.0, b.0))
    }
    #[inline]
    fn neg(&self, a: &Gf) -> Gf {
        Gf(self.neg_raw(a.0))
    }
    fn inv(&self, a: &Gf) -> Option<Gf> {
        if a.0 == 0 {
            return None;
        }
        let m = self.t.q - 1;
        let l = a.0 - 1;
        Some(Gf(if l == 0 { 0 } else { m - l } + 1))
    }
    fn pow(&self, a: &Gf, exp: u64) -> Gf {
        if a.0 == 0 {
            return if exp == 0 { Gf(1) } else { Gf(0) };
        }
        let m = (self.t.q - 1) as u64;
        let l = (a.0 - 1) as u64;
        Gf(((l * (exp % m)) % m) as u32 + 1)
    }
    #[inline]
    fn mul_add(&self, a: &Gf, b: &Gf, c: &Gf) -> Gf {
        Gf(self.add_raw(a.0, self.mul_raw(b.0, c.0)))
    }
    fn render(&self, a: &Gf) -> String {
        let code = self.to_code(*a);
        if code < self.t.p {
            format!("{code}")
        } else {
            format!("({})", render_poly(&self.coefficients(*a), "t"))
        }
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Gf {
        Gf(rng.gen_range(0..self.t.q))
    }
}

/// Render `Σ c_k v^k` with terms from high to low degree.
pub(crate) fn render_poly(coeffs: &[u32], var: &str) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let mono = match k {
            0 => String::new(),
            1 => String::from(var),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&format!("{c}"));
        } else if c == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{c}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over `F_p` with `u64` coefficients, low to high, used
/// only to construct the tables.
mod fp {
    use alloc::vec;
    use alloc::vec::Vec;

    use super::prime_factors;

    fn trim(a: &mut Vec<u64>) {
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
        if a.is_empty() {
            a.push(0);
        }
    }

    pub(super) fn from_code(mut code: u32, p: u32, e: u32) -> Vec<u64> {
        let mut v: Vec<u64> = (0..e)
            .map(|_| {
                let d = code % p;
                code /= p;
                d as u64
            })
            .collect();
        trim(&mut v);
        v
    }

    pub(super) fn to_code(a: &[u64], p: u32) -> u32 {
        a.iter().rev().fold(0u32, |acc, &c| acc * p + c as u32)
    }

    fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        let df = f.len() - 1;
        let lead_inv = inv(f[df], p);
        while r.len() > df && !(r.len() == 1 && r[0] == 0) {
            let top = *r.last().unwrap();
            if top != 0 {
                let c = top * lead_inv % p;
                let shift = r.len() - 1 - df;
                for (i, &fc) in f.iter().enumerate() {
                    r[shift + i] = (r[shift + i] + p - c * fc % p) % p;
                }
            }
            r.pop();
        }
        trim(&mut r);
        r
    }

    pub(super) fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        rem(&prod, f, p)
    }

    pub(super) fn powmod(a: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut base = rem(a, f, p);
        let mut acc = vec![1u64];
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(&acc, &base, f, p);
            }
            base = mulmod(&base, &base, f, p);
            exp >>= 1;
        }
        acc
    }

    fn inv(a: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = a % p;
        let mut exp = p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        trim(&mut a);
        trim(&mut b);
        while !(b.len() == 1 && b[0] == 0) {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// `t^(p^k) mod f`.
    fn frobenius_power(k: u32, f: &[u64], p: u64) -> Vec<u64> {
        let mut x = rem(&[0, 1], f, p);
        for _ in 0..k {
            x = powmod(&x, p, f, p);
        }
        x
    }

    fn sub_t(a: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        if r.len() < 2 {
            r.resize(2, 0);
        }
        r[1] = (r[1] + p - 1) % p;
        trim(&mut r);
        r
    }

    /// Rabin's test: `f` (monic, degree `e`) is irreducible iff
    /// `t^(p^e) ≡ t mod f` and `gcd(t^(p^(e/r)) - t, f) = 1` for each prime `r | e`.
    pub(super) fn is_irreducible(f: &[u64], p: u64) -> bool {
        let e = (f.len() - 1) as u32;
        if e == 1 {
            return true;
        }
        let full = frobenius_power(e, f, p);
        if sub_t(&full, p) != [0] {
            return false;
        }
        for r in prime_factors(e as u64) {
            let h = sub_t(&frobenius_power(e / r as u32, f, p), p);
            if gcd(f, &h, p).len() != 1 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_axioms(k: &FiniteField) {
        let elems: Vec<Gf> = k.elements().collect();
        assert_eq!(elems.len() as u64, k.order());
        for a in &elems {
            assert_eq!(k.add(a, &k.neg(a)), k.zero());
            if !k.is_zero(a) {
                assert_eq!(k.mul(a, &k.inv(a).unwrap()), k.one());
            }
            // Frobenius fixes exactly the prime field.
            let frob = k.pow(a, k.p());
            assert_eq!(frob == *a, k.to_prime(*a).is_some());
        }
        // p * 1 = 0
        let mut s = k.zero();
        for _ in 0..k.p() {
            s = k.add(&s, &k.one());
        }
        assert!(k.is_zero(&s));
    }

    #[test]
    fn prime_fields() {
        for p in [2, 3, 5, 7, 13] {
            let k = FiniteField::prime(p).unwrap();
            check_axioms(&k);
            // Agreement with integer arithmetic mod p.
            for a in 0..p {
                for b in 0..p {
                    let (x, y) = (k.from_u64(a), k.from_u64(b));
                    assert_eq!(k.to_prime(k.add(&x, &y)), Some(((a + b) % p) as u32));
                    assert_eq!(k.to_prime(k.mul(&x, &y)), Some(((a * b) % p) as u32));
                }
            }
        }
    }

    #[test]
    fn extension_fields_satisfy_field_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for (p, e) in [(2, 3), (3, 2), (5, 2), (2, 5), (3, 3)] {
            let k = FiniteField::random(p, e, &mut rng).unwrap();
            check_axioms(&k);
            // Distributivity on a sample.
            for _ in 0..200 {
                let (a, b, c) = (k.random(&mut rng), k.random(&mut rng), k.random(&mut rng));
                let lhs = k.mul(&a, &k.add(&b, &c));
                let rhs = k.add(&k.mul(&a, &b), &k.mul(&a, &c));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn addition_matches_polynomial_coefficients() {
        let k = FiniteField::with_modulus(3, vec![1, 0, 1]).unwrap(); // t^2 + 1
        for a in k.elements() {
            for b in k.elements() {
                let ca = k.coefficients(a);
                let cb = k.coefficients(b);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % 3).collect();
                assert_eq!(k.add(&a, &b), k.from_coefficients(&sum));
            }
        }
        // t * t = -1
        let t = k.from_coefficients(&[0, 1]);
        assert_eq!(k.mul(&t, &t), k.from_i64(-1));
        assert_eq!(k.render(&t), "(t)");
        assert_eq!(k.defining_polynomial(), "t^2 + 1");
    }

    #[test]
    fn rejects_reducible_modulus() {
        // t^2 - 1 = (t - 1)(t + 1) over F_3
        assert_eq!(
            FiniteField::with_modulus(3, vec![2, 0, 1]),
            Err(FieldError::NotIrreducible(2))
        );
        assert_eq!(FiniteField::prime(4), Err(FieldError::NotPrime(4)));
        assert!(matches!(
            FiniteField::random(2, 40, &mut ChaCha8Rng::seed_from_u64(0)),
            Err(FieldError::TooLarge { .. })
        ));
    }

    #[test]
    fn random_modulus_is_deterministic_in_seed() {
        let a = FiniteField::random(5, 3, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = FiniteField::random(5, 3, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.defining_polynomial(), b.defining_polynomial());
    }
}
