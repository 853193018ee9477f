//! Coefficient fields.
//!
//! Arithmetic is context-passing: a [`Field`] value owns whatever tables the
//! arithmetic needs and elements are plain values. Two implementations exist,
//! the rationals ([`Rationals`]) and finite fields `F_{p^e}`
//! ([`crate::gf::FiniteField`]).

use alloc::string::String;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// Identifies a concrete field instance so that elements built over
/// different fields are never mixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldTag {
    /// 0 for the rationals.
    pub characteristic: u64,
    pub degree: u32,
    pub fingerprint: u64,
}

impl FieldTag {
    pub const RATIONALS: FieldTag = FieldTag {
        characteristic: 0,
        degree: 1,
        fingerprint: 0,
    };
}

pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn tag(&self) -> FieldTag;
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Canonical text form; injective on elements of this field.
    fn render(&self, a: &Self::Elem) -> String;
    /// Sample an evaluation point. Over the rationals this is a small integer.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// `a + b * c`, the inner-loop operation of elimination.
    fn mul_add(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.add(a, &self.mul(b, c))
    }

    /// `None` when the characteristic divides `k!`.
    fn factorial_inverse(&self, k: u64) -> Option<Self::Elem> {
        let mut f = self.one();
        for i in 2..=k {
            f = self.mul(&f, &self.from_i64(i as i64));
        }
        self.inv(&f)
    }
}

/// The field of rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

/// Half-width of the integer range sampled by [`Rationals::random`].
pub const RATIONAL_SAMPLE_RANGE: i64 = 1 << 20;

impl Field for Rationals {
    type Elem = BigRational;

    fn tag(&self) -> FieldTag {
        FieldTag::RATIONALS
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn render(&self, a: &BigRational) -> String {
        render_rational(a)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-RATIONAL_SAMPLE_RANGE..=RATIONAL_SAMPLE_RANGE))
    }
}

/// "a" for integers, "a/b" otherwise; the denominator is always positive.
pub fn render_rational(a: &BigRational) -> String {
    use alloc::format;
    if a.denom().is_one() {
        format!("{}", a.numer())
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Parse "a" or "a/b" with `b > 0`. Leading `+`/`-` on the numerator only.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer = parse_int(num, true)?;
    let denom = match den {
        Some(d) => parse_int(d, false)?,
        None => BigInt::one(),
    };
    if !denom.is_positive() {
        return None;
    }
    Some(BigRational::new(numer, denom))
}

fn parse_int(s: &str, signed: bool) -> Option<BigInt> {
    let digits = if signed {
        s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s)
    } else {
        s
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), 10)
}
