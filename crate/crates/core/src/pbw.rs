//! Arithmetic in the universal enveloping algebra through PBW normal forms.
//!
//! The PBW basis is the set of ordered monomials `x_0^{a_0} ⋯ x_{n-1}^{a_{n-1}}`
//! in the input basis order. Products are straightened with
//! `x_j x_i = x_i x_j - [x_i, x_j]` for `j > i`; the right multiplication of a
//! normal monomial by a single generator is memoized.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::cmp::Ordering;

use crate::field::{Field, FieldTag};
use crate::lie::LieTable;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PbwError {
    #[error("operands live over different coefficient fields or dimensions")]
    CoefficientFieldMismatch,
    #[error("{d}! is not invertible in characteristic {p}")]
    FactorialNotInvertible { d: u32, p: u64 },
    #[error("the zero element has no principal symbol")]
    ZeroElement,
}

/// Exponent vector of an ordered monomial.
///
/// Ordered degree-lexicographically: total degree first, then the exponent
/// of `x_0`, then `x_1`, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    fn last_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&a| a > 0)
    }

    fn first_index(&self) -> Option<usize> {
        self.0.iter().position(|&a| a > 0)
    }

    /// Commutative product (exponent sum).
    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn bump(&self, i: usize, by: i64) -> Monomial {
        let mut v = self.0.clone();
        v[i] = (v[i] as i64 + by) as u32;
        Monomial(v)
    }

    pub fn render(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&labels[i]);
            if a > 1 {
                out.push_str(&alloc::format!("^{a}"));
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse linear combination of monomials with no zero coefficients.
///
/// Used both for elements of `U(g)` (monomials read as PBW-ordered words) and
/// of `Sym(g)` (monomials read commutatively); the two are distinct types so
/// they cannot be confused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Terms<E> {
    n: usize,
    tag: FieldTag,
    map: BTreeMap<Monomial, E>,
}

impl<E: Clone + PartialEq> Terms<E> {
    fn zero(n: usize, tag: FieldTag) -> Self {
        Terms {
            n,
            tag,
            map: BTreeMap::new(),
        }
    }

    fn from_pairs<F: Field<Elem = E>>(field: &F, n: usize, pairs: impl IntoIterator<Item = (Monomial, E)>) -> Self {
        let mut acc = Accumulator::new(n, field.tag());
        for (m, c) in pairs {
            acc.add(field, m, &c);
        }
        acc.finish(field)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Terms in increasing degree-lexicographic order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &E)> {
        self.map.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&E> {
        self.map.get(m)
    }

    /// Largest total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.map.keys().map(Monomial::degree).max()
    }

    pub fn leading(&self) -> Option<(&Monomial, &E)> {
        self.map.iter().next_back()
    }

    fn combine<F: Field<Elem = E>>(&self, field: &F, other: &Self, scale: &E) -> Self {
        let mut map = self.map.clone();
        for (m, c) in &other.map {
            let sc = field.mul(c, scale);
            match map.get_mut(m) {
                Some(v) => {
                    *v = field.add(v, &sc);
                    if field.is_zero(v) {
                        map.remove(m);
                    }
                }
                None => {
                    if !field.is_zero(&sc) {
                        map.insert(m.clone(), sc);
                    }
                }
            }
        }
        Terms {
            n: self.n,
            tag: self.tag,
            map,
        }
    }

    fn scaled<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Terms::zero(self.n, self.tag);
        }
        Terms {
            n: self.n,
            tag: self.tag,
            map: self.map.iter().map(|(m, v)| (m.clone(), field.mul(v, c))).collect(),
        }
    }

    fn render<F: Field<Elem = E>>(&self, field: &F, labels: &[String]) -> String {
        if self.map.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (m, c) in self.map.iter().rev() {
            let coeff = field.render(c);
            let (neg, mag) = match coeff.strip_prefix('-') {
                Some(rest) => (true, String::from(rest)),
                None => (false, coeff),
            };
            let body = if m.is_one() {
                mag
            } else if mag == "1" {
                m.render(labels)
            } else {
                alloc::format!("{mag}*{}", m.render(labels))
            };
            match (out.is_empty(), neg) {
                (true, false) => out.push_str(&body),
                (true, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

/// Collects `(monomial, coefficient)` contributions, cancelling zeros at the end.
struct Accumulator<E> {
    n: usize,
    tag: FieldTag,
    map: BTreeMap<Monomial, E>,
}

impl<E: Clone + PartialEq> Accumulator<E> {
    fn new(n: usize, tag: FieldTag) -> Self {
        Accumulator {
            n,
            tag,
            map: BTreeMap::new(),
        }
    }

    fn add<F: Field<Elem = E>>(&mut self, field: &F, m: Monomial, c: &E) {
        if field.is_zero(c) {
            return;
        }
        match self.map.get_mut(&m) {
            Some(v) => *v = field.add(v, c),
            None => {
                self.map.insert(m, c.clone());
            }
        }
    }

    fn finish<F: Field<Elem = E>>(mut self, field: &F) -> Terms<E> {
        self.map.retain(|_, v| !field.is_zero(v));
        Terms {
            n: self.n,
            tag: self.tag,
            map: self.map,
        }
    }
}

/// An element of `U(g)` in PBW normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopingElement<E>(Terms<E>);

/// An element of `Sym(g)`, a commutative polynomial in the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPolynomial<E>(Terms<E>);

macro_rules! term_wrapper {
    ($t:ident) => {
        impl<E: Clone + PartialEq> $t<E> {
            pub fn zero<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
                $t(Terms::zero(n, field.tag()))
            }

            pub fn constant<F: Field<Elem = E>>(field: &F, n: usize, c: E) -> Self {
                $t(Terms::from_pairs(field, n, [(Monomial::one(n), c)]))
            }

            pub fn generator<F: Field<Elem = E>>(field: &F, n: usize, i: usize) -> Self {
                $t(Terms::from_pairs(field, n, [(Monomial::generator(n, i), field.one())]))
            }

            pub fn from_terms<F: Field<Elem = E>>(
                field: &F,
                n: usize,
                terms: impl IntoIterator<Item = (Monomial, E)>,
            ) -> Self {
                $t(Terms::from_pairs(field, n, terms))
            }

            /// Linear element `Σ v_i x_i`.
            pub fn linear<F: Field<Elem = E>>(field: &F, v: &[E]) -> Self {
                let n = v.len();
                Self::from_terms(
                    field,
                    n,
                    v.iter()
                        .enumerate()
                        .map(|(i, c)| (Monomial::generator(n, i), c.clone())),
                )
            }

            pub fn terms(&self) -> &Terms<E> {
                &self.0
            }

            pub fn dim(&self) -> usize {
                self.0.n
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_zero()
            }

            pub fn degree(&self) -> Option<u32> {
                self.0.degree()
            }

            pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &E)> {
                self.0.iter()
            }

            pub fn coefficient(&self, m: &Monomial) -> Option<&E> {
                self.0.coefficient(m)
            }

            pub fn leading(&self) -> Option<(&Monomial, &E)> {
                self.0.leading()
            }

            pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
                $t(self.0.combine(field, &other.0, &field.one()))
            }

            pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
                $t(self.0.combine(field, &other.0, &field.neg(&field.one())))
            }

            pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
                $t(self.0.scaled(field, c))
            }

            /// Canonical text, terms from the largest monomial down, e.g.
            /// `3*h^2*x + 1`.
            pub fn render<F: Field<Elem = E>>(&self, field: &F, labels: &[String]) -> String {
                self.0.render(field, labels)
            }
        }
    };
}

term_wrapper!(EnvelopingElement);
term_wrapper!(SymmetricPolynomial);

impl<E: Clone + PartialEq> SymmetricPolynomial<E> {
    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut acc = Accumulator::new(self.0.n, self.0.tag);
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                acc.add(field, a.times(b), &field.mul(ca, cb));
            }
        }
        SymmetricPolynomial(acc.finish(field))
    }

    pub fn pow<F: Field<Elem = E>>(&self, field: &F, k: u32) -> Self {
        let mut acc = Self::constant(field, self.dim(), field.one());
        for _ in 0..k {
            acc = acc.mul(field, self);
        }
        acc
    }

    /// `∂f/∂x_k`.
    pub fn derivative<F: Field<Elem = E>>(&self, field: &F, k: usize) -> Self {
        let n = self.dim();
        Self::from_terms(
            field,
            n,
            self.iter().filter(|(m, _)| m.0[k] > 0).map(|(m, c)| {
                (m.bump(k, -1), field.mul(c, &field.from_i64(m.0[k] as i64)))
            }),
        )
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part<F: Field<Elem = E>>(&self, field: &F, d: u32) -> Self {
        Self::from_terms(
            field,
            self.dim(),
            self.iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }
}

/// The top-degree homogeneous part of `a`, read in `gr U(g) = Sym(g)`.
pub fn principal_symbol<F: Field>(
    field: &F,
    a: &EnvelopingElement<F::Elem>,
) -> Result<SymmetricPolynomial<F::Elem>, PbwError> {
    let d = a.degree().ok_or(PbwError::ZeroElement)?;
    Ok(SymmetricPolynomial::from_terms(
        field,
        a.dim(),
        a.iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone())),
    ))
}

type Product<E> = Vec<(Monomial, E)>;

/// Multiplication engine for `U(g)` over a fixed field and bracket table.
///
/// Holds a memo of `monomial · x_k` products. The memo is an interior
/// mutable cache; results never depend on its contents.
pub struct Pbw<F: Field> {
    field: F,
    table: LieTable<F::Elem>,
    memo: RefCell<BTreeMap<(Monomial, usize), Product<F::Elem>>>,
}

impl<F: Field> Clone for Pbw<F> {
    fn clone(&self) -> Self {
        Pbw::new(self.field.clone(), self.table.clone())
    }
}

impl<F: Field> core::fmt::Debug for Pbw<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Pbw")
            .field("field", &self.field)
            .field("dim", &self.table.dim())
            .finish()
    }
}

impl<F: Field> Pbw<F> {
    pub fn new(field: F, table: LieTable<F::Elem>) -> Self {
        Pbw {
            field,
            table,
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn table(&self) -> &LieTable<F::Elem> {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    /// Number of memoized `monomial · generator` products.
    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }

    /// Snapshot of the memo, `((m, k), m·x_k)` in key order.
    pub fn memo_entries(&self) -> Vec<((Monomial, usize), Vec<(Monomial, F::Elem)>)> {
        self.memo.borrow().iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }

    /// Seed the memo with products computed earlier for the same field and
    /// table. Entries must be correct; they are trusted as is.
    pub fn preload_memo(&self, entries: impl IntoIterator<Item = ((Monomial, usize), Vec<(Monomial, F::Elem)>)>) {
        self.memo.borrow_mut().extend(entries);
    }

    pub fn zero(&self) -> EnvelopingElement<F::Elem> {
        EnvelopingElement::zero(&self.field, self.dim())
    }

    pub fn one(&self) -> EnvelopingElement<F::Elem> {
        self.scalar(self.field.one())
    }

    pub fn scalar(&self, c: F::Elem) -> EnvelopingElement<F::Elem> {
        EnvelopingElement::constant(&self.field, self.dim(), c)
    }

    pub fn generator(&self, i: usize) -> EnvelopingElement<F::Elem> {
        EnvelopingElement::generator(&self.field, self.dim(), i)
    }

    pub fn monomial(&self, exponents: &[u32]) -> EnvelopingElement<F::Elem> {
        EnvelopingElement::from_terms(
            &self.field,
            self.dim(),
            [(Monomial::new(exponents.to_vec()), self.field.one())],
        )
    }

    pub fn linear(&self, v: &[F::Elem]) -> EnvelopingElement<F::Elem> {
        EnvelopingElement::linear(&self.field, v)
    }

    fn check(&self, a: &EnvelopingElement<F::Elem>) -> Result<(), PbwError> {
        if a.dim() != self.dim() || a.0.tag != self.field.tag() {
            Err(PbwError::CoefficientFieldMismatch)
        } else {
            Ok(())
        }
    }

    /// `m · x_k` in normal form.
    fn mono_times_gen(&self, m: &Monomial, k: usize) -> Product<F::Elem> {
        let j = match m.last_index() {
            None => return vec![(Monomial::generator(self.dim(), k), self.field.one())],
            Some(j) => j,
        };
        if j <= k {
            return vec![(m.bump(k, 1), self.field.one())];
        }
        let key = (m.clone(), k);
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        // m = m' x_j with j > k:  m x_k = (m' x_k) x_j + m' [x_j, x_k].
        let field = &self.field;
        let prefix = m.bump(j, -1);
        let mut acc = Accumulator::new(self.dim(), field.tag());
        for (mm, c) in self.mono_times_gen(&prefix, k) {
            for (r, d) in self.mono_times_gen(&mm, j) {
                acc.add(field, r, &field.mul(&c, &d));
            }
        }
        for (l, c) in self.table.bracket_basis(j, k) {
            for (r, d) in self.mono_times_gen(&prefix, *l) {
                acc.add(field, r, &field.mul(c, &d));
            }
        }
        let out: Product<F::Elem> = acc.finish(field).map.into_iter().collect();
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }

    /// Normal form of the product of two normal monomials.
    pub fn mono_mul(&self, a: &Monomial, b: &Monomial) -> Vec<(Monomial, F::Elem)> {
        let field = &self.field;
        match (a.last_index(), b.first_index()) {
            (_, None) => return vec![(a.clone(), field.one())],
            (None, _) => return vec![(b.clone(), field.one())],
            (Some(j), Some(i)) if j <= i => return vec![(a.times(b), field.one())],
            _ => {}
        }
        let mut cur: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        cur.insert(a.clone(), field.one());
        for (k, &e) in b.0.iter().enumerate() {
            for _ in 0..e {
                let mut acc = Accumulator::new(self.dim(), field.tag());
                for (m, c) in &cur {
                    for (r, d) in self.mono_times_gen(m, k) {
                        acc.add(field, r, &field.mul(c, &d));
                    }
                }
                cur = acc.finish(field).map;
            }
        }
        cur.into_iter().collect()
    }

    /// Product in normal form; panics on mismatched operands.
    pub fn mul(&self, a: &EnvelopingElement<F::Elem>, b: &EnvelopingElement<F::Elem>) -> EnvelopingElement<F::Elem> {
        self.pbw_multiply(a, b).expect("operands over the engine's field")
    }

    pub fn pbw_multiply(
        &self,
        a: &EnvelopingElement<F::Elem>,
        b: &EnvelopingElement<F::Elem>,
    ) -> Result<EnvelopingElement<F::Elem>, PbwError> {
        self.check(a)?;
        self.check(b)?;
        let field = &self.field;
        let mut acc = Accumulator::new(self.dim(), field.tag());
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                let c = field.mul(ca, cb);
                for (r, d) in self.mono_mul(ma, mb) {
                    acc.add(field, r, &field.mul(&c, &d));
                }
            }
        }
        Ok(EnvelopingElement(acc.finish(field)))
    }

    /// `ab - ba`; panics on mismatched operands.
    pub fn bracket(&self, a: &EnvelopingElement<F::Elem>, b: &EnvelopingElement<F::Elem>) -> EnvelopingElement<F::Elem> {
        self.pbw_bracket(a, b).expect("operands over the engine's field")
    }

    pub fn pbw_bracket(
        &self,
        a: &EnvelopingElement<F::Elem>,
        b: &EnvelopingElement<F::Elem>,
    ) -> Result<EnvelopingElement<F::Elem>, PbwError> {
        let ab = self.pbw_multiply(a, b)?;
        let ba = self.pbw_multiply(b, a)?;
        Ok(ab.sub(&self.field, &ba))
    }

    /// `[x_i, a]`.
    pub fn ad_generator(&self, i: usize, a: &EnvelopingElement<F::Elem>) -> EnvelopingElement<F::Elem> {
        self.bracket(&self.generator(i), a)
    }

    pub fn pow(&self, a: &EnvelopingElement<F::Elem>, k: u32) -> EnvelopingElement<F::Elem> {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Whether `a` commutes with every basis element.
    pub fn is_central(&self, a: &EnvelopingElement<F::Elem>) -> bool {
        (0..self.dim()).all(|i| self.ad_generator(i, a).is_zero())
    }

    /// Image under `Sym(g) → U(g)`, `x^a ↦ (1/d!) Σ_{orderings}`, computed as a
    /// sum over distinct words weighted by `Π a_i! / d!`.
    pub fn symmetrize(&self, f: &SymmetricPolynomial<F::Elem>) -> Result<EnvelopingElement<F::Elem>, PbwError> {
        let field = &self.field;
        if f.dim() != self.dim() || f.0.tag != field.tag() {
            return Err(PbwError::CoefficientFieldMismatch);
        }
        let mut words: BTreeMap<Monomial, EnvelopingElement<F::Elem>> = BTreeMap::new();
        let mut out = self.zero();
        for (m, c) in f.iter() {
            let d = m.degree();
            let p = field.characteristic();
            if p != 0 && (d as u64) >= p {
                return Err(PbwError::FactorialNotInvertible { d, p });
            }
            let dinv = field.factorial_inverse(d as u64).expect("checked above");
            let mut weight = dinv;
            for &a in m.exponents() {
                for i in 2..=a {
                    weight = field.mul(&weight, &field.from_i64(i as i64));
                }
            }
            let w = self.distinct_words(m, &mut words);
            out = out.add(field, &w.scale(field, &field.mul(&weight, c)));
        }
        Ok(out)
    }

    /// Sum of all distinct words with content `m`:
    /// `W(a) = Σ_{a_i > 0} x_i · W(a - e_i)`.
    fn distinct_words(
        &self,
        m: &Monomial,
        memo: &mut BTreeMap<Monomial, EnvelopingElement<F::Elem>>,
    ) -> EnvelopingElement<F::Elem> {
        if m.is_one() {
            return self.one();
        }
        if let Some(w) = memo.get(m) {
            return w.clone();
        }
        let mut acc = self.zero();
        for i in 0..self.dim() {
            if m.0[i] == 0 {
                continue;
            }
            let rest = self.distinct_words(&m.bump(i, -1), memo);
            acc = acc.add(&self.field, &self.mul(&self.generator(i), &rest));
        }
        memo.insert(m.clone(), acc.clone());
        acc
    }

    /// The weight `λ` with `[x_i, a] = λ_i a` for all `i`, if `a` is a
    /// semi-invariant.
    pub fn semi_invariant_weight(&self, a: &EnvelopingElement<F::Elem>) -> Option<Vec<F::Elem>> {
        let (lead, lc) = a.leading()?;
        let field = &self.field;
        let lc_inv = field.inv(lc)?;
        let mut weight = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let b = self.ad_generator(i, a);
            let lambda = match b.coefficient(lead) {
                Some(c) => field.mul(c, &lc_inv),
                None => field.zero(),
            };
            if b != a.scale(field, &lambda) {
                return None;
            }
            weight.push(lambda);
        }
        Some(weight)
    }

    /// Adjoint action of `x_i` on `Sym(g)`: the derivation extending
    /// `x_k ↦ [x_i, x_k]`.
    pub fn sym_ad_generator(&self, i: usize, f: &SymmetricPolynomial<F::Elem>) -> SymmetricPolynomial<F::Elem> {
        let field = &self.field;
        let n = self.dim();
        let mut out = SymmetricPolynomial::zero(field, n);
        for k in 0..n {
            let br = self.table.bracket_basis(i, k);
            if br.is_empty() {
                continue;
            }
            let image = SymmetricPolynomial::from_terms(
                field,
                n,
                br.iter().map(|(l, c)| (Monomial::generator(n, *l), c.clone())),
            );
            out = out.add(field, &f.derivative(field, k).mul(field, &image));
        }
        out
    }

    /// Weight of a semi-invariant of `Sym(g)` under the adjoint action.
    pub fn semi_invariant_weight_sym(&self, f: &SymmetricPolynomial<F::Elem>) -> Option<Vec<F::Elem>> {
        let (lead, lc) = f.leading()?;
        let field = &self.field;
        let lc_inv = field.inv(lc)?;
        let mut weight = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let b = self.sym_ad_generator(i, f);
            let lambda = match b.coefficient(lead) {
                Some(c) => field.mul(c, &lc_inv),
                None => field.zero(),
            };
            if b != f.scale(field, &lambda) {
                return None;
            }
            weight.push(lambda);
        }
        Some(weight)
    }
}
