//! Reduced enveloping algebras `u_χ(g)`, their regular representations and
//! a MeatAxe splitting into composition factors: an estimate of the largest
//! dimension of a simple module that is independent of the center
//! computations.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::center::{reduced_monomial, zp_coordinates, CenterError, RestrictedEnveloping};
use crate::field::Field;
use crate::gf::{FieldError, FiniteField, Gf};
use crate::lie::{LieError, ModularLieAlgebra};
use crate::linalg::{self, EchelonBasis, Matrix};
use crate::pbw::{EnvelopingElement, Monomial};
use crate::poly;
use crate::rng::{self, purpose, WorkRng};

/// Default cap on `p^n`.
pub const DEFAULT_DIMENSION_CAP: usize = 625;

/// Random algebra elements tried on one module before escalating.
const ATTEMPTS_PER_MODULE: usize = 48;

/// Extension escalations allowed inside one split (each squares the field).
const MAX_ESCALATIONS: u32 = 2;

/// Factors of the characteristic polynomial above this degree are skipped.
const MAX_FACTOR_DEGREE: usize = 24;

/// Upper bound on module decisions per split.
const DECISION_BUDGET: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RedenvError {
    #[error("algebra has no restricted structure")]
    NotRestricted,
    #[error("character has {got} entries, expected {expected}")]
    CharacterLength { expected: usize, got: usize },
    #[error("reduced algebra dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: u64, cap: usize },
    #[error("module splitting exceeded its budget")]
    SplitBudgetExceeded,
    #[error(transparent)]
    Center(#[from] CenterError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A linear functional on `g`, given by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub chi: Vec<Gf>,
}

impl Character {
    pub fn zero(field: &FiniteField, n: usize) -> Self {
        Character { chi: vec![field.zero(); n] }
    }

    pub fn coordinate(field: &FiniteField, n: usize, i: usize) -> Self {
        let mut chi = vec![field.zero(); n];
        chi[i] = field.one();
        Character { chi }
    }

    pub fn random<R: Rng + ?Sized>(field: &FiniteField, n: usize, rng: &mut R) -> Self {
        Character {
            chi: (0..n).map(|_| field.random(rng)).collect(),
        }
    }

    pub fn render(&self, field: &FiniteField) -> Vec<String> {
        self.chi.iter().map(|c| field.render(c)).collect()
    }
}

/// `U(g_k) / (x_i^p - x_i^[p] - χ_i^p)`, with basis the reduced monomials.
#[derive(Clone, Debug)]
pub struct ReducedEnvelopingAlgebra {
    ctx: RestrictedEnveloping,
    chi: Character,
    point: Vec<Gf>,
    size: usize,
}

/// `u_χ(g)` for an algebra over the field the character lives in.
pub fn reduced_algebra(alg: &ModularLieAlgebra, chi: &Character) -> Result<ReducedEnvelopingAlgebra, RedenvError> {
    reduced_algebra_capped(alg, chi, DEFAULT_DIMENSION_CAP)
}

pub fn reduced_algebra_capped(
    alg: &ModularLieAlgebra,
    chi: &Character,
    cap: usize,
) -> Result<ReducedEnvelopingAlgebra, RedenvError> {
    if alg.restricted().is_none() {
        return Err(RedenvError::NotRestricted);
    }
    let n = alg.dim();
    if chi.chi.len() != n {
        return Err(RedenvError::CharacterLength {
            expected: n,
            got: chi.chi.len(),
        });
    }
    let dim = alg.p().checked_pow(n as u32).unwrap_or(u64::MAX);
    if dim > cap as u64 {
        return Err(RedenvError::DimensionCap { dim, cap });
    }
    let ctx = RestrictedEnveloping::new(alg)?;
    let k = alg.field();
    let point = chi.chi.iter().map(|c| k.pow(c, alg.p())).collect();
    Ok(ReducedEnvelopingAlgebra {
        ctx,
        chi: chi.clone(),
        point,
        size: dim as usize,
    })
}

impl ReducedEnvelopingAlgebra {
    pub fn dim(&self) -> usize {
        self.size
    }

    pub fn field(&self) -> &FiniteField {
        self.ctx.field()
    }

    pub fn character(&self) -> &Character {
        &self.chi
    }

    pub fn context(&self) -> &RestrictedEnveloping {
        &self.ctx
    }

    pub fn basis(&self) -> Vec<Monomial> {
        (0..self.size)
            .map(|i| reduced_monomial(i, self.ctx.p(), self.ctx.dim()))
            .collect()
    }

    /// Image of an element of `U(g_k)` in the reduced basis.
    pub fn reduce(&self, a: &EnvelopingElement<Gf>) -> Vec<Gf> {
        zp_coordinates(&self.ctx, a).evaluate(self.field(), &self.point)
    }

    /// Lift a coordinate vector to the span of reduced monomials in `U(g_k)`.
    pub fn element(&self, v: &[Gf]) -> EnvelopingElement<Gf> {
        let k = self.field();
        EnvelopingElement::from_terms(
            k,
            self.ctx.dim(),
            v.iter()
                .enumerate()
                .filter(|(_, c)| !k.is_zero(c))
                .map(|(i, c)| (reduced_monomial(i, self.ctx.p(), self.ctx.dim()), *c)),
        )
    }

    pub fn multiply(&self, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
        let pbw = self.ctx.pbw();
        self.reduce(&pbw.mul(&self.element(a), &self.element(b)))
    }

    /// Matrix of left multiplication by `a`, columns indexed by the basis.
    pub fn left_multiplication(&self, a: &EnvelopingElement<Gf>) -> Matrix<Gf> {
        let k = self.field();
        let pbw = self.ctx.pbw();
        let mut m = Matrix::zeros(k, self.size, self.size);
        for (j, mono) in self.basis().iter().enumerate() {
            let col = self.reduce(&pbw.mul(a, &pbw.monomial(mono.exponents())));
            for (i, c) in col.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        m
    }
}

/// A module given by the action matrices of the basis of `g`; vectors are
/// columns.
#[derive(Clone, Debug)]
pub struct AlgebraModule {
    pub field: FiniteField,
    pub action: Vec<Matrix<Gf>>,
    pub dim: usize,
}

impl AlgebraModule {
    pub fn new(field: FiniteField, dim: usize, action: Vec<Matrix<Gf>>) -> Self {
        AlgebraModule { field, action, dim }
    }

    /// Smallest submodule containing `seeds`.
    pub fn spin(&self, seeds: &[Vec<Gf>]) -> EchelonBasis<Gf> {
        spin_with(&self.field, &self.action, self.dim, seeds).0
    }

    /// Action on a submodule, in the basis `basis.rows()`.
    pub fn submodule(&self, basis: &EchelonBasis<Gf>) -> AlgebraModule {
        let k = &self.field;
        let r = basis.rank();
        let action = self
            .action
            .iter()
            .map(|a| {
                let mut m = Matrix::zeros(k, r, r);
                for (j, row) in basis.rows().iter().enumerate() {
                    let img = a.mul_vec(k, row);
                    let c = basis.coordinates(k, &img).expect("submodule is invariant");
                    for (i, x) in c.into_iter().enumerate() {
                        m[(i, j)] = x;
                    }
                }
                m
            })
            .collect();
        AlgebraModule::new(k.clone(), r, action)
    }

    /// Action on the quotient by a submodule, in the basis of standard
    /// vectors at the non-pivot positions.
    pub fn quotient(&self, basis: &EchelonBasis<Gf>) -> AlgebraModule {
        let k = &self.field;
        let mut free: Vec<usize> = (0..self.dim).collect();
        free.retain(|c| !basis.pivots().contains(c));
        let r = free.len();
        let action = self
            .action
            .iter()
            .map(|a| {
                let mut m = Matrix::zeros(k, r, r);
                for (j, &c) in free.iter().enumerate() {
                    let mut img = a.column(c);
                    basis.reduce(k, &mut img);
                    for (i, &fi) in free.iter().enumerate() {
                        m[(i, j)] = img[fi];
                    }
                }
                m
            })
            .collect();
        AlgebraModule::new(k.clone(), r, action)
    }

    fn transposed(&self) -> Vec<Matrix<Gf>> {
        self.action.iter().map(Matrix::transpose).collect()
    }

    /// The same module over an extension field, through `embed`.
    fn lift(&self, big: &FiniteField, embed: &dyn Fn(Gf) -> Gf) -> AlgebraModule {
        let action = self
            .action
            .iter()
            .map(|a| Matrix::from_rows(a.to_rows().into_iter().map(|r| r.into_iter().map(embed).collect()).collect(), self.dim))
            .collect();
        AlgebraModule::new(big.clone(), self.dim, action)
    }
}

/// Spin-up; also returns, for each basis vector in insertion order, the
/// generator and earlier vector it was produced from.
fn spin_with(
    k: &FiniteField,
    action: &[Matrix<Gf>],
    dim: usize,
    seeds: &[Vec<Gf>],
) -> (EchelonBasis<Gf>, Vec<Option<(usize, usize)>>) {
    let mut basis = EchelonBasis::new(dim);
    let mut raw: Vec<Vec<Gf>> = Vec::new();
    let mut words = Vec::new();
    for s in seeds {
        if basis.insert(k, s.clone()) {
            raw.push(s.clone());
            words.push(None);
        }
    }
    let mut idx = 0;
    while idx < raw.len() && basis.rank() < dim {
        for (g, a) in action.iter().enumerate() {
            let w = a.mul_vec(k, &raw[idx]);
            if basis.insert(k, w.clone()) {
                raw.push(w);
                words.push(Some((g, idx)));
            }
        }
        idx += 1;
    }
    (basis, words)
}

/// `p^n` in the regular representation: left multiplication by each `x_i`.
pub fn regular_representation(u: &ReducedEnvelopingAlgebra) -> AlgebraModule {
    let pbw = u.ctx.pbw();
    let action = (0..u.ctx.dim())
        .map(|i| u.left_multiplication(&pbw.generator(i)))
        .collect();
    AlgebraModule::new(u.field().clone(), u.size, action)
}

/// Composition factors of a module over the algebraic closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    /// Dimensions of absolutely irreducible factors, largest first. An
    /// unsplit piece of a degraded run contributes its whole dimension.
    pub factors: Vec<usize>,
    /// Largest extension degree over the module's field that was needed.
    pub escalation: u32,
    /// Some piece could not be decided within the escalation cap.
    pub degraded: bool,
}

impl Composition {
    pub fn max_dim(&self) -> usize {
        self.factors.first().copied().unwrap_or(0)
    }
}

enum Decision {
    Split(EchelonBasis<Gf>),
    /// Irreducible over the working field with endomorphism field of this
    /// degree, so it breaks into that many conjugate absolutely irreducible
    /// factors over the closure.
    Irreducible(usize),
    Undecided,
}

struct Splitter {
    rng: WorkRng,
    seed: u64,
    decisions: usize,
    escalation: u32,
    degraded: bool,
}

/// MeatAxe: split `m` into composition factors. A random algebra element
/// `a` and an irreducible factor `f` of its characteristic polynomial give a
/// kernel vector of `f(a)`; spinning it (and a dual kernel vector under the
/// transposed action) either finds a proper submodule, or, when the nullity
/// of `f(a)` equals `deg f`, proves irreducibility (Norton's criterion).
/// Irreducible factors are then measured over the closure through their
/// endomorphism field. Pieces that resist are lifted to a quadratic
/// extension, at most twice.
pub fn split_simples(m: &AlgebraModule, seed: u64) -> Result<Composition, RedenvError> {
    let mut s = Splitter {
        rng: rng::stream(seed, purpose::MEATAXE),
        seed,
        decisions: 0,
        escalation: 1,
        degraded: false,
    };
    let mut factors = Vec::new();
    s.split(m.clone(), 0, 1, &mut factors)?;
    factors.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Composition {
        factors,
        escalation: s.escalation,
        degraded: s.degraded,
    })
}

impl Splitter {
    fn split(&mut self, m: AlgebraModule, level: u32, ext: u32, out: &mut Vec<usize>) -> Result<(), RedenvError> {
        if m.dim == 0 {
            return Ok(());
        }
        if m.dim == 1 {
            out.push(1);
            return Ok(());
        }
        self.decisions += 1;
        if self.decisions > DECISION_BUDGET {
            return Err(RedenvError::SplitBudgetExceeded);
        }
        match self.decide(&m) {
            Decision::Split(sub) => {
                let (a, b) = (m.submodule(&sub), m.quotient(&sub));
                self.split(a, level, ext, out)?;
                self.split(b, level, ext, out)
            }
            Decision::Irreducible(s) => {
                out.extend(core::iter::repeat(m.dim / s).take(s));
                Ok(())
            }
            Decision::Undecided if level < MAX_ESCALATIONS => {
                let k = &m.field;
                let big = FiniteField::random(
                    k.p(),
                    2 * k.degree(),
                    &mut rng::stream(rng::derive(self.seed, self.decisions as u64), purpose::FIELD),
                )?;
                let embed = embedding(k, &big);
                let lifted = m.lift(&big, &|a| embed(a));
                self.escalation = self.escalation.max(2 * ext);
                self.split(lifted, level + 1, 2 * ext, out)
            }
            Decision::Undecided => {
                self.degraded = true;
                out.push(m.dim);
                Ok(())
            }
        }
    }

    fn random_vector(&mut self, k: &FiniteField, span: &[Vec<Gf>]) -> Vec<Gf> {
        loop {
            let mut v = vec![k.zero(); span[0].len()];
            for b in span {
                let c = k.random(&mut self.rng);
                for (x, y) in v.iter_mut().zip(b) {
                    *x = k.mul_add(x, &c, y);
                }
            }
            if v.iter().any(|x| !k.is_zero(x)) {
                return v;
            }
        }
    }

    fn decide(&mut self, m: &AlgebraModule) -> Decision {
        let k = m.field.clone();
        let d = m.dim;
        let mut pool: Vec<Matrix<Gf>> = m.action.clone();
        if pool.is_empty() {
            pool.push(Matrix::zeros(&k, d, d));
        }
        let dual = m.transposed();
        let words = pool.len();
        for attempt in 0..ATTEMPTS_PER_MODULE + words {
            // The words themselves first: on modules where every generic
            // element is semisimple, a nilpotent generator still exposes
            // the socle.
            let a = if attempt < words {
                pool[attempt].clone()
            } else {
                if pool.len() < 16 {
                    let i = self.rng.gen_range(0..pool.len());
                    let j = self.rng.gen_range(0..pool.len());
                    let prod = pool[i].mul(&k, &pool[j]);
                    pool.push(prod);
                }
                let mut a = Matrix::zeros(&k, d, d);
                for b in &pool {
                    let c = k.random(&mut self.rng);
                    a = a.add(&k, &b.scale(&k, &c));
                }
                a
            };
            let cp = poly::charpoly(&k, &a);
            for (f, _) in poly::factor(&k, &cp, &mut self.rng) {
                let deg = f.len() - 1;
                if deg > MAX_FACTOR_DEGREE {
                    break;
                }
                let fa = poly::eval_matrix(&k, &f, &a);
                let kernel = linalg::nullspace(&k, &fa);
                let v = self.random_vector(&k, &kernel);
                let w = m.spin(core::slice::from_ref(&v));
                if w.rank() < d {
                    return Decision::Split(w);
                }
                let dual_kernel = linalg::nullspace(&k, &fa.transpose());
                let y = self.random_vector(&k, &dual_kernel);
                let wd = spin_with(&k, &dual, d, core::slice::from_ref(&y)).0;
                if wd.rank() < d {
                    let ann = linalg::nullspace(&k, &Matrix::from_rows(wd.rows().to_vec(), d));
                    let mut sub = EchelonBasis::new(d);
                    for v in ann {
                        sub.insert(&k, v);
                    }
                    return Decision::Split(sub);
                }
                if kernel.len() == deg {
                    return Decision::Irreducible(endomorphism_degree(m, &v, &kernel));
                }
            }
        }
        Decision::Undecided
    }
}

/// Dimension of `End(M)` for an irreducible `M`, given a cyclic vector `v`
/// in the kernel `K` of `f(a)` for a good factor `f`: every endomorphism is
/// determined by the image of `v`, which lies in `K`.
fn endomorphism_degree(m: &AlgebraModule, v: &[Gf], kernel: &[Vec<Gf>]) -> usize {
    if kernel.len() == 1 {
        return 1;
    }
    let k = &m.field;
    let d = m.dim;
    let (_, words) = spin_with(k, &m.action, d, &[v.to_vec()]);
    let images = |w: &[Gf]| -> Matrix<Gf> {
        let mut cols: Vec<Vec<Gf>> = Vec::with_capacity(d);
        for word in &words {
            let c = match word {
                None => w.to_vec(),
                Some((g, parent)) => m.action[*g].mul_vec(k, &cols[*parent]),
            };
            cols.push(c);
        }
        Matrix::from_rows(cols, d).transpose()
    };
    let u_inv = linalg::inverse(k, &images(v)).expect("v is cyclic");
    let mut conditions = EchelonBasis::new(m.action.len() * d * d);
    for w in kernel {
        let t = images(w).mul(k, &u_inv);
        let mut flat = Vec::with_capacity(m.action.len() * d * d);
        for a in &m.action {
            let c = t.mul(k, a).add(k, &a.mul(k, &t).scale(k, &k.from_i64(-1)));
            for r in c.to_rows() {
                flat.extend(r);
            }
        }
        conditions.insert(k, flat);
    }
    kernel.len() - conditions.rank()
}

/// Embedding of `small` into `big` (same characteristic, degree dividing),
/// sending the generator of `small` to a root of its defining polynomial.
pub fn embedding(small: &FiniteField, big: &FiniteField) -> impl Fn(Gf) -> Gf {
    let modulus: Vec<Gf> = small.modulus().iter().map(|&c| big.from_u64(c as u64)).collect();
    let root = if small.degree() == 1 {
        big.zero()
    } else {
        big.elements()
            .find(|r| big.is_zero(&poly::eval(big, &modulus, r)))
            .expect("degree divides")
    };
    let small = small.clone();
    let big = big.clone();
    move |a: Gf| {
        small
            .coefficients(a)
            .iter()
            .rev()
            .fold(big.zero(), |acc, &c| big.mul_add(&big.from_u64(c as u64), &acc, &root))
    }
}

/// Oracle summary: the largest composition-factor dimension seen over the
/// sampled characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleEstimate {
    pub m_est: u64,
    /// First character attaining `m_est`, rendered in its field.
    pub witness: Vec<String>,
    pub witness_extension_degree: u32,
    pub defining_polynomial: String,
    pub samples: usize,
    pub characters_tried: usize,
    pub seed: u64,
    /// Random characters were also drawn from `F_{p^2}`.
    pub escalated: bool,
    pub degraded: bool,
}

/// Maximum composition-factor dimension of `u_χ(g)` over `χ = 0`, the
/// coordinate characters and `samples` random characters from `F_p`; if all
/// of these agree on a value below `p^{⌊n/2⌋}`, `samples` more characters
/// are drawn from `F_{p^2}`.
pub fn max_irreducible_dim(alg: &ModularLieAlgebra, samples: usize, seed: u64) -> Result<OracleEstimate, RedenvError> {
    if alg.restricted().is_none() {
        return Err(RedenvError::NotRestricted);
    }
    let p = alg.p();
    let n = alg.dim();
    let dim = p.checked_pow(n as u32).unwrap_or(u64::MAX);
    if dim > DEFAULT_DIMENSION_CAP as u64 {
        return Err(RedenvError::DimensionCap {
            dim,
            cap: DEFAULT_DIMENSION_CAP,
        });
    }
    let fp = FiniteField::prime(p)?;
    let base = alg.over_field(&fp)?;
    let mut chars = vec![Character::zero(&fp, n)];
    chars.extend((0..n).map(|i| Character::coordinate(&fp, n, i)));
    let mut r = rng::stream(rng::derive(seed, 0), purpose::ORACLE);
    chars.extend((0..samples).map(|_| Character::random(&fp, n, &mut r)));

    let mut best: Option<(u64, Character, FiniteField)> = None;
    let mut values = Vec::new();
    let mut degraded = false;
    let mut tried = 0usize;
    let mut run = |alg: &ModularLieAlgebra, chi: &Character, best: &mut Option<(u64, Character, FiniteField)>| {
        let u = reduced_algebra(alg, chi)?;
        let comp = split_simples(&regular_representation(&u), rng::derive(seed, 1 + tried as u64))?;
        tried += 1;
        degraded |= comp.degraded;
        let m = comp.max_dim() as u64;
        if best.as_ref().is_none_or(|(b, _, _)| m > *b) {
            *best = Some((m, chi.clone(), alg.field().clone()));
        }
        Ok::<u64, RedenvError>(m)
    };
    for chi in &chars {
        values.push(run(&base, chi, &mut best)?);
    }
    let small = p.pow((n / 2) as u32);
    let all_equal = values.windows(2).all(|w| w[0] == w[1]);
    let mut escalated = false;
    if all_equal && values[0] < small {
        escalated = true;
        let big = FiniteField::random(p, 2, &mut rng::stream(seed, purpose::FIELD))?;
        let lifted = base.over_field(&big)?;
        let mut r2 = rng::stream(rng::derive(seed, 1), purpose::ORACLE);
        for _ in 0..samples {
            let chi = Character::random(&big, n, &mut r2);
            run(&lifted, &chi, &mut best)?;
        }
    }
    let (m_est, chi, field) = best.expect("at least one character");
    Ok(OracleEstimate {
        m_est,
        witness: chi.render(&field),
        witness_extension_degree: field.degree(),
        defining_polynomial: field.defining_polynomial(),
        samples,
        characters_tried: tried,
        seed,
        escalated,
        degraded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::lie::base_change_mod_p;

    fn alg(name: &str, p: u64) -> ModularLieAlgebra {
        base_change_mod_p(&builtin::lookup(name).unwrap(), p, 1, 0)
            .unwrap()
            .restrict()
            .unwrap()
    }

    fn factors(name: &str, p: u64, chi: &[i64]) -> Composition {
        let a = alg(name, p);
        let k = a.field().clone();
        let chi = Character {
            chi: chi.iter().map(|&c| k.from_i64(c)).collect(),
        };
        let u = reduced_algebra(&a, &chi).unwrap();
        split_simples(&regular_representation(&u), 0).unwrap()
    }

    #[test]
    fn truncated_polynomial_ring() {
        let a = alg("abelian:1", 2);
        let k = a.field().clone();
        let u = reduced_algebra(&a, &Character::zero(&k, 1)).unwrap();
        let m = regular_representation(&u);
        let jordan = Matrix::from_rows(vec![vec![k.zero(), k.zero()], vec![k.one(), k.zero()]], 2);
        assert_eq!(m.action[0], jordan);
        assert_eq!(factors("abelian:1", 3, &[0]).factors, [1, 1, 1]);
        assert_eq!(factors("abelian:2", 2, &[0, 0]).factors, [1; 4]);
    }

    #[test]
    fn heisenberg_factors() {
        assert_eq!(factors("heisenberg", 3, &[0, 0, 1]).factors, [3; 9]);
        assert_eq!(factors("heisenberg", 3, &[0, 0, 0]).factors, [1; 27]);
    }

    #[test]
    fn restricted_sl2_factors() {
        let c = factors("sl2", 3, &[0, 0, 0]);
        assert_eq!(c.factors.iter().sum::<usize>(), 27);
        assert!(c.factors.iter().all(|d| (1..=3).contains(d)));
        assert_eq!(c.max_dim(), 3);
        assert!(c.factors.contains(&1) && c.factors.contains(&2));
    }

    #[test]
    fn dimension_cap() {
        let a = alg("gl2", 7);
        let k = a.field().clone();
        assert_eq!(
            reduced_algebra(&a, &Character::zero(&k, 4)).unwrap_err(),
            RedenvError::DimensionCap { dim: 2401, cap: 625 }
        );
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(max_irreducible_dim(&alg("heisenberg", 3), 10, 0).unwrap().m_est, 3);
        assert_eq!(max_irreducible_dim(&alg("remark:1:1", 3), 10, 0).unwrap().m_est, 3);
        assert_eq!(max_irreducible_dim(&alg("abelian:2", 3), 10, 0).unwrap().m_est, 1);
    }
}
