//! Lie algebra presentations, reduction mod p, restricted structures and the
//! index.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::field::{render_rational, Field, Rationals};
use crate::gf::{is_prime, FieldError, FiniteField, Gf};
use crate::linalg::{self, Matrix};
use crate::rng::{self, purpose};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("bracket of basis element {0} with itself must vanish")]
    SelfBracket(usize),
    #[error("structure constant {constant} has a denominator divisible by {p}")]
    DenominatorDivisibleByP { constant: String, p: u64 },
    #[error("Jacobi identity fails for triples {0:?}")]
    Jacobi(Vec<(usize, usize, usize)>),
    #[error("(ad x_{0})^p is not an inner derivation; no p-map exists")]
    NotRestrictable(usize),
    #[error("p-map value for basis element {0} violates ad(x^[p]) = (ad x)^p")]
    InvalidPMap(usize),
    #[error("algebra has no restricted structure")]
    NotRestricted,
    #[error("data does not lie in the prime field and cannot be moved to another field")]
    NotPrimeFieldData,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Sparse structure constants: `[x_i, x_j] = Σ_k c_k x_k`, stored for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraPresentation {
    name: String,
    labels: Vec<String>,
    constants: BTreeMap<(usize, usize, usize), BigRational>,
}

impl LieAlgebraPresentation {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Self {
        LieAlgebraPresentation {
            name: name.into(),
            labels,
            constants: BTreeMap::new(),
        }
    }

    /// Set `[x_i, x_j] = Σ c_k x_k`, replacing any previous value. Either
    /// order of `i, j` is accepted; antisymmetry is applied on storage.
    pub fn set_bracket(
        &mut self,
        i: usize,
        j: usize,
        result: &[(usize, BigRational)],
    ) -> Result<(), LieError> {
        let n = self.dim();
        for &idx in [i, j].iter().chain(result.iter().map(|(k, _)| k)) {
            if idx >= n {
                return Err(LieError::IndexOutOfRange(idx));
            }
        }
        if i == j {
            if result.iter().all(|(_, c)| c.is_zero()) {
                return Ok(());
            }
            return Err(LieError::SelfBracket(i));
        }
        let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
        self.constants.retain(|&(x, y, _), _| (x, y) != (a, b));
        for (k, c) in result {
            let c = if sign { -c.clone() } else { c.clone() };
            let slot = self.constants.entry((a, b, *k)).or_insert_with(BigRational::zero);
            *slot += c;
        }
        self.constants.retain(|_, c| !c.is_zero());
        Ok(())
    }

    pub fn with_bracket(mut self, i: usize, j: usize, result: &[(usize, i64)]) -> Self {
        let r: Vec<(usize, BigRational)> = result
            .iter()
            .map(|&(k, c)| (k, BigRational::from_integer(c.into())))
            .collect();
        self.set_bracket(i, j, &r).expect("valid builtin bracket");
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Nonzero constants `(i, j, k) ↦ c` with `i < j`.
    pub fn constants(&self) -> &BTreeMap<(usize, usize, usize), BigRational> {
        &self.constants
    }

    /// `[x_i, x_j]` for `i < j` as sparse `(k, c)` pairs.
    pub fn bracket_of(&self, i: usize, j: usize) -> Vec<(usize, BigRational)> {
        self.constants
            .range((i, j, 0)..(i, j, usize::MAX))
            .map(|(&(_, _, k), c)| (k, c.clone()))
            .collect()
    }

    pub fn table(&self) -> LieTable<BigRational> {
        LieTable::build(&Rationals, self.dim(), self.constants.iter().map(|(&t, c)| (t, c.clone())))
    }
}

/// Dense-indexed sparse bracket table over a concrete field, with both
/// orders `(i, j)` and `(j, i)` populated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTable<E> {
    n: usize,
    entries: Vec<Vec<(usize, E)>>,
}

impl<E: Clone + PartialEq> LieTable<E> {
    pub fn build<F: Field<Elem = E>>(
        field: &F,
        n: usize,
        constants: impl IntoIterator<Item = ((usize, usize, usize), E)>,
    ) -> Self {
        let mut entries = vec![Vec::new(); n * n];
        for ((i, j, k), c) in constants {
            if field.is_zero(&c) {
                continue;
            }
            entries[i * n + j].push((k, c.clone()));
            entries[j * n + i].push((k, field.neg(&c)));
        }
        for e in entries.iter_mut() {
            e.sort_by_key(|(k, _)| *k);
        }
        LieTable { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `[x_i, x_j]` as sparse `(k, c)`.
    #[inline]
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, E)] {
        &self.entries[i * self.n + j]
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.iter().all(|e| e.is_empty())
    }

    /// Constants `((i, j, k), c)` with `i < j`.
    pub fn constants(&self) -> impl Iterator<Item = ((usize, usize, usize), &E)> + '_ {
        (0..self.n).flat_map(move |i| {
            (i + 1..self.n).flat_map(move |j| {
                self.bracket_basis(i, j).iter().map(move |(k, c)| ((i, j, *k), c))
            })
        })
    }

    pub fn bracket<F: Field<Elem = E>>(&self, field: &F, u: &[E], v: &[E]) -> Vec<E> {
        let mut out = vec![field.zero(); self.n];
        for (i, a) in u.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if field.is_zero(b) {
                    continue;
                }
                let ab = field.mul(a, b);
                for (k, c) in self.bracket_basis(i, j) {
                    out[*k] = field.mul_add(&out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// Matrix of `ad v` on the basis: column `j` holds `[v, x_j]`.
    pub fn ad_matrix<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Matrix<E> {
        let mut m = Matrix::zeros(field, self.n, self.n);
        for (i, a) in v.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for j in 0..self.n {
                for (k, c) in self.bracket_basis(i, j) {
                    m[(*k, j)] = field.mul_add(&m[(*k, j)], a, c);
                }
            }
        }
        m
    }

    /// Every triple `i < j < l` whose cyclic Jacobi sum is nonzero, with the
    /// defect vector.
    pub fn jacobi_defects<F: Field<Elem = E>>(&self, field: &F) -> Vec<JacobiViolation<E>> {
        let n = self.n;
        let basis = |i: usize| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        };
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let (xi, xj, xl) = (basis(i), basis(j), basis(l));
                    let a = self.bracket(field, &self.bracket(field, &xi, &xj), &xl);
                    let b = self.bracket(field, &self.bracket(field, &xj, &xl), &xi);
                    let c = self.bracket(field, &self.bracket(field, &xl, &xi), &xj);
                    let defect: Vec<E> = (0..n)
                        .map(|k| field.add(&field.add(&a[k], &b[k]), &c[k]))
                        .collect();
                    if defect.iter().any(|d| !field.is_zero(d)) {
                        out.push(JacobiViolation {
                            triple: (i, j, l),
                            defect,
                        });
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation<E> {
    pub triple: (usize, usize, usize),
    pub defect: Vec<E>,
}

/// Check the Jacobi identity; antisymmetry holds by construction of the
/// storage. Validation failure is reported as data, not as an error.
pub fn validate_presentation(
    pres: &LieAlgebraPresentation,
) -> Result<(), Vec<JacobiViolation<BigRational>>> {
    let defects = pres.table().jacobi_defects(&Rationals);
    if defects.is_empty() {
        Ok(())
    } else {
        Err(defects)
    }
}

/// `x_i^[p]` for every basis element, as coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedStructure {
    pub p_map: Vec<Vec<Gf>>,
}

/// A presentation base-changed to `F_{p^e}`, optionally with its p-map.
///
/// Structure constants and p-map values always lie in the prime field; the
/// extension only supplies room for random evaluation points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularLieAlgebra {
    name: String,
    labels: Vec<String>,
    field: FiniteField,
    table: LieTable<Gf>,
    restricted: Option<RestrictedStructure>,
}

/// Reduce a rational presentation mod `p` into `F_{p^e}`; the defining
/// polynomial of the extension is drawn from `seed`.
pub fn base_change_mod_p(
    pres: &LieAlgebraPresentation,
    p: u64,
    e: u32,
    seed: u64,
) -> Result<ModularLieAlgebra, LieError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p).into());
    }
    let field = FiniteField::random(p, e, &mut rng::stream(seed, purpose::FIELD))?;
    base_change_into(pres, &field)
}

pub fn base_change_into(
    pres: &LieAlgebraPresentation,
    field: &FiniteField,
) -> Result<ModularLieAlgebra, LieError> {
    let p = field.p();
    let mut reduced = Vec::new();
    for (&t, c) in pres.constants() {
        reduced.push((t, reduce_rational(field, c)?));
    }
    let table = LieTable::build(field, pres.dim(), reduced);
    let defects = table.jacobi_defects(field);
    if !defects.is_empty() {
        return Err(LieError::Jacobi(defects.iter().map(|d| d.triple).collect()));
    }
    debug_assert!(p >= 2);
    Ok(ModularLieAlgebra {
        name: pres.name().into(),
        labels: pres.labels().to_vec(),
        field: field.clone(),
        table,
        restricted: None,
    })
}

/// Image of a rational in `F_p ⊆ F_{p^e}`.
pub fn reduce_rational(field: &FiniteField, c: &BigRational) -> Result<Gf, LieError> {
    let p = field.p();
    let pb = num_bigint::BigInt::from(p);
    let den = c.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(LieError::DenominatorDivisibleByP {
            constant: render_rational(c),
            p,
        });
    }
    let num = c.numer().mod_floor(&pb).to_u64().expect("reduced below p");
    let den = den.to_u64().expect("reduced below p");
    let inv = field.inv(&field.from_u64(den)).expect("nonzero");
    Ok(field.mul(&field.from_u64(num), &inv))
}

impl ModularLieAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn extension_degree(&self) -> u32 {
        self.field.degree()
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn table(&self) -> &LieTable<Gf> {
        &self.table
    }

    pub fn restricted(&self) -> Option<&RestrictedStructure> {
        self.restricted.as_ref()
    }

    /// Compute the canonical p-map and attach it.
    pub fn restrict(mut self) -> Result<Self, LieError> {
        let rs = compute_p_map(&self)?;
        self.restricted = Some(rs);
        Ok(self)
    }

    /// Attach a user-supplied p-map after checking `ad(x_i^[p]) = (ad x_i)^p`.
    pub fn with_p_map(mut self, p_map: Vec<Vec<Gf>>) -> Result<Self, LieError> {
        let n = self.dim();
        if p_map.len() != n || p_map.iter().any(|v| v.len() != n) {
            return Err(LieError::InvalidPMap(p_map.len().min(n)));
        }
        for (i, v) in p_map.iter().enumerate() {
            let lhs = self.table.ad_matrix(&self.field, v);
            let rhs = self.ad_power(&basis_vector(&self.field, n, i));
            if lhs != rhs {
                return Err(LieError::InvalidPMap(i));
            }
        }
        self.restricted = Some(RestrictedStructure { p_map });
        Ok(self)
    }

    /// `(ad v)^p`.
    fn ad_power(&self, v: &[Gf]) -> Matrix<Gf> {
        let ad = self.table.ad_matrix(&self.field, v);
        let mut acc = Matrix::identity(&self.field, self.dim());
        for _ in 0..self.p() {
            acc = acc.mul(&self.field, &ad);
        }
        acc
    }

    /// Canonical solution `y` of `ad y = (ad v)^p`, or `None` when
    /// `(ad v)^p` is not inner. Linear in the right-hand side, so
    /// semilinearity of the p-map can be tested through it.
    pub fn p_power_of(&self, v: &[Gf]) -> Option<Vec<Gf>> {
        let n = self.dim();
        let field = &self.field;
        let target = self.ad_power(v);
        let mut system = Matrix::zeros(field, n * n, n);
        for k in 0..n {
            let adk = self.table.ad_matrix(field, &basis_vector(field, n, k));
            for a in 0..n {
                for b in 0..n {
                    system[(a * n + b, k)] = adk[(a, b)];
                }
            }
        }
        let mut rhs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                rhs.push(target[(a, b)]);
            }
        }
        linalg::solve(field, &system, &rhs)
    }

    /// The same algebra over another field of the same characteristic.
    pub fn over_field(&self, field: &FiniteField) -> Result<Self, LieError> {
        if field.p() != self.p() {
            return Err(LieError::NotPrimeFieldData);
        }
        let move_elem = |a: &Gf| -> Result<Gf, LieError> {
            self.field
                .to_prime(*a)
                .map(|c| field.from_u64(c as u64))
                .ok_or(LieError::NotPrimeFieldData)
        };
        let mut consts = Vec::new();
        for (t, c) in self.table.constants() {
            consts.push((t, move_elem(c)?));
        }
        let table = LieTable::build(field, self.dim(), consts);
        let restricted = match &self.restricted {
            None => None,
            Some(rs) => Some(RestrictedStructure {
                p_map: rs
                    .p_map
                    .iter()
                    .map(|v| v.iter().map(&move_elem).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?,
            }),
        };
        Ok(ModularLieAlgebra {
            name: self.name.clone(),
            labels: self.labels.clone(),
            field: field.clone(),
            table,
            restricted,
        })
    }
}

pub fn basis_vector<F: Field>(field: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Solve `ad y = (ad x_i)^p` for every basis element. When the center of
/// the algebra is nonzero the solution is a coset; the representative with
/// zero coordinates at the non-pivot unknowns is returned.
pub fn compute_p_map(alg: &ModularLieAlgebra) -> Result<RestrictedStructure, LieError> {
    let n = alg.dim();
    let p_map = (0..n)
        .map(|i| {
            alg.p_power_of(&basis_vector(alg.field(), n, i))
                .ok_or(LieError::NotRestrictable(i))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RestrictedStructure { p_map })
}

/// Result of a Monte Carlo index computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexEstimate {
    pub index: usize,
    /// Largest rank of `(χ([x_i, x_j]))` observed.
    pub max_rank: usize,
    pub trials: usize,
    pub seed: u64,
    /// Degree of the sampling field over `F_p`; 0 when sampling over `Q`.
    pub extension_degree: u32,
    /// Defining polynomial of the sampling field (empty over `Q`).
    pub defining_polynomial: String,
}

/// `dim g - max rank B_χ` over the all-ones character, the coordinate
/// characters and `trials` random characters.
pub fn index_over<F: Field>(
    field: &F,
    table: &LieTable<F::Elem>,
    trials: usize,
    rng: &mut rng::WorkRng,
) -> (usize, usize) {
    let n = table.dim();
    let mut chars: Vec<Vec<F::Elem>> = Vec::new();
    chars.push(vec![field.one(); n]);
    for k in 0..n {
        chars.push(basis_vector(field, n, k));
    }
    for _ in 0..trials {
        chars.push((0..n).map(|_| field.random(rng)).collect());
    }
    let mut best = 0;
    for chi in &chars {
        let b = coadjoint_form(field, table, chi);
        best = best.max(linalg::rank(field, &b));
        if best == n - n % 2 {
            break;
        }
    }
    (n - best, best)
}

/// The alternating matrix `(χ([x_i, x_j]))_{ij}`.
pub fn coadjoint_form<F: Field>(field: &F, table: &LieTable<F::Elem>, chi: &[F::Elem]) -> Matrix<F::Elem> {
    let n = table.dim();
    let mut b = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let mut s = field.zero();
            for (k, c) in table.bracket_basis(i, j) {
                s = field.mul_add(&s, c, &chi[*k]);
            }
            b[(i, j)] = s;
        }
    }
    b
}

/// Index over the rationals with random integer characters.
pub fn index_rational(pres: &LieAlgebraPresentation, trials: usize, seed: u64) -> IndexEstimate {
    let mut r = rng::stream(seed, purpose::INDEX);
    let (index, max_rank) = index_over(&Rationals, &pres.table(), trials, &mut r);
    IndexEstimate {
        index,
        max_rank,
        trials,
        seed,
        extension_degree: 0,
        defining_polynomial: String::new(),
    }
}

/// Index of a modular algebra. Characters are drawn from `F_{p^e}` with the
/// smallest `e` such that `p^e >= 4 n^2 · n` (minors of the `n × n` form
/// have degree at most `n` in χ), or the algebra's own field if larger.
pub fn index_modular(alg: &ModularLieAlgebra, trials: usize, seed: u64) -> Result<IndexEstimate, LieError> {
    let n = alg.dim() as u64;
    let e = rng::extension_degree_for(alg.p(), (4 * n * n * n).max(2));
    let work = if alg.extension_degree() >= e {
        alg.clone()
    } else {
        let field = FiniteField::random(alg.p(), e, &mut rng::stream(seed, purpose::FIELD))?;
        alg.over_field(&field)?
    };
    let mut r = rng::stream(seed, purpose::INDEX);
    let (index, max_rank) = index_over(work.field(), work.table(), trials, &mut r);
    Ok(IndexEstimate {
        index,
        max_rank,
        trials,
        seed,
        extension_degree: work.extension_degree(),
        defining_polynomial: work.field().defining_polynomial(),
    })
}
