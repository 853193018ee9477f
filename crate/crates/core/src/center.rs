//! The p-center, degree-bounded centers of `U(g_k)`, ranks over the
//! p-center and the commutative Frobenius-subring rank.
//!
//! `U(g_k)` is a free module over the p-center `Z_p` with basis the reduced
//! monomials (all exponents `< p`). Every rank computed here is the rank of a
//! family of elements in that free module, taken over `Frac(Z_p)`: the
//! coordinates are polynomials in the generators `ξ_i = x_i^p - x_i^[p]`, and
//! the rank over the rational function field is detected by specializing
//! the `ξ_i` at random points and taking the largest observed rank.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::field::Field;
use crate::gf::{FiniteField, Gf};
use crate::lie::{LieError, ModularLieAlgebra};
use crate::linalg::{self, EchelonBasis, Matrix};
use crate::pbw::{EnvelopingElement, Monomial, Pbw, PbwError, SymmetricPolynomial};
use crate::rng::{self, purpose, WorkRng};

/// Number of random specialization points per rank computation.
pub const SPECIALIZATION_POINTS: usize = 3;

/// Default cap on the number of PBW monomials in a bounded center solve.
pub const DEFAULT_MONOMIAL_CAP: usize = 20_000;

/// Largest free-module rank `p^n` handled by the rank routines.
pub const MAX_FREE_RANK: u64 = 1 << 16;

/// Rounds of product closure in [`rank_over_p_center`].
pub const CLOSURE_ROUNDS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CenterError {
    #[error("algebra has no restricted structure")]
    NotRestricted,
    #[error("xi_{i} does not commute with basis element {j}; the p-map is invalid")]
    CentralityFailure { i: usize, j: usize },
    #[error("degree bound must be at least 1")]
    InvalidDegreeBound,
    #[error("{count} PBW monomials exceed the configured cap {cap}")]
    DegreeBoundTooLargeForMemory { count: usize, cap: usize },
    #[error("free module rank {p}^{n} is too large")]
    FreeRankTooLarge { p: u64, n: usize },
    #[error("numerator and denominator are not semi-invariants of equal weight")]
    WeightMismatch,
    #[error("rank still growing at stabilization bound {0}")]
    StabilizationNotReached(usize),
    #[error("rank {r} over the p-center exceeds p^ind = {bound}")]
    BoundViolation { r: u128, bound: u128 },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

/// `ξ_i = x_i^p - x_i^[p]` for every basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PCenterGenerators {
    pub xi: Vec<EnvelopingElement<Gf>>,
}

/// A restricted algebra together with its enveloping-algebra engine and
/// p-center generators; the common context of all center computations.
#[derive(Clone, Debug)]
pub struct RestrictedEnveloping {
    alg: ModularLieAlgebra,
    pbw: Pbw<FiniteField>,
    p_map: Vec<EnvelopingElement<Gf>>,
    xi: PCenterGenerators,
}

impl RestrictedEnveloping {
    pub fn new(alg: &ModularLieAlgebra) -> Result<Self, CenterError> {
        let rs = alg.restricted().ok_or(CenterError::NotRestricted)?;
        let field = alg.field().clone();
        let pbw = Pbw::new(field.clone(), alg.table().clone());
        let p_map: Vec<_> = rs.p_map.iter().map(|v| pbw.linear(v)).collect();
        let xi = p_center_generators_with(&pbw, &p_map, alg.p())?;
        Ok(RestrictedEnveloping {
            alg: alg.clone(),
            pbw,
            p_map,
            xi,
        })
    }

    pub fn algebra(&self) -> &ModularLieAlgebra {
        &self.alg
    }

    pub fn pbw(&self) -> &Pbw<FiniteField> {
        &self.pbw
    }

    pub fn field(&self) -> &FiniteField {
        self.pbw.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn p(&self) -> u64 {
        self.alg.p()
    }

    pub fn xi(&self) -> &PCenterGenerators {
        &self.xi
    }

    /// `x_i^[p]` as a degree-one element.
    pub fn p_map_element(&self, i: usize) -> &EnvelopingElement<Gf> {
        &self.p_map[i]
    }

    /// `p^n`, the rank of `U(g_k)` over `Z_p`.
    pub fn free_rank(&self) -> Result<usize, CenterError> {
        free_rank(self.p(), self.dim())
    }

    /// Render with the algebra's basis labels.
    pub fn render(&self, a: &EnvelopingElement<Gf>) -> alloc::string::String {
        a.render(self.field(), self.alg.labels())
    }
}

fn free_rank(p: u64, n: usize) -> Result<usize, CenterError> {
    match p.checked_pow(n as u32) {
        Some(r) if r <= MAX_FREE_RANK => Ok(r as usize),
        _ => Err(CenterError::FreeRankTooLarge { p, n }),
    }
}

/// `ξ_i = x_i^p - x_i^[p]`, each checked to be central.
pub fn p_center_generators(alg: &ModularLieAlgebra) -> Result<PCenterGenerators, CenterError> {
    Ok(RestrictedEnveloping::new(alg)?.xi)
}

fn p_center_generators_with(
    pbw: &Pbw<FiniteField>,
    p_map: &[EnvelopingElement<Gf>],
    p: u64,
) -> Result<PCenterGenerators, CenterError> {
    let field = pbw.field();
    let n = pbw.dim();
    let mut xi = Vec::with_capacity(n);
    for (i, pm) in p_map.iter().enumerate() {
        let mut exps = vec![0u32; n];
        exps[i] = p as u32;
        let x = pbw.monomial(&exps).sub(field, pm);
        for j in 0..n {
            if !pbw.ad_generator(j, &x).is_zero() {
                return Err(CenterError::CentralityFailure { i, j });
            }
        }
        xi.push(x);
    }
    Ok(PCenterGenerators { xi })
}

/// Polynomial in the formal variables `ξ_1, …, ξ_n`, keyed by exponent vector.
pub type XiPolynomial = BTreeMap<Monomial, Gf>;

/// Coordinates of an element of `U(g_k)` in the free `Z_p`-module with
/// basis the reduced monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZpCoordinates {
    n: usize,
    p: u64,
    coords: BTreeMap<Monomial, XiPolynomial>,
}

impl ZpCoordinates {
    /// Reduced monomial ↦ nonzero polynomial in `ξ`.
    pub fn coordinates(&self) -> &BTreeMap<Monomial, XiPolynomial> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Whether the element lies in `Z_p`, i.e. only the coordinate of `1`
    /// is nonzero.
    pub fn in_p_center(&self) -> bool {
        self.coords.keys().all(Monomial::is_one)
    }

    /// Largest total `ξ`-degree among the coordinates.
    pub fn xi_degree(&self) -> u32 {
        self.coords
            .values()
            .flat_map(|poly| poly.keys().map(Monomial::degree))
            .max()
            .unwrap_or(0)
    }

    /// Dense vector of length `p^n` after substituting `ξ = point`.
    pub fn evaluate(&self, field: &FiniteField, point: &[Gf]) -> Vec<Gf> {
        let size = (self.p as usize).pow(self.n as u32);
        let mut out = vec![field.zero(); size];
        for (m, poly) in &self.coords {
            out[reduced_index(m, self.p)] = evaluate_xi(field, poly, point);
        }
        out
    }

    /// Substitute `ξ_i ↦ x_i^p - x_i^[p]` and multiply out.
    pub fn reassemble(&self, ctx: &RestrictedEnveloping) -> EnvelopingElement<Gf> {
        let pbw = ctx.pbw();
        let field = pbw.field();
        let mut powers: BTreeMap<Monomial, EnvelopingElement<Gf>> = BTreeMap::new();
        let mut out = pbw.zero();
        for (m, poly) in &self.coords {
            let mono = pbw.monomial(m.exponents());
            for (b, c) in poly {
                let xp = powers
                    .entry(b.clone())
                    .or_insert_with(|| {
                        b.exponents()
                            .iter()
                            .enumerate()
                            .fold(pbw.one(), |acc, (i, &k)| pbw.mul(&acc, &pbw.pow(&ctx.xi.xi[i], k)))
                    })
                    .clone();
                out = out.add(field, &pbw.mul(&xp, &mono).scale(field, c));
            }
        }
        out
    }
}

fn evaluate_xi(field: &FiniteField, poly: &XiPolynomial, point: &[Gf]) -> Gf {
    let mut s = field.zero();
    for (b, c) in poly {
        let mut t = *c;
        for (i, &k) in b.exponents().iter().enumerate() {
            if k > 0 {
                t = field.mul(&t, &field.pow(&point[i], k as u64));
            }
        }
        s = field.add(&s, &t);
    }
    s
}

/// Mixed-radix index `Σ a_i p^i` of a reduced monomial.
pub fn reduced_index(m: &Monomial, p: u64) -> usize {
    m.exponents()
        .iter()
        .rev()
        .fold(0usize, |acc, &a| acc * p as usize + a as usize)
}

/// Inverse of [`reduced_index`].
pub fn reduced_monomial(mut idx: usize, p: u64, n: usize) -> Monomial {
    let exps = (0..n)
        .map(|_| {
            let a = idx % p as usize;
            idx /= p as usize;
            a as u32
        })
        .collect();
    Monomial::new(exps)
}

fn add_scaled(field: &FiniteField, into: &mut XiPolynomial, from: &XiPolynomial, scale: &Gf, shift: Option<usize>) {
    for (b, c) in from {
        let key = match shift {
            None => b.clone(),
            Some(i) => {
                let mut e = b.exponents().to_vec();
                e[i] += 1;
                Monomial::new(e)
            }
        };
        let v = field.mul(c, scale);
        let slot = into.entry(key).or_insert_with(|| field.zero());
        *slot = field.add(slot, &v);
    }
    into.retain(|_, c| !field.is_zero(c));
}

/// Rewrite `a` in the basis of reduced monomials over `Z_p`, using
/// `x_i^p = ξ_i + x_i^[p]` on the largest unreduced monomial until none is
/// left. Each rewrite strictly lowers the PBW degree of the non-`ξ` part.
pub fn zp_coordinates(ctx: &RestrictedEnveloping, a: &EnvelopingElement<Gf>) -> ZpCoordinates {
    let pbw = ctx.pbw();
    let field = pbw.field();
    let n = ctx.dim();
    let p = ctx.p() as u32;
    let one = Monomial::one(n);
    let mut work: BTreeMap<Monomial, XiPolynomial> = BTreeMap::new();
    for (m, c) in a.iter() {
        let mut poly = XiPolynomial::new();
        poly.insert(one.clone(), *c);
        work.insert(m.clone(), poly);
    }
    let mut done: BTreeMap<Monomial, XiPolynomial> = BTreeMap::new();
    while let Some((m, poly)) = work.pop_last() {
        if poly.is_empty() {
            continue;
        }
        let Some(i) = m.exponents().iter().position(|&e| e >= p) else {
            done.insert(m, poly);
            continue;
        };
        let exps = m.exponents();
        let mut lowered = exps.to_vec();
        lowered[i] -= p;
        let lowered = Monomial::new(lowered);
        let slot = work.entry(lowered).or_default();
        add_scaled(field, slot, &poly, &field.one(), Some(i));

        let pm = ctx.p_map_element(i);
        if pm.is_zero() {
            continue;
        }
        let mut prefix = vec![0u32; n];
        prefix[..i].copy_from_slice(&exps[..i]);
        let mut suffix = exps.to_vec();
        for s in suffix.iter_mut().take(i) {
            *s = 0;
        }
        suffix[i] -= p;
        let prod = pbw.mul(&pbw.mul(&pbw.monomial(&prefix), pm), &pbw.monomial(&suffix));
        for (r, c) in prod.iter() {
            let slot = work.entry(r.clone()).or_default();
            add_scaled(field, slot, &poly, c, None);
        }
    }
    done.retain(|_, poly| !poly.is_empty());
    ZpCoordinates {
        n,
        p: p as u64,
        coords: done,
    }
}

/// Whether `a` lies in the subalgebra generated by the `ξ_i`.
pub fn in_p_center(ctx: &RestrictedEnveloping, a: &EnvelopingElement<Gf>) -> bool {
    zp_coordinates(ctx, a).in_p_center()
}

/// A vector-space basis of the central elements of filtration degree `<= D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterBasis {
    pub degree_bound: u32,
    /// Reduced echelon basis with respect to the PBW monomials, listed by
    /// increasing leading monomial.
    pub elements: Vec<EnvelopingElement<Gf>>,
    /// True iff the rank over `Z_p` did not change from `D - 1` to `D`.
    pub stabilized: bool,
}

/// All exponent vectors of total degree `<= d`, in increasing order.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == n {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            rec(n, i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out.sort();
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    let mut r: u64 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Central elements of degree `<= D`, as the common kernel of the maps
/// `a ↦ [x_i, a]` on the span of PBW monomials of degree `<= D`.
pub fn central_elements(
    ctx: &RestrictedEnveloping,
    degree_bound: u32,
    monomial_cap: usize,
) -> Result<Vec<EnvelopingElement<Gf>>, CenterError> {
    let n = ctx.dim();
    let count = binomial(n as u64 + degree_bound as u64, n as u64);
    if count > monomial_cap as u64 {
        return Err(CenterError::DegreeBoundTooLargeForMemory {
            count: count.min(usize::MAX as u64) as usize,
            cap: monomial_cap,
        });
    }
    let pbw = ctx.pbw();
    let field = ctx.field();
    let monos = monomials_up_to(n, degree_bound);
    let cols = monos.len();
    // Column c holds the monomial monos[cols - 1 - c], so that the pivots of
    // the canonical basis below are the leading (largest) monomials.
    let col_of: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(k, m)| (m, cols - 1 - k)).collect();
    let mut rows: Vec<Vec<Gf>> = Vec::new();
    for i in 0..n {
        let mut block: BTreeMap<Monomial, Vec<Gf>> = BTreeMap::new();
        for m in &monos {
            let img = pbw.ad_generator(i, &pbw.monomial(m.exponents()));
            for (r, c) in img.iter() {
                let row = block.entry(r.clone()).or_insert_with(|| vec![field.zero(); cols]);
                row[col_of[m]] = *c;
            }
        }
        rows.extend(block.into_values());
    }
    let matrix = if rows.is_empty() {
        Matrix::zeros(field, 0, cols)
    } else {
        Matrix::from_rows(rows, cols)
    };
    let kernel = linalg::nullspace(field, &matrix);
    let mut basis = EchelonBasis::new(cols);
    for v in kernel {
        basis.insert(field, v);
    }
    let mut elements: Vec<EnvelopingElement<Gf>> = basis
        .canonical_rows()
        .into_iter()
        .map(|row| {
            EnvelopingElement::from_terms(
                field,
                n,
                row.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !field.is_zero(c))
                    .map(|(col, c)| (monos[cols - 1 - col].clone(), c)),
            )
        })
        .collect();
    elements.sort_by(|a, b| a.leading().map(|t| t.0).cmp(&b.leading().map(|t| t.0)));
    for a in &elements {
        debug_assert!(pbw.is_central(a));
    }
    Ok(elements)
}

/// [`central_elements`] at bound `D`, with the stabilization flag obtained by
/// comparing [`rank_over_p_center`] at `D` and `D - 1`.
pub fn center_basis_bounded(
    ctx: &RestrictedEnveloping,
    degree_bound: u32,
    monomial_cap: usize,
    seed: u64,
) -> Result<CenterBasis, CenterError> {
    if degree_bound == 0 {
        return Err(CenterError::InvalidDegreeBound);
    }
    let elements = central_elements(ctx, degree_bound, monomial_cap)?;
    let previous = central_elements(ctx, degree_bound - 1, monomial_cap)?;
    let r_now = rank_of_elements(ctx, &elements, seed)?;
    let r_before = rank_of_elements(ctx, &previous, seed)?;
    for a in &elements {
        if let Some(j) = (0..ctx.dim()).find(|&j| !ctx.pbw().ad_generator(j, a).is_zero()) {
            return Err(CenterError::CentralityFailure { i: usize::MAX, j });
        }
    }
    Ok(CenterBasis {
        degree_bound,
        elements,
        stabilized: r_now == r_before,
    })
}

/// Random specialization points for `ξ`, shared by one rank computation.
fn specialization_points(ctx: &RestrictedEnveloping, seed: u64, stream: u64) -> Vec<Vec<Gf>> {
    let mut r: WorkRng = rng::stream(rng::derive(seed, stream), purpose::SPECIALIZE);
    (0..SPECIALIZATION_POINTS)
        .map(|_| (0..ctx.dim()).map(|_| ctx.field().random(&mut r)).collect())
        .collect()
}

/// Tracks the rank of a growing family of free-module vectors at several
/// specialization points; the family rank is the maximum over points.
struct SpecializedRank {
    field: FiniteField,
    points: Vec<Vec<Gf>>,
    bases: Vec<EchelonBasis<Gf>>,
}

impl SpecializedRank {
    fn new(field: &FiniteField, points: Vec<Vec<Gf>>, dim: usize) -> Self {
        let bases = points.iter().map(|_| EchelonBasis::new(dim)).collect();
        SpecializedRank {
            field: field.clone(),
            points,
            bases,
        }
    }

    /// Insert at every point; true if the rank grew at any of them.
    fn insert(&mut self, coords: &ZpCoordinates) -> bool {
        let mut grew = false;
        for (pt, basis) in self.points.iter().zip(self.bases.iter_mut()) {
            let v = coords.evaluate(&self.field, pt);
            grew |= basis.insert(&self.field, v);
        }
        grew
    }

    fn rank(&self) -> usize {
        self.bases.iter().map(EchelonBasis::rank).max().unwrap_or(0)
    }
}

fn rank_of_elements(
    ctx: &RestrictedEnveloping,
    elements: &[EnvelopingElement<Gf>],
    seed: u64,
) -> Result<usize, CenterError> {
    let size = ctx.free_rank()?;
    let points = specialization_points(ctx, seed, 0);
    let mut tracker = SpecializedRank::new(ctx.field(), points, size);
    let coords: Vec<ZpCoordinates> = elements.iter().map(|a| zp_coordinates(ctx, a)).collect();
    let mut kept: Vec<EnvelopingElement<Gf>> = Vec::new();
    for (a, c) in elements.iter().zip(&coords) {
        if tracker.insert(c) {
            kept.push(a.clone());
        }
    }
    // Multiplying by elements of Z_p never changes the span over Frac(Z_p).
    let multipliers: Vec<&EnvelopingElement<Gf>> = elements
        .iter()
        .zip(&coords)
        .filter(|(_, c)| !c.in_p_center())
        .map(|(a, _)| a)
        .collect();
    let pbw = ctx.pbw();
    let mut frontier = kept.clone();
    for _ in 0..CLOSURE_ROUNDS {
        if tracker.rank() == size || frontier.is_empty() {
            break;
        }
        let mut fresh = Vec::new();
        for a in &frontier {
            for b in &multipliers {
                let prod = pbw.mul(a, b);
                if tracker.insert(&zp_coordinates(ctx, &prod)) {
                    fresh.push(prod);
                }
                if tracker.rank() == size {
                    break;
                }
            }
        }
        frontier = fresh;
    }
    Ok(tracker.rank())
}

/// Rank over `Z_p` of the subalgebra generated by a center basis:
/// products of at most two elements, iterated for up to three rounds while
/// the rank grows, each rank taken as the maximum over three random
/// specializations of `ξ`.
pub fn rank_over_p_center(ctx: &RestrictedEnveloping, cb: &CenterBasis, seed: u64) -> Result<usize, CenterError> {
    rank_of_elements(ctx, &cb.elements, seed)
}

/// Degree over `Frac(Z_p)` of the fraction `φ/ψ` of two semi-invariants of
/// equal weight: the least `d <= J` for which `φ^j ψ^{pJ' - j}`,
/// `0 <= j <= d`, are dependent over `Frac(Z_p)`, or `J + 1` if none is.
pub fn fraction_field_degree(
    ctx: &RestrictedEnveloping,
    phi: &EnvelopingElement<Gf>,
    psi: &EnvelopingElement<Gf>,
    power_bound: u32,
    seed: u64,
) -> Result<u32, CenterError> {
    let pbw = ctx.pbw();
    let p = ctx.p() as u32;
    if psi.is_zero() || phi.is_zero() {
        return Err(CenterError::WeightMismatch);
    }
    let wphi = pbw.semi_invariant_weight(phi).ok_or(CenterError::WeightMismatch)?;
    let wpsi = pbw.semi_invariant_weight(psi).ok_or(CenterError::WeightMismatch)?;
    if wphi != wpsi {
        return Err(CenterError::WeightMismatch);
    }
    let psi_p1 = pbw.pow(psi, p - 1);
    if !pbw.is_central(&pbw.mul(phi, &psi_p1)) || !pbw.is_central(&pbw.mul(&psi_p1, psi)) {
        return Err(CenterError::WeightMismatch);
    }
    let blocks = power_bound.div_ceil(p).max(1);
    let top = p * blocks;
    let size = ctx.free_rank()?;
    let points = specialization_points(ctx, seed, 1);
    let mut tracker = SpecializedRank::new(ctx.field(), points, size);
    for d in 0..=power_bound {
        let v = pbw.mul(&pbw.pow(phi, d), &pbw.pow(psi, top - d));
        if !tracker.insert(&zp_coordinates(ctx, &v)) {
            return Ok(d);
        }
    }
    Ok(power_bound + 1)
}

/// Rank of the polynomial ring `A = F[x_1..x_n]` over `B·A^p`, where `B` is
/// generated by `generators`: `p^n / s` with `s` the rank over `Frac(A^p)`
/// of the `A^p`-algebra generated by the `b`'s, measured in the free basis
/// `{x^a : a_i < p}`. Products `b^k` are added by increasing `|k|` and the
/// rank is stable once a whole level adds nothing.
pub fn rank_over_frobenius_subring(
    field: &FiniteField,
    num_vars: usize,
    generators: &[SymmetricPolynomial<Gf>],
    stabilization_bound: usize,
    seed: u64,
) -> Result<u64, CenterError> {
    let p = field.p();
    let size = free_rank(p, num_vars)?;
    let mut r: WorkRng = rng::stream(seed, purpose::LEMMA);
    let points: Vec<Vec<Gf>> = (0..SPECIALIZATION_POINTS)
        .map(|_| (0..num_vars).map(|_| field.random(&mut r)).collect())
        .collect();
    let mut bases: Vec<EchelonBasis<Gf>> = points.iter().map(|_| EchelonBasis::new(size)).collect();
    let evaluate = |f: &SymmetricPolynomial<Gf>, pt: &[Gf]| -> Vec<Gf> {
        let mut v = vec![field.zero(); size];
        for (m, c) in f.iter() {
            let reduced: Vec<u32> = m.exponents().iter().map(|&a| a % p as u32).collect();
            let mut t = *c;
            for (i, &a) in m.exponents().iter().enumerate() {
                t = field.mul(&t, &field.pow(&pt[i], (a / p as u32) as u64));
            }
            let idx = reduced_index(&Monomial::new(reduced), p);
            v[idx] = field.add(&v[idx], &t);
        }
        v
    };
    let insert = |f: &SymmetricPolynomial<Gf>, bases: &mut Vec<EchelonBasis<Gf>>| -> bool {
        let mut grew = false;
        for (pt, b) in points.iter().zip(bases.iter_mut()) {
            grew |= b.insert(field, evaluate(f, pt));
        }
        grew
    };
    let k = generators.len();
    let one = SymmetricPolynomial::constant(field, num_vars, field.one());
    insert(&one, &mut bases);
    // Products of level t, keyed by exponent vector over the generators.
    let mut level: BTreeMap<Vec<u32>, SymmetricPolynomial<Gf>> = BTreeMap::new();
    level.insert(vec![0; k], one);
    let max_level = k * (p as usize - 1);
    for t in 1..=max_level {
        if t > stabilization_bound {
            return Err(CenterError::StabilizationNotReached(stabilization_bound));
        }
        let mut next: BTreeMap<Vec<u32>, SymmetricPolynomial<Gf>> = BTreeMap::new();
        for (e, f) in &level {
            for (i, g) in generators.iter().enumerate() {
                if e[i] + 1 >= p as u32 {
                    continue;
                }
                let mut e2 = e.clone();
                e2[i] += 1;
                if !next.contains_key(&e2) {
                    next.insert(e2, f.mul(field, g));
                }
            }
        }
        let mut grew = false;
        for f in next.values() {
            grew |= insert(f, &mut bases);
        }
        if !grew {
            break;
        }
        level = next;
    }
    let s = bases.iter().map(EchelonBasis::rank).max().unwrap_or(1) as u64;
    Ok(size as u64 / s)
}

/// Draw `count` specialization points from `field`; exposed for tests that
/// need the same policy.
pub fn random_points<R: Rng + ?Sized>(field: &FiniteField, n: usize, count: usize, rng: &mut R) -> Vec<Vec<Gf>> {
    (0..count).map(|_| (0..n).map(|_| field.random(rng)).collect()).collect()
}
