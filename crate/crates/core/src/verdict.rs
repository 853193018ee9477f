//! Assembly of the per-prime report: index, rank of the center over the
//! p-center, the two bounds on the largest simple dimension and the verdict.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::center::{center_basis_bounded, rank_over_p_center, CenterError, RestrictedEnveloping, DEFAULT_MONOMIAL_CAP};
use crate::gf::FiniteField;
use crate::lie::{base_change_into, index_modular, LieAlgebraPresentation, LieError, ModularLieAlgebra};
use crate::redenv::{max_irreducible_dim, OracleEstimate, RedenvError};
use crate::rng::{self, purpose};

/// Number of random characters in the index computation.
pub const INDEX_TRIALS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VerdictError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Center(#[from] CenterError),
    #[error(transparent)]
    Oracle(#[from] RedenvError),
}

impl From<crate::gf::FieldError> for VerdictError {
    fn from(e: crate::gf::FieldError) -> Self {
        VerdictError::Lie(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// `sqrt(p^n / r)`: an integer when `p^n / r` is an even power of `p`,
/// otherwise kept as the formal square root of the rational `p^n / r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MUpper {
    Exact(u128),
    Formal { numerator: u128, denominator: u128 },
}

impl MUpper {
    pub fn new(p: u64, n: usize, r: u128) -> Self {
        let pn = (p as u128).pow(n as u32);
        let g = num_integer::gcd(pn, r);
        let (num, den) = (pn / g, r / g);
        if den == 1 {
            let mut k = 0u32;
            let mut t = num;
            while t % p as u128 == 0 {
                t /= p as u128;
                k += 1;
            }
            if t == 1 && k % 2 == 0 {
                return MUpper::Exact((p as u128).pow(k / 2));
            }
        }
        MUpper::Formal {
            numerator: num,
            denominator: den,
        }
    }

    pub fn render(&self) -> String {
        match self {
            MUpper::Exact(m) => format!("{m}"),
            MUpper::Formal { numerator, denominator: 1 } => format!("sqrt({numerator})"),
            MUpper::Formal { numerator, denominator } => format!("sqrt({numerator}/{denominator})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KW1Report {
    pub algebra_name: String,
    pub p: u64,
    pub e: u32,
    pub dim: usize,
    pub ind: usize,
    pub degree_bound: u32,
    pub rank_z_over_zp: u128,
    pub m_upper: MUpper,
    pub m_lower: u128,
    pub oracle_estimate: Option<OracleEstimate>,
    pub verdict: Verdict,
    pub seed: u64,
    pub defining_polynomial: String,
    pub stabilized: bool,
    pub center_dimension: usize,
    pub notes: Vec<String>,
}

/// `2p - 2` for `n <= 3`, `p` otherwise.
pub fn default_degree_bound(n: usize, p: u64) -> u32 {
    if n <= 3 {
        (2 * p - 2) as u32
    } else {
        p as u32
    }
}

/// Smallest `e` with `p^e >= 4 n^2 D`: the specialization field for ranks
/// whose minors have degree at most `n^2 D` in `ξ`, with failure
/// probability per point at most 1/4.
pub fn working_extension_degree(p: u64, n: usize, degree_bound: u32) -> u32 {
    let n = n as u64;
    rng::extension_degree_for(p, (4 * n * n * degree_bound as u64).max(2))
}

/// Base change to `F_{p^e}` (automatic `e` when `None`) and the canonical
/// restricted structure.
pub fn prepare(
    pres: &LieAlgebraPresentation,
    p: u64,
    e: Option<u32>,
    degree_bound: u32,
    seed: u64,
) -> Result<ModularLieAlgebra, VerdictError> {
    let e = e.unwrap_or_else(|| working_extension_degree(p, pres.dim(), degree_bound));
    let field = FiniteField::random(p, e, &mut rng::stream(seed, purpose::FIELD))?;
    Ok(base_change_into(pres, &field)?.restrict()?)
}

/// The full per-prime pipeline. `oracle_samples` attaches the
/// reduced-enveloping-algebra estimate when given.
pub fn kw1_verdict(
    alg: &ModularLieAlgebra,
    degree_bound: u32,
    seed: u64,
    oracle_samples: Option<usize>,
) -> Result<KW1Report, VerdictError> {
    kw1_verdict_in(&RestrictedEnveloping::new(alg)?, degree_bound, seed, oracle_samples)
}

/// [`kw1_verdict`] inside an existing context, reusing its product memo.
pub fn kw1_verdict_in(
    ctx: &RestrictedEnveloping,
    degree_bound: u32,
    seed: u64,
    oracle_samples: Option<usize>,
) -> Result<KW1Report, VerdictError> {
    let alg = ctx.algebra();
    let p = alg.p();
    let n = alg.dim();
    let ind = index_modular(alg, INDEX_TRIALS, seed)?.index;
    let cb = center_basis_bounded(ctx, degree_bound, DEFAULT_MONOMIAL_CAP, seed)?;
    let r = rank_over_p_center(ctx, &cb, seed)? as u128;
    let p_ind = (p as u128).pow(ind as u32);
    if r > p_ind {
        return Err(CenterError::BoundViolation { r, bound: p_ind }.into());
    }
    let m_lower = (p as u128).pow(((n - ind) / 2) as u32);
    let verdict = if r == p_ind {
        Verdict::Verified
    } else {
        Verdict::Inconclusive
    };
    let mut notes = alloc::vec![
        String::from("rank over the center read as M^2 * r = p^dim, r = [Frac Z : Frac Z_p]"),
        String::from("empirical certificate for this table and prime; algebraicity of the Lie algebra is not checked"),
    ];
    if verdict == Verdict::Inconclusive {
        notes.push(format!(
            "center not yet seen in degree <= {degree_bound}; raise the degree bound"
        ));
    }
    if !cb.stabilized {
        notes.push(String::from("rank still changed between D-1 and D"));
    }
    let oracle_estimate = match oracle_samples {
        Some(k) => Some(max_irreducible_dim(alg, k, seed)?),
        None => None,
    };
    Ok(KW1Report {
        algebra_name: alg.name().into(),
        p,
        e: alg.extension_degree(),
        dim: n,
        ind,
        degree_bound,
        rank_z_over_zp: r,
        m_upper: MUpper::new(p, n, r),
        m_lower,
        oracle_estimate,
        verdict,
        seed,
        defining_polynomial: alg.field().defining_polynomial(),
        stabilized: cb.stabilized,
        center_dimension: cb.elements.len(),
        notes,
    })
}
