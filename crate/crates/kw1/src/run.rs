//! Command orchestration shared by the binary and the tests: load an
//! algebra, run one operation per prime, and classify failures into exit
//! codes.

use std::path::{Path, PathBuf};

use kw1_core::builtin;
use kw1_core::center::{center_basis_bounded, rank_over_frobenius_subring, rank_over_p_center, CenterError, RestrictedEnveloping, DEFAULT_MONOMIAL_CAP};
use kw1_core::gf::{is_prime, FiniteField};
use kw1_core::lie::{base_change_into, index_modular, index_rational, reduce_rational, validate_presentation, LieAlgebraPresentation, LieError, ModularLieAlgebra};
use kw1_core::redenv::{max_irreducible_dim, RedenvError};
use kw1_core::rng::{self, purpose};
use kw1_core::verdict::{default_degree_bound, kw1_verdict_in, working_extension_degree, KW1Report, Verdict, VerdictError, INDEX_TRIALS};
use serde_json::{json, Value};

use crate::cache::MemoCache;
use crate::input::{parse_input, ParsedInput, PMapOverride};
use crate::output::oracle_json;
use crate::polyparse::parse_polynomial;

/// 1: bad input or configuration, 3: internal failure.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 3,
        }
    }
}

fn lie_error(e: LieError) -> CliError {
    match e {
        LieError::DenominatorDivisibleByP { .. }
        | LieError::NotRestrictable(_)
        | LieError::InvalidPMap(_)
        | LieError::Jacobi(_)
        | LieError::Field(_) => CliError::Input(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

fn center_error(e: CenterError) -> CliError {
    match e {
        CenterError::Lie(e) => lie_error(e),
        CenterError::InvalidDegreeBound
        | CenterError::DegreeBoundTooLargeForMemory { .. }
        | CenterError::FreeRankTooLarge { .. }
        | CenterError::StabilizationNotReached(_) => CliError::Input(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

fn redenv_error(e: RedenvError) -> CliError {
    match e {
        RedenvError::Lie(e) => lie_error(e),
        RedenvError::Center(e) => center_error(e),
        RedenvError::DimensionCap { .. } => CliError::Input(e.to_string()),
        other => CliError::Internal(other.to_string()),
    }
}

impl From<VerdictError> for CliError {
    fn from(e: VerdictError) -> Self {
        match e {
            VerdictError::Lie(e) => lie_error(e),
            VerdictError::Center(e) => center_error(e),
            VerdictError::Oracle(e) => redenv_error(e),
        }
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        lie_error(e)
    }
}

impl From<CenterError> for CliError {
    fn from(e: CenterError) -> Self {
        center_error(e)
    }
}

impl From<RedenvError> for CliError {
    fn from(e: RedenvError) -> Self {
        redenv_error(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Example(String),
    Input(PathBuf),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub primes: Vec<u64>,
    pub ext: Option<u32>,
    pub degree_bound: Option<u32>,
    pub samples: usize,
    pub seed: u64,
    pub with_oracle: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            primes: vec![3, 5],
            ext: None,
            degree_bound: None,
            samples: 10,
            seed: 0,
            with_oracle: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.primes.is_empty() {
            return Err(CliError::Input("no primes given".into()));
        }
        if let Some(&p) = self.primes.iter().find(|&&p| !is_prime(p)) {
            return Err(CliError::Input(format!("{p} is not prime")));
        }
        if self.degree_bound == Some(0) {
            return Err(CliError::Input("the degree bound must be at least 1".into()));
        }
        if self.ext == Some(0) {
            return Err(CliError::Input("the extension degree must be at least 1".into()));
        }
        if self.samples == 0 {
            return Err(CliError::Input("at least one oracle sample is needed".into()));
        }
        Ok(())
    }

    pub fn degree_bound_for(&self, n: usize, p: u64) -> u32 {
        self.degree_bound.unwrap_or_else(|| default_degree_bound(n, p))
    }
}

pub fn load_source(src: &Source) -> Result<ParsedInput, CliError> {
    match src {
        Source::Example(name) => builtin::lookup(name)
            .map(|presentation| ParsedInput {
                presentation,
                pmap_override: None,
            })
            .ok_or_else(|| {
                CliError::Input(format!("unknown example {name:?}; known: {}", builtin::NAMES.join(", ")))
            }),
        Source::Input(path) => load_file(path),
    }
}

fn load_file(path: &Path) -> Result<ParsedInput, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Base change to `F_{p^e}` and attach the p-map: canonical, with the rows
/// listed in the override replaced.
pub fn modular(
    pres: &LieAlgebraPresentation,
    pmap_override: Option<&PMapOverride>,
    p: u64,
    e: u32,
    seed: u64,
) -> Result<ModularLieAlgebra, CliError> {
    let field = FiniteField::random(p, e, &mut rng::stream(seed, purpose::FIELD)).map_err(LieError::from)?;
    let alg = base_change_into(pres, &field)?;
    let Some(over) = pmap_override else {
        return Ok(alg.restrict()?);
    };
    let n = alg.dim();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let row = match over.get(&i) {
            Some(v) => v.iter().map(|c| reduce_rational(&field, c)).collect::<Result<Vec<_>, _>>()?,
            None => alg
                .p_power_of(&kw1_core::lie::basis_vector(&field, n, i))
                .ok_or(LieError::NotRestrictable(i))?,
        };
        rows.push(row);
    }
    Ok(alg.with_p_map(rows)?)
}

fn extension_for(cfg: &RunConfig, n: usize, p: u64, d: u32) -> u32 {
    cfg.ext.unwrap_or_else(|| working_extension_degree(p, n, d))
}

fn context(parsed: &ParsedInput, cfg: &RunConfig, p: u64, d: u32) -> Result<RestrictedEnveloping, CliError> {
    let pres = &parsed.presentation;
    let e = extension_for(cfg, pres.dim(), p, d);
    let alg = modular(pres, parsed.pmap_override.as_ref(), p, e, cfg.seed)?;
    Ok(RestrictedEnveloping::new(&alg)?)
}

/// The full pipeline for every prime. Exit status 2 when some report is
/// inconclusive.
pub fn run_check(parsed: &ParsedInput, cfg: &RunConfig) -> Result<(Vec<KW1Report>, i32), CliError> {
    cfg.validate()?;
    let cache = MemoCache::from_env();
    let n = parsed.presentation.dim();
    let mut reports = Vec::new();
    for &p in &cfg.primes {
        let d = cfg.degree_bound_for(n, p);
        let ctx = context(parsed, cfg, p, d)?;
        if let Some(c) = &cache {
            c.load(&ctx);
        }
        let report = kw1_verdict_in(&ctx, d, cfg.seed, cfg.with_oracle.then_some(cfg.samples))?;
        if let Some(c) = &cache {
            if let Err(e) = c.store(&ctx) {
                eprintln!("warning: cache not written to {}: {e}", c.dir().display());
            }
        }
        reports.push(report);
    }
    let code = if reports.iter().all(|r| r.verdict == Verdict::Verified) { 0 } else { 2 };
    Ok((reports, code))
}

fn header(alg: &ModularLieAlgebra) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("algebraName".into(), json!(alg.name()));
    m.insert("p".into(), json!(alg.p()));
    m.insert("e".into(), json!(alg.extension_degree()));
    m.insert("definingPolynomial".into(), json!(alg.field().defining_polynomial()));
    m
}

/// Index over `Q` and modulo each prime.
pub fn run_index(parsed: &ParsedInput, cfg: &RunConfig) -> Result<Vec<Value>, CliError> {
    cfg.validate()?;
    let pres = &parsed.presentation;
    let q = index_rational(pres, INDEX_TRIALS, cfg.seed);
    let mut out = Vec::new();
    for &p in &cfg.primes {
        let e = cfg.ext.unwrap_or(1);
        let field = FiniteField::random(p, e, &mut rng::stream(cfg.seed, purpose::FIELD)).map_err(LieError::from)?;
        let alg = base_change_into(pres, &field)?;
        let m = index_modular(&alg, INDEX_TRIALS, cfg.seed)?;
        let mut v = header(&alg);
        v.insert("dim".into(), json!(pres.dim()));
        v.insert("indexQ".into(), json!(q.index));
        v.insert("indexModP".into(), json!(m.index));
        v.insert("trials".into(), json!(m.trials));
        v.insert("seed".into(), json!(cfg.seed));
        out.push(Value::Object(v));
    }
    Ok(out)
}

/// The p-map in use, one rendered value per basis element.
pub fn run_pmap(parsed: &ParsedInput, cfg: &RunConfig) -> Result<Vec<Value>, CliError> {
    cfg.validate()?;
    let pres = &parsed.presentation;
    let mut out = Vec::new();
    for &p in &cfg.primes {
        let alg = modular(pres, parsed.pmap_override.as_ref(), p, cfg.ext.unwrap_or(1), cfg.seed)?;
        let ctx = RestrictedEnveloping::new(&alg)?;
        let mut v = header(&alg);
        let values: serde_json::Map<String, Value> = alg
            .labels()
            .iter()
            .enumerate()
            .map(|(i, l)| (format!("{l}^[p]"), json!(ctx.render(ctx.p_map_element(i)))))
            .collect();
        v.insert("pMap".into(), Value::Object(values));
        out.push(Value::Object(v));
    }
    Ok(out)
}

/// Bounded center basis and the p-center generators.
pub fn run_center(parsed: &ParsedInput, cfg: &RunConfig) -> Result<Vec<Value>, CliError> {
    cfg.validate()?;
    let n = parsed.presentation.dim();
    let mut out = Vec::new();
    for &p in &cfg.primes {
        let d = cfg.degree_bound_for(n, p);
        let ctx = context(parsed, cfg, p, d)?;
        let cb = center_basis_bounded(&ctx, d, DEFAULT_MONOMIAL_CAP, cfg.seed)?;
        let mut v = header(ctx.algebra());
        v.insert("degreeBound".into(), json!(d));
        v.insert("stabilized".into(), json!(cb.stabilized));
        v.insert("pCenterGenerators".into(), json!(ctx.xi().xi.iter().map(|x| ctx.render(x)).collect::<Vec<_>>()));
        v.insert("dimension".into(), json!(cb.elements.len()));
        v.insert("elements".into(), json!(cb.elements.iter().map(|x| ctx.render(x)).collect::<Vec<_>>()));
        out.push(Value::Object(v));
    }
    Ok(out)
}

/// Rank of the bounded center over the p-center.
pub fn run_rank(parsed: &ParsedInput, cfg: &RunConfig) -> Result<Vec<Value>, CliError> {
    cfg.validate()?;
    let n = parsed.presentation.dim();
    let mut out = Vec::new();
    for &p in &cfg.primes {
        let d = cfg.degree_bound_for(n, p);
        let ctx = context(parsed, cfg, p, d)?;
        let cb = center_basis_bounded(&ctx, d, DEFAULT_MONOMIAL_CAP, cfg.seed)?;
        let r = rank_over_p_center(&ctx, &cb, cfg.seed)?;
        let mut v = header(ctx.algebra());
        v.insert("degreeBound".into(), json!(d));
        v.insert("stabilized".into(), json!(cb.stabilized));
        v.insert("rankZoverZp".into(), json!(r));
        v.insert("seed".into(), json!(cfg.seed));
        out.push(Value::Object(v));
    }
    Ok(out)
}

/// Largest simple dimension found by splitting reduced enveloping algebras.
pub fn run_oracle(parsed: &ParsedInput, cfg: &RunConfig) -> Result<Vec<Value>, CliError> {
    cfg.validate()?;
    let mut out = Vec::new();
    for &p in &cfg.primes {
        let alg = modular(&parsed.presentation, parsed.pmap_override.as_ref(), p, 1, cfg.seed)?;
        let est = max_irreducible_dim(&alg, cfg.samples, cfg.seed)?;
        let mut v = serde_json::Map::new();
        v.insert("algebraName".into(), json!(alg.name()));
        v.insert("p".into(), json!(p));
        if let Value::Object(o) = oracle_json(&est) {
            v.extend(o);
        }
        out.push(Value::Object(v));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct LemmaConfig {
    pub vars: Vec<String>,
    pub generators: Vec<String>,
    pub p: u64,
    pub ext: Option<u32>,
    pub stabilization_bound: usize,
    pub seed: u64,
}

/// Rank of `F[x_1..x_n]` over the subring generated by the given
/// polynomials and the p-th powers.
pub fn run_lemma(cfg: &LemmaConfig) -> Result<Value, CliError> {
    if !is_prime(cfg.p) {
        return Err(CliError::Input(format!("{} is not prime", cfg.p)));
    }
    if cfg.vars.is_empty() || cfg.vars.iter().any(|v| v.is_empty()) {
        return Err(CliError::Input("variables must be nonempty names".into()));
    }
    let n = cfg.vars.len();
    let parse_with = |field: &FiniteField| {
        cfg.generators
            .iter()
            .map(|g| parse_polynomial(g, &cfg.vars, field).map_err(|e| CliError::Input(e.to_string())))
            .collect::<Result<Vec<_>, _>>()
    };
    // Minors of the evaluated coefficient matrices have degree at most
    // p^n times the largest generator degree in the p-th powers.
    let prime = FiniteField::prime(cfg.p).map_err(LieError::from)?;
    let max_deg = parse_with(&prime)?.iter().filter_map(|g| g.degree()).max().unwrap_or(0) as u64;
    let pn = cfg.p.checked_pow(n as u32).ok_or(CenterError::FreeRankTooLarge { p: cfg.p, n })?;
    let e = cfg
        .ext
        .unwrap_or_else(|| rng::extension_degree_for(cfg.p, 4 * pn.saturating_mul(max_deg * cfg.stabilization_bound as u64 + 1)));
    let field = FiniteField::random(cfg.p, e, &mut rng::stream(cfg.seed, purpose::FIELD)).map_err(LieError::from)?;
    let gens = parse_with(&field)?;
    let rank = rank_over_frobenius_subring(&field, n, &gens, cfg.stabilization_bound, cfg.seed)?;
    Ok(json!({
        "variables": cfg.vars,
        "generators": gens.iter().map(|g| g.render(&field, &cfg.vars)).collect::<Vec<_>>(),
        "p": cfg.p,
        "e": e,
        "definingPolynomial": field.defining_polynomial(),
        "stabilizationBound": cfg.stabilization_bound,
        "seed": cfg.seed,
        "rank": rank,
    }))
}

/// Every builtin must satisfy the Jacobi identity; a failure is a bug.
pub fn validate_registry() -> Result<(), CliError> {
    for pres in builtin::all() {
        if validate_presentation(&pres).is_err() {
            return Err(CliError::Internal(format!("builtin {} fails the Jacobi identity", pres.name())));
        }
    }
    Ok(())
}

/// The builtin registry, with dimension and index over `Q`.
pub fn run_examples(seed: u64) -> Vec<Value> {
    let mut out = Vec::new();
    for pres in builtin::all() {
        let ind = index_rational(&pres, INDEX_TRIALS, seed).index;
        out.push(json!({
            "name": pres.name(),
            "dim": pres.dim(),
            "basis": pres.labels(),
            "indexQ": ind,
        }));
    }
    out
}
