//! The invariant suite over a seeded corpus.
//!
//! Instances are checked in parallel and collected in corpus order, so the
//! summary depends only on the seed and the ranges, never on scheduling.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::codefile::serialize_code;
use super::commands::Limits;
use super::report::{list, Outcome, Report, Status};
use crate::corpus::{self, CodeSampler, CorpusConfig, CorpusEntry};
use crate::decomp;
use crate::dimension;
use crate::error::{Error, Result};
use crate::lcd::{self, Criterion};
use crate::mtcode::{twist_shift, MTCode};

/// Property names in report order.
pub const PROPERTIES: &[&str] = &[
    "dimension_agree",
    "determinantal_degree",
    "row_invariance",
    "monotone",
    "cofactor_product",
    "twist_closed",
    "projection",
    "double_dual",
    "hull_symmetric",
    "containment",
    "direct_sum",
    "dual_direct_sum",
    "distance_rule",
    "block_lcd_rule",
    "twist_lcd_rule",
    "thresholds",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail,
    /// Hypothesis not met or outside the enumeration cap.
    Skip,
}

impl From<bool> for Check {
    fn from(b: bool) -> Self {
        if b {
            Check::Pass
        } else {
            Check::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceResult {
    pub index: usize,
    /// One entry per name in [`PROPERTIES`], same order.
    pub checks: Vec<Check>,
    pub decomposable: bool,
    pub repeated_root: bool,
    /// Messages for checks that errored rather than returning false.
    pub errors: Vec<String>,
}

impl InstanceResult {
    pub fn failed(&self) -> Vec<&'static str> {
        PROPERTIES.iter().zip(&self.checks).filter(|(_, c)| **c == Check::Fail).map(|(p, _)| *p).collect()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub corpus: CorpusConfig,
    pub workers: usize,
    /// Codeword cap for the distance checks.
    pub distance_cap: u64,
    pub replay_dir: Option<PathBuf>,
    /// Check a single corpus index only.
    pub only: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { corpus: CorpusConfig::default(), workers: 1, distance_cap: 1 << 16, replay_dir: None, only: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCount {
    pub name: &'static str,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifySummary {
    pub instances: usize,
    pub decomposable: usize,
    pub repeated_root: usize,
    pub properties: Vec<PropertyCount>,
    pub results: Vec<InstanceResult>,
}

impl VerifySummary {
    pub fn all_pass(&self) -> bool {
        self.properties.iter().all(|p| p.fail == 0)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyCount> {
        self.properties.iter().find(|p| p.name == name)
    }
}

fn seed_for(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Runs every property on one instance. Errors count as failures.
pub fn check_instance(entry: &CorpusEntry, limits: &Limits, distance_cap: u64, seed: u64) -> InstanceResult {
    let code = &entry.code;
    let mut errors = Vec::new();
    let mut run = |name: &str, f: &dyn Fn() -> Result<Check>| match f() {
        Ok(c) => c,
        Err(e) => {
            errors.push(format!("{name}: {e}"));
            Check::Fail
        }
    };
    let dec = decomp::is_decomposable(code);
    let decomposable = dec.as_ref().map(|d| d.decomposable).unwrap_or(false);
    let q = code.field().order() as usize;
    let repeated_root = code.shape().block_lengths().iter().any(|&m| gcd(m, q) != 1);

    let checks = vec![
        run("dimension_agree", &|| Ok(dimension_agree(code, limits))),
        run("determinantal_degree", &|| determinantal_degree(code, limits)),
        run("row_invariance", &|| row_invariance(code, limits)),
        run("monotone", &|| monotone(code, limits, seed_for(seed, entry.index))),
        run("cofactor_product", &|| cofactor_product(code)),
        run("twist_closed", &|| twist_closed(code)),
        run("projection", &|| projection(code)),
        run("double_dual", &|| Ok(double_dual(code))),
        run("hull_symmetric", &|| hull_symmetric(code)),
        run("containment", &|| decomp::contained_in_direct_sum(code).map(Check::from)),
        run("direct_sum", &|| when(decomposable, || decomp::verify_direct_sum(code))),
        run("dual_direct_sum", &|| when(decomposable, || decomp::verify_dual_direct_sum(code))),
        run("distance_rule", &|| distance_rule(code, decomposable, distance_cap)),
        run("block_lcd_rule", &|| block_lcd_rule(code)),
        run("twist_lcd_rule", &|| twist_lcd_rule(code)),
        run("thresholds", &|| thresholds(code, decomposable, distance_cap)),
    ];
    if let Err(e) = dec {
        errors.push(format!("decomposability: {e}"));
    }
    InstanceResult { index: entry.index, checks, decomposable, repeated_root, errors }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn when(cond: bool, f: impl FnOnce() -> Result<bool>) -> Result<Check> {
    if cond {
        f().map(Check::from)
    } else {
        Ok(Check::Skip)
    }
}

fn dimension_agree(code: &MTCode, limits: &Limits) -> Check {
    let r = dimension::dimension_report(code, limits.max_minors);
    if !r.agree {
        return Check::Fail;
    }
    if r.k_minors.is_none() || r.k_hnf.is_none() {
        return Check::Skip;
    }
    Check::Pass
}

/// deg gcd(maximal minors) equals the sum of the triangular diagonal degrees.
fn determinantal_degree(code: &MTCode, limits: &Limits) -> Result<Check> {
    let m = match dimension::dim_minors(code, limits.max_minors) {
        Ok(m) => m,
        Err(Error::TooManyMinors { .. }) => return Ok(Check::Skip),
        Err(e) => return Err(e),
    };
    let h = dimension::dim_hnf(code)?;
    let sum: usize = h.diagonal.iter().filter_map(|p| p.degree()).sum();
    Ok((m.gcd.degree() == Some(sum)).into())
}

/// Reversing the generator rows and scaling one by a nonzero constant changes no output.
fn row_invariance(code: &MTCode, limits: &Limits) -> Result<Check> {
    if code.rho() == 0 {
        return Ok(Check::Skip);
    }
    let f = code.field();
    let c = f.element(f.order() - 1)?;
    let mut gens: Vec<_> = code.generators().iter().rev().cloned().collect();
    gens[0] = gens[0].iter().map(|p| p.scale(c)).collect();
    let other = MTCode::new(code.shape().clone(), gens)?;
    let a = dimension::dimension_report(code, limits.max_minors);
    let b = dimension::dimension_report(&other, limits.max_minors);
    Ok((a.k_rank == b.k_rank
        && a.k_minors == b.k_minors
        && a.minors_gcd == b.minors_gcd
        && a.k_hnf == b.k_hnf
        && a.hnf_diagonal == b.hnf_diagonal
        && code.expand() == other.expand())
    .into())
}

/// Adding a generator tuple never shrinks the code.
fn monotone(code: &MTCode, limits: &Limits, seed: u64) -> Result<Check> {
    let extra = CodeSampler::new(seed).tuple(code.shape());
    let bigger = code.with_generator(extra)?;
    let a = dimension::dimension_report(code, limits.max_minors);
    let b = dimension::dimension_report(&bigger, limits.max_minors);
    let grow = |x: Option<usize>, y: Option<usize>| match (x, y) {
        (Some(x), Some(y)) => x <= y,
        _ => true,
    };
    Ok((a.k_rank <= b.k_rank
        && grow(a.k_minors, b.k_minors)
        && grow(a.k_hnf, b.k_hnf)
        && bigger.expand().contains(&code.expand())?)
    .into())
}

fn cofactor_product(code: &MTCode) -> Result<Check> {
    for cc in code.constituents()? {
        if cc.gen_poly().mul(&cc.cofactor()?)? != cc.modulus() {
            return Ok(Check::Fail);
        }
    }
    Ok(Check::Pass)
}

fn twist_closed(code: &MTCode) -> Result<Check> {
    let c = code.expand();
    for row in c.basis().row_iter() {
        if !c.contains_vector(&twist_shift(row, code.shape())?)? {
            return Ok(Check::Fail);
        }
    }
    Ok(Check::Pass)
}

/// The coordinate projection of the expansion is the constituent's code.
fn projection(code: &MTCode) -> Result<Check> {
    let c = code.expand();
    for cc in code.constituents()? {
        if c.project_coordinates(code.shape().block_range(cc.index())) != cc.expand() {
            return Ok(Check::Fail);
        }
    }
    Ok(Check::Pass)
}

fn double_dual(code: &MTCode) -> Check {
    let c = code.expand();
    let d = c.dual();
    (c.dimension() + d.dimension() == c.n() && d.dual() == c).into()
}

fn hull_symmetric(code: &MTCode) -> Result<Check> {
    let c = code.expand();
    let d = c.dual();
    let h = c.hull();
    Ok((h == d.hull() && c.contains(&h)? && d.contains(&h)? && c.is_lcd() == d.is_lcd()).into())
}

fn distance_rule(code: &MTCode, decomposable: bool, cap: u64) -> Result<Check> {
    if !decomposable {
        return Ok(Check::Skip);
    }
    match decomp::distance_min_rule(code, cap) {
        Ok(r) => Ok(r.rule_holds.into()),
        Err(Error::TooLargeToEnumerate { .. }) => Ok(Check::Skip),
        Err(e) => Err(e),
    }
}

fn block_lcd_rule(code: &MTCode) -> Result<Check> {
    let v = lcd::mt_is_lcd_by_blocks(code)?;
    Ok(match v.by_criterion {
        Criterion::NotApplicable => Check::Skip,
        Criterion::Decided(_) => v.agrees().into(),
    })
}

fn twist_lcd_rule(code: &MTCode) -> Result<Check> {
    Ok(match lcd::mt_is_lcd_by_twists(code)? {
        Criterion::Decided(true) => code.expand().is_lcd().into(),
        _ => Check::Skip,
    })
}

fn thresholds(code: &MTCode, decomposable: bool, cap: u64) -> Result<Check> {
    if !decomposable || !code.expand().is_lcd() {
        return Ok(Check::Skip);
    }
    match decomp::security_report(code, cap) {
        Ok(t) => Ok(t.min_rule_holds.into()),
        Err(Error::TooLargeToEnumerate { .. }) => Ok(Check::Skip),
        Err(e) => Err(e),
    }
}

/// Generates the corpus and checks it on `workers` threads.
pub fn run(config: &VerifyConfig, limits: &Limits) -> Result<VerifySummary> {
    let entries = corpus::generate(&config.corpus)?;
    let entries: Vec<CorpusEntry> = match config.only {
        Some(i) => {
            let len = entries.len();
            vec![entries.into_iter().nth(i).ok_or(Error::IndexOutOfRange { index: i, len })?]
        }
        None => entries,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| Error::InternalInvariantViolation(format!("thread pool: {e}")))?;
    let seed = config.corpus.seed;
    let results: Vec<InstanceResult> = pool.install(|| {
        entries.par_iter().map(|e| check_instance(e, limits, config.distance_cap, seed)).collect()
    });
    let properties = PROPERTIES
        .iter()
        .enumerate()
        .map(|(k, &name)| {
            let mut pc = PropertyCount { name, pass: 0, fail: 0, skip: 0 };
            for r in &results {
                match r.checks[k] {
                    Check::Pass => pc.pass += 1,
                    Check::Fail => pc.fail += 1,
                    Check::Skip => pc.skip += 1,
                }
            }
            pc
        })
        .collect();
    Ok(VerifySummary {
        instances: results.len(),
        decomposable: results.iter().filter(|r| r.decomposable).count(),
        repeated_root: results.iter().filter(|r| r.repeated_root).count(),
        properties,
        results,
    })
}

fn write_replay(dir: &Path, seed: u64, entry: &CorpusEntry, result: &InstanceResult) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let path = dir.join(format!("verify-seed{seed}-instance{}.code", entry.index));
    let mut text = format!(
        "# verify --seed {seed} --only {}\n# failed: {}\n",
        entry.index,
        result.failed().join(", ")
    );
    for e in &result.errors {
        text.push_str(&format!("# error: {e}\n"));
    }
    text.push_str(&serialize_code(&entry.code));
    fs::write(&path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(path)
}

/// `verify` command: summary report, plus replay files for failures.
pub fn verify(config: &VerifyConfig, limits: &Limits) -> Result<Outcome> {
    let summary = run(config, limits)?;
    let mut r = Report::new();
    let c = &config.corpus;
    r.section("corpus");
    r.field("verify.seed", c.seed)
        .field("verify.size", c.size)
        .field("verify.q_values", list(&c.q_values))
        .field("verify.ell", format!("{}..={}", c.ell.start(), c.ell.end()))
        .field("verify.m", format!("{}..={}", c.m.start(), c.m.end()))
        .field("verify.rho", format!("{}..={}", c.rho.start(), c.rho.end()))
        .field("verify.instances", summary.instances)
        .field("verify.decomposable", summary.decomposable)
        .field("verify.repeated_root", summary.repeated_root);
    r.section("properties");
    for p in &summary.properties {
        r.field(format!("property.{}.pass", p.name), p.pass);
        r.field(format!("property.{}.fail", p.name), p.fail);
        r.field(format!("property.{}.skip", p.name), p.skip);
    }
    let failing: Vec<&InstanceResult> = summary.results.iter().filter(|r| !r.failed().is_empty()).collect();
    if !failing.is_empty() {
        r.section("failures");
        let entries = corpus::generate(c)?;
        for res in &failing {
            r.field(format!("failure.{}", res.index), list(res.failed()));
            if let Some(dir) = &config.replay_dir {
                let path = write_replay(dir, c.seed, &entries[res.index], res)?;
                r.field(format!("failure.{}.replay", res.index), path.display());
            }
        }
    }
    let status = if summary.all_pass() { Status::Ok } else { Status::Mismatch };
    r.field("status", if status == Status::Ok { "ok" } else { "mismatch" });
    Ok(Outcome { report: r, status })
}
