//! Search for codes that separate dimension conditions from the LCD property.
//!
//! Every code of a fixed shape lands in a bucket keyed by how its dimension
//! (and its dual's) compares with `min m_i`, and whether each is LCD. Buckets
//! on both sides of every dimension condition show that no such condition
//! alone decides LCD.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use super::commands::{analyze, Limits};
use super::report::{list, Outcome, Report, Status};
use crate::algebra::{Field, Poly};
use crate::corpus::CodeSampler;
use crate::decomp;
use crate::error::{Error, Result};
use crate::mtcode::{MTCode, MTShape};

/// Witnesses kept per bucket.
pub const WITNESSES_PER_BUCKET: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeConfig {
    pub q: u32,
    pub modulus: Option<Vec<u32>>,
    pub lambda: Vec<u32>,
    pub m: Vec<usize>,
    pub rho: usize,
    /// Most codes examined; the shape is enumerated when it fits.
    pub budget: u64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Less,
    Equal,
    Greater,
}

impl Relation {
    fn of(k: usize, min_m: usize) -> Self {
        match k.cmp(&min_m) {
            Ordering::Less => Relation::Less,
            Ordering::Equal => Relation::Equal,
            Ordering::Greater => Relation::Greater,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Relation::Less => "lt",
            Relation::Equal => "eq",
            Relation::Greater => "gt",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BucketKey {
    pub code_rel: Relation,
    pub code_lcd: bool,
    pub dual_rel: Relation,
    pub dual_lcd: bool,
}

impl fmt::Display for BucketKey {
    /// `k_lt.lcd.dual_gt.lcd`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = |b: bool| if b { "lcd" } else { "nonlcd" };
        write!(f, "k_{}.{}.dual_{}.{}", self.code_rel.tag(), l(self.code_lcd), self.dual_rel.tag(), l(self.dual_lcd))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bucket {
    pub count: u64,
    pub decomposable: u64,
    pub witnesses: Vec<MTCode>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeResult {
    pub shape: MTShape,
    pub rho: usize,
    pub exhaustive: bool,
    /// `q^(n rho)`, `None` on overflow.
    pub space: Option<u128>,
    pub examined: u64,
    pub buckets: BTreeMap<BucketKey, Bucket>,
    /// Decomposable codes that are not LCD.
    pub decomposable_non_lcd: u64,
}

/// Bucket of one code, from the rank and hull oracles.
pub fn classify(code: &MTCode) -> BucketKey {
    let min_m = code.shape().block_lengths().iter().copied().min().unwrap_or(0);
    let c = code.expand();
    let d = c.dual();
    BucketKey {
        code_rel: Relation::of(c.dimension(), min_m),
        code_lcd: c.is_lcd(),
        dual_rel: Relation::of(d.dimension(), min_m),
        dual_lcd: d.is_lcd(),
    }
}

fn shape_of(config: &ProbeConfig, max_q: u32) -> Result<MTShape> {
    let field = Field::from_parts(config.q, config.modulus.as_deref(), max_q)?;
    MTShape::from_codes(&field, &config.lambda, &config.m)
}

/// Tuple number `idx` in base-q digit order: block by block, coefficient ascending.
fn decode(shape: &MTShape, rho: usize, mut idx: u128) -> Result<MTCode> {
    let q = shape.field().order() as u128;
    let mut gens = Vec::with_capacity(rho);
    for _ in 0..rho {
        let mut tuple = Vec::with_capacity(shape.ell());
        for i in 0..shape.ell() {
            let codes: Vec<u32> = (0..shape.m(i))
                .map(|_| {
                    let d = (idx % q) as u32;
                    idx /= q;
                    d
                })
                .collect();
            tuple.push(Poly::from_codes(shape.field(), &codes)?);
        }
        gens.push(tuple);
    }
    MTCode::new(shape.clone(), gens)
}

pub fn probe(config: &ProbeConfig, limits: &Limits) -> Result<ProbeResult> {
    let shape = shape_of(config, limits.max_q)?;
    let q = shape.field().order() as u128;
    let space = u32::try_from(shape.n() * config.rho).ok().and_then(|e| q.checked_pow(e));
    let exhaustive = matches!(space, Some(s) if s <= config.budget as u128) && config.budget > 0;
    let mut result = ProbeResult {
        shape: shape.clone(),
        rho: config.rho,
        exhaustive,
        space,
        examined: 0,
        buckets: BTreeMap::new(),
        decomposable_non_lcd: 0,
    };
    let mut add = |code: MTCode| -> Result<()> {
        let key = classify(&code);
        let dec = decomp::is_decomposable(&code)?.decomposable;
        let b = result.buckets.entry(key).or_default();
        b.count += 1;
        if dec {
            b.decomposable += 1;
            if !key.code_lcd {
                result.decomposable_non_lcd += 1;
            }
        }
        if b.witnesses.len() < WITNESSES_PER_BUCKET {
            b.witnesses.push(code);
        }
        result.examined += 1;
        Ok(())
    };
    if exhaustive {
        for idx in 0..space.expect("exhaustive implies finite") {
            add(decode(&shape, config.rho, idx)?)?;
        }
    } else if config.budget > 0 {
        let mut sampler = CodeSampler::new(config.seed);
        for _ in 0..config.budget {
            let code = match space {
                Some(s) => decode(&shape, config.rho, sampler.rng().gen_range(0..s))?,
                None => sampler.code(shape.clone(), config.rho),
            };
            add(code)?;
        }
    }
    Ok(result)
}

/// Recomputes each witness through `analyze` and compares with its bucket.
pub fn revalidate(result: &ProbeResult, limits: &Limits) -> Result<bool> {
    let min_m = result.shape.block_lengths().iter().copied().min().unwrap_or(0);
    for (key, bucket) in &result.buckets {
        for w in &bucket.witnesses {
            let out = analyze(w, limits)?;
            if out.status != Status::Ok {
                return Ok(false);
            }
            let r = &out.report;
            let field = |k: &str| {
                r.get(k).ok_or_else(|| Error::InternalInvariantViolation(format!("analyze report lacks {k}")))
            };
            let k: usize = field("dim.rank")?
                .parse()
                .map_err(|_| Error::InternalInvariantViolation("dim.rank".into()))?;
            let lcd = field("lcd.hull")? == "true";
            let n = result.shape.n();
            let recomputed = BucketKey {
                code_rel: Relation::of(k, min_m),
                code_lcd: lcd,
                dual_rel: Relation::of(n - k, min_m),
                dual_lcd: w.expand().dual().is_lcd(),
            };
            if recomputed != *key || classify(w) != *key {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn gens_inline(code: &MTCode) -> String {
    list(code.generators().iter().map(|t| list(t.iter().map(|p| list(p.codes())))))
}

pub fn probe_command(config: &ProbeConfig, limits: &Limits) -> Result<Outcome> {
    let res = probe(config, limits)?;
    let valid = revalidate(&res, limits)?;
    let mut r = Report::new();
    r.section("probe");
    r.field("probe.q", config.q);
    if let Some(m) = &config.modulus {
        r.field("probe.modulus", list(m));
    }
    r.field("probe.lambda", list(&config.lambda))
        .field("probe.m", list(&config.m))
        .field("probe.rho", config.rho)
        .field("probe.budget", config.budget)
        .field("probe.space", res.space.map_or("overflow".to_string(), |s| s.to_string()))
        .field("probe.exhaustive", res.exhaustive)
        .field("probe.examined", res.examined)
        .field("probe.buckets", res.buckets.len())
        .field("probe.decomposable_non_lcd", res.decomposable_non_lcd);
    r.section("buckets");
    for (key, b) in &res.buckets {
        r.field(format!("bucket.{key}.count"), b.count);
        r.field(format!("bucket.{key}.decomposable"), b.decomposable);
        for (i, w) in b.witnesses.iter().enumerate() {
            r.field(format!("bucket.{key}.witness.{}", i + 1), gens_inline(w));
        }
    }
    r.field("probe.witnesses_revalidated", valid);
    let status = if valid { Status::Ok } else { Status::Mismatch };
    r.field("status", if valid { "ok" } else { "mismatch" });
    Ok(Outcome { report: r, status })
}
