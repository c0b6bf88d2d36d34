//! The per-code commands: `analyze`, `dim`, `dual`, `mindist`, `decompose`, `lcd`.

use super::report::{coeffs, list, Outcome, Report, Status};
use crate::algebra::DEFAULT_MAX_Q;
use crate::decomp;
use crate::dimension::{self, DEFAULT_MAX_MINORS};
use crate::error::{Error, Result};
use crate::lcd::{self, Criterion};
use crate::mtcode::{MTCode, DEFAULT_MAX_ENUM};

/// Resource caps shared by every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of codewords enumerated for a minimum distance.
    pub max_enum: u64,
    /// Largest number of minors evaluated by the minors method.
    pub max_minors: u64,
    pub max_q: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_enum: DEFAULT_MAX_ENUM, max_minors: DEFAULT_MAX_MINORS, max_q: DEFAULT_MAX_Q }
    }
}

fn status_of(mismatches: &[&str]) -> Status {
    if mismatches.is_empty() {
        Status::Ok
    } else {
        Status::Mismatch
    }
}

fn finish(mut report: Report, mismatches: Vec<&str>) -> Outcome {
    report.section("status");
    report.field("mismatches", list(&mismatches));
    let status = status_of(&mismatches);
    report.field("status", if status == Status::Ok { "ok" } else { "mismatch" });
    Outcome { report, status }
}

pub fn shape_report(code: &MTCode) -> Report {
    let s = code.shape();
    let f = code.field();
    let mut r = Report::new();
    r.section("shape");
    r.field("shape.q", f.order());
    if let Some(m) = f.modulus() {
        r.field("shape.modulus", list(m));
    }
    r.field("shape.ell", s.ell())
        .field("shape.lambda", list(s.lambdas()))
        .field("shape.m", list(s.block_lengths()))
        .field("shape.n", s.n())
        .field("shape.rho", code.rho());
    r
}

fn dimension_section(code: &MTCode, limits: &Limits, r: &mut Report, mismatches: &mut Vec<&'static str>) {
    let d = dimension::dimension_report(code, limits.max_minors);
    r.section("dimension");
    r.field("dim.rank", d.k_rank);
    r.note("minors: n - deg gcd of the l x l minors of the stacked (rho + l) x l matrix (candidate formula, validated against rank)");
    r.field("dim.minors", opt(d.k_minors));
    r.field("dim.minor_count", opt(d.minor_count));
    r.field("dim.minors_gcd", opt(d.minors_gcd.as_ref().map(coeffs)));
    r.field("dim.hnf", opt(d.k_hnf));
    r.field("dim.hnf_diagonal", opt(d.hnf_diagonal.as_ref().map(|v| list(v.iter().map(coeffs)))));
    for (method, err) in &d.errors {
        r.field(format!("dim.{method}.error"), err);
    }
    r.field("dim.agree", d.agree);
    if !d.agree {
        mismatches.push("dimension");
    }
    if let (Some(g), Some(diag)) = (&d.minors_gcd, &d.hnf_diagonal) {
        let sum: usize = diag.iter().filter_map(|p| p.degree()).sum();
        if g.degree() != Some(sum) {
            mismatches.push("determinantal_degree");
        }
    }
}

fn decomposition_section(code: &MTCode, limits: &Limits, r: &mut Report, mismatches: &mut Vec<&'static str>) -> Result<decomp::DecompositionReport> {
    let d = decomp::decompose(code, limits.max_enum)?;
    r.section("constituents");
    for (i, c) in d.constituents.iter().enumerate() {
        let b = i + 1;
        r.field(format!("block.{b}.g"), coeffs(&c.gen_poly));
        r.field(format!("block.{b}.h"), coeffs(&c.cofactor));
        r.field(format!("block.{b}.dim"), c.dimension);
        r.field(format!("block.{b}.d"), opt(c.distance));
    }
    r.section("decomposition");
    r.field("decomp.decomposable", d.decomposable);
    for w in &d.witnesses {
        r.field(format!("decomp.witness.{}.{}", w.i + 1, w.j + 1), coeffs(&w.gcd));
    }
    r.field("decomp.contained_in_sum", d.contained_in_sum);
    r.field("decomp.direct_sum", opt(d.direct_sum_verified));
    r.field("decomp.dual_direct_sum", opt(d.dual_direct_sum_verified));
    if !d.contained_in_sum {
        mismatches.push("containment");
    }
    if d.direct_sum_verified == Some(false) {
        mismatches.push("direct_sum");
    }
    if d.dual_direct_sum_verified == Some(false) {
        mismatches.push("dual_direct_sum");
    }
    Ok(d)
}

fn lcd_section(code: &MTCode, r: &mut Report, mismatches: &mut Vec<&'static str>) -> Result<bool> {
    let v = lcd::mt_is_lcd_by_blocks(code)?;
    let by_twists = lcd::mt_is_lcd_by_twists(code)?;
    r.section("lcd");
    r.field("lcd.hull", v.by_hull);
    r.field("lcd.block_rule", v.by_criterion);
    r.field("lcd.twist_rule", by_twists);
    for (i, b) in v.per_block.iter().enumerate() {
        let k = i + 1;
        r.field(format!("lcd.block.{k}.lambda_sq_one"), b.lambda_squared_is_one);
        r.field(format!("lcd.block.{k}.self_reciprocal"), b.self_reciprocal);
        r.field(format!("lcd.block.{k}.gcd_g_h"), coeffs(&b.gcd_with_cofactor));
    }
    if !v.agrees() {
        mismatches.push("block_lcd_rule");
    }
    if by_twists == Criterion::Decided(true) && !v.by_hull {
        mismatches.push("twist_lcd_rule");
    }
    Ok(v.by_hull)
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

/// Full analysis: constituents, decomposition, dimensions, LCD verdicts,
/// distances and masking thresholds.
pub fn analyze(code: &MTCode, limits: &Limits) -> Result<Outcome> {
    let mut r = shape_report(code);
    let mut mismatches = Vec::new();
    let d = decomposition_section(code, limits, &mut r, &mut mismatches)?;
    dimension_section(code, limits, &mut r, &mut mismatches);
    let is_lcd = lcd_section(code, &mut r, &mut mismatches)?;
    r.section("distance");
    r.field("dist.code", opt(d.code_distance));
    r.field("dist.rule_holds", opt(d.distance_rule_holds));
    if d.distance_rule_holds == Some(false) {
        mismatches.push("distance_rule");
    }
    r.section("security");
    match &d.thresholds {
        Some(t) => {
            r.field("security.S", t.code);
            r.field("security.S_i", list(&t.constituents));
            r.field("security.min_rule", t.min_rule_holds);
            if !t.min_rule_holds {
                mismatches.push("thresholds");
            }
        }
        None => {
            let why = if !d.decomposable {
                "not decomposable"
            } else if !is_lcd {
                "not LCD"
            } else {
                "too large to enumerate"
            };
            r.field("security.S", format!("n/a ({why})"));
        }
    }
    Ok(finish(r, mismatches))
}

pub fn dim(code: &MTCode, limits: &Limits) -> Result<Outcome> {
    let mut r = shape_report(code);
    let mut mismatches = Vec::new();
    dimension_section(code, limits, &mut r, &mut mismatches);
    Ok(finish(r, mismatches))
}

pub fn dual(code: &MTCode, _limits: &Limits) -> Result<Outcome> {
    let mut r = shape_report(code);
    let c = code.expand();
    let d = c.dual();
    r.section("dual");
    r.field("code.k", c.dimension());
    r.field("dual.k", d.dimension());
    for (i, row) in d.basis().row_iter().enumerate() {
        r.field(format!("dual.row.{}", i + 1), list(row));
    }
    let mut mismatches = Vec::new();
    if c.dimension() + d.dimension() != c.n() || d.dual() != c {
        mismatches.push("double_dual");
    }
    if decomp::is_decomposable(code)?.decomposable {
        let ok = decomp::verify_dual_direct_sum(code)?;
        r.field("dual.direct_sum", ok);
        if !ok {
            mismatches.push("dual_direct_sum");
        }
    } else {
        r.field("dual.direct_sum", "n/a");
    }
    Ok(finish(r, mismatches))
}

pub fn mindist(code: &MTCode, limits: &Limits) -> Result<Outcome> {
    let mut r = shape_report(code);
    let c = code.expand();
    r.section("distance");
    r.field("code.k", c.dimension());
    match c.min_distance(limits.max_enum) {
        Ok(d) => r.field("dist.code", d),
        Err(e @ Error::TooLargeToEnumerate { .. }) => r.field("dist.code", format!("n/a ({e})")),
        Err(e) => return Err(e),
    };
    Ok(finish(r, Vec::new()))
}

pub fn decompose(code: &MTCode, limits: &Limits) -> Result<Outcome> {
    let mut r = shape_report(code);
    let mut mismatches = Vec::new();
    let d = decomposition_section(code, limits, &mut r, &mut mismatches)?;
    r.section("distance");
    r.field("dist.code", opt(d.code_distance));
    r.field("dist.rule_holds", opt(d.distance_rule_holds));
    if d.distance_rule_holds == Some(false) {
        mismatches.push("distance_rule");
    }
    Ok(finish(r, mismatches))
}

pub fn lcd(code: &MTCode, _limits: &Limits) -> Result<Outcome> {
    let mut r = shape_report(code);
    let mut mismatches = Vec::new();
    lcd_section(code, &mut r, &mut mismatches)?;
    r.section("constituent lcd");
    for cc in code.constituents()? {
        let by_rule = lcd::constacyclic_is_lcd(cc.gen_poly(), cc.m(), cc.lambda())?;
        let by_hull = cc.expand().is_lcd();
        let b = cc.index() + 1;
        r.field(format!("constituent.{b}.lcd_rule"), by_rule);
        r.field(format!("constituent.{b}.lcd_hull"), by_hull);
        if by_rule != by_hull {
            mismatches.push("constacyclic_lcd");
        }
    }
    Ok(finish(r, mismatches))
}
