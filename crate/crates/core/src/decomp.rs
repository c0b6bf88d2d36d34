//! Direct-sum decomposition of multi-twisted codes into constacyclic constituents.
//!
//! When the cofactors `h_i = (x^{m_i} - lambda_i) / g_i` are pairwise coprime, the
//! code is the direct sum of its projections and its dual is the direct sum of
//! the constituent duals. Every claim is re-checked by linear algebra here.

use crate::algebra::{FieldElement, Poly};
use crate::error::{Error, Result};
use crate::lcd;
use crate::linalg::MatrixFq;
use crate::mtcode::{ConstituentCode, Distance, MTCode};

/// A pair of blocks whose cofactors share a nontrivial factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeWitness {
    pub i: usize,
    pub j: usize,
    pub gcd: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposability {
    pub decomposable: bool,
    pub cofactors: Vec<Poly>,
    pub witnesses: Vec<CoprimeWitness>,
}

/// `(x^{m_i} - lambda_i) / g_i(x)`.
pub fn cofactor(code: &MTCode, i: usize) -> Result<Poly> {
    code.project(i)?.cofactor()
}

/// Pairwise coprimality of the cofactors, with every failing pair as witness.
pub fn is_decomposable(code: &MTCode) -> Result<Decomposability> {
    let ell = code.shape().ell();
    let cofactors = (0..ell).map(|i| cofactor(code, i)).collect::<Result<Vec<_>>>()?;
    let mut witnesses = Vec::new();
    for i in 0..ell {
        for j in i + 1..ell {
            let gcd = cofactors[i].gcd(&cofactors[j])?;
            if !gcd.is_one() {
                witnesses.push(CoprimeWitness { i, j, gcd });
            }
        }
    }
    Ok(Decomposability { decomposable: witnesses.is_empty(), cofactors, witnesses })
}

fn block_diag(code: &MTCode, blocks: &[MatrixFq]) -> MatrixFq {
    let shape = code.shape();
    let n = shape.n();
    let mut g = MatrixFq::zeros(code.field(), 0, n);
    for (i, b) in blocks.iter().enumerate() {
        let range = shape.block_range(i);
        for row in b.row_iter() {
            let mut v = vec![FieldElement::ZERO; n];
            v[range.clone()].copy_from_slice(row);
            g.push_row(&v).expect("length n");
        }
    }
    g
}

/// Constituent generator matrices on the diagonal; zero constituents add no rows.
pub fn block_diag_generator(code: &MTCode) -> Result<MatrixFq> {
    let blocks: Vec<MatrixFq> = code.constituents()?.iter().map(ConstituentCode::generator_matrix).collect();
    Ok(block_diag(code, &blocks))
}

/// `C ⊆ ⊕ π_i(C)`, which holds without any hypothesis.
pub fn contained_in_direct_sum(code: &MTCode) -> Result<bool> {
    let sum = block_diag_generator(code)?;
    sum.row_space_contains(code.expand().basis())
}

fn require_decomposable(code: &MTCode) -> Result<()> {
    if is_decomposable(code)?.decomposable {
        Ok(())
    } else {
        Err(Error::PreconditionViolated("cofactors are not pairwise coprime"))
    }
}

/// Checks `C = ⊕ π_i(C)` as row spaces together with additivity of dimensions.
pub fn verify_direct_sum(code: &MTCode) -> Result<bool> {
    require_decomposable(code)?;
    let expanded = code.expand();
    let constituents = code.constituents()?;
    let dims: usize = constituents.iter().map(ConstituentCode::dimension).sum();
    let g = block_diag_generator(code)?;
    Ok(g.row_space_equal(expanded.basis())? && dims == expanded.dimension())
}

/// Block-diagonal generator of `⊕ π_i(C)^⊥`, each dual built from the
/// reciprocal of the constituent cofactor as a `lambda_i^{-1}`-constacyclic code.
pub fn dual_block_diag_generator(code: &MTCode) -> Result<MatrixFq> {
    let f = code.field();
    let blocks = code
        .constituents()?
        .iter()
        .map(|cc| {
            let dual_gen = lcd::constacyclic_dual_generator(cc.gen_poly(), cc.m(), cc.lambda())?;
            let dual = ConstituentCode::new(f, cc.index(), f.inv(cc.lambda())?, cc.m(), dual_gen)?;
            Ok(dual.generator_matrix())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(block_diag(code, &blocks))
}

/// Checks `C^⊥ = ⊕ π_i(C)^⊥` against the null space of the expanded code.
pub fn verify_dual_direct_sum(code: &MTCode) -> Result<bool> {
    require_decomposable(code)?;
    let dual = code.expand().dual();
    dual_block_diag_generator(code)?.row_space_equal(dual.basis())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRule {
    pub code_distance: Distance,
    pub constituent_distances: Vec<Distance>,
    pub rule_holds: bool,
}

/// `d(C)` and each `d(π_i(C))` by enumeration; zero constituents have
/// infinite distance and so drop out of the minimum.
pub fn distance_min_rule(code: &MTCode, cap: u64) -> Result<DistanceRule> {
    require_decomposable(code)?;
    let code_distance = code.expand().min_distance(cap)?;
    let constituent_distances = code
        .constituents()?
        .iter()
        .map(|cc| cc.expand().min_distance(cap))
        .collect::<Result<Vec<_>>>()?;
    let min = constituent_distances.iter().copied().min().unwrap_or(Distance::Infinite);
    Ok(DistanceRule { code_distance, constituent_distances, rule_holds: code_distance == min })
}

/// Security thresholds of orthogonal direct-sum masking built from an LCD code
/// and from each of its constituents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecurityThresholds {
    pub code: Distance,
    pub constituents: Vec<Distance>,
    pub min_rule_holds: bool,
}

pub fn security_report(code: &MTCode, cap: u64) -> Result<SecurityThresholds> {
    if !is_decomposable(code)?.decomposable {
        return Err(Error::NotApplicable("cofactors are not pairwise coprime"));
    }
    if !code.expand().is_lcd() {
        return Err(Error::NotApplicable("thresholds are defined for LCD codes"));
    }
    let rule = distance_min_rule(code, cap)?;
    Ok(SecurityThresholds {
        code: rule.code_distance,
        constituents: rule.constituent_distances,
        min_rule_holds: rule.rule_holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstituentSummary {
    pub gen_poly: Poly,
    pub cofactor: Poly,
    pub dimension: usize,
    pub distance: Option<Distance>,
}

/// Everything the decomposition machinery says about one code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub decomposable: bool,
    pub constituents: Vec<ConstituentSummary>,
    pub witnesses: Vec<CoprimeWitness>,
    pub contained_in_sum: bool,
    pub direct_sum_verified: Option<bool>,
    pub dual_direct_sum_verified: Option<bool>,
    /// `None` when the code is too large to enumerate.
    pub code_distance: Option<Distance>,
    pub distance_rule_holds: Option<bool>,
    /// Present for decomposable LCD codes within the enumeration cap.
    pub thresholds: Option<SecurityThresholds>,
}

pub fn decompose(code: &MTCode, cap: u64) -> Result<DecompositionReport> {
    let dec = is_decomposable(code)?;
    let expanded = code.expand();
    let code_distance = ok_if_enumerable(expanded.min_distance(cap))?;
    let constituents = code
        .constituents()?
        .into_iter()
        .map(|cc| {
            Ok(ConstituentSummary {
                cofactor: cc.cofactor()?,
                dimension: cc.dimension(),
                distance: ok_if_enumerable(cc.expand().min_distance(cap))?,
                gen_poly: cc.gen_poly().clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let contained_in_sum = contained_in_direct_sum(code)?;
    let (direct, dual_direct, rule, thresholds) = if dec.decomposable {
        let rule = ok_if_enumerable(distance_min_rule(code, cap))?;
        let thresholds = match (&rule, expanded.is_lcd()) {
            (Some(r), true) => Some(SecurityThresholds {
                code: r.code_distance,
                constituents: r.constituent_distances.clone(),
                min_rule_holds: r.rule_holds,
            }),
            _ => None,
        };
        (
            Some(verify_direct_sum(code)?),
            Some(verify_dual_direct_sum(code)?),
            rule.map(|r| r.rule_holds),
            thresholds,
        )
    } else {
        (None, None, None, None)
    };
    Ok(DecompositionReport {
        decomposable: dec.decomposable,
        constituents,
        witnesses: dec.witnesses,
        contained_in_sum,
        direct_sum_verified: direct,
        dual_direct_sum_verified: dual_direct,
        code_distance,
        distance_rule_holds: rule,
        thresholds,
    })
}

fn ok_if_enumerable<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::TooLargeToEnumerate { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}
