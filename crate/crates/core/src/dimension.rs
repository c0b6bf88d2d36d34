//! Three independent ways to get the dimension of a multi-twisted code.
//!
//! * rank of the expanded generator matrix over `F_q` (the definition);
//! * `n - deg gcd` of all `l x l` minors of the stacked `(rho + l) x l`
//!   polynomial matrix whose last rows are `diag(x^{m_i} - lambda_i)`;
//! * `n - sum deg d_i` over the diagonal of a triangular basis of the same
//!   row module.

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::linalg::PolyMatrix;
use crate::mtcode::MTCode;

/// Default cap on the number of minors `dim_minors` evaluates.
pub const DEFAULT_MAX_MINORS: u64 = 10_000;

/// Rows are the generator tuples followed by the block moduli on the diagonal.
pub fn stacked_matrix(code: &MTCode) -> PolyMatrix {
    let shape = code.shape();
    let f = code.field();
    let ell = shape.ell();
    let mut rows: Vec<Vec<Poly>> = code.generators().to_vec();
    for i in 0..ell {
        let mut row = vec![Poly::zero(f); ell];
        row[i] = shape.modulus(i);
        rows.push(row);
    }
    PolyMatrix::from_rows(f, ell, rows).expect("every tuple has l components")
}

pub fn dim_rank(code: &MTCode) -> usize {
    code.expand().dimension()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorsDimension {
    pub dimension: usize,
    pub gcd: Poly,
    pub minor_count: u128,
}

pub fn dim_minors(code: &MTCode, max_minors: u64) -> Result<MinorsDimension> {
    let ell = code.shape().ell();
    let res = stacked_matrix(code).minors_gcd(ell, max_minors)?;
    let deg = res.gcd.degree().ok_or_else(|| {
        Error::InternalInvariantViolation("all maximal minors vanish despite the modulus rows".into())
    })?;
    let n = code.shape().n();
    let dimension = n.checked_sub(deg).ok_or_else(|| {
        Error::InternalInvariantViolation(format!("minor gcd of degree {deg} exceeds n = {n}"))
    })?;
    Ok(MinorsDimension { dimension, gcd: res.gcd, minor_count: res.count })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfDimension {
    pub dimension: usize,
    pub diagonal: Vec<Poly>,
}

pub fn dim_hnf(code: &MTCode) -> Result<HnfDimension> {
    let basis = stacked_matrix(code).hnf_triangularize().map_err(|e| match e {
        Error::RankDeficient { column } => Error::InternalInvariantViolation(format!(
            "stacked matrix lost column {column} despite its modulus row"
        )),
        other => other,
    })?;
    let diagonal = basis.diagonal();
    let total: usize = diagonal.iter().map(|d| d.degree().unwrap_or(0)).sum();
    let n = code.shape().n();
    let dimension = n.checked_sub(total).ok_or_else(|| {
        Error::InternalInvariantViolation(format!("diagonal degrees {total} exceed n = {n}"))
    })?;
    Ok(HnfDimension { dimension, diagonal })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub k_rank: usize,
    pub k_minors: Option<usize>,
    pub k_hnf: Option<usize>,
    pub minor_count: Option<u128>,
    pub minors_gcd: Option<Poly>,
    pub hnf_diagonal: Option<Vec<Poly>>,
    /// Errors from methods that could not run (e.g. the minor cap).
    pub errors: Vec<(&'static str, Error)>,
    /// Agreement over the methods that produced a value.
    pub agree: bool,
}

pub fn dimension_report(code: &MTCode, max_minors: u64) -> DimensionReport {
    let k_rank = dim_rank(code);
    let mut errors = Vec::new();
    let minors = dim_minors(code, max_minors).map_err(|e| errors.push(("minors", e))).ok();
    let hnf = dim_hnf(code).map_err(|e| errors.push(("hnf", e))).ok();
    let k_minors = minors.as_ref().map(|m| m.dimension);
    let k_hnf = hnf.as_ref().map(|h| h.dimension);
    let agree = [k_minors, k_hnf].iter().flatten().all(|&k| k == k_rank);
    DimensionReport {
        k_rank,
        k_minors,
        k_hnf,
        minor_count: minors.as_ref().map(|m| m.minor_count),
        minors_gcd: minors.map(|m| m.gcd),
        hnf_diagonal: hnf.map(|h| h.diagonal),
        errors,
        agree,
    }
}
