//! LCD criteria for constacyclic and multi-twisted codes, each paired with the
//! hull computation as ground truth.

use std::fmt;

use crate::algebra::{Field, FieldElement, Poly};
use crate::decomp;
use crate::error::{Error, Result};
use crate::mtcode::MTCode;

/// Outcome of a criterion whose hypothesis may fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    Decided(bool),
    NotApplicable,
}

impl Criterion {
    pub fn decided(self) -> Option<bool> {
        match self {
            Criterion::Decided(b) => Some(b),
            Criterion::NotApplicable => None,
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Criterion::Decided(b) => write!(f, "{b}"),
            Criterion::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// Per-block data behind the self-reciprocity criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLcdInfo {
    pub lambda_squared_is_one: bool,
    pub self_reciprocal: bool,
    /// `gcd(g_i, (x^{m_i} - lambda_i) / g_i)`
    pub gcd_with_cofactor: Poly,
}

impl BlockLcdInfo {
    /// Whether this block satisfies its condition (vacuous when `lambda^2 != 1`).
    pub fn satisfied(&self) -> bool {
        !self.lambda_squared_is_one || (self.self_reciprocal && self.gcd_with_cofactor.is_one())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcdVerdict {
    pub by_criterion: Criterion,
    pub by_hull: bool,
    pub per_block: Vec<BlockLcdInfo>,
}

impl LcdVerdict {
    /// False only when the criterion decided and contradicts the hull.
    pub fn agrees(&self) -> bool {
        self.by_criterion.decided().is_none_or(|b| b == self.by_hull)
    }
}

fn is_square_one(field: &Field, lambda: FieldElement) -> bool {
    field.mul(lambda, lambda) == FieldElement::ONE
}

fn cofactor_of(g: &Poly, m: usize, lambda: FieldElement) -> Result<Poly> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda { block: 0 });
    }
    let modulus = Poly::twist_modulus(g.field(), m, lambda);
    if g.is_zero() {
        return Err(Error::NotADivisor);
    }
    modulus.exact_div(g)?.ok_or(Error::NotADivisor)
}

/// Generator of the dual of the `lambda`-constacyclic code `<g>`: the monic
/// reciprocal of the cofactor `(x^m - lambda) / g`. The result divides
/// `x^m - lambda^{-1}`.
pub fn constacyclic_dual_generator(g: &Poly, m: usize, lambda: FieldElement) -> Result<Poly> {
    let h = cofactor_of(g, m, lambda)?;
    // lambda != 0, so h(0) != 0
    h.reciprocal().map_err(|_| {
        Error::InternalInvariantViolation("cofactor of x^m - lambda with zero constant term".into())
    })
}

/// LCD test for the `lambda`-constacyclic code generated by `g`.
///
/// For `lambda^2 != 1` every such code is LCD. For `lambda = ±1` the code is
/// LCD iff `g` is self-reciprocal and coprime to its cofactor.
pub fn constacyclic_is_lcd(g: &Poly, m: usize, lambda: FieldElement) -> Result<bool> {
    let h = cofactor_of(g, m, lambda)?;
    if !is_square_one(g.field(), lambda) {
        return Ok(true);
    }
    Ok(g.is_self_reciprocal()? && g.gcd(&h)?.is_one())
}

fn block_infos(code: &MTCode) -> Result<Vec<BlockLcdInfo>> {
    code.constituents()?
        .iter()
        .map(|cc| {
            let g = cc.gen_poly();
            let h = cc.cofactor()?;
            if g.coeff(0).is_zero() {
                return Err(Error::InternalInvariantViolation(
                    "constituent generator with zero constant term".into(),
                ));
            }
            Ok(BlockLcdInfo {
                lambda_squared_is_one: is_square_one(code.field(), cc.lambda()),
                self_reciprocal: g.is_self_reciprocal()?,
                gcd_with_cofactor: g.gcd(&h)?,
            })
        })
        .collect()
}

/// The block-wise LCD criterion for decomposable codes, next to the hull verdict.
/// The criterion is `NotApplicable` when the cofactors are not pairwise coprime.
pub fn mt_is_lcd_by_blocks(code: &MTCode) -> Result<LcdVerdict> {
    let per_block = block_infos(code)?;
    let by_criterion = if decomp::is_decomposable(code)?.decomposable {
        Criterion::Decided(per_block.iter().all(BlockLcdInfo::satisfied))
    } else {
        Criterion::NotApplicable
    };
    Ok(LcdVerdict { by_criterion, by_hull: code.expand().is_lcd(), per_block })
}

/// `Decided(true)` when every `lambda_i != lambda_i^{-1}` and the code is
/// decomposable; `NotApplicable` otherwise.
pub fn mt_is_lcd_by_twists(code: &MTCode) -> Result<Criterion> {
    let f = code.field();
    if code.shape().lambdas().iter().any(|&l| is_square_one(f, l)) {
        return Ok(Criterion::NotApplicable);
    }
    if !decomp::is_decomposable(code)?.decomposable {
        return Ok(Criterion::NotApplicable);
    }
    Ok(Criterion::Decided(true))
}
