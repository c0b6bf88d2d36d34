//! Multi-twisted codes: shapes, generator tuples, and their realization as
//! explicit linear codes over `F_q`.
//!
//! A codeword of a code with block lengths `(m_1, ..., m_l)` is the
//! concatenation of `l` coefficient vectors, block `i` listing the
//! coefficients of its component polynomial in ascending degree. Multiplication
//! by `x` acts on block `i` as the `lambda_i`-twisted cyclic shift.

use std::fmt;
use std::ops::Range;

use crate::algebra::{Field, FieldElement, Poly};
use crate::error::{Error, Result};
use crate::linalg::MatrixFq;

/// Default cap on the number of codewords `min_distance` will enumerate.
pub const DEFAULT_MAX_ENUM: u64 = 1 << 24;

/// Field, twist constants and block lengths of a multi-twisted code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MTShape {
    field: Field,
    lambdas: Vec<FieldElement>,
    block_lengths: Vec<usize>,
}

impl MTShape {
    pub fn new(field: &Field, lambdas: Vec<FieldElement>, block_lengths: Vec<usize>) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::Shape("at least one block is required".into()));
        }
        if lambdas.len() != block_lengths.len() {
            return Err(Error::Shape(format!(
                "{} twist constants for {} block lengths",
                lambdas.len(),
                block_lengths.len()
            )));
        }
        if let Some(block) = lambdas.iter().position(|l| l.is_zero()) {
            return Err(Error::ZeroLambda { block });
        }
        if let Some(i) = block_lengths.iter().position(|&m| m == 0) {
            return Err(Error::Shape(format!("block {i} has length zero")));
        }
        if let Some(l) = lambdas.iter().find(|l| l.code() >= field.order()) {
            return Err(Error::InvalidField(format!("twist constant {l} is not in F_{}", field.order())));
        }
        Ok(MTShape { field: field.clone(), lambdas, block_lengths })
    }

    /// Convenience constructor from element codes.
    pub fn from_codes(field: &Field, lambdas: &[u32], block_lengths: &[usize]) -> Result<Self> {
        let lambdas = lambdas.iter().map(|&c| field.element(c)).collect::<Result<_>>()?;
        Self::new(field, lambdas, block_lengths.to_vec())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ell(&self) -> usize {
        self.lambdas.len()
    }

    pub fn n(&self) -> usize {
        self.block_lengths.iter().sum()
    }

    pub fn lambdas(&self) -> &[FieldElement] {
        &self.lambdas
    }

    pub fn block_lengths(&self) -> &[usize] {
        &self.block_lengths
    }

    pub fn lambda(&self, i: usize) -> FieldElement {
        self.lambdas[i]
    }

    pub fn m(&self, i: usize) -> usize {
        self.block_lengths[i]
    }

    /// Coordinates of block `i` inside a length-`n` vector.
    pub fn block_range(&self, i: usize) -> Range<usize> {
        let start: usize = self.block_lengths[..i].iter().sum();
        start..start + self.block_lengths[i]
    }

    /// `x^{m_i} - lambda_i`
    pub fn modulus(&self, i: usize) -> Poly {
        Poly::twist_modulus(&self.field, self.m(i), self.lambda(i))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.ell() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, len: self.ell() })
        }
    }
}

/// Applies multiplication by `x`: each block is rotated right by one and the
/// wrapped coordinate is multiplied by its twist constant.
pub fn twist_shift(v: &[FieldElement], shape: &MTShape) -> Result<Vec<FieldElement>> {
    if v.len() != shape.n() {
        return Err(Error::Shape(format!("vector of length {} for n = {}", v.len(), shape.n())));
    }
    let f = shape.field();
    let mut out = vec![FieldElement::ZERO; v.len()];
    for i in 0..shape.ell() {
        let r = shape.block_range(i);
        let block = &v[r.clone()];
        let m = block.len();
        out[r.start] = f.mul(shape.lambda(i), block[m - 1]);
        out[r.start + 1..r.end].copy_from_slice(&block[..m - 1]);
    }
    Ok(out)
}

/// A multi-twisted code given by `rho` generator tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MTCode {
    shape: MTShape,
    generators: Vec<Vec<Poly>>,
}

impl MTCode {
    /// Validates the tuples and stores each component reduced modulo `x^{m_i} - lambda_i`.
    pub fn new(shape: MTShape, generators: Vec<Vec<Poly>>) -> Result<Self> {
        let mut reduced = Vec::with_capacity(generators.len());
        for (k, tuple) in generators.into_iter().enumerate() {
            if tuple.len() != shape.ell() {
                return Err(Error::Shape(format!(
                    "generator {k} has {} components for {} blocks",
                    tuple.len(),
                    shape.ell()
                )));
            }
            let comps = tuple
                .iter()
                .enumerate()
                .map(|(i, g)| g.rem(&shape.modulus(i)))
                .collect::<Result<Vec<_>>>()?;
            reduced.push(comps);
        }
        Ok(MTCode { shape, generators: reduced })
    }

    pub fn from_codes(shape: MTShape, generators: &[Vec<Vec<u32>>]) -> Result<Self> {
        let field = shape.field().clone();
        let gens = generators
            .iter()
            .map(|t| t.iter().map(|c| Poly::from_codes(&field, c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(shape, gens)
    }

    pub fn zero(shape: MTShape) -> Self {
        MTCode { shape, generators: Vec::new() }
    }

    pub fn shape(&self) -> &MTShape {
        &self.shape
    }

    pub fn field(&self) -> &Field {
        self.shape.field()
    }

    pub fn generators(&self) -> &[Vec<Poly>] {
        &self.generators
    }

    pub fn rho(&self) -> usize {
        self.generators.len()
    }

    /// The code generated by these tuples plus one more.
    pub fn with_generator(&self, tuple: Vec<Poly>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.push(tuple);
        Self::new(self.shape.clone(), gens)
    }

    /// Concatenated coefficient vector of generator `k`.
    pub fn generator_vector(&self, k: usize) -> Vec<FieldElement> {
        let mut v = Vec::with_capacity(self.shape.n());
        for (i, g) in self.generators[k].iter().enumerate() {
            let mut block = g.coeffs().to_vec();
            block.resize(self.shape.m(i), FieldElement::ZERO);
            v.extend(block);
        }
        v
    }

    /// The `F_q`-span of all shifts `x^j g_k`, as an explicit linear code.
    pub fn expand(&self) -> LinearCode {
        let n = self.shape.n();
        let mut m = MatrixFq::zeros(self.field(), 0, n);
        for k in 0..self.rho() {
            let mut v = self.generator_vector(k);
            for _ in 0..n {
                m.push_row(&v).expect("length n");
                v = twist_shift(&v, &self.shape).expect("length n");
            }
        }
        LinearCode::from_generator_matrix(&m)
    }

    /// Constituent `i`: the constacyclic code generated by
    /// `gcd(x^{m_i} - lambda_i, pi_i(g_1), ..., pi_i(g_rho))`.
    pub fn project(&self, i: usize) -> Result<ConstituentCode> {
        self.shape.check_index(i)?;
        let modulus = self.shape.modulus(i);
        let gen_poly = Poly::gcd_all(
            std::iter::once(&modulus).chain(self.generators.iter().map(|t| &t[i])),
        )?;
        ConstituentCode::new(self.field(), i, self.shape.lambda(i), self.shape.m(i), gen_poly)
    }

    pub fn constituents(&self) -> Result<Vec<ConstituentCode>> {
        (0..self.shape.ell()).map(|i| self.project(i)).collect()
    }
}

/// Hamming distance of a code; the zero code has no nonzero codeword.
/// `Infinite` orders above every finite distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// A linear code stored as its RREF basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCode {
    basis: MatrixFq,
}

impl LinearCode {
    pub fn from_generator_matrix(m: &MatrixFq) -> Self {
        LinearCode { basis: m.row_basis() }
    }

    pub fn zero(field: &Field, n: usize) -> Self {
        LinearCode { basis: MatrixFq::zeros(field, 0, n) }
    }

    pub fn full(field: &Field, n: usize) -> Self {
        LinearCode { basis: MatrixFq::identity(field, n) }
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn n(&self) -> usize {
        self.basis.cols()
    }

    pub fn dimension(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &MatrixFq {
        &self.basis
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode { basis: self.basis.null_space() }
    }

    /// `C ∩ C^⊥`: vectors orthogonal to both a basis of `C` and a basis of `C^⊥`.
    pub fn hull(&self) -> LinearCode {
        let dual = self.dual();
        let stacked = self.basis.stack(dual.basis()).expect("same length");
        LinearCode { basis: stacked.null_space() }
    }

    /// LCD test by the hull dimension.
    pub fn is_lcd(&self) -> bool {
        self.hull().dimension() == 0
    }

    pub fn contains(&self, other: &LinearCode) -> Result<bool> {
        self.basis.row_space_contains(&other.basis)
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> Result<bool> {
        self.basis.contains_vector(v)
    }

    /// Image under the coordinate projection onto `range`.
    pub fn project_coordinates(&self, range: Range<usize>) -> LinearCode {
        let f = self.field();
        let mut m = MatrixFq::zeros(f, 0, range.len());
        for row in self.basis.row_iter() {
            m.push_row(&row[range.clone()]).expect("range length");
        }
        LinearCode::from_generator_matrix(&m)
    }

    /// Number of codewords, `None` on overflow.
    pub fn size(&self) -> Option<u128> {
        (self.field().order() as u128).checked_pow(self.dimension() as u32)
    }

    /// Minimum Hamming weight over all nonzero codewords, by full enumeration.
    ///
    /// Codewords are visited in odometer order over the message digits, so each
    /// step adds a scalar multiple of one basis row to the running codeword.
    pub fn min_distance(&self, cap: u64) -> Result<Distance> {
        let f = self.field();
        let q = f.order() as u64;
        let k = self.dimension();
        if k == 0 {
            return Ok(Distance::Infinite);
        }
        match self.size() {
            Some(s) if s <= cap as u128 => {}
            _ => return Err(Error::TooLargeToEnumerate { q, k, cap }),
        }
        let n = self.n();
        let elems: Vec<FieldElement> = f.elements().collect();
        // steps[t] = elems[(t+1) % q] - elems[t]
        let steps: Vec<FieldElement> =
            (0..elems.len()).map(|t| f.sub(elems[(t + 1) % elems.len()], elems[t])).collect();
        let mut digits = vec![0usize; k];
        let mut word = vec![FieldElement::ZERO; n];
        let mut best = n;
        loop {
            let mut i = 0;
            loop {
                let t = digits[i];
                let row = self.basis.row(i);
                let s = steps[t];
                for (w, &b) in word.iter_mut().zip(row) {
                    *w = f.add(*w, f.mul(s, b));
                }
                digits[i] = (t + 1) % elems.len();
                if digits[i] != 0 {
                    break;
                }
                i += 1;
                if i == k {
                    return Ok(Distance::Finite(best));
                }
            }
            let wt = word.iter().filter(|c| !c.is_zero()).count();
            if wt < best {
                best = wt;
            }
        }
    }
}

/// The `lambda`-constacyclic code of length `m` generated by a monic divisor of `x^m - lambda`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstituentCode {
    field: Field,
    index: usize,
    lambda: FieldElement,
    m: usize,
    gen_poly: Poly,
}

impl ConstituentCode {
    pub fn new(field: &Field, index: usize, lambda: FieldElement, m: usize, gen_poly: Poly) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroLambda { block: index });
        }
        let modulus = Poly::twist_modulus(field, m, lambda);
        if gen_poly.is_zero() || !gen_poly.divides(&modulus)? {
            return Err(Error::NotADivisor);
        }
        Ok(ConstituentCode { field: field.clone(), index, lambda, m, gen_poly: gen_poly.monic() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn gen_poly(&self) -> &Poly {
        &self.gen_poly
    }

    pub fn modulus(&self) -> Poly {
        Poly::twist_modulus(&self.field, self.m, self.lambda)
    }

    /// `(x^m - lambda) / g`
    pub fn cofactor(&self) -> Result<Poly> {
        self.modulus().exact_div(&self.gen_poly)?.ok_or_else(|| {
            Error::InternalInvariantViolation("generator does not divide its modulus".into())
        })
    }

    pub fn dimension(&self) -> usize {
        self.m - self.gen_poly.degree().expect("nonzero generator")
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    /// Rows `x^j g(x)` for `0 <= j < m - deg g`.
    pub fn generator_matrix(&self) -> MatrixFq {
        let mut g = MatrixFq::zeros(&self.field, 0, self.m);
        for j in 0..self.dimension() {
            g.push_row(&self.gen_poly.shift(j).to_dense(self.m)).expect("degree below m");
        }
        g
    }

    pub fn expand(&self) -> LinearCode {
        LinearCode::from_generator_matrix(&self.generator_matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u32) -> Field {
        Field::of_order(q).unwrap()
    }

    fn cyclic(q: u32, m: usize, g: &[u32]) -> MTCode {
        let shape = MTShape::from_codes(&f(q), &[1], &[m]).unwrap();
        MTCode::from_codes(shape, &[vec![g.to_vec()]]).unwrap()
    }

    fn codes(v: &[FieldElement]) -> Vec<u32> {
        v.iter().map(|c| c.code()).collect()
    }

    #[test]
    fn twist_shift_examples() {
        let s = MTShape::from_codes(&f(2), &[1], &[3]).unwrap();
        let v: Vec<_> = [1, 0, 0].iter().map(|&c| f(2).element(c).unwrap()).collect();
        assert_eq!(codes(&twist_shift(&v, &s).unwrap()), vec![0, 1, 0]);

        let s = MTShape::from_codes(&f(3), &[2], &[2]).unwrap();
        let v = vec![FieldElement::ZERO, FieldElement::ONE];
        assert_eq!(codes(&twist_shift(&v, &s).unwrap()), vec![2, 0]);
        let z = vec![FieldElement::ZERO; 2];
        assert_eq!(twist_shift(&z, &s).unwrap(), z);
        assert!(twist_shift(&z[..1], &s).is_err());
    }

    #[test]
    fn shape_validation() {
        let f2 = f(2);
        assert_eq!(MTShape::from_codes(&f2, &[0], &[3]).unwrap_err(), Error::ZeroLambda { block: 0 });
        assert!(MTShape::from_codes(&f2, &[1, 1], &[3]).is_err());
        assert!(MTShape::from_codes(&f2, &[1], &[0]).is_err());
        assert!(MTShape::from_codes(&f2, &[], &[]).is_err());
    }

    #[test]
    fn expand_examples() {
        let s = MTShape::from_codes(&f(2), &[1], &[3]).unwrap();
        assert_eq!(MTCode::zero(s).expand().dimension(), 0);
        let even = cyclic(2, 3, &[1, 1]).expand();
        assert_eq!(even.dimension(), 2);
        assert_eq!(even.min_distance(DEFAULT_MAX_ENUM).unwrap(), Distance::Finite(2));
    }

    #[test]
    fn generator_components_are_reduced() {
        // x^3 = 1 in F_2[x]/(x^3 - 1)
        let c = cyclic(2, 3, &[1, 0, 0, 1]);
        assert!(c.generators()[0][0].is_zero());
    }

    #[test]
    fn duals_and_hulls() {
        let f2 = f(2);
        assert_eq!(LinearCode::zero(&f2, 4).dual().dimension(), 4);
        assert_eq!(LinearCode::full(&f2, 4).dual().dimension(), 0);
        let even = cyclic(2, 3, &[1, 1]).expand();
        let rep = MatrixFq::from_codes(&f2, &[&[1, 1, 1]]).unwrap();
        assert!(even.dual().basis().row_space_equal(&rep).unwrap());
        let rep = LinearCode::from_generator_matrix(&rep);
        assert_eq!(rep.hull().dimension(), 0);
        let pair = LinearCode::from_generator_matrix(&MatrixFq::from_codes(&f2, &[&[1, 1]]).unwrap());
        assert_eq!(pair.hull(), pair);
        assert!(!pair.is_lcd());
        assert!(LinearCode::zero(&f2, 3).is_lcd());
    }

    #[test]
    fn repetition_and_hamming() {
        // (x^7 + 1) / (x + 1)
        let rep = cyclic(2, 7, &[1, 1, 1, 1, 1, 1, 1]).expand();
        assert_eq!(rep.dimension(), 1);
        assert_eq!(rep.min_distance(DEFAULT_MAX_ENUM).unwrap(), Distance::Finite(7));
        assert!(rep.is_lcd());
        let ham = cyclic(2, 7, &[1, 1, 0, 1]).expand();
        assert_eq!(ham.dimension(), 4);
        assert_eq!(ham.min_distance(DEFAULT_MAX_ENUM).unwrap(), Distance::Finite(3));
        assert!(!ham.is_lcd());
        assert_eq!(
            ham.min_distance(15).unwrap_err(),
            Error::TooLargeToEnumerate { q: 2, k: 4, cap: 15 }
        );
        assert_eq!(LinearCode::zero(&f(2), 3).min_distance(1).unwrap(), Distance::Infinite);
    }

    #[test]
    fn min_distance_over_extension_field_matches_naive() {
        let f4 = f(4);
        let m = MatrixFq::from_codes(&f4, &[&[1, 2, 0, 3], &[0, 1, 1, 1]]).unwrap();
        let code = LinearCode::from_generator_matrix(&m);
        let mut best = usize::MAX;
        for a in f4.elements() {
            for b in f4.elements() {
                if a.is_zero() && b.is_zero() {
                    continue;
                }
                let w = (0..4)
                    .filter(|&c| !f4.add(f4.mul(a, m.get(0, c)), f4.mul(b, m.get(1, c))).is_zero())
                    .count();
                best = best.min(w);
            }
        }
        assert_eq!(code.min_distance(DEFAULT_MAX_ENUM).unwrap(), Distance::Finite(best));
    }

    #[test]
    fn projection_examples() {
        let f2 = f(2);
        let shape = MTShape::from_codes(&f2, &[1, 1], &[3, 2]).unwrap();
        let code = MTCode::from_codes(shape.clone(), &[vec![vec![1, 1, 1], vec![1, 1]]]).unwrap();
        assert_eq!(code.project(0).unwrap().gen_poly(), &Poly::from_codes(&f2, &[1, 1, 1]).unwrap());
        assert_eq!(code.project(1).unwrap().gen_poly(), &Poly::from_codes(&f2, &[1, 1]).unwrap());
        assert!(code.project(2).is_err());
        let zero = MTCode::zero(shape);
        assert_eq!(zero.project(0).unwrap().gen_poly(), &zero.shape().modulus(0));
    }

    #[test]
    fn constituent_examples() {
        let f2 = f(2);
        let one = f2.one();
        let modulus = Poly::twist_modulus(&f2, 5, one);
        let zero = ConstituentCode::new(&f2, 0, one, 5, modulus).unwrap();
        assert_eq!(zero.expand().dimension(), 0);
        let full = ConstituentCode::new(&f2, 0, one, 5, Poly::one(&f2)).unwrap();
        assert_eq!(full.expand().dimension(), 5);
        let g = Poly::from_codes(&f2, &[1, 1, 0, 1]).unwrap();
        let ham = ConstituentCode::new(&f2, 0, one, 7, g).unwrap();
        assert_eq!(ham.expand().dimension(), 4);
        assert_eq!(ham.expand().min_distance(DEFAULT_MAX_ENUM).unwrap(), Distance::Finite(3));
        let bad = Poly::from_codes(&f2, &[1, 0, 1]).unwrap();
        assert_eq!(ConstituentCode::new(&f2, 0, one, 7, bad).unwrap_err(), Error::NotADivisor);
    }

    #[test]
    fn distance_ordering() {
        assert!(Distance::Finite(100) < Distance::Infinite);
        assert_eq!([Distance::Infinite, Distance::Finite(3)].iter().min(), Some(&Distance::Finite(3)));
    }
}
