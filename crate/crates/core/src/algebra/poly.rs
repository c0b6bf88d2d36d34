//! Univariate polynomials over `F_q`.

use std::fmt;

use super::field::{Field, FieldElement};
use crate::error::{Error, Result};

/// Polynomial with ascending coefficients and no trailing zeros; the zero
/// polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    /// Builds a polynomial from element codes, rejecting codes outside `[0, q)`.
    pub fn from_codes(field: &Field, codes: &[u32]) -> Result<Self> {
        let coeffs = codes.iter().map(|&c| field.element(c)).collect::<Result<_>>()?;
        Ok(Self::new(field, coeffs))
    }

    pub fn zero(field: &Field) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, FieldElement::ONE)
    }

    pub fn constant(field: &Field, c: FieldElement) -> Self {
        Self::new(field, vec![c])
    }

    /// `c * x^k`
    pub fn monomial(field: &Field, c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    /// `x^m - lambda`
    pub fn twist_modulus(field: &Field, m: usize, lambda: FieldElement) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; m + 1];
        coeffs[m] = FieldElement::ONE;
        coeffs[0] = field.sub(coeffs[0], lambda);
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElement::ONE
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(FieldElement::ONE)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg(c)).collect();
        Poly::new(&self.field, coeffs)
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Poly::new(&self.field, coeffs)
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![FieldElement::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, out))
    }

    /// Euclidean division: `self = quot * divisor + rem` with `deg rem < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, lead_inv);
            quot[top - dd] = t;
            for (k, &b) in divisor.coeffs.iter().enumerate() {
                let i = top - dd + k;
                rem[i] = f.sub(rem[i], f.mul(t, b));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Quotient of an exact division, `None` when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divmod(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(self.field.inv(l).expect("leading coefficient is nonzero")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Folds [`Poly::gcd`] over a sequence, skipping zeros; errors when all are zero.
    pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Result<Poly> {
        let mut acc: Option<Poly> = None;
        for p in polys {
            acc = Some(match acc {
                None => p.clone(),
                Some(a) if a.is_zero() => p.clone(),
                Some(a) if p.is_zero() => a,
                Some(a) => a.gcd(p)?,
            });
        }
        match acc {
            Some(a) if !a.is_zero() => Ok(a.monic()),
            _ => Err(Error::UndefinedGcd),
        }
    }

    /// Monic normalization of `x^deg f * f(1/x)`; requires `f(0) != 0`.
    pub fn reciprocal(&self) -> Result<Poly> {
        match self.coeffs.first() {
            Some(c) if !c.is_zero() => {
                let rev: Vec<_> = self.coeffs.iter().rev().copied().collect();
                Ok(Poly::new(&self.field, rev).monic())
            }
            _ => Err(Error::ReciprocalUndefined),
        }
    }

    /// True when the monic reciprocal equals the monic normalization of `self`.
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(self.reciprocal()? == self.monic())
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Coefficient vector padded with zeros to `len` (truncates nothing; caller ensures fit).
    pub fn to_dense(&self, len: usize) -> Vec<FieldElement> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), FieldElement::ZERO);
        v
    }
}

impl fmt::Display for Poly {
    /// Human-readable form, e.g. `x^3 + 2x + 1`; coefficients print as element codes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if c.code() == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self} over {:?})", self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(field: &Field, codes: &[u32]) -> Poly {
        Poly::from_codes(field, codes).unwrap()
    }

    #[test]
    fn multiply_and_divide_over_f2() {
        let f2 = Field::prime(2).unwrap();
        let prod = p(&f2, &[1, 1]).mul(&p(&f2, &[1, 1, 1])).unwrap();
        assert_eq!(prod, p(&f2, &[1, 0, 0, 1]));
        let (q, r) = prod.divmod(&p(&f2, &[1, 1])).unwrap();
        assert_eq!(q, p(&f2, &[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn long_division_over_f3() {
        let f3 = Field::prime(3).unwrap();
        let a = p(&f3, &[1, 0, 1]);
        let b = p(&f3, &[1, 1]);
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q, p(&f3, &[2, 1]));
        assert_eq!(r, p(&f3, &[2]));
        assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        assert_eq!(p(&f2, &[1, 1]).divmod(&Poly::zero(&f2)), Err(Error::DivisionByZero));
        assert_eq!(p(&f2, &[1]).mul(&p(&f3, &[1])), Err(Error::FieldMismatch));
        assert_eq!(p(&f2, &[1]).add(&p(&f3, &[1])), Err(Error::FieldMismatch));
    }

    #[test]
    fn gcd_examples() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        let g = p(&f3, &[2, 0, 2]);
        assert_eq!(g.gcd(&Poly::zero(&f3)).unwrap(), p(&f3, &[1, 0, 1]));
        assert_eq!(
            p(&f2, &[1, 0, 0, 1]).gcd(&p(&f2, &[1, 1, 1])).unwrap(),
            p(&f2, &[1, 1, 1])
        );
        // x^4 - 1 and x^2 - 1 over F_3
        let g = p(&f3, &[2, 0, 0, 0, 1]).gcd(&p(&f3, &[2, 0, 1])).unwrap();
        assert_eq!(g, p(&f3, &[2, 0, 1]));
        assert!(g.divides(&p(&f3, &[2, 0, 0, 0, 1])).unwrap());
        assert_eq!(Poly::zero(&f2).gcd(&Poly::zero(&f2)), Err(Error::UndefinedGcd));
    }

    #[test]
    fn gcd_all_skips_zeros() {
        let f2 = Field::prime(2).unwrap();
        let polys = [Poly::zero(&f2), p(&f2, &[1, 0, 0, 1]), p(&f2, &[1, 1])];
        assert_eq!(Poly::gcd_all(&polys).unwrap(), p(&f2, &[1, 1]));
        assert_eq!(Poly::gcd_all(&[Poly::zero(&f2)]), Err(Error::UndefinedGcd));
    }

    #[test]
    fn reciprocals() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        assert_eq!(p(&f2, &[1, 1]).reciprocal().unwrap(), p(&f2, &[1, 1]));
        assert_eq!(p(&f2, &[1, 1, 0, 1]).reciprocal().unwrap(), p(&f2, &[1, 0, 1, 1]));
        let f = p(&f3, &[2, 1, 1]);
        let r = f.reciprocal().unwrap();
        assert_eq!(r, p(&f3, &[2, 2, 1]));
        assert_eq!(r.reciprocal().unwrap(), f);
        assert_eq!(p(&f2, &[0, 1]).reciprocal(), Err(Error::ReciprocalUndefined));
        assert_eq!(Poly::zero(&f2).reciprocal(), Err(Error::ReciprocalUndefined));
    }

    #[test]
    fn self_reciprocal_examples() {
        let f2 = Field::prime(2).unwrap();
        assert!(p(&f2, &[1, 1]).is_self_reciprocal().unwrap());
        let a = p(&f2, &[1, 1, 0, 1]);
        assert!(!a.is_self_reciprocal().unwrap());
        let prod = a.mul(&a.reciprocal().unwrap()).unwrap();
        assert_eq!(prod, p(&f2, &[1, 1, 1, 1, 1, 1, 1]));
        assert!(prod.is_self_reciprocal().unwrap());
    }

    #[test]
    fn twist_modulus_and_display() {
        let f3 = Field::prime(3).unwrap();
        let m = Poly::twist_modulus(&f3, 4, f3.element(1).unwrap());
        assert_eq!(m, p(&f3, &[2, 0, 0, 0, 1]));
        assert_eq!(m.to_string(), "x^4 + 2");
        assert_eq!(p(&f3, &[1, 2, 1]).to_string(), "x^2 + 2x + 1");
        assert_eq!(Poly::zero(&f3).degree(), None);
    }
}
