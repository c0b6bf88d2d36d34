//! Finite fields `F_q`, `q = p^e`, with table-driven arithmetic.
//!
//! Elements are encoded as integers in `[0, q)`: the base-`p` digits of the
//! code are the coefficients (ascending) of the residue polynomial modulo the
//! defining irreducible. For prime fields the code is the residue itself.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order accepted unless a caller raises the cap.
pub const DEFAULT_MAX_Q: u32 = 256;

/// An element of some [`Field`], stored by its canonical code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn code(self) -> u32 {
        self.0 as u32
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    e: u32,
    q: u32,
    /// Monic irreducible over F_p, ascending, length e + 1. `[0, 1]` for prime fields.
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// Handle to a finite field. Cheap to clone; equality compares `p` and the modulus.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.e == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{}[modulus={:?}]", self.inner.q, self.inner.modulus)
        }
    }
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::build(p, None, DEFAULT_MAX_Q)
    }

    /// `F_{p^e}` defined by an explicit monic irreducible `modulus` over `F_p`
    /// (ascending coefficients, degree `e = modulus.len() - 1`).
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        Self::build(p, Some(modulus), DEFAULT_MAX_Q)
    }

    /// Field of order `q` using the default modulus for proper prime powers.
    pub fn of_order(q: u32) -> Result<Self> {
        Self::of_order_capped(q, DEFAULT_MAX_Q)
    }

    pub fn of_order_capped(q: u32, max_q: u32) -> Result<Self> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        if e == 1 {
            return Self::build(p, None, max_q);
        }
        let modulus = default_modulus(p, e);
        Self::build(p, Some(&modulus), max_q)
    }

    /// Field of order `q` with an optional modulus; the modulus is required to
    /// be absent (or the trivial `[0, 1]`) exactly when `q` is prime.
    pub fn from_parts(q: u32, modulus: Option<&[u32]>, max_q: u32) -> Result<Self> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        match modulus {
            None => Self::of_order_capped(q, max_q),
            Some(m) => {
                if m.len() as u32 != e + 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus of degree {} does not define a field of order {q}",
                        m.len().saturating_sub(1)
                    )));
                }
                if e == 1 {
                    Self::build(p, None, max_q)
                } else {
                    Self::build(p, Some(m), max_q)
                }
            }
        }
    }

    fn build(p: u32, modulus: Option<&[u32]>, max_q: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("characteristic {p} is not prime")));
        }
        let modulus: Vec<u32> = match modulus {
            None => vec![0, 1],
            Some(m) => m.to_vec(),
        };
        let e = (modulus.len() as u32)
            .checked_sub(1)
            .filter(|&e| e >= 1)
            .ok_or_else(|| Error::InvalidField("modulus must have degree at least 1".into()))?;
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!("modulus coefficients must lie in [0, {p})")));
        }
        if modulus[e as usize] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        let q = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if q > max_q as u64 {
            return Err(Error::InvalidField(format!("order {q} exceeds the cap {max_q}")));
        }
        let q = q as u32;
        if e > 1 && !fp_is_irreducible(p, &modulus) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:?} is reducible over F_{p}"
            )));
        }
        Ok(Field { inner: Arc::new(Tables::new(p, e, q, modulus)) })
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.e
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    /// Defining polynomial over `F_p`, `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        (self.inner.e > 1).then_some(self.inner.modulus.as_slice())
    }

    pub fn element(&self, code: u32) -> Result<FieldElement> {
        if code < self.inner.q {
            Ok(FieldElement(code as u16))
        } else {
            Err(Error::InvalidField(format!(
                "code {code} is not an element of F_{}",
                self.inner.q
            )))
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(|c| FieldElement(c as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.inner.q).map(|c| FieldElement(c as u16))
    }

    #[inline]
    fn idx(&self, a: FieldElement, b: FieldElement) -> usize {
        a.0 as usize * self.inner.q as usize + b.0 as usize
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.inner.add[self.idx(a, b)])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.inner.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.inner.mul[self.idx(a, b)])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement(self.inner.inv[a.0 as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl Tables {
    fn new(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> Self {
        let qs = q as usize;
        let digits: Vec<Vec<u32>> = (0..q).map(|c| to_digits(c, p, e)).collect();
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                let sum: Vec<u32> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * qs + b] = from_digits(&sum, p) as u16;
                mul[a * qs + b] = from_digits(&fp_mulmod(p, &digits[a], &digits[b], &modulus), p) as u16;
            }
        }
        let neg = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u16)
            .collect();
        let inv = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u16
                }
            })
            .collect();
        Tables { p, e, q, modulus, add, mul, neg, inv }
    }
}

fn to_digits(mut c: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// `a * b mod modulus` over F_p; `a`, `b` have length `e`, result has length `e`.
fn fp_mulmod(p: u32, a: &[u32], b: &[u32], modulus: &[u32]) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for top in (e..prod.len()).rev() {
        let c = prod[top];
        if c != 0 {
            // modulus is monic: subtract c * x^(top-e) * modulus
            for (k, &mk) in modulus.iter().enumerate() {
                let i = top - e + k;
                prod[i] = (prod[i] + p * p - (c * mk) % p) % p;
            }
        }
    }
    prod.truncate(e);
    prod.resize(e, 0);
    prod
}

/// Remainder of `f` modulo the monic `g` over F_p (both ascending).
fn fp_rem(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    let dg = g.len() - 1;
    let mut r = f.to_vec();
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if c != 0 {
            for (k, &gk) in g.iter().enumerate() {
                r[shift + k] = (r[shift + k] + p - (c * gk) % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Exhaustive search for a monic factor of degree `1..=deg/2`.
fn fp_is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut g = to_digits(low, p, d as u32);
            g.push(1);
            if fp_rem(p, f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `e` over F_p when the lower coefficients
/// are read as a base-`p` number (constant term least significant).
pub fn default_modulus(p: u32, e: u32) -> Vec<u32> {
    (0..p.pow(e))
        .map(|low| {
            let mut f = to_digits(low, p, e);
            f.push(1);
            f
        })
        .find(|f| fp_is_irreducible(p, f))
        .expect("irreducible polynomials exist in every degree")
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Decomposes `q = p^e` with `p` prime.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}
