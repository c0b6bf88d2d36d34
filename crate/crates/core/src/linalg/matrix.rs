use std::fmt;

use crate::algebra::{Field, FieldElement};
use crate::error::{Error, Result};

/// Dense row-major matrix over `F_q`.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixFq {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl MatrixFq {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        MatrixFq { field: field.clone(), rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has length {} instead of {cols}", r.len())));
            }
            data.extend_from_slice(r);
        }
        Ok(MatrixFq { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn from_codes(field: &Field, rows: &[&[u32]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&c| field.element(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[FieldElement]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn push_row(&mut self, row: &[FieldElement]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Shape(format!("row of length {} for {} columns", row.len(), self.cols)));
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &MatrixFq) -> Result<MatrixFq> {
        self.compatible(other)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(MatrixFq { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    fn compatible(&self, other: &MatrixFq) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::Shape(format!("{} columns vs {} columns", self.cols, other.cols)));
        }
        Ok(())
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &MatrixFq) -> Result<MatrixFq> {
        self.compatible(other)?;
        let f = &self.field;
        let mut out = MatrixFq::zeros(f, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let dot = dot(f, self.row(i), other.row(j));
                out.set(i, j, dot);
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Reduced row-echelon form and rank. Zero rows are kept at the bottom.
    pub fn rref(&self) -> (MatrixFq, usize) {
        let f = &self.field;
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = f.inv(m.get(rank, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = f.mul(m.get(rank, c), inv);
                m.set(rank, c, v);
            }
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(rank, c)));
                    m.set(r, c, v);
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// RREF with zero rows removed: a canonical basis of the row space.
    pub fn row_basis(&self) -> MatrixFq {
        let (m, rank) = self.rref();
        MatrixFq {
            field: m.field,
            rows: rank,
            cols: m.cols,
            data: m.data[..rank * m.cols].to_vec(),
        }
    }

    /// RREF basis of `{v : M v^T = 0}`.
    pub fn null_space(&self) -> MatrixFq {
        let f = &self.field;
        let (r, rank) = self.rref();
        let mut pivots = Vec::with_capacity(rank);
        for row in 0..rank {
            let col = (0..r.cols).find(|&c| !r.get(row, c).is_zero()).unwrap();
            pivots.push(col);
        }
        let mut basis = MatrixFq::zeros(f, 0, self.cols);
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![FieldElement::ZERO; self.cols];
            v[free] = FieldElement::ONE;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            basis.push_row(&v).expect("row length matches");
        }
        basis.row_basis()
    }

    pub fn row_space_equal(&self, other: &MatrixFq) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.row_basis() == other.row_basis())
    }

    /// True when every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &MatrixFq) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.stack(other)?.rank() == self.rank())
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> Result<bool> {
        let mut single = MatrixFq::zeros(&self.field, 0, self.cols);
        single.push_row(v)?;
        self.row_space_contains(&single)
    }
}

pub(crate) fn dot(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(FieldElement::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

impl fmt::Debug for MatrixFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixFq {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in self.row_iter() {
            let codes: Vec<u32> = r.iter().map(|c| c.code()).collect();
            writeln!(f, "  {codes:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = f2();
        let id = MatrixFq::identity(&f, 3);
        assert_eq!(id.rref(), (id.clone(), 3));
        let z = MatrixFq::zeros(&f, 2, 3);
        assert_eq!(z.rref(), (z.clone(), 0));
        let m = MatrixFq::from_codes(&f, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(r.rref().0, r);
    }

    #[test]
    fn null_space_examples() {
        let f = f2();
        let m = MatrixFq::from_codes(&f, &[&[1, 1]]).unwrap();
        assert_eq!(m.null_space(), MatrixFq::from_codes(&f, &[&[1, 1]]).unwrap());
        assert_eq!(MatrixFq::identity(&f, 4).null_space().rows(), 0);
    }

    #[test]
    fn null_space_of_repetition_matches_enumeration() {
        let f = f2();
        let rep = MatrixFq::from_codes(&f, &[&[1, 1, 1]]).unwrap();
        let ns = rep.null_space();
        assert_eq!(ns.rows(), 2);
        // brute force: all length-3 vectors orthogonal to 111
        let mut orth = MatrixFq::zeros(&f, 0, 3);
        for bits in 0u32..8 {
            let v: Vec<_> = (0..3).map(|i| f.element((bits >> i) & 1).unwrap()).collect();
            if dot(&f, &v, rep.row(0)).is_zero() {
                orth.push_row(&v).unwrap();
            }
        }
        assert_eq!(orth.rows(), 4);
        assert!(ns.row_space_equal(&orth).unwrap());
    }

    #[test]
    fn row_space_comparisons() {
        let f3 = Field::prime(3).unwrap();
        let a = MatrixFq::from_codes(&f3, &[&[1, 2, 0], &[0, 1, 1]]).unwrap();
        let permuted = MatrixFq::from_codes(&f3, &[&[0, 1, 1], &[1, 2, 0]]).unwrap();
        let scaled = MatrixFq::from_codes(&f3, &[&[2, 1, 0], &[0, 1, 1]]).unwrap();
        assert!(a.row_space_equal(&permuted).unwrap());
        assert!(a.row_space_equal(&scaled).unwrap());
        let f = f2();
        let x = MatrixFq::from_codes(&f, &[&[1, 1, 0]]).unwrap();
        let y = MatrixFq::from_codes(&f, &[&[0, 1, 1]]).unwrap();
        assert!(!x.row_space_equal(&y).unwrap());
        let short = MatrixFq::from_codes(&f, &[&[1, 1]]).unwrap();
        assert!(matches!(x.row_space_equal(&short), Err(Error::Shape(_))));
    }
}
