use itertools::Itertools;

use crate::algebra::{Field, FieldElement, Poly};
use crate::error::{Error, Result};

/// Dense row-major matrix over `F_q[x]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

/// Result of [`PolyMatrix::minors_gcd`]: the monic gcd (zero when every minor
/// vanishes) and how many minors were evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorsGcd {
    pub gcd: Poly,
    pub count: u128,
}

/// Triangular basis of a row module together with the row operations that produced it.
#[derive(Clone, Debug)]
pub struct Hnf {
    /// Upper-triangular `cols x cols` basis with monic diagonal.
    pub basis: PolyMatrix,
    /// `transform * input = basis`.
    pub transform: PolyMatrix,
}

/// Above this size determinants switch from cofactor expansion to Bareiss elimination.
const COFACTOR_MAX: usize = 4;

impl PolyMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        PolyMatrix { field: field.clone(), rows, cols, entries: vec![Poly::zero(field); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(field));
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries instead of {cols}", r.len())));
            }
            if r.iter().any(|p| p.field() != field) {
                return Err(Error::FieldMismatch);
            }
            entries.extend(r);
        }
        Ok(PolyMatrix { field: field.clone(), rows: n, cols, entries })
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

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Poly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Poly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        PolyMatrix { field: self.field.clone(), rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.field);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j))?)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn diagonal(&self) -> Vec<Poly> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols.min(r)).all(|c| self.get(r, c).is_zero()))
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows == self.cols {
            Ok(self.rows)
        } else {
            Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)))
        }
    }

    /// Exact determinant; cofactor expansion for small sizes, Bareiss elimination above.
    pub fn det(&self) -> Result<Poly> {
        let n = self.require_square()?;
        if n <= COFACTOR_MAX {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> Result<Poly> {
        let n = self.require_square()?;
        let idx: Vec<usize> = (0..n).collect();
        self.cofactor_rec(&idx, &idx)
    }

    fn cofactor_rec(&self, rows: &[usize], cols: &[usize]) -> Result<Poly> {
        match rows.len() {
            0 => return Ok(Poly::one(&self.field)),
            1 => return Ok(self.get(rows[0], cols[0]).clone()),
            2 => {
                let a = self.get(rows[0], cols[0]).mul(self.get(rows[1], cols[1]))?;
                let b = self.get(rows[0], cols[1]).mul(self.get(rows[1], cols[0]))?;
                return a.sub(&b);
            }
            _ => {}
        }
        let mut acc = Poly::zero(&self.field);
        for (k, &c) in cols.iter().enumerate() {
            let entry = self.get(rows[0], c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry.mul(&self.cofactor_rec(&rows[1..], &rest)?)?;
            acc = if k % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
        }
        Ok(acc)
    }

    /// Fraction-free Gaussian elimination; every division is exact.
    pub fn det_bareiss(&self) -> Result<Poly> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Poly::one(&self.field));
        }
        let mut m: Vec<Vec<Poly>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut negate = false;
        let mut prev = Poly::one(&self.field);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(Poly::zero(&self.field));
                };
                m.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].mul(&m[k][k])?.sub(&m[i][k].mul(&m[k][j])?)?;
                    m[i][j] = num.exact_div(&prev)?.ok_or_else(|| {
                        Error::InternalInvariantViolation("inexact Bareiss division".into())
                    })?;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Monic gcd of all `k x k` minors, refusing to enumerate more than `cap` of them.
    pub fn minors_gcd(&self, k: usize, cap: u64) -> Result<MinorsGcd> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::Shape(format!(
                "minor size {k} outside 1..={}",
                self.rows.min(self.cols)
            )));
        }
        let count = binomial(self.rows, k).saturating_mul(binomial(self.cols, k));
        if count > cap as u128 {
            return Err(Error::TooManyMinors { count, cap });
        }
        let mut gcd = Poly::zero(&self.field);
        for rows in (0..self.rows).combinations(k) {
            for cols in (0..self.cols).combinations(k) {
                let minor = self.submatrix(&rows, &cols).det()?;
                if minor.is_zero() {
                    continue;
                }
                gcd = if gcd.is_zero() { minor.monic() } else { gcd.gcd(&minor)? };
            }
        }
        Ok(MinorsGcd { gcd, count })
    }

    /// Upper-triangular basis of the row module; see [`PolyMatrix::hnf`].
    pub fn hnf_triangularize(&self) -> Result<PolyMatrix> {
        Ok(self.hnf()?.basis)
    }

    /// Hermite-style triangularization of the row module over `F_q[x]`.
    ///
    /// Columns are processed left to right. Within a column the active row with
    /// the lowest-degree entry (earliest row on ties) reduces the others until a
    /// single nonzero entry remains; it is made monic and the entries above it
    /// are reduced modulo it. Fails with `RankDeficient` when a column has no
    /// available pivot.
    pub fn hnf(&self) -> Result<Hnf> {
        let f = &self.field;
        let mut work: Vec<Vec<Poly>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut trans: Vec<Vec<Poly>> =
            (0..self.rows).map(|r| PolyMatrix::identity(f, self.rows).row(r).to_vec()).collect();
        let mut used = vec![false; self.rows];
        let mut pivots: Vec<usize> = Vec::with_capacity(self.cols);

        for col in 0..self.cols {
            let pivot = loop {
                let candidates: Vec<usize> =
                    (0..self.rows).filter(|&r| !used[r] && !work[r][col].is_zero()).collect();
                let Some(&pivot) = candidates.iter().min_by_key(|&&r| (work[r][col].degree(), r))
                else {
                    return Err(Error::RankDeficient { column: col });
                };
                if candidates.len() == 1 {
                    break pivot;
                }
                for &r in candidates.iter().filter(|&&r| r != pivot) {
                    let q = work[r][col].divmod(&work[pivot][col])?.0;
                    sub_multiple(&mut work, r, pivot, &q)?;
                    sub_multiple(&mut trans, r, pivot, &q)?;
                }
            };
            let lead = work[pivot][col].leading().expect("pivot entry is nonzero");
            let inv = f.inv(lead)?;
            scale_row(&mut work[pivot], inv);
            scale_row(&mut trans[pivot], inv);
            for &above in &pivots {
                let q = work[above][col].divmod(&work[pivot][col])?.0;
                if !q.is_zero() {
                    sub_multiple(&mut work, above, pivot, &q)?;
                    sub_multiple(&mut trans, above, pivot, &q)?;
                }
            }
            used[pivot] = true;
            pivots.push(pivot);
        }

        let basis = PolyMatrix::from_rows(f, self.cols, pivots.iter().map(|&r| work[r].clone()).collect())?;
        let transform =
            PolyMatrix::from_rows(f, self.rows, pivots.iter().map(|&r| trans[r].clone()).collect())?;
        Ok(Hnf { basis, transform })
    }

    /// Reduces a row vector against an upper-triangular basis with monic
    /// diagonal; returns the leftover (zero iff the row lies in the module).
    pub fn reduce_against_triangular(&self, row: &[Poly]) -> Result<Vec<Poly>> {
        let mut v = row.to_vec();
        for (i, d) in self.diagonal().iter().enumerate() {
            let q = v[i].divmod(d)?.0;
            if q.is_zero() {
                continue;
            }
            for (c, vc) in v.iter_mut().enumerate() {
                *vc = vc.sub(&q.mul(self.get(i, c))?)?;
            }
        }
        Ok(v)
    }
}

fn sub_multiple(rows: &mut [Vec<Poly>], target: usize, source: usize, q: &Poly) -> Result<()> {
    for c in 0..rows[target].len() {
        let t = q.mul(&rows[source][c])?;
        rows[target][c] = rows[target][c].sub(&t)?;
    }
    Ok(())
}

fn scale_row(row: &mut [Poly], c: FieldElement) {
    for p in row.iter_mut() {
        *p = p.scale(c);
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &Field, c: &[u32]) -> Poly {
        Poly::from_codes(f, c).unwrap()
    }

    fn mat(f: &Field, rows: &[&[&[u32]]]) -> PolyMatrix {
        let cols = rows[0].len();
        let rows = rows.iter().map(|r| r.iter().map(|c| p(f, c)).collect()).collect();
        PolyMatrix::from_rows(f, cols, rows).unwrap()
    }

    #[test]
    fn det_examples() {
        let f2 = Field::prime(2).unwrap();
        let d = mat(&f2, &[&[&[1, 1], &[]], &[&[], &[1, 0, 1]]]);
        assert_eq!(d.det().unwrap(), p(&f2, &[1, 1, 1, 1]));
        let zero_row = mat(&f2, &[&[&[1, 1], &[1]], &[&[], &[]]]);
        assert!(zero_row.det().unwrap().is_zero());

        let f3 = Field::prime(3).unwrap();
        let m = mat(&f3, &[&[&[0, 1], &[1]], &[&[1], &[0, 1]]]);
        let det = m.det().unwrap();
        assert_eq!(det, p(&f3, &[2, 0, 1]));
        // evaluation cross-check: det(M(a)) over F_3 at each point
        for a in f3.elements() {
            let ev = f3.sub(f3.mul(a, a), f3.one());
            assert_eq!(det.eval(a), ev);
        }
    }

    #[test]
    fn det_non_square_is_shape_error() {
        let f2 = Field::prime(2).unwrap();
        let m = PolyMatrix::zeros(&f2, 2, 3);
        assert!(matches!(m.det(), Err(Error::Shape(_))));
    }

    #[test]
    fn bareiss_matches_cofactor_on_five_by_five() {
        let f3 = Field::prime(3).unwrap();
        let mut m = PolyMatrix::zeros(&f3, 5, 5);
        let mut seed = 7u32;
        for r in 0..5 {
            for c in 0..5 {
                seed = seed.wrapping_mul(1103515245).wrapping_add(12345);
                let codes: Vec<u32> = (0..3).map(|i| (seed >> (8 + 3 * i)) % 3).collect();
                m.set(r, c, p(&f3, &codes));
            }
        }
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
        // with a zero leading pivot to force a swap
        m.set(0, 0, Poly::zero(&f3));
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
        assert_eq!(m.det().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn minors_gcd_examples() {
        let f2 = Field::prime(2).unwrap();
        let col = mat(&f2, &[&[&[1, 1]], &[&[1, 0, 0, 1]]]);
        assert_eq!(col.minors_gcd(1, 100).unwrap().gcd, p(&f2, &[1, 1]));

        let stacked = mat(
            &f2,
            &[&[&[0, 1], &[]], &[&[], &[1, 1, 1]], &[&[], &[]], &[&[], &[]]],
        );
        let res = stacked.minors_gcd(2, 100).unwrap();
        assert_eq!(res.gcd, p(&f2, &[0, 1, 1, 1]));
        assert_eq!(res.count, 6);
        assert!(matches!(stacked.minors_gcd(3, 100), Err(Error::Shape(_))));
        assert!(matches!(stacked.minors_gcd(2, 5), Err(Error::TooManyMinors { count: 6, cap: 5 })));
    }

    #[test]
    fn hnf_single_column_is_gcd() {
        let f2 = Field::prime(2).unwrap();
        let m = mat(&f2, &[&[&[1, 1]], &[&[1, 0, 0, 1]]]);
        assert_eq!(m.hnf_triangularize().unwrap(), mat(&f2, &[&[&[1, 1]]]));
    }

    #[test]
    fn hnf_keeps_a_diagonal_module() {
        let f2 = Field::prime(2).unwrap();
        let m = mat(&f2, &[&[&[1, 0, 0, 1], &[]], &[&[], &[1, 0, 1]]]);
        assert_eq!(m.hnf_triangularize().unwrap(), m);
    }

    #[test]
    fn hnf_rank_deficient() {
        let f2 = Field::prime(2).unwrap();
        let m = mat(&f2, &[&[&[1], &[]], &[&[1, 1], &[]]]);
        assert_eq!(m.hnf().unwrap_err(), Error::RankDeficient { column: 1 });
    }

    #[test]
    fn hnf_two_columns_mutual_reduction() {
        let f3 = Field::prime(3).unwrap();
        let m = mat(
            &f3,
            &[
                &[&[1, 2, 1], &[2, 0, 1]],
                &[&[0, 1], &[1, 1]],
                &[&[2, 0, 0, 1], &[]],
                &[&[], &[1, 0, 0, 0, 1]],
            ],
        );
        let h = m.hnf().unwrap();
        assert!(h.basis.is_upper_triangular());
        assert!(h.basis.diagonal().iter().all(Poly::is_monic));
        assert_eq!(h.transform.mul(&m).unwrap(), h.basis);
        for r in 0..m.rows() {
            let left = h.basis.reduce_against_triangular(m.row(r)).unwrap();
            assert!(left.iter().all(Poly::is_zero));
        }
        let det = h.basis.det().unwrap();
        assert_eq!(det.degree(), m.minors_gcd(2, 100).unwrap().gcd.degree());
        // off-diagonal entries reduced modulo the diagonal of their column
        let d1 = &h.basis.diagonal()[1];
        assert!(h.basis.get(0, 1).degree() < d1.degree());
    }
}
