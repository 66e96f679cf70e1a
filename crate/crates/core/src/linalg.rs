//! Exact rank and kernel computations over the rationals.
//!
//! Ranks run fraction-free (Bareiss) elimination on denominator-cleared
//! integer matrices and report how many scalar multiplications they spent,
//! so higher layers can compare the cost of competing certificates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: Vec<Vec<BigInt>>) -> Self {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigRational::from_integer).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn with_appended_row(&self, row: &[Scalar]) -> Result<Matrix> {
        if row.len() != self.cols && self.rows > 0 {
            return Err(Error::DimensionError {
                got: row.len(),
                expected: self.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(row);
        Ok(Matrix {
            rows: self.rows + 1,
            cols: if self.rows == 0 { row.len() } else { self.cols },
            entries,
        })
    }

    /// Matrix-vector product, exact.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionError {
                got: v.len(),
                expected: self.cols,
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Row-wise denominator clearing; scaling rows by nonzero rationals
    /// leaves the rank unchanged.
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
            })
            .collect()
    }
}

/// Counter of scalar operations spent inside one elimination.
/// Exact divisions are counted as multiplications.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub multiplications: u64,
    pub elimination_steps: u64,
}

impl OpCounter {
    pub fn absorb(&mut self, other: &OpCounter) {
        self.multiplications += other.multiplications;
        self.elimination_steps += other.elimination_steps;
    }
}

/// Exact rank over the rationals by fraction-free elimination.
///
/// Pivoting is deterministic: the first nonzero entry of the current
/// column, lowest row index first.
pub fn rank(m: &Matrix) -> (usize, OpCounter) {
    let mut counter = OpCounter::default();
    if m.rows == 0 || m.cols == 0 {
        return (0, counter);
    }
    let mut a = m.to_integer_rows();
    let (rows, cols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, p);
        for i in pivot_row + 1..rows {
            counter.elimination_steps += 1;
            // Every row below must take the fraction-free update, even
            // with a zero leading entry, to keep later divisions exact.
            let lead_zero = a[i][col].is_zero();
            for j in col + 1..cols {
                // Bareiss update: (pivot * a[i][j] - a[i][col] * a[pivot][j]) / prev
                let num = if lead_zero {
                    counter.multiplications += 2;
                    &a[pivot_row][col] * &a[i][j]
                } else {
                    counter.multiplications += 3;
                    &a[pivot_row][col] * &a[i][j] - &a[i][col] * &a[pivot_row][j]
                };
                a[i][j] = num / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[pivot_row][col].clone();
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    (pivot_row, counter)
}

/// Dimension of the right kernel: cols - rank.
pub fn kernel_dim(m: &Matrix) -> usize {
    m.cols - rank(m).0
}

/// Exact basis of the right kernel, each vector cleared to a primitive
/// integer vector with positive leading entry. Vectors are ordered by
/// their free column, ascending.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<BigInt>> {
    let (rows, cols) = (m.rows, m.cols);
    if cols == 0 {
        return Vec::new();
    }
    // Rational Gauss-Jordan to reduced row echelon form.
    let mut a: Vec<Vec<Scalar>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for entry in a[r][col..].iter_mut() {
            *entry *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (dst, src) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *dst -= &f * src;
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free_cols
        .iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row_idx, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[row_idx][f].clone();
            }
            primitive_integer(&v)
        })
        .collect()
}

/// Clears denominators and divides by the gcd; the first nonzero entry
/// is made positive.
pub fn primitive_integer(v: &[Scalar]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !gcd.is_zero() {
        for c in ints.iter_mut() {
            *c = &*c / &gcd;
        }
    }
    if ints
        .iter()
        .find(|c| !c.is_zero())
        .map(|c| c.is_negative())
        .unwrap_or(false)
    {
        for c in ints.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    ints
}

/// Whether `v` lies in the row span of `m`: appending `v` as a row must
/// not raise the rank.
pub fn is_in_span(v: &[Scalar], m: &Matrix) -> Result<bool> {
    if m.rows > 0 && v.len() != m.cols {
        return Err(Error::DimensionError {
            got: v.len(),
            expected: m.cols,
        });
    }
    let (base, _) = rank(m);
    let (extended, _) = rank(&m.with_appended_row(v)?);
    Ok(base == extended)
}
