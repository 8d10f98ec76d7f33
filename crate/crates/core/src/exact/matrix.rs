//! Exact linear algebra over cyclotomic fields: row reduction, kernels,
//! column spaces, common fixed subspaces, and the determinant
//! `det(I - T*F)` used by Euler factors.
//!
//! Every pivot, rank, and kernel here is computed with exact field
//! arithmetic; no floating point is involved anywhere.

use num_traits::One;

use super::cyclotomic::Cyclotomic;
use super::poly::CycloPoly;
use super::Rational;
use crate::error::{Error, Result};

/// Dense matrix with cyclotomic entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CycloMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cyclotomic>,
}

impl CycloMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Cyclotomic>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(CycloMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        CycloMatrix {
            rows,
            cols,
            entries: vec![Cyclotomic::zero(1); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CycloMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Cyclotomic::one(1);
        }
        m
    }

    /// Build from integer entries, row-major; test and permutation helper.
    pub fn from_integers(rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        CycloMatrix::new(
            rows,
            cols,
            values.iter().map(|&v| Cyclotomic::from_integer(v)).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Cyclotomic {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> CycloMatrix {
        let mut out = CycloMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn add(&self, rhs: &CycloMatrix) -> Result<CycloMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} to {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, rhs: &CycloMatrix) -> Result<CycloMatrix> {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, q: &Rational) -> CycloMatrix {
        CycloMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(q)).collect(),
        }
    }

    pub fn mul(&self, rhs: &CycloMatrix) -> Result<CycloMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = CycloMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c) + &(a * b);
                    *out.at_mut(r, c) = cur;
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Cyclotomic> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("trace of a non-square matrix".into()));
        }
        let mut acc = Cyclotomic::zero(1);
        for i in 0..self.rows {
            acc = &acc + self.at(i, i);
        }
        Ok(acc)
    }

    /// Reduced row echelon form and the pivot column indices. Pivot choice is
    /// the first nonzero entry in each column, so the result is
    /// deterministic.
    pub fn rref(&self) -> (CycloMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m
                .at(row, col)
                .inverse()
                .expect("pivot entry is nonzero by choice");
            for c in col..m.cols {
                let v = m.at(row, c).mul(&inv);
                *m.at_mut(row, c) = v;
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let f = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c) - &(&f * m.at(row, c));
                    *m.at_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, returned as the columns of a matrix
    /// (cols = nullity; a full-rank map yields a matrix with zero columns).
    pub fn kernel_basis(&self) -> CycloMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = CycloMatrix::zeros(self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            *out.at_mut(fc, j) = Cyclotomic::one(1);
            for (pi, &pc) in pivots.iter().enumerate() {
                *out.at_mut(pc, j) = r.at(pi, fc).neg();
            }
        }
        out
    }

    /// Echelon basis of the column space, returned as the columns of a
    /// matrix (cols = rank).
    pub fn column_space_basis(&self) -> CycloMatrix {
        let (r, pivots) = self.transpose().rref();
        let mut out = CycloMatrix::zeros(self.rows, pivots.len());
        for j in 0..pivots.len() {
            for i in 0..self.rows {
                *out.at_mut(i, j) = r.at(j, i).clone();
            }
        }
        out
    }

    /// Solve `self * X = rhs` exactly; `self` must have full column rank and
    /// the system must be consistent (the error cases signal that `rhs` does
    /// not lie in the column space).
    pub fn solve_exact(&self, rhs: &CycloMatrix) -> Result<CycloMatrix> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve with {} lhs rows vs {} rhs rows",
                self.rows, rhs.rows
            )));
        }
        let k = self.cols;
        let mut aug = CycloMatrix::zeros(self.rows, k + rhs.cols);
        for r in 0..self.rows {
            for c in 0..k {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            for c in 0..rhs.cols {
                *aug.at_mut(r, k + c) = rhs.at(r, c).clone();
            }
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != k || pivots.iter().any(|&p| p >= k) {
            return Err(Error::NotInvariant);
        }
        let mut x = CycloMatrix::zeros(k, rhs.cols);
        for i in 0..k {
            for c in 0..rhs.cols {
                *x.at_mut(i, c) = red.at(i, k + c).clone();
            }
        }
        Ok(x)
    }

    /// Basis of the common fixed space of a family of square matrices,
    /// computed as the column space of the averaging operator. The averaging
    /// operator of a family closed under composition is idempotent; the
    /// idempotence test is the validity gate for the input.
    pub fn fixed_subspace(mats: &[CycloMatrix]) -> Result<CycloMatrix> {
        let Some(first) = mats.first() else {
            return Err(Error::InvalidArgument(
                "fixed subspace of an empty family".into(),
            ));
        };
        if !first.is_square() {
            return Err(Error::DimensionMismatch(
                "fixed subspace needs square matrices".into(),
            ));
        }
        let n = first.rows;
        let mut sum = CycloMatrix::zeros(n, n);
        for m in mats {
            if m.rows != n || m.cols != n {
                return Err(Error::DimensionMismatch(format!(
                    "mixed sizes {}x{} and {n}x{n} in fixed-subspace input",
                    m.rows, m.cols
                )));
            }
            sum = sum.add(m)?;
        }
        let avg = sum.scale(&Rational::new(1.into(), (mats.len() as i64).into()));
        if avg.mul(&avg)? != avg {
            return Err(Error::ProjectorNotIdempotent);
        }
        Ok(avg.column_space_basis())
    }

    /// `det(I - T * self)` as a polynomial in `T`, via the characteristic
    /// polynomial (coefficient recursion with exact integer divisions only).
    pub fn det_id_minus_t(&self) -> Result<CycloPoly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        // char poly lambda^n + c_{n-1} lambda^{n-1} + ... + c_0 by the
        // trace recursion: M_k = A*M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A*M_k)/k
        let mut c = vec![Cyclotomic::zero(1); n + 1];
        c[n] = Cyclotomic::one(1);
        let mut m = CycloMatrix::zeros(n, n);
        for k in 1..=n {
            let mut step = self.mul(&m)?;
            for i in 0..n {
                let v = step.at(i, i) + &c[n - k + 1];
                *step.at_mut(i, i) = v;
            }
            m = step;
            let am = self.mul(&m)?;
            let t = am.trace()?;
            c[n - k] = t.scale(&-Rational::new(1.into(), (k as i64).into()));
        }
        // det(I - T A) = T^n * char(1/T) has coefficient c_{n-j} at T^j
        let coeffs = (0..=n).map(|j| c[n - j].clone()).collect();
        Ok(CycloPoly::from_coeffs(coeffs))
    }
}
