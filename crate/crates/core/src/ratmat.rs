//! Exact rational dense linear algebra.
//!
//! Everything downstream (nullity pairs, SAP/SNIP verdicts, Schur
//! complements) reduces to rank computations over the rationals, and
//! nullity is discontinuous, so no floating point appears anywhere:
//! rank uses fraction-free Bareiss elimination over big integers, and
//! kernels/solves use Gauss-Jordan over `BigRational`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Arbitrary-precision rational; always in canonical form
/// (positive denominator, reduced).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RatMatError {
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
    #[error("dimension mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index {index} out of range for dimension {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("principal block is singular")]
    SingularBlock,
}

/// Shorthand for an integer-valued rational.
pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Shorthand for `numer/denom`; panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p"`, `"p/q"`, rejecting `q = 0`; the result is normalized,
/// so non-canonical input like `"2/4"` reads back as `1/2`.
pub fn parse_rational(text: &str) -> Result<Rational, RatMatError> {
    let bad = || RatMatError::BadRational(text.to_string());
    let trimmed = text.trim();
    let (numer_text, denom_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n, d),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer_text.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = denom_text.trim().parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical string form: `"p"` when the denominator is one, else `"p/q"`.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Dense row-major matrix over exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, RatMatError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(RatMatError::ShapeMismatch("ragged row lengths".into()));
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for integer literals; panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
        .expect("ragged integer literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        assert!(r < self.rows && c < self.cols, "entry index out of range");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        assert!(r < self.rows && c < self.cols, "entry index out of range");
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        assert!(r < self.rows, "row index out of range");
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rational> {
        assert!(c < self.cols, "column index out of range");
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|r| (0..r).all(|c| self.at(r, c) == self.at(c, r)))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, RatMatError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(RatMatError::ShapeMismatch(format!(
                "add {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RatMatError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, RatMatError> {
        if self.cols != other.rows {
            return Err(RatMatError::ShapeMismatch(format!(
                "multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.at(r, k);
                if lhs.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.at(r, c) + lhs * other.at(k, c);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Rows and columns selected by index lists, in the given order.
    pub fn submatrix(&self, row_set: &[usize], col_set: &[usize]) -> Result<Self, RatMatError> {
        for &r in row_set {
            if r >= self.rows {
                return Err(RatMatError::IndexOutOfRange {
                    index: r,
                    size: self.rows,
                });
            }
        }
        for &c in col_set {
            if c >= self.cols {
                return Err(RatMatError::IndexOutOfRange {
                    index: c,
                    size: self.cols,
                });
            }
        }
        let mut out = Self::zeros(row_set.len(), col_set.len());
        for (ri, &r) in row_set.iter().enumerate() {
            for (ci, &c) in col_set.iter().enumerate() {
                out.set(ri, ci, self.at(r, c).clone());
            }
        }
        Ok(out)
    }

    /// A with row i removed: the (n-1) x n block written A(i,:].
    pub fn delete_row(&self, i: usize) -> Result<Self, RatMatError> {
        if i >= self.rows {
            return Err(RatMatError::IndexOutOfRange {
                index: i,
                size: self.rows,
            });
        }
        let keep: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let all: Vec<usize> = (0..self.cols).collect();
        self.submatrix(&keep, &all)
    }

    /// The principal submatrix A(i): row and column i removed.
    pub fn delete_row_col(&self, i: usize) -> Result<Self, RatMatError> {
        if !self.is_square() {
            return Err(RatMatError::ShapeMismatch(format!(
                "delete_row_col on {}x{}",
                self.rows, self.cols
            )));
        }
        if i >= self.rows {
            return Err(RatMatError::IndexOutOfRange {
                index: i,
                size: self.rows,
            });
        }
        let keep: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        self.submatrix(&keep, &keep)
    }

    /// Exact rank by fraction-free Bareiss elimination on a
    /// denominator-cleared integer copy. Pivots are chosen by smallest
    /// bit length; the choice affects speed only.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let lcm = self.row(r).iter().fold(BigInt::one(), |acc, v| {
                    acc.lcm(v.denom())
                });
                self.row(r)
                    .iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut step = 0;
        while step < self.rows.min(self.cols) {
            let mut best: Option<(usize, usize, u64)> = None;
            for i in step..self.rows {
                for j in step..self.cols {
                    if m[i][j].is_zero() {
                        continue;
                    }
                    let size = m[i][j].magnitude().bits();
                    if best.map_or(true, |(_, _, b)| size < b) {
                        best = Some((i, j, size));
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break };
            m.swap(step, pi);
            if pj != step {
                for row in m.iter_mut() {
                    row.swap(step, pj);
                }
            }
            for i in step + 1..self.rows {
                for j in step + 1..self.cols {
                    let num = &m[step][step] * &m[i][j] - &m[i][step] * &m[step][j];
                    m[i][j] = num / &prev; // exact by the Bareiss identity
                }
                m[i][step] = BigInt::zero();
            }
            prev = m[step][step].clone();
            step += 1;
        }
        step
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Columns form a basis of the right kernel; `self * basis = 0`.
    pub fn kernel_basis(&self) -> Self {
        let mut work: Vec<Vec<Rational>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let pivots = rref(&mut work, self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, Rational::one());
            for (pi, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, -work[pi][f].clone());
            }
        }
        basis
    }

    /// A solution x with `self * x = b`, if one exists (free variables
    /// set to zero).
    pub fn in_column_space(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut work: Vec<Vec<Rational>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = rref(&mut work, self.cols + 1);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = work[pi][self.cols].clone();
        }
        Some(x)
    }

    /// Solves `self * X = rhs` when `self` is square and invertible.
    fn solve_invertible(&self, rhs: &Self) -> Option<Self> {
        assert!(self.is_square() && self.rows == rhs.rows);
        let n = self.rows;
        let mut work: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend_from_slice(rhs.row(r));
                row
            })
            .collect();
        let pivots = rref(&mut work, n + rhs.cols);
        if pivots.len() < n || pivots.iter().take(n).cloned().ne(0..n) {
            return None;
        }
        let mut x = Self::zeros(n, rhs.cols);
        for r in 0..n {
            for c in 0..rhs.cols {
                x.set(r, c, work[r][n + c].clone());
            }
        }
        Some(x)
    }

    /// Schur complement A/A[alpha] = C - B Q^{-1} B^T where Q = A[alpha].
    /// Requires a symmetric matrix and an invertible principal block;
    /// preserves nullity exactly.
    pub fn schur_complement(&self, alpha: &[usize]) -> Result<Self, RatMatError> {
        if !self.is_symmetric() {
            return Err(RatMatError::ShapeMismatch(
                "schur complement of a non-symmetric matrix".into(),
            ));
        }
        let mut alpha = alpha.to_vec();
        alpha.sort_unstable();
        alpha.dedup();
        if let Some(&bad) = alpha.iter().find(|&&v| v >= self.rows) {
            return Err(RatMatError::IndexOutOfRange {
                index: bad,
                size: self.rows,
            });
        }
        let rest: Vec<usize> = (0..self.rows).filter(|v| !alpha.contains(v)).collect();
        let q = self.submatrix(&alpha, &alpha)?;
        let b = self.submatrix(&rest, &alpha)?;
        let c = self.submatrix(&rest, &rest)?;
        let x = q
            .solve_invertible(&b.transpose())
            .ok_or(RatMatError::SingularBlock)?;
        c.sub(&b.mul(&x)?)
    }
}

/// In-place reduced row echelon form; returns the pivot columns.
/// First-nonzero pivoting keeps the output deterministic.
fn rref(work: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let rows = work.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !work[i][c].is_zero()) else {
            continue;
        };
        work.swap(r, p);
        let inv = work[r][c].clone();
        for j in c..cols {
            let v = &work[r][j] / &inv;
            work[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !work[i][c].is_zero() {
                let f = work[i][c].clone();
                for j in c..cols {
                    let v = &work[i][j] - &f * &work[r][j];
                    work[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = (0..self.rows)
            .map(|r| self.row(r).iter().map(format_rational).collect())
            .collect();
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        if repr.entries.len() != repr.rows {
            return Err(D::Error::custom(format!(
                "expected {} rows, found {}",
                repr.rows,
                repr.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(repr.rows);
        for (r, row) in repr.entries.iter().enumerate() {
            if row.len() != repr.cols {
                return Err(D::Error::custom(format!(
                    "row {} has {} entries, expected {}",
                    r,
                    row.len(),
                    repr.cols
                )));
            }
            rows.push(
                row.iter()
                    .map(|s| parse_rational(s).map_err(D::Error::custom))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        // from_rows only fails on ragged input, which is checked above,
        // except for the rows=0 / cols>0 corner handled here.
        let m = RationalMatrix::from_rows(rows).map_err(D::Error::custom)?;
        if m.rows == 0 && repr.cols != 0 {
            return Ok(RationalMatrix {
                rows: 0,
                cols: repr.cols,
                data: Vec::new(),
            });
        }
        Ok(m)
    }
}
