//! Exact matrices of polynomials: Hankel and Toeplitz views of a sequence,
//! submatrix and minor extraction, the matrix of all 2x2 minors, and a
//! fraction-free determinant.
//!
//! Matrices are immutable after construction; every operation here is pure,
//! so independent minors can be evaluated concurrently without coordination.

use crate::error::{Error, Result};
use crate::qpoly::QPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<QPoly>, // row-major
}

impl Matrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> QPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<QPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(
                "ragged rows in matrix literal".into(),
            ));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer literal rows, mostly for tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| QPoly::from_int(v)).collect())
                .collect(),
        )
        .expect("literal rows must be rectangular")
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                QPoly::one()
            } else {
                QPoly::zero()
            }
        })
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

    pub fn at(&self, i: usize, j: usize) -> &QPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[QPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(|e| e.is_constant())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = QPoly::zero();
            for k in 0..self.cols {
                acc = &acc + &(self.at(i, k) * rhs.at(k, j));
            }
            acc
        }))
    }

    /// Rows and columns restricted to the given (strictly increasing sets of)
    /// indices; duplicates or out-of-range indices are rejected.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<Matrix> {
        check_index_set(row_idx, self.rows)?;
        check_index_set(col_idx, self.cols)?;
        Ok(Matrix::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.at(row_idx[i], col_idx[j]).clone()
        }))
    }

    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<Matrix> {
        self.submatrix(idx, idx)
    }

    /// Determinant of the submatrix on `row_idx` x `col_idx`.
    pub fn minor(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<QPoly> {
        if row_idx.len() != col_idx.len() {
            return Err(Error::BadIndexSets(format!(
                "{} rows vs {} cols",
                row_idx.len(),
                col_idx.len()
            )));
        }
        self.submatrix(row_idx, col_idx)?.det_bareiss()
    }

    /// Fraction-free determinant (Bareiss one-step elimination) over the
    /// polynomial ring. Pivot divisions are exact by construction; a zero
    /// pivot is resolved by a row swap (sign tracked), and if the whole
    /// pivot column vanishes the matrix is singular and the determinant is
    /// zero.
    pub fn det_bareiss(&self) -> Result<QPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(QPoly::one());
        }
        let mut m: Vec<Vec<QPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = false;
        let mut prev = QPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = !sign;
                    }
                    // Column k has rank < k+1 below the eliminated block.
                    None => return Ok(QPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev)?;
                }
                m[i][k] = QPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign { -det } else { det })
    }

    /// Determinant by cofactor expansion along the first row. Exponential;
    /// kept as the independent oracle for `det_bareiss` and for tiny inputs.
    pub fn det_cofactor(&self) -> Result<QPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        fn go(m: &Matrix, rows: &[usize], cols: &[usize]) -> QPoly {
            if rows.is_empty() {
                return QPoly::one();
            }
            if rows.len() == 1 {
                return m.at(rows[0], cols[0]).clone();
            }
            let mut acc = QPoly::zero();
            let sub_rows = &rows[1..];
            for (pos, &c) in cols.iter().enumerate() {
                let e = m.at(rows[0], c);
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols
                    .iter()
                    .copied()
                    .filter(|&x| x != c)
                    .collect();
                let term = e * &go(m, sub_rows, &rest);
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(go(self, &idx, &idx))
    }

    /// The matrix of all 2x2 minors, rows and columns indexed by the
    /// lexicographic pair enumeration of `index_pairs`.
    pub fn compound2(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows < 2 {
            return Err(Error::TooSmall {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let pairs = index_pairs(self.rows);
        Ok(Matrix::from_fn(pairs.len(), pairs.len(), |p, r| {
            let (i, j) = pairs[p];
            let (k, l) = pairs[r];
            &(self.at(i, k) * self.at(j, l)) - &(self.at(i, l) * self.at(j, k))
        }))
    }

    /// Report form: array of rows, each entry an ascending coefficient array.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| serde_json::to_value(self.row(i)).expect("matrix row serializes"))
                .collect(),
        )
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn check_index_set(idx: &[usize], bound: usize) -> Result<()> {
    for (pos, &i) in idx.iter().enumerate() {
        if i >= bound {
            return Err(Error::BadIndexSets(format!(
                "index {i} out of range 0..{bound}"
            )));
        }
        if pos > 0 && idx[pos - 1] >= i {
            return Err(Error::BadIndexSets(
                "indices must be strictly increasing".into(),
            ));
        }
    }
    Ok(())
}

/// All pairs `(i, j)` with `0 <= i < j < n`, lexicographically:
/// `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
pub fn index_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Positions of the consecutive pairs `(i, i+1)` inside the lexicographic
/// pair enumeration of `{0, .., n-1}`. Computed, not hard-coded.
pub fn consecutive_pair_positions(n: usize) -> Vec<usize> {
    let pairs = index_pairs(n);
    (0..n.saturating_sub(1))
        .map(|i| {
            pairs
                .iter()
                .position(|&p| p == (i, i + 1))
                .expect("consecutive pair is enumerated")
        })
        .collect()
}

/// `(n+1) x (n+1)` matrix with entry `(i, j) = seq[i + j]`.
pub fn hankel(seq: &[QPoly], n: usize) -> Result<Matrix> {
    let needed = 2 * n + 1;
    if seq.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: seq.len(),
        });
    }
    Ok(Matrix::from_fn(n + 1, n + 1, |i, j| seq[i + j].clone()))
}

/// `(n+1) x (n+1)` matrix with entry `(i, j) = seq[i - j]`, zero above the
/// diagonal.
pub fn toeplitz(seq: &[QPoly], n: usize) -> Result<Matrix> {
    let needed = n + 1;
    if seq.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: seq.len(),
        });
    }
    Ok(Matrix::from_fn(n + 1, n + 1, |i, j| {
        if i >= j {
            seq[i - j].clone()
        } else {
            QPoly::zero()
        }
    }))
}

/// Drops the first term.
pub fn shift(seq: &[QPoly]) -> Result<Vec<QPoly>> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(seq[1..].to_vec())
}
