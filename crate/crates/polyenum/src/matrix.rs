//! Binary matrices and permutations, the carriers for everything else.
//!
//! Rows are indexed from the **bottom** (row 1) upward, columns from the left
//! (column 1). The text form is visual: the first line is the top row. JSON
//! records follow the same visual orientation:
//! `{"rows":r,"cols":c,"bits":["<top row>",...,"<bottom row>"]}`.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix must have at least one row and one column")]
    EmptyDimensions,
    #[error("text form is ragged or contains a character other than 0/1")]
    BadTextForm,
    #[error("matrix is not a permutation matrix")]
    NotAPermutationMatrix,
    #[error("permutation values are not a bijection on 1..n")]
    NotAPermutation,
}

/// A 0/1 matrix. Entry `(i, j)` has `i` counted from the bottom row (`i = 1`)
/// upward and `j` from the left (`j = 1`). Equality is entrywise.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixRecord", into = "MatrixRecord")]
pub struct BinaryMatrix {
    rows: u16,
    cols: u16,
    /// Row-major from the bottom row, LSB-first within each `u64` word.
    bits: Vec<u64>,
}

/// The JSON wire record (visual orientation, top row first).
#[derive(Serialize, Deserialize)]
struct MatrixRecord {
    rows: u16,
    cols: u16,
    bits: Vec<String>,
}

impl TryFrom<MatrixRecord> for BinaryMatrix {
    type Error = MatrixError;
    fn try_from(r: MatrixRecord) -> Result<Self, MatrixError> {
        let text = r.bits.join("\n");
        let m = BinaryMatrix::from_text(&text)?;
        if m.rows != r.rows || m.cols != r.cols {
            return Err(MatrixError::BadTextForm);
        }
        Ok(m)
    }
}

impl From<BinaryMatrix> for MatrixRecord {
    fn from(m: BinaryMatrix) -> MatrixRecord {
        MatrixRecord {
            rows: m.rows,
            cols: m.cols,
            bits: m.text_lines(),
        }
    }
}

impl BinaryMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "dimensions must be positive");
        let words = (rows * cols + 63) / 64;
        BinaryMatrix {
            rows: rows as u16,
            cols: cols as u16,
            bits: vec![0; words],
        }
    }

    /// Build from entries given per row, bottom row first.
    pub fn from_rows_bottom_up(cols: usize, rows: &[&[u8]]) -> Self {
        let mut m = BinaryMatrix::new(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (j, &b) in row.iter().enumerate() {
                if b != 0 {
                    m.set(i + 1, j + 1, true);
                }
            }
        }
        m
    }

    /// Parse the visual text form: lines of `0`/`1`, first line = top row.
    pub fn from_text(text: &str) -> Result<Self, MatrixError> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.is_empty() {
            return Err(MatrixError::EmptyDimensions);
        }
        let cols = lines[0].trim().len();
        if cols == 0 {
            return Err(MatrixError::EmptyDimensions);
        }
        let rows = lines.len();
        let mut m = BinaryMatrix::new(rows, cols);
        for (k, line) in lines.iter().enumerate() {
            let line = line.trim();
            if line.len() != cols {
                return Err(MatrixError::BadTextForm);
            }
            let i = rows - k; // first line is the top row
            for (j0, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(i, j0 + 1, true),
                    _ => return Err(MatrixError::BadTextForm),
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows as usize
    }

    pub fn cols(&self) -> usize {
        self.cols as usize
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= self.rows() && 1 <= j && j <= self.cols());
        (i - 1) * self.cols() + (j - 1)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        let b = self.idx(i, j);
        self.bits[b / 64] >> (b % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let b = self.idx(i, j);
        if v {
            self.bits[b / 64] |= 1 << (b % 64);
        } else {
            self.bits[b / 64] &= !(1 << (b % 64));
        }
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Row and column sums (the horizontal and vertical projections).
    pub fn projections(&self) -> (Vec<usize>, Vec<usize>) {
        let mut row_sums = vec![0; self.rows()];
        let mut col_sums = vec![0; self.cols()];
        for i in 1..=self.rows() {
            for j in 1..=self.cols() {
                if self.get(i, j) {
                    row_sums[i - 1] += 1;
                    col_sums[j - 1] += 1;
                }
            }
        }
        (row_sums, col_sums)
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::new(self.cols(), self.rows());
        for i in 1..=self.rows() {
            for j in 1..=self.cols() {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Rotate 90 degrees counterclockwise.
    pub fn rotate_ccw(&self) -> BinaryMatrix {
        let mut r = BinaryMatrix::new(self.cols(), self.rows());
        for i in 1..=self.rows() {
            for j in 1..=self.cols() {
                if self.get(i, j) {
                    r.set(self.cols() + 1 - j, i, true);
                }
            }
        }
        r
    }

    /// Restriction to the given row and column index sets (1-based, ascending).
    pub fn restrict(&self, row_set: &[usize], col_set: &[usize]) -> BinaryMatrix {
        let mut m = BinaryMatrix::new(row_set.len(), col_set.len());
        for (a, &i) in row_set.iter().enumerate() {
            for (b, &j) in col_set.iter().enumerate() {
                if self.get(i, j) {
                    m.set(a + 1, b + 1, true);
                }
            }
        }
        m
    }

    pub fn delete_row(&self, i: usize) -> Option<BinaryMatrix> {
        if self.rows() == 1 {
            return None;
        }
        let rows: Vec<usize> = (1..=self.rows()).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (1..=self.cols()).collect();
        Some(self.restrict(&rows, &cols))
    }

    pub fn delete_col(&self, j: usize) -> Option<BinaryMatrix> {
        if self.cols() == 1 {
            return None;
        }
        let rows: Vec<usize> = (1..=self.rows()).collect();
        let cols: Vec<usize> = (1..=self.cols()).filter(|&c| c != j).collect();
        Some(self.restrict(&rows, &cols))
    }

    /// All matrices obtained by deleting exactly one row or one column.
    pub fn one_step_deletions(&self) -> Vec<BinaryMatrix> {
        let mut out = Vec::new();
        for i in 1..=self.rows() {
            if let Some(m) = self.delete_row(i) {
                out.push(m);
            }
        }
        for j in 1..=self.cols() {
            if let Some(m) = self.delete_col(j) {
                out.push(m);
            }
        }
        out
    }

    /// Text lines, first line = top row.
    pub fn text_lines(&self) -> Vec<String> {
        (1..=self.rows())
            .rev()
            .map(|i| {
                (1..=self.cols())
                    .map(|j| if self.get(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        self.text_lines().join("\n")
    }

    /// Canonical comparison key order: `(rows, cols, bits read row-major from
    /// the top row down)`. Enumeration output is sorted in this order.
    pub fn canonical_cmp(&self, other: &BinaryMatrix) -> Ordering {
        self.rows
            .cmp(&other.rows)
            .then(self.cols.cmp(&other.cols))
            .then_with(|| {
                for i in (1..=self.rows()).rev() {
                    for j in 1..=self.cols() {
                        let (a, b) = (self.get(i, j), other.get(i, j));
                        if a != b {
                            return if a { Ordering::Greater } else { Ordering::Less };
                        }
                    }
                }
                Ordering::Equal
            })
    }

    /// True iff at most one 1 per row and per column.
    pub fn is_quasi_permutation(&self) -> bool {
        let (rs, cs) = self.projections();
        rs.iter().all(|&s| s <= 1) && cs.iter().all(|&s| s <= 1)
    }

    /// Positions of 0 entries with no 1 anywhere in their row or column.
    pub fn uncovered_zeros(&self) -> Vec<(usize, usize)> {
        let (rs, cs) = self.projections();
        let mut out = Vec::new();
        for i in 1..=self.rows() {
            for j in 1..=self.cols() {
                if !self.get(i, j) && rs[i - 1] == 0 && cs[j - 1] == 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl PartialOrd for BinaryMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.canonical_cmp(other))
    }
}

impl Ord for BinaryMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix({}x{})\n{}", self.rows, self.cols, self.to_text())
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    pub fn new(values: Vec<u8>) -> Result<Self, MatrixError> {
        let n = values.len();
        if n == 0 {
            return Err(MatrixError::NotAPermutation);
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(MatrixError::NotAPermutation);
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    /// Parse one-line notation from single digits, e.g. `"24531"`.
    /// Only sizes up to 9 are representable this way.
    pub fn from_digits(s: &str) -> Result<Self, MatrixError> {
        let values: Option<Vec<u8>> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect();
        Permutation::new(values.ok_or(MatrixError::NotAPermutation)?)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `sigma(j)` for `j` in `1..=n`.
    pub fn at(&self, j: usize) -> usize {
        self.values[j - 1] as usize
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// The permutation matrix: `M(i,j) = 1` iff `i = sigma(j)`.
    pub fn to_matrix(&self) -> BinaryMatrix {
        let n = self.len();
        let mut m = BinaryMatrix::new(n, n);
        for j in 1..=n {
            m.set(self.at(j), j, true);
        }
        m
    }

    /// Inverse of [`Permutation::to_matrix`], defined exactly on permutation matrices.
    pub fn from_matrix(m: &BinaryMatrix) -> Result<Permutation, MatrixError> {
        if m.rows() != m.cols() {
            return Err(MatrixError::NotAPermutationMatrix);
        }
        let n = m.rows();
        let mut values = vec![0u8; n];
        for j in 1..=n {
            let mut hit = None;
            for i in 1..=n {
                if m.get(i, j) {
                    if hit.is_some() {
                        return Err(MatrixError::NotAPermutationMatrix);
                    }
                    hit = Some(i);
                }
            }
            values[j - 1] = hit.ok_or(MatrixError::NotAPermutationMatrix)? as u8;
        }
        let p = Permutation::new(values).map_err(|_| MatrixError::NotAPermutationMatrix)?;
        // column sums are 1 by construction; row sums must be too
        if p.to_matrix() != *m {
            return Err(MatrixError::NotAPermutationMatrix);
        }
        Ok(p)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        if self.len() <= 9 {
            write!(f, "{}", strs.join(""))
        } else {
            write!(f, "[{}]", strs.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let m = BinaryMatrix::from_text("110\n011").unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 3);
        // first line is the top row
        assert!(m.get(2, 1) && m.get(2, 2) && !m.get(2, 3));
        assert!(!m.get(1, 1) && m.get(1, 2) && m.get(1, 3));
        assert_eq!(m.to_text(), "110\n011");
    }

    #[test]
    fn json_record_form() {
        let m = BinaryMatrix::from_text("10\n01").unwrap();
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(js, r#"{"rows":2,"cols":2,"bits":["10","01"]}"#);
        let back: BinaryMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn perm_matrix_examples() {
        let p = Permutation::from_digits("1").unwrap();
        assert_eq!(p.to_matrix().to_text(), "1");

        let p = Permutation::from_digits("21").unwrap();
        let m = p.to_matrix();
        assert!(m.get(2, 1) && m.get(1, 2));
        assert!(!m.get(1, 1) && !m.get(2, 2));

        // sigma = 521634: dots of the diagram = the 1s of the matrix
        let p = Permutation::from_digits("521634").unwrap();
        let lines = p.to_matrix().text_lines();
        assert_eq!(
            lines,
            vec!["000100", "100000", "000001", "000010", "010000", "001000"]
        );
        assert_eq!(Permutation::from_matrix(&p.to_matrix()).unwrap(), p);
    }

    #[test]
    fn projections_examples() {
        let unit = BinaryMatrix::from_text("1").unwrap();
        assert_eq!(unit.projections(), (vec![1], vec![1]));
        let full = BinaryMatrix::from_text("11\n11").unwrap();
        assert_eq!(full.projections(), (vec![2, 2], vec![2, 2]));
        let p = Permutation::from_digits("21").unwrap().to_matrix();
        assert_eq!(p.projections(), (vec![1, 1], vec![1, 1]));
    }

    #[test]
    fn canonical_order_is_rows_cols_bits_top_down() {
        let a = BinaryMatrix::from_text("01").unwrap();
        let b = BinaryMatrix::from_text("10").unwrap();
        assert!(a < b);
        let c = BinaryMatrix::from_text("1").unwrap();
        assert!(c < a);
        let d = BinaryMatrix::from_text("0\n1").unwrap();
        assert!(b < d); // 1x2 sorts before 2x1
    }

    #[test]
    fn not_a_permutation_matrix() {
        let m = BinaryMatrix::from_text("11\n00").unwrap();
        assert_eq!(
            Permutation::from_matrix(&m),
            Err(MatrixError::NotAPermutationMatrix)
        );
    }
}
