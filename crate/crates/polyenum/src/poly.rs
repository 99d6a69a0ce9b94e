//! Polyominoes: validated binary matrices with edge-connected 1-cells and a
//! tight bounding box, plus the derived statistics.

use crate::matrix::BinaryMatrix;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyominoError {
    #[error("matrix has no 1 entries")]
    EmptyMatrix,
    #[error("the 1-cells are not edge-connected")]
    NotConnected,
    #[error("an outer row or column contains no 1 (bounding box is not tight)")]
    LooseBoundingBox,
}

/// A polyomino with its statistics. `semi_perimeter = width + height` of the
/// minimal bounding rectangle; for convex polyominoes this equals half the
/// boundary length.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polyomino {
    matrix: BinaryMatrix,
}

impl Polyomino {
    /// Validate all polyomino invariants and wrap the matrix.
    pub fn validate(matrix: BinaryMatrix) -> Result<Polyomino, PolyominoError> {
        let (rows, cols) = (matrix.rows(), matrix.cols());
        let area = matrix.count_ones();
        if area == 0 {
            return Err(PolyominoError::EmptyMatrix);
        }
        let (row_sums, col_sums) = matrix.projections();
        if row_sums[0] == 0 || row_sums[rows - 1] == 0 || col_sums[0] == 0 || col_sums[cols - 1] == 0
        {
            return Err(PolyominoError::LooseBoundingBox);
        }
        // flood fill over edge adjacency
        let mut seen = vec![false; rows * cols];
        let start = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| (i, j)))
            .find(|&(i, j)| matrix.get(i, j))
            .unwrap();
        let mut stack = vec![start];
        seen[(start.0 - 1) * cols + (start.1 - 1)] = true;
        let mut reached = 0usize;
        while let Some((i, j)) = stack.pop() {
            reached += 1;
            let mut push = |i2: usize, j2: usize| {
                if (1..=rows).contains(&i2) && (1..=cols).contains(&j2) && matrix.get(i2, j2) {
                    let k = (i2 - 1) * cols + (j2 - 1);
                    if !seen[k] {
                        seen[k] = true;
                        stack.push((i2, j2));
                    }
                }
            };
            push(i + 1, j);
            push(i.wrapping_sub(1), j);
            push(i, j + 1);
            push(i, j.wrapping_sub(1));
        }
        if reached != area {
            return Err(PolyominoError::NotConnected);
        }
        Ok(Polyomino { matrix })
    }

    pub fn from_text(text: &str) -> Result<Polyomino, PolyominoError> {
        let m = BinaryMatrix::from_text(text).map_err(|_| PolyominoError::EmptyMatrix)?;
        Polyomino::validate(m)
    }

    pub fn matrix(&self) -> &BinaryMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> BinaryMatrix {
        self.matrix
    }

    pub fn area(&self) -> usize {
        self.matrix.count_ones()
    }

    pub fn width(&self) -> usize {
        self.matrix.cols()
    }

    pub fn height(&self) -> usize {
        self.matrix.rows()
    }

    pub fn semi_perimeter(&self) -> usize {
        self.width() + self.height()
    }

    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> bool {
        self.matrix.get(i, j)
    }

    pub fn transpose(&self) -> Polyomino {
        Polyomino {
            matrix: self.matrix.transpose(),
        }
    }

    /// Lowest and highest occupied row per column (1-based), in column order.
    pub fn column_spans(&self) -> Vec<(usize, usize)> {
        (1..=self.width())
            .map(|j| {
                let lo = (1..=self.height()).find(|&i| self.cell(i, j)).unwrap();
                let hi = (1..=self.height()).rev().find(|&i| self.cell(i, j)).unwrap();
                (lo, hi)
            })
            .collect()
    }

    /// Leftmost and rightmost occupied column per row (1-based), in row order.
    pub fn row_spans(&self) -> Vec<(usize, usize)> {
        (1..=self.height())
            .map(|i| {
                let lo = (1..=self.width()).find(|&j| self.cell(i, j)).unwrap();
                let hi = (1..=self.width()).rev().find(|&j| self.cell(i, j)).unwrap();
                (lo, hi)
            })
            .collect()
    }
}

impl PartialOrd for Polyomino {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.matrix.canonical_cmp(&other.matrix))
    }
}

impl Ord for Polyomino {
    fn cmp(&self, other: &Self) -> Ordering {
        self.matrix.canonical_cmp(&other.matrix)
    }
}

impl fmt::Debug for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polyomino(sp={})\n{}", self.semi_perimeter(), self.matrix.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_cell() {
        let p = Polyomino::from_text("1").unwrap();
        assert_eq!(p.area(), 1);
        assert_eq!(p.semi_perimeter(), 2);
    }

    #[test]
    fn corner_contact_is_not_adjacency() {
        let m = BinaryMatrix::from_text("01\n10").unwrap();
        assert_eq!(Polyomino::validate(m), Err(PolyominoError::NotConnected));
    }

    #[test]
    fn square_stats() {
        let p = Polyomino::from_text("11\n11").unwrap();
        assert_eq!(p.area(), 4);
        assert_eq!(p.width(), 2);
        assert_eq!(p.height(), 2);
        assert_eq!(p.semi_perimeter(), 4);
    }

    #[test]
    fn loose_box_rejected() {
        let m = BinaryMatrix::from_text("10\n10").unwrap();
        assert_eq!(Polyomino::validate(m), Err(PolyominoError::LooseBoundingBox));
        let m = BinaryMatrix::from_text("0\n1").unwrap();
        assert_eq!(Polyomino::validate(m), Err(PolyominoError::LooseBoundingBox));
    }

    #[test]
    fn empty_rejected() {
        let m = BinaryMatrix::from_text("00\n00").unwrap();
        assert_eq!(Polyomino::validate(m), Err(PolyominoError::EmptyMatrix));
    }
}
