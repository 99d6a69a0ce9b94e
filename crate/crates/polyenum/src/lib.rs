//! Exact combinatorics of polyominoes and permutations on the square lattice:
//! exhaustive enumeration, family classification, the k-parallelogram
//! boundary decomposition, the planted-plane-tree bijection, pattern
//! containment (submatrix, classical/vincular/bivincular/mesh, generalized),
//! class bases over the submatrix order, and exact truncated power series
//! verifying every closed counting formula against brute force.

pub mod matrix;
pub mod poly;
pub mod enumerate;
pub mod classify;
pub mod series;
pub mod kparallel;
pub mod trees;
pub mod patterns;
pub mod posets;
pub mod bases;

pub use matrix::{BinaryMatrix, MatrixError, Permutation};
pub use poly::{Polyomino, PolyominoError};
