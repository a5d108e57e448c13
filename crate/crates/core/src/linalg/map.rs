use super::echelon::{axpy, Echelon, SparseVec};
use crate::scalar::Scalar;

/// A linear map between coordinate spaces, stored column by column:
/// `columns[j]` is the image of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl LinearMap {
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().flatten().all(|(i, _)| *i < rows));
        LinearMap { rows, columns }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.rows);
        for c in &self.columns {
            ech.insert(c);
        }
        ech.rank()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (j, x) in v {
            out = axpy(&out, x, &self.columns[*j]);
        }
        out
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        assert_eq!(inner.rows, self.cols(), "shape mismatch in composition");
        LinearMap {
            rows: self.rows,
            columns: inner.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        super::echelon::sparse_get(&self.columns[c], r)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }
}
