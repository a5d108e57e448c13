//! Incremental sparse reduced-row-echelon builder.
//!
//! Rows are kept fully reduced at every step: each stored row has a
//! leading 1 in its pivot column and zeros in every other pivot column.
//! The row space determines the final form uniquely, so insertion order
//! does not affect the result.

use std::collections::HashMap;

use crate::scalar::Scalar;

/// Sparse vector as `(index, value)` pairs, strictly increasing index,
/// no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `x + s * y`.
pub fn axpy(x: &SparseVec, s: &Scalar, y: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            out.push((y[j].0, s * &y[j].1));
            j += 1;
        } else {
            let v = &x[i].1 + &(s * &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_get(v: &SparseVec, idx: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&idx, |(i, _)| *i).ok().map(|k| &v[k].1)
}

/// Accumulates `s * y` into a sparse map-like buffer.
pub fn scale(v: &SparseVec, s: &Scalar) -> SparseVec {
    if s.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * s)).collect()
}

#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Residue of `v` modulo the current row space, with no entries in
    /// pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (c, x) in v {
            if let Some(&r) = self.pivot_row.get(c) {
                out = axpy(&out, &(-x), &self.rows[r]);
            }
        }
        out
    }

    /// Adds `v` to the row space. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        debug_assert!(v.iter().all(|(i, _)| *i < self.cols));
        let res = self.reduce(v);
        let Some((p, lead)) = res.first().cloned() else {
            return false;
        };
        let inv = lead.recip().expect("nonzero lead");
        let new = scale(&res, &inv);
        for row in &mut self.rows {
            if let Some(x) = sparse_get(row, p).cloned() {
                *row = axpy(row, &(-x), &new);
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(new);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Row with the given pivot column, if any.
    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_row.get(&col).map(|&r| &self.rows[r])
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort_unstable();
        p
    }

    /// Rows sorted by pivot column: the canonical reduced echelon form.
    pub fn into_sorted_rows(self) -> Vec<SparseVec> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        rows
    }

    pub fn sorted_rows(&self) -> Vec<SparseVec> {
        self.clone().into_sorted_rows()
    }
}
