//! Exact dense linear algebra over the rationals.
//!
//! Elimination runs on sparse rows internally ([`echelon::Echelon`]); the
//! public contract is in terms of dense [`Mat`] and canonical
//! [`Subspace`] values.

pub mod echelon;
mod map;
mod mat;
mod subspace;

pub use echelon::{Echelon, SparseVec};
pub use map::LinearMap;
pub use mat::{kron, kron_vec, Mat};
pub use subspace::{acts_as_scalar, annihilator, intersect, scalar_on_images, sum, Permutation, Subspace};

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("operator does not map the subspace into itself")]
    NotInvariant,
    #[error("operator restricted to the subspace is not a scalar")]
    NotScalar,
    #[error("subspace is zero-dimensional")]
    EmptySubspace,
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    /// Reduced row echelon form, same shape as the input; zero rows last.
    pub echelon: Mat,
    pub pivots: Vec<usize>,
    /// Column vectors `x` with `M x = 0`.
    pub kernel: Subspace,
}

pub fn rref(m: &Mat) -> Rref {
    let mut ech = Echelon::new(m.cols());
    for r in 0..m.rows() {
        ech.insert(&echelon::sparse_from_dense(m.row(r)));
    }
    let rank = ech.rank();
    let pivots = ech.pivots();
    let kernel = Subspace::from_sparse(m.cols(), kernel_vectors(&ech));
    let rows = ech.into_sorted_rows();
    let mut echelon = Mat::zeros(m.rows(), m.cols());
    for (r, row) in rows.iter().enumerate() {
        for (c, x) in row {
            echelon[(r, *c)] = x.clone();
        }
    }
    Rref {
        rank,
        echelon,
        pivots,
        kernel,
    }
}

/// Basis of `{x : row · x = 0 for every row}` read off a reduced echelon.
pub(crate) fn kernel_vectors(ech: &Echelon) -> Vec<SparseVec> {
    let cols = ech.cols();
    let rows = ech.sorted_rows();
    let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    // entries of each row at free columns, transposed: free col -> [(pivot, value)]
    let mut by_free: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
    for (row, &p) in rows.iter().zip(&pivots) {
        for (c, x) in row.iter().skip(1) {
            by_free[*c].push((p, x.clone()));
        }
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v: SparseVec = by_free[f].iter().map(|(p, x)| (*p, -x)).collect();
            v.push((f, Scalar::one()));
            v.sort_by_key(|(i, _)| *i);
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity() {
        let r = rref(&Mat::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.kernel.dim(), 0);
    }

    #[test]
    fn rref_rank_one_kernel_is_canonical() {
        let r = rref(&Mat::from_ints(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel.dim(), 1);
        assert_eq!(
            r.kernel.basis().row(0),
            &[Scalar::one(), Scalar::ratio(-1, 2)]
        );
        assert_eq!(r.echelon, Mat::from_ints(&[&[1, 2], &[0, 0]]));
    }

    fn small_mat() -> impl Strategy<Value = Mat> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                Mat::from_rows(
                    v.chunks(c)
                        .map(|ch| ch.iter().map(|&x| Scalar::from_int(x)).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_mat()) {
            let once = rref(&m);
            let twice = rref(&once.echelon);
            prop_assert_eq!(&once.echelon, &twice.echelon);
        }

        #[test]
        fn rank_nullity(m in small_mat()) {
            let r = rref(&m);
            prop_assert_eq!(r.rank + r.kernel.dim(), m.cols());
            for k in 0..r.kernel.dim() {
                prop_assert!(m.apply(r.kernel.basis().row(k)).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn kron_is_associative(a in small_mat(), b in small_mat(), c in small_mat()) {
            prop_assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
        }
    }
}
