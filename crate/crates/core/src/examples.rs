//! Built-in braidings: diagonal (quantum space) families, the 4-dimensional
//! permutation braiding with six quadratic relations, and a few extras used
//! in tests.

use crate::braiding::Braiding;
use crate::linalg::{Mat, Subspace};
use crate::scalar::Scalar;

/// Output column of each input row of the 16×16 permutation braiding.
const EXAMPLE2_IMAGE: [usize; 16] = [0, 11, 7, 12, 14, 5, 9, 2, 13, 6, 10, 1, 3, 8, 4, 15];

pub fn example2() -> Braiding {
    let mut t = Mat::zeros(16, 16);
    for (row, &col) in EXAMPLE2_IMAGE.iter().enumerate() {
        t[(row, col)] = Scalar::one();
    }
    Braiding::new(4, t).expect("16x16 table")
}

/// Span of `v1v2 − v3v4, v1v3 − v2v4, v4v2 − v3v1, v4v3 − v2v1,
/// v1v4 − v4v1, v2v3 − v3v2` in `V⊗V` (0-based letters below).
pub fn example2_relations() -> Subspace {
    let pairs = [
        ((0, 1), (2, 3)),
        ((0, 2), (1, 3)),
        ((3, 1), (2, 0)),
        ((3, 2), (1, 0)),
        ((0, 3), (3, 0)),
        ((1, 2), (2, 1)),
    ];
    let vectors: Vec<Vec<Scalar>> = pairs
        .iter()
        .map(|&((a, b), (c, d))| {
            let mut v = vec![Scalar::zero(); 16];
            v[a * 4 + b] = Scalar::one();
            v[c * 4 + d] = Scalar::from_int(-1);
            v
        })
        .collect();
    Subspace::from_vectors(16, &vectors)
}

/// `N = 1`, `c(v⊗v) = v⊗v`; its Nichols algebra is `k[v]`.
pub fn trivial1() -> Braiding {
    Braiding::new(1, Mat::identity(1)).expect("1x1 table")
}

/// `N = 1`, `c(v⊗v) = s v⊗v`.
pub fn scalar1(s: Scalar) -> Braiding {
    Braiding::new(1, Mat::scalar_identity(1, &s)).expect("1x1 table")
}

/// Diagonal braiding on two generators with `q_{12} = q`, `q_{21} = 1/q`.
pub fn quantum_plane(q: Scalar) -> Braiding {
    let inv = q.recip().expect("q must be nonzero");
    Braiding::diagonal(&Mat::from_rows(vec![
        vec![Scalar::one(), q],
        vec![inv, Scalar::one()],
    ]))
}

/// Diagonal braiding from upper-triangular parameters `q_{ij}` (`i < j`),
/// completed with `q_{ji} = 1/q_{ij}`; unlisted entries are 1.
pub fn quantum_space(upper: &[(usize, usize, Scalar)], n: usize) -> Braiding {
    let mut q = Mat::from_rows(vec![vec![Scalar::one(); n]; n]);
    for (i, j, x) in upper {
        q[(*i, *j)] = x.clone();
        q[(*j, *i)] = x.recip().expect("q_ij must be nonzero");
    }
    Braiding::diagonal(&q)
}

/// Standard one-parameter braiding of `GL_q(2)` type, rescaled so that
/// `(c − q²)(c + 1) = 0`:
/// `c(v_i v_i) = q² v_i v_i`, `c(v_1 v_2) = q v_2 v_1`,
/// `c(v_2 v_1) = q v_1 v_2 + (q² − 1) v_2 v_1`.
pub fn gl2_standard(q: Scalar) -> Braiding {
    let q2 = &q * &q;
    let mut t = Mat::zeros(4, 4);
    t[(0, 0)] = q2.clone();
    t[(3, 3)] = q2.clone();
    t[(1, 2)] = q.clone();
    t[(2, 1)] = q;
    t[(2, 2)] = q2 - Scalar::one();
    Braiding::new(2, t).expect("4x4 table")
}
