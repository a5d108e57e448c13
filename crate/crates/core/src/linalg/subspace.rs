use crate::scalar::Scalar;

use super::echelon::{sparse_from_dense, sparse_get, Echelon, SparseVec};
use super::{kernel_vectors, LinalgError, Mat};

/// A linear subspace of `Q^ambient_dim`, stored as the reduced row echelon
/// form of a spanning set. Two subspaces are equal iff their stored bases
/// are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_echelon(ech: Echelon) -> Self {
        let ambient_dim = ech.cols();
        let rows = ech.into_sorted_rows();
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let mut basis = Mat::zeros(rows.len(), ambient_dim);
        for (r, row) in rows.iter().enumerate() {
            for (c, x) in row {
                basis[(r, *c)] = x.clone();
            }
        }
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn from_sparse<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SparseVec>,
    {
        let mut ech = Echelon::new(ambient_dim);
        for v in vectors {
            ech.insert(&v);
        }
        Subspace::from_echelon(ech)
    }

    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        Subspace::from_sparse(
            ambient_dim,
            vectors.iter().map(|v| {
                assert_eq!(v.len(), ambient_dim);
                sparse_from_dense(v)
            }),
        )
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Mat) -> Self {
        Subspace::from_sparse(m.cols(), (0..m.rows()).map(|r| sparse_from_dense(m.row(r))))
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &Mat) -> Self {
        Subspace::row_space(&m.transpose())
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, r: usize) -> Vec<Scalar> {
        self.basis.row(r).to_vec()
    }

    pub fn basis_sparse(&self) -> Vec<SparseVec> {
        (0..self.dim()).map(|r| sparse_from_dense(self.basis.row(r))).collect()
    }

    pub fn echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.ambient_dim);
        for v in self.basis_sparse() {
            ech.insert(&v);
        }
        ech
    }

    /// Coefficients of `v` in the stored basis, or `None` if `v` lies
    /// outside the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim);
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![Scalar::zero(); self.ambient_dim];
        for (r, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, x) in self.basis.row(r).iter().enumerate() {
                if !x.is_zero() {
                    recon[k] += &(c * x);
                }
            }
        }
        (recon == v).then_some(coeffs)
    }

    /// Sparse variant of [`Subspace::coordinates`].
    pub fn coordinates_sparse(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let coeffs: Vec<Scalar> = self
            .pivots
            .iter()
            .map(|&p| sparse_get(v, p).cloned().unwrap_or_else(Scalar::zero))
            .collect();
        let mut recon: SparseVec = Vec::new();
        for (r, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                recon = super::echelon::axpy(&recon, c, &sparse_from_dense(self.basis.row(r)));
            }
        }
        (&recon == v).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_sparse(&self, v: &SparseVec) -> bool {
        self.coordinates_sparse(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && (0..self.dim()).all(|r| other.contains(self.basis.row(r)))
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.to_rows()
    }
}

/// Subspace sum.
pub fn sum(ambient_dim: usize, spaces: &[Subspace]) -> Subspace {
    let mut ech = Echelon::new(ambient_dim);
    for s in spaces {
        assert_eq!(s.ambient_dim, ambient_dim, "ambient mismatch in sum");
        for v in s.basis_sparse() {
            ech.insert(&v);
        }
    }
    Subspace::from_echelon(ech)
}

/// Intersection of a list of subspaces; the empty list gives the whole
/// ambient space.
pub fn intersect(ambient_dim: usize, spaces: &[Subspace]) -> Subspace {
    let mut acc = Subspace::full(ambient_dim);
    for (i, s) in spaces.iter().enumerate() {
        assert_eq!(s.ambient_dim, ambient_dim, "ambient mismatch in intersect");
        acc = if i == 0 { s.clone() } else { intersect_pair(&acc, s) };
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Zassenhaus: reduce rows `[u | u]` and `[w | 0]`; rows whose left half
/// vanishes carry the intersection in their right half.
fn intersect_pair(a: &Subspace, b: &Subspace) -> Subspace {
    let n = a.ambient_dim;
    let mut ech = Echelon::new(2 * n);
    for u in a.basis_sparse() {
        let mut row = u.clone();
        row.extend(u.iter().map(|(i, x)| (i + n, x.clone())));
        ech.insert(&row);
    }
    for w in b.basis_sparse() {
        ech.insert(&w);
    }
    let rows = ech.into_sorted_rows();
    Subspace::from_sparse(
        n,
        rows.into_iter()
            .filter(|r| r[0].0 >= n)
            .map(|r| r.into_iter().map(|(i, x)| (i - n, x)).collect()),
    )
}

/// A permutation of coordinate indices acting by `(p·w)_i = w_{p(i)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Reverses the order of tensor legs on `V^{⊗legs}` with `dim V = n`.
    pub fn tensor_reversal(n: usize, legs: usize) -> Self {
        let total = n.pow(legs as u32);
        Permutation((0..total).map(|i| reverse_digits(i, n, legs)).collect())
    }

    pub fn from_map(map: Vec<usize>) -> Self {
        let mut seen = vec![false; map.len()];
        for &m in &map {
            assert!(m < map.len() && !seen[m], "not a permutation");
            seen[m] = true;
        }
        Permutation(map)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn apply_sparse(&self, v: &SparseVec) -> SparseVec {
        // (p·w)_i = w_{p(i)}, so the entry at j moves to p^{-1}(j)
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        let mut out: SparseVec = v.iter().map(|(j, x)| (inv[*j], x.clone())).collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.0.iter().map(|&p| v[p].clone()).collect()
    }
}

pub(crate) fn reverse_digits(mut i: usize, n: usize, legs: usize) -> usize {
    let mut out = 0;
    for _ in 0..legs {
        out = out * n + i % n;
        i /= n;
    }
    out
}

/// Covectors `F` with `F(p·w) = 0` for all `w ∈ W`, written in the same
/// coordinates as `W`.
pub fn annihilator(w: &Subspace, pairing: &Permutation) -> Subspace {
    assert_eq!(pairing.len(), w.ambient_dim, "pairing size mismatch");
    let mut ech = Echelon::new(w.ambient_dim);
    for v in w.basis_sparse() {
        ech.insert(&pairing.apply_sparse(&v));
    }
    Subspace::from_sparse(w.ambient_dim, kernel_vectors(&ech))
}

/// The scalar by which `m` acts on `w`, certifying that `m w ⊆ w` and that
/// the restriction is scalar.
pub fn acts_as_scalar(m: &Mat, w: &Subspace) -> Result<Scalar, LinalgError> {
    if m.cols() != w.ambient_dim {
        return Err(LinalgError::AmbientMismatch(m.cols(), w.ambient_dim));
    }
    let images: Vec<Vec<Scalar>> = (0..w.dim()).map(|r| m.apply(w.basis.row(r))).collect();
    scalar_on_images(w, &images)
}

/// Same certificate as [`acts_as_scalar`], given the images of the stored
/// basis vectors of `w`.
pub fn scalar_on_images(w: &Subspace, images: &[Vec<Scalar>]) -> Result<Scalar, LinalgError> {
    if w.is_zero() {
        return Err(LinalgError::EmptySubspace);
    }
    assert_eq!(images.len(), w.dim());
    for img in images {
        if !w.contains(img) {
            return Err(LinalgError::NotInvariant);
        }
    }
    let lambda = images[0][w.pivots[0]].clone();
    for (r, img) in images.iter().enumerate() {
        let expected: Vec<Scalar> = w.basis.row(r).iter().map(|x| x * &lambda).collect();
        if img != &expected {
            return Err(LinalgError::NotScalar);
        }
    }
    Ok(lambda)
}
