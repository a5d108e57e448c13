//! Braided vector spaces `(V, c)` given by a coefficient table.
//!
//! The table is `N² × N²` with rows indexed by the input pair `(i, j)` and
//! columns by the output pair `(m, n)`, both in lexicographic order, so
//! `table[(i,j)][(m,n)] = c^{mn}_{ij}` and
//! `c(v_i ⊗ v_j) = Σ c^{mn}_{ij} v_m ⊗ v_n`.

use crate::linalg::{kron, rref, Mat, Subspace};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidingError {
    #[error("dimension mismatch: expected a {expected}x{expected} table, got {rows}x{cols}")]
    DimensionMismatch {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("braid equation fails")]
    NotBraided,
    #[error("braiding is not invertible on V⊗V")]
    NotInvertible,
    #[error("NotHecke: no admissible label q with (c - q)(c + 1) = 0")]
    NotHecke,
    #[error("LabelAmbiguous: c = -id satisfies (c - q)(c + 1) = 0 for every q")]
    LabelAmbiguous,
    #[error("BadLabel: label {0} is 0, -1 or a nontrivial root of unity")]
    BadLabel(Scalar),
    #[error("braiding is not rigid")]
    NotRigid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Braiding {
    dim: usize,
    table: Mat,
}

impl Braiding {
    pub fn new(dim: usize, table: Mat) -> Result<Self, BraidingError> {
        let expected = dim * dim;
        if dim == 0 || table.rows() != expected || table.cols() != expected {
            return Err(BraidingError::DimensionMismatch {
                expected,
                rows: table.rows(),
                cols: table.cols(),
            });
        }
        Ok(Braiding { dim, table })
    }

    /// `c(v_i ⊗ v_j) = q_{ij} v_j ⊗ v_i`.
    pub fn diagonal(q: &Mat) -> Self {
        assert!(q.is_square());
        let n = q.rows();
        let mut table = Mat::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                table[(i * n + j, j * n + i)] = q[(i, j)].clone();
            }
        }
        Braiding { dim: n, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The input table, rows = input pairs.
    pub fn table(&self) -> &Mat {
        &self.table
    }

    /// `c^{mn}_{ij}` (0-based indices).
    pub fn coeff(&self, i: usize, j: usize, m: usize, n: usize) -> &Scalar {
        let d = self.dim;
        &self.table[(i * d + j, m * d + n)]
    }

    /// Matrix of `c` on `V⊗V`: column `(i,j)` holds the coordinates of
    /// `c(v_i ⊗ v_j)`.
    pub fn operator_on_v2(&self) -> Mat {
        self.table.transpose()
    }

    pub fn is_invertible(&self) -> bool {
        self.table.is_invertible()
    }

    /// `(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c)` on `V^{⊗3}`.
    pub fn validate_braid_equation(&self) -> bool {
        let c = self.operator_on_v2();
        let id = Mat::identity(self.dim);
        let c1 = kron(&c, &id);
        let c2 = kron(&id, &c);
        c1.mul(&c2).mul(&c1) == c2.mul(&c1).mul(&c2)
    }

    /// Returns the Hecke label `q` with `(c − q)(c + 1) = 0`.
    ///
    /// With a hint the hint is verified; otherwise `q` is solved from
    /// `C² + C = q (C + I)`, every nonzero entry of `C + I` having to agree.
    pub fn verify_label(&self, hint: Option<&Scalar>) -> Result<Scalar, BraidingError> {
        let c = self.operator_on_v2();
        let n2 = c.rows();
        let lhs = c.mul(&c).add(&c);
        let shifted = c.add(&Mat::identity(n2));
        let q = match hint {
            Some(q) => q.clone(),
            None => {
                let Some(k) = shifted.entries().iter().position(|x| !x.is_zero()) else {
                    return Err(BraidingError::LabelAmbiguous);
                };
                &lhs.entries()[k] / &shifted.entries()[k]
            }
        };
        if lhs != shifted.scale(&q) {
            return Err(BraidingError::NotHecke);
        }
        if q.is_zero() || q == Scalar::from_int(-1) {
            return Err(BraidingError::BadLabel(q));
        }
        Ok(q)
    }

    /// `(ker(c + 1), ker(c − q))`.
    pub fn hecke_split(&self, q: &Scalar) -> (Subspace, Subspace) {
        let c = self.operator_on_v2();
        let n2 = c.rows();
        let plus = rref(&c.add(&Mat::identity(n2))).kernel;
        let minus = rref(&c.sub(&Mat::scalar_identity(n2, q))).kernel;
        (plus, minus)
    }

    /// Image of `c − q` on `V⊗V`.
    pub fn image_c_minus_q(&self, q: &Scalar) -> Subspace {
        let c = self.operator_on_v2();
        Subspace::column_space(&c.sub(&Mat::scalar_identity(c.rows(), q)))
    }

    /// Matrix of `c^b : V*⊗V → V⊗V*`; the entry at output `(n,k)`, input
    /// `(i,j)` is `c^{in}_{jk}`.
    pub fn rigidity_matrix(&self) -> Mat {
        let d = self.dim;
        let mut m = Mat::zeros(d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                for n in 0..d {
                    for k in 0..d {
                        m[(n * d + k, i * d + j)] = self.coeff(j, k, i, n).clone();
                    }
                }
            }
        }
        m
    }

    /// `c^b` assembled as the composite
    /// `(ev ⊗ id)(id ⊗ c ⊗ id)(id ⊗ db)` of explicit matrices.
    pub fn rigidity_matrix_composite(&self) -> Mat {
        let d = self.dim;
        let d2 = d * d;
        // id_{V*⊗V} ⊗ db : V*⊗V → V*⊗V⊗V⊗V*
        let mut db = Mat::zeros(d2 * d2, d2);
        for ab in 0..d2 {
            for k in 0..d {
                db[(ab * d2 + k * d + k, ab)] = Scalar::one();
            }
        }
        let idn = Mat::identity(d);
        let middle = kron(&idn, &kron(&self.operator_on_v2(), &idn));
        // ev ⊗ id_{V⊗V*} : V*⊗V⊗V⊗V* → V⊗V*
        let mut ev = Mat::zeros(1, d2);
        for a in 0..d {
            ev[(0, a * d + a)] = Scalar::one();
        }
        let ev = kron(&ev, &Mat::identity(d2));
        ev.mul(&middle).mul(&db)
    }

    pub fn rigidity_check(&self) -> bool {
        self.rigidity_matrix().is_invertible()
    }

    /// Same braiding written in the basis `w_a = v_{perm[a]}`.
    pub fn relabel(&self, perm: &[usize]) -> Braiding {
        let d = self.dim;
        assert_eq!(perm.len(), d);
        let mut table = Mat::zeros(d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                for m in 0..d {
                    for n in 0..d {
                        table[(i * d + j, m * d + n)] =
                            self.coeff(perm[i], perm[j], perm[m], perm[n]).clone();
                    }
                }
            }
        }
        Braiding { dim: d, table }
    }

    /// Replaces one table entry; used for mutation testing.
    pub fn with_entry(&self, row: usize, col: usize, value: Scalar) -> Braiding {
        let mut table = self.table.clone();
        table[(row, col)] = value;
        Braiding {
            dim: self.dim,
            table,
        }
    }
}

/// A braiding that passed every input check: braid equation,
/// invertibility, Hecke label and rigidity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeBraiding {
    braiding: Braiding,
    label: Scalar,
}

impl HeckeBraiding {
    pub fn validate(b: Braiding, hint: Option<&Scalar>) -> Result<Self, BraidingError> {
        if !b.is_invertible() {
            return Err(BraidingError::NotInvertible);
        }
        if !b.validate_braid_equation() {
            return Err(BraidingError::NotBraided);
        }
        let label = b.verify_label(hint)?;
        if !b.rigidity_check() {
            return Err(BraidingError::NotRigid);
        }
        Ok(HeckeBraiding { braiding: b, label })
    }

    pub fn braiding(&self) -> &Braiding {
        &self.braiding
    }

    pub fn label(&self) -> &Scalar {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.braiding.dim
    }
}
