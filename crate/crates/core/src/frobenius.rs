//! Brute-force model of the Frobenius algebra `R^! = T(V*)/(I^⊥)`:
//! structure constants, the Frobenius form, and the Nakayama automorphism
//! solved from `f(xy) = f(y η(x))`. Serves as an oracle for the closed
//! degree-one formula.

use serde::Serialize;

use crate::braiding::Braiding;
use crate::frt::HomologicalData;
use crate::linalg::{Mat, SparseVec};
use crate::nichols::{GradedProfile, QuadraticData};
use crate::quadratic::QuadraticAlgebra;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("global dimension is not finite within the cap")]
    NoTopDegree,
    #[error("NotFrobeniusShape: dual dimensions {0:?}")]
    NotFrobeniusShape(Vec<usize>),
    #[error("DegenerateForm({0})")]
    DegenerateForm(usize),
    #[error("NotMultiplicative: degrees ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("table is not associative in degrees ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
}

/// Structure constants of `R^!` on non-pivot monomial bases, degrees `0..=d`.
#[derive(Clone, Debug)]
pub struct DualAlgebraTables {
    pub d: usize,
    algebra: QuadraticAlgebra,
    /// `products[a][b][x][y]`: product of basis `x` of degree `a` and `y`
    /// of degree `b`, for `a + b ≤ d`.
    products: Vec<Vec<Vec<Vec<SparseVec>>>>,
}

pub fn build_dual_tables(qd: &QuadraticData, gp: &GradedProfile) -> Result<DualAlgebraTables, OracleError> {
    let d = gp.gldim.finite().ok_or(OracleError::NoTopDegree)?;
    let algebra = QuadraticAlgebra::new(qd.dim, qd.relations_perp.clone(), d + 1);
    let dims = algebra.dims();
    if dims[..=d] != gp.dims_dual[..=d] || dims[d] != 1 || dims[d + 1] != 0 {
        return Err(OracleError::NotFrobeniusShape(dims));
    }
    let products = (0..=d)
        .map(|a| {
            (0..=d - a)
                .map(|b| {
                    (0..dims[a])
                        .map(|x| {
                            (0..dims[b])
                                .map(|y| algebra.multiply(a, &vec![(x, Scalar::one())], b, &vec![(y, Scalar::one())]))
                                .collect()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(DualAlgebraTables { d, algebra, products })
}

impl DualAlgebraTables {
    pub fn dim(&self, degree: usize) -> usize {
        self.algebra.dim(degree)
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.d).map(|k| self.dim(k)).collect()
    }

    /// Basis monomials of degree `k`, as words in `v_1^*, …, v_N^*`.
    pub fn basis(&self, k: usize) -> &[Vec<usize>] {
        self.algebra.words(k)
    }

    /// The monomial representing `λ̌`.
    pub fn top_word(&self) -> &[usize] {
        &self.algebra.words(self.d)[0]
    }

    pub fn product(&self, a: usize, x: usize, b: usize, y: usize) -> &SparseVec {
        &self.products[a][b][x][y]
    }

    /// Product of homogeneous elements, `a + b ≤ d`.
    pub fn multiply(&self, a: usize, x: &SparseVec, b: usize, y: &SparseVec) -> SparseVec {
        let mut acc = vec![Scalar::zero(); self.dim(a + b)];
        for (i, s) in x {
            for (j, t) in y {
                let st = s * t;
                for (k, c) in self.product(a, *i, b, *j) {
                    acc[*k] += &(c * &st);
                }
            }
        }
        acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Exhaustive associativity over basis triples with total degree `≤ d`.
    pub fn check_associative(&self) -> Result<(), OracleError> {
        let d = self.d;
        for a in 0..=d {
            for b in 0..=d - a {
                for c in 0..=d - a - b {
                    for x in 0..self.dim(a) {
                        for y in 0..self.dim(b) {
                            let xy = self.product(a, x, b, y);
                            for z in 0..self.dim(c) {
                                let ez = vec![(z, Scalar::one())];
                                let left = self.multiply(a + b, xy, c, &ez);
                                let yz = self.product(b, y, c, z);
                                let right = self.multiply(a, &vec![(x, Scalar::one())], b + c, yz);
                                if left != right {
                                    return Err(OracleError::NotAssociative(a, b, c));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Gram blocks `G_k[x][y] = λ̌`-coefficient of `x·y`, `x ∈ R^!_k`,
/// `y ∈ R^!_{d-k}`.
#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusForm {
    pub blocks: Vec<Mat>,
}

impl FrobeniusForm {
    pub fn value(&self, k: usize, x: usize, y: usize) -> &Scalar {
        &self.blocks[k][(x, y)]
    }
}

pub fn frobenius_form(t: &DualAlgebraTables) -> Result<FrobeniusForm, OracleError> {
    let d = t.d;
    let blocks: Vec<Mat> = (0..=d)
        .map(|k| {
            let mut g = Mat::zeros(t.dim(k), t.dim(d - k));
            for x in 0..t.dim(k) {
                for y in 0..t.dim(d - k) {
                    if let Some((_, c)) = t.product(k, x, d - k, y).first() {
                        g[(x, y)] = c.clone();
                    }
                }
            }
            g
        })
        .collect();
    for (k, g) in blocks.iter().enumerate() {
        if !g.is_invertible() {
            return Err(OracleError::DegenerateForm(k));
        }
    }
    Ok(FrobeniusForm { blocks })
}

/// Graded Nakayama automorphism: `blocks[k][c][a]` is the coefficient of
/// basis `c` in `η(x_a)`.
#[derive(Clone, Debug, Serialize)]
pub struct Nakayama {
    pub blocks: Vec<Mat>,
}

impl Nakayama {
    pub fn degree_one(&self) -> &Mat {
        &self.blocks[1]
    }

    pub fn apply(&self, k: usize, x: &SparseVec) -> SparseVec {
        let m = &self.blocks[k];
        let mut acc = vec![Scalar::zero(); m.rows()];
        for (a, s) in x {
            for (c, slot) in acc.iter_mut().enumerate() {
                let e = &m[(c, *a)];
                if !e.is_zero() {
                    *slot += &(e * s);
                }
            }
        }
        acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// Solves `B(x, y) = B(y, η(x))` degree by degree, i.e.
/// `E_k = G_{d-k}^{-1} G_k^T`, then checks `η(xy) = η(x)η(y)` on every
/// basis product.
pub fn nakayama_bruteforce(t: &DualAlgebraTables, form: &FrobeniusForm) -> Result<Nakayama, OracleError> {
    let d = t.d;
    let blocks: Vec<Mat> = (0..=d)
        .map(|k| {
            let inv = form.blocks[d - k].inverse().ok_or(OracleError::DegenerateForm(d - k))?;
            Ok(inv.mul(&form.blocks[k].transpose()))
        })
        .collect::<Result<_, OracleError>>()?;
    let eta = Nakayama { blocks };
    for a in 0..=d {
        for b in 0..=d - a {
            for x in 0..t.dim(a) {
                let ex = eta.apply(a, &vec![(x, Scalar::one())]);
                for y in 0..t.dim(b) {
                    let ey = eta.apply(b, &vec![(y, Scalar::one())]);
                    let lhs = eta.apply(a + b, t.product(a, x, b, y));
                    if lhs != t.multiply(a, &ex, b, &ey) {
                        return Err(OracleError::NotMultiplicative(a, b));
                    }
                }
            }
        }
    }
    Ok(eta)
}

/// `E[l][i] = −q^{-1} Q Σ_{j,k} d_{ik} c^{jk}_{jl}`.
pub fn nakayama_formula_deg1(b: &Braiding, hd: &HomologicalData, q: &Scalar) -> Mat {
    let n = b.dim();
    let pre = -(q.recip().expect("label is nonzero") * &hd.quantum_label);
    let mut e = Mat::zeros(n, n);
    for l in 0..n {
        for i in 0..n {
            let mut acc = Scalar::zero();
            for j in 0..n {
                for k in 0..n {
                    let c = b.coeff(j, l, j, k);
                    if !c.is_zero() {
                        acc += &(&hd.matrix[(i, k)] * c);
                    }
                }
            }
            e[(l, i)] = &pre * &acc;
        }
    }
    e
}

/// The modular function of `R^!` is the counit: `1·λ̌ = λ̌·1 = λ̌` and every
/// generator kills `λ̌` on both sides (hence so does every positive-degree
/// element).
#[derive(Clone, Debug, Serialize)]
pub struct ModularFacts {
    pub unit_fixes_top: bool,
    pub generators_annihilate_top: bool,
}

impl ModularFacts {
    pub fn alpha_is_counit(&self) -> bool {
        self.unit_fixes_top && self.generators_annihilate_top
    }
}

pub fn modular_facts(t: &DualAlgebraTables) -> ModularFacts {
    let d = t.d;
    let top = vec![(0, Scalar::one())];
    let unit_fixes_top = t.product(0, 0, d, 0) == &top && t.product(d, 0, 0, 0) == &top;
    let generators_annihilate_top = (0..t.dim(1)).all(|s| {
        let e = vec![(s, Scalar::one())];
        t.algebra.multiply(1, &e, d, &top).is_empty() && t.algebra.multiply(d, &top, 1, &e).is_empty()
    });
    ModularFacts {
        unit_fixes_top,
        generators_annihilate_top,
    }
}
