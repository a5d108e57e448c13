//! Action of the FRT generators `T^n_i` on `V` and on its tensor powers.
//!
//! `T^n_i · v_j = Σ_m c^{mn}_{ij} v_m`, and on `V^{⊗m}` through
//! `Δ(T^j_i) = Σ_k T^k_i ⊗ T^j_k`.

use serde::Serialize;

use crate::braiding::Braiding;
use crate::linalg::{kron, scalar_on_images, LinalgError, Mat, Subspace};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrtError {
    #[error("top component K_d has dimension {0}, expected 1")]
    TopNotLine(usize),
    #[error("generator T^{upper}_{lower} on K_d: {source}")]
    Action {
        upper: usize,
        lower: usize,
        source: LinalgError,
    },
}

/// The `N²` matrices `A[n][i]` with `A[n][i][m][j] = c^{mn}_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionFamily {
    n: usize,
    mats: Vec<Mat>,
}

pub fn action_matrices(b: &Braiding) -> ActionFamily {
    let n = b.dim();
    let mut mats = Vec::with_capacity(n * n);
    for upper in 0..n {
        for lower in 0..n {
            let mut a = Mat::zeros(n, n);
            for m in 0..n {
                for j in 0..n {
                    a[(m, j)] = b.coeff(lower, j, m, upper).clone();
                }
            }
            mats.push(a);
        }
    }
    ActionFamily { n, mats }
}

impl ActionFamily {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Matrix of `T^upper_lower` on `V`.
    pub fn matrix(&self, upper: usize, lower: usize) -> &Mat {
        &self.mats[upper * self.n + lower]
    }

    /// Full matrix of `T^upper_lower` on `V^{⊗m}`, `m ≥ 1`.
    pub fn diagonal_action(&self, upper: usize, lower: usize, m: usize) -> Mat {
        assert!(m >= 1);
        if m == 1 {
            return self.matrix(upper, lower).clone();
        }
        let size = self.n.pow(m as u32);
        let mut acc = Mat::zeros(size, size);
        for k in 0..self.n {
            let head = self.matrix(k, lower);
            if head.is_zero() {
                continue;
            }
            acc = acc.add(&kron(head, &self.diagonal_action(upper, k, m - 1)));
        }
        acc
    }

    fn apply_on_leg(&self, a: &Mat, leg: usize, legs: usize, v: &[Scalar], out: &mut [Scalar]) {
        let n = self.n;
        let stride = n.pow((legs - 1 - leg) as u32);
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let src = (idx / stride) % n;
            let base = idx - src * stride;
            for dst in 0..n {
                let coef = &a[(dst, src)];
                if !coef.is_zero() {
                    out[base + dst * stride] += &(coef * x);
                }
            }
        }
    }

    /// Images of `v ∈ V^{⊗legs}` under `T^u_lower` for every `u`, without
    /// forming the `N^legs × N^legs` matrices.
    pub fn apply_diagonal(&self, lower: usize, legs: usize, v: &[Scalar]) -> Vec<Vec<Scalar>> {
        let n = self.n;
        let len = v.len();
        debug_assert_eq!(len, n.pow(legs as u32));
        if legs == 0 {
            return (0..n).map(|u| if u == lower { v.to_vec() } else { vec![Scalar::zero(); len] }).collect();
        }
        let mut state: Vec<Vec<Scalar>> = (0..n)
            .map(|k| {
                let mut out = vec![Scalar::zero(); len];
                self.apply_on_leg(self.matrix(k, lower), 0, legs, v, &mut out);
                out
            })
            .collect();
        for leg in 1..legs {
            let mut next = vec![vec![Scalar::zero(); len]; n];
            for (k, s) in state.iter().enumerate() {
                if s.iter().all(Scalar::is_zero) {
                    continue;
                }
                for (k2, slot) in next.iter_mut().enumerate() {
                    self.apply_on_leg(self.matrix(k2, k), leg, legs, s, slot);
                }
            }
            state = next;
        }
        state
    }
}

/// `Σ c^{kl}_{ij} A[m][k]·A[n][l] = Σ A[k][i]·A[l][j]·c^{mn}_{kl}` for all
/// `i, j, m, n`, products being compositions on `V`.
pub fn rtt_check(b: &Braiding, af: &ActionFamily) -> bool {
    let n = b.dim();
    let prods: Vec<Mat> = (0..n * n)
        .flat_map(|x| (0..n * n).map(move |y| (x, y)))
        .map(|(x, y)| af.mats[x].mul(&af.mats[y]))
        .collect();
    let prod = |u1: usize, l1: usize, u2: usize, l2: usize| &prods[(u1 * n + l1) * n * n + u2 * n + l2];
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                for nn in 0..n {
                    let mut lhs = Mat::zeros(n, n);
                    let mut rhs = Mat::zeros(n, n);
                    for k in 0..n {
                        for l in 0..n {
                            let c1 = b.coeff(i, j, k, l);
                            if !c1.is_zero() {
                                lhs = lhs.add(&prod(m, k, nn, l).scale(c1));
                            }
                            let c2 = b.coeff(k, l, m, nn);
                            if !c2.is_zero() {
                                rhs = rhs.add(&prod(k, i, l, j).scale(c2));
                            }
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `c` commutes with the diagonal action of every generator on `V⊗V`.
pub fn h_linearity_check(b: &Braiding, af: &ActionFamily) -> bool {
    let c = b.operator_on_v2();
    let n = b.dim();
    (0..n).all(|u| {
        (0..n).all(|l| {
            let m2 = af.diagonal_action(u, l, 2);
            c.mul(&m2) == m2.mul(&c)
        })
    })
}

/// Every generator maps `w ⊆ V^{⊗legs}` into itself.
pub fn stability_check(af: &ActionFamily, w: &Subspace, legs: usize) -> bool {
    (0..w.dim()).all(|r| {
        let v = w.basis_vector(r);
        (0..af.dim()).all(|lower| af.apply_diagonal(lower, legs, &v).iter().all(|img| w.contains(img)))
    })
}

/// `(−q^{−1})^d`.
pub fn quantum_label(q: &Scalar, d: usize) -> Scalar {
    (-q.recip().expect("label is nonzero")).pow(d as i32)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologicalData {
    pub d: usize,
    /// Quantum label `Q`.
    #[serde(rename = "Q")]
    pub quantum_label: Scalar,
    /// `D[i][j] = hdet(T^i_j)`.
    #[serde(rename = "D")]
    pub matrix: Mat,
    /// Spanning vector of `K_d` in `V^{⊗d}`.
    pub spanning_vector: Vec<Scalar>,
}

pub fn homological_matrix(
    af: &ActionFamily,
    k_d: &Subspace,
    d: usize,
    q: &Scalar,
) -> Result<HomologicalData, FrtError> {
    if k_d.dim() != 1 {
        return Err(FrtError::TopNotLine(k_d.dim()));
    }
    let n = af.dim();
    let w = k_d.basis_vector(0);
    let mut matrix = Mat::zeros(n, n);
    for lower in 0..n {
        let images = af.apply_diagonal(lower, d, &w);
        for (upper, img) in images.into_iter().enumerate() {
            matrix[(upper, lower)] = scalar_on_images(k_d, &[img]).map_err(|source| FrtError::Action {
                upper,
                lower,
                source,
            })?;
        }
    }
    Ok(HomologicalData {
        d,
        quantum_label: quantum_label(q, d),
        matrix,
        spanning_vector: w,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::HeckeBraiding;
    use crate::examples;
    use crate::nichols::{build_quadratic, graded_profile};

    fn int(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    fn suite() -> Vec<Braiding> {
        vec![
            examples::trivial1(),
            examples::quantum_plane(int(2)),
            examples::quantum_plane(Scalar::ratio(1, 3)),
            examples::quantum_space(&[(0, 1, int(2)), (0, 2, Scalar::ratio(1, 3)), (1, 2, int(3))], 3),
            examples::example2(),
            examples::gl2_standard(int(2)),
        ]
    }

    #[test]
    fn quantum_plane_matrices() {
        let af = action_matrices(&examples::quantum_plane(int(2)));
        assert!(af.matrix(0, 1).is_zero());
        assert!(af.matrix(1, 0).is_zero());
        assert_eq!(af.matrix(0, 0), &Mat::diag(&[int(1), int(2)]));
        assert_eq!(af.matrix(1, 1), &Mat::diag(&[Scalar::ratio(1, 2), int(1)]));
        let d = Mat::diag(&[int(1), int(2)]);
        assert_eq!(af.diagonal_action(0, 0, 2), kron(&d, &d));
    }

    #[test]
    fn example2_matrices_are_zero_one() {
        let af = action_matrices(&examples::example2());
        for u in 0..4 {
            for l in 0..4 {
                assert!(af.matrix(u, l).entries().iter().all(|x| x.is_zero() || x.is_one()));
            }
        }
        let m2 = af.diagonal_action(0, 0, 2);
        for r in 0..16 {
            let ones = m2.row(r).iter().filter(|x| !x.is_zero()).count();
            assert!(ones <= 1);
            assert!(m2.row(r).iter().all(|x| x.is_zero() || x.is_one()));
        }
    }

    #[test]
    fn trivial_matrix() {
        let af = action_matrices(&examples::trivial1());
        assert_eq!(af.matrix(0, 0), &Mat::identity(1));
    }

    #[test]
    fn generator_action_matches_braiding() {
        for b in suite() {
            let n = b.dim();
            let af = action_matrices(&b);
            for upper in 0..n {
                for lower in 0..n {
                    for j in 0..n {
                        let mut e = vec![Scalar::zero(); n];
                        e[j] = Scalar::one();
                        let img = af.matrix(upper, lower).apply(&e);
                        for (m, x) in img.iter().enumerate() {
                            assert_eq!(x, b.coeff(lower, j, m, upper));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rtt_relations_hold() {
        for b in suite() {
            assert!(rtt_check(&b, &action_matrices(&b)));
        }
    }

    #[test]
    fn rtt_detects_broken_braiding() {
        let b = examples::quantum_plane(int(2)).with_entry(1, 1, int(1));
        assert!(!b.validate_braid_equation());
        assert!(!rtt_check(&b, &action_matrices(&b)));
    }

    #[test]
    fn h_linearity_holds() {
        for b in suite() {
            assert!(h_linearity_check(&b, &action_matrices(&b)));
        }
    }

    #[test]
    fn multiplicative_across_degrees() {
        for b in [examples::example2(), examples::gl2_standard(int(3))] {
            let af = action_matrices(&b);
            let n = b.dim();
            for (a, c) in [(1, 1), (1, 2), (2, 1)] {
                for u in 0..n {
                    for l in 0..n {
                        let mut rhs = Mat::zeros(n.pow(a + c), n.pow(a + c));
                        for k in 0..n {
                            rhs = rhs.add(&kron(
                                &af.diagonal_action(k, l, a as usize),
                                &af.diagonal_action(u, k, c as usize),
                            ));
                        }
                        assert_eq!(af.diagonal_action(u, l, (a + c) as usize), rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn contraction_matches_full_matrix() {
        let af = action_matrices(&examples::gl2_standard(int(2)));
        let v: Vec<Scalar> = (0..8).map(|i| Scalar::ratio(i * i - 3, 2)).collect();
        for lower in 0..2 {
            let images = af.apply_diagonal(lower, 3, &v);
            for (upper, img) in images.iter().enumerate() {
                assert_eq!(img, &af.diagonal_action(upper, lower, 3).apply(&v));
            }
        }
    }

    #[test]
    fn relations_and_koszul_components_are_stable() {
        for b in suite() {
            let hb = HeckeBraiding::validate(b, None).unwrap();
            let qd = build_quadratic(&hb).unwrap();
            let gp = graded_profile(&qd, 5).unwrap();
            let af = action_matrices(hb.braiding());
            for m in 1..=5 {
                assert!(stability_check(&af, &gp.k[m], m), "K_{m}");
            }
        }
    }

    #[test]
    fn quantum_labels() {
        assert_eq!(quantum_label(&int(1), 3), int(-1));
        assert_eq!(quantum_label(&int(1), 4), int(1));
        assert_eq!(quantum_label(&int(5), 0), int(1));
        assert_eq!(quantum_label(&int(2), 3), Scalar::ratio(-1, 8));
    }

    fn homological(b: Braiding) -> HomologicalData {
        let hb = HeckeBraiding::validate(b, None).unwrap();
        let qd = build_quadratic(&hb).unwrap();
        let gp = graded_profile(&qd, 6).unwrap();
        let d = gp.gldim.finite().unwrap();
        homological_matrix(&action_matrices(hb.braiding()), &gp.k[d], d, hb.label()).unwrap()
    }

    #[test]
    fn homological_matrix_examples() {
        // the top line of Example 2 carries the sign character of each T^i_i
        let h = homological(examples::example2());
        assert_eq!((h.d, &h.quantum_label), (4, &int(1)));
        assert_eq!(h.matrix, Mat::scalar_identity(4, &int(-1)));

        let h = homological(examples::quantum_plane(int(2)));
        assert_eq!(h.matrix, Mat::diag(&[int(2), Scalar::ratio(1, 2)]));
        assert_eq!(h.quantum_label, int(1));

        let h = homological(examples::trivial1());
        assert_eq!((h.d, &h.quantum_label, &h.matrix), (1, &int(-1), &Mat::identity(1)));

        let h = homological(examples::quantum_space(
            &[(0, 1, int(2)), (0, 2, Scalar::ratio(1, 3)), (1, 2, int(3))],
            3,
        ));
        assert_eq!(h.matrix, Mat::diag(&[Scalar::ratio(2, 3), Scalar::ratio(3, 2), int(1)]));
        assert_eq!(h.quantum_label, int(-1));
    }

    #[test]
    fn homological_matrix_is_basis_free() {
        let b = examples::gl2_standard(int(2));
        let hb = HeckeBraiding::validate(b, None).unwrap();
        let qd = build_quadratic(&hb).unwrap();
        let gp = graded_profile(&qd, 4).unwrap();
        let d = gp.gldim.finite().unwrap();
        let af = action_matrices(hb.braiding());
        let h = homological_matrix(&af, &gp.k[d], d, hb.label()).unwrap();
        let scaled: Vec<Scalar> = h.spanning_vector.iter().map(|x| x * &Scalar::ratio(-7, 3)).collect();
        for lower in 0..2 {
            for (upper, img) in af.apply_diagonal(lower, d, &scaled).iter().enumerate() {
                let expected: Vec<Scalar> = scaled.iter().map(|x| x * &h.matrix[(upper, lower)]).collect();
                assert_eq!(img, &expected);
            }
        }
    }
}
