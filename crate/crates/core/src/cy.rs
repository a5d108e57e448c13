//! The twist `φ` of the rigid dualizing complex `_{φε^{d+1}}R[d](−d)` and
//! the Calabi-Yau verdict.

use std::fmt;

use serde::Serialize;

use crate::braiding::Braiding;
use crate::frt::HomologicalData;
use crate::linalg::Mat;
use crate::scalar::Scalar;

fn sign(d: usize) -> Scalar {
    if d.is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

/// `Φ[l][i] = −q^{-1} Q Σ_{j,k} d_{lk} c^{jk}_{ji}`, i.e. `φ(v_i) = Σ_l Φ[l][i] v_l`.
pub fn phi_automorphism(b: &Braiding, hd: &HomologicalData, q: &Scalar) -> Mat {
    let n = b.dim();
    let pre = -(q.recip().expect("label is nonzero") * &hd.quantum_label);
    // contraction t[k][i] = Σ_j c^{jk}_{ji}
    let mut t = Mat::zeros(n, n);
    for k in 0..n {
        for i in 0..n {
            let mut acc = Scalar::zero();
            for j in 0..n {
                acc += b.coeff(j, i, j, k);
            }
            t[(k, i)] = acc;
        }
    }
    hd.matrix.mul(&t).scale(&pre)
}

/// `Φ = (−1)^{d+1} I`.
pub fn cy_verdict(phi: &Mat, d: usize) -> bool {
    *phi == Mat::scalar_identity(phi.rows(), &sign(d + 1))
}

/// The entrywise scalar condition, summed over `j` and `k` with `l`, `i`
/// free, evaluated without forming `Φ`.
pub fn scalar_condition(b: &Braiding, hd: &HomologicalData, q: &Scalar) -> bool {
    let n = b.dim();
    let pre = -(q.recip().expect("label is nonzero") * &hd.quantum_label);
    let target = sign(hd.d + 1);
    (0..n).all(|l| {
        (0..n).all(|i| {
            let mut acc = Scalar::zero();
            for j in 0..n {
                for k in 0..n {
                    let c = b.coeff(j, i, j, k);
                    let dd = &hd.matrix[(l, k)];
                    if !c.is_zero() && !dd.is_zero() {
                        acc += &(dd * c);
                    }
                }
            }
            let value = &pre * &acc;
            if l == i {
                value == target
            } else {
                value.is_zero()
            }
        })
    })
}

/// `rot(w) = (−1)^{d+1} w` for the spanning vector `w` of `K_d`, where
/// `rot(x_1 ⊗ ⋯ ⊗ x_d) = x_d ⊗ x_1 ⊗ ⋯ ⊗ x_{d-1}`. For a Koszul AS-regular
/// algebra this is the superpotential form of the Calabi-Yau condition and
/// does not use the FRT action.
pub fn superpotential_check(w: &[Scalar], n: usize, d: usize) -> bool {
    let rotated = rotate_last_to_front(w, n, d);
    let s = sign(d + 1);
    rotated.iter().zip(w).all(|(r, x)| *r == &s * x)
}

pub(crate) fn rotate_last_to_front(w: &[Scalar], n: usize, d: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); w.len()];
    if d == 0 {
        out.clone_from_slice(w);
        return out;
    }
    let high = n.pow((d - 1) as u32);
    for (idx, x) in w.iter().enumerate() {
        out[(idx % n) * high + idx / n] = x.clone();
    }
    out
}

/// `_{φε^{d+1}}R[d](−d)`: twist on generators, homological shift `d`,
/// internal shift `−d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Descriptor {
    pub twist: Mat,
    pub shift: usize,
    pub internal_shift: i64,
}

impl Descriptor {
    pub fn untwisted(&self) -> bool {
        self.twist.is_identity()
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.shift;
        if self.untwisted() {
            write!(f, "R[{d}](-{d})")
        } else {
            let rows: Vec<String> = self
                .twist
                .to_strings()
                .into_iter()
                .map(|r| format!("[{}]", r.join(", ")))
                .collect();
            write!(f, "_{{phi eps^{}}}R[{d}](-{d}) with twist [{}]", d + 1, rows.join(", "))
        }
    }
}

pub fn dualizing_descriptor(phi: &Mat, d: usize) -> Descriptor {
    Descriptor {
        twist: phi.scale(&sign(d + 1)),
        shift: d,
        internal_shift: -(d as i64),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CyResult {
    pub phi: Mat,
    pub d: usize,
    pub is_cy: bool,
    pub scalar_condition: bool,
    pub descriptor: Descriptor,
    pub descriptor_text: String,
}

pub fn analyze_cy(b: &Braiding, hd: &HomologicalData, q: &Scalar) -> CyResult {
    let phi = phi_automorphism(b, hd, q);
    let descriptor = dualizing_descriptor(&phi, hd.d);
    CyResult {
        is_cy: cy_verdict(&phi, hd.d),
        scalar_condition: scalar_condition(b, hd, q),
        descriptor_text: descriptor.to_string(),
        descriptor,
        phi,
        d: hd.d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::HeckeBraiding;
    use crate::examples;
    use crate::frobenius::{build_dual_tables, frobenius_form, nakayama_bruteforce, nakayama_formula_deg1};
    use crate::frt::{action_matrices, homological_matrix};
    use crate::nichols::{build_quadratic, graded_profile};

    fn int(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    struct Run {
        b: Braiding,
        q: Scalar,
        hd: HomologicalData,
        eta: Mat,
    }

    fn run(b: Braiding) -> Run {
        let hb = HeckeBraiding::validate(b, None).unwrap();
        let qd = build_quadratic(&hb).unwrap();
        let gp = graded_profile(&qd, 6).unwrap();
        let d = gp.gldim.finite().unwrap();
        let hd = homological_matrix(&action_matrices(hb.braiding()), &gp.k[d], d, hb.label()).unwrap();
        let t = build_dual_tables(&qd, &gp).unwrap();
        let eta = nakayama_bruteforce(&t, &frobenius_form(&t).unwrap()).unwrap().degree_one().clone();
        Run {
            q: hb.label().clone(),
            b: hb.braiding().clone(),
            hd,
            eta,
        }
    }

    fn suite() -> Vec<Braiding> {
        vec![
            examples::trivial1(),
            examples::quantum_plane(int(1)),
            examples::quantum_plane(int(2)),
            examples::quantum_space(&[(0, 1, int(2)), (0, 2, Scalar::ratio(1, 2)), (1, 2, int(1))], 3),
            examples::quantum_space(&[(0, 1, int(2)), (0, 2, Scalar::ratio(1, 3)), (1, 2, int(3))], 3),
            examples::example2(),
            examples::gl2_standard(int(2)),
            examples::scalar1(int(3)),
        ]
    }

    #[test]
    fn quantum_plane_twist() {
        let r = run(examples::quantum_plane(int(2)));
        let phi = phi_automorphism(&r.b, &r.hd, &r.q);
        assert_eq!(phi, Mat::diag(&[int(-2), Scalar::ratio(-1, 2)]));
        assert!(!cy_verdict(&phi, 2));
        let desc = dualizing_descriptor(&phi, 2);
        assert_eq!(desc.twist, Mat::diag(&[int(2), Scalar::ratio(1, 2)]));
        assert_eq!((desc.shift, desc.internal_shift), (2, -2));
        assert_eq!(desc.to_string(), "_{phi eps^3}R[2](-2) with twist [[2, 0], [0, 1/2]]");
    }

    #[test]
    fn polynomial_rings_are_cy() {
        let r = run(examples::quantum_plane(int(1)));
        let phi = phi_automorphism(&r.b, &r.hd, &r.q);
        assert_eq!(phi, Mat::scalar_identity(2, &int(-1)));
        assert!(cy_verdict(&phi, 2));
        assert_eq!(dualizing_descriptor(&phi, 2).to_string(), "R[2](-2)");

        let r = run(examples::trivial1());
        let phi = phi_automorphism(&r.b, &r.hd, &r.q);
        assert_eq!(phi, Mat::identity(1));
        assert!(cy_verdict(&phi, 1));
        assert_eq!(dualizing_descriptor(&phi, 1).to_string(), "R[1](-1)");
    }

    #[test]
    fn example2_verdict() {
        let r = run(examples::example2());
        let res = analyze_cy(&r.b, &r.hd, &r.q);
        // computed: D = −I, so φ = I and the twist is −1 on generators
        assert_eq!(r.hd.matrix, Mat::scalar_identity(4, &int(-1)));
        assert_eq!(res.phi, Mat::identity(4));
        assert!(!res.is_cy);
        assert_eq!(res.descriptor.twist, Mat::scalar_identity(4, &int(-1)));
        assert!(!superpotential_check(&r.hd.spanning_vector, 4, 4));
    }

    #[test]
    fn phi_is_transpose_of_nakayama() {
        for b in suite().into_iter().filter(|b| b != &examples::gl2_standard(int(2))) {
            let r = run(b);
            let e = nakayama_formula_deg1(&r.b, &r.hd, &r.q);
            assert_eq!(e, r.eta);
            assert_eq!(phi_automorphism(&r.b, &r.hd, &r.q), e.transpose());
        }
    }

    #[test]
    fn closed_formula_differs_for_standard_gl2() {
        // R is the quantum plane v2v1 = 2 v1v2; its dual has η = diag(−1/2, −2),
        // while the partial-trace formula gives diag(−7/8, −1/2) with D = 8I
        let r = run(examples::gl2_standard(int(2)));
        assert_eq!(r.hd.matrix, Mat::scalar_identity(2, &int(8)));
        assert_eq!(r.eta, Mat::diag(&[Scalar::ratio(-1, 2), int(-2)]));
        let e = nakayama_formula_deg1(&r.b, &r.hd, &r.q);
        assert_eq!(e, Mat::diag(&[Scalar::ratio(-7, 8), Scalar::ratio(-1, 2)]));
    }

    #[test]
    fn verdict_forms_agree() {
        for b in suite() {
            let r = run(b);
            let res = analyze_cy(&r.b, &r.hd, &r.q);
            assert_eq!(res.is_cy, res.scalar_condition);
            assert_eq!(res.is_cy, res.descriptor.untwisted());
            assert_eq!(res.is_cy, superpotential_check(&r.hd.spanning_vector, r.b.dim(), r.hd.d));
        }
    }

    #[test]
    fn diagonal_twist_is_row_product() {
        let q = [[int(1), int(2), Scalar::ratio(1, 3)], [Scalar::ratio(1, 2), int(1), int(3)], [int(3), Scalar::ratio(1, 3), int(1)]];
        let r = run(examples::quantum_space(&[(0, 1, int(2)), (0, 2, Scalar::ratio(1, 3)), (1, 2, int(3))], 3));
        let desc = dualizing_descriptor(&phi_automorphism(&r.b, &r.hd, &r.q), r.hd.d);
        for i in 0..3 {
            let mut prod = Scalar::one();
            for j in 0..3 {
                if j != i {
                    prod *= &q[i][j];
                }
            }
            assert_eq!(desc.twist[(i, i)], prod);
        }
    }

    #[test]
    fn rotation_cycles() {
        let w: Vec<Scalar> = (0..8).map(int).collect();
        let mut cur = w.clone();
        for _ in 0..3 {
            cur = rotate_last_to_front(&cur, 2, 3);
        }
        assert_eq!(cur, w);
        assert_eq!(rotate_last_to_front(&w, 2, 3)[0b100], int(0b001));
    }
}
