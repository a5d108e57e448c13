//! Worked examples with known answers.

use nichols_core::braiding::HeckeBraiding;
use nichols_core::cy::{analyze_cy, superpotential_check};
use nichols_core::examples;
use nichols_core::frt::{action_matrices, homological_matrix, HomologicalData};
use nichols_core::input::{builtin, parse_input};
use nichols_core::linalg::Mat;
use nichols_core::nichols::{build_quadratic, graded_profile, Gldim};
use nichols_core::report::{analyze, Depth, Status};
use nichols_core::{braiding::Braiding, Scalar};

fn int(x: i64) -> Scalar {
    Scalar::from_int(x)
}

fn top(b: Braiding, cap: usize) -> (HeckeBraiding, HomologicalData, Vec<usize>) {
    let hb = HeckeBraiding::validate(b, None).unwrap();
    let qd = build_quadratic(&hb).unwrap();
    let gp = graded_profile(&qd, cap).unwrap();
    let d = gp.gldim.finite().unwrap();
    let hd = homological_matrix(&action_matrices(hb.braiding()), &gp.k[d], d, hb.label()).unwrap();
    (hb, hd, gp.dims_dual.clone())
}

#[test]
fn polynomial_ring_in_four_variables() {
    let b = examples::quantum_space(&[], 4);
    let (hb, hd, dims) = top(b, 5);
    assert_eq!(dims, vec![1, 4, 6, 4, 1, 0]);
    // w = Σ sgn(σ) x_σ, and rot is a 4-cycle, which is odd
    assert!(superpotential_check(&hd.spanning_vector, 4, 4));
    let res = analyze_cy(hb.braiding(), &hd, hb.label());
    assert!(res.is_cy);
    assert_eq!(res.descriptor_text, "R[4](-4)");
}

#[test]
fn polynomial_ring_in_two_variables() {
    let (hb, hd, dims) = top(examples::quantum_plane(int(1)), 4);
    assert_eq!(dims, vec![1, 2, 1, 0, 0]);
    assert!(superpotential_check(&hd.spanning_vector, 2, 2));
    assert!(analyze_cy(hb.braiding(), &hd, hb.label()).is_cy);
}

#[test]
fn quantum_plane_is_twisted() {
    let (hb, hd, _) = top(examples::quantum_plane(int(3)), 4);
    let res = analyze_cy(hb.braiding(), &hd, hb.label());
    assert!(!res.is_cy);
    assert_eq!(res.descriptor.twist, Mat::diag(&[int(3), Scalar::ratio(1, 3)]));
    assert!(!superpotential_check(&hd.spanning_vector, 2, 2));
}

#[test]
fn example2_profile() {
    let (hb, hd, dims) = top(examples::example2(), 5);
    assert_eq!(hb.label(), &int(1));
    assert_eq!(dims, vec![1, 4, 6, 4, 1, 0]);
    assert_eq!(hd.quantum_label, int(1));
    // every generator acts on the top Koszul component by −1
    assert_eq!(hd.matrix, Mat::scalar_identity(4, &int(-1)));
}

#[test]
fn example2_report() {
    let mut spec = builtin("example2", None).unwrap();
    spec.options.cap = Some(5);
    let rep = analyze(&spec, spec.to_json().as_bytes(), Depth::Full);
    assert_eq!(rep.status, Status::Completed);
    assert_eq!(rep.relations_dim, Some(6));
    assert_eq!(rep.dims_r.as_deref(), Some(&[1, 4, 10, 20, 35, 56][..]));
    assert_eq!(rep.gldim, Some(Gldim::Finite(4)));
    assert!(rep.koszul.as_ref().unwrap().exact);
    assert!(rep.as_regularity.as_ref().unwrap().regular);
    assert_eq!(rep.superpotential_cy, rep.is_cy);
    assert!(rep.oracle.as_ref().unwrap().agreement);
}

#[test]
fn explicit_document_matches_builtin() {
    let text = r#"{"name":"qp","dimension":2,"braiding":[
        ["1","0","0","0"],["0","0","2","0"],["0","1/2","0","0"],["0","0","0","1"]]}"#;
    let spec = parse_input(text).unwrap();
    assert_eq!(spec.braiding(), examples::quantum_plane(int(2)));
    let rep = analyze(&spec, text.as_bytes(), Depth::Full);
    assert_eq!(rep.twist, Some(Mat::diag(&[int(2), Scalar::ratio(1, 2)])));
}

#[test]
fn standard_gl2_is_not_cy() {
    let (hb, hd, dims) = top(examples::gl2_standard(int(2)), 4);
    assert_eq!(dims, vec![1, 2, 1, 0, 0]);
    assert_eq!(hd.matrix, Mat::scalar_identity(2, &int(8)));
    assert!(!superpotential_check(&hd.spanning_vector, 2, 2));
    assert!(!analyze_cy(hb.braiding(), &hd, hb.label()).is_cy);
}
