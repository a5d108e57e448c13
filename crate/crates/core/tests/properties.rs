//! Randomized invariants.

use nichols_core::braiding::{Braiding, HeckeBraiding};
use nichols_core::cy::{analyze_cy, superpotential_check};
use nichols_core::examples;
use nichols_core::frt::{action_matrices, homological_matrix};
use nichols_core::linalg::Mat;
use nichols_core::nichols::{build_quadratic, graded_profile, hilbert_identity, koszul_check, GradedProfile};
use nichols_core::Scalar;
use proptest::prelude::*;

fn param() -> impl Strategy<Value = Scalar> {
    (prop::sample::select(vec![1i64, 2, 3, 5, -1, -2]), any::<bool>()).prop_map(|(x, inv)| {
        let s = Scalar::from_int(x);
        if inv {
            s.recip().unwrap()
        } else {
            s
        }
    })
}

fn qmatrix() -> impl Strategy<Value = Mat> {
    (2usize..=3)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(param(), n * (n - 1) / 2)))
        .prop_map(|(n, vals)| {
            let mut q = Mat::identity(n);
            let mut it = vals.into_iter();
            for i in 0..n {
                for j in (i + 1)..n {
                    let v = it.next().unwrap();
                    q[(j, i)] = v.recip().unwrap();
                    q[(i, j)] = v;
                }
            }
            q
        })
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn profile(b: &Braiding, cap: usize) -> (HeckeBraiding, GradedProfile) {
    let hb = HeckeBraiding::validate(b.clone(), None).unwrap();
    let qd = build_quadratic(&hb).unwrap();
    let gp = graded_profile(&qd, cap).unwrap();
    (hb, gp)
}

fn inverse(b: &Braiding) -> Braiding {
    Braiding::new(b.dim(), b.table().inverse().unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn diagonal_family(q in qmatrix()) {
        let n = q.rows();
        let b = Braiding::diagonal(&q);
        let (hb, gp) = profile(&b, n + 1);
        let expected: Vec<usize> = (0..=n + 1).map(|k| binomial(n, k)).collect();
        prop_assert_eq!(&gp.dims_dual, &expected);
        prop_assert!(hilbert_identity(&gp));
        let qd = build_quadratic(&hb).unwrap();
        prop_assert!(koszul_check(&qd, &gp).is_ok());

        let hd = homological_matrix(&action_matrices(&b), &gp.k[n], n, hb.label()).unwrap();
        let res = analyze_cy(&b, &hd, hb.label());
        let prods: Vec<Scalar> = (0..n)
            .map(|i| (0..n).filter(|&j| j != i).fold(Scalar::one(), |acc, j| acc * &q[(i, j)]))
            .collect();
        prop_assert_eq!(&res.descriptor.twist, &Mat::diag(&prods));
        prop_assert_eq!(res.is_cy, prods.iter().all(Scalar::is_one));
        prop_assert_eq!(res.is_cy, superpotential_check(&hd.spanning_vector, n, n));
        prop_assert_eq!(res.is_cy, res.scalar_condition);
    }

    #[test]
    fn inverse_braiding_has_same_algebra(q in qmatrix()) {
        let b = Braiding::diagonal(&q);
        let (hb, gp) = profile(&b, 4);
        let (hi, gi) = profile(&inverse(&b), 4);
        prop_assert_eq!(hi.label(), &hb.label().recip().unwrap());
        prop_assert_eq!(gp.dims_r, gi.dims_r);
        prop_assert_eq!(gp.dims_dual, gi.dims_dual);
    }

    #[test]
    fn relabelling_conjugates_the_twist(q in qmatrix(), seed in any::<u64>()) {
        let n = q.rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let b = Braiding::diagonal(&q);
        let r = b.relabel(&perm);
        let run = |b: &Braiding| {
            let (hb, gp) = profile(b, n);
            let hd = homological_matrix(&action_matrices(b), &gp.k[n], n, hb.label()).unwrap();
            analyze_cy(b, &hd, hb.label())
        };
        let (a, c) = (run(&b), run(&r));
        prop_assert_eq!(a.is_cy, c.is_cy);
        for (x, &p) in perm.iter().enumerate() {
            prop_assert_eq!(&c.phi[(x, x)], &a.phi[(p, p)]);
        }
    }
}

#[test]
fn example2_relabelled() {
    let b = examples::example2();
    for perm in [[1, 0, 2, 3], [3, 2, 1, 0], [0, 2, 3, 1]] {
        let r = b.relabel(&perm);
        let (hb, gp) = profile(&r, 5);
        assert_eq!(gp.dims_dual, vec![1, 4, 6, 4, 1, 0]);
        let hd = homological_matrix(&action_matrices(&r), &gp.k[4], 4, hb.label()).unwrap();
        assert_eq!(hd.matrix, Mat::scalar_identity(4, &Scalar::from_int(-1)));
    }
}
