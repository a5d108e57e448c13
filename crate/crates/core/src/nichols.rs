//! The Nichols algebra `R = T(V)/(ker(c + 1))` of a Hecke braiding: its
//! quadratic data, graded dimensions of `R` and of the quadratic dual, the
//! global dimension, and the Koszul / AS-regularity evidence.
//!
//! `K_n = ∩_i V^{⊗i} ⊗ I ⊗ V^{⊗(n-2-i)} ⊆ V^{⊗n}` is the graded dual of
//! `R^!_n`. It is computed through `K_{n+1} = (V ⊗ K_n) ∩ (K_n ⊗ V)`.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::braiding::HeckeBraiding;
use crate::linalg::{annihilator, intersect, LinearMap, Permutation, SparseVec, Subspace};
use crate::quadratic::QuadraticAlgebra;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NicholsError {
    #[error("cap must be at least 2, got {0}")]
    CapTooSmall(usize),
    #[error("ker(c + 1) differs from im(c - q)")]
    EigenspaceMismatch,
    #[error("global dimension exceeds cap {0}")]
    GldimExceedsCap(usize),
    #[error("K_{0} is not contained in V ⊗ K_(n-1)")]
    SplittingFailed(usize),
    #[error("d∘d ≠ 0 in internal degree {t} at position {m}")]
    DifferentialNotNilpotent { t: usize, m: usize },
    #[error("NotExact({t}, {m})")]
    NotExact { t: usize, m: usize },
    #[error("NotASRegular({position}, {internal_degree})")]
    NotASRegular { position: usize, internal_degree: i64 },
}

/// Relations `I = ker(c + 1) ⊆ V⊗V` and the dual relations `I^⊥` in
/// `V*⊗V*`, where `(f ⊗ g)(x ⊗ y) = g(x) f(y)`.
#[derive(Clone, Debug)]
pub struct QuadraticData {
    pub dim: usize,
    pub label: Scalar,
    pub relations: Subspace,
    pub relations_perp: Subspace,
}

pub fn build_quadratic(b: &HeckeBraiding) -> Result<QuadraticData, NicholsError> {
    let q = b.label();
    let (relations, _) = b.braiding().hecke_split(q);
    if relations != b.braiding().image_c_minus_q(q) {
        return Err(NicholsError::EigenspaceMismatch);
    }
    let n = b.dim();
    let relations_perp = annihilator(&relations, &Permutation::tensor_reversal(n, 2));
    Ok(QuadraticData {
        dim: n,
        label: q.clone(),
        relations,
        relations_perp,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gldim {
    Finite(usize),
    ExceedsCap,
}

impl Gldim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Gldim::Finite(d) => Some(d),
            Gldim::ExceedsCap => None,
        }
    }
}

impl Serialize for Gldim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Gldim::Finite(d) => s.serialize_u64(*d as u64),
            Gldim::ExceedsCap => s.serialize_str("exceeds cap"),
        }
    }
}

/// Largest tensor degree explored by default: the largest `n` with
/// `N^n ≤ 30000`, at least 4, and at most 16 (reached only for `N = 1`).
pub fn default_cap(n: usize) -> usize {
    let mut cap = 0usize;
    let mut size = 1usize;
    while cap < 16 {
        match size.checked_mul(n) {
            Some(s) if s <= 30_000 => {
                size = s;
                cap += 1;
            }
            _ => break,
        }
    }
    cap.max(4)
}

#[derive(Clone, Debug)]
pub struct GradedProfile {
    pub cap: usize,
    pub dims_r: Vec<usize>,
    pub dims_dual: Vec<usize>,
    /// `K_n` for `n = 0..=cap`.
    pub k: Vec<Subspace>,
    pub gldim: Gldim,
    /// Normal-form model of `R` up to degree `cap`.
    pub algebra: QuadraticAlgebra,
}

impl GradedProfile {
    /// `J_n` as a canonical subspace of `V^{⊗n}` (dense; small `n` only).
    pub fn ideal_component(&self, n: usize) -> Subspace {
        self.algebra.ideal_component(n)
    }

    pub fn cap_exceeded(&self) -> bool {
        self.gldim == Gldim::ExceedsCap
    }

    /// Index of the last nonzero `K_n` within the cap.
    fn top_k(&self) -> usize {
        self.k.iter().rposition(|s| !s.is_zero()).unwrap_or(0)
    }
}

fn left_tensor(n: usize, k: &Subspace) -> Vec<SparseVec> {
    let amb = k.ambient_dim();
    let mut out = Vec::new();
    for a in 0..n {
        for row in k.basis_sparse() {
            out.push(row.into_iter().map(|(i, x)| (a * amb + i, x)).collect());
        }
    }
    out
}

fn right_tensor(n: usize, k: &Subspace) -> Vec<SparseVec> {
    let mut out = Vec::new();
    for row in k.basis_sparse() {
        for a in 0..n {
            out.push(row.iter().map(|(i, x)| (i * n + a, x.clone())).collect());
        }
    }
    out
}

pub fn graded_profile(qd: &QuadraticData, cap: usize) -> Result<GradedProfile, NicholsError> {
    if cap < 2 {
        return Err(NicholsError::CapTooSmall(cap));
    }
    let n = qd.dim;
    let mut k = vec![Subspace::full(1), Subspace::full(n), qd.relations.clone()];
    for deg in 3..=cap {
        let amb = n.pow(deg as u32);
        let prev = &k[deg - 1];
        let next = if prev.is_zero() {
            Subspace::zero(amb)
        } else {
            let left = Subspace::from_sparse(amb, left_tensor(n, prev));
            let right = Subspace::from_sparse(amb, right_tensor(n, prev));
            intersect(amb, &[left, right])
        };
        k.push(next);
    }
    let algebra = QuadraticAlgebra::new(n, qd.relations.clone(), cap);
    let dims_dual: Vec<usize> = k.iter().map(Subspace::dim).collect();
    let gldim = match dims_dual.iter().position(|&x| x == 0) {
        Some(z) => Gldim::Finite(z - 1),
        None => Gldim::ExceedsCap,
    };
    Ok(GradedProfile {
        cap,
        dims_r: algebra.dims(),
        dims_dual,
        k,
        gldim,
        algebra,
    })
}

/// For each basis vector `w` of `K_m`, its decomposition
/// `w = Σ_s v_s ⊗ y_s` with `y_s` expanded in the basis of `K_{m-1}`:
/// entries `(s, r', coefficient)`.
type Splitting = Vec<Vec<(usize, usize, Scalar)>>;

fn left_splitting(n: usize, k_m: &Subspace, k_prev: &Subspace, m: usize) -> Result<Splitting, NicholsError> {
    let tail = k_prev.ambient_dim();
    k_m.basis_sparse()
        .into_iter()
        .map(|row| {
            let mut slices: Vec<SparseVec> = vec![Vec::new(); n];
            for (i, x) in row {
                slices[i / tail].push((i % tail, x));
            }
            let mut entries = Vec::new();
            for (s, slice) in slices.iter().enumerate() {
                if slice.is_empty() {
                    continue;
                }
                let coords = k_prev
                    .coordinates_sparse(slice)
                    .ok_or(NicholsError::SplittingFailed(m))?;
                for (r, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((s, r, c));
                    }
                }
            }
            Ok(entries)
        })
        .collect()
}

fn to_sparse(acc: BTreeMap<usize, Scalar>) -> SparseVec {
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// One internal degree of the Koszul complex
/// `⋯ → R_{t-m} ⊗ K_m → R_{t-m+1} ⊗ K_{m-1} → ⋯ → R_t ⊗ K_0`.
#[derive(Clone, Debug, Serialize)]
pub struct KoszulDegree {
    pub t: usize,
    /// `dim C_m` for `m = 0..=top`.
    pub dims: Vec<usize>,
    /// `rank d_m` for `m = 1..=top` (index 0 unused, always 0).
    pub ranks: Vec<usize>,
    /// Homology before augmentation.
    pub homology: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KoszulTable {
    pub max_degree: usize,
    pub degrees: Vec<KoszulDegree>,
}

fn koszul_differential(
    gp: &GradedProfile,
    split: &Splitting,
    t: usize,
    m: usize,
) -> LinearMap {
    let alg = &gp.algebra;
    let km = gp.k[m].dim();
    let kp = gp.k[m - 1].dim();
    let src_r = alg.dim(t - m);
    let dst_r = alg.dim(t - m + 1);
    let cols = (0..src_r * km)
        .map(|col| {
            let (b, r) = (col / km, col % km);
            let e_b = vec![(b, Scalar::one())];
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (s, rp, coef) in &split[r] {
                for (c, a) in alg.mul_letter_right(t - m, &e_b, *s) {
                    *acc.entry(c * kp + rp).or_insert_with(Scalar::zero) += &(&a * coef);
                }
            }
            to_sparse(acc)
        })
        .collect();
    LinearMap::from_columns(dst_r * kp, cols)
}

fn splittings(qd: &QuadraticData, gp: &GradedProfile, top: usize) -> Result<Vec<Splitting>, NicholsError> {
    let mut out = vec![Vec::new()];
    for m in 1..=top {
        out.push(left_splitting(qd.dim, &gp.k[m], &gp.k[m - 1], m)?);
    }
    Ok(out)
}

/// Checks `d∘d = 0` and exactness of the Koszul complex in every internal
/// degree `t ≤ cap`; the only homology allowed is `k` at `t = 0`, `m = 0`.
pub fn koszul_check(qd: &QuadraticData, gp: &GradedProfile) -> Result<KoszulTable, NicholsError> {
    let top_k = gp.top_k();
    let split = splittings(qd, gp, top_k)?;
    let mut degrees = Vec::new();
    for t in 0..=gp.cap {
        let top = t.min(top_k);
        let dims: Vec<usize> = (0..=top).map(|m| gp.algebra.dim(t - m) * gp.k[m].dim()).collect();
        let maps: Vec<LinearMap> = (1..=top).map(|m| koszul_differential(gp, &split[m], t, m)).collect();
        for m in 2..=top {
            if !maps[m - 2].compose(&maps[m - 1]).is_zero() {
                return Err(NicholsError::DifferentialNotNilpotent { t, m });
            }
        }
        let mut ranks = vec![0; top + 2];
        for m in 1..=top {
            ranks[m] = maps[m - 1].rank();
        }
        let homology: Vec<usize> = (0..=top).map(|m| dims[m] - ranks[m] - ranks[m + 1]).collect();
        for (m, &h) in homology.iter().enumerate() {
            let expected = usize::from(t == 0 && m == 0);
            if h != expected {
                return Err(NicholsError::NotExact { t, m });
            }
        }
        ranks.truncate(top + 1);
        degrees.push(KoszulDegree { t, dims, ranks, homology });
    }
    Ok(KoszulTable {
        max_degree: gp.cap,
        degrees,
    })
}

/// `Σ (−1)^k dim R^!_k t^k · Σ dim R_n t^n ≡ 1 (mod t^{cap+1})`.
pub fn hilbert_identity(gp: &GradedProfile) -> bool {
    let cap = gp.cap;
    (0..=cap).all(|n| {
        let coeff: i128 = (0..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                sign * gp.dims_dual[k] as i128 * gp.dims_r[n - k] as i128
            })
            .sum();
        coeff == i128::from(n == 0)
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AsDegree {
    pub internal_degree: i64,
    /// Cohomology dimensions at positions `max(0, t)..=d`.
    pub first_position: usize,
    pub cohomology: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AsRegularity {
    pub d: usize,
    /// Inclusive range of internal degrees checked.
    pub window: (i64, i64),
    pub degrees: Vec<AsDegree>,
}

/// Cohomology of `Hom_R(K(R), R)`, whose position-`m` term is
/// `Hom_k(K_m, R) ≅ R^!_m ⊗ R`.
///
/// A map `g : K_{m-1} → R_{j-1}` goes to `w ↦ Σ_s v_s · g(y_s)` for
/// `w = Σ_s v_s ⊗ y_s`. The internal degree of `Hom(K_m, R_j)` is `m − j`,
/// so the class of `λ̌ ⊗ 1` sits at position `d`, internal degree `d`.
/// Degrees `t` with `d − t ≤ cap` only involve computed components.
pub fn as_regularity_check(qd: &QuadraticData, gp: &GradedProfile) -> Result<AsRegularity, NicholsError> {
    let d = gp.gldim.finite().ok_or(NicholsError::GldimExceedsCap(gp.cap))?;
    let split = splittings(qd, gp, d)?;
    let alg = &gp.algebra;
    let lo = d as i64 - gp.cap as i64;
    let left: Vec<Vec<Vec<SparseVec>>> = (0..gp.cap).map(|j| alg.left_mult_table(j)).collect();

    let mut degrees = Vec::new();
    for t in lo..=(d as i64) {
        let first = t.max(0) as usize;
        let r_deg = |m: usize| (m as i64 - t) as usize;
        let dims: Vec<usize> = (first..=d).map(|m| gp.k[m].dim() * alg.dim(r_deg(m))).collect();
        // δ_m : C^{m-1} → C^m for m in first+1..=d
        let mut ranks = vec![0usize; d + 2];
        for m in (first + 1)..=d {
            let j = r_deg(m);
            let (dr_src, dr_dst) = (alg.dim(j - 1), alg.dim(j));
            let src = gp.k[m - 1].dim() * dr_src;
            let mut cols: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); src];
            for (r, entries) in split[m].iter().enumerate() {
                for (s, rp, coef) in entries {
                    for bp in 0..dr_src {
                        for (b, a) in &left[j - 1][bp][*s] {
                            *cols[rp * dr_src + bp]
                                .entry(r * dr_dst + b)
                                .or_insert_with(Scalar::zero) += &(a * coef);
                        }
                    }
                }
            }
            let map = LinearMap::from_columns(
                gp.k[m].dim() * dr_dst,
                cols.into_iter().map(to_sparse).collect(),
            );
            ranks[m] = map.rank();
        }
        let cohomology: Vec<usize> = (first..=d)
            .map(|m| dims[m - first] - ranks[m] - if m < d { ranks[m + 1] } else { 0 })
            .collect();
        for (off, &h) in cohomology.iter().enumerate() {
            let m = first + off;
            let expected = usize::from(m == d && t == d as i64);
            if h != expected {
                return Err(NicholsError::NotASRegular {
                    position: m,
                    internal_degree: t,
                });
            }
        }
        degrees.push(AsDegree {
            internal_degree: t,
            first_position: first,
            cohomology,
        });
    }
    Ok(AsRegularity {
        d,
        window: (lo, d as i64),
        degrees,
    })
}
