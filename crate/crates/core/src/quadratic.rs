//! Graded quotients `T(V)/(I)` of a tensor algebra by quadratic relations,
//! with deterministic monomial normal forms.
//!
//! Words of length `n` are ordered lexicographically (the composite index
//! order on `V^{⊗n}`). In every degree the basis is the set of words that
//! are not pivots of the reduced echelon form of the ideal component
//! `J_n = Σ V^{⊗i} ⊗ I ⊗ V^{⊗(n-2-i)}`. Degree `n + 1` is obtained from
//! degree `n` without ever materializing `J_{n+1}`: a word is reduced by
//! reducing its prefix first, so only the relations `R_{n-1} ⊗ I` pushed
//! into `R_n ⊗ V` need eliminating.

use std::collections::BTreeMap;

use crate::linalg::echelon::{axpy, scale};
use crate::linalg::{Echelon, SparseVec, Subspace};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
struct Piece {
    words: Vec<Vec<usize>>,
    /// `right_mult[b][k]` = normal form of `words_{n-1}[b] · v_k`; empty
    /// in degree 0.
    right_mult: Vec<Vec<SparseVec>>,
}

#[derive(Clone, Debug)]
pub struct QuadraticAlgebra {
    gens: usize,
    relations: Subspace,
    pieces: Vec<Piece>,
}

impl QuadraticAlgebra {
    /// Builds degrees `0..=max_degree` of `T(V)/(relations)`, with
    /// `relations ⊆ V⊗V` given in lexicographic coordinates.
    pub fn new(gens: usize, relations: Subspace, max_degree: usize) -> Self {
        assert_eq!(relations.ambient_dim(), gens * gens, "relations must live in V⊗V");
        let mut alg = QuadraticAlgebra {
            gens,
            relations,
            pieces: vec![Piece {
                words: vec![Vec::new()],
                right_mult: Vec::new(),
            }],
        };
        if max_degree >= 1 {
            alg.pieces.push(Piece {
                words: (0..gens).map(|k| vec![k]).collect(),
                right_mult: vec![(0..gens).map(|k| vec![(k, Scalar::one())]).collect()],
            });
        }
        while alg.max_degree() < max_degree {
            alg.push_degree();
        }
        alg
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn max_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.pieces[degree].words.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.words.len()).collect()
    }

    /// Standard monomials of the given degree, lexicographically sorted.
    pub fn words(&self, degree: usize) -> &[Vec<usize>] {
        &self.pieces[degree].words
    }

    fn push_degree(&mut self) {
        let n = self.max_degree();
        let g = self.gens;
        let prev = &self.pieces[n - 1];
        let cur = &self.pieces[n];
        let cols = cur.words.len() * g;
        let rel_rows = self.relations.basis_sparse();

        let mut ech = Echelon::new(cols);
        for b in 0..prev.words.len() {
            for rel in &rel_rows {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (xy, coef) in rel {
                    let (x, y) = (xy / g, xy % g);
                    for (c, a) in &cur.right_mult[b][x] {
                        let e = acc.entry(c * g + y).or_insert_with(Scalar::zero);
                        *e += &(a * coef);
                    }
                }
                let row: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                ech.insert(&row);
            }
        }

        let mut position = vec![usize::MAX; cols];
        let mut words = Vec::new();
        for col in 0..cols {
            if !ech.is_pivot(col) {
                position[col] = words.len();
                let mut w = cur.words[col / g].clone();
                w.push(col % g);
                words.push(w);
            }
        }
        let right_mult = (0..cur.words.len())
            .map(|b| {
                (0..g)
                    .map(|k| {
                        let col = b * g + k;
                        match ech.pivot_row(col) {
                            None => vec![(position[col], Scalar::one())],
                            Some(row) => row
                                .iter()
                                .skip(1)
                                .map(|(f, x)| (position[*f], -x))
                                .collect(),
                        }
                    })
                    .collect()
            })
            .collect();
        self.pieces.push(Piece { words, right_mult });
    }

    /// `x · v_letter` for `x` in the given degree.
    pub fn mul_letter_right(&self, degree: usize, x: &SparseVec, letter: usize) -> SparseVec {
        let table = &self.pieces[degree + 1].right_mult;
        let mut out = Vec::new();
        for (b, c) in x {
            out = axpy(&out, c, &table[*b][letter]);
        }
        out
    }

    /// `x · w` for a word `w`.
    pub fn mul_word_right(&self, degree: usize, x: &SparseVec, word: &[usize]) -> SparseVec {
        let mut cur = x.clone();
        for (k, &l) in word.iter().enumerate() {
            if cur.is_empty() {
                break;
            }
            cur = self.mul_letter_right(degree + k, &cur, l);
        }
        cur
    }

    /// Normal form of an arbitrary word.
    pub fn normal_form(&self, word: &[usize]) -> SparseVec {
        self.mul_word_right(0, &vec![(0, Scalar::one())], word)
    }

    /// `v_letter · x` for `x` in the given degree.
    pub fn mul_letter_left(&self, letter: usize, degree: usize, x: &SparseVec) -> SparseVec {
        let e = vec![(letter, Scalar::one())];
        let mut out = Vec::new();
        for (b, c) in x {
            let prod = self.mul_word_right(1, &e, &self.pieces[degree].words[*b]);
            out = axpy(&out, c, &prod);
        }
        out
    }

    /// Table of `v_s · b` for every basis word `b` of the given degree,
    /// indexed `[b][s]`.
    pub fn left_mult_table(&self, degree: usize) -> Vec<Vec<SparseVec>> {
        (0..self.dim(degree))
            .map(|b| {
                (0..self.gens)
                    .map(|s| self.mul_letter_left(s, degree, &vec![(b, Scalar::one())]))
                    .collect()
            })
            .collect()
    }

    /// Product of homogeneous elements.
    pub fn multiply(&self, da: usize, a: &SparseVec, db: usize, b: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (k, c) in b {
            let prod = self.mul_word_right(da, a, &self.pieces[db].words[*k]);
            out = axpy(&out, &Scalar::one(), &scale(&prod, c));
        }
        out
    }

    /// Lexicographic composite index of a word in `V^{⊗len}`.
    pub fn word_index(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &l| acc * self.gens + l)
    }

    /// The ideal component `J_n` as a canonical subspace of `V^{⊗n}`:
    /// spanned by `w − NF(w)` over all words `w`. Dense, so only sensible
    /// for small `N^n`.
    pub fn ideal_component(&self, degree: usize) -> Subspace {
        let total = self.gens.pow(degree as u32);
        let mut rows = Vec::new();
        for idx in 0..total {
            let word = digits(idx, self.gens, degree);
            let nf = self.normal_form(&word);
            let mut row: SparseVec = nf
                .iter()
                .map(|(b, c)| (self.word_index(&self.pieces[degree].words[*b]), -c))
                .collect();
            row.push((idx, Scalar::one()));
            row.sort_by_key(|(i, _)| *i);
            let row = merge_duplicates(row);
            if !row.is_empty() {
                rows.push(row);
            }
        }
        Subspace::from_sparse(total, rows)
    }
}

pub(crate) fn digits(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = idx % base;
        idx /= base;
    }
    out
}

fn merge_duplicates(row: SparseVec) -> SparseVec {
    let mut out: SparseVec = Vec::with_capacity(row.len());
    for (i, x) in row {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += &x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sum;

    fn rel(n: usize, terms: &[(usize, i64)]) -> Subspace {
        let mut v = vec![Scalar::zero(); n * n];
        for &(i, x) in terms {
            v[i] = Scalar::from_int(x);
        }
        Subspace::from_vectors(n * n, &[v])
    }

    #[test]
    fn free_algebra_has_all_words() {
        let a = QuadraticAlgebra::new(2, Subspace::zero(4), 4);
        assert_eq!(a.dims(), vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn commutative_polynomials() {
        // xy = yx
        let a = QuadraticAlgebra::new(2, rel(2, &[(1, 1), (2, -1)]), 5);
        assert_eq!(a.dims(), vec![1, 2, 3, 4, 5, 6]);
        // yx reduces to xy
        assert_eq!(a.normal_form(&[1, 0]), a.normal_form(&[0, 1]));
    }

    #[test]
    fn exterior_algebra_stops() {
        // x², y², xy + yx
        let i = Subspace::from_vectors(
            4,
            &[
                vec![1, 0, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 1, 1, 0],
            ]
            .into_iter()
            .map(|v: Vec<i64>| v.into_iter().map(Scalar::from_int).collect())
            .collect::<Vec<_>>(),
        );
        let a = QuadraticAlgebra::new(2, i, 4);
        assert_eq!(a.dims(), vec![1, 2, 1, 0, 0]);
    }

    /// Brute-force oracle: sum of all shifts of I inside V^{⊗n}.
    fn ideal_bruteforce(gens: usize, i: &Subspace, n: usize) -> Subspace {
        let total = gens.pow(n as u32);
        let mut parts = Vec::new();
        for left in 0..=(n - 2) {
            let right = n - 2 - left;
            let (lw, rw) = (gens.pow(left as u32), gens.pow(right as u32));
            let mut vecs = Vec::new();
            for l in 0..lw {
                for r in 0..rw {
                    for row in i.basis_sparse() {
                        vecs.push(
                            row.iter()
                                .map(|(xy, c)| ((l * gens * gens + xy) * rw + r, c.clone()))
                                .collect(),
                        );
                    }
                }
            }
            parts.push(Subspace::from_sparse(total, vecs));
        }
        sum(total, &parts)
    }

    #[test]
    fn recursive_normal_forms_match_bruteforce_ideal() {
        let b = crate::examples::example2();
        let (i, _) = b.hecke_split(&Scalar::one());
        let a = QuadraticAlgebra::new(4, i.clone(), 4);
        for n in 2..=4 {
            let brute = ideal_bruteforce(4, &i, n);
            assert_eq!(a.ideal_component(n), brute, "degree {n}");
            assert_eq!(a.dim(n) + brute.dim(), 4usize.pow(n as u32));
        }
        let q = crate::examples::gl2_standard(Scalar::from_int(3));
        let (i, _) = q.hecke_split(&Scalar::from_int(9));
        let a = QuadraticAlgebra::new(2, i.clone(), 5);
        for n in 2..=5 {
            assert_eq!(a.ideal_component(n), ideal_bruteforce(2, &i, n));
        }
    }

    #[test]
    fn multiplication_is_associative() {
        let (i, _) = crate::examples::example2().hecke_split(&Scalar::one());
        let a = QuadraticAlgebra::new(4, i, 5);
        let one = |b: usize| vec![(b, Scalar::one())];
        for (da, db, dc) in [(1, 1, 1), (1, 2, 1), (2, 1, 2), (1, 1, 3)] {
            for x in 0..a.dim(da) {
                for y in 0..a.dim(db) {
                    for z in 0..a.dim(dc) {
                        let xy = a.multiply(da, &one(x), db, &one(y));
                        let yz = a.multiply(db, &one(y), dc, &one(z));
                        assert_eq!(
                            a.multiply(da + db, &xy, dc, &one(z)),
                            a.multiply(da, &one(x), db + dc, &yz)
                        );
                    }
                }
            }
        }
    }
}
