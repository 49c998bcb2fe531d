//! Exact linear algebra over GF(2) and GF(2)[U].

mod bits;
mod poly;
mod smith;
mod sparse;
mod umatrix;

pub use bits::{rank_of_rows, BitRow};
pub use poly::F2Poly;
pub use smith::{graded_homology_fu, smith_form_fu, FreeSummand, SmithForm, TorsionSummand, UModule};
pub use sparse::{homology_dims_f2, kernel_basis, rank_f2, rank_of_bitrows, SparseF2Matrix};
pub use umatrix::F2UMatrix;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn u(k: usize) -> F2Poly {
        F2Poly::monomial(k)
    }

    // Plain row echelon over Vec<Vec<bool>>, nothing shared with the engine.
    fn dense_rank(mut m: Vec<Vec<bool>>) -> usize {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| m[r][c]) else { continue };
            m.swap(rank, p);
            for r in 0..rows {
                if r != rank && m[r][c] {
                    let pivot = m[rank].clone();
                    m[r].iter_mut().zip(pivot).for_each(|(x, y)| *x ^= y);
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_f2(&SparseF2Matrix::identity(3)), 3);
        assert_eq!(rank_f2(&SparseF2Matrix::zeros(4, 5)), 0);
        let ones = SparseF2Matrix::from_dense(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(rank_f2(&ones), 1);
    }

    #[test]
    fn rank_matches_dense_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..60 {
            let rows = rng.gen_range(1..=200);
            let cols = rng.gen_range(1..=200);
            let density = [0.01, 0.05, 0.3, 0.5][trial % 4];
            let dense: Vec<Vec<bool>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_bool(density)).collect())
                .collect();
            let entries = (0..rows)
                .flat_map(|i| (0..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| dense[i][j]);
            let m = SparseF2Matrix::from_entries(rows, cols, entries).unwrap();
            assert_eq!(rank_f2(&m), dense_rank(dense));
        }
    }

    #[test]
    fn bad_entries_rejected() {
        assert!(matches!(
            SparseF2Matrix::from_entries(2, 2, [(2, 0)]),
            Err(Error::OutOfBounds { .. })
        ));
        assert_eq!(SparseF2Matrix::from_entries(2, 2, [(1, 1), (1, 1)]), Err(Error::DuplicateEntry(1, 1)));
    }

    #[test]
    fn homology_examples() {
        let z01 = SparseF2Matrix::zeros(1, 0);
        let z10 = SparseF2Matrix::zeros(0, 1);
        assert_eq!(homology_dims_f2(&z01, &z10).unwrap(), 1);

        // x -> y with dx = y: spots x and y.
        let d = SparseF2Matrix::identity(1);
        assert_eq!(homology_dims_f2(&SparseF2Matrix::zeros(1, 0), &d).unwrap(), 0);
        assert_eq!(homology_dims_f2(&d, &SparseF2Matrix::zeros(0, 1)).unwrap(), 0);

        let out = SparseF2Matrix::from_dense(&[vec![1, 1]]).unwrap();
        assert_eq!(homology_dims_f2(&SparseF2Matrix::zeros(2, 0), &out).unwrap(), 1);

        let bad = homology_dims_f2(&SparseF2Matrix::identity(1), &SparseF2Matrix::identity(1));
        assert_eq!(bad, Err(Error::CompositionNonzero));
    }

    #[test]
    fn canceling_pair_leaves_homology() {
        // 2 -> 2 -> 1 complex, then the same with an extra pair x -> y in
        // the first two spots.
        let d1 = SparseF2Matrix::from_dense(&[vec![1, 0], vec![1, 0]]).unwrap();
        let d2 = SparseF2Matrix::from_dense(&[vec![1, 1]]).unwrap();
        let h = homology_dims_f2(&d1, &d2).unwrap();
        let d1x = SparseF2Matrix::from_dense(&[vec![1, 0, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        let d2x = SparseF2Matrix::from_dense(&[vec![1, 1, 0]]).unwrap();
        assert_eq!(homology_dims_f2(&d1x, &d2x).unwrap(), h);
    }

    #[test]
    fn kernel_basis_is_kernel() {
        let m = SparseF2Matrix::from_dense(&[vec![1, 1, 0, 1], vec![0, 1, 1, 0]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in 0..2 {
                let s = (0..4).filter(|&c| m.get(r, c) && v.get(c)).count();
                assert_eq!(s % 2, 0);
            }
        }
    }

    #[test]
    fn poly_arithmetic() {
        let a = F2Poly::from_exponents(&[0, 1]);
        let sq = a.mul(&a);
        assert_eq!(sq, F2Poly::from_exponents(&[0, 2]));
        let (q, r) = F2Poly::from_exponents(&[0, 3]).divrem(&a);
        assert_eq!(q, F2Poly::from_exponents(&[0, 1, 2]));
        assert!(r.is_zero());
        assert_eq!(u(70).degree(), Some(70));
        assert_eq!(u(70).mul(&u(70)), u(140));
        assert_eq!(u(3).as_monomial(), Some(3));
        assert_eq!(a.as_monomial(), None);
        assert_eq!(format!("{}", F2Poly::from_exponents(&[0, 1, 4])), "U^4 + U + 1");
    }

    fn check_smith(m: &F2UMatrix) -> Vec<F2Poly> {
        let s = smith_form_fu(m);
        let diag = F2UMatrix::diagonal(m.rows(), m.cols(), &s.invariant_factors).unwrap();
        let back = s.row_transform.mul(&diag).unwrap().mul(&s.col_transform).unwrap();
        assert_eq!(&back, m);
        for w in s.invariant_factors.windows(2) {
            assert!(w[0].divides(&w[1]), "{:?}", s.invariant_factors);
        }
        s.invariant_factors
    }

    #[test]
    fn smith_examples() {
        let m = F2UMatrix::from_dense(&[vec![u(2)]]).unwrap();
        assert_eq!(check_smith(&m), vec![u(2)]);
        let m = F2UMatrix::from_dense(&[vec![u(0)]]).unwrap();
        assert_eq!(check_smith(&m), vec![u(0)]);
        // diag(U, U^3), then U * row 1 added to row 2.
        let m = F2UMatrix::from_dense(&[vec![u(1), F2Poly::zero()], vec![u(2), u(3)]]).unwrap();
        assert_eq!(check_smith(&m), vec![u(1), u(3)]);
    }

    #[test]
    fn smith_random_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..80 {
            let rows = rng.gen_range(0..6);
            let cols = rng.gen_range(0..6);
            let dense: Vec<Vec<F2Poly>> = (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| {
                            if rng.gen_bool(0.4) {
                                F2Poly::zero()
                            } else {
                                let exps: Vec<usize> =
                                    (0..4).filter(|_| rng.gen_bool(0.5)).collect();
                                F2Poly::from_exponents(&exps)
                            }
                        })
                        .collect()
                })
                .collect();
            let m = F2UMatrix::from_dense(&dense).unwrap();
            check_smith(&m);
        }
    }

    #[test]
    fn smith_noncoprime_entries() {
        // [[U, U+1]] has gcd 1.
        let m = F2UMatrix::from_dense(&[vec![u(1), F2Poly::from_exponents(&[0, 1])]]).unwrap();
        assert_eq!(check_smith(&m), vec![u(0)]);
        // diag(U, U+1) has factors 1, U^2+U.
        let m = F2UMatrix::from_dense(&[
            vec![u(1), F2Poly::zero()],
            vec![F2Poly::zero(), F2Poly::from_exponents(&[0, 1])],
        ])
        .unwrap();
        assert_eq!(check_smith(&m), vec![u(0), F2Poly::from_exponents(&[1, 2])]);
    }

    #[test]
    fn graded_homology_trefoil_minus() {
        // a(0,1), b(-1,0), c(-2,-1); only the b -> U a term survives in the
        // associated graded of the i <= 0 part for the j-preserving pieces,
        // together with b -> c.
        let g = [(0, 1), (-1, 0), (-2, -1)];
        let d = F2UMatrix::from_entries(3, 3, [((0, 1), u(1)), ((2, 1), u(0))]);
        // b -> c lowers alexander, so it is not homogeneous here.
        assert!(matches!(graded_homology_fu(&d.unwrap(), &g, (-2, -1)), Err(Error::NonHomogeneous)));
        let d = F2UMatrix::from_entries(3, 3, [((0, 1), u(1))]).unwrap();
        let h = graded_homology_fu(&d, &g, (-2, -1)).unwrap();
        assert_eq!(h.free_summands, vec![FreeSummand { maslov: -2, alexander: -1 }]);
        assert_eq!(h.torsion_summands, vec![TorsionSummand { order: 1, maslov: 0, alexander: 1 }]);
    }
}
