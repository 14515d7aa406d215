//! Property tests for the exact kernels, plus the cofactor-expansion oracle
//! for the characteristic polynomial.

use proptest::prelude::*;

use orbit_core::matrix::ExactMatrix;
use orbit_core::partitions::Partition;
use orbit_core::poly::{all_roots_purely_imaginary, all_roots_real, Poly};
use orbit_core::scalar::{parse_gaussian, rat, GaussianRational};

fn small_gaussian() -> impl Strategy<Value = GaussianRational> {
    ((-4i64..=4), (1i64..=3), (-4i64..=4), (1i64..=3))
        .prop_map(|(rn, rd, in_, id)| GaussianRational::new(rat(rn, rd), rat(in_, id)))
}

fn small_matrix(max_dim: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max_dim).prop_flat_map(|n| {
        proptest::collection::vec(small_gaussian(), n * n).prop_map(move |entries| {
            ExactMatrix::from_fn(n, n, |r, c| entries[r * n + c].clone())
        })
    })
}

fn rect_matrix() -> impl Strategy<Value = ExactMatrix> {
    ((1usize..=5), (1usize..=5)).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c).prop_map(move |entries| {
            ExactMatrix::from_fn(r, c, |i, j| GaussianRational::from_int(entries[i * c + j]))
        })
    })
}

/// Cofactor (Laplace) expansion of `det(tI - M)` over the polynomial ring;
/// exponential, fine up to 5x5, independent of the Hessenberg path.
fn charpoly_by_cofactors(m: &ExactMatrix) -> Poly {
    let n = m.rows();
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut p = Poly::constant(-m.at(r, c));
                    if r == c {
                        p = &p + &Poly::monomial(GaussianRational::one(), 1);
                    }
                    p
                })
                .collect()
        })
        .collect();
    fn det(rows: &[Vec<Poly>], cols: &[usize]) -> Poly {
        if cols.len() == 1 {
            return rows[rows.len() - cols.len()][cols[0]].clone();
        }
        let row = rows.len() - cols.len();
        let mut acc = Poly::zero();
        for (k, &c) in cols.iter().enumerate() {
            let minor_cols: Vec<usize> =
                cols.iter().copied().filter(|&cc| cc != c).collect();
            let term = &rows[row][c] * &det(rows, &minor_cols);
            if k % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }
    let cols: Vec<usize> = (0..n).collect();
    det(&entries, &cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn charpoly_matches_cofactor_oracle(m in small_matrix(5)) {
        let fast = m.charpoly().unwrap();
        let slow = charpoly_by_cofactors(&m);
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn cayley_hamilton(m in small_matrix(6)) {
        let p = m.charpoly().unwrap();
        prop_assert!(m.eval_poly(&p).is_zero());
    }

    #[test]
    fn kernel_vectors_are_killed_and_independent(m in rect_matrix()) {
        let basis = m.kernel_basis();
        prop_assert_eq!(basis.len(), m.cols() - m.rank());
        for v in &basis {
            prop_assert!(m.apply(v).iter().all(|e| e.is_zero()));
        }
        if !basis.is_empty() {
            let stacked = ExactMatrix::from_columns(&basis).unwrap();
            prop_assert_eq!(stacked.rank(), basis.len());
        }
    }

    #[test]
    fn gaussian_literals_round_trip(z in small_gaussian()) {
        let text = z.to_string();
        prop_assert_eq!(parse_gaussian(&text).unwrap(), z);
    }

    #[test]
    fn partitions_canonicalize(parts in proptest::collection::vec(1usize..=9, 1..=8)) {
        let d = Partition::new(parts.clone()).unwrap();
        prop_assert!(d.parts().windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(d.total(), parts.iter().sum::<usize>());
        let text = d.to_string();
        let back: Partition = text.parse().unwrap();
        prop_assert_eq!(back, d);
    }

    /// Real-rootedness is invariant under scaling by a nonzero Gaussian
    /// constant, and the two imaginary-axis substitutions agree.
    #[test]
    fn root_classification_invariances(roots in proptest::collection::vec(-5i64..=5, 1..=5)) {
        let mut p = Poly::one();
        for &r in &roots {
            p = &p * &Poly::from_ints(&[-r, 1]);
        }
        prop_assert!(all_roots_real(&p).unwrap());
        let scaled = p.scale(&GaussianRational::from_parts(2, 3));
        prop_assert!(all_roots_real(&scaled).unwrap());
        // p(it) has purely imaginary roots exactly when p has real ones.
        let rotated = p.compose_scale(&(-GaussianRational::i()));
        prop_assert!(all_roots_purely_imaginary(&rotated).unwrap());
    }
}

#[test]
fn charpoly_cofactor_oracle_on_companion_example() {
    // Frozen expected value, derived by the cofactor oracle.
    let c = ExactMatrix::from_ints(&[&[0, 0, -1], &[1, 0, 2], &[0, 1, 0]]);
    let oracle = charpoly_by_cofactors(&c);
    assert_eq!(oracle, Poly::from_ints(&[1, -2, 0, 1]));
    assert_eq!(c.charpoly().unwrap(), oracle);
}
