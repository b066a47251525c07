mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use qtoric::lattice::{
    hermite_normal_form, is_basis_extendable, kernel_basis, lattice_equal, smith_normal_form,
    IntMatrix, LatticeBasis,
};

use common::{bigs, rational_rank};

fn matrix(max_rows: usize, max_cols: usize, entry: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-entry..=entry, c), r)
            .prop_map(|rows| IntMatrix::from_rows(rows).unwrap())
    })
}

fn is_unimodular(u: &IntMatrix) -> bool {
    u.determinant().unwrap().abs().is_one()
}

/// Row-style Hermite shape checked entry by entry.
fn assert_hermite_shape(h: &IntMatrix) {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero_row = false;
    for i in 0..h.rows() {
        let pivot = (0..h.cols()).find(|&j| !h.get(i, j).is_zero());
        match pivot {
            None => seen_zero_row = true,
            Some(j) => {
                assert!(!seen_zero_row, "zero row above a non-zero row");
                assert!(last_pivot.is_none_or(|p| j > p), "pivots not strictly increasing");
                assert!(h.get(i, j).is_positive(), "non-positive pivot");
                for k in 0..i {
                    let above = h.get(k, j);
                    assert!(!above.is_negative() && above < h.get(i, j), "entry above pivot not reduced");
                }
                last_pivot = Some(j);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hnf_shape_transform_and_idempotence(m in matrix(6, 6, 5)) {
        let (h, u) = hermite_normal_form(&m);
        assert_hermite_shape(&h);
        prop_assert!(is_unimodular(&u));
        prop_assert_eq!(u.mul(&m).unwrap(), h.clone());
        prop_assert_eq!(hermite_normal_form(&h).0, h.clone());
        let nonzero = (0..h.rows()).filter(|&i| h.row(i).iter().any(|v| !v.is_zero())).count();
        prop_assert_eq!(nonzero, rational_rank(&m.to_rows()));
    }

    #[test]
    fn smith_reproduces_diagonal(m in matrix(6, 6, 5)) {
        let s = smith_normal_form(&m);
        prop_assert!(is_unimodular(&s.left));
        prop_assert!(is_unimodular(&s.right));
        let d = s.left.mul(&m).unwrap().mul(&s.right).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(d.get(i, j), &want);
            }
        }
        for w in s.diagonal.windows(2) {
            prop_assert!(!w[0].is_negative());
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
        let nonzero = s.diagonal.iter().filter(|d| !d.is_zero()).count();
        prop_assert_eq!(nonzero, rational_rank(&m.to_rows()));
    }

    #[test]
    fn kernel_is_annihilated_saturated_and_complete(m in matrix(4, 5, 3)) {
        let k = kernel_basis(&m);
        let prod = m.mul(&k.basis().transpose()).unwrap();
        prop_assert!(prod.is_zero());
        prop_assert!(is_basis_extendable(k.basis()));
        prop_assert_eq!(k.rank(), m.cols() - rational_rank(&m.to_rows()));
        // every small integer solution lies in the lattice
        let cols = m.cols();
        let mut v = vec![-2i64; cols];
        loop {
            let vb = bigs(&v);
            let mv = m.mul(&IntMatrix::from_row_vecs(1, vb.iter().map(|x| vec![x.clone()]).collect()).unwrap()).unwrap();
            if mv.is_zero() {
                prop_assert!(k.contains(&vb), "{:?} missing from kernel", v);
            }
            let Some(i) = v.iter().position(|&x| x < 2) else { break };
            v[i] += 1;
            for x in v.iter_mut().take(i) {
                *x = -2;
            }
        }
    }

    #[test]
    fn equality_ignores_unimodular_row_operations(
        m in matrix(4, 4, 4),
        ops in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..8),
    ) {
        let mut rows = m.to_rows();
        for (i, j, f) in ops {
            let (i, j) = (i % rows.len(), j % rows.len());
            if i == j {
                rows[i] = rows[i].iter().map(|x| -x).collect();
            } else {
                let src = rows[j].clone();
                for (x, y) in rows[i].iter_mut().zip(&src) {
                    *x += y * f;
                }
            }
        }
        rows.push(vec![BigInt::zero(); m.cols()]);
        let a = LatticeBasis::from_generators(&m);
        let b = LatticeBasis::from_vectors(m.cols(), rows).unwrap();
        prop_assert!(lattice_equal(&a, &b).unwrap());
        prop_assert!(lattice_equal(&b, &a).unwrap());
        prop_assert!(lattice_equal(&a, &a).unwrap());
    }

    #[test]
    fn extendable_iff_unit_minors_square(m in matrix(3, 3, 3)) {
        if m.is_square() {
            prop_assert_eq!(is_basis_extendable(&m), m.determinant().unwrap().abs().is_one());
        }
    }
}

#[test]
fn kernel_examples() {
    // reordered characteristic matrix for n = 2, m = 1, a = (2), b = (1, 0)
    let m = IntMatrix::from_rows([[1, 0, -1, 0, -1], [0, 1, -1, 0, 0], [0, 0, -2, 1, -1]]).unwrap();
    let expected = LatticeBasis::from_vectors(5, vec![bigs(&[1, 1, 1, 2, 0]), bigs(&[1, 0, 0, 1, 1])]).unwrap();
    assert_eq!(kernel_basis(&m), expected);
    assert_eq!(kernel_basis(&IntMatrix::identity(4)).rank(), 0);
}
