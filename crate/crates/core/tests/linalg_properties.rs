use parorb::linalg::{
    contains_invertible, determinant, intersection_dim, intertwiners, inverse, nullspace, radical_basis, radical_codim,
    rank, InvertibleSearch, SampleConfig, SubspaceBasis,
};
use parorb::matrix::int;
use parorb::nilp3::catalog;
use parorb::{ExactMatrix, Rational};
use proptest::prelude::*;

fn small_matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-4i64..=4, r * c).prop_map(move |v| ExactMatrix::from_fn(r, c, |i, j| int(v[i * c + j])))
    })
}

fn square(n: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(-5i64..=5, n * n).prop_map(move |v| ExactMatrix::from_fn(n, n, |i, j| int(v[i * n + j])))
}

fn column(m: &ExactMatrix, v: &[Rational]) -> ExactMatrix {
    let x = ExactMatrix::from_fn(v.len(), 1, |i, _| v[i].clone());
    m * &x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_is_transpose_invariant(m in small_matrix(6)) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn nullspace_is_kernel_of_full_dimension(m in small_matrix(6)) {
        let ker = nullspace(&m);
        prop_assert_eq!(ker.len() + rank(&m), m.cols());
        for v in &ker {
            prop_assert!(column(&m, v).is_zero());
        }
    }

    #[test]
    fn inverse_exists_iff_determinant_nonzero(m in (1usize..=5).prop_flat_map(square)) {
        let det = determinant(&m).unwrap();
        match inverse(&m) {
            Some(inv) => {
                prop_assert!(det != int(0));
                prop_assert_eq!(&m * &inv, ExactMatrix::identity(m.rows()));
            }
            None => prop_assert_eq!(det, int(0)),
        }
    }

    #[test]
    fn intersection_is_symmetric_and_bounded(a in small_matrix(5), b in small_matrix(5)) {
        let n = a.rows();
        let b = ExactMatrix::from_fn(n, b.cols(), |i, j| if i < b.rows() { b.get(i, j).clone() } else { int(0) });
        let (sa, sb) = (SubspaceBasis::column_span(&a), SubspaceBasis::column_span(&b));
        let d = intersection_dim(&sa, &sb).unwrap();
        prop_assert_eq!(d, intersection_dim(&sb, &sa).unwrap());
        prop_assert!(d <= sa.dim().min(sb.dim()));
        prop_assert!(sa.dim() + sb.dim() - d <= n);
    }
}

#[test]
fn catalog_endomorphisms_contain_identity_and_nilpotent_radical() {
    for e in catalog() {
        let rep = e.rep();
        let end = intertwiners(&rep, &rep).unwrap().as_block_diagonal();
        assert!(!end.is_empty(), "{}", e.id);
        let size = end[0].rows();
        let cfg = SampleConfig::default();
        match contains_invertible(&end, &cfg).unwrap() {
            InvertibleSearch::Found { certificate } => assert!(inverse(&certificate).is_some()),
            other => panic!("{}: {other:?}", e.id),
        }
        let rad = radical_basis(&end).unwrap();
        assert_eq!(rad.len() + radical_codim(&end).unwrap(), end.len());
        assert_eq!(radical_codim(&end).unwrap(), 1, "{}", e.id);
        for r in &rad {
            assert!(r.pow(size as u32).is_zero(), "{}", e.id);
        }
    }
}
