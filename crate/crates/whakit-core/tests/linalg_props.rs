use proptest::prelude::*;
use whakit_core::linalg::{LinMap, SVec, Subspace};
use whakit_core::Rational;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A sparse `rows × cols` matrix with small integer entries.
fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = LinMap<Rational>> {
    prop::collection::vec(prop::option::weighted(0.4, -3i64..4), rows * cols).prop_map(move |es| {
        let columns = (0..cols)
            .map(|j| SVec::from_pairs((0..rows).filter_map(|i| es[j * rows + i].map(|c| (i, q(c))))))
            .collect();
        LinMap::from_columns(rows, columns)
    })
}

fn shaped() -> impl Strategy<Value = LinMap<Rational>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

proptest! {
    #[test]
    fn tensor_is_functorial(
        (f, f2) in (1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(a, b, c)| (matrix(b, c), matrix(c, a))),
        (g, g2) in (1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(a, b, c)| (matrix(b, c), matrix(c, a))),
    ) {
        let lhs = f.tensor(&g).compose(&f2.tensor(&g2)).unwrap();
        let rhs = f.compose(&f2).unwrap().tensor(&g.compose(&g2).unwrap());
        prop_assert!(lhs.map_eq(&rhs));
        let id = LinMap::<Rational>::identity(f.cols()).tensor(&LinMap::identity(g.cols()));
        prop_assert!(id.is_identity());
    }

    #[test]
    fn rank_nullity(f in shaped()) {
        let k = f.kernel();
        prop_assert_eq!(f.rank() + k.dim(), f.cols());
        prop_assert_eq!(f.image().dim(), f.rank());
        for j in 0..k.dim() {
            prop_assert!(f.apply(k.basis_vector(j)).is_zero());
        }
        prop_assert_eq!(f.transpose().rank(), f.rank());
    }

    #[test]
    fn solve_recovers_images(f in shaped(), x in prop::collection::vec(-3i64..4, 5)) {
        let x = SVec::from_pairs((0..f.cols()).map(|i| (i, q(x[i]))));
        let y = f.apply(&x);
        let sol = f.solve(&y).expect("y lies in the image");
        prop_assert_eq!(f.apply(&sol), y);
    }

    #[test]
    fn split_idempotent_of_projection(f in shaped()) {
        let im = f.image();
        let p = im.inclusion().compose(im.projection()).unwrap();
        prop_assert!(p.compose(&p).unwrap().map_eq(&p));
        let split = Subspace::split_idempotent(&p).unwrap();
        prop_assert!(split.same_as(&im));
    }
}
