use hopfkit::exactla::{smith_normal_form, Field, IntMatrix, Matrix, Subspace};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_matrix(max: usize) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1..=max, 1..=max)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

fn to_matrix(field: Field, r: usize, c: usize, data: &[i64]) -> Matrix {
    let rows: Vec<&[i64]> = data.chunks(c).collect();
    assert_eq!(rows.len(), r);
    Matrix::from_i64(field, &rows)
}

fn subspace(field: Field, n: usize, data: &[i64]) -> Subspace {
    Subspace::span(
        field,
        n,
        data.chunks(n)
            .map(|row| row.iter().map(|&x| field.from_i64(x)).collect::<Vec<_>>()),
    )
}

proptest! {
    #[test]
    fn rank_nullity((r, c, data) in small_matrix(7), p in prop_oneof![Just(0u64), Just(2), Just(3), Just(7)]) {
        let field = if p == 0 { Field::Rational } else { Field::prime(p).unwrap() };
        let m = to_matrix(field, r, c, &data);
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.dim(), c);
        for v in ker.basis_vectors() {
            prop_assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn lattice_laws(
        n in 1usize..=12,
        seeds in prop::collection::vec(prop::collection::vec(-2i64..=2, 0..=48), 3),
    ) {
        let field = Field::Rational;
        let [a, b, c] = [0, 1, 2].map(|i| {
            let k = seeds[i].len() / n * n;
            subspace(field, n, &seeds[i][..k])
        });
        prop_assert_eq!(a.meet(&a).unwrap(), a.clone());
        prop_assert_eq!(a.join(&a).unwrap(), a.clone());
        prop_assert_eq!(a.meet(&b).unwrap(), b.meet(&a).unwrap());
        prop_assert_eq!(a.join(&b).unwrap(), b.join(&a).unwrap());
        prop_assert_eq!(a.meet(&b).unwrap().meet(&c).unwrap(), a.meet(&b.meet(&c).unwrap()).unwrap());
        prop_assert_eq!(a.join(&b).unwrap().join(&c).unwrap(), a.join(&b.join(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.meet(&b).unwrap().dim() + a.join(&b).unwrap().dim(),
            a.dim() + b.dim()
        );
    }

    #[test]
    fn smith_ignores_shuffles((r, c, data) in small_matrix(6), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<&[i64]> = data.chunks(c).collect();
        let m = IntMatrix::from_i64(&rows);
        let mut rp: Vec<usize> = (0..r).collect();
        let mut cp: Vec<usize> = (0..c).collect();
        rp.shuffle(&mut rng);
        cp.shuffle(&mut rng);
        let a = smith_normal_form(&m);
        let b = smith_normal_form(&m.permute(&rp, &cp));
        prop_assert_eq!(&a.diag, &b.diag);
        for w in a.diag.windows(2) {
            let zero = BigInt::from(0);
            prop_assert!(w[1] == zero || (w[0] != zero && (&w[1] % &w[0]) == zero));
        }
        // U M V = D
        let d = a.u.mul(&m).mul(&a.v);
        for i in 0..r {
            for j in 0..c {
                let expected = if i == j { a.diag[i].clone() } else { BigInt::from(0) };
                prop_assert_eq!(d.get(i, j), &expected);
            }
        }
    }
}
