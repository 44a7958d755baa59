//! Randomized invariants over the exact arithmetic layers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use binomiacci_core::sequence;
use binomiacci_core::series::TruncatedSeries;

fn series_from(coeffs: &[i64], order: usize) -> TruncatedSeries {
    TruncatedSeries::from_integer_coeffs(coeffs, order)
}

#[test]
fn concurrent_callers_agree() {
    let handles: Vec<_> = (0..4)
        .map(|_| {
            std::thread::spawn(|| {
                (
                    sequence::central(40),
                    binomiacci_core::series::central_gf(24),
                )
            })
        })
        .collect();
    let want = (
        sequence::central(40),
        binomiacci_core::series::central_gf(24),
    );
    for handle in handles {
        assert_eq!(handle.join().unwrap(), want);
    }
}

proptest! {
    #[test]
    fn binomiacci_symmetry(k in 0usize..48, n in 0usize..48) {
        prop_assert_eq!(sequence::binomiacci(k, n), sequence::binomiacci(n, k));
    }

    #[test]
    fn binomiacci_recurrence(k in 1usize..40, n in 1usize..40) {
        let sum = sequence::binomiacci(k, n - 1) + sequence::binomiacci(k - 1, n);
        prop_assert_eq!(sequence::binomiacci(k, n), sum);
    }

    #[test]
    fn triangle_rows_are_palindromic(m in 0usize..48) {
        let row = sequence::triangle_row(m);
        for k in 0..=m {
            prop_assert_eq!(&row[k], &row[m - k]);
        }
    }

    #[test]
    fn series_addition_commutes(a in prop::collection::vec(-9i64..=9, 1..12),
                                b in prop::collection::vec(-9i64..=9, 1..12)) {
        let order = 12;
        let sa = series_from(&a, order);
        let sb = series_from(&b, order);
        prop_assert_eq!(sa.add(&sb), sb.add(&sa));
    }

    #[test]
    fn series_multiplication_commutes(a in prop::collection::vec(-9i64..=9, 1..10),
                                      b in prop::collection::vec(-9i64..=9, 1..10)) {
        let order = 10;
        let sa = series_from(&a, order);
        let sb = series_from(&b, order);
        prop_assert_eq!(sa.mul(&sb), sb.mul(&sa));
    }

    #[test]
    fn inverse_is_a_right_inverse(mut a in prop::collection::vec(-9i64..=9, 1..10)) {
        if a[0] == 0 {
            a[0] = 1;
        }
        let order = 16;
        let s = series_from(&a, order);
        let inv = s.inverse(order).unwrap();
        prop_assert_eq!(
            s.mul(&inv),
            TruncatedSeries::constant(BigRational::one(), order)
        );
    }

    #[test]
    fn sqrt_recovers_unit_square_root(mut b in prop::collection::vec(-6i64..=6, 1..9)) {
        b[0] = 1;
        let order = 16;
        let root = series_from(&b, order);
        let square = root.mul(&root);
        prop_assert_eq!(square.sqrt(order).unwrap(), root);
    }

    #[test]
    fn central_series_is_integral(order in 1usize..24) {
        let c = binomiacci_core::series::central_gf(order);
        prop_assert!(c.is_integral());
        prop_assert_eq!(
            c.coeff(order).numer(),
            &sequence::central(order)
        );
        prop_assert!(c.coeff(0) == &BigRational::from_integer(BigInt::from(1)));
    }
}
