use klr::qseries::{alpha, beta, gauss_binom, qint, LaurentPolynomial, RationalFunction, TruncatedSeries};
use klr::symgrp::partitions_of;
use proptest::prelude::*;

fn inv_prod(n: u32) -> RationalFunction {
    let den = (1..=n as i64).fold(LaurentPolynomial::one(), |acc, k| &acc * &LaurentPolynomial::from_coeffs([(0, 1), (2 * k, -1)]));
    RationalFunction::new(LaurentPolynomial::one(), den)
}

proptest! {
    #[test]
    fn qint_is_bar_invariant(n in 1i64..=12) {
        let p = qint(n).unwrap();
        prop_assert_eq!(p.bar(), p);
    }

    #[test]
    fn gauss_binom_satisfies_pascal(n in 0u32..=12, m in 1u32..=13) {
        prop_assume!(m <= n);
        let lhs = gauss_binom(n + 1, m).unwrap();
        let rhs = &(&LaurentPolynomial::q_pow(m as i64) * &gauss_binom(n, m).unwrap()) + &gauss_binom(n, m - 1).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn alpha_times_power_is_beta(p in 1u32..=6, a in 1u32..=4) {
        let lhs = &alpha(p, a).unwrap() * &RationalFunction::q_pow((p * a) as i64);
        prop_assert_eq!(lhs, RationalFunction::from_poly(beta(p, a).unwrap()));
    }

    #[test]
    fn product_expansion_counts_partitions(n in 1u32..=6) {
        let s = TruncatedSeries::from_rational(&inv_prod(n), 40);
        for m in 0..=20usize {
            let count = partitions_of(m).iter().filter(|l| l.part(0) <= n as usize).count();
            prop_assert_eq!(s.coeff_int(2 * m as i64), count.into());
            if m < 20 {
                prop_assert_eq!(s.coeff_int(2 * m as i64 + 1), 0.into());
            }
        }
    }
}
