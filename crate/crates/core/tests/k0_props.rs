use klr::k0::{character, add_characters, jordan_specht_module, monomials_up_to, rho_pairing, UMinusElement, UMinusMonomial};
use klr::klr::KlrAlgebra;
use klr::qseries::{LaurentPolynomial, RationalFunction};
use klr::quiver::examples;
use klr::symgrp::partitions_of;
use proptest::prelude::*;
use proptest::sample::select;

fn coefficient() -> impl Strategy<Value = RationalFunction> {
    (-3i64..=3, -2i64..=2, -3i64..=3).prop_map(|(a, e, b)| {
        RationalFunction::from_poly(LaurentPolynomial::from_coeffs([(e, a), (e + 1, b)]))
    })
}

fn monomial() -> impl Strategy<Value = UMinusMonomial> {
    let alg = KlrAlgebra::new(examples::jordan_plus_loopless());
    select(monomials_up_to(&alg, 3))
}

fn element() -> impl Strategy<Value = UMinusElement> {
    prop::collection::vec((monomial(), coefficient()), 1..4).prop_map(|ts| {
        let mut e = UMinusElement::zero();
        for (m, c) in ts {
            e.add_term(m, c);
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rho_is_bilinear(x in element(), y in element(), z in element(), c in coefficient()) {
        let alg = KlrAlgebra::new(examples::jordan_plus_loopless());
        let lhs = x.add(&y.scale(&c)).pair(&alg, &z);
        let rhs = &x.pair(&alg, &z) + &(&c * &y.pair(&alg, &z));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_separates_weights(x in monomial(), y in monomial()) {
        let alg = KlrAlgebra::new(examples::jordan_plus_loopless());
        if x.weight(2) != y.weight(2) {
            prop_assert!(rho_pairing(&alg, &x, &y).is_zero());
        } else {
            prop_assert_eq!(rho_pairing(&alg, &x, &y), rho_pairing(&alg, &y, &x));
        }
    }

    #[test]
    fn bar_conjugates_the_pairing(x in monomial(), y in monomial(), c in coefficient(), d in coefficient()) {
        let alg = KlrAlgebra::new(examples::jordan_plus_loopless());
        let ex = UMinusElement::monomial(x.clone(), c.clone());
        let ey = UMinusElement::monomial(y.clone(), d.clone());
        let lhs = ex.bar().pair(&alg, &ey.bar());
        let rhs = &(&c.bar() * &d.bar()) * &rho_pairing(&alg, &x, &y);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn characters_are_additive_and_shift_covariant(
        (a, b) in (1usize..=4).prop_flat_map(|n| (select(partitions_of(n)), select(partitions_of(n)))),
        m in -4i64..=4,
    ) {
        let alg = KlrAlgebra::new(examples::jordan());
        let ma = jordan_specht_module(&alg, 0, &a).unwrap();
        let mb = jordan_specht_module(&alg, 0, &b).unwrap();
        let (ca, cb) = (character(&alg, &ma).unwrap(), character(&alg, &mb).unwrap());
        prop_assert_eq!(character(&alg, &ma.direct_sum(&alg, &mb).unwrap()).unwrap(), add_characters(&ca, &cb));
        let shifted = character(&alg, &ma.shift(m)).unwrap();
        prop_assert_eq!(shifted.len(), ca.len());
        for (l, p) in ca {
            prop_assert_eq!(&shifted[&l], &p.shift(m));
        }
    }
}
