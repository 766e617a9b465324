use super::*;
use crate::qseries::qfactorial;
use crate::quiver::examples::*;
use crate::symgrp::{idempotent_rank, partitions_of, Partition};

fn series(r: &RationalFunction, d: i64) -> TruncatedSeries {
    TruncatedSeries::from_rational(r, d)
}

fn inv_prod(ks: &[i64]) -> RationalFunction {
    let mut den = LaurentPolynomial::one();
    for &k in ks {
        den = &den * &LaurentPolynomial::from_coeffs([(0, 1), (2 * k, -1)]);
    }
    RationalFunction::new(LaurentPolynomial::one(), den)
}

fn mono(alg: &KlrAlgebra, s: &str) -> UMinusMonomial {
    UMinusMonomial::parse(s, alg.quiver()).unwrap()
}

#[test]
fn rho_base_values() {
    let alg = KlrAlgebra::new(loopless_a2());
    assert_eq!(rho_pairing(&alg, &mono(&alg, "1"), &mono(&alg, "1")), RationalFunction::one());
    assert_eq!(rho_pairing(&alg, &mono(&alg, "f(i)"), &mono(&alg, "f(i)")), inv_prod(&[1]));
    assert!(rho_pairing(&alg, &mono(&alg, "f(i)"), &mono(&alg, "f(j)")).is_zero());
    assert_eq!(rho_pairing(&alg, &mono(&alg, "f(i)^(2)"), &mono(&alg, "f(i)^(2)")), inv_prod(&[1, 2]));
    let j = KlrAlgebra::new(jordan());
    for n in 1..=4 {
        let m = UMinusMonomial(vec![UGen::Param(0, n)]);
        assert_eq!(rho_pairing(&j, &m, &m), inv_prod(&(1..=n as i64).collect::<Vec<_>>()));
    }
}

#[test]
fn rho_through_the_coproduct() {
    let j = KlrAlgebra::new(jordan());
    // ρ(f_{i2}) ∋ f_{i1} ⊗ f_{i1} with no twist since a_ii = 0
    let v = rho_pairing(&j, &mono(&j, "f(i,2)"), &mono(&j, "f(i,1) f(i,1)"));
    assert_eq!(v, inv_prod(&[1, 1]));
    assert_eq!(v, rho_pairing(&j, &mono(&j, "f(i,1) f(i,1)"), &mono(&j, "f(i,2)")));
    // on A2 the twist q^{-a_ij} = q shows up in {f_i f_j, f_j f_i}
    let a2 = KlrAlgebra::new(loopless_a2());
    let v = rho_pairing(&a2, &mono(&a2, "f(i) f(j)"), &mono(&a2, "f(j) f(i)"));
    assert_eq!(v, &RationalFunction::q_pow(1) * &inv_prod(&[1, 1]));
    // f_i f_i = [2] f_i^(2)
    let lhs = rho_pairing(&a2, &mono(&a2, "f(i) f(i)"), &mono(&a2, "f(i) f(i)"));
    let q2 = RationalFunction::from_poly(qfactorial(2));
    assert_eq!(lhs, &(&q2 * &q2) * &rho_pairing(&a2, &mono(&a2, "f(i)^(2)"), &mono(&a2, "f(i)^(2)")));
}

#[test]
fn rho_is_symmetric_and_bar_compatible() {
    let alg = KlrAlgebra::new(jordan_plus_loopless());
    let ms = monomials_up_to(&alg, 3);
    let mut checked = 0;
    for x in &ms {
        for y in &ms {
            if x.weight(2) != y.weight(2) {
                assert!(rho_pairing(&alg, x, y).is_zero());
                continue;
            }
            assert_eq!(rho_pairing(&alg, x, y), rho_pairing(&alg, y, x));
            if checked < 10 {
                let c = RationalFunction::new(LaurentPolynomial::from_coeffs([(-1, 2), (3, 1)]), LaurentPolynomial::one());
                let ex = UMinusElement::monomial(x.clone(), c.clone());
                let ey = UMinusElement::monomial(y.clone(), RationalFunction::q_pow(2));
                let lhs = ex.bar().pair(&alg, &ey.bar());
                let rhs = &(&c.bar() * &RationalFunction::q_pow(-2)) * &rho_pairing(&alg, x, y);
                assert_eq!(lhs, rhs);
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 10);
}

#[test]
fn kl_form_examples() {
    let d = 24;
    let two = KlrAlgebra::new(two_loop());
    let p = Label::plain(&[0]);
    assert!(kl_form(&two, &p, &p, d).unwrap().agrees_through(&series(&inv_prod(&[1]), d), d));
    let j = KlrAlgebra::new(jordan());
    for n in 1..=3 {
        let l = Label(vec![Block::Param(0, n)]);
        let want = series(&inv_prod(&(1..=n as i64).collect::<Vec<_>>()), d);
        assert!(kl_form(&j, &l, &l, d).unwrap().agrees_through(&want, d), "n = {}", n);
    }
    let a1 = KlrAlgebra::new(loopless_a1());
    let l = Label(vec![Block::Divided(0, 2)]);
    assert!(kl_form(&a1, &l, &l, d).unwrap().agrees_through(&series(&inv_prod(&[1, 2]), d), d));
    // different weights pair to zero
    assert!(kl_form(&a1, &l, &Label::plain(&[0]), d).unwrap().terms().next().is_none());
    assert!(kl_form(&j, &Label(vec![Block::Divided(0, 2)]), &l, d).is_err());
}

#[test]
fn pairing_agreement_examples() {
    for (name, q) in all_test_quivers() {
        let alg = KlrAlgebra::new(q);
        for x in monomials_up_to(&alg, 2) {
            for y in monomials_up_to(&alg, 2) {
                assert!(pairing_agreement_check(&alg, &x, &y, 12).unwrap(), "{}: {} vs {}", name, x.display(alg.quiver()), y.display(alg.quiver()));
            }
        }
    }
    let d = KlrAlgebra::new(disconnected());
    let x = mono(&d, "f(a) f(c,1)");
    let y = mono(&d, "f(c,1) f(a)");
    assert!(pairing_agreement_check(&d, &x, &y, 12).unwrap());
}

#[test]
fn k0_vectors_are_bilinear() {
    let alg = KlrAlgebra::new(loopless_a1());
    let p = K0Vector::label(Label::plain(&[0]));
    let v = p.shift(1).add(&p);
    let base = kl_form(&alg, &Label::plain(&[0]), &Label::plain(&[0]), 12).unwrap();
    let want = base.shift(2).add(&base.shift(1).scale(&q_int(2))).add(&base).truncate(12);
    assert!(v.pair(&alg, &v, 12).unwrap().agrees_through(&want, 12));
}

#[test]
fn serre_examples() {
    let a2 = KlrAlgebra::new(loopless_a2());
    assert!(serre_check(&a2, 0, 1, 1, 10).unwrap());
    assert!(serre_check(&a2, 1, 0, 1, 10).unwrap());
    let jl = KlrAlgebra::new(jordan_plus_loopless());
    assert!(serre_check(&jl, 0, 1, 1, 10).unwrap());
    let d = KlrAlgebra::new(disconnected());
    assert!(serre_check(&d, 0, 1, 1, 10).unwrap());
    assert!(commute_dim_check(&d, 2, 2, 4, 1, 10).unwrap());
    // the sides genuinely differ without the divided powers
    let (even, odd) = serre_labels(&a2, 0, 1, 1).unwrap();
    assert_eq!(even.len(), 2);
    assert_eq!(odd, vec![Label::plain(&[0, 1, 0])]);
    assert!(serre_check(&a2, 0, 0, 1, 4).is_err());
}

#[test]
fn commute_intertwiners() {
    let d = KlrAlgebra::new(disconnected());
    assert!(commute_intertwiner_check(&d, 0, 1, 1, 1).unwrap());
    assert!(commute_intertwiner_check(&d, 2, 2, 0, 1).unwrap());
    assert!(commute_intertwiner_check(&d, 2, 1, 3, 1).unwrap());
    assert!(commute_intertwiner_check(&d, 4, 1, 0, 2).unwrap());
    assert!(commute_intertwiner_check(&KlrAlgebra::new(loopless_a2()), 0, 1, 1, 1).is_err());
}

#[test]
fn center_examples() {
    let a1 = KlrAlgebra::new(loopless_a1());
    assert!(center_dim_check(&a1, &Weight(vec![1]), 12));
    assert!(center_dim_check(&a1, &Weight(vec![2]), 12));
    let j = KlrAlgebra::new(jordan());
    assert!(center_dim_check(&j, &Weight(vec![2]), 12));
    let a2 = KlrAlgebra::new(loopless_a2());
    assert!(center_dim_check(&a2, &Weight(vec![1, 1]), 10));
    let f = center_formula(&Weight(vec![1, 1]), 6);
    assert_eq!(f.coeff_int(4), 3.into());
}

fn param(c: &[usize]) -> Label {
    Label(c.iter().map(|&n| Block::Param(0, n)).collect())
}

#[test]
fn jordan_example_characters() {
    let alg = KlrAlgebra::new(jordan());
    let one = LaurentPolynomial::one();
    let two = LaurentPolynomial::from_coeffs([(0, 2)]);
    let ch = |p: &[usize]| character(&alg, &jordan_specht_module(&alg, 0, &Partition::new(p.to_vec()).unwrap()).unwrap()).unwrap();
    let expect: CharacterVector = [(param(&[3]), one.clone()), (param(&[1, 2]), one.clone()), (param(&[2, 1]), one.clone()), (param(&[1, 1, 1]), one.clone())].into();
    assert_eq!(ch(&[3]), expect);
    let expect: CharacterVector = [(param(&[1, 2]), one.clone()), (param(&[2, 1]), one.clone()), (param(&[1, 1, 1]), two)].into();
    assert_eq!(ch(&[2, 1]), expect);
    let expect: CharacterVector = [(param(&[1, 1, 1]), one)].into();
    assert_eq!(ch(&[1, 1, 1]), expect);
}

#[test]
fn characters_match_idempotent_ranks() {
    let alg = KlrAlgebra::new(jordan());
    for n in 1..=4 {
        for lambda in partitions_of(n) {
            let m = jordan_specht_module(&alg, 0, &lambda).unwrap();
            let ch = character(&alg, &m).unwrap();
            for label in underlined_sequences(&alg, m.weight()) {
                let c: Vec<usize> = label.blocks().iter().map(|b| b.len()).collect();
                let want = idempotent_rank(&lambda, &c).unwrap() as i64;
                let got = ch.get(&label).map_or(0.into(), |p| p.coeff(0));
                assert_eq!(got, want.into(), "{} {:?}", lambda, c);
            }
        }
    }
}

#[test]
fn characters_are_additive_and_shift_covariant() {
    let alg = KlrAlgebra::new(jordan());
    let a = jordan_specht_module(&alg, 0, &Partition::new(vec![2, 1]).unwrap()).unwrap();
    let b = jordan_specht_module(&alg, 0, &Partition::new(vec![3]).unwrap()).unwrap();
    let sum = a.direct_sum(&alg, &b).unwrap();
    assert_eq!(character(&alg, &sum).unwrap(), add_characters(&character(&alg, &a).unwrap(), &character(&alg, &b).unwrap()));
    let shifted = character(&alg, &a.shift(3)).unwrap();
    for (l, p) in character(&alg, &a).unwrap() {
        assert_eq!(shifted[&l], p.shift(3));
    }
}

#[test]
fn restriction_and_epsilon() {
    let alg = KlrAlgebra::new(jordan());
    let m = jordan_specht_module(&alg, 0, &Partition::new(vec![2, 1]).unwrap()).unwrap();
    assert_eq!(delta_restrict(&m, 0, 0).unwrap().dim(), m.dim());
    assert_eq!(delta_restrict(&m, 0, 1).unwrap().dim(), 2);
    assert_eq!(epsilon(&m, 0), 3);
    assert!(delta_restrict(&m, 0, 4).is_err());
    let a2 = KlrAlgebra::new(loopless_a2());
    let v = nil_hecke_irreducible(&a2, 0, 2).unwrap();
    assert_eq!(epsilon(&v, 1), 0);
}

#[test]
fn nil_hecke_irreducibles_have_dimension_n_factorial() {
    let alg = KlrAlgebra::new(loopless_a1());
    for n in 1..=4 {
        let v = nil_hecke_irreducible(&alg, 0, n).unwrap();
        assert_eq!(v.graded_dim(), qfactorial(n as u32), "n = {}", n);
        assert_eq!(epsilon(&v, 0), n);
    }
    assert!(nil_hecke_irreducible(&KlrAlgebra::new(jordan()), 0, 2).is_err());
}

#[test]
fn bad_modules_are_rejected() {
    let alg = KlrAlgebra::new(loopless_a1());
    // τ acting by the identity violates τ² = 0
    let mut t = BTreeMap::new();
    t.insert(0, crate::linalg::Matrix::identity(1));
    let r = KlrModule::new(&alg, Weight(vec![2]), vec![0], vec![vec![0, 0]], vec![crate::linalg::Matrix::zeros(1, 1); 2], t);
    assert!(r.is_err());
}
