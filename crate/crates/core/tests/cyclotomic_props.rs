use klr::cyclotomic::{double_coset_count, ideal_absorbs, symmetrizer_cut_check, CycloAlgebra};
use klr::klr::{Gen, Word};
use klr::cyclotomic::cyclo_normal_form;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn jordan_word<R: Rng>(rng: &mut R, n: usize) -> Word {
    let mut w = Word::starting_at(vec![0; n]);
    for _ in 0..rng.gen_range(0..6) {
        if n > 1 && rng.gen_bool(0.5) {
            w.push(Gen::T(rng.gen_range(0..n - 1)));
        } else {
            w.push(Gen::X(rng.gen_range(0..n)));
        }
    }
    w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quotient_absorbs_the_ideal(a in 1u32..=2, n in 1usize..=3, seed in any::<u64>()) {
        let c = CycloAlgebra::jordan(a, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = cyclo_normal_form(&jordan_word(&mut rng, n), &c).unwrap();
        let w2 = cyclo_normal_form(&jordan_word(&mut rng, n), &c).unwrap();
        prop_assert!(ideal_absorbs(&c, &w, &w2));
    }

    #[test]
    fn cyclotomic_product_is_associative(a in 1u32..=2, n in 1usize..=3, seed in any::<u64>()) {
        let c = CycloAlgebra::jordan(a, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e: Vec<_> = (0..3).map(|_| cyclo_normal_form(&jordan_word(&mut rng, n), &c).unwrap()).collect();
        prop_assert_eq!(c.mul(&e[0], &c.mul(&e[1], &e[2])), c.mul(&c.mul(&e[0], &e[1]), &e[2]));
    }

    #[test]
    fn double_cosets_are_counted(n in 0usize..=6, l in 0usize..=6) {
        prop_assume!(n + l <= 6);
        prop_assert_eq!(double_coset_count(n, l), n.min(l) + 1);
    }
}

#[test]
fn symmetrizer_cuts_are_symmetric_polynomials() {
    for p in 1..=4 {
        assert!(symmetrizer_cut_check(p, 16).unwrap(), "p = {}", p);
    }
}
