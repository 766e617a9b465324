use klr::klr::{Gen, KlrAlgebra, Word};
use klr::polyrep::{element_act, word_act, PolyVector};
use klr::quiver::examples;
use klr::suite::random_word;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn algebras() -> Vec<KlrAlgebra> {
    examples::all_test_quivers().into_iter().map(|(_, q)| KlrAlgebra::new(q)).collect()
}

/// Cuts a word into consecutive composable pieces at the given generator positions.
fn split(w: &Word, cuts: &[usize]) -> Vec<Word> {
    let Gen::Idem(mut seq) = w.gens[0].clone() else { panic!("words start with an idempotent") };
    let tail = &w.gens[1..];
    let mut out = Vec::new();
    let mut start = 0;
    for &c in cuts.iter().chain(std::iter::once(&tail.len())) {
        let c = c.min(tail.len()).max(start);
        let mut piece = Word::starting_at(seq.clone());
        for g in &tail[start..c] {
            if let Gen::T(k) = g {
                seq.swap(*k, k + 1);
            }
            piece.push(g.clone());
        }
        out.push(piece);
        start = c;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for alg in algebras() {
            let w = random_word(&mut rng, &alg, 8);
            let len = w.gens.len() - 1;
            let (i, j) = (rng.gen_range(0..=len), rng.gen_range(0..=len));
            let p = split(&w, &[i.min(j), i.max(j)]);
            let nf: Vec<_> = p.iter().map(|x| alg.normal_form(x).unwrap()).collect();
            // diagram order: the first piece is the rightmost factor
            let left = alg.mul(&nf[2], &alg.mul(&nf[1], &nf[0]));
            let right = alg.mul(&alg.mul(&nf[2], &nf[1]), &nf[0]);
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(left, alg.normal_form(&w).unwrap());
        }
    }

    #[test]
    fn degree_is_additive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for alg in algebras() {
            let w = random_word(&mut rng, &alg, 8);
            let cut = rng.gen_range(0..w.gens.len());
            let p = split(&w, &[cut]);
            let whole = alg.normal_form(&w).unwrap();
            if whole.is_zero() {
                continue;
            }
            let d0 = alg.degree(&alg.normal_form(&p[0]).unwrap());
            let d1 = alg.degree(&alg.normal_form(&p[1]).unwrap());
            prop_assert_eq!(alg.degree(&whole), Some(d0.unwrap() + d1.unwrap()));
        }
    }

    #[test]
    fn psi_reverses_products(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for alg in algebras() {
            let w = random_word(&mut rng, &alg, 8);
            let cut = rng.gen_range(0..w.gens.len());
            let p = split(&w, &[cut]);
            let (a, b) = (alg.normal_form(&p[1]).unwrap(), alg.normal_form(&p[0]).unwrap());
            prop_assert_eq!(alg.psi(&alg.mul(&a, &b)), alg.mul(&alg.psi(&b), &alg.psi(&a)));
            prop_assert_eq!(alg.psi(&alg.psi(&a)), a);
        }
    }

    #[test]
    fn normal_form_acts_like_its_word(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for alg in algebras() {
            let w = random_word(&mut rng, &alg, 7);
            let nf = alg.normal_form(&w).unwrap();
            for _ in 0..50 {
                let v = PolyVector::random(&mut rng, nf.weight(), 3, 3);
                prop_assert_eq!(word_act(&alg, &w, &v), element_act(&alg, &nf, &v));
            }
        }
    }
}
