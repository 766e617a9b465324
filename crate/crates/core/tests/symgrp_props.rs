use klr::symgrp::{idempotent_rank, kostka, partitions_of, Partition};
use proptest::prelude::*;
use proptest::sample::{select, Index};

fn shape_and_content() -> impl Strategy<Value = (Partition, Vec<usize>)> {
    (1usize..=6).prop_flat_map(|n| {
        let parts = partitions_of(n);
        let comps = klr::symgrp::compositions_of(n);
        (select(parts), select(comps))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn idempotent_rank_is_kostka((lambda, c) in shape_and_content()) {
        prop_assert_eq!(idempotent_rank(&lambda, &c).unwrap() as u64, kostka(&lambda, &c).unwrap());
    }

    #[test]
    fn kostka_ignores_content_order((lambda, c) in shape_and_content(), i in any::<Index>(), j in any::<Index>()) {
        let mut d = c.clone();
        d.swap(i.index(c.len()), j.index(c.len()));
        prop_assert_eq!(kostka(&lambda, &c).unwrap(), kostka(&lambda, &d).unwrap());
    }

    #[test]
    fn kostka_vanishes_unless_dominated((lambda, c) in shape_and_content()) {
        let mu = Partition::from_composition(&c);
        let k = kostka(&lambda, &c).unwrap();
        if lambda == mu {
            prop_assert_eq!(k, 1);
        } else if !lambda.dominates(&mu) {
            prop_assert_eq!(k, 0);
        }
    }
}
