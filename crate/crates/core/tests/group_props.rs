mod common;

use alphacut_core::generate::{random_fuzzy_group, small_groups};
use alphacut_core::group::{check_fuzzy_group, identity_candidates, restrict_to_cut};
use alphacut_core::Frame;
use common::small_frames;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn cuts_of_fuzzy_groups_are_subgroups(
        li in 0..small_frames().len(),
        gi in 0..small_groups().len(),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = small_frames()[li].clone();
        let (a, gr) = random_fuzzy_group(&mut rng, &l, &small_groups()[gi]);
        let g = check_fuzzy_group(&a, &gr).unwrap().unwrap();
        let e = g.identity();
        let support = g.support();

        prop_assert_eq!(identity_candidates(&a, &gr).unwrap(), vec![e]);
        for &x in &support {
            prop_assert!(l.leq(a.value(x), a.value(e)));
            let inv = g.inverse(x).unwrap();
            prop_assert_eq!(a.value(x), a.value(inv));
            let full = |p: usize, q: usize, r: usize| gr.get(p, q, r) == l.meet(a.value(p), a.value(q));
            let inverses = support
                .iter()
                .filter(|&&y| full(x, y, e) && full(y, x, e) && a.value(x) == a.value(y))
                .count();
            prop_assert_eq!(inverses, 1);
        }

        for alpha in l.elements() {
            let cut = a.fuzzy_alpha_cut(alpha);
            match restrict_to_cut(&g, alpha) {
                Ok(sub) => {
                    prop_assert!(!cut.is_empty_set());
                    prop_assert_eq!(sub.carrier(), &cut);
                    prop_assert_eq!(sub.identity(), e);
                }
                Err(err) => {
                    prop_assert!(cut.is_empty_set(), "{}", err);
                }
            }
        }
    }
}
