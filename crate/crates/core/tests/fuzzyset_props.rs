mod common;

use std::sync::Arc;

use alphacut_core::localic::close_family;
use alphacut_core::{catalog, Base, Elem, Frame, FuzzySet, Lattice, PointMap};
use common::{chains, frames, pick};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::sample::Index;

#[derive(Debug, Clone)]
struct Case {
    a: FuzzySet<Lattice>,
    b: FuzzySet<Lattice>,
    alpha: Elem,
    beta: Elem,
    f: PointMap,
    g: PointMap,
    h: PointMap,
}

fn cases(pool: &'static [Arc<Lattice>]) -> impl Strategy<Value = Case> {
    (
        0..pool.len(),
        1..=5usize,
        1..=4usize,
        1..=3usize,
        1..=3usize,
    )
        .prop_flat_map(move |(li, nx, ny, nz, nw)| {
            (
                Just(pool[li].clone()),
                vec(any::<Index>(), nx),
                vec(any::<Index>(), nx),
                any::<Index>(),
                any::<Index>(),
                vec(0..ny, nx),
                vec(0..nz, ny),
                vec(0..nw, nz),
                Just([nx, ny, nz, nw]),
            )
        })
        .prop_map(|(l, av, bv, alpha, beta, f, g, h, sizes)| {
            let [x, y, z, w] = sizes.map(Base::numbered);
            Case {
                a: FuzzySet::from_fn(x.clone(), l.clone(), |i| pick(&l, &av[i])),
                b: FuzzySet::from_fn(x.clone(), l.clone(), |i| pick(&l, &bv[i])),
                alpha: pick(&l, &alpha),
                beta: pick(&l, &beta),
                f: PointMap::new(x, y.clone(), f).unwrap(),
                g: PointMap::new(y, z.clone(), g).unwrap(),
                h: PointMap::new(z, w, h).unwrap(),
            }
        })
}

fn chi(a: &FuzzySet<Lattice>, alpha: Elem) -> FuzzySet<Lattice> {
    a.alpha_cut(alpha).characteristic(a.frame().clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cut_lies_below_set_and_crisp_cut(c in cases(frames())) {
        let cut = c.a.fuzzy_alpha_cut(c.alpha);
        prop_assert!(cut.is_subset(&c.a).unwrap());
        prop_assert!(cut.is_subset(&chi(&c.a, c.alpha)).unwrap());
    }

    #[test]
    fn cuts_shrink_as_threshold_grows(c in cases(frames())) {
        let l = c.a.frame();
        let lower = l.meet(c.alpha, c.beta);
        prop_assert!(c.a.fuzzy_alpha_cut(c.alpha).is_subset(&c.a.fuzzy_alpha_cut(lower)).unwrap());
        prop_assert!(c.a.alpha_cut(c.alpha).is_subset(&c.a.alpha_cut(lower)));
    }

    #[test]
    fn cut_of_intersection(c in cases(frames())) {
        let lhs = c.a.intersect(&c.b).unwrap().fuzzy_alpha_cut(c.alpha);
        let rhs = c.a.fuzzy_alpha_cut(c.alpha).intersect(&c.b.fuzzy_alpha_cut(c.alpha)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cut_of_union_on_chains(c in cases(chains())) {
        let lhs = c.a.union(&c.b).unwrap().fuzzy_alpha_cut(c.alpha);
        let rhs = c.a.fuzzy_alpha_cut(c.alpha).union(&c.b.fuzzy_alpha_cut(c.alpha)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn union_of_cuts_lies_below_cut_of_union(c in cases(frames())) {
        let lhs = c.a.union(&c.b).unwrap().fuzzy_alpha_cut(c.alpha);
        let rhs = c.a.fuzzy_alpha_cut(c.alpha).union(&c.b.fuzzy_alpha_cut(c.alpha)).unwrap();
        prop_assert!(rhs.is_subset(&lhs).unwrap());
    }

    #[test]
    fn image_commutes_with_cut_on_chains(c in cases(chains())) {
        let lhs = c.a.fuzzy_alpha_cut(c.alpha).image(&c.f).unwrap();
        let rhs = c.a.image(&c.f).unwrap().fuzzy_alpha_cut(c.alpha);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn image_of_cut_lies_below_cut_of_image(c in cases(frames())) {
        let lhs = c.a.fuzzy_alpha_cut(c.alpha).image(&c.f).unwrap();
        let rhs = c.a.image(&c.f).unwrap().fuzzy_alpha_cut(c.alpha);
        prop_assert!(lhs.is_subset(&rhs).unwrap());
    }

    #[test]
    fn image_of_cut_is_antitone_in_threshold(c in cases(frames())) {
        let l = c.a.frame();
        let lower = l.meet(c.alpha, c.beta);
        let big = c.a.fuzzy_alpha_cut(lower).image(&c.f).unwrap();
        let small = c.a.fuzzy_alpha_cut(c.alpha).image(&c.f).unwrap();
        prop_assert!(small.is_subset(&big).unwrap());
    }

    #[test]
    fn image_is_functorial(c in cases(frames())) {
        let cut = c.a.fuzzy_alpha_cut(c.alpha);
        let gf = c.f.then(&c.g).unwrap();
        prop_assert_eq!(cut.image(&gf).unwrap(), cut.image(&c.f).unwrap().image(&c.g).unwrap());

        let h_gf = gf.then(&c.h).unwrap();
        let hg_f = c.f.then(&c.g.then(&c.h).unwrap()).unwrap();
        prop_assert_eq!(cut.image(&h_gf).unwrap(), cut.image(&hg_f).unwrap());

        let id_x = PointMap::identity(c.f.source().clone());
        let id_y = PointMap::identity(c.f.target().clone());
        let expected = cut.image(&c.f).unwrap();
        prop_assert_eq!(cut.image(&id_x.then(&c.f).unwrap()).unwrap(), expected.clone());
        prop_assert_eq!(cut.image(&c.f.then(&id_y).unwrap()).unwrap(), expected);
    }

    #[test]
    fn cut_family_is_closed_under_intersection(c in cases(frames())) {
        let family = c.a.cut_family();
        prop_assert_eq!(&family[0], &c.a);
        for p in &family {
            for q in &family {
                let meet = p.intersect(q).unwrap();
                prop_assert!(family.contains(&meet) || meet.is_empty_set());
            }
        }
    }

    #[test]
    fn cut_family_is_closed_under_union_on_chains(c in cases(chains())) {
        let family = c.a.cut_family();
        for p in &family {
            for q in &family {
                prop_assert!(family.contains(&p.union(q).unwrap()));
            }
        }
    }

    #[test]
    fn closed_cut_family_is_distributive(c in cases(frames())) {
        let closed = close_family(&c.a.cut_family()).unwrap();
        for p in &closed {
            for q in &closed {
                for r in &closed {
                    let lhs = p.intersect(&q.union(r).unwrap()).unwrap();
                    let rhs = p.intersect(q).unwrap().union(&p.intersect(r).unwrap()).unwrap();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

fn m5_pair() -> (Arc<Lattice>, FuzzySet<Lattice>, Elem, Elem, Elem) {
    let l = Arc::new(catalog::m5());
    let [b, c, a] = ["b", "c", "a"].map(|s| l.element(s).unwrap());
    let set = FuzzySet::new(Base::new(&["p", "q"]).unwrap(), l.clone(), vec![b, c]).unwrap();
    (l, set, a, b, c)
}

#[test]
fn cut_of_union_fails_off_chains() {
    let (l, _, a, b, c) = m5_pair();
    let x = Base::new(&["p"]).unwrap();
    let sa = FuzzySet::new(x.clone(), l.clone(), vec![b]).unwrap();
    let sb = FuzzySet::new(x, l.clone(), vec![c]).unwrap();
    let lhs = sa.union(&sb).unwrap().fuzzy_alpha_cut(a);
    let rhs = sa.fuzzy_alpha_cut(a).union(&sb.fuzzy_alpha_cut(a)).unwrap();
    assert_eq!(lhs.membership(), [a]);
    assert_eq!(rhs.membership(), [l.bottom()]);
}

#[test]
fn image_does_not_commute_with_cut_off_chains() {
    let (l, set, a, _, _) = m5_pair();
    let f = PointMap::new(set.base().clone(), Base::new(&["u"]).unwrap(), vec![0, 0]).unwrap();
    assert_eq!(
        set.fuzzy_alpha_cut(a).image(&f).unwrap().membership(),
        [l.bottom()]
    );
    assert_eq!(set.image(&f).unwrap().fuzzy_alpha_cut(a).membership(), [a]);
}

#[test]
fn cut_family_union_on_m5() {
    let l = Arc::new(catalog::m5());
    let base = Base::numbered(3);
    let els: Vec<Elem> = l.elements().collect();
    for x in &els {
        for y in &els {
            for z in &els {
                let s = FuzzySet::new(base.clone(), l.clone(), vec![*x, *y, *z]).unwrap();
                let family = s.cut_family();
                for p in &family {
                    for q in &family {
                        assert!(family.contains(&p.union(q).unwrap()), "{s:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn cut_family_union_fails_on_n6() {
    let l = Arc::new(catalog::n6());
    let [a, b, c] = ["a", "b", "c"].map(|s| l.element(s).unwrap());
    let s = FuzzySet::new(Base::numbered(3), l.clone(), vec![a, c, b]).unwrap();
    let union = s.fuzzy_alpha_cut(a).union(&s.fuzzy_alpha_cut(c)).unwrap();
    assert!(!s.cut_family().contains(&union));
}
