use proptest::prelude::*;
use ttspec_core::{topology, FinitePoset, FiniteSubset, SpaceExpr, SymbolicSubset};

fn poset(max: usize) -> impl Strategy<Value = FinitePoset> {
    (0..=max).prop_flat_map(|n| {
        let pairs = if n < 2 {
            Just(Vec::new()).boxed()
        } else {
            prop::collection::vec((0..n, 0..n), 0..2 * n).boxed()
        };
        (Just(n), pairs, any::<u64>()).prop_map(|(n, pairs, seed)| {
            // Orient every pair along a seeded relabelling so the relation stays acyclic.
            let rank: Vec<u64> = (0..n as u64).map(|i| (i ^ seed).wrapping_mul(0x9e37_79b9_7f4a_7c15)).collect();
            let pairs: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| if (rank[a], a) < (rank[b], b) { (a, b) } else { (b, a) })
                .collect();
            FinitePoset::from_index_pairs(FinitePoset::default_labels(n), &pairs).unwrap()
        })
    })
}

fn with_subset(max: usize) -> impl Strategy<Value = (FinitePoset, FiniteSubset)> {
    poset(max).prop_flat_map(|p| {
        let n = p.len();
        (Just(p), 0..(1u64 << n)).prop_map(move |(p, bits)| (p, FiniteSubset::from_bits(bits, n).unwrap()))
    })
}

fn convex(p: &FinitePoset, s: &FiniteSubset) -> bool {
    p.down_closure(s).intersection(&p.up_closure(s)) == *s
}

proptest! {
    #[test]
    fn closures_are_idempotent((p, s) in with_subset(8)) {
        let d = p.down_closure(&s);
        prop_assert!(p.is_down_set(&d));
        prop_assert!(s.is_subset(&d));
        prop_assert_eq!(p.down_closure(&d), d);
        let u = p.up_closure(&s);
        prop_assert!(p.is_up_set(&u));
        prop_assert_eq!(p.up_closure(&u), u);
    }

    #[test]
    fn down_sets_are_up_sets_of_the_opposite((p, s) in with_subset(8)) {
        let op = p.opposite();
        prop_assert_eq!(p.is_down_set(&s), op.is_up_set(&s));
        prop_assert_eq!(p.is_down_set(&s), p.is_up_set(&s.complement()));
        prop_assert_eq!(op.opposite(), p);
    }

    #[test]
    fn down_sets_form_a_lattice((p, s) in with_subset(7), bits in any::<u64>()) {
        let t = FiniteSubset::from_bits(bits & ((1u64 << p.len()) - 1), p.len()).unwrap();
        let (a, b) = (p.down_closure(&s), p.down_closure(&t));
        prop_assert!(p.is_down_set(&a.union(&b)));
        prop_assert!(p.is_down_set(&a.intersection(&b)));
    }

    #[test]
    fn down_set_count_matches_filtering(p in poset(8)) {
        let filtered = FiniteSubset::all(p.len()).filter(|s| p.is_down_set(s)).count() as u128;
        prop_assert_eq!(p.count_down_sets(), filtered);
        prop_assert_eq!(p.down_sets(1 << 12).unwrap().count() as u128, filtered);
    }

    #[test]
    fn covering_pairs_generate_the_order(p in poset(8)) {
        let rebuilt = FinitePoset::from_index_pairs(p.labels().to_vec(), &p.covering_pairs()).unwrap();
        prop_assert_eq!(&rebuilt, &p);
        let ext = p.linear_extension();
        for (i, &a) in ext.iter().enumerate() {
            for &b in &ext[..i] {
                prop_assert!(!p.leq(a, b) || a == b);
            }
        }
    }

    #[test]
    fn finite_topology_is_the_order((p, s) in with_subset(6)) {
        let e = SpaceExpr::finite(p.clone());
        let sub = SymbolicSubset::Finite(s);
        prop_assert_eq!(topology::is_closed(&e, &sub).unwrap(), p.is_down_set(&s));
        prop_assert_eq!(topology::is_open(&e, &sub).unwrap(), p.is_up_set(&s));
        prop_assert_eq!(topology::is_thomason(&e, &sub).unwrap(), p.is_down_set(&s));
        prop_assert!(topology::is_constructible(&e, &sub).unwrap());
        prop_assert_eq!(topology::is_thomason(&e.dual(), &sub).unwrap(), p.is_up_set(&s));
        prop_assert_eq!(topology::is_weakly_visible(&e, &sub).unwrap(), convex(&p, &s));
    }
}

#[test]
fn every_point_of_a_finite_space_is_weakly_visible() {
    let p = FinitePoset::build(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")]).unwrap();
    let e = SpaceExpr::finite(p.clone());
    for i in 0..p.len() {
        let s = SymbolicSubset::Finite(FiniteSubset::singleton(p.len(), i).unwrap());
        assert!(topology::is_weakly_visible(&e, &s).unwrap());
    }
    let ends = SymbolicSubset::Finite(FiniteSubset::from_indices(4, [0, 3]).unwrap());
    assert!(topology::is_weakly_visible(&e, &ends).unwrap());
    let chain = FinitePoset::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
    let gap = SymbolicSubset::Finite(FiniteSubset::from_indices(3, [0, 2]).unwrap());
    assert!(!topology::is_weakly_visible(&SpaceExpr::finite(chain), &gap).unwrap());
}
