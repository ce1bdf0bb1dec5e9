use tritile::*;
use proptest::prelude::*;
use std::collections::BTreeSet;

#[test]
fn full_respects_capacity() {
    for cap in [0, 1, 63, 64, 65, 130] {
        let s = VertexSet::full(cap);
        assert_eq!(s.len(), cap);
        assert_eq!(s.iter().last(), cap.checked_sub(1));
    }
}

proptest! {
    #[test]
    fn behaves_like_btreeset(a in proptest::collection::vec(0usize..150, 0..60),
                             b in proptest::collection::vec(0usize..150, 0..60)) {
        let sa = VertexSet::from_iter(150, a.iter().copied());
        let sb = VertexSet::from_iter(150, b.iter().copied());
        let ta: BTreeSet<usize> = a.into_iter().collect();
        let tb: BTreeSet<usize> = b.into_iter().collect();
        prop_assert_eq!(sa.to_vec(), ta.iter().copied().collect::<Vec<_>>());
        prop_assert_eq!(sa.intersection(&sb).to_vec(), ta.intersection(&tb).copied().collect::<Vec<_>>());
        prop_assert_eq!(sa.difference(&sb).to_vec(), ta.difference(&tb).copied().collect::<Vec<_>>());
        prop_assert_eq!(sa.intersection_len(&sb), ta.intersection(&tb).count());
        prop_assert_eq!(sa.is_subset(&sb), ta.is_subset(&tb));
        prop_assert_eq!(sa.first(), ta.iter().next().copied());
    }
}
