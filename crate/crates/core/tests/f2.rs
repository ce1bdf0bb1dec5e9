use tritile::*;
use tritile::theory::*;
use tritile::generators::random_min_degree_graph;
use tritile::Exact;
use num_traits::Zero;

fn q(a: i64, b: i64) -> Exact {
    Exact::ratio(a, b)
}

/// Direct scan of `C = 1/2, 1, 3/2, ...` against the three conditions.
fn admissible_scan(k: usize, delta: usize, c_f2: &Exact) -> Exact {
    let mut c = q(1, 2);
    loop {
        let w = q(3 * k as i64 - 5 * delta as i64, 2) + c.clone();
        let total = q(5 * k as i64 - 5 * delta as i64, 2) + c.clone();
        let five = Exact::from_count(5);
        if c >= q(5, 2) * c_f2.clone() + Exact::from_count(10)
            && w.is_integer()
            && w >= Exact::zero()
            && total.is_integer()
            && (total.clone() / five.clone()).is_integer()
        {
            return c;
        }
        c += q(1, 2);
    }
}

#[test]
fn admissible_values() {
    let z = Exact::zero();
    assert_eq!(admissible_c(60, 33, &z).unwrap(), q(25, 2));
    assert_eq!(admissible_c(20, 12, &z).unwrap(), q(10, 1));
    assert!(admissible_c(20, 10, &z).is_err());
    assert!(admissible_c(20, 13, &z).is_err());
    assert_eq!(admissible_c(20, 12, &q(4, 1)).unwrap(), q(20, 1));
    for k in 5..80 {
        for delta in k / 2 + 1..=3 * k / 5 {
            for c_f2 in [q(0, 1), q(1, 1), q(7, 3)] {
                assert_eq!(admissible_c(k, delta, &c_f2).unwrap(), admissible_scan(k, delta, &c_f2), "{k} {delta}");
            }
        }
    }
}

fn k20_minus_matching() -> Graph {
    let edges: Vec<_> = (0..20).flat_map(|u| (u + 1..20).map(move |v| (u, v))).filter(|&(u, v)| v != u + 1 || u % 2 == 1).collect();
    Graph::new(20, &edges).unwrap()
}

#[test]
fn reductions() {
    let r = auxiliary_reduction(&k20_minus_matching(), &q(25, 1)).unwrap();
    assert_eq!((r.k, r.delta, r.w_size(), r.order()), (20, 18, 10, 30));
    assert!(r.aux.is_independent(&r.w));
    assert!(r.w.iter().all(|w| r.aux.degree(w) == 20));

    let base = random_min_degree_graph(60, 33, 4).unwrap();
    let r = auxiliary_reduction(&base, &q(25, 2)).unwrap();
    assert_eq!((r.w_size(), r.order(), r.aux_min_degree), (20, 80, 53));
    // 53 >= 3/5 * 80 = 48, but not 48 + 6
    assert!(r.degree_hypothesis_holds(&Exact::zero()));
    assert!(!r.degree_hypothesis_holds(&q(6, 1)));

    assert!(matches!(auxiliary_reduction(&base, &q(27, 2)), Err(Error::ArithmeticConstraintViolated(_))));
    assert!(matches!(auxiliary_reduction(&base, &q(13, 1)), Err(Error::ArithmeticConstraintViolated(_))));
}

#[test]
fn small_tilings() {
    let t = f2_tiling_exact(&Graph::bowtie(), true, 1000);
    assert!(t.perfect && t.exact);
    assert_eq!(t.copies, vec![F2Copy::new(0, [1, 2], [3, 4])]);

    let two = Graph::bowtie().disjoint_union(&Graph::bowtie());
    assert_eq!(f2_tiling_exact(&two, true, 1000).copies.len(), 2);

    let k5 = f2_tiling_exact(&Graph::complete(5), false, 1000);
    assert_eq!(k5.copies.len(), 1);
    assert!(k5.copies[0].is_in(&Graph::complete(5)));

    let t = f2_tiling_exact(&Graph::complete(7), true, 1000);
    assert!(!t.perfect && t.exact && t.nodes == 0);
    assert_eq!(f2_tiling_exact(&Graph::complete(7), false, 1000).copies.len(), 1);
    assert!(f2_tiling_exact(&Graph::cycle(10), false, 1000).copies.is_empty());
}

/// All 5-subsets with every center/wing split, exhaustively packed.
fn brute_max_f2(g: &Graph) -> usize {
    let n = g.n();
    let mut copies = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != 5 {
            continue;
        }
        let v: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let found = (0..5).any(|ci| {
            let others: Vec<usize> = (0..5).filter(|&i| i != ci).map(|i| v[i]).collect();
            [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]].iter().any(|p| {
                F2Copy::new(v[ci], [others[p[0]], others[p[1]]], [others[p[2]], others[p[3]]]).is_in(g)
            })
        });
        if found {
            copies.push(mask);
        }
    }
    fn best(copies: &[u32], used: u32) -> usize {
        copies
            .iter()
            .enumerate()
            .filter(|(_, &m)| m & used == 0)
            .map(|(i, &m)| 1 + best(&copies[i + 1..], used | m))
            .max()
            .unwrap_or(0)
    }
    best(&copies, 0)
}

#[test]
fn exact_matches_brute_force() {
    for seed in 0..40 {
        let g = tritile::generators::random_graph(11, 0.55, seed);
        let t = f2_tiling_exact(&g, false, u64::MAX);
        assert!(t.exact);
        assert!(t.copies.iter().all(|c| c.is_in(&g)));
        assert_eq!(t.copies.len(), brute_max_f2(&g), "seed {seed}");
    }
}

#[test]
fn classification_identities() {
    // k = 20, delta = 14, C = 5 gives |W| = 30 - 35 + 5 = 0
    let base = random_min_degree_graph(20, 14, 3).unwrap();
    let r = auxiliary_reduction(&base, &q(5, 1)).unwrap();
    assert_eq!(r.w_size(), 0);
    let t = f2_tiling_exact(&r.aux, true, 2_000_000);
    assert!(t.perfect);
    let cls = classify_f2_copies(&t.copies, &r.w, r.k, r.delta, &r.c).unwrap();
    assert_eq!((cls.s, cls.t, cls.l), (0, 0, 4));
    assert_eq!(cls.l_minus_s, q(4, 1));

    for (k, delta, seed) in [(20, 12, 1), (25, 13, 2), (25, 14, 3), (25, 15, 4), (60, 33, 5)] {
        let base = random_min_degree_graph(k, delta, seed).unwrap();
        let c = admissible_c(k, delta, &Exact::zero()).unwrap();
        let r = auxiliary_reduction(&base, &c).unwrap();
        let t = f2_tiling_exact(&r.aux, true, 5_000_000);
        assert!(t.perfect, "k={k} delta={delta}: {} copies after {} nodes", t.copies.len(), t.nodes);
        let cls = classify_f2_copies(&t.copies, &r.w, k, delta, &c).unwrap();
        assert_eq!(2 * cls.s + cls.t, r.w_size());
    }
}

#[test]
fn classification_rejects_bad_input() {
    let w = VertexSet::range(10, 5..10);
    let bad = vec![F2Copy::new(0, [5, 6], [7, 1]), F2Copy::new(2, [3, 4], [8, 9])];
    assert!(matches!(classify_f2_copies(&bad, &w, 5, 3, &q(1, 1)), Err(Error::CountIdentityViolated(_))));
    let partial = vec![F2Copy::new(0, [1, 2], [3, 4])];
    assert!(matches!(classify_f2_copies(&partial, &w, 5, 3, &q(1, 1)), Err(Error::NotPerfect(_))));
    let overlap = vec![F2Copy::new(0, [1, 2], [3, 4]), F2Copy::new(0, [5, 6], [7, 8])];
    assert!(matches!(classify_f2_copies(&overlap, &w, 5, 3, &q(1, 1)), Err(Error::NotPerfect(_))));
}
